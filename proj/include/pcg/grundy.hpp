#pragma once

// Sprague-Grundy machinery. In the Threshold Region positions carry a
// residue-valued "product-SG": the invariant itself, read through a fixed
// indexing of the value group with the identity at index 0. The single-hole
// check and the multiplicativity check verify that option values sweep the
// whole domain except the position's own value, and that disjunctive sums
// multiply. Below the threshold only the classical natural-number Grundy
// recursion is offered; no multiplicative claim is made there.

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pcg/game.hpp"

namespace pcg {

// Fixed bijection between the invariant value group and {0..|G|-1}:
// ascending residue (numeric) or ascending field index, so the identity
// lands at index 0.
class SgIndexing {
  public:
    static SgIndexing canonical(const GameSpec& spec);

    const std::vector<u64>& elements() const { return elements_; }
    size_t size() const { return elements_.size(); }
    unsigned index_of(u64 element) const;
    u64 element_at(unsigned idx) const;

  private:
    std::vector<u64> elements_; // ascending, elements_[0] == 1
    std::unordered_map<u64, unsigned> index_;
};

struct SgValue {
    unsigned idx = 0;
    u64 element = 1;

    bool operator==(const SgValue&) const = default;
    bool operator<(const SgValue& o) const { return idx < o.idx; }
};

// Product-SG of a Threshold position in a losing-set-{1} game: the invariant,
// wrapped with its index. Throws wrong_region below the threshold and
// unsupported_losing_set when the losing set is not {1}.
SgValue product_sg(const GameSpec& spec, const Position& pos, const SgIndexing& ix);

struct OptionValues {
    std::vector<SgValue> values;     // sorted by index, deduplicated
    bool any_in_indeterminacy = false; // some option fell below the threshold
};

// Invariant values over all single-move options. Options landing in the
// Indeterminacy Region are still valued by their invariant and flagged.
OptionValues option_value_set(const GameSpec& spec, const Position& pos, const SgIndexing& ix);

struct SingleHoleResult {
    bool holds = false;
    std::vector<SgValue> missing; // domain values not realized by any option
    bool any_in_indeterminacy = false;
};

// holds = the options miss exactly the position's own product-SG value.
SingleHoleResult single_hole_check(const GameSpec& spec, const Position& pos, const SgIndexing& ix);

// Smallest index not present in values. Throws domain_exhausted when values
// cover the whole domain.
SgValue indexed_mex(const std::vector<SgValue>& values, const SgIndexing& ix);

// Classical mex-over-naturals Grundy recursion on the move tree; terminal
// positions have Grundy 0. Memoized per spec.
class GrundyOracle {
  public:
    explicit GrundyOracle(GameSpec spec, SearchBudget budget = {});

    const GameSpec& spec() const { return spec_; }
    unsigned evaluate(const Position& pos);

  private:
    struct VecHash {
        size_t operator()(const std::vector<u64>& v) const;
    };

    GameSpec spec_;
    SearchBudget budget_;
    std::unordered_map<std::vector<u64>, unsigned, VecHash> memo_;
};

unsigned grundy_standard(const GameSpec& spec, const Position& pos, SearchBudget budget = {});

// Disjunctive sum: heap-vector concatenation. Throws spec_mismatch when a
// position is invalid for the spec.
Position sum_positions(const GameSpec& spec, const Position& a, const Position& b);

struct SgMultEntry {
    Position pos1, pos2;
    bool in_scope = false;       // both summands in the Threshold Region
    SgValue value1, value2;
    u64 expected_product = 1;    // group product of the summand values
    bool summands_single_hole = false;
    bool sum_misses_exactly_product = false;
    std::optional<SgValue> observed_mex; // of the sum's option values
    bool holds = false;
    bool boundary_flag = false;  // some counted option left the Threshold Region
};

// For each pair: checks single-hole on both summands, that the sum's option
// values miss exactly the product of the summand values, and that the indexed
// mex of the sum's options equals that product. Violations are data, not
// errors; pairs with a summand outside the Threshold Region are marked out of
// scope and skipped.
std::vector<SgMultEntry> sg_multiplicativity_check(const GameSpec& spec,
                                                   const std::vector<std::pair<Position, Position>>& pairs,
                                                   const SgIndexing& ix);

} // namespace pcg
