#pragma once

// The two aligned toy games and the generic operation-alignment checker.
// In the additive game one heap at or above the modulus reaches every residue
// class of the total sum in a single move, so the game collapses to its
// aggregate there. In the divisor-move product game the same collapse needs a
// hypothesis: the units d/t contributed by proper divisors of a large heap
// must generate the whole unit group.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "pcg/game.hpp"
#include "pcg/number_theory.hpp"

namespace pcg {

struct AdditiveGameSpec {
    u64 m = 2;       // modulus >= 2
    u64 s = 0;       // losing residue of the total sum, in [0, m-1]

    AdditiveGameSpec(u64 m, u64 s);
};

struct AdditiveReach {
    std::set<u64> reachable;  // sum residues reachable by one move on heap j
    bool covers_all = false;  // reachable plus the current residue is everything
};

// One-move residue coverage for a heap at or above m (decrements 1..m-1).
// Throws precondition_violated when heap j is below m.
AdditiveReach additive_reach_check(const AdditiveGameSpec& spec, const std::vector<u64>& heaps,
                                   size_t j);

// Normal-play outcome with losing predicate sum = s (mod m); moves replace a
// heap by any strictly smaller positive integer. When the all-ones terminal
// is not predicate-losing the game tree and predicate cannot agree, and the
// verdict falls back to the predicate alone.
Outcome additive_outcome(const AdditiveGameSpec& spec, const std::vector<u64>& heaps,
                         SearchBudget budget = {});

struct DivisorMoveUnits {
    std::set<u64> units;              // d * t^-1 mod m over proper unit divisors d
    unsigned skipped_non_units = 0;   // proper divisors discarded for gcd(d,m) != 1
};

// Throws not_a_unit when gcd(t, m) != 1. t = 1 has no proper divisors.
DivisorMoveUnits divisor_move_units(u64 t, u64 m);

// Multiplicative closure of the subset equals the full unit group mod m.
bool generates_group(const std::set<u64>& subset, u64 m);

struct AlignmentScanRow {
    u64 t = 0;
    bool coprime = false;
    u64 generated_subgroup_order = 0;
    bool generates = false;
};

// For each t in [M, bound]: do the divisor-move units of t generate the unit
// group? Non-coprime t are listed with coprime = false.
std::vector<AlignmentScanRow> alignment_hypothesis_scan(u64 m, u64 M, u64 bound);

struct DivisorCollapse {
    std::set<u64> reachable_units; // aggregate residues reachable through heap j
    bool transitive = false;       // every unit residue is reachable
};

// Aggregate residues reachable by composing divisor-move ratios of heap j:
// the orbit of the current aggregate under the subgroup those ratios
// generate. Throws not_a_unit when heap j is not coprime to m.
DivisorCollapse divisor_collapse_check(u64 m, const std::vector<u64>& heaps, size_t j);

// Finite monoid given by its multiplication table; table[a][b] = a*b.
struct MonoidTable {
    std::vector<std::vector<unsigned>> table;

    size_t size() const { return table.size(); }
};

// Generic operation-alignment check: every listed element's move image must
// generate the whole monoid (as a submonoid). The map's keys are the elements
// outside the finite kernel; values are their images in the monoid.
// Throws malformed_table when the table is not square, has out-of-range
// entries, or lacks a two-sided identity.
bool alignment_principle_check(const MonoidTable& monoid,
                               const std::map<unsigned, std::set<unsigned>>& move_images);

} // namespace pcg
