#pragma once

// Losing densities (exact over finite label groups, empirical over bounded
// windows of the unbounded numeric game), per-coordinate ultimate-periodicity
// checks, and a side-by-side comparison table of the chain, field, and
// numeric instances computed from live specs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcg/chain.hpp"
#include "pcg/game.hpp"

namespace pcg {

struct DensityReport {
    std::string spec_description;
    unsigned heap_count = 0;
    u64 bound = 0;              // label bound for empirical counts; 0 = one period
    u64 total = 0;
    u64 losing = 0;             // predicate hits (not game-tree outcomes)
    u64 predicted_num = 1;      // predicted limit as a fraction
    u64 predicted_den = 1;
    // Exact counts only: |R|*|G|^(n-1), plus the independent constructive
    // count (fix n-1 coordinates, solve for the last).
    u64 expected_exact = 0;
    u64 constructive_losing = 0;
    // Game-tree P count over the same box, when requested; inside the
    // indeterminacy region it can differ from the predicate count.
    std::optional<u64> tree_p = {};

    double ratio() const { return total == 0 ? 0.0 : static_cast<double>(losing) / total; }
    double predicted() const { return static_cast<double>(predicted_num) / predicted_den; }
};

// Exhaustive predicate count over the full finite label set (field labels
// 1..q-1, or unit residues below m). Asserts nothing itself; callers compare
// losing against expected_exact. Throws too_large when |G|^n exceeds limit.
// with_tree_count additionally counts game-tree P positions over the box.
DensityReport exact_losing_count(const GameSpec& spec, unsigned heap_count,
                                 u64 limit = 10'000'000, bool with_tree_count = false);

// Predicate density over all legal labels <= bound, n heaps. Numeric games
// only; the predicted limit is 1/phi(m) in unit mode and 1/m otherwise.
DensityReport empirical_density(const GameSpec& spec, unsigned heap_count, u64 bound,
                                bool with_tree_count = false);

// Monte Carlo variant for windows too large to enumerate: samples uniform
// label tuples below the bound with a seeded generator.
DensityReport empirical_density_sampled(const GameSpec& spec, unsigned heap_count, u64 bound,
                                        u64 samples, u64 seed);

struct PeriodicityRow {
    u64 x = 0;
    Outcome outcome_x = Outcome::P;
    Outcome outcome_x_plus_m = Outcome::P;

    bool equal() const { return outcome_x == outcome_x_plus_m; }
};

struct PeriodicityReport {
    std::vector<u64> context; // the fixed heaps
    size_t insert_at = 0;     // where the varying heap goes
    u64 x_min = 0, x_max = 0;
    std::vector<PeriodicityRow> rows;
    std::vector<u64> violations; // x with f(x+m) != f(x)
};

// Compares outcomes with heap j = x against x + m for x in [m, x_max];
// x values that are not legal labels are skipped (their class is empty).
PeriodicityReport periodicity_check(const GameSpec& spec, const std::vector<u64>& context,
                                    size_t insert_at, u64 x_max, OutcomeOracle* oracle = nullptr);

struct TableRow {
    std::string feature;
    std::string chain_value;
    std::string field_value;
    std::string numeric_value;
};

// The three instances side by side; every number is computed from the live
// specs (orders, CRT split, region bounds, densities), not transcribed.
std::vector<TableRow> comparison_table(const ChainSpec& chain, const FieldSpec& field, u64 numeric_m);

} // namespace pcg
