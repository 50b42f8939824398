#pragma once

// Exhaustive verification suites over desk-scale boxes. Each suite states
// the box it covered and returns violations as data; an empty violation list
// means the claim held everywhere in the box.

#include <cstdint>
#include <string>
#include <vector>

#include "pcg/game.hpp"

namespace pcg {

struct SuiteResult {
    std::string name;
    std::string box;               // exactly what was covered
    u64 cases = 0;                 // how many checks ran
    std::vector<std::string> violations;
    double seconds = 0.0;

    bool passed() const { return violations.empty(); }
};

// Tower-vs-product equivalence for the exponent chain, all heap vectors in
// [1,bound]^n.
SuiteResult verify_compression(u64 N, u64 g, u64 bound, unsigned heap_count);

// Predicate classifier against the game-tree oracle on every Threshold
// position with the given heap counts and labels <= label_cap_factor * m.
SuiteResult verify_threshold_outcome(const std::vector<u64>& moduli, unsigned min_heaps,
                                     unsigned max_heaps, u64 label_cap_factor = 3);

// Repair legality/landing on non-losing Threshold positions and zero losing
// options from losing Threshold positions, same box.
SuiteResult verify_repair_blocking(const std::vector<u64>& moduli, unsigned min_heaps,
                                   unsigned max_heaps, u64 label_cap_factor = 3);

// Invariant/predicate preservation under normalize over the whole box, and
// one-move reachability of a losing position from every normalized non-losing
// Indeterminacy position. Covers the numeric boxes and the given fields.
SuiteResult verify_normalization(const std::vector<u64>& moduli, const std::vector<u64>& field_masks,
                                 unsigned max_heaps, u64 label_cap_factor = 3);

// Single-hole property on every Threshold position (1 or 2 heaps) and
// SG multiplicativity over all pairs of them.
SuiteResult verify_single_hole_sg(const std::vector<u64>& moduli,
                                  const std::vector<u64>& field_masks, u64 label_cap_factor = 3);

// Exact losing counts |R|*|G|^(n-1) for the listed fields (n = 2) plus the
// n = 1 sanity count, and empirical convergence for the numeric game.
SuiteResult verify_densities(const std::vector<u64>& field_masks, u64 numeric_m, u64 numeric_bound,
                             double tolerance = 0.05);

// f_j(x) = f_j(x+m) for x in [m, x_max], all unit-label contexts below m of
// size 0..max_context, every insertion point equivalent by symmetry.
SuiteResult verify_periodicity(const std::vector<u64>& moduli, unsigned max_context);

// Additive one-move residue coverage, divisor-collapse transitivity matching
// the generation hypothesis, and non-vacuousness of the hypothesis at m = 4.
SuiteResult verify_collapse(u64 max_modulus, unsigned max_heaps, u64 scan_bound);

// Canonical-map round trip, the standard inversion pair {53}x{CA}={01}, and
// a^(q-1) = 1 over the whole AES field.
SuiteResult verify_aes_field();

// All suites at the standard desk-scale parameters, in order.
std::vector<SuiteResult> verify_all();

} // namespace pcg
