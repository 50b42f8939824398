#pragma once

// The uncompressed exponent-chain game: a heap vector h evaluates to the
// left-associated tower (((g^h1)^h2)...)^hn mod N, and is losing exactly when
// the tower equals g. Evaluating the tower step by step is deliberately kept
// independent of the flattened-product shortcut so the two routes can be
// checked against each other exhaustively.

#include <cstdint>
#include <string>
#include <vector>

#include "pcg/game.hpp"
#include "pcg/number_theory.hpp"

namespace pcg {

struct ChainSpec {
    u64 N = 0;     // modulus, >= 2
    u64 g = 0;     // unit mod N
    u64 order = 0; // ord_N(g), derived

    // Validates gcd(g, N) = 1 and computes the order.
    ChainSpec(u64 N, u64 g);

    std::string describe() const;
};

// Left-associated tower evaluation, one mod_pow per heap.
u64 evaluate_chain(const ChainSpec& spec, const std::vector<u64>& heaps);

struct FlattenResult {
    u64 value = 1;       // product of heaps, reduced mod order when needed
    bool reduced = false; // true when overflow forced reduction
};

// Product of the heap values. On overflow the running product switches to
// arithmetic mod the order; a reduced value of 0 is reported as the order
// itself so that g^value still matches the unreduced tower.
FlattenResult flatten_exponent(const ChainSpec& spec, const std::vector<u64>& heaps);

struct CompressionReport {
    ChainSpec spec;
    u64 bound = 0;
    unsigned heap_count = 0;
    u64 total = 0;
    u64 losing = 0;
    std::vector<std::vector<u64>> counterexamples; // tower and product verdicts disagree
};

// Exhaustively compares, over all heap vectors in [1,bound]^n, the tower
// verdict E(h) = g against the product verdict prod(h) = 1 (mod order).
CompressionReport compression_check(const ChainSpec& spec, u64 bound, unsigned heap_count);

// The compressed game: numeric PCG mod ord_N(g) with losing set {1}.
// Throws degenerate_order when the order is 1.
GameSpec chain_to_pcg(const ChainSpec& spec);

struct CrtLosingCheck {
    bool overall = false;
    std::vector<u64> component_moduli;  // prime powers of the order
    std::vector<bool> per_component;
};

// Losing verdict split across the prime-power components of the order.
CrtLosingCheck crt_losing_check(const ChainSpec& spec, const std::vector<u64>& heaps);

} // namespace pcg
