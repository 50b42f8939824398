#pragma once

// Arithmetic in GF(p^n) modulo a fixed irreducible polynomial, plus the
// canonical bijection between {1..q-1} and the nonzero field elements.
// Coefficient vectors are little-endian by degree, so an element's integer
// index is the base-p value of its digit string; for p = 2 this makes the
// index literally the bit pattern of the polynomial (the AES byte view).

#include <cstdint>
#include <string>
#include <vector>

#include "pcg/error.hpp"
#include "pcg/number_theory.hpp"

namespace pcg {

struct FieldElement {
    std::vector<u64> coeffs; // size n, entries in [0, p-1], little-endian

    bool operator==(const FieldElement&) const = default;
};

class FieldSpec {
  public:
    // Validates primality of p, monicity and degree of the modulus
    // polynomial, and irreducibility by exhaustive divisor search.
    // Rejects q = p^n > 2^16 as out_of_range.
    FieldSpec(u64 p, unsigned n, std::vector<u64> irreducible);

    u64 p() const { return p_; }
    unsigned degree() const { return n_; }
    u64 q() const { return q_; }
    const std::vector<u64>& irreducible() const { return irreducible_; }

    // For p = 2 the polynomial as a bitmask (e.g. 0x11B for the AES field).
    u64 irreducible_mask() const;

    FieldElement zero() const;
    FieldElement one() const;
    bool is_zero(const FieldElement& a) const;

    bool operator==(const FieldSpec& other) const {
        return p_ == other.p_ && n_ == other.n_ && irreducible_ == other.irreducible_;
    }

    std::string describe() const;

  private:
    u64 p_ = 0;
    unsigned n_ = 0;
    u64 q_ = 0;
    std::vector<u64> irreducible_; // n+1 coefficients, leading 1
};

// Parse "0x11B"-style masks into a little-endian coefficient vector (p = 2).
std::vector<u64> coeffs_from_mask(u64 mask);

FieldSpec field_new(u64 p, unsigned n, std::vector<u64> irreducible);

// Index -> element, defined on [1, q-1]. Throws out_of_range outside.
FieldElement s_map(const FieldSpec& spec, u64 h);

// Element -> index, inverse of s_map. Throws zero_element on zero.
u64 c_map(const FieldSpec& spec, const FieldElement& e);

FieldElement fmul(const FieldSpec& spec, const FieldElement& a, const FieldElement& b);

// Multiplicative inverse via extended Euclid on polynomials.
FieldElement finv(const FieldSpec& spec, const FieldElement& a);

// a^e by repeated squaring; a^0 = 1. Throws zero_to_zero for 0^0.
FieldElement fpow(const FieldSpec& spec, const FieldElement& a, u64 e);

// Index-level shortcuts used by the game layer (arguments in [1, q-1]).
u64 fmul_idx(const FieldSpec& spec, u64 a, u64 b);
u64 finv_idx(const FieldSpec& spec, u64 a);

} // namespace pcg
