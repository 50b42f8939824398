#pragma once

// Elementary modular arithmetic: gcd, modular powers and inverses,
// trial-division factorization, Euler phi, Carmichael lambda,
// multiplicative orders, and prime-power CRT splits. Everything works on
// plain 64-bit naturals; intermediate products go through 128-bit math so
// any modulus below 2^63 is safe.

#include <cstdint>
#include <vector>

#include "pcg/error.hpp"

namespace pcg {

using u64 = std::uint64_t;

struct PrimePower {
    u64 prime = 0;
    unsigned exponent = 0;

    u64 value() const; // prime^exponent
    bool operator==(const PrimePower&) const = default;
};

// Prime-power decomposition; primes strictly increasing, exponents >= 1.
using Factorization = std::vector<PrimePower>;

// Largest n accepted by factorize(). Trial division up to sqrt(n) stays
// around a million steps at this bound.
inline constexpr u64 kFactorizeBound = 1'000'000'000'000ULL;

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);

// (a * b) mod m without overflow.
u64 mul_mod(u64 a, u64 b, u64 m);

// base^exp mod m by square and multiply. Requires m >= 2.
u64 mod_pow(u64 base, u64 exp, u64 m);

// Inverse of a mod m via extended Euclid. Throws not_a_unit if gcd(a,m) != 1.
u64 mod_inverse(u64 a, u64 m);

bool is_prime(u64 n);

// Complete factorization of n >= 2 by trial division.
// Throws out_of_range when n < 2 or n > bound.
Factorization factorize(u64 n, u64 bound = kFactorizeBound);

// Reconstructs the factored number; inverse of factorize.
u64 factorization_value(const Factorization& f);

u64 euler_phi(u64 n);

// Carmichael function: exponent of (Z/nZ)^x. lambda(2^e) halves phi for e >= 3.
u64 carmichael_lambda(u64 n);

// Least k >= 1 with g^k = 1 (mod n), found by stripping primes from
// carmichael_lambda(n). Throws not_a_unit when gcd(g,n) != 1.
u64 multiplicative_order(u64 g, u64 n);

// Pairwise-coprime prime-power moduli whose product is k (k >= 2).
std::vector<u64> crt_split(u64 k);

struct CrtUnityCheck {
    bool overall = false;                // H = 1 (mod k)
    std::vector<bool> per_component;     // H = 1 (mod p^a), in crt_split order
};

// Tests H = 1 (mod k) both directly and componentwise. The overall verdict
// always equals the conjunction of the components.
CrtUnityCheck crt_check_unity(u64 h, u64 k);

} // namespace pcg
