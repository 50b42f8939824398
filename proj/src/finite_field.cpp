#include "pcg/finite_field.hpp"

#include <algorithm>
#include <cstdio>

namespace pcg {

namespace {

// Dense little-endian polynomials over Z/pZ. Degree of the zero polynomial
// is -1 by convention; vectors are kept trimmed of leading zeros.

using Poly = std::vector<u64>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    trim(out);
    return out;
}

// Remainder of a modulo b; b must be nonzero.
Poly poly_mod(Poly a, const Poly& b, u64 p) {
    trim(a);
    u64 lead_inv = mod_inverse(b.back(), p);
    while (deg(a) >= deg(b)) {
        u64 factor = mul_mod(a.back(), lead_inv, p);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            u64 sub = mul_mod(factor, b[i], p);
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_scale(Poly a, u64 c, u64 p) {
    for (auto& x : a) x = mul_mod(x, c, p);
    trim(a);
    return a;
}

Poly poly_sub(Poly a, const Poly& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

// Next monic polynomial of fixed degree d, stepping through the p^d
// possibilities via the low coefficients. Returns false after the last one.
bool next_monic(Poly& f, u64 p, unsigned d) {
    for (unsigned i = 0; i < d; ++i) {
        if (++f[i] < p) return true;
        f[i] = 0;
    }
    return false;
}

bool divides(const Poly& d, const Poly& a, u64 p) { return poly_mod(a, d, p).empty(); }

} // namespace

std::vector<u64> coeffs_from_mask(u64 mask) {
    std::vector<u64> coeffs;
    while (mask != 0) {
        coeffs.push_back(mask & 1);
        mask >>= 1;
    }
    return coeffs;
}

FieldSpec::FieldSpec(u64 p, unsigned n, std::vector<u64> irreducible)
    : p_(p), n_(n), irreducible_(std::move(irreducible)) {
    if (!is_prime(p_)) throw error(errc::not_prime, std::to_string(p_) + " is not prime");
    if (n_ < 1) throw error(errc::out_of_range, "extension degree must be >= 1");
    for (auto& c : irreducible_) c %= p_;
    trim(irreducible_);
    if (deg(irreducible_) != static_cast<int>(n_) || irreducible_.back() != 1)
        throw error(errc::precondition_violated, "modulus polynomial must be monic of degree n");

    q_ = 1;
    for (unsigned i = 0; i < n_; ++i) {
        q_ *= p_;
        if (q_ > 65536) throw error(errc::out_of_range, "field size p^n must be <= 2^16");
    }

    // Brute-force irreducibility: no monic divisor of degree 1..n/2.
    for (unsigned d = 1; 2 * d <= n_; ++d) {
        Poly trial(d + 1, 0);
        trial[d] = 1;
        do {
            if (divides(trial, irreducible_, p_))
                throw error(errc::not_irreducible, "modulus polynomial has a proper factor");
        } while (next_monic(trial, p_, d));
    }
}

u64 FieldSpec::irreducible_mask() const {
    if (p_ != 2) throw error(errc::out_of_range, "bitmask form is only defined for p = 2");
    u64 mask = 0;
    for (size_t i = 0; i < irreducible_.size(); ++i) mask |= irreducible_[i] << i;
    return mask;
}

FieldElement FieldSpec::zero() const { return {std::vector<u64>(n_, 0)}; }

FieldElement FieldSpec::one() const {
    FieldElement e = zero();
    e.coeffs[0] = 1;
    return e;
}

bool FieldSpec::is_zero(const FieldElement& a) const {
    return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](u64 c) { return c == 0; });
}

std::string FieldSpec::describe() const {
    if (p_ == 2) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "GF(%llu)/0x%llX", static_cast<unsigned long long>(q_),
                      static_cast<unsigned long long>(irreducible_mask()));
        return buf;
    }
    return "GF(" + std::to_string(q_) + ")";
}

FieldSpec field_new(u64 p, unsigned n, std::vector<u64> irreducible) {
    return FieldSpec(p, n, std::move(irreducible));
}

FieldElement s_map(const FieldSpec& spec, u64 h) {
    if (h < 1 || h > spec.q() - 1)
        throw error(errc::out_of_range, "index " + std::to_string(h) + " outside [1, q-1]");
    FieldElement e = spec.zero();
    for (unsigned i = 0; i < spec.degree(); ++i) {
        e.coeffs[i] = h % spec.p();
        h /= spec.p();
    }
    return e;
}

u64 c_map(const FieldSpec& spec, const FieldElement& e) {
    if (spec.is_zero(e)) throw error(errc::zero_element, "zero element has no index");
    u64 idx = 0;
    for (size_t i = e.coeffs.size(); i-- > 0;) idx = idx * spec.p() + e.coeffs[i] % spec.p();
    return idx;
}

FieldElement fmul(const FieldSpec& spec, const FieldElement& a, const FieldElement& b) {
    Poly prod = poly_mul(a.coeffs, b.coeffs, spec.p());
    prod = poly_mod(prod, spec.irreducible(), spec.p());
    prod.resize(spec.degree(), 0);
    return {prod};
}

FieldElement finv(const FieldSpec& spec, const FieldElement& a) {
    if (spec.is_zero(a)) throw error(errc::zero_element, "zero element is not invertible");
    // Extended Euclid on (a, modulus): maintain s with s*a = r (mod modulus).
    u64 p = spec.p();
    Poly r0 = a.coeffs, r1 = spec.irreducible();
    trim(r0);
    Poly s0 = {1}, s1 = {};
    while (!r1.empty()) {
        // Long division r0 = q*r1 + rem, applied simultaneously to s.
        Poly rem = r0, quot;
        u64 lead_inv = mod_inverse(r1.back(), p);
        while (deg(rem) >= deg(r1)) {
            u64 factor = mul_mod(rem.back(), lead_inv, p);
            size_t shift = rem.size() - r1.size();
            if (quot.size() < shift + 1) quot.resize(shift + 1, 0);
            quot[shift] = factor;
            for (size_t i = 0; i < r1.size(); ++i) {
                u64 sub = mul_mod(factor, r1[i], p);
                rem[shift + i] = (rem[shift + i] + p - sub) % p;
            }
            trim(rem);
        }
        Poly s_next = poly_sub(s0, poly_mul(quot, s1, p), p);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s_next;
    }
    // r0 is the gcd, a nonzero constant since the modulus is irreducible.
    Poly inv = poly_scale(s0, mod_inverse(r0[0], p), p);
    inv = poly_mod(inv, spec.irreducible(), p);
    inv.resize(spec.degree(), 0);
    return {inv};
}

FieldElement fpow(const FieldSpec& spec, const FieldElement& a, u64 e) {
    if (spec.is_zero(a)) {
        if (e == 0) throw error(errc::zero_to_zero, "0^0 is undefined");
        return spec.zero();
    }
    FieldElement result = spec.one();
    FieldElement base = a;
    while (e > 0) {
        if (e & 1) result = fmul(spec, result, base);
        base = fmul(spec, base, base);
        e >>= 1;
    }
    return result;
}

u64 fmul_idx(const FieldSpec& spec, u64 a, u64 b) {
    return c_map(spec, fmul(spec, s_map(spec, a), s_map(spec, b)));
}

u64 finv_idx(const FieldSpec& spec, u64 a) { return c_map(spec, finv(spec, s_map(spec, a))); }

} // namespace pcg
