#include "pcg/number_theory.hpp"

namespace pcg {

const char* errc_name(errc k) {
    switch (k) {
    case errc::not_a_unit: return "not_a_unit";
    case errc::out_of_range: return "out_of_range";
    case errc::not_prime: return "not_prime";
    case errc::not_irreducible: return "not_irreducible";
    case errc::zero_element: return "zero_element";
    case errc::zero_to_zero: return "zero_to_zero";
    case errc::illegal_move: return "illegal_move";
    case errc::precondition_violated: return "precondition_violated";
    case errc::zero_invariant: return "zero_invariant";
    case errc::search_budget_exceeded: return "search_budget_exceeded";
    case errc::wrong_region: return "wrong_region";
    case errc::unsupported_losing_set: return "unsupported_losing_set";
    case errc::domain_exhausted: return "domain_exhausted";
    case errc::spec_mismatch: return "spec_mismatch";
    case errc::degenerate_order: return "degenerate_order";
    case errc::malformed_table: return "malformed_table";
    case errc::too_large: return "too_large";
    }
    return "unknown";
}

u64 PrimePower::value() const {
    u64 v = 1;
    for (unsigned i = 0; i < exponent; ++i) v *= prime;
    return v;
}

u64 gcd(u64 a, u64 b) {
    while (b != 0) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u64 lcm(u64 a, u64 b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd(a, b) * b;
}

u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 mod_pow(u64 base, u64 exp, u64 m) {
    if (m < 2) throw error(errc::out_of_range, "mod_pow needs modulus >= 2");
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

u64 mod_inverse(u64 a, u64 m) {
    if (m < 2) throw error(errc::out_of_range, "mod_inverse needs modulus >= 2");
    // Extended Euclid on (a mod m, m), tracking only the x coefficient.
    std::int64_t t = 0, new_t = 1;
    u64 r = m, new_r = a % m;
    while (new_r != 0) {
        u64 q = r / new_r;
        std::int64_t tmp_t = t - static_cast<std::int64_t>(q) * new_t;
        t = new_t;
        new_t = tmp_t;
        u64 tmp_r = r - q * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (r != 1)
        throw error(errc::not_a_unit, std::to_string(a) + " is not invertible mod " + std::to_string(m));
    return t < 0 ? static_cast<u64>(t + static_cast<std::int64_t>(m)) : static_cast<u64>(t);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (u64 d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

Factorization factorize(u64 n, u64 bound) {
    if (n < 2) throw error(errc::out_of_range, "factorize needs n >= 2");
    if (n > bound)
        throw error(errc::out_of_range,
                    std::to_string(n) + " exceeds the trial-division bound " + std::to_string(bound));
    Factorization out;
    auto strip = [&](u64 p) {
        if (n % p != 0) return;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    };
    strip(2);
    strip(3);
    for (u64 d = 5; d * d <= n; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

u64 factorization_value(const Factorization& f) {
    u64 v = 1;
    for (const auto& pp : f) v *= pp.value();
    return v;
}

u64 euler_phi(u64 n) {
    if (n == 0) throw error(errc::out_of_range, "euler_phi needs n >= 1");
    if (n == 1) return 1;
    u64 phi = 1;
    for (const auto& pp : factorize(n)) {
        u64 pe = pp.value();
        phi *= pe - pe / pp.prime;
    }
    return phi;
}

u64 carmichael_lambda(u64 n) {
    if (n == 0) throw error(errc::out_of_range, "carmichael_lambda needs n >= 1");
    if (n == 1) return 1;
    u64 result = 1;
    for (const auto& pp : factorize(n)) {
        u64 pe = pp.value();
        u64 component;
        if (pp.prime == 2) {
            component = (pp.exponent <= 2) ? pe / 2 : pe / 4; // 1, 2, then half of phi
        } else {
            component = pe - pe / pp.prime;
        }
        result = lcm(result, component);
    }
    return result;
}

u64 multiplicative_order(u64 g, u64 n) {
    if (n < 2) throw error(errc::out_of_range, "multiplicative_order needs modulus >= 2");
    if (gcd(g % n, n) != 1)
        throw error(errc::not_a_unit, std::to_string(g) + " is not a unit mod " + std::to_string(n));
    u64 k = carmichael_lambda(n);
    if (k == 1) return 1;
    // Strip every prime out of k while the power still fixes g.
    for (const auto& pp : factorize(k)) {
        for (unsigned i = 0; i < pp.exponent; ++i) {
            if (k % pp.prime == 0 && mod_pow(g, k / pp.prime, n) == 1) k /= pp.prime;
        }
    }
    return k;
}

std::vector<u64> crt_split(u64 k) {
    if (k < 2) throw error(errc::out_of_range, "crt_split needs k >= 2");
    std::vector<u64> moduli;
    for (const auto& pp : factorize(k)) moduli.push_back(pp.value());
    return moduli;
}

CrtUnityCheck crt_check_unity(u64 h, u64 k) {
    if (k < 2) throw error(errc::out_of_range, "crt_check_unity needs k >= 2");
    CrtUnityCheck result;
    result.overall = (h % k == 1);
    for (u64 q : crt_split(k)) result.per_component.push_back(h % q == 1);
    return result;
}

} // namespace pcg
