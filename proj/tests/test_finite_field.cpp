#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "pcg/finite_field.hpp"

using namespace pcg;

namespace {

FieldSpec gf8() { return FieldSpec(2, 3, coeffs_from_mask(0xB)); }    // x^3+x+1
FieldSpec gf16() { return FieldSpec(2, 4, coeffs_from_mask(0x13)); }  // x^4+x+1
FieldSpec aes() { return FieldSpec(2, 8, coeffs_from_mask(0x11B)); }  // x^8+x^4+x^3+x+1

bool throws_kind(errc kind, const std::function<void()>& f) {
    try {
        f();
    } catch (const error& e) {
        return e.kind() == kind;
    }
    return false;
}

} // namespace

TEST_CASE("field construction validates inputs") {
    CHECK(gf8().q() == 8);
    CHECK(aes().q() == 256);
    CHECK(aes().irreducible_mask() == 0x11B);
    CHECK(FieldSpec(3, 2, {2, 1, 1}).q() == 9); // x^2+x+2 over GF(3), irreducible

    CHECK(throws_kind(errc::not_irreducible, [] { FieldSpec(2, 2, coeffs_from_mask(0x5)); })); // x^2+1
    CHECK(throws_kind(errc::not_irreducible, [] { FieldSpec(2, 4, coeffs_from_mask(0x18)); })); // x^4+x^3 wait
    CHECK(throws_kind(errc::not_prime, [] { FieldSpec(4, 2, {1, 1, 1}); }));
    CHECK(throws_kind(errc::out_of_range, [] { FieldSpec(2, 17, std::vector<u64>(18, 1)); }));
    CHECK(throws_kind(errc::precondition_violated, [] { FieldSpec(2, 3, coeffs_from_mask(0x3)); }));
}

TEST_CASE("s_map and c_map are mutually inverse") {
    FieldSpec f = gf8();
    CHECK(s_map(f, 1).coeffs == std::vector<u64>{1, 0, 0});
    CHECK(s_map(f, 2).coeffs == std::vector<u64>{0, 1, 0}); // x
    CHECK(c_map(f, s_map(f, 1)) == 1);
    CHECK(c_map(f, s_map(f, 2)) == 2);

    FieldSpec a = aes();
    CHECK(s_map(a, 0x53).coeffs == std::vector<u64>{1, 1, 0, 0, 1, 0, 1, 0}); // x^6+x^4+x+1

    for (u64 h = 1; h <= 255; ++h) CHECK(c_map(a, s_map(a, h)) == h);
    for (u64 h = 1; h <= 8; ++h) CHECK(c_map(FieldSpec(3, 2, {2, 1, 1}), s_map(FieldSpec(3, 2, {2, 1, 1}), h)) == h);

    CHECK(throws_kind(errc::out_of_range, [&] { s_map(f, 0); }));
    CHECK(throws_kind(errc::out_of_range, [&] { s_map(f, 8); }));
    CHECK(throws_kind(errc::zero_element, [&] { c_map(f, f.zero()); }));
}

TEST_CASE("fmul reduces by the modulus polynomial") {
    FieldSpec f = gf8();
    // x * x^2 = x^3 = x + 1
    CHECK(c_map(f, fmul(f, s_map(f, 2), s_map(f, 4))) == 3);
    for (u64 h = 1; h <= 7; ++h) CHECK(c_map(f, fmul(f, s_map(f, h), f.one())) == h);

    FieldSpec a = aes();
    CHECK(fmul_idx(a, 0x53, 0xCA) == 0x01);
}

TEST_CASE("finv inverts every nonzero element") {
    FieldSpec f = gf8();
    CHECK(c_map(f, finv(f, f.one())) == 1);
    CHECK(finv_idx(f, 2) == 5); // inverse of x is x^2+1
    CHECK(fmul_idx(f, 2, 5) == 1);

    FieldSpec a = aes();
    CHECK(finv_idx(a, 0x53) == 0xCA);
    for (u64 h = 1; h <= 255; ++h) CHECK(fmul_idx(a, h, finv_idx(a, h)) == 1);

    FieldSpec g9(3, 2, {2, 1, 1});
    for (u64 h = 1; h <= 8; ++h) CHECK(c_map(g9, fmul(g9, s_map(g9, h), finv(g9, s_map(g9, h)))) == 1);

    CHECK(throws_kind(errc::zero_element, [&] { finv(f, f.zero()); }));
}

TEST_CASE("fpow and the group exponent") {
    FieldSpec f = gf8();
    CHECK(c_map(f, fpow(f, s_map(f, 5), 0)) == 1);
    CHECK(c_map(f, fpow(f, s_map(f, 2), 7)) == 1); // order divides q-1

    for (u64 h = 1; h <= 7; ++h) CHECK(c_map(f, fpow(f, s_map(f, h), 7)) == 1);
    FieldSpec g = gf16();
    for (u64 h = 1; h <= 15; ++h) CHECK(c_map(g, fpow(g, s_map(g, h), 15)) == 1);

    CHECK(f.is_zero(fpow(f, f.zero(), 3)));
    CHECK(throws_kind(errc::zero_to_zero, [&] { fpow(f, f.zero(), 0); }));
}

TEST_CASE("the largest accepted field works end to end") {
    // x^16 + x^5 + x^3 + x + 1, irreducible; q = 2^16 is the size cap.
    FieldSpec f(2, 16, coeffs_from_mask(0x1002B));
    CHECK(f.q() == 65536);
    for (u64 h = 1; h <= 65535; ++h) CHECK(c_map(f, s_map(f, h)) == h);

    std::mt19937_64 rng(4);
    for (int i = 0; i < 200; ++i) {
        u64 a = 1 + rng() % 65535;
        CHECK(fmul_idx(f, a, finv_idx(f, a)) == 1);
    }
}

TEST_CASE("nonzero elements form an abelian group") {
    for (FieldSpec f : {gf8(), gf16()}) {
        u64 q = f.q();
        // Closure and commutativity, exhaustively.
        for (u64 a = 1; a < q; ++a) {
            for (u64 b = 1; b < q; ++b) {
                u64 ab = fmul_idx(f, a, b);
                CHECK(ab >= 1);
                CHECK(ab < q);
                CHECK(ab == fmul_idx(f, b, a));
            }
        }
        // Associativity on sampled triples.
        std::mt19937_64 rng(2);
        for (int i = 0; i < 2000; ++i) {
            u64 a = 1 + rng() % (q - 1), b = 1 + rng() % (q - 1), c = 1 + rng() % (q - 1);
            CHECK(fmul_idx(f, fmul_idx(f, a, b), c) == fmul_idx(f, a, fmul_idx(f, b, c)));
        }
    }
}
