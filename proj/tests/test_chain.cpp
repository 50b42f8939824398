#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "pcg/chain.hpp"

using namespace pcg;

namespace {

bool throws_kind(errc kind, const std::function<void()>& f) {
    try {
        f();
    } catch (const error& e) {
        return e.kind() == kind;
    }
    return false;
}

} // namespace

TEST_CASE("chain spec derives the order") {
    ChainSpec spec(15, 2);
    CHECK(spec.order == 4);
    CHECK(ChainSpec(7, 2).order == 3);
    CHECK(ChainSpec(13, 2).order == 12);
    CHECK(throws_kind(errc::not_a_unit, [] { ChainSpec(15, 5); }));
}

TEST_CASE("tower evaluation is literal") {
    ChainSpec spec(15, 2);
    CHECK(evaluate_chain(spec, {1, 1}) == 2);
    CHECK(evaluate_chain(spec, {1}) == 2);
    CHECK(evaluate_chain(spec, {3, 3}) == 2); // ((2^3)^3) = 2^9 = 512 = 2 mod 15
    CHECK(evaluate_chain(spec, {4}) == 1);
    CHECK(throws_kind(errc::precondition_violated, [&] { evaluate_chain(spec, {}); }));
}

TEST_CASE("flatten_exponent with and without reduction") {
    ChainSpec spec(15, 2);
    FlattenResult r = flatten_exponent(spec, {3, 3});
    CHECK(r.value == 9);
    CHECK_FALSE(r.reduced);
    CHECK(flatten_exponent(spec, {1, 1, 1}).value == 1);
    CHECK(flatten_exponent(spec, {5, 7, 9}).value == 315);

    // Overflow forces reduction mod the order; the reduced exponent still
    // reproduces the tower value.
    std::vector<u64> big(5, 1ULL << 40); // (2^40)^5 overflows u64
    FlattenResult reduced = flatten_exponent(spec, big);
    CHECK(reduced.reduced);
    CHECK(reduced.value >= 1);
    CHECK(reduced.value <= spec.order);
    u64 residue = 1;
    for (u64 h : big) residue = mul_mod(residue, h % spec.order, spec.order);
    CHECK(reduced.value % spec.order == residue % spec.order);
    CHECK(evaluate_chain(spec, big) == mod_pow(spec.g, reduced.value, spec.N));
}

TEST_CASE("flattening identity over small boxes") {
    for (auto [N, g] : std::vector<std::pair<u64, u64>>{{15, 2}, {7, 3}, {21, 2}, {13, 2}}) {
        ChainSpec spec(N, g);
        for (u64 a = 1; a <= 8; ++a) {
            for (u64 b = 1; b <= 8; ++b) {
                FlattenResult flat = flatten_exponent(spec, {a, b});
                CHECK(evaluate_chain(spec, {a, b}) == mod_pow(spec.g, flat.value, spec.N));
            }
        }
    }
}

TEST_CASE("compression verdicts match exhaustively") {
    ChainSpec spec(15, 2);
    CompressionReport r3 = compression_check(spec, 8, 3);
    CHECK(r3.total == 512);
    CHECK(r3.counterexamples.empty());

    CompressionReport r2 = compression_check(spec, 8, 2);
    CHECK(r2.total == 64);
    CHECK(r2.counterexamples.empty());
    // The small losing examples really are losing.
    for (auto heaps : std::vector<std::vector<u64>>{{1, 1}, {3, 3}, {5, 1}})
        CHECK(evaluate_chain(spec, heaps) == spec.g);

    CompressionReport r1 = compression_check(spec, 8, 1);
    for (u64 h = 1; h <= 8; ++h) {
        bool losing = evaluate_chain(spec, {h}) == spec.g;
        CHECK(losing == (h % 4 == 1));
    }
    CHECK(r1.counterexamples.empty());

    // Wider sweep over several generators and moduli.
    for (auto [N, g] : std::vector<std::pair<u64, u64>>{{9, 2}, {21, 5}, {33, 2}, {50, 3}}) {
        ChainSpec s(N, g);
        CHECK(compression_check(s, 6, 2).counterexamples.empty());
        CHECK(compression_check(s, 4, 3).counterexamples.empty());
    }
}

TEST_CASE("chain_to_pcg compresses to the numeric game") {
    GameSpec pcg = chain_to_pcg(ChainSpec(15, 2));
    CHECK(pcg.modulus() == 4);
    CHECK(pcg.losing_set() == std::vector<u64>{1});
    CHECK(legal_moves(pcg, Position{{5}}) == std::vector<Move>{{0, 3}});

    CHECK(chain_to_pcg(ChainSpec(7, 2)).modulus() == 3);
    CHECK(throws_kind(errc::degenerate_order, [] { chain_to_pcg(ChainSpec(15, 1)); }));
}

TEST_CASE("crt losing verdicts split over prime powers") {
    ChainSpec k12(13, 2); // order 12 = 4 * 3
    CrtLosingCheck a = crt_losing_check(k12, {5, 5}); // product 25
    CHECK(a.overall);
    CHECK(a.component_moduli == std::vector<u64>{4, 3});
    CHECK(a.per_component == std::vector<bool>{true, true});

    CrtLosingCheck b = crt_losing_check(k12, {5}); // 5 = 1 mod 4, 2 mod 3
    CHECK_FALSE(b.overall);
    CHECK(b.per_component == std::vector<bool>{true, false});

    ChainSpec k4(15, 2);
    CrtLosingCheck c = crt_losing_check(k4, {3, 3}); // product 9 = 1 mod 4
    CHECK(c.overall);
    CHECK(c.component_moduli == std::vector<u64>{4});
    CHECK(c.per_component == std::vector<bool>{true});

    // Overall always equals the conjunction of the components.
    ChainSpec k20(25, 2); // order 20 = 4 * 5
    CHECK(k20.order == 20);
    std::mt19937_64 rng(3);
    for (const ChainSpec& spec : {k12, k20}) {
        for (int i = 0; i < 10'000; ++i) {
            std::vector<u64> heaps{1 + rng() % 50, 1 + rng() % 50, 1 + rng() % 50};
            CrtLosingCheck check = crt_losing_check(spec, heaps);
            bool conjunction = true;
            for (bool part : check.per_component) conjunction = conjunction && part;
            CHECK(check.overall == conjunction);
        }
    }
}
