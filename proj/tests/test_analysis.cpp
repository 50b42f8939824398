#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "pcg/analysis.hpp"

using namespace pcg;

namespace {

GameSpec gf8_game() { return GameSpec::field(FieldSpec(2, 3, coeffs_from_mask(0xB))); }

bool throws_kind(errc kind, const std::function<void()>& f) {
    try {
        f();
    } catch (const error& e) {
        return e.kind() == kind;
    }
    return false;
}

} // namespace

TEST_CASE("exact losing counts hit |R| * |G|^(n-1)") {
    DensityReport gf8 = exact_losing_count(gf8_game(), 2);
    CHECK(gf8.total == 49);
    CHECK(gf8.losing == 7);
    CHECK(gf8.expected_exact == 7);
    CHECK(gf8.constructive_losing == 7);

    DensityReport one_heap = exact_losing_count(gf8_game(), 1);
    CHECK(one_heap.losing == 1);
    CHECK(one_heap.constructive_losing == 1);

    DensityReport m4 = exact_losing_count(GameSpec::numeric(4, {1}), 2);
    CHECK(m4.total == 4); // units {1,3}
    CHECK(m4.losing == 2);
    CHECK(m4.constructive_losing == 2);

    // Two losing residues double the count.
    DensityReport wide = exact_losing_count(GameSpec::numeric(5, {1, 4}), 2);
    CHECK(wide.total == 16);
    CHECK(wide.losing == 8);
    CHECK(wide.expected_exact == 8);
    CHECK(wide.constructive_losing == 8);

    GameSpec aes = GameSpec::field(FieldSpec(2, 8, coeffs_from_mask(0x11B)));
    CHECK(throws_kind(errc::too_large, [&] { exact_losing_count(aes, 3); }));
    CHECK(throws_kind(errc::precondition_violated,
                      [] { exact_losing_count(GameSpec::numeric(4, {1}, false), 2); }));
}

TEST_CASE("predicate and game-tree counts over one period") {
    // Unit group of exponent 2: predicate-losing and game-tree P coincide.
    DensityReport m4 = exact_losing_count(GameSpec::numeric(4, {1}), 2, 10'000'000, true);
    REQUIRE(m4.tree_p.has_value());
    CHECK(*m4.tree_p == m4.losing);

    // m=5: (2,3) is predicate-losing but N; (2,2) is P but not losing. The
    // two-heap counts still agree (phi(m) each: inverse pairs vs diagonal)
    // while the sets differ, which the game layer confirms.
    GameSpec m5 = GameSpec::numeric(5, {1});
    DensityReport r5 = exact_losing_count(m5, 2, 10'000'000, true);
    REQUIRE(r5.tree_p.has_value());
    CHECK(r5.losing == 4);
    CHECK(*r5.tree_p == 4);
    OutcomeOracle oracle(m5);
    CHECK(is_losing_predicate(m5, Position{{2, 3}}));
    CHECK(oracle.evaluate(Position{{2, 3}}) == Outcome::N);
    CHECK_FALSE(is_losing_predicate(m5, Position{{2, 2}}));
    CHECK(oracle.evaluate(Position{{2, 2}}) == Outcome::P);
}

TEST_CASE("empirical density over a bounded window") {
    // Units mod 4 up to 400: product = 1 exactly when the residues agree,
    // which is half of all pairs.
    DensityReport unit = empirical_density(GameSpec::numeric(4, {1}), 2, 400);
    CHECK(unit.total == 200 * 200);
    CHECK(unit.ratio() == doctest::Approx(0.5));
    CHECK(unit.predicted() == doctest::Approx(0.5));

    // Permissive mode: only odd pairs with matching residues hit 1 mod 4,
    // which is 1/8 of the window, regardless of the 1/m heuristic.
    DensityReport permissive = empirical_density(GameSpec::numeric(4, {1}, false), 2, 400);
    CHECK(permissive.total == 400 * 400);
    CHECK(permissive.ratio() == doctest::Approx(0.125));

    // One full period of unit labels gives the exact group density.
    DensityReport period = empirical_density(GameSpec::numeric(4, {1}), 2, 3);
    CHECK(period.ratio() == doctest::Approx(0.5));

    // Seeded sampling approaches the same ratio.
    DensityReport sampled = empirical_density_sampled(GameSpec::numeric(4, {1}), 2, 400, 20'000, 7);
    CHECK(sampled.total == 20'000);
    CHECK(sampled.ratio() == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("periodicity in each coordinate") {
    GameSpec m4 = GameSpec::numeric(4, {1});
    PeriodicityReport r = periodicity_check(m4, {3}, 0, 16);
    CHECK(r.violations.empty());
    CHECK(!r.rows.empty());
    for (const PeriodicityRow& row : r.rows) CHECK(row.x >= 4);

    GameSpec m5 = GameSpec::numeric(5, {1});
    OutcomeOracle oracle(m5);
    CHECK(periodicity_check(m5, {2, 3}, 0, 20, &oracle).violations.empty());
    CHECK(periodicity_check(m5, {}, 0, 20, &oracle).violations.empty());

    CHECK(throws_kind(errc::precondition_violated,
                      [] { periodicity_check(gf8_game(), {1}, 0, 20); }));
}

TEST_CASE("comparison table is computed from live specs") {
    ChainSpec chain(15, 2);
    FieldSpec aes(2, 8, coeffs_from_mask(0x11B));
    auto rows = comparison_table(chain, aes, 6);

    auto find = [&](const std::string& feature) -> const TableRow& {
        for (const TableRow& row : rows)
            if (row.feature == feature) return row;
        REQUIRE(false);
        return rows.front();
    };

    const TableRow& modulus = find("compression modulus");
    CHECK(modulus.chain_value == "4");
    CHECK(modulus.field_value == "255");
    CHECK(modulus.numeric_value == "6");

    const TableRow& decomposition = find("decomposition");
    CHECK(decomposition.chain_value == "[4]");
    CHECK(decomposition.numeric_value == "[2,3]");

    const TableRow& density = find("density");
    CHECK(density.chain_value.find("1/4") != std::string::npos);
    CHECK(density.chain_value.find("1/2") != std::string::npos);
    CHECK(density.field_value == "1/255");
    CHECK(density.numeric_value.find("1/6") != std::string::npos);
}
