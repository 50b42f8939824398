#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "pcg/collapse.hpp"

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

TEST_CASE("additive reach covers every residue from a large heap") {
    AdditiveGameSpec m5(5, 0);
    AdditiveReach reach = additive_reach_check(m5, {7, 2}, 0);
    CHECK(reach.covers_all);
    CHECK(reach.reachable.size() == 4); // d = 1..4; the current residue completes the set

    AdditiveGameSpec m2(2, 0);
    CHECK(additive_reach_check(m2, {2}, 0).covers_all);

    CHECK(throws_kind(errc::precondition_violated, [&] { additive_reach_check(m5, {4, 2}, 0); }));

    // Exhaustive box: every heap at or above m covers everything.
    for (u64 m = 2; m <= 6; ++m) {
        AdditiveGameSpec spec(m, 1 % m);
        for (u64 a = m; a <= 3 * m; ++a)
            for (u64 b = 1; b <= 3 * m; ++b) CHECK(additive_reach_check(spec, {a, b}, 0).covers_all);
    }
}

TEST_CASE("additive outcomes") {
    // Terminal (1,1) has sum 2, not 0 mod 3, so the verdict is predicate-only:
    // sum 3 = 0 means losing.
    AdditiveGameSpec m3(3, 0);
    CHECK(additive_outcome(m3, {1, 2}) == Outcome::P);
    CHECK(additive_outcome(m3, {2, 2}) == Outcome::N);

    // Terminal-consistent instance (n = s mod m): real game-tree evaluation.
    AdditiveGameSpec m2(2, 0);
    CHECK(additive_outcome(m2, {1, 1}) == Outcome::P);
    CHECK(additive_outcome(m2, {2, 1}) == Outcome::N); // move to (1,1)

    // Any sum residue is reachable from a heap >= m, so non-losing positions
    // with a large heap are N either way.
    AdditiveGameSpec m5(5, 2);
    for (u64 a = 5; a <= 12; ++a) {
        std::vector<u64> heaps{a, 3};
        u64 sum = a + 3;
        if (sum % 5 != 2) CHECK(additive_outcome(m5, heaps) == Outcome::N);
    }
}

TEST_CASE("divisor move units") {
    DivisorMoveUnits u = divisor_move_units(9, 4);
    CHECK(u.units == std::set<u64>{1, 3});
    CHECK(u.skipped_non_units == 0);

    // A prime contributes only its inverse (divisor 1).
    CHECK(divisor_move_units(7, 5).units == std::set<u64>{mod_inverse(7, 5)});
    CHECK(divisor_move_units(1, 4).units.empty());
    CHECK(throws_kind(errc::not_a_unit, [] { divisor_move_units(4, 2); }));

    // Divisors of a unit are units themselves, so nothing is ever skipped.
    for (u64 m = 2; m <= 8; ++m)
        for (u64 t = 2; t <= 60; ++t)
            if (gcd(t, m) == 1) CHECK(divisor_move_units(t, m).skipped_non_units == 0);
}

TEST_CASE("generates_group via closure") {
    CHECK_FALSE(generates_group({1}, 5));
    CHECK(generates_group({2}, 5)); // primitive root
    CHECK(generates_group({3}, 4));
    CHECK(generates_group({}, 2)); // trivial group

    // Singleton generation matches order == phi(m).
    for (u64 m = 3; m <= 50; ++m) {
        for (u64 g = 1; g < m; ++g) {
            if (gcd(g, m) != 1) continue;
            CHECK(generates_group({g}, m) == (multiplicative_order(g, m) == euler_phi(m)));
        }
    }
}

TEST_CASE("alignment scan exposes non-generating heap values") {
    auto rows = alignment_hypothesis_scan(4, 2, 100);
    bool found_failure = false;
    for (const auto& row : rows) {
        if (!row.coprime) {
            CHECK(row.generated_subgroup_order == 0);
            continue;
        }
        if (is_prime(row.t) && row.t % 4 == 1) {
            // Divisor set {1} maps to {t^-1} = {1}, which never generates.
            CHECK_FALSE(row.generates);
            found_failure = true;
        }
    }
    CHECK(found_failure);

    // Trivial group: hypothesis holds vacuously.
    for (const auto& row : alignment_hypothesis_scan(2, 2, 40))
        if (row.coprime) CHECK(row.generates);

    // m=5 spot values: 32's divisor units are all of (Z/5Z)^x; a prime's
    // singleton generates exactly when its inverse is a primitive root.
    for (const auto& row : alignment_hypothesis_scan(5, 2, 100)) {
        if (!row.coprime) continue;
        if (row.t == 32) CHECK(row.generated_subgroup_order == 4);
        if (is_prime(row.t))
            CHECK(row.generates ==
                  (multiplicative_order(mod_inverse(row.t % 5, 5), 5) == 4));
    }
}

TEST_CASE("divisor collapse transitivity") {
    DivisorCollapse c = divisor_collapse_check(5, {32, 3}, 0);
    CHECK(c.transitive);
    CHECK(c.reachable_units.size() == 4);

    DivisorCollapse one = divisor_collapse_check(5, {1, 3}, 0);
    CHECK(one.reachable_units.empty());
    CHECK_FALSE(one.transitive);

    CHECK(divisor_collapse_check(2, {3}, 0).transitive);
    CHECK(throws_kind(errc::not_a_unit, [] { divisor_collapse_check(4, {2, 3}, 0); }));

    // Transitive exactly when the one-move units generate.
    for (u64 m = 3; m <= 6; ++m) {
        for (u64 t = 2; t <= 60; ++t) {
            if (gcd(t, m) != 1) continue;
            bool hypothesis = generates_group(divisor_move_units(t, m).units, m);
            CHECK(divisor_collapse_check(m, {t}, 0).transitive == hypothesis);
            CHECK(divisor_collapse_check(m, {t, 1}, 0).transitive == hypothesis);
        }
    }
}

TEST_CASE("generic alignment principle") {
    // Addition mod 5; move images of heaps at or above the modulus cover
    // enough residues to generate, so the additive game collapses.
    MonoidTable add5;
    add5.table.resize(5, std::vector<unsigned>(5));
    for (unsigned a = 0; a < 5; ++a)
        for (unsigned b = 0; b < 5; ++b) add5.table[a][b] = (a + b) % 5;
    std::map<unsigned, std::set<unsigned>> images;
    images[5] = {1, 2, 3, 4};
    images[6] = {0, 1, 2, 3, 4};
    CHECK(alignment_principle_check(add5, images));

    // Units mod 4 with the failing divisor instance: image {1} cannot
    // generate the two-element group.
    MonoidTable units4;
    units4.table = {{0, 1}, {1, 0}}; // indices for residues {1, 3}
    CHECK_FALSE(alignment_principle_check(units4, {{5, {0}}}));
    CHECK(alignment_principle_check(units4, {{7, {1}}}));

    // Trivial monoid: everything generates.
    MonoidTable trivial;
    trivial.table = {{0}};
    CHECK(alignment_principle_check(trivial, {{9, {}}}));

    MonoidTable ragged;
    ragged.table = {{0, 1}, {0}};
    CHECK(throws_kind(errc::malformed_table, [&] { alignment_principle_check(ragged, {}); }));
    MonoidTable no_identity;
    no_identity.table = {{0, 0}, {0, 0}};
    CHECK(throws_kind(errc::malformed_table, [&] { alignment_principle_check(no_identity, {}); }));
}
