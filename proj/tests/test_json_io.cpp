#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "pcg/json_io.hpp"
#include "pcg/verify.hpp"

using namespace pcg;
using nlohmann::json;

namespace {

bool throws_kind(errc kind, const std::function<void()>& f) {
    try {
        f();
    } catch (const error& e) {
        return e.kind() == kind;
    }
    return false;
}

// Serialize, parse, serialize again: the two dumps must be byte-equal.
void check_spec_roundtrip(const GameSpec& spec) {
    std::string first = canonical_dump(spec_to_json(spec));
    GameSpec parsed = spec_from_json(json::parse(first));
    std::string second = canonical_dump(spec_to_json(parsed));
    CHECK(first == second);
    CHECK(parsed == spec);
}

} // namespace

TEST_CASE("spec round trips byte-equal") {
    check_spec_roundtrip(GameSpec::numeric(4, {1}));
    check_spec_roundtrip(GameSpec::numeric(12, {1, 5, 7}, false));
    check_spec_roundtrip(GameSpec::field(FieldSpec(2, 8, coeffs_from_mask(0x11B))));
    check_spec_roundtrip(GameSpec::field(FieldSpec(3, 2, {2, 1, 1})));
    check_spec_roundtrip(GameSpec::chain(15, 2));
}

TEST_CASE("positions carry their spec") {
    GameSpec spec = GameSpec::numeric(4, {1});
    Position pos{{5, 1}};
    std::string first = canonical_dump(position_to_json(spec, pos));
    auto [parsed_spec, parsed_pos] = position_from_json(json::parse(first));
    CHECK(parsed_spec == spec);
    CHECK(parsed_pos == pos);
    CHECK(canonical_dump(position_to_json(parsed_spec, parsed_pos)) == first);

    json bad = position_to_json(spec, pos);
    bad["heaps"] = {5, 2}; // 2 is not a unit mod 4
    CHECK(throws_kind(errc::precondition_violated, [&] { position_from_json(bad); }));
}

TEST_CASE("field specs accept masks and coefficient lists") {
    json by_mask = {{"variant", "field"}, {"p", 2}, {"n", 3}, {"irreducible", "0xB"}};
    json by_list = {{"variant", "field"}, {"p", 2}, {"n", 3}, {"irreducible", {1, 1, 0, 1}}};
    CHECK(spec_from_json(by_mask) == spec_from_json(by_list));
    CHECK(throws_kind(errc::out_of_range, [] {
        spec_from_json(json{{"variant", "nope"}});
    }));
}

TEST_CASE("moves and reports serialize") {
    Move move{0, 3};
    CHECK(move_from_json(move_to_json(move)) == move);

    DensityReport density = exact_losing_count(GameSpec::field(FieldSpec(2, 3, coeffs_from_mask(0xB))), 2);
    json dj = density_to_json(density);
    CHECK(dj["losing"] == 7);
    CHECK(dj["total"] == 49);
    CHECK(density_csv(density).find("7,") != std::string::npos);

    PeriodicityReport period = periodicity_check(GameSpec::numeric(4, {1}), {3}, 0, 16);
    json pj = periodicity_to_json(period);
    CHECK(pj["violations"].empty());
    CHECK(periodicity_csv(period).rfind("context,j,x,", 0) == 0);

    CompressionReport comp = compression_check(ChainSpec(15, 2), 8, 2);
    json cj = compression_to_json(comp);
    CHECK(cj["total"] == 64);
    CHECK(cj["counterexamples"].empty());

    auto rows = comparison_table(ChainSpec(15, 2), FieldSpec(2, 8, coeffs_from_mask(0x11B)), 6);
    CHECK(table_markdown(rows).find("| compression modulus | 4 | 255 | 6 |") != std::string::npos);
    CHECK(table_to_json(rows).size() == rows.size());

    auto scan = alignment_hypothesis_scan(4, 2, 20);
    std::string csv = alignment_scan_csv(scan);
    CHECK(csv.rfind("t,coprime,", 0) == 0);
    CHECK(alignment_row_to_json(scan.front())["t"] == 2);

    GameSpec m5 = GameSpec::numeric(5, {1});
    SgIndexing ix = SgIndexing::canonical(m5);
    auto entries = sg_multiplicativity_check(m5, {{Position{{6}}, Position{{7}}}}, ix);
    json ej = sg_mult_entry_to_json(entries.front());
    CHECK(ej["in_scope"] == true);
    CHECK(ej.contains("expected_product"));
    CHECK(ej.contains("boundary_flag"));
    CHECK(ej["pair"][0] == json::array({6}));
}
