#include "pcg/json_io.hpp"

#include <sstream>

namespace pcg {

using nlohmann::json;

namespace {

u64 parse_mask(const std::string& text) {
    return std::stoull(text, nullptr, 0); // accepts 0x..., decimal
}

std::string mask_string(u64 mask) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "0x%llX", static_cast<unsigned long long>(mask));
    return buf;
}

} // namespace

json spec_to_json(const GameSpec& spec) {
    json j;
    switch (spec.variant()) {
    case Variant::numeric:
        j["variant"] = "numeric";
        j["m"] = spec.modulus();
        j["losing"] = spec.losing_set();
        j["unit_mode"] = spec.unit_mode();
        break;
    case Variant::field: {
        const FieldSpec& f = spec.field_spec();
        j["variant"] = "field";
        j["p"] = f.p();
        j["n"] = f.degree();
        if (f.p() == 2) j["irreducible"] = mask_string(f.irreducible_mask());
        else j["irreducible"] = f.irreducible();
        j["q"] = f.q();
        break;
    }
    case Variant::chain:
        j["variant"] = "chain";
        j["N"] = spec.chain_modulus_N();
        j["g"] = spec.chain_generator();
        j["k"] = spec.modulus();
        break;
    }
    return j;
}

GameSpec spec_from_json(const json& j) {
    std::string variant = j.at("variant").get<std::string>();
    if (variant == "numeric") {
        return GameSpec::numeric(j.at("m").get<u64>(), j.at("losing").get<std::vector<u64>>(),
                                 j.value("unit_mode", true));
    }
    if (variant == "field") {
        u64 p = j.at("p").get<u64>();
        unsigned n = j.at("n").get<unsigned>();
        std::vector<u64> coeffs;
        const json& irr = j.at("irreducible");
        if (irr.is_string()) coeffs = coeffs_from_mask(parse_mask(irr.get<std::string>()));
        else coeffs = irr.get<std::vector<u64>>();
        return GameSpec::field(FieldSpec(p, n, std::move(coeffs)));
    }
    if (variant == "chain") {
        return GameSpec::chain(j.at("N").get<u64>(), j.at("g").get<u64>());
    }
    throw error(errc::out_of_range, "unknown spec variant '" + variant + "'");
}

json position_to_json(const GameSpec& spec, const Position& pos) {
    json j;
    j["spec"] = spec_to_json(spec);
    j["heaps"] = pos.heaps;
    return j;
}

std::pair<GameSpec, Position> position_from_json(const json& j) {
    GameSpec spec = spec_from_json(j.at("spec"));
    Position pos{j.at("heaps").get<std::vector<u64>>()};
    validate_position(spec, pos);
    return {std::move(spec), std::move(pos)};
}

json move_to_json(const Move& move) {
    return json{{"heap", move.heap_index}, {"to", move.new_value}};
}

Move move_from_json(const json& j) {
    return Move{j.at("heap").get<size_t>(), j.at("to").get<u64>()};
}

json density_to_json(const DensityReport& r) {
    json j;
    j["spec"] = r.spec_description;
    j["n"] = r.heap_count;
    j["bound"] = r.bound;
    j["total"] = r.total;
    j["losing"] = r.losing;
    j["ratio"] = r.ratio();
    j["predicted"] = {{"num", r.predicted_num}, {"den", r.predicted_den}};
    if (r.expected_exact > 0) {
        j["expected_exact"] = r.expected_exact;
        j["constructive_losing"] = r.constructive_losing;
    }
    if (r.tree_p) j["tree_p_count"] = *r.tree_p;
    return j;
}

json periodicity_to_json(const PeriodicityReport& r) {
    json rows = json::array();
    for (const PeriodicityRow& row : r.rows) {
        rows.push_back({{"x", row.x},
                        {"outcome_x", outcome_name(row.outcome_x)},
                        {"outcome_x_plus_m", outcome_name(row.outcome_x_plus_m)},
                        {"equal", row.equal()}});
    }
    return json{{"context", r.context}, {"insert_at", r.insert_at}, {"x_min", r.x_min},
                {"x_max", r.x_max},     {"rows", rows},             {"violations", r.violations}};
}

json sg_mult_entry_to_json(const SgMultEntry& e) {
    json j;
    j["pair"] = {e.pos1.heaps, e.pos2.heaps};
    j["in_scope"] = e.in_scope;
    if (e.in_scope) {
        j["summand_values"] = {e.value1.element, e.value2.element};
        j["expected_product"] = e.expected_product;
        if (e.observed_mex) j["observed_mex"] = e.observed_mex->element;
        j["holds"] = e.holds;
        j["boundary_flag"] = e.boundary_flag;
    }
    return j;
}

json compression_to_json(const CompressionReport& r) {
    json j;
    j["spec"] = {{"N", r.spec.N}, {"g", r.spec.g}, {"k", r.spec.order}};
    j["bound"] = r.bound;
    j["n"] = r.heap_count;
    j["total"] = r.total;
    j["losing_count"] = r.losing;
    j["counterexamples"] = r.counterexamples;
    return j;
}

json alignment_row_to_json(const AlignmentScanRow& row) {
    return json{{"t", row.t},
                {"coprime", row.coprime},
                {"generated_subgroup_order", row.generated_subgroup_order},
                {"generates", row.generates}};
}

json table_to_json(const std::vector<TableRow>& rows) {
    json j = json::array();
    for (const TableRow& r : rows)
        j.push_back({{"feature", r.feature},
                     {"chain", r.chain_value},
                     {"field", r.field_value},
                     {"numeric", r.numeric_value}});
    return j;
}

std::string canonical_dump(const json& j) { return j.dump(); }

std::string density_csv(const DensityReport& r) {
    std::ostringstream out;
    out << "spec,n,bound,total,losing,ratio,predicted\n";
    out << '"' << r.spec_description << "\"," << r.heap_count << ',' << r.bound << ',' << r.total
        << ',' << r.losing << ',' << r.ratio() << ',' << r.predicted_num << '/' << r.predicted_den
        << '\n';
    return out.str();
}

std::string periodicity_csv(const PeriodicityReport& r) {
    std::ostringstream out;
    out << "context,j,x,outcome_x,outcome_x_plus_m,equal\n";
    std::string ctx;
    for (size_t i = 0; i < r.context.size(); ++i) ctx += (i ? " " : "") + std::to_string(r.context[i]);
    for (const PeriodicityRow& row : r.rows) {
        out << '"' << ctx << "\"," << r.insert_at << ',' << row.x << ',' << outcome_name(row.outcome_x)
            << ',' << outcome_name(row.outcome_x_plus_m) << ',' << (row.equal() ? "true" : "false")
            << '\n';
    }
    return out.str();
}

std::string alignment_scan_csv(const std::vector<AlignmentScanRow>& rows) {
    std::ostringstream out;
    out << "t,coprime,generated_subgroup_order,generates\n";
    for (const AlignmentScanRow& row : rows) {
        out << row.t << ',' << (row.coprime ? "true" : "false") << ',' << row.generated_subgroup_order
            << ',' << (row.generates ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string table_markdown(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "| feature | exponent chain | field | numeric |\n";
    out << "|---|---|---|---|\n";
    for (const TableRow& r : rows)
        out << "| " << r.feature << " | " << r.chain_value << " | " << r.field_value << " | "
            << r.numeric_value << " |\n";
    return out.str();
}

} // namespace pcg
