// Command-line front end: analyze positions, list and apply moves, run the
// exhaustive verification suites, emit density/periodicity/scan artifacts,
// reproduce the comparison table, and play against the engine.
//
// Exit codes: 0 success, 1 verification violations, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pcg/analysis.hpp"
#include "pcg/chain.hpp"
#include "pcg/collapse.hpp"
#include "pcg/game.hpp"
#include "pcg/grundy.hpp"
#include "pcg/json_io.hpp"
#include "pcg/number_theory.hpp"
#include "pcg/verify.hpp"

namespace {

using namespace pcg;
using nlohmann::json;

std::vector<u64> parse_csv_u64(const std::string& text) {
    std::vector<u64> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (!item.empty()) values.push_back(std::stoull(item, nullptr, 0));
    }
    return values;
}

// Spec selection shared by the position-oriented subcommands.
struct SpecFlags {
    u64 numeric_m = 0;
    std::string losing = "1";
    bool permissive = false;
    std::string field_mask;
    std::string chain; // "N,G"

    void attach(CLI::App* cmd) {
        cmd->add_option("--numeric", numeric_m, "numeric game modulus m");
        cmd->add_option("--losing", losing, "losing residues, comma separated (default 1)");
        cmd->add_flag("--permissive", permissive, "allow non-unit heap labels (numeric only)");
        cmd->add_option("--field", field_mask, "field game: irreducible polynomial bitmask, e.g. 0x11B");
        cmd->add_option("--chain", chain, "chain game: N,G");
    }

    GameSpec make() const {
        int chosen = (numeric_m != 0) + !field_mask.empty() + !chain.empty();
        if (chosen != 1)
            throw error(errc::precondition_violated,
                        "choose exactly one of --numeric, --field, --chain");
        if (numeric_m != 0)
            return GameSpec::numeric(numeric_m, parse_csv_u64(losing), !permissive);
        if (!field_mask.empty()) {
            std::vector<u64> coeffs = coeffs_from_mask(std::stoull(field_mask, nullptr, 0));
            if (coeffs.size() < 2) throw error(errc::out_of_range, "field mask has degree 0");
            return GameSpec::field(FieldSpec(2, static_cast<unsigned>(coeffs.size() - 1), coeffs));
        }
        std::vector<u64> ng = parse_csv_u64(chain);
        if (ng.size() != 2) throw error(errc::precondition_violated, "--chain expects N,G");
        return GameSpec::chain(ng[0], ng[1]);
    }
};

void emit(const json& j, bool as_json, const std::string& human) {
    if (as_json) std::cout << canonical_dump(j) << "\n";
    else std::cout << human;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw error(errc::out_of_range, "cannot write " + path);
    out << content;
}

int run_analyze(const SpecFlags& flags, const std::string& heaps_csv, bool as_json) {
    GameSpec spec = flags.make();
    Position pos{parse_csv_u64(heaps_csv)};
    validate_position(spec, pos);

    u64 inv = invariant(spec, pos);
    RegionTag reg = region(spec, pos);
    bool losing = is_losing_predicate(spec, pos);
    // Predicate analysis always works; the game-tree outcome may be out of
    // reach (predicate-only spec, or a position beyond the search budget).
    std::string outcome_text;
    try {
        outcome_text = outcome_name(outcome(spec, pos));
    } catch (const error& e) {
        outcome_text = std::string("unavailable (") + e.what() + ")";
    }

    json j = position_to_json(spec, pos);
    j["invariant"] = inv;
    j["region"] = region_name(reg);
    j["losing_predicate"] = losing;
    j["outcome"] = outcome_text;

    std::ostringstream human;
    human << spec.describe() << " position " << canonical_dump(json(pos.heaps)) << "\n"
          << "  invariant: " << inv << "\n"
          << "  region:    " << region_name(reg) << "\n"
          << "  predicate: " << (losing ? "losing" : "not losing") << "\n"
          << "  outcome:   " << outcome_text << "\n";
    emit(j, as_json, human.str());
    return 0;
}

int run_moves(const SpecFlags& flags, const std::string& heaps_csv, bool as_json) {
    GameSpec spec = flags.make();
    Position pos{parse_csv_u64(heaps_csv)};
    std::vector<Move> moves = legal_moves(spec, pos);

    json j = json::array();
    std::ostringstream human;
    human << moves.size() << " legal move(s)\n";
    for (const Move& m : moves) {
        j.push_back(move_to_json(m));
        human << "  heap " << m.heap_index << ": " << pos.heaps[m.heap_index] << " -> " << m.new_value
              << "\n";
    }
    emit(j, as_json, human.str());
    return 0;
}

int run_repair(const SpecFlags& flags, const std::string& heaps_csv, bool as_json) {
    GameSpec spec = flags.make();
    Position pos{parse_csv_u64(heaps_csv)};
    Move move = repair_move(spec, pos);
    Position next = apply_move(spec, pos, move);

    json j;
    j["move"] = move_to_json(move);
    j["result"] = next.heaps;
    j["result_invariant"] = invariant(spec, next);

    std::ostringstream human;
    human << "repair: heap " << move.heap_index << ": " << pos.heaps[move.heap_index] << " -> "
          << move.new_value << ", landing on " << canonical_dump(json(next.heaps))
          << " (invariant " << invariant(spec, next) << ")\n";
    emit(j, as_json, human.str());
    return 0;
}

int run_normalize(const SpecFlags& flags, const std::string& heaps_csv, bool as_json) {
    GameSpec spec = flags.make();
    Position pos{parse_csv_u64(heaps_csv)};
    Position norm = normalize(spec, pos);

    json j;
    j["normalized"] = norm.heaps;
    j["invariant"] = invariant(spec, norm);

    std::ostringstream human;
    human << canonical_dump(json(pos.heaps)) << " normalizes to " << canonical_dump(json(norm.heaps))
          << " (invariant " << invariant(spec, norm) << ")\n";
    emit(j, as_json, human.str());
    return 0;
}

int run_grundy(const SpecFlags& flags, const std::string& heaps_csv, u64 table_bound, bool as_json) {
    GameSpec spec = flags.make();

    if (table_bound > 0) {
        // Classical Grundy values of single heaps, for inspection.
        GrundyOracle oracle(spec);
        json j = json::array();
        std::ostringstream human;
        human << "label: grundy\n";
        for (u64 v = 1; v <= table_bound; ++v) {
            if (!spec.label_ok(v)) continue;
            unsigned g = oracle.evaluate(Position{{v}});
            j.push_back({{"label", v}, {"grundy", g}});
            human << "  " << v << ": " << g << "\n";
        }
        emit(j, as_json, human.str());
        return 0;
    }

    Position pos{parse_csv_u64(heaps_csv)};

    json j;
    std::ostringstream human;
    if (region(spec, pos) == RegionTag::threshold && spec.singleton_losing_set() &&
        spec.losing_set()[0] == 1 && spec.unit_mode()) {
        SgIndexing ix = SgIndexing::canonical(spec);
        SgValue sg = product_sg(spec, pos, ix);
        SingleHoleResult hole = single_hole_check(spec, pos, ix);
        j["product_sg"] = {{"index", sg.idx}, {"element", sg.element}};
        j["single_hole"] = hole.holds;
        human << "product-SG: element " << sg.element << " (index " << sg.idx << "), single-hole "
              << (hole.holds ? "holds" : "fails") << "\n";
    } else {
        unsigned g = grundy_standard(spec, pos);
        j["grundy"] = g;
        human << "classical Grundy value: " << g << "\n";
    }
    emit(j, as_json, human.str());
    return 0;
}

int run_sgcheck(const SpecFlags& flags, const std::string& heaps_csv, const std::string& with_csv,
                bool as_json) {
    GameSpec spec = flags.make();
    Position first{parse_csv_u64(heaps_csv)};
    Position second{parse_csv_u64(with_csv)};
    SgIndexing ix = SgIndexing::canonical(spec);
    auto report = sg_multiplicativity_check(spec, {{first, second}}, ix);

    json j = json::array();
    std::ostringstream human;
    for (const SgMultEntry& entry : report) {
        j.push_back(sg_mult_entry_to_json(entry));
        if (!entry.in_scope) {
            human << "pair out of scope: both summands must be in the threshold region\n";
            continue;
        }
        human << "summands " << entry.value1.element << " x " << entry.value2.element
              << " -> expected product " << entry.expected_product << ", observed mex "
              << (entry.observed_mex ? std::to_string(entry.observed_mex->element) : "none")
              << ", single-hole " << (entry.summands_single_hole ? "holds" : "fails")
              << ", multiplicativity " << (entry.holds ? "holds" : "fails")
              << (entry.boundary_flag ? " [options crossed into the indeterminacy region]" : "")
              << "\n";
    }
    emit(j, as_json, human.str());
    bool all_hold = true;
    for (const SgMultEntry& entry : report) all_hold = all_hold && (!entry.in_scope || entry.holds);
    return all_hold ? 0 : 1;
}

int print_suites(const std::vector<SuiteResult>& suites, bool as_json) {
    bool all_passed = true;
    json j = json::array();
    for (const SuiteResult& s : suites) {
        all_passed = all_passed && s.passed();
        json entry;
        entry["suite"] = s.name;
        entry["box"] = s.box;
        entry["cases"] = s.cases;
        entry["violations"] = s.violations;
        entry["seconds"] = s.seconds;
        entry["passed"] = s.passed();
        j.push_back(entry);
        if (!as_json) {
            std::cout << (s.passed() ? "[PASS] " : "[FAIL] ") << s.name << ": " << s.cases
                      << " checks over " << s.box << " (" << s.seconds << "s)\n";
            for (const std::string& v : s.violations) std::cout << "       " << v << "\n";
        }
    }
    if (as_json) std::cout << canonical_dump(j) << "\n";
    return all_passed ? 0 : 1;
}

int run_verify(const std::string& suite, u64 N, u64 g, u64 bound, unsigned n, bool as_json) {
    const std::vector<u64> moduli{3, 4, 5, 6};
    const std::vector<u64> fields{0x7, 0xB, 0x13};
    std::vector<SuiteResult> suites;
    if (suite == "compression") suites.push_back(verify_compression(N, g, bound, n));
    else if (suite == "threshold") suites.push_back(verify_threshold_outcome(moduli, 2, 3));
    else if (suite == "repair") suites.push_back(verify_repair_blocking(moduli, 2, 3));
    else if (suite == "normalize") suites.push_back(verify_normalization(moduli, fields, 3));
    else if (suite == "singlehole") suites.push_back(verify_single_hole_sg(moduli, fields));
    else if (suite == "density") suites.push_back(verify_densities({0xB, 0x13, 0x11B}, 4, 400));
    else if (suite == "period") suites.push_back(verify_periodicity({2, 3, 4, 5, 6}, 2));
    else if (suite == "collapse") suites.push_back(verify_collapse(6, 3, 100));
    else if (suite == "field") suites.push_back(verify_aes_field());
    else if (suite == "all") suites = verify_all();
    else throw error(errc::out_of_range, "unknown suite '" + suite + "'");
    return print_suites(suites, as_json);
}

int run_density(const SpecFlags& flags, unsigned n, u64 bound, u64 samples, u64 seed,
                bool tree_count, bool as_json, const std::string& csv_path) {
    GameSpec spec = flags.make();
    DensityReport report;
    if (spec.variant() == Variant::field || bound == 0) {
        report = exact_losing_count(spec, n, 10'000'000, tree_count);
    } else if (samples > 0) {
        report = empirical_density_sampled(spec, n, bound, samples, seed);
    } else {
        report = empirical_density(spec, n, bound, tree_count);
    }
    if (!csv_path.empty()) write_file(csv_path, density_csv(report));

    std::ostringstream human;
    human << report.spec_description << " n=" << report.heap_count;
    if (report.bound > 0) human << " bound=" << report.bound;
    human << ": " << report.losing << "/" << report.total << " losing (ratio " << report.ratio()
          << ", predicted " << report.predicted_num << "/" << report.predicted_den << ")\n";
    if (report.expected_exact > 0)
        human << "  exact expectation " << report.expected_exact << ", constructive count "
              << report.constructive_losing << "\n";
    if (report.tree_p)
        human << "  game-tree P count over the same box: " << *report.tree_p << "\n";
    emit(density_to_json(report), as_json, human.str());
    return 0;
}

int run_period(const SpecFlags& flags, const std::string& context_csv, u64 x_max, bool as_json,
               const std::string& csv_path) {
    GameSpec spec = flags.make();
    std::vector<u64> context = parse_csv_u64(context_csv);
    if (x_max == 0) x_max = 4 * spec.modulus();
    PeriodicityReport report = periodicity_check(spec, context, context.size(), x_max);
    if (!csv_path.empty()) write_file(csv_path, periodicity_csv(report));

    std::ostringstream human;
    human << spec.describe() << " context " << canonical_dump(json(context)) << ", x in ["
          << report.x_min << "," << report.x_max << "]: " << report.violations.size()
          << " violation(s)\n";
    for (u64 x : report.violations) human << "  f(" << x << ") != f(" << x + spec.modulus() << ")\n";
    emit(periodicity_to_json(report), as_json, human.str());
    return report.violations.empty() ? 0 : 1;
}

int run_collapse(const std::string& mode, u64 m, u64 scan_from, u64 scan_bound,
                 const std::string& heaps_csv, size_t heap_index, u64 losing_residue, bool as_json,
                 const std::string& csv_path) {
    if (mode == "scan") {
        auto rows = alignment_hypothesis_scan(m, scan_from, scan_bound);
        if (!csv_path.empty()) write_file(csv_path, alignment_scan_csv(rows));
        json j = json::array();
        std::ostringstream human;
        u64 failures = 0;
        for (const auto& row : rows) {
            j.push_back(alignment_row_to_json(row));
            if (row.coprime && !row.generates) {
                ++failures;
                human << "  t=" << row.t << ": divisor units generate a subgroup of order "
                      << row.generated_subgroup_order << " only\n";
            }
        }
        std::ostringstream head;
        head << "alignment scan m=" << m << ", t in [" << scan_from << "," << scan_bound << "]: "
             << failures << " non-generating unit value(s)\n";
        emit(j, as_json, head.str() + human.str());
        return 0;
    }
    if (mode == "divisor") {
        std::vector<u64> heaps = parse_csv_u64(heaps_csv);
        DivisorCollapse result = divisor_collapse_check(m, heaps, heap_index);
        json j;
        j["reachable_units"] = std::vector<u64>(result.reachable_units.begin(),
                                                result.reachable_units.end());
        j["transitive"] = result.transitive;
        std::ostringstream human;
        human << "divisor game m=" << m << ", heap " << heap_index << " of "
              << canonical_dump(json(heaps)) << ": " << result.reachable_units.size()
              << " reachable unit(s), transitive " << (result.transitive ? "yes" : "no") << "\n";
        emit(j, as_json, human.str());
        return 0;
    }
    if (mode == "additive") {
        std::vector<u64> heaps = parse_csv_u64(heaps_csv);
        AdditiveGameSpec spec(m, losing_residue);
        AdditiveReach reach = additive_reach_check(spec, heaps, heap_index);
        Outcome out = additive_outcome(spec, heaps);
        json j;
        j["reachable"] = std::vector<u64>(reach.reachable.begin(), reach.reachable.end());
        j["covers_all"] = reach.covers_all;
        j["outcome"] = outcome_name(out);
        std::ostringstream human;
        human << "additive game m=" << m << " s=" << losing_residue << ", heap " << heap_index
              << " of " << canonical_dump(json(heaps)) << ": covers "
              << reach.reachable.size() + 1 << "/" << m << " residues, outcome " << outcome_name(out)
              << "\n";
        emit(j, as_json, human.str());
        return 0;
    }
    throw error(errc::out_of_range, "unknown collapse mode '" + mode + "'");
}

int run_chain(u64 N, u64 g, const std::string& heaps_csv, bool as_json) {
    ChainSpec spec(N, g);
    std::vector<u64> heaps = parse_csv_u64(heaps_csv);
    u64 tower = evaluate_chain(spec, heaps);
    FlattenResult flat = flatten_exponent(spec, heaps);
    CrtLosingCheck crt = crt_losing_check(spec, heaps);

    json j;
    j["spec"] = {{"N", spec.N}, {"g", spec.g}, {"k", spec.order}};
    j["heaps"] = heaps;
    j["tower_value"] = tower;
    j["flattened_exponent"] = flat.value;
    j["flatten_reduced"] = flat.reduced;
    j["losing"] = crt.overall;
    j["component_moduli"] = crt.component_moduli;
    j["per_component"] = crt.per_component;

    std::ostringstream human;
    human << spec.describe() << " heaps " << canonical_dump(json(heaps)) << "\n"
          << "  tower value:     " << tower << (tower == spec.g ? "  (= g, losing)" : "") << "\n"
          << "  flat exponent:   " << flat.value << (flat.reduced ? " (reduced mod k)" : "") << "\n"
          << "  losing verdict:  " << (crt.overall ? "yes" : "no") << "\n";
    for (size_t i = 0; i < crt.component_moduli.size(); ++i)
        human << "    mod " << crt.component_moduli[i] << ": "
              << (crt.per_component[i] ? "1 (losing)" : "not 1") << "\n";
    emit(j, as_json, human.str());
    return 0;
}

int run_table(u64 N, u64 g, const std::string& field_mask, u64 m, bool as_json) {
    ChainSpec chain(N, g);
    std::vector<u64> coeffs = coeffs_from_mask(std::stoull(field_mask, nullptr, 0));
    FieldSpec field(2, static_cast<unsigned>(coeffs.size() - 1), coeffs);
    auto rows = comparison_table(chain, field, m);
    emit(table_to_json(rows), as_json, table_markdown(rows));
    return 0;
}

int run_play(const SpecFlags& flags, const std::string& heaps_csv, bool engine_first) {
    GameSpec spec = flags.make();
    Position pos{parse_csv_u64(heaps_csv)};
    validate_position(spec, pos);
    OutcomeOracle oracle(spec);
    oracle.evaluate(pos); // budget check up front

    std::cout << "playing " << spec.describe() << " from " << canonical_dump(json(pos.heaps))
              << "; reach a position where your opponent cannot move\n"
              << "enter moves as: HEAP_INDEX NEW_VALUE\n";

    bool engines_turn = engine_first;
    std::vector<std::string> transcript;
    while (true) {
        std::cout << "position " << canonical_dump(json(pos.heaps)) << " (invariant "
                  << invariant(spec, pos) << ", " << region_name(region(spec, pos)) << ")\n";
        std::vector<Move> moves = legal_moves(spec, pos);
        if (moves.empty()) {
            const char* loser = engines_turn ? "engine" : "you";
            const char* winner = engines_turn ? "you" : "engine";
            std::cout << loser << " cannot move; " << winner << " win(s)\n";
            transcript.push_back(std::string("winner: ") + winner);
            break;
        }
        if (engines_turn) {
            Move choice = engine_move(spec, pos, oracle);
            std::cout << "engine: heap " << choice.heap_index << ": " << pos.heaps[choice.heap_index]
                      << " -> " << choice.new_value << "\n";
            transcript.push_back("engine: heap " + std::to_string(choice.heap_index) + " -> " +
                                 std::to_string(choice.new_value));
            pos = apply_move(spec, pos, choice);
        } else {
            std::cout << "your move> " << std::flush;
            size_t heap_index;
            u64 new_value;
            if (!(std::cin >> heap_index >> new_value)) {
                std::cout << "\nno input; stopping\n";
                return 0;
            }
            Move move{heap_index, new_value};
            if (!move_legal(spec, pos, move)) {
                std::cout << "illegal move (strict decrease to a legal label that changes the "
                             "residue); try again\n";
                continue;
            }
            transcript.push_back("human: heap " + std::to_string(move.heap_index) + " -> " +
                                 std::to_string(move.new_value));
            pos = apply_move(spec, pos, move);
        }
        engines_turn = !engines_turn;
    }
    std::cout << "transcript:\n";
    for (const std::string& line : transcript) std::cout << "  " << line << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"product-congruence game laboratory"};
    app.require_subcommand(1);
    bool as_json = false;

    SpecFlags spec_flags;
    std::string heaps_csv;
    std::string csv_path;

    auto* analyze = app.add_subcommand("analyze", "classify a position");
    spec_flags.attach(analyze);
    analyze->add_option("--heaps", heaps_csv, "heap values, comma separated")->required();

    auto* moves = app.add_subcommand("moves", "list legal moves");
    moves->add_option("--heaps", heaps_csv, "heap values")->required();

    auto* repair = app.add_subcommand("repair", "one-move repair to a losing position");
    repair->add_option("--heaps", heaps_csv, "heap values")->required();

    auto* normalize_cmd = app.add_subcommand("normalize", "compress to one heap, same invariant");
    normalize_cmd->add_option("--heaps", heaps_csv, "heap values")->required();

    u64 grundy_table = 0;
    auto* grundy_cmd = app.add_subcommand("grundy", "product-SG (threshold) or classical Grundy");
    grundy_cmd->add_option("--heaps", heaps_csv, "heap values");
    grundy_cmd->add_option("--table", grundy_table, "print single-heap Grundy values up to this label");

    std::string with_csv;
    auto* sgcheck = app.add_subcommand("sgcheck", "SG multiplicativity for one pair of positions");
    spec_flags.attach(sgcheck);
    sgcheck->add_option("--heaps", heaps_csv, "first summand")->required();
    sgcheck->add_option("--with", with_csv, "second summand")->required();

    std::string suite;
    u64 chain_N = 15, chain_g = 2, bound = 8;
    unsigned heap_count = 3;
    auto* verify_cmd = app.add_subcommand("verify", "run an exhaustive verification suite");
    verify_cmd
        ->add_option("suite", suite,
                     "compression|threshold|repair|normalize|singlehole|density|period|collapse|"
                     "field|all")
        ->required();
    verify_cmd->add_option("--N", chain_N, "chain modulus (compression suite)");
    verify_cmd->add_option("--g", chain_g, "chain generator (compression suite)");
    verify_cmd->add_option("--bound", bound, "heap bound (compression suite)");
    verify_cmd->add_option("--n", heap_count, "max heap count (compression suite)");

    unsigned density_n = 2;
    u64 density_bound = 0, samples = 0, seed = 0;
    bool tree_count = false;
    auto* density = app.add_subcommand("density", "losing density, exact or empirical");
    density->add_option("--n", density_n, "heap count");
    density->add_option("--bound", density_bound, "label bound (0 = exact count over one period)");
    density->add_option("--sample", samples, "Monte Carlo sample count (0 = exhaustive)");
    density->add_option("--seed", seed, "sampling seed");
    density->add_flag("--tree-count", tree_count, "also count game-tree P positions over the box");
    density->add_option("--csv", csv_path, "write CSV to this path");

    std::string context_csv;
    u64 x_max = 0;
    auto* period = app.add_subcommand("period", "per-coordinate ultimate periodicity");
    period->add_option("--context", context_csv, "fixed heaps, comma separated");
    period->add_option("--x-max", x_max, "largest x compared (default 4m)");
    period->add_option("--csv", csv_path, "write CSV to this path");

    std::string collapse_mode = "scan";
    u64 collapse_m = 4, scan_from = 2, scan_bound = 100, losing_residue = 0;
    size_t heap_index = 0;
    auto* collapse_cmd = app.add_subcommand("collapse", "aligned toy games and the alignment scan");
    collapse_cmd->add_option("--mode", collapse_mode, "scan|divisor|additive");
    collapse_cmd->add_option("--m", collapse_m, "modulus")->required();
    collapse_cmd->add_option("--from", scan_from, "scan start (scan mode)");
    collapse_cmd->add_option("--bound", scan_bound, "scan end (scan mode)");
    collapse_cmd->add_option("--heaps", heaps_csv, "heaps (divisor/additive modes)");
    collapse_cmd->add_option("--j", heap_index, "acting heap index");
    collapse_cmd->add_option("--s", losing_residue, "losing sum residue (additive mode)");
    collapse_cmd->add_option("--csv", csv_path, "write CSV to this path (scan mode)");

    auto* chain_cmd = app.add_subcommand("chain", "evaluate an exponent tower");
    chain_cmd->add_option("--N", chain_N, "modulus")->required();
    chain_cmd->add_option("--g", chain_g, "generator")->required();
    chain_cmd->add_option("--heaps", heaps_csv, "exponents, comma separated")->required();

    std::string field_mask = "0x11B";
    u64 table_m = 6;
    auto* table_cmd = app.add_subcommand("table", "chain/field/numeric comparison table");
    table_cmd->add_option("--N", chain_N, "chain modulus");
    table_cmd->add_option("--g", chain_g, "chain generator");
    table_cmd->add_option("--field", field_mask, "field polynomial bitmask");
    table_cmd->add_option("--m", table_m, "numeric modulus");

    bool engine_first = false;
    auto* play = app.add_subcommand("play", "interactive game against the engine");
    spec_flags.attach(play);
    play->add_option("--heaps", heaps_csv, "starting heaps")->required();
    play->add_flag("--engine-first", engine_first, "engine moves first");

    for (CLI::App* cmd : {moves, repair, normalize_cmd, grundy_cmd, density, period})
        spec_flags.attach(cmd);
    for (CLI::App* cmd : {analyze, moves, repair, normalize_cmd, grundy_cmd, sgcheck, verify_cmd,
                          density, period, collapse_cmd, chain_cmd, table_cmd})
        cmd->add_flag("--json", as_json, "machine-readable JSON output");

    try {
        app.parse(argc, argv);
        if (analyze->parsed()) return run_analyze(spec_flags, heaps_csv, as_json);
        if (moves->parsed()) return run_moves(spec_flags, heaps_csv, as_json);
        if (repair->parsed()) return run_repair(spec_flags, heaps_csv, as_json);
        if (normalize_cmd->parsed()) return run_normalize(spec_flags, heaps_csv, as_json);
        if (grundy_cmd->parsed()) return run_grundy(spec_flags, heaps_csv, grundy_table, as_json);
        if (sgcheck->parsed()) return run_sgcheck(spec_flags, heaps_csv, with_csv, as_json);
        if (verify_cmd->parsed()) return run_verify(suite, chain_N, chain_g, bound, heap_count, as_json);
        if (density->parsed())
            return run_density(spec_flags, density_n, density_bound, samples, seed, tree_count,
                               as_json, csv_path);
        if (period->parsed()) return run_period(spec_flags, context_csv, x_max, as_json, csv_path);
        if (collapse_cmd->parsed())
            return run_collapse(collapse_mode, collapse_m, scan_from, scan_bound, heaps_csv,
                                heap_index, losing_residue, as_json, csv_path);
        if (chain_cmd->parsed()) return run_chain(chain_N, chain_g, heaps_csv, as_json);
        if (table_cmd->parsed()) return run_table(chain_N, chain_g, field_mask, table_m, as_json);
        if (play->parsed()) return run_play(spec_flags, heaps_csv, engine_first);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const pcg::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
