#include "pcg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "pcg/analysis.hpp"
#include "pcg/chain.hpp"
#include "pcg/collapse.hpp"
#include "pcg/grundy.hpp"

namespace pcg {

namespace {

class Stopwatch {
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string heap_string(const std::vector<u64>& heaps) {
    std::string out = "(";
    for (size_t i = 0; i < heaps.size(); ++i) out += (i ? "," : "") + std::to_string(heaps[i]);
    return out + ")";
}

std::vector<u64> labels_up_to(const GameSpec& spec, u64 cap) {
    std::vector<u64> labels;
    for (u64 v = 1; v <= cap; ++v)
        if (spec.label_ok(v)) labels.push_back(v);
    return labels;
}

template <typename Visit>
void for_each_position(const std::vector<u64>& labels, unsigned n, Visit visit) {
    std::vector<size_t> idx(n, 0);
    while (true) {
        Position pos;
        pos.heaps.reserve(n);
        for (size_t i : idx) pos.heaps.push_back(labels[i]);
        visit(pos);
        size_t i = 0;
        while (i < n && ++idx[i] == labels.size()) idx[i++] = 0;
        if (i == n) break;
    }
}

std::vector<Position> threshold_positions(const GameSpec& spec, const std::vector<u64>& labels,
                                          unsigned min_heaps, unsigned max_heaps) {
    std::vector<Position> out;
    for (unsigned n = min_heaps; n <= max_heaps; ++n) {
        for_each_position(labels, n, [&](const Position& pos) {
            if (region(spec, pos) == RegionTag::threshold) out.push_back(pos);
        });
    }
    return out;
}

} // namespace

SuiteResult verify_compression(u64 N, u64 g, u64 bound, unsigned heap_count) {
    Stopwatch timer;
    ChainSpec spec(N, g);
    SuiteResult result;
    result.name = "compression";
    result.box = spec.describe() + ", all heap vectors in [1," + std::to_string(bound) + "]^" +
                 std::to_string(heap_count);
    CompressionReport report = compression_check(spec, bound, heap_count);
    result.cases = report.total;
    for (const auto& cx : report.counterexamples)
        result.violations.push_back(heap_string(cx) + ": tower and product verdicts disagree");
    result.seconds = timer.seconds();
    return result;
}

SuiteResult verify_threshold_outcome(const std::vector<u64>& moduli, unsigned min_heaps,
                                     unsigned max_heaps, u64 label_cap_factor) {
    Stopwatch timer;
    SuiteResult result;
    result.name = "threshold-outcome";
    {
        std::ostringstream box;
        box << "unit-mode PCG(m,{1}) for m in {";
        for (size_t i = 0; i < moduli.size(); ++i) box << (i ? "," : "") << moduli[i];
        box << "}, n in [" << min_heaps << "," << max_heaps << "], heaps <= " << label_cap_factor
            << "m, Threshold positions only";
        result.box = box.str();
    }
    for (u64 m : moduli) {
        GameSpec spec = GameSpec::numeric(m, {1});
        OutcomeOracle oracle(spec);
        std::vector<u64> labels = labels_up_to(spec, label_cap_factor * m);
        for (const Position& pos : threshold_positions(spec, labels, min_heaps, max_heaps)) {
            ++result.cases;
            Outcome fast = outcome(spec, pos);
            Outcome truth = oracle.evaluate(pos);
            if (fast != truth)
                result.violations.push_back("m=" + std::to_string(m) + " " + heap_string(pos.heaps) +
                                            ": classifier=" + outcome_name(fast) +
                                            " oracle=" + outcome_name(truth));
        }
    }
    result.seconds = timer.seconds();
    return result;
}

SuiteResult verify_repair_blocking(const std::vector<u64>& moduli, unsigned min_heaps,
                                   unsigned max_heaps, u64 label_cap_factor) {
    Stopwatch timer;
    SuiteResult result;
    result.name = "repair-blocking";
    result.box = "unit-mode PCG(m,{1}), heaps <= " + std::to_string(label_cap_factor) +
                 "m, n in [" + std::to_string(min_heaps) + "," + std::to_string(max_heaps) +
                 "], Threshold positions";
    for (u64 m : moduli) {
        GameSpec spec = GameSpec::numeric(m, {1});
        std::vector<u64> labels = labels_up_to(spec, label_cap_factor * m);
        for (const Position& pos : threshold_positions(spec, labels, min_heaps, max_heaps)) {
            ++result.cases;
            std::string tag = "m=" + std::to_string(m) + " " + heap_string(pos.heaps);
            if (is_losing_predicate(spec, pos)) {
                // Blocking: no option may stay in the losing set.
                for (const Move& move : legal_moves(spec, pos)) {
                    if (is_losing_predicate(spec, apply_move(spec, pos, move)))
                        result.violations.push_back(tag + ": losing option " +
                                                    std::to_string(move.heap_index) + "->" +
                                                    std::to_string(move.new_value));
                }
            } else {
                try {
                    Move move = repair_move(spec, pos);
                    if (!move_legal(spec, pos, move))
                        result.violations.push_back(tag + ": repair move is illegal");
                    else if (pos.heaps[move.heap_index] < spec.threshold_value())
                        result.violations.push_back(tag + ": repair acted below the threshold");
                    else if (!is_losing_predicate(spec, apply_move(spec, pos, move)))
                        result.violations.push_back(tag + ": repair landed on a non-losing position");
                } catch (const error& e) {
                    result.violations.push_back(tag + ": repair failed (" + e.what() + ")");
                }
            }
        }
    }
    result.seconds = timer.seconds();
    return result;
}

SuiteResult verify_normalization(const std::vector<u64>& moduli, const std::vector<u64>& field_masks,
                                 unsigned max_heaps, u64 label_cap_factor) {
    Stopwatch timer;
    SuiteResult result;
    result.name = "normalization";
    result.box = "unit-mode numeric boxes (heaps <= " + std::to_string(label_cap_factor) +
                 "m) and field games, n in [1," + std::to_string(max_heaps) + "]";

    auto check_spec = [&](const GameSpec& spec, const std::vector<u64>& labels) {
        for (unsigned n = 1; n <= max_heaps; ++n) {
            for_each_position(labels, n, [&](const Position& pos) {
                ++result.cases;
                std::string tag = spec.describe() + " " + heap_string(pos.heaps);
                Position norm = normalize(spec, pos);
                if (norm.heaps.size() != 1) {
                    result.violations.push_back(tag + ": normalize did not return one heap");
                    return;
                }
                if (invariant(spec, norm) != invariant(spec, pos))
                    result.violations.push_back(tag + ": normalize changed the invariant");
                if (is_losing_predicate(spec, norm) != is_losing_predicate(spec, pos))
                    result.violations.push_back(tag + ": normalize changed the predicate");
                // One-move repair from the normalized form of a non-losing
                // Indeterminacy position.
                if (region(spec, pos) == RegionTag::indeterminacy && !is_losing_predicate(spec, pos)) {
                    auto move = losing_option(spec, norm);
                    if (!move)
                        result.violations.push_back(tag + ": no one-move repair from " +
                                                    heap_string(norm.heaps));
                }
            });
        }
    };

    for (u64 m : moduli) {
        GameSpec spec = GameSpec::numeric(m, {1});
        check_spec(spec, labels_up_to(spec, label_cap_factor * m));
    }
    for (u64 mask : field_masks) {
        std::vector<u64> coeffs = coeffs_from_mask(mask);
        GameSpec spec = GameSpec::field(FieldSpec(2, static_cast<unsigned>(coeffs.size() - 1), coeffs));
        check_spec(spec, labels_up_to(spec, spec.field_spec().q() - 1));
    }
    result.seconds = timer.seconds();
    return result;
}

SuiteResult verify_single_hole_sg(const std::vector<u64>& moduli, const std::vector<u64>& field_masks,
                                  u64 label_cap_factor) {
    Stopwatch timer;
    SuiteResult result;
    result.name = "single-hole-sg";
    result.box = "single-hole on Threshold positions with 1..3 heaps (numeric heaps <= " +
                 std::to_string(label_cap_factor) +
                 "m; field labels <= q-1); multiplicativity over all pairs of 1..2-heap summands";

    auto check_spec = [&](const GameSpec& spec, const std::vector<u64>& labels) {
        SgIndexing ix = SgIndexing::canonical(spec);
        for (const Position& pos : threshold_positions(spec, labels, 1, 3)) {
            ++result.cases;
            SingleHoleResult hole = single_hole_check(spec, pos, ix);
            if (!hole.holds)
                result.violations.push_back(spec.describe() + " " + heap_string(pos.heaps) +
                                            ": single-hole fails (" +
                                            std::to_string(hole.missing.size()) + " holes)");
        }
        std::vector<Position> positions = threshold_positions(spec, labels, 1, 2);
        std::vector<std::pair<Position, Position>> pairs;
        pairs.reserve(positions.size() * positions.size());
        for (const Position& a : positions)
            for (const Position& b : positions) pairs.emplace_back(a, b);
        for (const SgMultEntry& entry : sg_multiplicativity_check(spec, pairs, ix)) {
            if (!entry.in_scope) continue;
            ++result.cases;
            if (!entry.holds) {
                std::string mex = entry.observed_mex
                                      ? std::to_string(entry.observed_mex->element)
                                      : std::string("none");
                result.violations.push_back(
                    spec.describe() + " " + heap_string(entry.pos1.heaps) + "+" +
                    heap_string(entry.pos2.heaps) + ": expected " +
                    std::to_string(entry.expected_product) + ", mex " + mex +
                    (entry.boundary_flag ? " [boundary]" : ""));
            }
        }
    };

    for (u64 m : moduli) {
        GameSpec spec = GameSpec::numeric(m, {1});
        check_spec(spec, labels_up_to(spec, label_cap_factor * m));
    }
    for (u64 mask : field_masks) {
        std::vector<u64> coeffs = coeffs_from_mask(mask);
        GameSpec spec = GameSpec::field(FieldSpec(2, static_cast<unsigned>(coeffs.size() - 1), coeffs));
        check_spec(spec, labels_up_to(spec, spec.field_spec().q() - 1));
    }
    result.seconds = timer.seconds();
    return result;
}

SuiteResult verify_densities(const std::vector<u64>& field_masks, u64 numeric_m, u64 numeric_bound,
                             double tolerance) {
    Stopwatch timer;
    SuiteResult result;
    result.name = "densities";
    result.box = "exact counts for the listed fields (n=1,2); empirical numeric m=" +
                 std::to_string(numeric_m) + " up to bound " + std::to_string(numeric_bound);

    for (u64 mask : field_masks) {
        std::vector<u64> coeffs = coeffs_from_mask(mask);
        GameSpec spec = GameSpec::field(FieldSpec(2, static_cast<unsigned>(coeffs.size() - 1), coeffs));
        for (unsigned n = 1; n <= 2; ++n) {
            ++result.cases;
            DensityReport report = exact_losing_count(spec, n);
            if (report.losing != report.expected_exact)
                result.violations.push_back(spec.describe() + " n=" + std::to_string(n) + ": " +
                                            std::to_string(report.losing) + " losing, expected " +
                                            std::to_string(report.expected_exact));
            if (report.constructive_losing != report.expected_exact)
                result.violations.push_back(spec.describe() + " n=" + std::to_string(n) +
                                            ": constructive count " +
                                            std::to_string(report.constructive_losing) +
                                            " != " + std::to_string(report.expected_exact));
        }
    }

    GameSpec numeric = GameSpec::numeric(numeric_m, {1});
    DensityReport report = empirical_density(numeric, 2, numeric_bound);
    ++result.cases;
    double predicted = report.predicted();
    if (std::abs(report.ratio() - predicted) > tolerance * predicted)
        result.violations.push_back(numeric.describe() + " bound=" + std::to_string(numeric_bound) +
                                    ": ratio " + std::to_string(report.ratio()) + " not within " +
                                    std::to_string(tolerance * 100) + "% of " +
                                    std::to_string(predicted));
    result.seconds = timer.seconds();
    return result;
}

SuiteResult verify_periodicity(const std::vector<u64>& moduli, unsigned max_context) {
    Stopwatch timer;
    SuiteResult result;
    result.name = "periodicity";
    result.box = "unit-mode PCG(m,{1}), contexts over labels < m of size 0.." +
                 std::to_string(max_context) + ", x in [m, 4m]";

    for (u64 m : moduli) {
        GameSpec spec = GameSpec::numeric(m, {1});
        OutcomeOracle oracle(spec);
        std::vector<u64> context_labels = labels_up_to(spec, m - 1);

        std::vector<std::vector<u64>> contexts = {{}};
        for (unsigned size = 1; size <= max_context; ++size) {
            std::vector<std::vector<u64>> next;
            for (const auto& ctx : contexts) {
                if (ctx.size() != size - 1) continue;
                for (u64 label : context_labels) {
                    auto grown = ctx;
                    grown.push_back(label);
                    next.push_back(grown);
                }
            }
            contexts.insert(contexts.end(), next.begin(), next.end());
        }

        for (const auto& ctx : contexts) {
            PeriodicityReport report = periodicity_check(spec, ctx, ctx.size(), 4 * m, &oracle);
            result.cases += report.rows.size();
            for (u64 x : report.violations)
                result.violations.push_back("m=" + std::to_string(m) + " context " + heap_string(ctx) +
                                            " x=" + std::to_string(x) + ": f(x) != f(x+m)");
        }
    }
    result.seconds = timer.seconds();
    return result;
}

SuiteResult verify_collapse(u64 max_modulus, unsigned max_heaps, u64 scan_bound) {
    Stopwatch timer;
    SuiteResult result;
    result.name = "collapse";
    result.box = "additive coverage for m <= " + std::to_string(max_modulus) + ", n <= " +
                 std::to_string(max_heaps) + ", heaps <= 3m; divisor transitivity for t <= " +
                 std::to_string(scan_bound) + "; alignment scan at m=4";

    // Additive game: one heap at or above m covers every sum residue.
    for (u64 m = 2; m <= max_modulus; ++m) {
        AdditiveGameSpec spec(m, 0);
        std::vector<u64> labels;
        for (u64 v = 1; v <= 3 * m; ++v) labels.push_back(v);
        for (unsigned n = 1; n <= max_heaps; ++n) {
            for_each_position(labels, n, [&](const Position& pos) {
                for (size_t j = 0; j < pos.heaps.size(); ++j) {
                    if (pos.heaps[j] < m) continue;
                    ++result.cases;
                    AdditiveReach reach = additive_reach_check(spec, pos.heaps, j);
                    if (!reach.covers_all)
                        result.violations.push_back("additive m=" + std::to_string(m) + " " +
                                                    heap_string(pos.heaps) + " j=" + std::to_string(j) +
                                                    ": residues not covered");
                }
            });
        }
    }

    // Divisor game: transitivity exactly when the one-move units generate.
    for (u64 m = 3; m <= max_modulus; ++m) {
        for (u64 t = 2; t <= scan_bound; ++t) {
            if (gcd(t % m, m) != 1) continue;
            ++result.cases;
            bool hypothesis = generates_group(divisor_move_units(t, m).units, m);
            DivisorCollapse single = divisor_collapse_check(m, {t}, 0);
            DivisorCollapse in_context = divisor_collapse_check(m, {t, 1}, 0);
            if (single.transitive != hypothesis || in_context.transitive != hypothesis)
                result.violations.push_back("divisor m=" + std::to_string(m) + " t=" +
                                            std::to_string(t) + ": transitive != generates");
        }
    }

    // The divisor hypothesis is non-vacuous: primes = 1 (mod 4) fail at m=4.
    bool any_failure = false;
    for (const AlignmentScanRow& row : alignment_hypothesis_scan(4, 2, scan_bound)) {
        if (row.coprime && !row.generates) any_failure = true;
        if (row.coprime && is_prime(row.t) && row.t % 4 == 1 && row.generates)
            result.violations.push_back("alignment m=4 t=" + std::to_string(row.t) +
                                        ": prime 1 mod 4 unexpectedly generates");
        ++result.cases;
    }
    if (!any_failure)
        result.violations.push_back("alignment m=4: no failures found, hypothesis looks vacuous");

    result.seconds = timer.seconds();
    return result;
}

SuiteResult verify_aes_field() {
    Stopwatch timer;
    SuiteResult result;
    result.name = "aes-field";
    result.box = "GF(256) with modulus 0x11B: round trip, {53}x{CA}, a^255 over all labels";

    FieldSpec aes(2, 8, coeffs_from_mask(0x11B));
    for (u64 h = 1; h <= 255; ++h) {
        ++result.cases;
        if (c_map(aes, s_map(aes, h)) != h)
            result.violations.push_back("round trip failed at " + std::to_string(h));
    }
    ++result.cases;
    if (finv_idx(aes, 0x53) != 0xCA)
        result.violations.push_back("inverse of {53} is not {CA}");
    ++result.cases;
    if (fmul_idx(aes, 0x53, 0xCA) != 0x01)
        result.violations.push_back("{53}x{CA} is not {01}");
    for (u64 h = 1; h <= 255; ++h) {
        ++result.cases;
        if (c_map(aes, fpow(aes, s_map(aes, h), 255)) != 1)
            result.violations.push_back("a^255 != 1 at " + std::to_string(h));
    }
    result.seconds = timer.seconds();
    return result;
}

std::vector<SuiteResult> verify_all() {
    const std::vector<u64> moduli{3, 4, 5, 6};
    const std::vector<u64> fields{0x7, 0xB, 0x13}; // GF(4), GF(8), GF(16)
    std::vector<SuiteResult> results;
    results.push_back(verify_compression(15, 2, 8, 3));
    results.push_back(verify_threshold_outcome(moduli, 2, 3));
    results.push_back(verify_repair_blocking(moduli, 2, 3));
    results.push_back(verify_normalization(moduli, fields, 3));
    results.push_back(verify_single_hole_sg(moduli, fields));
    results.push_back(verify_densities({0xB, 0x13, 0x11B}, 4, 400));
    results.push_back(verify_periodicity({2, 3, 4, 5, 6}, 2));
    results.push_back(verify_collapse(6, 3, 100));
    results.push_back(verify_aes_field());
    return results;
}

} // namespace pcg
