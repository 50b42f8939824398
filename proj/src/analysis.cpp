#include "pcg/analysis.hpp"

#include <algorithm>
#include <random>

namespace pcg {

namespace {

// Full label set of one period: field indices 1..q-1 or unit residues < m.
std::vector<u64> period_labels(const GameSpec& spec) {
    if (spec.variant() != Variant::field && !spec.unit_mode())
        throw error(errc::precondition_violated,
                    "exact counting needs a finite label group (field or unit mode)");
    return spec.group_elements();
}

u64 checked_power(u64 base, unsigned exp, u64 limit) {
    u64 v = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (v > limit / base)
            throw error(errc::too_large, "label space exceeds the enumeration limit");
        v *= base;
    }
    return v;
}

template <typename Visit>
void for_each_tuple(const std::vector<u64>& labels, unsigned n, Visit visit) {
    std::vector<size_t> idx(n, 0);
    std::vector<u64> tuple(n, labels[0]);
    while (true) {
        visit(tuple);
        size_t i = 0;
        while (i < n && ++idx[i] == labels.size()) idx[i++] = 0;
        if (i == n) break;
        for (size_t j = 0; j <= i; ++j) tuple[j] = labels[idx[j]];
    }
}

} // namespace

DensityReport exact_losing_count(const GameSpec& spec, unsigned heap_count, u64 limit,
                                 bool with_tree_count) {
    if (heap_count < 1) throw error(errc::out_of_range, "need at least one heap");
    std::vector<u64> labels = period_labels(spec);
    u64 group_order = labels.size();

    DensityReport report;
    report.spec_description = spec.describe();
    report.heap_count = heap_count;
    report.total = checked_power(group_order, heap_count, limit);
    report.predicted_num = spec.losing_set().size();
    report.predicted_den = group_order;
    report.expected_exact =
        spec.losing_set().size() * checked_power(group_order, heap_count - 1, limit);

    for_each_tuple(labels, heap_count, [&](const std::vector<u64>& tuple) {
        if (is_losing_predicate(spec, Position{tuple})) ++report.losing;
    });

    if (with_tree_count) {
        OutcomeOracle oracle(spec);
        u64 count = 0;
        for_each_tuple(labels, heap_count, [&](const std::vector<u64>& tuple) {
            if (oracle.evaluate(Position{tuple}) == Outcome::P) ++count;
        });
        report.tree_p = count;
    }

    // Independent route: fix the first n-1 coordinates and solve for the
    // last; within one period each losing residue has exactly one completing
    // label.
    auto count_completions = [&](u64 partial) {
        u64 partial_inv = spec.group_inverse(partial);
        for (u64 r : spec.losing_set()) {
            u64 needed = spec.group_mul(partial_inv, r);
            if (std::binary_search(labels.begin(), labels.end(), needed)) ++report.constructive_losing;
        }
    };
    if (heap_count == 1) {
        count_completions(1); // empty prefix carries the identity
    } else {
        for_each_tuple(labels, heap_count - 1, [&](const std::vector<u64>& partial_tuple) {
            u64 partial = 1;
            for (u64 h : partial_tuple) partial = spec.group_mul(partial, spec.label_value(h));
            count_completions(partial);
        });
    }
    return report;
}

DensityReport empirical_density(const GameSpec& spec, unsigned heap_count, u64 bound,
                                bool with_tree_count) {
    if (spec.variant() == Variant::field)
        throw error(errc::precondition_violated, "empirical density is for numeric games");
    if (heap_count < 1 || bound < 1) throw error(errc::out_of_range, "need n >= 1 and bound >= 1");

    std::vector<u64> labels;
    for (u64 v = 1; v <= bound; ++v)
        if (spec.label_ok(v)) labels.push_back(v);
    if (labels.empty()) throw error(errc::out_of_range, "no legal labels below the bound");

    DensityReport report;
    report.spec_description = spec.describe();
    report.heap_count = heap_count;
    report.bound = bound;
    report.total = checked_power(labels.size(), heap_count, 10'000'000);
    report.predicted_num = 1;
    report.predicted_den = spec.unit_mode() ? euler_phi(spec.modulus()) : spec.modulus();

    for_each_tuple(labels, heap_count, [&](const std::vector<u64>& tuple) {
        if (is_losing_predicate(spec, Position{tuple})) ++report.losing;
    });

    if (with_tree_count) {
        OutcomeOracle oracle(spec);
        u64 count = 0;
        for_each_tuple(labels, heap_count, [&](const std::vector<u64>& tuple) {
            if (oracle.evaluate(Position{tuple}) == Outcome::P) ++count;
        });
        report.tree_p = count;
    }
    return report;
}

DensityReport empirical_density_sampled(const GameSpec& spec, unsigned heap_count, u64 bound,
                                        u64 samples, u64 seed) {
    if (spec.variant() == Variant::field)
        throw error(errc::precondition_violated, "empirical density is for numeric games");
    if (heap_count < 1 || bound < 1 || samples < 1)
        throw error(errc::out_of_range, "need n >= 1, bound >= 1, samples >= 1");

    std::vector<u64> labels;
    for (u64 v = 1; v <= bound; ++v)
        if (spec.label_ok(v)) labels.push_back(v);
    if (labels.empty()) throw error(errc::out_of_range, "no legal labels below the bound");

    DensityReport report;
    report.spec_description = spec.describe();
    report.heap_count = heap_count;
    report.bound = bound;
    report.total = samples;
    report.predicted_num = 1;
    report.predicted_den = spec.unit_mode() ? euler_phi(spec.modulus()) : spec.modulus();

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, labels.size() - 1);
    std::vector<u64> tuple(heap_count);
    for (u64 i = 0; i < samples; ++i) {
        for (auto& h : tuple) h = labels[pick(rng)];
        if (is_losing_predicate(spec, Position{tuple})) ++report.losing;
    }
    return report;
}

PeriodicityReport periodicity_check(const GameSpec& spec, const std::vector<u64>& context,
                                    size_t insert_at, u64 x_max, OutcomeOracle* oracle) {
    if (spec.variant() == Variant::field)
        throw error(errc::precondition_violated, "periodicity is a numeric-model statement");
    if (insert_at > context.size()) throw error(errc::out_of_range, "insertion index out of range");
    u64 m = spec.modulus();
    if (x_max < m) throw error(errc::out_of_range, "x_max must be at least the modulus");

    PeriodicityReport report;
    report.context = context;
    report.insert_at = insert_at;
    report.x_min = m;
    report.x_max = x_max;

    auto outcome_at = [&](u64 x) {
        std::vector<u64> heaps = context;
        heaps.insert(heaps.begin() + static_cast<std::ptrdiff_t>(insert_at), x);
        return outcome(spec, Position{heaps}, oracle);
    };

    for (u64 x = m; x <= x_max; ++x) {
        if (!spec.label_ok(x)) continue; // x and x+m share a residue class
        PeriodicityRow row;
        row.x = x;
        row.outcome_x = outcome_at(x);
        row.outcome_x_plus_m = outcome_at(x + m);
        report.rows.push_back(row);
        if (!row.equal()) report.violations.push_back(x);
    }
    return report;
}

namespace {

std::string fraction(u64 num, u64 den) { return std::to_string(num) + "/" + std::to_string(den); }

std::string bracket_list(const std::vector<u64>& xs) {
    std::string out = "[";
    for (size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
    return out + "]";
}

} // namespace

std::vector<TableRow> comparison_table(const ChainSpec& chain, const FieldSpec& field, u64 numeric_m) {
    if (numeric_m < 2) throw error(errc::out_of_range, "numeric modulus must be >= 2");
    if (chain.order < 2) throw error(errc::degenerate_order, "chain order must be >= 2");
    u64 k = chain.order;
    u64 q = field.q();

    std::vector<TableRow> rows;
    rows.push_back({"ambient structure", "(Z/" + std::to_string(chain.N) + "Z)^x",
                    field.describe() + "^x", "(Z/" + std::to_string(numeric_m) + "Z)^x"});
    rows.push_back({"aggregation", "product of exponents", "field product of s(h_i)",
                    "product of heaps"});
    rows.push_back({"compression modulus", std::to_string(k), std::to_string(q - 1),
                    std::to_string(numeric_m)});
    rows.push_back({"decomposition", bracket_list(crt_split(k)), "none (cyclic group)",
                    bracket_list(crt_split(numeric_m))});
    rows.push_back({"losing predicate", "prod h_i = 1 (mod " + std::to_string(k) + ")",
                    "prod s(h_i) = 1", "prod t_i = 1 (mod " + std::to_string(numeric_m) + ")"});
    rows.push_back({"regions",
                    "T_" + std::to_string(k) + ", I = [1," + std::to_string(k - 1) + "]^n",
                    "T: some heap = " + std::to_string(q - 1) + ", I = [1," + std::to_string(q - 2) +
                        "]^n",
                    "T_" + std::to_string(numeric_m) + ", I = [1," + std::to_string(numeric_m - 1) +
                        "]^n"});
    rows.push_back({"sg multiplicativity", "in T_" + std::to_string(k),
                    "in T (heap = " + std::to_string(q - 1) + ")", "in T_" + std::to_string(numeric_m)});
    rows.push_back({"normalization", "single heap = prod mod " + std::to_string(k),
                    "single heap = C(prod)", "single heap = prod mod " + std::to_string(numeric_m)});
    rows.push_back({"density", fraction(1, k) + " (units: " + fraction(1, euler_phi(k)) + ")",
                    fraction(1, q - 1),
                    fraction(1, numeric_m) + " (units: " + fraction(1, euler_phi(numeric_m)) + ")"});
    return rows;
}

} // namespace pcg
