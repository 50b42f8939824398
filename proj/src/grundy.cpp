#include "pcg/grundy.hpp"

#include <algorithm>

namespace pcg {

namespace {

void require_sg_scope(const GameSpec& spec) {
    if (!(spec.losing_set().size() == 1 && spec.losing_set()[0] == 1))
        throw error(errc::unsupported_losing_set, "product-SG is defined for losing set {1}");
    if (!spec.unit_mode())
        throw error(errc::precondition_violated, "product-SG needs unit-mode labels");
}

} // namespace

SgIndexing SgIndexing::canonical(const GameSpec& spec) {
    SgIndexing ix;
    ix.elements_ = spec.group_elements(); // ascending; identity first
    for (unsigned i = 0; i < ix.elements_.size(); ++i) ix.index_[ix.elements_[i]] = i;
    return ix;
}

unsigned SgIndexing::index_of(u64 element) const {
    auto it = index_.find(element);
    if (it == index_.end())
        throw error(errc::out_of_range, std::to_string(element) + " is not in the SG domain");
    return it->second;
}

u64 SgIndexing::element_at(unsigned idx) const {
    if (idx >= elements_.size()) throw error(errc::out_of_range, "index outside the SG domain");
    return elements_[idx];
}

SgValue product_sg(const GameSpec& spec, const Position& pos, const SgIndexing& ix) {
    require_sg_scope(spec);
    if (region(spec, pos) != RegionTag::threshold)
        throw error(errc::wrong_region, "product-SG is defined on the Threshold Region");
    u64 value = invariant(spec, pos);
    return {ix.index_of(value), value};
}

OptionValues option_value_set(const GameSpec& spec, const Position& pos, const SgIndexing& ix) {
    require_sg_scope(spec);
    if (region(spec, pos) != RegionTag::threshold)
        throw error(errc::wrong_region, "option values are collected in the Threshold Region");
    OptionValues out;
    std::vector<bool> seen(ix.size(), false);
    for (const Move& m : legal_moves(spec, pos)) {
        Position next = apply_move(spec, pos, m);
        if (region(spec, next) == RegionTag::indeterminacy) out.any_in_indeterminacy = true;
        u64 value = invariant(spec, next);
        unsigned idx = ix.index_of(value);
        if (!seen[idx]) {
            seen[idx] = true;
            out.values.push_back({idx, value});
        }
    }
    std::sort(out.values.begin(), out.values.end());
    return out;
}

SingleHoleResult single_hole_check(const GameSpec& spec, const Position& pos, const SgIndexing& ix) {
    OptionValues options = option_value_set(spec, pos, ix);
    SgValue own = product_sg(spec, pos, ix);

    SingleHoleResult result;
    result.any_in_indeterminacy = options.any_in_indeterminacy;
    std::vector<bool> seen(ix.size(), false);
    for (const SgValue& v : options.values) seen[v.idx] = true;
    for (unsigned i = 0; i < ix.size(); ++i)
        if (!seen[i]) result.missing.push_back({i, ix.element_at(i)});
    result.holds = result.missing.size() == 1 && result.missing[0] == own;
    return result;
}

SgValue indexed_mex(const std::vector<SgValue>& values, const SgIndexing& ix) {
    std::vector<bool> seen(ix.size(), false);
    for (const SgValue& v : values)
        if (v.idx < ix.size()) seen[v.idx] = true;
    for (unsigned i = 0; i < ix.size(); ++i)
        if (!seen[i]) return {i, ix.element_at(i)};
    throw error(errc::domain_exhausted, "every SG value is present; mex undefined");
}

size_t GrundyOracle::VecHash::operator()(const std::vector<u64>& v) const {
    size_t h = 1469598103934665603ull;
    for (u64 x : v) {
        h ^= static_cast<size_t>(x);
        h *= 1099511628211ull;
    }
    return h;
}

GrundyOracle::GrundyOracle(GameSpec spec, SearchBudget budget)
    : spec_(std::move(spec)), budget_(budget) {}

unsigned GrundyOracle::evaluate(const Position& pos) {
    validate_position(spec_, pos);
    unsigned __int128 states = 1;
    u64 total = 0;
    for (u64 h : pos.heaps) {
        states *= h;
        total += h;
        if (states > budget_.max_states || total > budget_.max_play_length)
            throw error(errc::search_budget_exceeded, "position too large for exhaustive search");
    }

    std::vector<u64> key = pos.heaps;
    std::sort(key.begin(), key.end());

    auto eval = [this](auto&& self, std::vector<u64> k) -> unsigned {
        if (auto it = memo_.find(k); it != memo_.end()) return it->second;
        if (memo_.size() >= budget_.max_states)
            throw error(errc::search_budget_exceeded, "memo table exceeded the state budget");
        std::vector<unsigned> child_values;
        for (size_t j = 0; j < k.size(); ++j) {
            if (j > 0 && k[j] == k[j - 1]) continue;
            for (u64 v = 1; v < k[j]; ++v) {
                if (!spec_.label_ok(v) || spec_.label_value(v) == spec_.label_value(k[j])) continue;
                std::vector<u64> child = k;
                child[j] = v;
                std::sort(child.begin(), child.end());
                child_values.push_back(self(self, std::move(child)));
            }
        }
        std::sort(child_values.begin(), child_values.end());
        unsigned g = 0;
        for (unsigned cv : child_values) {
            if (cv == g) ++g;
            else if (cv > g) break;
        }
        memo_.emplace(std::move(k), g);
        return g;
    };
    return eval(eval, std::move(key));
}

unsigned grundy_standard(const GameSpec& spec, const Position& pos, SearchBudget budget) {
    GrundyOracle oracle(spec, budget);
    return oracle.evaluate(pos);
}

Position sum_positions(const GameSpec& spec, const Position& a, const Position& b) {
    if (!position_valid(spec, a) || !position_valid(spec, b))
        throw error(errc::spec_mismatch, "both positions must belong to the same game");
    Position sum = a;
    sum.heaps.insert(sum.heaps.end(), b.heaps.begin(), b.heaps.end());
    return sum;
}

std::vector<SgMultEntry> sg_multiplicativity_check(const GameSpec& spec,
                                                   const std::vector<std::pair<Position, Position>>& pairs,
                                                   const SgIndexing& ix) {
    require_sg_scope(spec);
    std::vector<SgMultEntry> report;
    report.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        SgMultEntry entry;
        entry.pos1 = a;
        entry.pos2 = b;
        if (region(spec, a) != RegionTag::threshold || region(spec, b) != RegionTag::threshold) {
            // Multiplicativity needs both summands above the threshold.
            report.push_back(std::move(entry));
            continue;
        }
        entry.in_scope = true;
        entry.value1 = product_sg(spec, a, ix);
        entry.value2 = product_sg(spec, b, ix);
        entry.expected_product = spec.group_mul(entry.value1.element, entry.value2.element);

        SingleHoleResult hole_a = single_hole_check(spec, a, ix);
        SingleHoleResult hole_b = single_hole_check(spec, b, ix);
        entry.summands_single_hole = hole_a.holds && hole_b.holds;

        Position sum = sum_positions(spec, a, b);
        OptionValues sum_options = option_value_set(spec, sum, ix);
        entry.boundary_flag =
            hole_a.any_in_indeterminacy || hole_b.any_in_indeterminacy || sum_options.any_in_indeterminacy;

        std::vector<bool> seen(ix.size(), false);
        for (const SgValue& v : sum_options.values) seen[v.idx] = true;
        unsigned misses = 0;
        bool product_missing = false;
        for (unsigned i = 0; i < ix.size(); ++i) {
            if (!seen[i]) {
                ++misses;
                if (ix.element_at(i) == entry.expected_product) product_missing = true;
            }
        }
        entry.sum_misses_exactly_product = misses == 1 && product_missing;

        if (misses > 0) entry.observed_mex = indexed_mex(sum_options.values, ix);
        entry.holds = entry.summands_single_hole && entry.sum_misses_exactly_product &&
                      entry.observed_mex.has_value() &&
                      entry.observed_mex->element == entry.expected_product;
        report.push_back(std::move(entry));
    }
    return report;
}

} // namespace pcg
