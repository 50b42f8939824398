#include "pcg/collapse.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace pcg {

AdditiveGameSpec::AdditiveGameSpec(u64 m_in, u64 s_in) : m(m_in), s(s_in) {
    if (m < 2) throw error(errc::out_of_range, "additive game needs modulus >= 2");
    if (s >= m) throw error(errc::out_of_range, "losing residue must be in [0, m-1]");
}

AdditiveReach additive_reach_check(const AdditiveGameSpec& spec, const std::vector<u64>& heaps,
                                   size_t j) {
    if (j >= heaps.size()) throw error(errc::out_of_range, "heap index out of range");
    if (heaps[j] < spec.m)
        throw error(errc::precondition_violated, "coverage needs heap j at or above the modulus");
    u64 sum = 0;
    for (u64 h : heaps) sum += h;

    AdditiveReach result;
    for (u64 d = 1; d < spec.m; ++d) result.reachable.insert((sum - d) % spec.m);
    // d = 0 is not a move; the current residue counts as "already there".
    std::set<u64> covered = result.reachable;
    covered.insert(sum % spec.m);
    result.covers_all = covered.size() == spec.m;
    return result;
}

namespace {

Outcome additive_tree_outcome(const std::vector<u64>& heaps, SearchBudget budget) {
    struct VecHash {
        size_t operator()(const std::vector<u64>& v) const {
            size_t h = 1469598103934665603ull;
            for (u64 x : v) {
                h ^= static_cast<size_t>(x);
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    unsigned __int128 states = 1;
    u64 total = 0;
    for (u64 h : heaps) {
        states *= h;
        total += h;
        if (states > budget.max_states || total > budget.max_play_length)
            throw error(errc::search_budget_exceeded, "position too large for exhaustive search");
    }
    std::unordered_map<std::vector<u64>, Outcome, VecHash> memo;
    auto eval = [&](auto&& self, std::vector<u64> k) -> Outcome {
        if (auto it = memo.find(k); it != memo.end()) return it->second;
        Outcome result = Outcome::P;
        for (size_t j = 0; j < k.size() && result == Outcome::P; ++j) {
            if (j > 0 && k[j] == k[j - 1]) continue;
            for (u64 v = 1; v < k[j]; ++v) {
                std::vector<u64> child = k;
                child[j] = v;
                std::sort(child.begin(), child.end());
                if (self(self, std::move(child)) == Outcome::P) {
                    result = Outcome::N;
                    break;
                }
            }
        }
        memo.emplace(std::move(k), result);
        return result;
    };
    std::vector<u64> key = heaps;
    std::sort(key.begin(), key.end());
    return eval(eval, std::move(key));
}

// Closure of seed (plus the identity) under multiplication mod m; in the
// finite unit group this is the generated subgroup.
std::set<u64> multiplicative_closure(const std::set<u64>& seed, u64 m) {
    std::set<u64> closure = {1};
    for (u64 x : seed) closure.insert(x % m);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<u64> members(closure.begin(), closure.end());
        for (u64 a : members)
            for (u64 b : members)
                if (closure.insert(mul_mod(a, b, m)).second) grew = true;
    }
    return closure;
}

} // namespace

Outcome additive_outcome(const AdditiveGameSpec& spec, const std::vector<u64>& heaps,
                         SearchBudget budget) {
    if (heaps.empty()) throw error(errc::precondition_violated, "position needs at least one heap");
    for (u64 h : heaps)
        if (h < 1) throw error(errc::precondition_violated, "heaps must be >= 1");
    u64 sum = 0;
    for (u64 h : heaps) sum += h;
    bool predicate = sum % spec.m == spec.s;

    // The terminal (1,...,1) has sum n; if that is not the losing residue the
    // predicate and normal play disagree at the root of the tree, so only the
    // predicate verdict is meaningful.
    if (heaps.size() % spec.m != spec.s) return predicate ? Outcome::P : Outcome::N;
    return additive_tree_outcome(heaps, budget);
}

DivisorMoveUnits divisor_move_units(u64 t, u64 m) {
    if (m < 2) throw error(errc::out_of_range, "modulus must be >= 2");
    if (gcd(t % m, m) != 1)
        throw error(errc::not_a_unit, std::to_string(t) + " is not a unit mod " + std::to_string(m));
    DivisorMoveUnits result;
    if (t < 2) return result; // no proper divisors
    u64 t_inv = mod_inverse(t % m, m);
    std::set<u64> divisors;
    for (u64 d = 1; d * d <= t; ++d) {
        if (t % d != 0) continue;
        divisors.insert(d);
        divisors.insert(t / d);
    }
    divisors.erase(t);
    for (u64 d : divisors) {
        if (gcd(d % m, m) != 1) {
            ++result.skipped_non_units;
            continue;
        }
        result.units.insert(mul_mod(d % m, t_inv, m));
    }
    return result;
}

bool generates_group(const std::set<u64>& subset, u64 m) {
    if (m < 2) throw error(errc::out_of_range, "modulus must be >= 2");
    return multiplicative_closure(subset, m).size() == euler_phi(m);
}

std::vector<AlignmentScanRow> alignment_hypothesis_scan(u64 m, u64 M, u64 bound) {
    if (M < 1 || bound < M) throw error(errc::out_of_range, "scan needs 1 <= M <= bound");
    std::vector<AlignmentScanRow> rows;
    for (u64 t = M; t <= bound; ++t) {
        AlignmentScanRow row;
        row.t = t;
        row.coprime = gcd(t % m, m) == 1;
        if (row.coprime) {
            DivisorMoveUnits units = divisor_move_units(t, m);
            std::set<u64> closure = multiplicative_closure(units.units, m);
            row.generated_subgroup_order = closure.size();
            row.generates = closure.size() == euler_phi(m);
        }
        rows.push_back(row);
    }
    return rows;
}

DivisorCollapse divisor_collapse_check(u64 m, const std::vector<u64>& heaps, size_t j) {
    if (j >= heaps.size()) throw error(errc::out_of_range, "heap index out of range");
    if (m < 2) throw error(errc::out_of_range, "modulus must be >= 2");
    if (gcd(heaps[j] % m, m) != 1)
        throw error(errc::not_a_unit,
                    std::to_string(heaps[j]) + " is not a unit mod " + std::to_string(m));

    DivisorCollapse result;
    if (heaps[j] < 2) return result; // no divisor moves at all

    // Aggregate product of the whole position (units only contribute; a
    // non-unit elsewhere would make the aggregate a non-unit).
    u64 aggregate = 1;
    for (u64 h : heaps) aggregate = mul_mod(aggregate, h % m, m);

    // Orbit of the aggregate under the subgroup generated by the one-move
    // ratios: play composes ratios move after move, so the reachable set is
    // the aggregate times the generated subgroup.
    DivisorMoveUnits ratios = divisor_move_units(heaps[j], m);
    if (ratios.units.empty()) return result;
    std::set<u64> subgroup = multiplicative_closure(ratios.units, m);
    if (gcd(aggregate, m) == 1) {
        for (u64 u : subgroup) result.reachable_units.insert(mul_mod(aggregate, u, m));
    }
    result.transitive = result.reachable_units.size() == euler_phi(m);
    return result;
}

bool alignment_principle_check(const MonoidTable& monoid,
                               const std::map<unsigned, std::set<unsigned>>& move_images) {
    size_t n = monoid.size();
    if (n == 0) throw error(errc::malformed_table, "empty multiplication table");
    for (const auto& row : monoid.table) {
        if (row.size() != n) throw error(errc::malformed_table, "table is not square");
        for (unsigned x : row)
            if (x >= n) throw error(errc::malformed_table, "table entry out of range");
    }
    // Locate a two-sided identity.
    unsigned identity = n;
    for (unsigned e = 0; e < n; ++e) {
        bool ok = true;
        for (unsigned a = 0; a < n && ok; ++a)
            ok = monoid.table[e][a] == a && monoid.table[a][e] == a;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity == n) throw error(errc::malformed_table, "table has no identity element");

    for (const auto& entry : move_images) {
        const std::set<unsigned>& image = entry.second;
        std::set<unsigned> closure = {identity};
        for (unsigned x : image) {
            if (x >= n) throw error(errc::malformed_table, "move image outside the monoid");
            closure.insert(x);
        }
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<unsigned> members(closure.begin(), closure.end());
            for (unsigned a : members)
                for (unsigned b : members)
                    if (closure.insert(monoid.table[a][b]).second) grew = true;
        }
        if (closure.size() != n) return false;
    }
    return true;
}

} // namespace pcg
