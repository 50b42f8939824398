#include "pcg/game.hpp"

#include <algorithm>

namespace pcg {

const char* outcome_name(Outcome o) { return o == Outcome::P ? "P" : "N"; }

const char* region_name(RegionTag r) {
    return r == RegionTag::threshold ? "threshold" : "indeterminacy";
}

GameSpec GameSpec::numeric(u64 m, std::vector<u64> losing_set, bool unit_mode) {
    if (m < 2) throw error(errc::out_of_range, "numeric game needs modulus >= 2");
    if (losing_set.empty()) throw error(errc::out_of_range, "losing set must be nonempty");
    std::sort(losing_set.begin(), losing_set.end());
    losing_set.erase(std::unique(losing_set.begin(), losing_set.end()), losing_set.end());
    for (u64 r : losing_set) {
        if (r < 1 || r >= m)
            throw error(errc::out_of_range, "losing residue " + std::to_string(r) + " outside [1, m-1]");
        if (gcd(r, m) != 1)
            throw error(errc::not_a_unit, "losing residue " + std::to_string(r) + " is not a unit mod " +
                                              std::to_string(m));
    }
    GameSpec spec;
    spec.variant_ = Variant::numeric;
    spec.modulus_ = m;
    spec.losing_set_ = std::move(losing_set);
    spec.numeric_unit_mode_ = unit_mode;
    return spec;
}

GameSpec GameSpec::field(FieldSpec f) {
    GameSpec spec;
    spec.variant_ = Variant::field;
    spec.modulus_ = f.q() - 1;
    spec.losing_set_ = {1};
    spec.field_ = std::move(f);
    return spec;
}

GameSpec GameSpec::chain(u64 N, u64 g) {
    if (N < 2) throw error(errc::out_of_range, "chain game needs N >= 2");
    if (gcd(g % N, N) != 1)
        throw error(errc::not_a_unit, std::to_string(g) + " is not a unit mod " + std::to_string(N));
    u64 k = multiplicative_order(g, N);
    if (k < 2)
        throw error(errc::degenerate_order,
                    "ord(" + std::to_string(g) + ") mod " + std::to_string(N) + " is " + std::to_string(k) +
                        "; the compressed game needs modulus >= 2");
    GameSpec spec;
    spec.variant_ = Variant::chain;
    spec.modulus_ = k;
    spec.losing_set_ = {1};
    spec.numeric_unit_mode_ = true;
    spec.chain_N_ = N;
    spec.chain_g_ = g % N;
    return spec;
}

u64 GameSpec::modulus() const { return modulus_; }

std::optional<u64> GameSpec::max_label() const {
    if (variant_ == Variant::field) return field_->q() - 1;
    return std::nullopt;
}

bool GameSpec::game_tree_backed() const {
    return std::binary_search(losing_set_.begin(), losing_set_.end(), u64{1});
}

bool GameSpec::label_ok(u64 v) const {
    if (v < 1) return false;
    switch (variant_) {
    case Variant::field: return v <= field_->q() - 1;
    case Variant::numeric:
    case Variant::chain: return !numeric_unit_mode_ || gcd(v % modulus_, modulus_) == 1;
    }
    return false;
}

u64 GameSpec::label_value(u64 label) const {
    return variant_ == Variant::field ? label : label % modulus_;
}

std::vector<u64> GameSpec::group_elements() const {
    if (!unit_mode())
        throw error(errc::precondition_violated, "invariant values form a group only in unit mode");
    std::vector<u64> out;
    if (variant_ == Variant::field) {
        for (u64 v = 1; v < field_->q(); ++v) out.push_back(v);
    } else {
        for (u64 v = 1; v < modulus_; ++v)
            if (gcd(v, modulus_) == 1) out.push_back(v);
    }
    return out;
}

u64 GameSpec::group_mul(u64 a, u64 b) const {
    return variant_ == Variant::field ? fmul_idx(*field_, a, b) : mul_mod(a, b, modulus_);
}

u64 GameSpec::group_inverse(u64 a) const {
    return variant_ == Variant::field ? finv_idx(*field_, a) : mod_inverse(a, modulus_);
}

bool GameSpec::losing_value(u64 invariant_value) const {
    return std::binary_search(losing_set_.begin(), losing_set_.end(), invariant_value);
}

const FieldSpec& GameSpec::field_spec() const {
    if (variant_ != Variant::field) throw error(errc::spec_mismatch, "not a field game");
    return *field_;
}

u64 GameSpec::chain_modulus_N() const {
    if (variant_ != Variant::chain) throw error(errc::spec_mismatch, "not a chain game");
    return chain_N_;
}

u64 GameSpec::chain_generator() const {
    if (variant_ != Variant::chain) throw error(errc::spec_mismatch, "not a chain game");
    return chain_g_;
}

std::string GameSpec::describe() const {
    switch (variant_) {
    case Variant::field: return "field " + field_->describe();
    case Variant::chain:
        return "chain(N=" + std::to_string(chain_N_) + ", g=" + std::to_string(chain_g_) +
               ", k=" + std::to_string(modulus_) + ")";
    case Variant::numeric: {
        std::string r;
        for (u64 x : losing_set_) r += (r.empty() ? "" : ",") + std::to_string(x);
        return "numeric(m=" + std::to_string(modulus_) + ", R={" + r + "}" +
               (numeric_unit_mode_ ? ", units" : ", permissive") + ")";
    }
    }
    return "?";
}

bool GameSpec::operator==(const GameSpec& other) const {
    if (variant_ != other.variant_) return false;
    switch (variant_) {
    case Variant::field: return *field_ == *other.field_;
    case Variant::chain: return chain_N_ == other.chain_N_ && chain_g_ == other.chain_g_;
    case Variant::numeric:
        return modulus_ == other.modulus_ && losing_set_ == other.losing_set_ &&
               numeric_unit_mode_ == other.numeric_unit_mode_;
    }
    return false;
}

bool position_valid(const GameSpec& spec, const Position& pos) {
    if (pos.heaps.empty()) return false;
    for (u64 h : pos.heaps)
        if (!spec.label_ok(h)) return false;
    return true;
}

void validate_position(const GameSpec& spec, const Position& pos) {
    if (pos.heaps.empty())
        throw error(errc::precondition_violated, "position needs at least one heap");
    for (u64 h : pos.heaps)
        if (!spec.label_ok(h))
            throw error(errc::precondition_violated,
                        std::to_string(h) + " is not a legal heap label for " + spec.describe());
}

u64 invariant(const GameSpec& spec, const Position& pos) {
    validate_position(spec, pos);
    if (spec.variant() == Variant::field) {
        const FieldSpec& f = spec.field_spec();
        FieldElement acc = f.one();
        for (u64 h : pos.heaps) acc = fmul(f, acc, s_map(f, h));
        return c_map(f, acc);
    }
    u64 m = spec.modulus();
    u64 acc = 1 % m;
    for (u64 h : pos.heaps) acc = mul_mod(acc, h % m, m);
    return acc;
}

bool is_losing_predicate(const GameSpec& spec, const Position& pos) {
    return spec.losing_value(invariant(spec, pos));
}

RegionTag region(const GameSpec& spec, const Position& pos) {
    validate_position(spec, pos);
    for (u64 h : pos.heaps)
        if (h >= spec.threshold_value()) return RegionTag::threshold;
    return RegionTag::indeterminacy;
}

bool move_legal(const GameSpec& spec, const Position& pos, const Move& move) {
    if (move.heap_index >= pos.heaps.size()) return false;
    u64 old_value = pos.heaps[move.heap_index];
    u64 v = move.new_value;
    if (v >= old_value || v < 1 || !spec.label_ok(v)) return false;
    // Null-move ban: the moved heap's residue class must change. Vacuous for
    // heaps below the modulus, and automatic for field labels.
    return spec.label_value(v) != spec.label_value(old_value);
}

std::vector<Move> legal_moves(const GameSpec& spec, const Position& pos) {
    validate_position(spec, pos);
    std::vector<Move> moves;
    for (size_t j = 0; j < pos.heaps.size(); ++j) {
        for (u64 v = 1; v < pos.heaps[j]; ++v) {
            Move m{j, v};
            if (move_legal(spec, pos, m)) moves.push_back(m);
        }
    }
    return moves;
}

Position apply_move(const GameSpec& spec, const Position& pos, const Move& move) {
    validate_position(spec, pos);
    if (!move_legal(spec, pos, move))
        throw error(errc::illegal_move, "heap " + std::to_string(move.heap_index) + " -> " +
                                            std::to_string(move.new_value));
    Position next = pos;
    next.heaps[move.heap_index] = move.new_value;
    return next;
}

namespace {

// Smallest-decrement, lowest-index move landing on a predicate-losing
// position; heaps restricted by the given eligibility test.
template <typename HeapEligible>
std::optional<Move> scan_for_losing_move(const GameSpec& spec, const Position& pos, u64 max_decrement,
                                         HeapEligible eligible) {
    for (u64 d = 1; d <= max_decrement; ++d) {
        for (size_t j = 0; j < pos.heaps.size(); ++j) {
            if (!eligible(pos.heaps[j]) || pos.heaps[j] <= d) continue;
            Move move{j, pos.heaps[j] - d};
            if (!move_legal(spec, pos, move)) continue;
            if (is_losing_predicate(spec, apply_move(spec, pos, move))) return move;
        }
    }
    return std::nullopt;
}

} // namespace

Move repair_move(const GameSpec& spec, const Position& pos) {
    validate_position(spec, pos);
    if (region(spec, pos) != RegionTag::threshold)
        throw error(errc::precondition_violated, "repair is defined on the Threshold Region");
    if (is_losing_predicate(spec, pos))
        throw error(errc::precondition_violated, "repair is defined on non-losing positions");
    u64 threshold = spec.threshold_value();
    // A window of modulus-1 decrements sweeps every residue class once.
    auto found = scan_for_losing_move(spec, pos, spec.modulus() - 1,
                                      [threshold](u64 h) { return h >= threshold; });
    if (!found)
        throw error(errc::precondition_violated,
                    "no repair move exists; the position's unit context cannot reach the losing set");
    return *found;
}

std::optional<Move> losing_option(const GameSpec& spec, const Position& pos) {
    validate_position(spec, pos);
    u64 max_heap = *std::max_element(pos.heaps.begin(), pos.heaps.end());
    if (max_heap <= 1) return std::nullopt;
    return scan_for_losing_move(spec, pos, max_heap - 1, [](u64) { return true; });
}

Position normalize(const GameSpec& spec, const Position& pos) {
    u64 value = invariant(spec, pos);
    if (spec.variant() == Variant::field) return Position{{value}};
    if (gcd(value, spec.modulus()) != 1)
        throw error(errc::zero_invariant, "product " + std::to_string(value) +
                                              " is not a unit mod " + std::to_string(spec.modulus()));
    // The invariant is a unit residue in [1, m-1], which is itself the least
    // legal label in its class.
    return Position{{value}};
}

size_t OutcomeOracle::VecHash::operator()(const std::vector<u64>& v) const {
    size_t h = 1469598103934665603ull;
    for (u64 x : v) {
        h ^= static_cast<size_t>(x);
        h *= 1099511628211ull;
    }
    return h;
}

OutcomeOracle::OutcomeOracle(GameSpec spec, SearchBudget budget)
    : spec_(std::move(spec)), budget_(budget) {
    if (!spec_.game_tree_backed())
        throw error(errc::precondition_violated,
                    "game-tree evaluation needs the identity in the losing set; " + spec_.describe() +
                        " is predicate-only");
}

Outcome OutcomeOracle::evaluate(const Position& pos) {
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

    // Recursive normal-play evaluation over sorted heap multisets.
    auto eval = [this](auto&& self, std::vector<u64> k) -> Outcome {
        if (auto it = memo_.find(k); it != memo_.end()) return it->second;
        if (memo_.size() >= budget_.max_states)
            throw error(errc::search_budget_exceeded, "memo table exceeded the state budget");
        Outcome result = Outcome::P;
        for (size_t j = 0; j < k.size() && result == Outcome::P; ++j) {
            if (j > 0 && k[j] == k[j - 1]) continue; // same heap value, same subtree
            for (u64 v = 1; v < k[j]; ++v) {
                if (!spec_.label_ok(v) || spec_.label_value(v) == spec_.label_value(k[j])) continue;
                std::vector<u64> child = k;
                child[j] = v;
                std::sort(child.begin(), child.end());
                if (self(self, std::move(child)) == Outcome::P) {
                    result = Outcome::N;
                    break;
                }
            }
        }
        memo_.emplace(std::move(k), result);
        return result;
    };
    return eval(eval, std::move(key));
}

std::optional<Move> OutcomeOracle::winning_move(const Position& pos) {
    for (const Move& m : legal_moves(spec_, pos)) {
        if (evaluate(apply_move(spec_, pos, m)) == Outcome::P) return m;
    }
    return std::nullopt;
}

Outcome outcome_bruteforce(const GameSpec& spec, const Position& pos, SearchBudget budget) {
    OutcomeOracle oracle(spec, budget);
    return oracle.evaluate(pos);
}

Outcome outcome(const GameSpec& spec, const Position& pos, OutcomeOracle* oracle) {
    validate_position(spec, pos);
    if (spec.singleton_losing_set() && spec.unit_mode() &&
        region(spec, pos) == RegionTag::threshold) {
        return is_losing_predicate(spec, pos) ? Outcome::P : Outcome::N;
    }
    if (oracle != nullptr) return oracle->evaluate(pos);
    return outcome_bruteforce(spec, pos);
}

Move engine_move(const GameSpec& spec, const Position& pos, OutcomeOracle& oracle) {
    std::vector<Move> moves = legal_moves(spec, pos);
    if (moves.empty()) throw error(errc::precondition_violated, "no legal moves");
    if (region(spec, pos) == RegionTag::threshold && !is_losing_predicate(spec, pos)) {
        Move candidate = repair_move(spec, pos);
        if (oracle.evaluate(apply_move(spec, pos, candidate)) == Outcome::P) return candidate;
    }
    if (auto winning = oracle.winning_move(pos)) return *winning;
    return moves.front();
}

} // namespace pcg
