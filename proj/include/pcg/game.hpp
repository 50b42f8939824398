#pragma once

// Product-congruence games. A position is a vector of heap labels; the
// invariant is the product of the labels' encodings (a residue mod m, or a
// nonzero element of GF(q) addressed by its index); a position is
// predicate-losing when the invariant lies in the losing set. Moves strictly
// decrease one heap and must change its residue class, which bans
// "null moves" that would silently preserve the invariant.
//
// Three variants share the interface:
//   numeric  - labels are naturals (unit mode: coprime to m), invariant mod m
//   field    - labels are 1..q-1, invariant is the field product
//   chain    - an exponent-tower game (N, g); play happens on the compressed
//              numeric game mod k = ord_N(g)
//
// Positions split into the Threshold Region (some heap at or above the
// modulus / equal to q-1) and the finite Indeterminacy Region below it.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pcg/error.hpp"
#include "pcg/finite_field.hpp"
#include "pcg/number_theory.hpp"

namespace pcg {

enum class Variant { numeric, field, chain };
enum class Outcome { P, N }; // P: the player to move loses under optimal play
enum class RegionTag { threshold, indeterminacy };

const char* outcome_name(Outcome o);
const char* region_name(RegionTag r);

struct Position {
    std::vector<u64> heaps;

    bool operator==(const Position&) const = default;
};

struct Move {
    size_t heap_index = 0;
    u64 new_value = 0;

    bool operator==(const Move&) const = default;
};

class GameSpec {
  public:
    // Numeric game mod m with losing set R (unit residues in [1, m-1]).
    // unit_mode restricts heap labels to integers coprime to m; permissive
    // mode admits every label >= 1 and is excluded from the theorem layer.
    static GameSpec numeric(u64 m, std::vector<u64> losing_set, bool unit_mode = true);

    // Game over the nonzero elements of GF(q); losing set is {1}.
    static GameSpec field(FieldSpec f);

    // Exponent-chain game for (N, g), played as the compressed numeric game
    // mod k = ord_N(g). Throws degenerate_order when k < 2.
    static GameSpec chain(u64 N, u64 g);

    Variant variant() const { return variant_; }

    // Modulus of the invariant group: m, k, or q-1.
    u64 modulus() const;

    // Heaps at or above this value are in the Threshold Region.
    u64 threshold_value() const { return variant_ == Variant::field ? field_->q() - 1 : modulus(); }

    // q-1 for field games; unbounded otherwise.
    std::optional<u64> max_label() const;

    bool unit_mode() const { return variant_ == Variant::field ? true : numeric_unit_mode_; }
    const std::vector<u64>& losing_set() const { return losing_set_; }
    bool singleton_losing_set() const { return losing_set_.size() == 1; }

    // True when the all-minimal terminal position is predicate-losing
    // (1 in the losing set), which game-tree evaluation requires.
    bool game_tree_backed() const;

    bool label_ok(u64 v) const;
    u64 min_label() const { return 1; }

    // Residue (or field index) carried by a single label.
    u64 label_value(u64 label) const;

    // Group structure of invariant values; only valid in unit mode.
    std::vector<u64> group_elements() const;
    u64 group_mul(u64 a, u64 b) const;
    u64 group_inverse(u64 a) const;

    bool losing_value(u64 invariant_value) const;

    const FieldSpec& field_spec() const;
    u64 chain_modulus_N() const;
    u64 chain_generator() const;

    std::string describe() const;
    bool operator==(const GameSpec& other) const;

  private:
    GameSpec() = default;

    Variant variant_ = Variant::numeric;
    u64 modulus_ = 0;                 // m for numeric, k for chain, q-1 for field
    std::vector<u64> losing_set_;     // sorted
    bool numeric_unit_mode_ = true;
    std::optional<FieldSpec> field_;
    u64 chain_N_ = 0, chain_g_ = 0;
};

bool position_valid(const GameSpec& spec, const Position& pos);
void validate_position(const GameSpec& spec, const Position& pos);

// Product of the heap encodings: residue in [0, m-1] for numeric games,
// field index in [1, q-1] for field games.
u64 invariant(const GameSpec& spec, const Position& pos);

bool is_losing_predicate(const GameSpec& spec, const Position& pos);

RegionTag region(const GameSpec& spec, const Position& pos);

// All legal moves, ordered by heap index, then ascending new value.
std::vector<Move> legal_moves(const GameSpec& spec, const Position& pos);

bool move_legal(const GameSpec& spec, const Position& pos, const Move& move);

// Throws illegal_move unless move_legal.
Position apply_move(const GameSpec& spec, const Position& pos, const Move& move);

// The one-move repair from a non-losing Threshold position: acts on a heap at
// or above the threshold and lands on a predicate-losing position. Among all
// such moves the smallest decrement wins, ties broken by lowest heap index.
// Throws precondition_violated outside the Threshold Region or on losing
// positions (or in permissive mode when no repair exists).
Move repair_move(const GameSpec& spec, const Position& pos);

// Any legal move to a predicate-losing position, same tie-breaking as
// repair_move but without the region restriction.
std::optional<Move> losing_option(const GameSpec& spec, const Position& pos);

// Compress to the single-heap position carrying the same invariant: the least
// legal label in the invariant's residue class (numeric), or the index of the
// field product. Throws zero_invariant when a permissive-mode product is not
// a unit, since no unit-labelled heap can carry it.
Position normalize(const GameSpec& spec, const Position& pos);

struct SearchBudget {
    u64 max_states = 1'000'000;    // bound on the product of heap values
    u64 max_play_length = 50'000;  // bound on the sum of heap values
};

// Memoized normal-play evaluation: a position is P iff every legal move
// leads to an N position; positions without moves are P. This is the
// ground-truth oracle the predicate-based classifier is tested against.
// The memo table persists across calls for a fixed spec.
class OutcomeOracle {
  public:
    explicit OutcomeOracle(GameSpec spec, SearchBudget budget = {});

    const GameSpec& spec() const { return spec_; }
    Outcome evaluate(const Position& pos);

    // Winning move (to a P position) if one exists; nullopt at P positions.
    std::optional<Move> winning_move(const Position& pos);

  private:
    struct VecHash {
        size_t operator()(const std::vector<u64>& v) const;
    };

    GameSpec spec_;
    SearchBudget budget_;
    std::unordered_map<std::vector<u64>, Outcome, VecHash> memo_;
};

Outcome outcome_bruteforce(const GameSpec& spec, const Position& pos, SearchBudget budget = {});

// Fast classification: Threshold positions of singleton-losing-set unit-mode
// games are P exactly when the predicate holds; everything else falls back to
// the game-tree oracle (pass one in to share its memo across calls).
Outcome outcome(const GameSpec& spec, const Position& pos, OutcomeOracle* oracle = nullptr);

// The engine's move policy: the repair move when it provably wins from a
// non-losing Threshold position, otherwise any oracle-verified move to a P
// position, otherwise (from a lost position) the first legal move.
// Requires at least one legal move.
Move engine_move(const GameSpec& spec, const Position& pos, OutcomeOracle& oracle);

} // namespace pcg
