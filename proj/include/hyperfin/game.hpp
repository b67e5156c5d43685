#ifndef HYPERFIN_GAME_HPP
#define HYPERFIN_GAME_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "hyperfin/dynamics.hpp"

namespace hyperfin {

enum class Player { I, II };

/// Player I owns the Gamma block, player II the Delta block.
WordClass block_of(Player p);
Player opponent(Player p);

struct GameConfig {
    GroupSpec spec;
    FactorSplit split;
    /// Membership test for the target set, consuming the explored finite
    /// description of y. Null means no target is specified.
    std::function<bool(const PartialInjection&)> target_predicate;
};

/// One move: finitely many new assignments. Keys must be distinct.
struct Move {
    std::vector<std::pair<Word, Word>> assignments;
};

struct GameState {
    PartialInjection y;
    Player turn = Player::I;
    std::vector<Move> history;
    std::size_t move_count = 0;
};

GameState initial_state(const GameConfig& config);

enum class RuleClause {
    DuplicateKeyInMove,
    ForcedAssignmentMissing,  // the pre-move end must be assigned
    ExtraKeyWrongType,        // extra keys must be words of the mover's block
    NotInjective,             // key redefined or value already taken
    NotOneOrbit,
    WrongEndType,  // post-move y must end at a word of the mover's block
};

const char* rule_clause_name(RuleClause c);

struct Violation {
    RuleClause clause;
    Word offending;
};

using ViolationList = std::vector<Violation>;

struct MoveResult {
    std::optional<GameState> state;  // set iff the move was accepted
    ViolationList violations;

    bool accepted() const { return state.has_value(); }
};

/// Checks the move against the rules and, on acceptance, returns the
/// successor state (turn flipped, history appended). Pure.
MoveResult validate_move(const GameConfig& config, const GameState& state, const Move& move);

enum class Winner { PlayerI, PlayerII, Unresolved };

enum class VerdictReason {
    MinimalUndefinedDeltaOrIdentity,  // II loses
    MinimalUndefinedAllGamma,         // I loses
    FreenessDeltaWitness,             // II loses
    FreenessAllGammaWitness,          // I loses
    TargetHolds,                      // II provisionally wins
    TargetFails,                      // I provisionally wins
    IllegalMove,
    TargetUnspecified,  // Unresolved
    RadiusInsufficient, // Unresolved
};

const char* verdict_reason_name(VerdictReason r);

struct Verdict {
    Winner winner = Winner::Unresolved;
    VerdictReason reason = VerdictReason::RadiusInsufficient;
    std::optional<Word> witness;
};

/// Finite-horizon loss analysis over the generator-metric ball of the
/// given radius. If the ball contains undefined words, applies the
/// minimal-length clause to them; if y covers the ball, searches for
/// block elements fixing the explored part of a translate of y, then
/// falls back to the target predicate.
Verdict adjudicate_finite(const GameConfig& config, const GameState& state,
                          unsigned explored_radius);

/// A strategy maps (config, state, per-move seed) to a move. It must be
/// deterministic in its arguments.
using Strategy = std::function<Move(const GameConfig&, const GameState&, std::uint64_t)>;

struct Transcript {
    std::vector<Move> moves;
    /// states[0] is the initial state, states[i] the state after move i.
    std::vector<GameState> states;
    /// Set when a strategy emitted an illegal move; the transcript stops
    /// at that move and the mover loses.
    std::optional<Verdict> illegal;
    ViolationList illegal_violations;
};

/// Alternates the strategies through validate_move for 2 * rounds moves
/// or until an illegal move. Per-move seeds are derived from the run seed
/// and the move index.
Transcript play(const GameConfig& config, const Strategy& strategy_one,
                const Strategy& strategy_two, unsigned rounds, std::uint64_t seed);

/// Defines only the forced value, choosing the shortlex-least fresh word
/// of the mover's block as target.
Move greedy_minimal(const GameConfig& config, const GameState& state, std::uint64_t seed);

/// Forced value drawn uniformly from the fresh mover-block words in a
/// bounded ball; sometimes also extends the chain backward at its begin
/// point with a fresh mover-block key.
Move random_legal(const GameConfig& config, const GameState& state, std::uint64_t seed);

}  // namespace hyperfin

#endif
