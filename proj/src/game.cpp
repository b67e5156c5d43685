#include "hyperfin/game.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace hyperfin {

WordClass block_of(Player p) { return p == Player::I ? WordClass::GammaWord : WordClass::DeltaWord; }

Player opponent(Player p) { return p == Player::I ? Player::II : Player::I; }

GameState initial_state(const GameConfig& config) {
    if (config.split.gamma_block.size() != config.spec.factor_count())
        throw std::invalid_argument("initial_state: split does not cover the factors");
    bool has_gamma = false, has_delta = false;
    for (bool b : config.split.gamma_block) (b ? has_gamma : has_delta) = true;
    if (!has_gamma || !has_delta)
        throw std::invalid_argument("initial_state: both blocks must be nonempty");
    GameState s{PartialInjection(config.spec), Player::I, {}, 0};
    return s;
}

const char* rule_clause_name(RuleClause c) {
    switch (c) {
        case RuleClause::DuplicateKeyInMove: return "duplicate_key_in_move";
        case RuleClause::ForcedAssignmentMissing: return "forced_assignment_missing";
        case RuleClause::ExtraKeyWrongType: return "extra_key_wrong_type";
        case RuleClause::NotInjective: return "not_injective";
        case RuleClause::NotOneOrbit: return "not_one_orbit";
        case RuleClause::WrongEndType: return "wrong_end_type";
    }
    return "unknown";
}

const char* verdict_reason_name(VerdictReason r) {
    switch (r) {
        case VerdictReason::MinimalUndefinedDeltaOrIdentity:
            return "minimal_undefined_delta_or_identity";
        case VerdictReason::MinimalUndefinedAllGamma: return "minimal_undefined_all_gamma";
        case VerdictReason::FreenessDeltaWitness: return "freeness_delta_witness";
        case VerdictReason::FreenessAllGammaWitness: return "freeness_all_gamma_witness";
        case VerdictReason::TargetHolds: return "target_holds";
        case VerdictReason::TargetFails: return "target_fails";
        case VerdictReason::IllegalMove: return "illegal_move";
        case VerdictReason::TargetUnspecified: return "target_unspecified";
        case VerdictReason::RadiusInsufficient: return "radius_insufficient";
    }
    return "unknown";
}

MoveResult validate_move(const GameConfig& config, const GameState& state, const Move& move) {
    MoveResult result;
    const WordClass mover_block = block_of(state.turn);

    std::set<Word, ShortlexLess> keys;
    for (const auto& [key, value] : move.assignments)
        if (!keys.insert(key).second)
            result.violations.push_back({RuleClause::DuplicateKeyInMove, key});

    const Word end_before = orbit_report(state.y).ends.value_or(Word{});
    if (keys.count(end_before) == 0)
        result.violations.push_back({RuleClause::ForcedAssignmentMissing, end_before});

    for (const auto& [key, value] : move.assignments) {
        if (key == end_before) continue;
        if (classify(key, config.split) != mover_block)
            result.violations.push_back({RuleClause::ExtraKeyWrongType, key});
    }

    PartialInjection y = state.y;
    for (const auto& [key, value] : move.assignments) {
        try {
            y.insert(key, value);
        } catch (const std::invalid_argument&) {
            result.violations.push_back({RuleClause::NotInjective, key});
        }
    }

    OrbitReport report = orbit_report(y);
    if (!report.is_one_orbit)
        result.violations.push_back({RuleClause::NotOneOrbit, Word{}});
    Word end_after = report.ends.value_or(Word{});
    if (!report.ends || classify(end_after, config.split) != mover_block)
        result.violations.push_back({RuleClause::WrongEndType, end_after});

    if (result.violations.empty()) {
        GameState next{std::move(y), opponent(state.turn), state.history, state.move_count + 1};
        next.history.push_back(move);
        result.state = std::move(next);
    }
    return result;
}

namespace {

bool is_block_element(const FactorSplit& split, const Word& u) {
    if (u.is_identity()) return false;
    bool first = split.gamma_block.at(u.syllables().front().factor);
    for (const Syllable& s : u.syllables())
        if (split.gamma_block.at(s.factor) != first) return false;
    return true;
}

bool is_delta_block_element(const FactorSplit& split, const Word& u) {
    return is_block_element(split, u) && !split.gamma_block.at(u.syllables().front().factor);
}

}  // namespace

Verdict adjudicate_finite(const GameConfig& config, const GameState& state,
                          unsigned explored_radius) {
    const GroupSpec& spec = config.spec;
    const std::vector<Word> window = ball(spec, standard_generators(spec), explored_radius);

    std::vector<const Word*> undefined;
    for (const Word& u : window)
        if (!state.y.in_domain(u)) undefined.push_back(&u);

    if (!undefined.empty()) {
        std::size_t m = SIZE_MAX;
        for (const Word* u : undefined) m = std::min(m, u->length());
        const Word* least_minimal = nullptr;
        for (const Word* u : undefined) {
            if (u->length() != m) continue;
            if (!least_minimal) least_minimal = u;  // window is shortlex sorted
            if (classify(*u, config.split) != WordClass::GammaWord)
                return {Winner::PlayerI, VerdictReason::MinimalUndefinedDeltaOrIdentity, *u};
        }
        return {Winner::PlayerII, VerdictReason::MinimalUndefinedAllGamma, *least_minimal};
    }

    // y covers the ball; look for block elements fixing the explored part
    // of a translate of y.
    struct FreenessWitness {
        Word alpha;
        bool delta_fixer = false;
    };
    std::vector<Word> block_elements;
    for (const Word& g : window)
        if (is_block_element(config.split, g)) block_elements.push_back(g);

    std::vector<FreenessWitness> witnesses;
    for (const Word& alpha : window) {
        PartialInjection translate = act(invert(spec, alpha), state.y);
        bool hit = false, delta_fixer = false;
        for (const Word& g : block_elements) {
            if (act(g, translate) == translate) {
                hit = true;
                if (is_delta_block_element(config.split, g)) delta_fixer = true;
            }
        }
        if (hit) witnesses.push_back({alpha, delta_fixer});
    }

    if (!witnesses.empty()) {
        std::size_t m = SIZE_MAX;
        for (const auto& w : witnesses) m = std::min(m, w.alpha.length());
        for (const auto& w : witnesses) {
            if (w.alpha.length() != m) continue;
            WordClass c = classify(w.alpha, config.split);
            if (c == WordClass::DeltaWord || (c == WordClass::Identity && w.delta_fixer))
                return {Winner::PlayerI, VerdictReason::FreenessDeltaWitness, w.alpha};
        }
        for (const auto& w : witnesses)
            if (w.alpha.length() == m)
                return {Winner::PlayerII, VerdictReason::FreenessAllGammaWitness, w.alpha};
    }

    if (!config.target_predicate)
        return {Winner::Unresolved, VerdictReason::TargetUnspecified, std::nullopt};
    if (config.target_predicate(state.y))
        return {Winner::PlayerII, VerdictReason::TargetHolds, std::nullopt};
    return {Winner::PlayerI, VerdictReason::TargetFails, std::nullopt};
}

namespace {

bool fresh(const PartialInjection& y, const Word& u) {
    return !y.in_domain(u) && !y.in_range(u);
}

/// Shortlex-least fresh word of the given class, searched in growing balls.
Word least_fresh(const GameConfig& config, const PartialInjection& y, WordClass wanted) {
    const auto gens = standard_generators(config.spec);
    for (unsigned radius = 1; radius <= 64; ++radius) {
        for (const Word& u : ball(config.spec, gens, radius))
            if (classify(u, config.split) == wanted && fresh(y, u)) return u;
    }
    throw std::runtime_error("least_fresh: no candidate found");
}

std::vector<Word> fresh_candidates(const GameConfig& config, const PartialInjection& y,
                                   WordClass wanted, unsigned radius) {
    std::vector<Word> out;
    for (const Word& u : ball(config.spec, standard_generators(config.spec), radius))
        if (classify(u, config.split) == wanted && fresh(y, u)) out.push_back(u);
    return out;
}

}  // namespace

Move greedy_minimal(const GameConfig& config, const GameState& state, std::uint64_t) {
    const Word end = orbit_report(state.y).ends.value_or(Word{});
    return {{{end, least_fresh(config, state.y, block_of(state.turn))}}};
}

Move random_legal(const GameConfig& config, const GameState& state, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const OrbitReport report = orbit_report(state.y);
    const Word end = report.ends.value_or(Word{});
    const WordClass mover_block = block_of(state.turn);

    std::vector<Word> pool = fresh_candidates(config, state.y, mover_block, 3);
    if (pool.empty()) return greedy_minimal(config, state, seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const Word value = pool[pick(rng)];

    Move move{{{end, value}}};
    if (rng() & 1) {
        // Extend the chain backward: a fresh mover-block key mapping to
        // the current begin point keeps one orbit and leaves the end as
        // the forced value.
        const Word begin = report.begins.value_or(Word{});
        std::vector<Word> keys;
        for (const Word& u : pool)
            if (!(u == value) && !(u == end)) keys.push_back(u);
        if (!keys.empty()) {
            std::uniform_int_distribution<std::size_t> pick_key(0, keys.size() - 1);
            move.assignments.push_back({keys[pick_key(rng)], begin});
        }
    }
    return move;
}

Transcript play(const GameConfig& config, const Strategy& strategy_one,
                const Strategy& strategy_two, unsigned rounds, std::uint64_t seed) {
    Transcript t;
    t.states.push_back(initial_state(config));
    for (unsigned k = 0; k < 2 * rounds; ++k) {
        const GameState& current = t.states.back();
        std::uint64_t move_seed = seed ^ (0x9e3779b97f4a7c15ULL * (k + 1));
        const Strategy& mover = current.turn == Player::I ? strategy_one : strategy_two;
        Move move = mover(config, current, move_seed);
        MoveResult result = validate_move(config, current, move);
        t.moves.push_back(std::move(move));
        if (!result.accepted()) {
            Winner winner = current.turn == Player::I ? Winner::PlayerII : Winner::PlayerI;
            std::optional<Word> witness;
            if (!result.violations.empty()) witness = result.violations.front().offending;
            t.illegal = Verdict{winner, VerdictReason::IllegalMove, witness};
            t.illegal_violations = std::move(result.violations);
            break;
        }
        t.states.push_back(std::move(*result.state));
    }
    return t;
}

}  // namespace hyperfin
