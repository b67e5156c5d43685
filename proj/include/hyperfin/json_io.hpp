#ifndef HYPERFIN_JSON_IO_HPP
#define HYPERFIN_JSON_IO_HPP

#include <map>
#include <string>

#include <json.hpp>

#include "hyperfin/dynamics.hpp"
#include "hyperfin/flows.hpp"
#include "hyperfin/game.hpp"
#include "hyperfin/rational.hpp"
#include "hyperfin/witness.hpp"

namespace hyperfin {

using Json = nlohmann::json;

// Words: compact text form plus the [[factor, exponent], ...] array form.
Json word_to_json(const Word& u);
Word word_from_json(const GroupSpec& spec, const Json& j);

Json group_to_json(const GroupSpec& spec);
GroupSpec group_from_json(const Json& j);

Json injection_to_json(const PartialInjection& x);
PartialInjection injection_from_json(const Json& j);

Json graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const Json& j);

Json framed_to_json(const FramedGraph& fg);
FramedGraph framed_from_json(const Json& j);

Json functional_to_json(const FunctionalGraph& fg);
FunctionalGraph functional_from_json(const Json& j);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json witness_to_json(const WitnessSequence& w);
WitnessSequence witness_from_json(const Json& j);

Json verdict_to_json(const GroupSpec& spec, const Verdict& v);

Json transcript_to_json(const GameConfig& config, const Transcript& t);
/// Rebuilds the config (without target predicate) and the move list.
std::pair<GameConfig, std::vector<Move>> transcript_from_json(const Json& j);

Json ball_to_json(const CayleyBall& ball);
CayleyBall ball_from_json(const Json& j);

Json instance_to_json(const EquidecompositionInstance& inst);
EquidecompositionInstance instance_from_json(const Json& j);

Json flow_to_json(const EdgeFlow& flow);

// DOT text for graphs; optional vertex colors and frontier shading.
std::string graph_to_dot(const SimpleGraph& g, const std::vector<int>* colors = nullptr,
                         const std::vector<bool>* frontier = nullptr);
/// Level-colored edges: each edge is styled by the first level containing it.
std::string witness_to_dot(const WitnessSequence& w);

/// FNV-1a 64-bit digest of a string, as fixed-width hex.
std::string digest(const std::string& data);

struct RunManifest {
    std::string subcommand;
    std::uint64_t seed = 0;
    std::map<std::string, std::string> parameters;
    std::string tool_version;
    std::string result_digest;
};

Json manifest_to_json(const RunManifest& m);

}  // namespace hyperfin

#endif
