#include <doctest.h>

#include "hyperfin/json_io.hpp"
#include "hyperfin/locallemma.hpp"

using namespace hyperfin;

namespace {

const GroupSpec kF2 = GroupSpec::free_group(2);
const GroupSpec kSquares = GroupSpec::free_product_of_cyclic(3, 2);

}  // namespace

TEST_CASE("word round trips in both accepted forms") {
    Word u = parse_word(kF2, "s^2.t^-1");
    Json j = word_to_json(u);
    CHECK(j.dump() == "[[0,2],[1,-1]]");
    CHECK(word_from_json(kF2, j) == u);
    CHECK(word_from_json(kF2, Json("s^2.t^-1")) == u);
    CHECK(word_from_json(kF2, Json("1")).is_identity());
    CHECK(word_to_json(Word()).dump() == "[]");
    // Array form is reduced on the way in.
    CHECK(word_from_json(kSquares, Json::parse("[[0,1],[0,1]]")).is_identity());
}

TEST_CASE("group round trip") {
    for (const GroupSpec& spec : {kF2, kSquares, GroupSpec::free_product_of_cyclic(2, 5)}) {
        GroupSpec back = group_from_json(group_to_json(spec));
        CHECK(back == spec);
    }
}

TEST_CASE("injection round trip") {
    PartialInjection x(kSquares);
    x.insert(Word(), parse_word(kSquares, "a"));
    x.insert(parse_word(kSquares, "a"), parse_word(kSquares, "a.b"));
    PartialInjection back = injection_from_json(injection_to_json(x));
    CHECK(back == x);
    CHECK(back.spec() == kSquares);
}

TEST_CASE("graph, framed and functional round trips") {
    SimpleGraph g = SimpleGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 2}}, true);
    CHECK(graph_from_json(graph_to_json(g)) == g);

    FramedGraph fg{SimpleGraph::from_edges(3, {{0, 1}, {1, 2}}), {true, false, true}};
    FramedGraph fback = framed_from_json(framed_to_json(fg));
    CHECK(fback.graph == fg.graph);
    CHECK(fback.frontier == fg.frontier);

    FunctionalGraph fn({1, 2, FunctionalGraph::kTerminal}, 2);
    FunctionalGraph fnback = functional_from_json(functional_to_json(fn));
    REQUIRE(fnback.vertex_count() == 3);
    for (int v = 0; v < 3; ++v) CHECK(fnback.image(v) == fn.image(v));
    CHECK(fnback.fanin_bound() == 2);
}

TEST_CASE("rational round trip keeps exact big values") {
    Rational r = Rational(BigInt(1), pow2(120)) + euler_upper();
    CHECK(rational_from_json(rational_to_json(r)) == r);
    Json j = rational_to_json(Rational(1, 4));
    CHECK(j.at("num") == "1");
    CHECK(j.at("den") == "4");
}

TEST_CASE("witness round trip and host digest") {
    SimpleGraph host = SimpleGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    EdgeSubset first = EdgeSubset::none(host);
    first.member[host.edge_id(1, 2)] = true;
    WitnessSequence w{host, {first, EdgeSubset::all(host)}};
    Json j = witness_to_json(w);
    CHECK(j.at("host_hash") == digest(j.at("host").dump()));
    WitnessSequence back = witness_from_json(j);
    CHECK(back.host == host);
    REQUIRE(back.levels.size() == 2);
    CHECK(back.levels[0].member == first.member);
    CHECK(back.levels[1].count() == 3);
}

TEST_CASE("verdict serialization") {
    Json j = verdict_to_json(kF2, {Winner::PlayerI, VerdictReason::TargetFails,
                                   parse_word(kF2, "t")});
    CHECK(j.at("winner") == "player_i");
    CHECK(j.at("reason") == "target_fails");
    CHECK(j.at("witness") == "t");
    Json open = verdict_to_json(kF2, {Winner::Unresolved, VerdictReason::TargetUnspecified,
                                      std::nullopt});
    CHECK(open.at("witness").is_null());
}

TEST_CASE("transcript round trip replays to the same serialization") {
    GameConfig config;
    config.spec = kF2;
    config.split.gamma_block = {true, false};
    Transcript t = play(config, greedy_minimal, random_legal, 3, 11);
    Json j = transcript_to_json(config, t);

    auto [config2, moves] = transcript_from_json(j);
    CHECK(config2.spec == config.spec);
    CHECK(config2.split.gamma_block == config.split.gamma_block);
    Transcript replayed;
    replayed.states.push_back(initial_state(config2));
    for (const Move& m : moves) {
        MoveResult r = validate_move(config2, replayed.states.back(), m);
        REQUIRE(r.accepted());
        replayed.moves.push_back(m);
        replayed.states.push_back(*r.state);
    }
    CHECK(transcript_to_json(config2, replayed).dump() == j.dump());
}

TEST_CASE("transcript records an illegal final move with its clauses") {
    GameConfig config;
    config.spec = kF2;
    config.split.gamma_block = {true, false};
    Strategy bad = [](const GameConfig& c, const GameState&, std::uint64_t) {
        return Move{{{Word(), parse_word(c.spec, "t")}}};
    };
    Transcript t = play(config, bad, greedy_minimal, 2, 0);
    Json j = transcript_to_json(config, t);
    REQUIRE(t.illegal.has_value());
    CHECK(j.at("verdicts").back().at("accepted") == false);
    CHECK(j.at("illegal").at("reason") == "illegal_move");
    CHECK(j.at("illegal").at("clauses").size() == t.illegal_violations.size());
}

TEST_CASE("ball, instance and flow serialization") {
    CayleyBall ball = cayley_ball_graph(kSquares, standard_generators(kSquares), 2, false);
    CayleyBall bback = ball_from_json(ball_to_json(ball));
    CHECK(bback.spec == ball.spec);
    CHECK(bback.labels == ball.labels);
    CHECK(bback.framed.graph == ball.framed.graph);
    CHECK(bback.framed.frontier == ball.framed.frontier);

    EquidecompositionInstance inst = generate_instance(ball, 2, 3);
    EquidecompositionInstance iback = instance_from_json(instance_to_json(inst));
    CHECK(iback.n == inst.n);
    CHECK(iback.labels == inst.labels);
    CHECK(path_flow(iback).g == path_flow(inst).g);

    EdgeFlow flow;
    flow.g[{0, 1}] = 2;
    flow.g[{1, 0}] = 1;
    CHECK(flow_to_json(flow).dump() == "[[0,1,2],[1,0,1]]");
}

TEST_CASE("dot output mentions vertices, edges and levels") {
    SimpleGraph g = SimpleGraph::from_edges(3, {{0, 1}, {1, 2}});
    std::vector<int> colors{0, 1, 0};
    std::vector<bool> frontier{false, false, true};
    std::string dot = graph_to_dot(g, &colors, &frontier);
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("shape=box") != std::string::npos);
    CHECK(dot.find("fillcolor=") != std::string::npos);

    EdgeSubset first = EdgeSubset::none(g);
    first.member[g.edge_id(0, 1)] = true;
    WitnessSequence w{g, {first, EdgeSubset::all(g)}};
    std::string wdot = witness_to_dot(w);
    CHECK(wdot.find("label=0") != std::string::npos);
    CHECK(wdot.find("label=1") != std::string::npos);
}

TEST_CASE("digest is a stable fixed-width hex fingerprint") {
    CHECK(digest("") == "cbf29ce484222325");
    CHECK(digest("a") == "af63dc4c8601ec8c");
    CHECK(digest("hyperfin").size() == 16);
    CHECK(digest("hyperfin") != digest("hyperfim"));
}

TEST_CASE("manifest serialization") {
    RunManifest m{"lll sweep", 7, {{"from", "1"}, {"to", "12"}}, "0.1.0", digest("x")};
    Json j = manifest_to_json(m);
    CHECK(j.at("subcommand") == "lll sweep");
    CHECK(j.at("seed") == 7);
    CHECK(j.at("parameters").at("to") == "12");
}
