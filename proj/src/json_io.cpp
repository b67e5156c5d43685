#include "hyperfin/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace hyperfin {

Json word_to_json(const Word& u) {
    Json j = Json::array();
    for (const Syllable& s : u.syllables()) j.push_back({s.factor, s.exponent});
    return j;
}

Word word_from_json(const GroupSpec& spec, const Json& j) {
    if (j.is_string()) return parse_word(spec, j.get<std::string>());
    std::vector<Syllable> raw;
    for (const auto& pair : j)
        raw.push_back({pair.at(0).get<std::size_t>(), pair.at(1).get<std::int64_t>()});
    return reduce(spec, raw);
}

Json group_to_json(const GroupSpec& spec) {
    Json factors = Json::array();
    for (const auto& f : spec.factors()) factors.push_back({{"order", f.order}, {"name", f.name}});
    return {{"factors", factors}};
}

GroupSpec group_from_json(const Json& j) {
    std::vector<CyclicFactor> factors;
    for (const auto& f : j.at("factors"))
        factors.push_back({f.at("order").get<unsigned>(), f.at("name").get<std::string>()});
    return GroupSpec(std::move(factors));
}

Json injection_to_json(const PartialInjection& x) {
    Json entries = Json::array();
    for (const auto& [key, value] : x.entries())
        entries.push_back({to_text(x.spec(), key), to_text(x.spec(), value)});
    return {{"group", group_to_json(x.spec())}, {"entries", entries}};
}

PartialInjection injection_from_json(const Json& j) {
    GroupSpec spec = group_from_json(j.at("group"));
    PartialInjection x(spec);
    for (const auto& pair : j.at("entries"))
        x.insert(word_from_json(spec, pair.at(0)), word_from_json(spec, pair.at(1)));
    return x;
}

Json graph_to_json(const SimpleGraph& g) {
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.vertex_count()}, {"edges", edges}, {"loops", g.allows_loops()}};
}

SimpleGraph graph_from_json(const Json& j) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return SimpleGraph::from_edges(j.at("n").get<std::size_t>(), edges,
                                   j.value("loops", false));
}

Json framed_to_json(const FramedGraph& fg) {
    Json j = graph_to_json(fg.graph);
    Json frontier = Json::array();
    for (std::size_t v = 0; v < fg.frontier.size(); ++v)
        if (fg.frontier[v]) frontier.push_back(v);
    j["frontier"] = frontier;
    return j;
}

FramedGraph framed_from_json(const Json& j) {
    FramedGraph fg;
    fg.graph = graph_from_json(j);
    fg.frontier.assign(fg.graph.vertex_count(), false);
    for (const auto& v : j.at("frontier")) fg.frontier.at(v.get<std::size_t>()) = true;
    return fg;
}

Json functional_to_json(const FunctionalGraph& fg) {
    Json f = Json::array();
    for (std::size_t v = 0; v < fg.vertex_count(); ++v) f.push_back(fg.image((int)v));
    return {{"n", fg.vertex_count()}, {"f", f}, {"fanin_bound", fg.fanin_bound()}};
}

FunctionalGraph functional_from_json(const Json& j) {
    std::vector<int> f;
    for (const auto& v : j.at("f")) f.push_back(v.get<int>());
    return FunctionalGraph(std::move(f), j.at("fanin_bound").get<unsigned>());
}

Json rational_to_json(const Rational& r) {
    return {{"num", r.numerator().str()}, {"den", r.denominator().str()}};
}

Rational rational_from_json(const Json& j) {
    return Rational(BigInt(j.at("num").get<std::string>()),
                    BigInt(j.at("den").get<std::string>()));
}

Json witness_to_json(const WitnessSequence& w) {
    Json levels = Json::array();
    const auto& edges = w.host.edges();
    for (const EdgeSubset& level : w.levels) {
        Json edge_list = Json::array();
        for (std::size_t e = 0; e < level.member.size(); ++e)
            if (level.member[e]) edge_list.push_back({edges[e].first, edges[e].second});
        levels.push_back(edge_list);
    }
    Json host = graph_to_json(w.host);
    return {{"host", host}, {"host_hash", digest(host.dump())}, {"levels", levels}};
}

WitnessSequence witness_from_json(const Json& j) {
    WitnessSequence w;
    w.host = graph_from_json(j.at("host"));
    for (const auto& edge_list : j.at("levels")) {
        EdgeSubset level = EdgeSubset::none(w.host);
        for (const auto& e : edge_list)
            level.member.at(w.host.edge_id(e.at(0).get<int>(), e.at(1).get<int>())) = true;
        w.levels.push_back(std::move(level));
    }
    return w;
}

Json verdict_to_json(const GroupSpec& spec, const Verdict& v) {
    Json j = {{"winner", v.winner == Winner::PlayerI    ? "player_i"
                         : v.winner == Winner::PlayerII ? "player_ii"
                                                        : "unresolved"},
              {"reason", verdict_reason_name(v.reason)}};
    j["witness"] = v.witness ? Json(to_text(spec, *v.witness)) : Json(nullptr);
    return j;
}

Json transcript_to_json(const GameConfig& config, const Transcript& t) {
    Json gamma = Json::array();
    for (bool b : config.split.gamma_block) gamma.push_back(b);
    Json moves = Json::array();
    for (const Move& m : t.moves) {
        Json assignments = Json::array();
        for (const auto& [key, value] : m.assignments)
            assignments.push_back({to_text(config.spec, key), to_text(config.spec, value)});
        moves.push_back({{"assignments", assignments}});
    }
    Json verdicts = Json::array();
    for (std::size_t i = 0; i < t.moves.size(); ++i) {
        bool accepted = !(t.illegal && i + 1 == t.moves.size());
        verdicts.push_back({{"accepted", accepted}});
    }
    Json j = {{"config", {{"group", group_to_json(config.spec)}, {"gamma_block", gamma}}},
              {"moves", moves},
              {"verdicts", verdicts}};
    if (t.illegal) {
        j["illegal"] = verdict_to_json(config.spec, *t.illegal);
        Json clauses = Json::array();
        for (const Violation& v : t.illegal_violations)
            clauses.push_back({{"clause", rule_clause_name(v.clause)},
                               {"offending", to_text(config.spec, v.offending)}});
        j["illegal"]["clauses"] = clauses;
    }
    return j;
}

std::pair<GameConfig, std::vector<Move>> transcript_from_json(const Json& j) {
    GameConfig config;
    config.spec = group_from_json(j.at("config").at("group"));
    for (const auto& b : j.at("config").at("gamma_block"))
        config.split.gamma_block.push_back(b.get<bool>());
    std::vector<Move> moves;
    for (const auto& m : j.at("moves")) {
        Move move;
        for (const auto& pair : m.at("assignments"))
            move.assignments.push_back({word_from_json(config.spec, pair.at(0)),
                                        word_from_json(config.spec, pair.at(1))});
        moves.push_back(std::move(move));
    }
    return {std::move(config), std::move(moves)};
}

Json ball_to_json(const CayleyBall& ball) {
    Json labels = Json::array();
    for (const Word& w : ball.labels) labels.push_back(to_text(ball.spec, w));
    return {{"group", group_to_json(ball.spec)},
            {"labels", labels},
            {"graph", framed_to_json(ball.framed)}};
}

CayleyBall ball_from_json(const Json& j) {
    CayleyBall ball;
    ball.spec = group_from_json(j.at("group"));
    for (const auto& label : j.at("labels"))
        ball.labels.push_back(parse_word(ball.spec, label.get<std::string>()));
    ball.framed = framed_from_json(j.at("graph"));
    return ball;
}

Json instance_to_json(const EquidecompositionInstance& inst) {
    Json tables = Json::array();
    for (const auto& row : inst.labels) {
        Json table = Json::array();
        for (const Word& w : row) table.push_back(to_text(inst.ball.spec, w));
        tables.push_back(table);
    }
    return {{"ball", ball_to_json(inst.ball)}, {"n", inst.n}, {"labels", tables}};
}

EquidecompositionInstance instance_from_json(const Json& j) {
    EquidecompositionInstance inst;
    inst.ball = ball_from_json(j.at("ball"));
    inst.n = j.at("n").get<unsigned>();
    for (const auto& table : j.at("labels")) {
        std::vector<Word> row;
        for (const auto& w : table) row.push_back(parse_word(inst.ball.spec, w.get<std::string>()));
        inst.labels.push_back(std::move(row));
    }
    return inst;
}

Json flow_to_json(const EdgeFlow& flow) {
    Json j = Json::array();
    for (const auto& [edge, count] : flow.g) j.push_back({edge.first, edge.second, count});
    return j;
}

std::string graph_to_dot(const SimpleGraph& g, const std::vector<int>* colors,
                         const std::vector<bool>* frontier) {
    static const char* kPalette[] = {"lightblue", "lightyellow", "lightpink",
                                     "lightgreen", "orange",      "cyan"};
    std::ostringstream out;
    out << "graph G {\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        std::vector<std::string> attrs;
        if (colors) {
            int c = colors->at(v);
            attrs.push_back("label=\"" + std::to_string(v) + "/" + std::to_string(c) + "\"");
            attrs.push_back(std::string("style=filled,fillcolor=") + kPalette[c % 6]);
        }
        if (frontier && frontier->at(v)) attrs.push_back("shape=box");
        if (!attrs.empty()) {
            out << " [";
            for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? "," : "") << attrs[i];
            out << "]";
        }
        out << ";\n";
    }
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string witness_to_dot(const WitnessSequence& w) {
    static const char* kPalette[] = {"red", "blue", "green", "purple", "orange", "brown"};
    std::ostringstream out;
    out << "graph W {\n";
    for (std::size_t v = 0; v < w.host.vertex_count(); ++v) out << "  " << v << ";\n";
    const auto& edges = w.host.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        int first_level = -1;
        for (std::size_t i = 0; i < w.levels.size(); ++i)
            if (w.levels[i].member.at(e)) {
                first_level = (int)i;
                break;
            }
        out << "  " << edges[e].first << " -- " << edges[e].second;
        if (first_level >= 0)
            out << " [color=" << kPalette[first_level % 6] << ",label=" << first_level << "]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string digest(const std::string& data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << h;
    return out.str();
}

Json manifest_to_json(const RunManifest& m) {
    return {{"subcommand", m.subcommand},
            {"seed", m.seed},
            {"parameters", m.parameters},
            {"tool_version", m.tool_version},
            {"result_digest", m.result_digest}};
}

}  // namespace hyperfin
