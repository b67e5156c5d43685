// Command-line front end: generators, constructions, validators, and
// exporters with JSON on stdout and diagnostics on stderr.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hyperfin/batch.hpp"
#include "hyperfin/json_io.hpp"
#include "hyperfin/locallemma.hpp"

namespace hf = hyperfin;

namespace {

constexpr const char* kVersion = "hyperfin 1.0.0";

// Exit codes: 0 success, 1 validation failure, 2 usage error.
constexpr int kOk = 0;
constexpr int kInvalid = 1;

struct CommonOpts {
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    unsigned radius = 2;
    unsigned n = 1;
    unsigned fanin = 3;
    std::string format = "json";
    std::string in_path;
};

hf::Json read_input(const CommonOpts& opts) {
    if (opts.in_path.empty() || opts.in_path == "-") {
        hf::Json j;
        std::cin >> j;
        return j;
    }
    std::ifstream in(opts.in_path);
    if (!in) throw CLI::ValidationError("--in", "cannot open " + opts.in_path);
    hf::Json j;
    in >> j;
    return j;
}

int emit(const std::string& subcommand, const CommonOpts& opts, const hf::Json& payload,
         int code = kOk) {
    std::string text = payload.dump(2);
    std::cout << text << "\n";
    hf::RunManifest manifest{subcommand, opts.seed, {}, kVersion, hf::digest(text)};
    manifest.parameters["radius"] = std::to_string(opts.radius);
    manifest.parameters["n"] = std::to_string(opts.n);
    manifest.parameters["fanin"] = std::to_string(opts.fanin);
    std::cerr << hf::manifest_to_json(manifest).dump() << "\n";
    return code;
}

struct GroupChoice {
    unsigned free_rank = 0;
    unsigned cyclic_m = 0;
    unsigned cyclic_k = 2;
    std::string group_json;

    hf::GroupSpec resolve() const {
        if (!group_json.empty()) {
            std::ifstream in(group_json);
            hf::Json j;
            in >> j;
            return hf::group_from_json(j);
        }
        if (free_rank > 0) return hf::GroupSpec::free_group(free_rank);
        if (cyclic_m > 0) return hf::GroupSpec::free_product_of_cyclic(cyclic_m, cyclic_k);
        throw CLI::ValidationError("group", "specify --free, --cyclic-m, or --group-json");
    }
};

void add_group_flags(CLI::App* cmd, GroupChoice& gc) {
    cmd->add_option("--free", gc.free_rank, "free group on this many generators");
    cmd->add_option("--cyclic-m", gc.cyclic_m, "free product of this many cyclic factors");
    cmd->add_option("--cyclic-k", gc.cyclic_k, "order of each cyclic factor");
    cmd->add_option("--group-json", gc.group_json, "group description file");
}

hf::GameConfig replay_config(const hf::Json& j) {
    auto [config, moves] = hf::transcript_from_json(j);
    (void)moves;
    return config;
}

hf::FactorSplit half_split(const hf::GroupSpec& spec, const std::vector<unsigned>& gamma) {
    hf::FactorSplit split;
    split.gamma_block.assign(spec.factor_count(), false);
    if (gamma.empty()) {
        for (std::size_t i = 0; i < spec.factor_count() / 2; ++i) split.gamma_block[i] = true;
    } else {
        for (unsigned i : gamma) split.gamma_block.at(i) = true;
    }
    return split;
}

hf::Strategy strategy_by_name(const std::string& name) {
    if (name == "greedy") return hf::greedy_minimal;
    if (name == "random") return hf::random_legal;
    throw CLI::ValidationError("--strategy", "unknown strategy " + name);
}

hf::Json level_stats_json(const hf::WitnessReport& report) {
    hf::Json levels = hf::Json::array();
    for (const auto& s : report.levels)
        levels.push_back({{"components", s.component_count},
                          {"min_component", s.min_component},
                          {"max_component", s.max_component}});
    return levels;
}

hf::Json build_one_witness(const std::string& kind, unsigned n, unsigned fanin,
                           std::uint64_t seed) {
    hf::FunctionalWitnessResult result;
    if (kind == "functional") {
        result = hf::functional_witness(hf::random_functional_graph(n, fanin, seed));
    } else if (kind == "degree2") {
        result = hf::degree_two_witness(hf::random_degree_two_graph(n, seed));
    } else {
        throw CLI::ValidationError("--kind", "unknown kind " + kind);
    }
    hf::Json j = hf::witness_to_json(result.witness);
    hf::Json steps = hf::Json::array();
    for (const auto& s : result.steps)
        steps.push_back({{"level", s.level},
                         {"fanin", s.fanin},
                         {"min_class", s.min_class},
                         {"max_class", s.max_class},
                         {"singleton_classes", s.singleton_classes}});
    j["steps"] = steps;
    j["meta"] = {{"kind", kind}, {"n", n}, {"fanin", fanin}, {"seed", seed}};
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-scale combinatorics of hyperfinite graphs"};
    app.set_config("--config", "", "optional key=value config file");
    app.require_subcommand(1);

    CommonOpts opts;
    app.add_option("--seed", opts.seed, "random seed")->capture_default_str();
    app.add_option("--jobs", opts.jobs, "parallel instances")->capture_default_str();
    app.add_option("--radius", opts.radius, "ball radius")->capture_default_str();
    app.add_option("--n", opts.n, "size parameter")->capture_default_str();
    app.add_option("--fanin", opts.fanin, "fanin bound")->capture_default_str();
    app.add_option("--format", opts.format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}))
        ->capture_default_str();
    app.add_option("--in", opts.in_path, "input file (default stdin)");

    int exit_code = kOk;
    auto run = [&](std::function<int()> body) { return [&, body] { exit_code = body(); }; };

    // group ball | mul
    auto* group = app.add_subcommand("group", "word arithmetic and balls");
    group->require_subcommand(1);
    static GroupChoice group_gc;
    auto* group_ball = group->add_subcommand("ball", "enumerate a metric ball");
    add_group_flags(group_ball, group_gc);
    group_ball->callback(run([&] {
        hf::GroupSpec spec = group_gc.resolve();
        auto words = hf::ball(spec, hf::standard_generators(spec), opts.radius);
        hf::Json elements = hf::Json::array();
        for (const auto& w : words) elements.push_back(hf::to_text(spec, w));
        return emit("group ball", opts,
                    {{"group", hf::group_to_json(spec)},
                     {"radius", opts.radius},
                     {"size", words.size()},
                     {"elements", elements}});
    }));
    static std::vector<std::string> mul_words;
    auto* group_mul = group->add_subcommand("mul", "multiply words");
    add_group_flags(group_mul, group_gc);
    group_mul->add_option("words", mul_words, "words in text form")->expected(2, -1);
    group_mul->callback(run([&] {
        hf::GroupSpec spec = group_gc.resolve();
        hf::Word product;
        for (const auto& text : mul_words)
            product = hf::multiply(spec, product, hf::parse_word(spec, text));
        return emit("group mul", opts,
                    {{"product", hf::to_text(spec, product)},
                     {"json_form", hf::word_to_json(product)}});
    }));

    // dyn act | w | orbit
    auto* dyn = app.add_subcommand("dyn", "partial injection dynamics");
    dyn->require_subcommand(1);
    static std::string act_word;
    auto* dyn_act = dyn->add_subcommand("act", "apply the twisted action");
    dyn_act->add_option("--word", act_word, "acting group element")->required();
    dyn_act->callback(run([&] {
        hf::PartialInjection x = hf::injection_from_json(read_input(opts));
        hf::Word g = hf::parse_word(x.spec(), act_word);
        return emit("dyn act", opts, hf::injection_to_json(hf::act(g, x)));
    }));
    static std::int64_t w_power = 1;
    auto* dyn_w = dyn->add_subcommand("w", "iterate the w-map");
    dyn_w->add_option("--power", w_power, "iteration count, negative for inverse")
        ->capture_default_str();
    dyn_w->callback(run([&] {
        hf::PartialInjection x = hf::injection_from_json(read_input(opts));
        auto result = hf::w_iterate(x, w_power);
        if (!result) {
            std::cerr << "w-iterate undefined at power " << w_power << "\n";
            return kInvalid;
        }
        return emit("dyn w", opts, hf::injection_to_json(*result));
    }));
    auto* dyn_orbit = dyn->add_subcommand("orbit", "orbit structure report");
    dyn_orbit->callback(run([&] {
        hf::PartialInjection x = hf::injection_from_json(read_input(opts));
        hf::OrbitReport r = hf::orbit_report(x);
        hf::Json j = {{"orbit_count", r.orbit_count}, {"one_orbit", r.is_one_orbit}};
        j["begins"] = r.begins ? hf::Json(hf::to_text(x.spec(), *r.begins)) : hf::Json(nullptr);
        j["ends"] = r.ends ? hf::Json(hf::to_text(x.spec(), *r.ends)) : hf::Json(nullptr);
        return emit("dyn orbit", opts, j);
    }));

    // game play | replay | adjudicate
    auto* game = app.add_subcommand("game", "partial-injection game engine");
    game->require_subcommand(1);
    static GroupChoice game_gc;
    static std::vector<unsigned> gamma_factors;
    static std::string strat_one = "greedy", strat_two = "greedy";
    static unsigned rounds = 4;
    auto* game_play = game->add_subcommand("play", "run strategies against each other");
    add_group_flags(game_play, game_gc);
    game_play->add_option("--gamma", gamma_factors,
                          "factor indices of the first block (default: first half)");
    game_play->add_option("--strategy-one", strat_one, "greedy or random")->capture_default_str();
    game_play->add_option("--strategy-two", strat_two, "greedy or random")->capture_default_str();
    game_play->add_option("--rounds", rounds, "round pairs to play")->capture_default_str();
    game_play->callback(run([&] {
        hf::GameConfig config;
        config.spec = game_gc.resolve();
        config.split = half_split(config.spec, gamma_factors);
        hf::Transcript t = hf::play(config, strategy_by_name(strat_one),
                                    strategy_by_name(strat_two), rounds, opts.seed);
        return emit("game play", opts, hf::transcript_to_json(config, t),
                    t.illegal ? kInvalid : kOk);
    }));
    auto* game_replay = game->add_subcommand("replay", "re-validate a transcript");
    game_replay->callback(run([&] {
        hf::Json j = read_input(opts);
        auto [config, moves] = hf::transcript_from_json(j);
        hf::GameState state = hf::initial_state(config);
        hf::Transcript t;
        t.states.push_back(state);
        for (const hf::Move& move : moves) {
            hf::MoveResult result = hf::validate_move(config, t.states.back(), move);
            t.moves.push_back(move);
            if (!result.accepted()) {
                hf::Winner winner = t.states.back().turn == hf::Player::I ? hf::Winner::PlayerII
                                                                          : hf::Winner::PlayerI;
                t.illegal = hf::Verdict{winner, hf::VerdictReason::IllegalMove, std::nullopt};
                t.illegal_violations = result.violations;
                break;
            }
            t.states.push_back(std::move(*result.state));
        }
        hf::Json out = hf::transcript_to_json(config, t);
        bool matches = out == j;
        out["replay_matches"] = matches;
        return emit("game replay", opts, out, matches && !t.illegal ? kOk : kInvalid);
    }));
    auto* game_adj = game->add_subcommand("adjudicate", "finite-horizon verdict");
    game_adj->callback(run([&] {
        hf::Json j = read_input(opts);
        auto [config, moves] = hf::transcript_from_json(j);
        hf::GameState state = hf::initial_state(config);
        for (const hf::Move& move : moves) {
            hf::MoveResult result = hf::validate_move(config, state, move);
            if (!result.accepted()) {
                std::cerr << "transcript contains an illegal move\n";
                return kInvalid;
            }
            state = std::move(*result.state);
        }
        hf::Verdict v = hf::adjudicate_finite(config, state, opts.radius);
        return emit("game adjudicate", opts, hf::verdict_to_json(config.spec, v));
    }));

    // graph gen | color | recurrent | contract
    auto* graph = app.add_subcommand("graph", "graph generators and colorings");
    graph->require_subcommand(1);
    static std::string graph_kind = "functional";
    auto* graph_gen = graph->add_subcommand("gen", "seeded random graph");
    graph_gen->add_option("--kind", graph_kind, "functional or degree2")->capture_default_str();
    graph_gen->callback(run([&] {
        if (graph_kind == "functional")
            return emit("graph gen", opts,
                        hf::functional_to_json(
                            hf::random_functional_graph(opts.n, opts.fanin, opts.seed)));
        if (graph_kind == "degree2")
            return emit("graph gen", opts,
                        hf::graph_to_json(hf::random_degree_two_graph(opts.n, opts.seed)));
        throw CLI::ValidationError("--kind", "unknown kind " + graph_kind);
    }));
    auto* graph_color = graph->add_subcommand("color", "proper 3-coloring");
    graph_color->callback(run([&] {
        hf::FunctionalGraph fg = hf::functional_from_json(read_input(opts));
        hf::Coloring c = hf::three_color_functional(fg);
        return emit("graph color", opts,
                    {{"colors", c.colors}, {"color_count", c.color_count()}});
    }));
    auto* graph_rec = graph->add_subcommand("recurrent", "forward-recurrent set");
    graph_rec->callback(run([&] {
        hf::FunctionalGraph fg = hf::functional_from_json(read_input(opts));
        hf::Coloring c = hf::three_color_functional(fg);
        std::vector<bool> a = hf::forward_recurrent_set(fg, c);
        hf::Json members = hf::Json::array();
        for (std::size_t v = 0; v < a.size(); ++v)
            if (a[v]) members.push_back(v);
        return emit("graph recurrent", opts, {{"colors", c.colors}, {"a", members}});
    }));
    auto* graph_contract = graph->add_subcommand("contract", "contract by a partition");
    graph_contract->callback(run([&] {
        hf::Json j = read_input(opts);
        hf::SimpleGraph g = hf::graph_from_json(j.at("graph"));
        hf::Partition p;
        for (const auto& c : j.at("class_of")) p.class_of.push_back(c.get<int>());
        auto [minor, vertex_map] = hf::contract(g, p);
        return emit("graph contract", opts,
                    {{"graph", hf::graph_to_json(minor)}, {"vertex_map", vertex_map}});
    }));

    // witness build | validate | stats
    auto* witness = app.add_subcommand("witness", "hyperfiniteness witnesses");
    witness->require_subcommand(1);
    static std::string witness_kind = "functional";
    static unsigned witness_count = 1;
    auto* witness_build = witness->add_subcommand("build", "construct a witness");
    witness_build->add_option("--kind", witness_kind, "functional or degree2")
        ->capture_default_str();
    witness_build->add_option("--count", witness_count, "independent seeded instances")
        ->capture_default_str();
    witness_build->callback(run([&] {
        if (witness_count == 1)
            return emit("witness build", opts,
                        build_one_witness(witness_kind, opts.n, opts.fanin, opts.seed));
        auto results = hf::batch_map<hf::Json>(witness_count, opts.jobs, [&](std::size_t i) {
            return build_one_witness(witness_kind, opts.n, opts.fanin, opts.seed + i);
        });
        return emit("witness build", opts, hf::Json(results));
    }));
    static bool exponential = false;
    auto* witness_validate = witness->add_subcommand("validate", "check a witness");
    witness_validate->add_flag("--exponential", exponential, "require the 2^i component bound");
    witness_validate->callback(run([&] {
        hf::WitnessSequence w = hf::witness_from_json(read_input(opts));
        hf::WitnessReport report = hf::validate_witness(w, exponential);
        hf::Json j = {{"valid", report.valid},
                      {"violation", report.violation},
                      {"first_bad_level", report.first_bad_level},
                      {"levels", level_stats_json(report)}};
        return emit("witness validate", opts, j, report.valid ? kOk : kInvalid);
    }));
    auto* witness_stats = witness->add_subcommand("stats", "per-level component stats");
    witness_stats->callback(run([&] {
        hf::WitnessSequence w = hf::witness_from_json(read_input(opts));
        hf::WitnessReport report = hf::validate_witness(w);
        return emit("witness stats", opts, level_stats_json(report));
    }));

    // lll check | sweep | solve | prob
    auto* lll = app.add_subcommand("lll", "local-lemma rule analysis");
    lll->require_subcommand(1);
    auto* lll_check = lll->add_subcommand("check", "threshold inequality at n");
    lll_check->callback(run([&] {
        hf::ThresholdReport r = hf::lll_condition_check(opts.n);
        bool holds = r.verdict == hf::ThresholdVerdict::Holds;
        hf::Json j = {{"n", r.n},
                      {"holds", holds},
                      {"lhs", r.lhs.str()},
                      {"rhs_low", hf::rational_to_json(r.rhs_low)},
                      {"rhs_high", hf::rational_to_json(r.rhs_high)}};
        return emit("lll check", opts, j, holds ? kOk : kInvalid);
    }));
    static unsigned sweep_from = 1, sweep_to = 12;
    auto* lll_sweep_cmd = lll->add_subcommand("sweep", "minimal n satisfying the threshold");
    lll_sweep_cmd->add_option("--from", sweep_from)->capture_default_str();
    lll_sweep_cmd->add_option("--to", sweep_to)->capture_default_str();
    lll_sweep_cmd->callback(run([&] {
        auto minimal = hf::lll_sweep(sweep_from, sweep_to);
        hf::Json j = {{"from", sweep_from}, {"to", sweep_to}};
        j["minimal_n"] = minimal ? hf::Json(*minimal) : hf::Json(nullptr);
        return emit("lll sweep", opts, j, minimal ? kOk : kInvalid);
    }));
    auto* lll_prob = lll->add_subcommand("prob", "exact failure probability");
    lll_prob->callback(run([&] {
        hf::GroupSpec spec = hf::GroupSpec::free_group(2 * opts.n);
        hf::CayleyBall ball =
            hf::cayley_ball_graph(spec, hf::standard_generators(spec), opts.radius, true);
        hf::LocalRule rule = hf::marks_kechris_rule(opts.n, ball);
        int center = ball.index_of(hf::Word());
        hf::Rational p = hf::failure_probability(ball.framed.graph, rule, center);
        hf::Rational expected = hf::marks_kechris_expected_probability(opts.n);
        hf::Json j = {{"n", opts.n},
                      {"probability", hf::rational_to_json(p)},
                      {"closed_form", hf::rational_to_json(expected)},
                      {"agree", p == expected}};
        return emit("lll prob", opts, j, p == expected ? kOk : kInvalid);
    }));
    static std::uint64_t budget = 0;
    auto* lll_solve = lll->add_subcommand("solve", "resampling solver");
    lll_solve->add_option("--budget", budget, "max resamples (default 10 e 577 |V|)");
    lll_solve->callback(run([&] {
        hf::GroupSpec spec = hf::GroupSpec::free_group(2 * opts.n);
        hf::CayleyBall ball =
            hf::cayley_ball_graph(spec, hf::standard_generators(spec), opts.radius, true);
        hf::LocalRule rule = hf::marks_kechris_rule(opts.n, ball);
        std::uint64_t max_resamples = budget;
        if (max_resamples == 0)
            max_resamples = (std::uint64_t)(10.0 * 2.718281829 * 577.0 *
                                            (double)ball.framed.graph.vertex_count());
        hf::MoserTardosResult r =
            hf::moser_tardos(ball.framed.graph, rule, opts.seed, max_resamples);
        hf::Json j = {{"solved", r.assignment.has_value()},
                      {"resamples", r.resamples},
                      {"violations_at_stop", r.violations_at_stop},
                      {"vertices", ball.framed.graph.vertex_count()}};
        if (r.assignment) j["assignment"] = *r.assignment;
        return emit("lll solve", opts, j, r.assignment ? kOk : kInvalid);
    }));

    // flows gen | analyze
    auto* flows = app.add_subcommand("flows", "equidecomposition flow analysis");
    flows->require_subcommand(1);
    auto make_flow_ball = [&] {
        hf::GroupSpec spec = hf::GroupSpec::free_product_of_cyclic(3, 2);
        return hf::cayley_ball_graph(spec, hf::standard_generators(spec), opts.radius, false);
    };
    auto* flows_gen = flows->add_subcommand("gen", "seeded instance");
    flows_gen->callback(run([&] {
        hf::InstanceGenStats stats;
        hf::EquidecompositionInstance inst =
            hf::generate_instance(make_flow_ball(), opts.n, opts.seed, &stats);
        hf::Json j = hf::instance_to_json(inst);
        j["rejected_draws"] = stats.rejected_draws;
        return emit("flows gen", opts, j);
    }));
    auto* flows_analyze = flows->add_subcommand("analyze", "flow, discrepancy, anti-matching");
    flows_analyze->add_flag("--from-stdin", "read an instance instead of generating one");
    flows_analyze->callback(run([&] {
        hf::EquidecompositionInstance inst =
            flows_analyze->count("--from-stdin")
                ? hf::instance_from_json(read_input(opts))
                : hf::generate_instance(make_flow_ball(), opts.n, opts.seed);
        hf::EdgeFlow flow = hf::path_flow(inst);
        std::vector<int> h = hf::antimatching_map(inst, flow);
        auto parts = hf::partition_by_generator(inst, h);
        hf::Json disc = hf::Json::array();
        bool positive = true;
        for (std::size_t v = 0; v < inst.ball.labels.size(); ++v) {
            if (!inst.ball.framed.is_interior((int)v)) continue;
            std::int64_t d = hf::discrepancy(inst, flow, (int)v);
            disc.push_back({(int)v, d});
            if (d < 1) positive = false;
        }
        hf::Json j = {{"n", inst.n},
                      {"flow", hf::flow_to_json(flow)},
                      {"interior_discrepancy", disc},
                      {"all_positive", positive},
                      {"h", h},
                      {"parts", {parts[0], parts[1], parts[2]}},
                      {"multiplicity_ok", inst.multiplicity_ok()}};
        return emit("flows analyze", opts, j, positive ? kOk : kInvalid);
    }));

    // export dot | json
    auto* exporter = app.add_subcommand("export", "format conversion");
    exporter->require_subcommand(1);
    auto* export_dot = exporter->add_subcommand("dot", "DOT text from graph-like JSON");
    export_dot->callback(run([&] {
        hf::Json j = read_input(opts);
        std::string dot;
        if (j.contains("levels")) {
            dot = hf::witness_to_dot(hf::witness_from_json(j));
        } else if (j.contains("f")) {
            dot = hf::graph_to_dot(hf::functional_from_json(j).underlying_graph());
        } else if (j.contains("frontier")) {
            hf::FramedGraph fg = hf::framed_from_json(j);
            dot = hf::graph_to_dot(fg.graph, nullptr, &fg.frontier);
        } else {
            dot = hf::graph_to_dot(hf::graph_from_json(j));
        }
        std::cout << dot;
        return kOk;
    }));
    auto* export_json = exporter->add_subcommand("json", "canonical re-serialization");
    export_json->callback(run([&] {
        hf::Json j = read_input(opts);
        return emit("export json", opts, j);
    }));

    // Let top-level flags (--seed, --n, ...) appear after subcommand names.
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (CLI::App* sub : a->get_subcommands(nullptr)) enable_fallthrough(sub);
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;  // prints help or the usage error
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
