#include "hyperfin/flows.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace hyperfin {

int EquidecompositionInstance::target(unsigned i, int v) const {
    return ball.index_of(multiply(ball.spec, labels.at(i).at(v), ball.labels.at(v)));
}

std::size_t EquidecompositionInstance::preimage_count(int v) const {
    std::size_t count = 0;
    for (unsigned i = 0; i <= n; ++i)
        for (std::size_t z = 0; z < ball.labels.size(); ++z)
            if (target(i, (int)z) == v) ++count;
    return count;
}

bool EquidecompositionInstance::multiplicity_ok() const {
    std::vector<std::size_t> count(ball.labels.size(), 0);
    for (unsigned i = 0; i <= n; ++i)
        for (std::size_t z = 0; z < ball.labels.size(); ++z) {
            int t = target(i, (int)z);
            if (t >= 0) ++count[t];
        }
    for (std::size_t v = 0; v < count.size(); ++v)
        if (ball.framed.is_interior((int)v) && count[v] > n) return false;
    return true;
}

std::int64_t EdgeFlow::at(int x, int y) const {
    auto it = g.find({x, y});
    return it == g.end() ? 0 : it->second;
}

namespace {

/// Geodesic generator spelling of a word: each syllable contributes
/// (factor, sign) steps along the shorter way around its factor.
std::vector<std::pair<std::size_t, int>> geodesic_spelling(const GroupSpec& spec, const Word& u) {
    std::vector<std::pair<std::size_t, int>> steps;
    for (const Syllable& s : u.syllables()) {
        const CyclicFactor& f = spec.factor(s.factor);
        std::int64_t e = s.exponent;
        if (f.is_infinite()) {
            int sign = e > 0 ? +1 : -1;
            for (std::int64_t k = 0; k < (e > 0 ? e : -e); ++k) steps.emplace_back(s.factor, sign);
        } else if ((std::uint64_t)e <= f.order - e) {
            for (std::int64_t k = 0; k < e; ++k) steps.emplace_back(s.factor, +1);
        } else {
            for (std::uint64_t k = 0; k < f.order - e; ++k) steps.emplace_back(s.factor, -1);
        }
    }
    return steps;
}

void require_tree(const CayleyBall& ball) {
    const SimpleGraph& g = ball.framed.graph;
    if (g.has_loop() || g.edge_count() != g.vertex_count() - 1)
        throw std::invalid_argument("path_flow: host ball is not a tree");
}

}  // namespace

EdgeFlow path_flow(const EquidecompositionInstance& inst) {
    require_tree(inst.ball);
    const GroupSpec& spec = inst.ball.spec;
    EdgeFlow flow;
    for (unsigned i = 0; i <= inst.n; ++i) {
        for (std::size_t z = 0; z < inst.ball.labels.size(); ++z) {
            auto steps = geodesic_spelling(spec, inst.labels[i][z]);
            // gamma = g_1 ... g_L acts on the left, so the tree path from
            // z to gamma z applies the spelling right to left. The ball
            // is convex in the tree, so a path leaves it at most once.
            Word at = inst.ball.labels[z];
            int cur = (int)z;
            for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
                at = multiply_generator(spec, it->first, it->second, at);
                int next = inst.ball.index_of(at);
                if (next < 0) break;
                ++flow.g[{cur, next}];
                cur = next;
            }
        }
    }
    return flow;
}

std::int64_t discrepancy(const EquidecompositionInstance& inst, const EdgeFlow& flow, int x) {
    std::int64_t total = 0;
    for (int y : inst.ball.framed.graph.neighbors(x)) total += flow.at(x, y) - flow.at(y, x);
    return total;
}

std::vector<int> antimatching_map(const EquidecompositionInstance& inst, const EdgeFlow& flow) {
    const SimpleGraph& g = inst.ball.framed.graph;
    std::vector<int> h(g.vertex_count(), -1);
    for (std::size_t x = 0; x < g.vertex_count(); ++x) {
        for (int y : g.neighbors((int)x)) {
            if (flow.at((int)x, y) - flow.at(y, (int)x) <= 0) continue;
            if (h[x] < 0 || shortlex_less(inst.ball.labels[y], inst.ball.labels[h[x]])) h[x] = y;
        }
    }
    return h;
}

std::array<std::vector<int>, 3> partition_by_generator(const EquidecompositionInstance& inst,
                                                       const std::vector<int>& h) {
    const GroupSpec& spec = inst.ball.spec;
    if (spec.factor_count() != 3)
        throw std::invalid_argument("partition_by_generator: need three factors");
    for (const auto& f : spec.factors())
        if (f.order != 2)
            throw std::invalid_argument("partition_by_generator: factors must have order 2");
    std::array<std::vector<int>, 3> parts;
    for (std::size_t x = 0; x < h.size(); ++x) {
        if (h[x] < 0) continue;
        bool placed = false;
        for (std::size_t factor = 0; factor < 3 && !placed; ++factor) {
            if (multiply_generator(spec, factor, +1, inst.ball.labels[x]) ==
                inst.ball.labels[h[x]]) {
                parts[factor].push_back((int)x);
                placed = true;
            }
        }
        if (!placed)
            throw std::invalid_argument("partition_by_generator: h moves a vertex non-adjacently");
    }
    return parts;
}

EquidecompositionInstance generate_instance(const CayleyBall& ball, unsigned n,
                                            std::uint64_t seed, InstanceGenStats* stats) {
    require_tree(ball);
    std::vector<Word> pool = hyperfin::ball(ball.spec, standard_generators(ball.spec), 2);
    pool.erase(std::remove_if(pool.begin(), pool.end(),
                              [](const Word& w) { return w.is_identity(); }),
               pool.end());

    EquidecompositionInstance inst;
    inst.ball = ball;
    inst.n = n;
    const std::size_t nv = ball.labels.size();
    inst.labels.assign(n + 1, std::vector<Word>(nv));

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<std::size_t> load(nv, 0);
    for (unsigned i = 0; i <= n; ++i) {
        for (std::size_t z = 0; z < nv; ++z) {
            for (std::size_t attempt = 0;; ++attempt) {
                if (attempt >= 10000)
                    throw std::runtime_error("generate_instance: capacity rejection stuck");
                const Word& gamma = pool[pick(rng)];
                int t = ball.index_of(multiply(ball.spec, gamma, ball.labels[z]));
                if (t >= 0 && ball.framed.is_interior(t) && load[t] >= n) {
                    if (stats) ++stats->rejected_draws;
                    continue;
                }
                if (t >= 0) ++load[t];
                inst.labels[i][z] = gamma;
                break;
            }
        }
    }
    return inst;
}

}  // namespace hyperfin
