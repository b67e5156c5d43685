#include "hyperfin/graphs.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace hyperfin {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

SimpleGraph::SimpleGraph(std::size_t n, bool allows_loops)
    : adjacency_(n), allows_loops_(allows_loops) {}

SimpleGraph SimpleGraph::from_edges(std::size_t n,
                                    const std::vector<std::pair<int, int>>& edges,
                                    bool allows_loops) {
    SimpleGraph g(n, allows_loops);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

bool SimpleGraph::has_edge(int u, int v) const {
    const auto& nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

void SimpleGraph::add_edge(int u, int v) {
    if (u == v && !allows_loops_) throw std::invalid_argument("SimpleGraph: loop not allowed");
    if (has_edge(u, v)) return;
    auto ins = [](std::vector<int>& nb, int w) {
        nb.insert(std::upper_bound(nb.begin(), nb.end(), w), w);
    };
    ins(adjacency_.at(u), v);
    if (u != v) ins(adjacency_.at(v), u);
    edge_cache_valid_ = false;
}

std::size_t SimpleGraph::max_degree() const {
    std::size_t d = 0;
    for (const auto& nb : adjacency_) d = std::max(d, nb.size());
    return d;
}

bool SimpleGraph::has_loop() const {
    for (std::size_t v = 0; v < adjacency_.size(); ++v)
        if (std::binary_search(adjacency_[v].begin(), adjacency_[v].end(), (int)v)) return true;
    return false;
}

const std::vector<std::pair<int, int>>& SimpleGraph::edges() const {
    if (!edge_cache_valid_) {
        edge_cache_.clear();
        for (std::size_t v = 0; v < adjacency_.size(); ++v)
            for (int u : adjacency_[v])
                if (u >= (int)v) edge_cache_.push_back({(int)v, u});
        std::sort(edge_cache_.begin(), edge_cache_.end());
        edge_cache_valid_ = true;
    }
    return edge_cache_;
}

int SimpleGraph::edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    const auto& es = edges();
    auto it = std::lower_bound(es.begin(), es.end(), std::make_pair(u, v));
    if (it == es.end() || *it != std::make_pair(u, v))
        throw std::invalid_argument("edge_id: no such edge");
    return (int)(it - es.begin());
}

FunctionalGraph::FunctionalGraph(std::vector<int> f, unsigned fanin_bound)
    : f_(std::move(f)), fanin_bound_(fanin_bound) {
    for (std::size_t v = 0; v < f_.size(); ++v) {
        if (f_[v] == (int)v) throw std::invalid_argument("FunctionalGraph: fixed point");
        if (f_[v] != kTerminal && (f_[v] < 0 || f_[v] >= (int)f_.size()))
            throw std::invalid_argument("FunctionalGraph: image out of range");
    }
}

bool FunctionalGraph::is_total() const {
    return std::find(f_.begin(), f_.end(), kTerminal) == f_.end();
}

std::vector<int> FunctionalGraph::fanin() const {
    std::vector<int> in(f_.size(), 0);
    for (int img : f_)
        if (img != kTerminal) ++in[img];
    return in;
}

SimpleGraph FunctionalGraph::underlying_graph() const {
    SimpleGraph g(f_.size());
    for (std::size_t v = 0; v < f_.size(); ++v)
        if (f_[v] != kTerminal) g.add_edge((int)v, f_[v]);
    return g;
}

int Coloring::color_count() const {
    int m = 0;
    for (int c : colors) m = std::max(m, c + 1);
    return m;
}

bool Coloring::proper_on(const SimpleGraph& g) const {
    for (auto [u, v] : g.edges())
        if (u != v && colors.at(u) == colors.at(v)) return false;
    return true;
}

EdgeSubset EdgeSubset::none(const SimpleGraph& host) {
    return {std::vector<bool>(host.edge_count(), false)};
}

EdgeSubset EdgeSubset::all(const SimpleGraph& host) {
    return {std::vector<bool>(host.edge_count(), true)};
}

bool EdgeSubset::subset_of(const EdgeSubset& other) const {
    for (std::size_t i = 0; i < member.size(); ++i)
        if (member[i] && !other.member.at(i)) return false;
    return true;
}

std::size_t EdgeSubset::count() const {
    return std::count(member.begin(), member.end(), true);
}

std::size_t Partition::class_count() const {
    std::set<int> ids(class_of.begin(), class_of.end());
    return ids.size();
}

std::map<int, std::vector<int>> Partition::classes() const {
    std::map<int, std::vector<int>> out;
    for (std::size_t v = 0; v < class_of.size(); ++v) out[class_of[v]].push_back((int)v);
    return out;
}

Coloring greedy_coloring(const SimpleGraph& g, const std::vector<int>& order) {
    if (g.has_loop()) throw std::invalid_argument("greedy_coloring: graph has a loop");
    Coloring c{std::vector<int>(g.vertex_count(), -1)};
    for (int v : order) {
        std::vector<bool> used(g.neighbors(v).size() + 1, false);
        for (int u : g.neighbors(v))
            if (c.colors[u] >= 0 && c.colors[u] < (int)used.size()) used[c.colors[u]] = true;
        int color = 0;
        while (used[color]) ++color;
        c.colors[v] = color;
    }
    return c;
}

Coloring three_color_functional(const FunctionalGraph& fg) {
    std::size_t n = fg.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<int> indeg = fg.fanin();

    // Peel in-degree-0 vertices; what survives lies on cycles.
    std::vector<int> deg = indeg;
    std::deque<int> queue;
    for (std::size_t v = 0; v < n; ++v)
        if (deg[v] == 0) queue.push_back((int)v);
    std::vector<bool> on_cycle(n, true);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        on_cycle[v] = false;
        int img = fg.image(v);
        if (img != FunctionalGraph::kTerminal && --deg[img] == 0) queue.push_back(img);
    }
    for (std::size_t v = 0; v < n; ++v)
        if (fg.is_terminal((int)v)) on_cycle[v] = false;

    // Preimage lists, for walking the in-trees outward.
    std::vector<std::vector<int>> preds(n);
    for (std::size_t v = 0; v < n; ++v)
        if (!fg.is_terminal((int)v)) preds[fg.image((int)v)].push_back((int)v);

    // Color cycles. For an odd cycle one vertex must take color 2; place
    // it at a cycle vertex without an in-degree-0 preimage when possible,
    // so that no source is forced into the forward-recurrent set.
    std::vector<bool> colored(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        if (!on_cycle[start] || colored[start]) continue;
        std::vector<int> cycle{(int)start};
        for (int v = fg.image((int)start); v != (int)start; v = fg.image(v))
            cycle.push_back(v);
        for (int v : cycle) colored[v] = true;
        if (cycle.size() % 2 == 0) {
            for (std::size_t i = 0; i < cycle.size(); ++i) color[cycle[i]] = (int)(i % 2);
        } else {
            auto has_source_pred = [&](int v) {
                for (int u : preds[v])
                    if (!on_cycle[u] && indeg[u] == 0) return true;
                return false;
            };
            std::size_t exceptional = 0;
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                if (!has_source_pred(cycle[i])) {
                    exceptional = i;
                    break;
                }
            }
            color[cycle[exceptional]] = 2;
            for (std::size_t k = 1; k < cycle.size(); ++k)
                color[cycle[(exceptional + k) % cycle.size()]] = (int)((k - 1) % 2);
        }
    }
    // Terminal sinks take color 0.
    for (std::size_t v = 0; v < n; ++v)
        if (fg.is_terminal((int)v)) {
            color[v] = 0;
            colored[v] = true;
        }

    // In-trees, outward from the colored core. Non-sources 2-color by
    // parity; sources get a color keeping them out of the recurrent set
    // whenever the clauses allow it.
    std::deque<int> bfs;
    for (std::size_t v = 0; v < n; ++v)
        if (colored[v]) bfs.push_back((int)v);
    while (!bfs.empty()) {
        int p = bfs.front();
        bfs.pop_front();
        for (int u : preds[p]) {
            if (colored[u]) continue;
            int cp = color[p];
            if (indeg[u] == 0) {
                if (cp != 2) {
                    color[u] = 2;
                } else {
                    color[u] = 0;  // forced: both 0 and 1 land in A here
                }
            } else {
                color[u] = cp == 0 ? 1 : 0;
            }
            colored[u] = true;
            bfs.push_back(u);
        }
    }
    return Coloring{std::move(color)};
}

std::vector<bool> forward_recurrent_set(const FunctionalGraph& fg, const Coloring& c) {
    if ((std::size_t)c.colors.size() != fg.vertex_count())
        throw std::invalid_argument("forward_recurrent_set: coloring size mismatch");
    if (c.color_count() > 3)
        throw std::invalid_argument("forward_recurrent_set: more than 3 colors");
    if (!c.proper_on(fg.underlying_graph()))
        throw std::invalid_argument("forward_recurrent_set: coloring not proper");
    std::size_t n = fg.vertex_count();
    std::vector<bool> a(n, false);
    for (std::size_t v = 0; v < n; ++v) {
        int f1 = fg.image((int)v);
        if (f1 == FunctionalGraph::kTerminal) continue;
        int cv = c.colors[v], c1 = c.colors[f1];
        if ((cv == 0 && c1 == 2) || (cv == 1 && c1 == 2)) {
            a[v] = true;
            continue;
        }
        int f2 = fg.image(f1);
        if (f2 != FunctionalGraph::kTerminal && cv == 0 && c1 == 1 && c.colors[f2] == 0)
            a[v] = true;
    }
    return a;
}

Partition components(const SimpleGraph& g, const EdgeSubset& e) {
    if (e.member.size() != g.edge_count())
        throw std::invalid_argument("components: edge subset size mismatch");
    UnionFind uf(g.vertex_count());
    const auto& es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        if (e.member[i]) uf.unite(es[i].first, es[i].second);
    Partition p{std::vector<int>(g.vertex_count())};
    for (std::size_t v = 0; v < g.vertex_count(); ++v) p.class_of[v] = uf.find((int)v);
    return p;
}

std::pair<SimpleGraph, std::vector<int>> contract(const SimpleGraph& g, const Partition& p) {
    if (p.class_of.size() != g.vertex_count())
        throw std::invalid_argument("contract: partition size mismatch");
    std::map<int, int> renumber;
    for (int id : p.class_of) renumber.emplace(id, 0);
    int next = 0;
    for (auto& [id, idx] : renumber) idx = next++;
    SimpleGraph minor(renumber.size());
    for (auto [u, v] : g.edges()) {
        int cu = renumber[p.class_of[u]], cv = renumber[p.class_of[v]];
        if (cu != cv) minor.add_edge(cu, cv);
    }
    std::vector<int> map(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) map[v] = renumber[p.class_of[v]];
    return {std::move(minor), std::move(map)};
}

std::pair<FunctionalGraph, std::vector<int>> functional_quotient(const FunctionalGraph& fg,
                                                                 const Partition& p) {
    std::size_t n = fg.vertex_count();
    if (p.class_of.size() != n)
        throw std::invalid_argument("functional_quotient: partition size mismatch");
    auto classes = p.classes();
    // Each class must be connected in the underlying graph.
    SimpleGraph underlying = fg.underlying_graph();
    for (const auto& [id, members] : classes) {
        UnionFind uf(members.size());
        std::map<int, int> local;
        for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = (int)i;
        for (int m : members) {
            int img = fg.image(m);
            if (img != FunctionalGraph::kTerminal && local.count(img))
                uf.unite(local[m], local[img]);
        }
        int root = uf.find(0);
        for (std::size_t i = 1; i < members.size(); ++i)
            if (uf.find((int)i) != root)
                throw std::invalid_argument("functional_quotient: class not connected");
    }
    std::map<int, int> renumber;
    int next = 0;
    for (const auto& [id, members] : classes) renumber[id] = next++;
    std::vector<int> map(n);
    for (std::size_t v = 0; v < n; ++v) map[v] = renumber[p.class_of[v]];
    std::vector<int> qf(classes.size(), FunctionalGraph::kTerminal);
    for (const auto& [id, members] : classes) {
        for (int m : members) {  // members ascend, so the exit is min-id
            int img = fg.image(m);
            if (img != FunctionalGraph::kTerminal && map[img] != renumber[id]) {
                qf[renumber[id]] = map[img];
                break;
            }
        }
    }
    std::vector<int> in(classes.size(), 0);
    for (int img : qf)
        if (img != FunctionalGraph::kTerminal) ++in[img];
    unsigned bound = in.empty() ? 0 : (unsigned)*std::max_element(in.begin(), in.end());
    return {FunctionalGraph(std::move(qf), bound), std::move(map)};
}

SimpleGraph power_graph_2(const SimpleGraph& g) {
    SimpleGraph p2(g.vertex_count(), g.allows_loops());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        std::set<int> reach;
        for (int u : g.neighbors(v)) {
            reach.insert(u);
            for (int w : g.neighbors(u)) reach.insert(w);
        }
        for (int u : reach)
            if (u != (int)v) p2.add_edge((int)v, u);
        if (g.has_edge((int)v, (int)v)) p2.add_edge((int)v, (int)v);
    }
    return p2;
}

std::size_t power2_neighborhood_size(const SimpleGraph& g, int v) {
    std::set<int> reach{v};
    for (int u : g.neighbors(v)) {
        reach.insert(u);
        for (int w : g.neighbors(u)) reach.insert(w);
    }
    return reach.size();
}

int CayleyBall::index_of(const Word& w) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), w, ShortlexLess{});
    if (it == labels.end() || !(*it == w)) return -1;
    return (int)(it - labels.begin());
}

CayleyBall cayley_ball_graph(const GroupSpec& spec, const std::vector<Word>& generators,
                             unsigned radius, bool include_loops) {
    CayleyBall cb{spec, ball(spec, generators, radius), {}};
    std::size_t n = cb.labels.size();
    SimpleGraph g(n, include_loops);
    for (std::size_t v = 0; v < n; ++v) {
        for (const auto& gen : generators) {
            int u = cb.index_of(multiply(spec, gen, cb.labels[v]));
            if (u >= 0 && u != (int)v) g.add_edge((int)v, u);
        }
        if (include_loops) g.add_edge((int)v, (int)v);
    }
    // Frontier: generator-metric sphere of radius exactly `radius`.
    std::vector<int> depth(n, -1);
    int origin = cb.index_of(Word());
    depth[origin] = 0;
    std::deque<int> bfs{origin};
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop_front();
        for (int u : g.neighbors(v))
            if (u != v && depth[u] < 0) {
                depth[u] = depth[v] + 1;
                bfs.push_back(u);
            }
    }
    std::vector<bool> frontier(n, false);
    for (std::size_t v = 0; v < n; ++v) frontier[v] = depth[v] == (int)radius;
    cb.framed = FramedGraph{std::move(g), std::move(frontier)};
    return cb;
}

FunctionalGraph random_functional_graph(std::size_t n, unsigned fanin_bound, std::uint64_t seed) {
    if (fanin_bound == 0) throw std::invalid_argument("random_functional_graph: fanin bound 0");
    std::mt19937_64 rng(seed);
    std::vector<int> f(n, FunctionalGraph::kTerminal);
    std::vector<unsigned> load(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        if (rng() % 16 == 0) continue;  // keep some terminal vertices
        int u = -1;
        for (int attempt = 0; attempt < 32 && u < 0; ++attempt) {
            std::size_t candidate = rng() % n;
            if (candidate != v && load[candidate] < fanin_bound) u = (int)candidate;
        }
        if (u < 0) {
            // Nearly saturated; fall back to a full scan.
            std::vector<int> candidates;
            for (std::size_t c = 0; c < n; ++c)
                if (c != v && load[c] < fanin_bound) candidates.push_back((int)c);
            if (candidates.empty()) continue;
            u = candidates[rng() % candidates.size()];
        }
        f[v] = u;
        ++load[u];
    }
    return FunctionalGraph(std::move(f), fanin_bound);
}

SimpleGraph random_degree_two_graph(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    SimpleGraph g(n);
    std::size_t at = 0;
    while (at < n) {
        std::size_t len = 2 + rng() % 6;
        if (len > n - at) len = n - at;
        bool cycle = len >= 3 && (rng() & 1);
        for (std::size_t i = 1; i < len; ++i) g.add_edge(order[at + i - 1], order[at + i]);
        if (cycle) g.add_edge(order[at + len - 1], order[at]);
        at += len;
    }
    return g;
}

}  // namespace hyperfin
