#include "hyperfin/witness.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
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

std::vector<std::size_t> component_sizes_by_vertex(const SimpleGraph& host,
                                                   const EdgeSubset& e) {
    Partition p = components(host, e);
    std::vector<std::size_t> class_size(host.vertex_count(), 0);
    for (int id : p.class_of) ++class_size[id];
    std::vector<std::size_t> out(host.vertex_count());
    for (std::size_t v = 0; v < host.vertex_count(); ++v) out[v] = class_size[p.class_of[v]];
    return out;
}

}  // namespace

WitnessReport validate_witness(const WitnessSequence& w, bool exponential_bound) {
    WitnessReport report;
    const std::size_t m = w.host.edge_count();
    for (const auto& level : w.levels)
        if (level.member.size() != m)
            throw std::invalid_argument("validate_witness: level over mismatched host");

    for (std::size_t i = 0; i + 1 < w.levels.size(); ++i) {
        if (!w.levels[i].subset_of(w.levels[i + 1])) {
            report.valid = false;
            report.violation = "monotonicity";
            report.first_bad_level = (int)i + 1;
            return report;
        }
    }
    EdgeSubset unioned = EdgeSubset::none(w.host);
    for (const auto& level : w.levels)
        for (std::size_t j = 0; j < m; ++j)
            if (level.member[j]) unioned.member[j] = true;
    if (unioned.count() != m) {
        report.valid = false;
        report.violation = "union does not cover host edges";
        return report;
    }

    auto host_sizes = component_sizes_by_vertex(w.host, EdgeSubset::all(w.host));
    for (std::size_t i = 0; i < w.levels.size(); ++i) {
        Partition p = components(w.host, w.levels[i]);
        std::vector<std::size_t> class_size(w.host.vertex_count(), 0);
        for (int id : p.class_of) ++class_size[id];
        LevelStats stats;
        stats.min_component = w.host.vertex_count();
        for (std::size_t v = 0; v < w.host.vertex_count(); ++v) {
            if (class_size[v] == 0) continue;
            ++stats.component_count;
            stats.min_component = std::min(stats.min_component, class_size[v]);
            stats.max_component = std::max(stats.max_component, class_size[v]);
        }
        if (w.host.vertex_count() == 0) stats.min_component = 0;
        report.levels.push_back(stats);
        std::size_t required_base =
            exponential_bound ? (i >= 63 ? SIZE_MAX : (std::size_t(1) << i)) : i;
        for (std::size_t v = 0; v < w.host.vertex_count(); ++v) {
            std::size_t required = std::min(required_base, host_sizes[v]);
            if (class_size[p.class_of[v]] < required) {
                if (report.valid) {
                    report.valid = false;
                    report.violation = "component size below bound";
                    report.first_bad_level = (int)i;
                }
            }
        }
        if (!report.valid) return report;
    }
    return report;
}

FunctionalWitnessResult functional_witness(const FunctionalGraph& fg) {
    FunctionalWitnessResult result;
    SimpleGraph host = fg.underlying_graph();
    result.witness.host = host;

    FunctionalGraph quotient = fg;
    std::vector<int> to_quotient(fg.vertex_count());
    std::iota(to_quotient.begin(), to_quotient.end(), 0);

    for (unsigned level = 0; level < 64; ++level) {
        Coloring c = three_color_functional(quotient);
        std::vector<bool> a = forward_recurrent_set(quotient, c);

        UnionFind uf(quotient.vertex_count());
        std::size_t merge_edges = 0;
        for (std::size_t v = 0; v < quotient.vertex_count(); ++v) {
            if (!a[v] && !quotient.is_terminal((int)v)) {
                uf.unite((int)v, quotient.image((int)v));
                ++merge_edges;
            }
        }
        if (merge_edges == 0) break;

        Partition p{std::vector<int>(quotient.vertex_count())};
        for (std::size_t v = 0; v < quotient.vertex_count(); ++v)
            p.class_of[v] = uf.find((int)v);

        // Step stats on the quotient being contracted.
        std::vector<std::size_t> class_size(quotient.vertex_count(), 0);
        for (int id : p.class_of) ++class_size[id];
        ContractionStats stats;
        stats.level = level;
        auto fanin = quotient.fanin();
        stats.fanin = fanin.empty() ? 0 : (unsigned)*std::max_element(fanin.begin(), fanin.end());
        stats.min_class = quotient.vertex_count();
        for (std::size_t v = 0; v < quotient.vertex_count(); ++v) {
            if (class_size[v] == 0) continue;
            if (class_size[v] == 1) {
                ++stats.singleton_classes;
                continue;
            }
            stats.min_class = std::min(stats.min_class, class_size[v]);
            stats.max_class = std::max(stats.max_class, class_size[v]);
        }
        result.steps.push_back(stats);

        auto [next_quotient, qmap] = functional_quotient(quotient, p);
        for (auto& q : to_quotient) q = qmap[q];
        quotient = std::move(next_quotient);

        EdgeSubset lift = EdgeSubset::none(host);
        const auto& es = host.edges();
        for (std::size_t j = 0; j < es.size(); ++j)
            if (to_quotient[es[j].first] == to_quotient[es[j].second]) lift.member[j] = true;
        result.witness.levels.push_back(std::move(lift));
    }

    // Remaining edges join in one final level.
    EdgeSubset all = EdgeSubset::all(host);
    if (result.witness.levels.empty() || !(all.subset_of(result.witness.levels.back())))
        result.witness.levels.push_back(std::move(all));
    return result;
}

std::pair<SimpleGraph, std::vector<int>> induced_subgraph(const SimpleGraph& g,
                                                          const std::vector<bool>& keep) {
    std::vector<int> map(g.vertex_count(), -1);
    int next = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (keep[v]) map[v] = next++;
    SimpleGraph sub(next, g.allows_loops());
    for (auto [u, v] : g.edges())
        if (map[u] >= 0 && map[v] >= 0) sub.add_edge(map[u], map[v]);
    return {std::move(sub), std::move(map)};
}

std::vector<int> lexleast_path(const FramedGraph& fg, int x, const std::vector<bool>& a) {
    const SimpleGraph& g = fg.graph;
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> bfs;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (a[v]) {
            dist[v] = 0;
            bfs.push_back((int)v);
        }
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop_front();
        for (int u : g.neighbors(v))
            if (u != v && dist[u] < 0) {
                dist[u] = dist[v] + 1;
                bfs.push_back(u);
            }
    }
    if (dist[x] < 0) throw std::invalid_argument("lexleast_path: unreachable");
    std::vector<int> path{x};
    int cur = x;
    while (dist[cur] > 0) {
        // The greedy minimum-id descent realizes the lex-least shortest path.
        for (int u : g.neighbors(cur)) {
            if (u != cur && dist[u] == dist[cur] - 1) {
                cur = u;
                break;
            }
        }
        path.push_back(cur);
    }
    return path;
}

WitnessSequence extend_witness(const FramedGraph& fg, const std::vector<bool>& a,
                               const WitnessSequence& inner) {
    const SimpleGraph& g = fg.graph;
    const std::size_t n = g.vertex_count();
    if (a.size() != n) throw std::invalid_argument("extend_witness: bad a-set size");

    auto [induced, to_inner] = induced_subgraph(g, a);
    if (inner.host.vertex_count() != induced.vertex_count() ||
        inner.host.edges() != induced.edges())
        throw std::invalid_argument("extend_witness: inner host is not G restricted to a");

    // Distances to a; every vertex must reach a.
    std::vector<int> dist(n, -1);
    std::deque<int> bfs;
    for (std::size_t v = 0; v < n; ++v)
        if (a[v]) {
            dist[v] = 0;
            bfs.push_back((int)v);
        }
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop_front();
        for (int u : g.neighbors(v))
            if (u != v && dist[u] < 0) {
                dist[u] = dist[v] + 1;
                bfs.push_back(u);
            }
    }
    for (std::size_t v = 0; v < n; ++v)
        if (dist[v] < 0)
            throw std::invalid_argument("extend_witness: a misses a component");

    // One induced component per host component.
    {
        Partition host_comp = components(g, EdgeSubset::all(g));
        Partition inner_comp = components(induced, EdgeSubset::all(induced));
        std::map<int, std::set<int>> seen;
        for (std::size_t v = 0; v < n; ++v)
            if (a[v]) seen[host_comp.class_of[v]].insert(inner_comp.class_of[to_inner[v]]);
        for (const auto& [host_id, inner_ids] : seen)
            if (inner_ids.size() != 1)
                throw std::invalid_argument(
                    "extend_witness: G restricted to a is disconnected inside a component");
    }

    // The lex-least-path forest: next[v] = min-id neighbor one step closer.
    std::vector<int> next(n, -1);
    for (std::size_t v = 0; v < n; ++v) {
        if (a[v]) continue;
        for (int u : g.neighbors(v))
            if (u != (int)v && dist[u] == dist[v] - 1) {
                next[v] = u;
                break;
            }
    }

    // Subtrees touched by a frontier vertex; their forest edges fall out
    // of the finite-component part.
    std::vector<bool> tainted(n, false);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int u, int v) { return dist[u] > dist[v]; });
    for (int v : order) {
        if (fg.frontier[v]) tainted[v] = true;
        if (next[v] >= 0 && tainted[v]) tainted[next[v]] = true;
    }

    int max_m = *std::max_element(dist.begin(), dist.end());
    std::size_t inner_count = inner.levels.size();

    WitnessSequence out;
    out.host = g;
    const auto& host_edges = g.edges();
    for (unsigned i = 0; i < 64; ++i) {
        UnionFind uf(n);
        // (i) inner witness at level i (its last level past the end)
        if (inner_count > 0) {
            const EdgeSubset& lvl = inner.levels[std::min<std::size_t>(i, inner_count - 1)];
            const auto& ie = inner.host.edges();
            std::vector<int> from_inner(induced.vertex_count());
            for (std::size_t v = 0; v < n; ++v)
                if (to_inner[v] >= 0) from_inner[to_inner[v]] = (int)v;
            for (std::size_t j = 0; j < ie.size(); ++j)
                if (lvl.member[j]) uf.unite(from_inner[ie[j].first], from_inner[ie[j].second]);
        }
        // (ii) forest edges whose depth is not divisible by 2^i, and
        // (iii) forest edges of frontier-free subtrees
        for (std::size_t v = 0; v < n; ++v) {
            if (next[v] < 0) continue;
            bool clause_ii = i < 63 && (std::size_t)dist[v] % (std::size_t(1) << i) != 0;
            bool clause_iii = !tainted[v];
            if (clause_ii || clause_iii) uf.unite((int)v, next[v]);
        }
        EdgeSubset lift = EdgeSubset::none(g);
        for (std::size_t j = 0; j < host_edges.size(); ++j)
            if (uf.find(host_edges[j].first) == uf.find(host_edges[j].second))
                lift.member[j] = true;
        bool full = lift.count() == host_edges.size();
        out.levels.push_back(std::move(lift));
        // Once 2^i exceeds every depth, clause (ii) admits the whole
        // forest and the sequence has converged.
        if (i + 1 >= inner_count && (std::int64_t(1) << std::min(i, 62u)) > max_m && full)
            break;
    }
    return out;
}

FunctionalWitnessResult degree_two_witness(const SimpleGraph& g) {
    if (g.has_loop()) throw std::invalid_argument("degree_two_witness: loops not allowed");
    const std::size_t n = g.vertex_count();
    for (std::size_t v = 0; v < n; ++v)
        if (g.neighbors(v).size() > 2)
            throw std::invalid_argument("degree_two_witness: degree exceeds 2");

    std::vector<int> f(n, FunctionalGraph::kTerminal);
    Partition comp = components(g, EdgeSubset::all(g));
    auto classes = comp.classes();
    for (const auto& [id, members] : classes) {
        if (members.size() == 1) continue;  // isolated vertex, stays terminal
        // Path components have two endpoints of degree 1; orient away
        // from the lower-id endpoint. Cycles start at the minimum-id
        // vertex toward its minimum-id neighbor.
        std::vector<int> endpoints;
        for (int v : members)
            if (g.neighbors(v).size() == 1) endpoints.push_back(v);
        if (!endpoints.empty()) {
            // Path: orient away from the lower-id endpoint; the far
            // endpoint stays terminal.
            int prev = -1, cur = *std::min_element(endpoints.begin(), endpoints.end());
            while (true) {
                int nxt = -1;
                for (int u : g.neighbors(cur))
                    if (u != prev) nxt = u;
                if (nxt < 0) break;
                f[cur] = nxt;
                prev = cur;
                cur = nxt;
            }
        } else {
            // Cycle: start at the minimum-id vertex toward its
            // minimum-id neighbor.
            int start = members.front();
            int prev = start, cur = g.neighbors(start).front();
            f[start] = cur;
            while (cur != start) {
                int nxt = -1;
                for (int u : g.neighbors(cur))
                    if (u != prev) nxt = u;
                f[cur] = nxt;
                prev = cur;
                cur = nxt;
            }
        }
    }
    FunctionalGraph fg(std::move(f), 1);
    FunctionalWitnessResult result = functional_witness(fg);
    result.witness.host = g;  // same edge set; keep the caller's graph
    return result;
}

}  // namespace hyperfin
