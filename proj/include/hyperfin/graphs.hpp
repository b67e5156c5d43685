#ifndef HYPERFIN_GRAPHS_HPP
#define HYPERFIN_GRAPHS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "hyperfin/groups.hpp"

namespace hyperfin {

/// Finite simple graph on vertices 0..n-1 with sorted neighbor lists.
/// Loops (needed by the local-rule graphs) are allowed only when
/// allows_loops is set.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t n, bool allows_loops = false);

    static SimpleGraph from_edges(std::size_t n,
                                  const std::vector<std::pair<int, int>>& edges,
                                  bool allows_loops = false);

    std::size_t vertex_count() const { return adjacency_.size(); }
    bool allows_loops() const { return allows_loops_; }
    const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);

    std::size_t max_degree() const;
    bool has_loop() const;

    /// Undirected edges (u <= v), sorted; loops appear as (v, v).
    /// Positions in this list are the edge ids used by EdgeSubset.
    const std::vector<std::pair<int, int>>& edges() const;
    std::size_t edge_count() const { return edges().size(); }
    int edge_id(int u, int v) const;

    bool operator==(const SimpleGraph& other) const {
        return allows_loops_ == other.allows_loops_ && adjacency_ == other.adjacency_;
    }

private:
    std::vector<std::vector<int>> adjacency_;
    bool allows_loops_ = false;
    mutable std::vector<std::pair<int, int>> edge_cache_;
    mutable bool edge_cache_valid_ = false;
};

/// Graph of a fixed-point-free function on 0..n-1. Vertices may be
/// terminal (no image), which is how contracted classes whose image
/// stays inside themselves are represented.
class FunctionalGraph {
public:
    static constexpr int kTerminal = -1;

    FunctionalGraph() = default;
    /// f[v] = image of v, or kTerminal. Throws on fixed points.
    FunctionalGraph(std::vector<int> f, unsigned fanin_bound);

    std::size_t vertex_count() const { return f_.size(); }
    int image(int v) const { return f_.at(v); }
    bool is_terminal(int v) const { return f_.at(v) == kTerminal; }
    bool is_total() const;
    unsigned fanin_bound() const { return fanin_bound_; }

    /// Preimage counts, recomputed from f.
    std::vector<int> fanin() const;

    /// Undirected graph with edges {v, f(v)}.
    SimpleGraph underlying_graph() const;

private:
    std::vector<int> f_;
    unsigned fanin_bound_ = 0;
};

/// Finite graph with a marked frontier standing in for the truncated
/// part of an infinite graph. Frontier vertices have incomplete
/// neighborhoods and are excluded from interior-only contracts.
struct FramedGraph {
    SimpleGraph graph;
    std::vector<bool> frontier;

    bool is_interior(int v) const { return !frontier.at(v); }
};

struct Coloring {
    std::vector<int> colors;

    int color_count() const;
    bool proper_on(const SimpleGraph& g) const;
};

/// Subset of the host graph's edges, as a bitmap over edge ids.
struct EdgeSubset {
    std::vector<bool> member;

    static EdgeSubset none(const SimpleGraph& host);
    static EdgeSubset all(const SimpleGraph& host);
    bool subset_of(const EdgeSubset& other) const;
    std::size_t count() const;
};

/// Vertex partition given by a class id per vertex; class ids are the
/// minimum member vertex ids.
struct Partition {
    std::vector<int> class_of;

    std::size_t class_count() const;
    std::map<int, std::vector<int>> classes() const;
};

Coloring greedy_coloring(const SimpleGraph& g, const std::vector<int>& order);

/// Proper 3-coloring of the graph of a functional graph: each weak
/// component has at most one cycle; 2-color it when even, use a single
/// exceptional vertex when odd, and 2-color the in-trees by parity.
/// Terminal sinks are colored 0 and their trees never use color 2;
/// in-degree-0 vertices get a color chosen to keep them out of the
/// forward-recurrent set whenever the clauses allow it.
Coloring three_color_functional(const FunctionalGraph& fg);

/// A = { x : (c=0, cf=2) or (c=1, cf=2) or (c=0, cf=1, cf2=0) }, the
/// independent set met by every 4-step forward orbit. Clauses needing
/// an undefined image simply do not fire.
std::vector<bool> forward_recurrent_set(const FunctionalGraph& fg, const Coloring& c);

Partition components(const SimpleGraph& g, const EdgeSubset& e);

/// Graph minor: contract each partition class to a vertex (renumbered
/// 0..k-1 in order of class ids); cross edges collapse, loops drop.
/// Returns the minor and the map vertex -> minor vertex.
std::pair<SimpleGraph, std::vector<int>> contract(const SimpleGraph& g, const Partition& p);

/// Quotient of a functional graph by a partition whose classes are
/// connected. A class with an f-image outside itself maps there (exit
/// chosen at the minimum-id member); classes fully closed under f
/// become terminal.
std::pair<FunctionalGraph, std::vector<int>> functional_quotient(const FunctionalGraph& fg,
                                                                 const Partition& p);

/// Edge iff distance <= 2; keeps the loop convention of the base graph.
SimpleGraph power_graph_2(const SimpleGraph& g);

/// Closed distance-<=2 neighborhood size, counting the vertex itself once.
std::size_t power2_neighborhood_size(const SimpleGraph& g, int v);

/// Cayley ball with vertex labels: vertices are the shortlex-sorted ball
/// elements, edges come from generator translation, and the frontier is
/// the sphere of radius exactly `radius`.
struct CayleyBall {
    GroupSpec spec;
    std::vector<Word> labels;
    FramedGraph framed;

    int index_of(const Word& w) const;  // -1 when outside the ball
};

CayleyBall cayley_ball_graph(const GroupSpec& spec, const std::vector<Word>& generators,
                             unsigned radius, bool include_loops);

/// Seeded fixed-point-free functional graph respecting the fanin bound;
/// a small fraction of vertices come out terminal.
FunctionalGraph random_functional_graph(std::size_t n, unsigned fanin_bound, std::uint64_t seed);

/// Seeded disjoint union of paths and cycles covering n vertices.
SimpleGraph random_degree_two_graph(std::size_t n, std::uint64_t seed);

}  // namespace hyperfin

#endif
