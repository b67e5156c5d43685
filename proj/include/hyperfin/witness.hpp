#ifndef HYPERFIN_WITNESS_HPP
#define HYPERFIN_WITNESS_HPP

#include <string>

#include "hyperfin/graphs.hpp"

namespace hyperfin {

/// Increasing chain of edge subsets of a host graph whose union is the
/// whole edge set; the finite-scale form of a hyperfiniteness witness.
struct WitnessSequence {
    SimpleGraph host;
    std::vector<EdgeSubset> levels;
};

struct LevelStats {
    std::size_t component_count = 0;
    std::size_t min_component = 0;
    std::size_t max_component = 0;
};

struct WitnessReport {
    bool valid = true;
    std::string violation;       // empty when valid
    int first_bad_level = -1;
    std::vector<LevelStats> levels;
};

/// Per-contraction-step instrumentation from functional_witness. Sizes
/// are measured on the quotient being contracted; singleton classes
/// (isolated vertices of the step's merge graph) are counted separately
/// and excluded from min/max.
struct ContractionStats {
    unsigned level = 0;
    unsigned fanin = 0;              // max fanin of the quotient at this step
    std::size_t min_class = 0;       // over classes with at least one merge edge
    std::size_t max_class = 0;
    std::size_t singleton_classes = 0;
};

struct FunctionalWitnessResult {
    WitnessSequence witness;
    std::vector<ContractionStats> steps;
};

/// Checks monotonicity, union coverage, and the size rule: every
/// component of level i has size >= min(i, its host component size);
/// with exponential_bound, min(2^i, host component size) instead.
WitnessReport validate_witness(const WitnessSequence& w, bool exponential_bound = false);

/// Iterated contraction witness for the graph of a functional graph:
/// 3-color the current quotient, take its forward-recurrent set A, merge
/// every non-A vertex with its image, lift to the host; a final level
/// adds the remaining edges once no merge is possible.
FunctionalWitnessResult functional_witness(const FunctionalGraph& fg);

/// Extends a witness on the induced subgraph over `a` to the whole framed
/// graph via the lex-least-path forest. Every component must meet `a`,
/// and the induced graph over `a` must have one component per host
/// component; `inner` is a witness for that induced graph.
WitnessSequence extend_witness(const FramedGraph& fg, const std::vector<bool>& a,
                               const WitnessSequence& inner);

/// Witness for a loop-free graph of degree at most 2: orient each path
/// or cycle component into a functional graph and reuse the iterated
/// contraction construction.
FunctionalWitnessResult degree_two_witness(const SimpleGraph& g);

/// Among shortest paths from x to the set a, the lexicographically least
/// vertex-id sequence. Throws when x cannot reach a.
std::vector<int> lexleast_path(const FramedGraph& fg, int x, const std::vector<bool>& a);

/// Induced subgraph on the vertices marked in `keep`, plus the map from
/// old vertex ids to new ones (-1 for dropped vertices).
std::pair<SimpleGraph, std::vector<int>> induced_subgraph(const SimpleGraph& g,
                                                          const std::vector<bool>& keep);

}  // namespace hyperfin

#endif
