#ifndef HYPERFIN_FLOWS_HPP
#define HYPERFIN_FLOWS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <utility>

#include "hyperfin/graphs.hpp"

namespace hyperfin {

/// An attempted equidecomposition: n+1 translation-valued functions
/// f_0..f_n on an acyclic framed Cayley ball, f_i(x) = label * x, with
/// every interior vertex receiving at most n of the (z, i) darts.
struct EquidecompositionInstance {
    CayleyBall ball;
    unsigned n = 0;
    /// labels[i][v]: the group element carrying vertex v under f_i.
    std::vector<std::vector<Word>> labels;

    /// Target vertex of f_i at v, or -1 when the translate leaves the ball.
    int target(unsigned i, int v) const;
    /// Count of pairs (z, i) with f_i(z) = v.
    std::size_t preimage_count(int v) const;
    /// Multiplicity invariant: every interior vertex has at most n preimages.
    bool multiplicity_ok() const;
};

/// Directed edge usage counts; keys are ordered vertex pairs.
struct EdgeFlow {
    std::map<std::pair<int, int>, std::int64_t> g;

    std::int64_t at(int x, int y) const;
};

/// g((x,y)) = number of pairs (z, i) whose unique tree path from z to
/// f_i(z) uses the directed edge (x, y); pairs exiting the frame
/// contribute their in-frame prefix. Throws on a cyclic host.
EdgeFlow path_flow(const EquidecompositionInstance& inst);

/// Sum over neighbors y of g((x,y)) - g((y,x)). For interior x this
/// equals (n+1) minus the preimage count of x.
std::int64_t discrepancy(const EquidecompositionInstance& inst, const EdgeFlow& flow, int x);

/// h(x) = the neighbor with positive flow difference whose label is
/// shortlex-least; -1 where no neighbor qualifies.
std::vector<int> antimatching_map(const EquidecompositionInstance& inst, const EdgeFlow& flow);

/// A_gamma = { x : h(x) = gamma * x } for the three order-2 generators.
/// Requires the host group to be the free product of three Z/2Z factors.
std::array<std::vector<int>, 3> partition_by_generator(const EquidecompositionInstance& inst,
                                                       const std::vector<int>& h);

struct InstanceGenStats {
    std::size_t rejected_draws = 0;
};

/// Seeded random instance on the given ball: labels drawn from the
/// nonidentity elements of norm <= 2, redrawing any dart that would
/// overfill an interior target.
EquidecompositionInstance generate_instance(const CayleyBall& ball, unsigned n,
                                            std::uint64_t seed,
                                            InstanceGenStats* stats = nullptr);

}  // namespace hyperfin

#endif
