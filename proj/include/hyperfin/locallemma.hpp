#ifndef HYPERFIN_LOCALLEMMA_HPP
#define HYPERFIN_LOCALLEMMA_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "hyperfin/graphs.hpp"
#include "hyperfin/rational.hpp"

namespace hyperfin {

/// A b-local rule: for each vertex, an allowed set of assignments on its
/// neighborhood (in sorted-vertex order, the vertex itself included when
/// the graph has a loop there). The allowed set is given as a predicate;
/// exact counting enumerates the b^|G(x)| candidates.
struct LocalRule {
    unsigned alphabet = 2;
    std::function<bool(int vertex, const std::vector<int>& local_values)> allowed;
    /// Vertices where the rule is checked; frontier vertices of a framed
    /// host are excluded since their neighborhoods are truncated.
    std::vector<bool> active;

    bool is_active(int v) const { return active.empty() || active.at(v); }
};

/// p_R(x) = 1 - |R(x)| / b^|G(x)|, by exhaustive enumeration.
/// Throws on an inactive (frontier) vertex or when the neighborhood is
/// too large to enumerate.
Rational failure_probability(const SimpleGraph& g, const LocalRule& r, int x,
                             unsigned max_enumeration_bits = 25);

/// The 2-local rule on an F_{2n} ball with loops: a vertex valued 0 needs
/// some S0-translate valued 1, and a vertex valued 1 needs some
/// S1-translate valued 0. S0/S1 are the generators of the first/last n
/// free factors.
LocalRule marks_kechris_rule(unsigned n, const CayleyBall& ball);

/// Closed-form clause count for the same rule at an interior vertex.
Rational marks_kechris_expected_probability(unsigned n);

enum class ThresholdVerdict { Holds, Fails, Indeterminate };

struct ThresholdReport {
    unsigned n = 0;
    ThresholdVerdict verdict = ThresholdVerdict::Indeterminate;
    BigInt lhs;              // 2^{2n}
    Rational rhs_low;        // e_lo * (1 + (4n)^2)
    Rational rhs_high;       // e_hi * (1 + (4n)^2)
};

/// Decides 2^{2n} > e (1 + (4n)^2) with the rational e-enclosure.
ThresholdReport lll_condition_check(unsigned n);

/// Minimal n in [from, to] where the threshold holds, if any.
std::optional<unsigned> lll_sweep(unsigned from, unsigned to);

/// Active vertices whose neighborhood restriction is disallowed.
std::vector<int> satisfies(const SimpleGraph& g, const LocalRule& r,
                           const std::vector<int>& assignment);

struct MoserTardosResult {
    std::optional<std::vector<int>> assignment;  // nullopt on timeout
    std::uint64_t resamples = 0;
    std::size_t violations_at_stop = 0;
};

/// Classical resampling solver: repeatedly resample the neighborhood of
/// the lowest-index violated vertex. Deterministic per seed.
MoserTardosResult moser_tardos(const SimpleGraph& g, const LocalRule& r, std::uint64_t seed,
                               std::uint64_t max_resamples);

}  // namespace hyperfin

#endif
