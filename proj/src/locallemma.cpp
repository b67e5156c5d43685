#include "hyperfin/locallemma.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <stdexcept>

namespace hyperfin {

Rational failure_probability(const SimpleGraph& g, const LocalRule& r, int x,
                             unsigned max_enumeration_bits) {
    if (!r.is_active(x))
        throw std::invalid_argument("failure_probability: rule not defined at frontier vertex");
    const auto& nbhd = g.neighbors(x);
    const std::size_t k = nbhd.size();
    double bits = k * std::log2((double)r.alphabet);
    if (bits > max_enumeration_bits)
        throw std::invalid_argument("failure_probability: neighborhood too large to enumerate");
    BigInt total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= r.alphabet;
    BigInt disallowed = 0;
    std::vector<int> values(k, 0);
    while (true) {
        if (!r.allowed(x, values)) ++disallowed;
        std::size_t pos = 0;
        while (pos < k && ++values[pos] == (int)r.alphabet) values[pos++] = 0;
        if (pos == k) break;
    }
    return Rational(disallowed, total);
}

LocalRule marks_kechris_rule(unsigned n, const CayleyBall& ball) {
    const GroupSpec& spec = ball.spec;
    if (spec.factor_count() != 2 * n)
        throw std::invalid_argument("marks_kechris_rule: ball is not over F_{2n}");
    for (const auto& f : spec.factors())
        if (!f.is_infinite())
            throw std::invalid_argument("marks_kechris_rule: factors must be infinite cyclic");
    const SimpleGraph& g = ball.framed.graph;
    const std::size_t nv = g.vertex_count();

    // For each interior vertex: positions (within its sorted neighbor
    // list) of itself, its S0-translates and its S1-translates.
    struct VertexData {
        int self_pos = -1;
        std::vector<int> s0_pos, s1_pos;
    };
    auto data = std::make_shared<std::vector<VertexData>>(nv);
    std::vector<bool> active(nv, false);
    for (std::size_t v = 0; v < nv; ++v) {
        if (!ball.framed.is_interior((int)v)) continue;
        active[v] = true;
        const auto& nbhd = g.neighbors((int)v);
        auto pos_of = [&](int u) {
            auto it = std::lower_bound(nbhd.begin(), nbhd.end(), u);
            if (it == nbhd.end() || *it != u)
                throw std::invalid_argument("marks_kechris_rule: translate outside ball");
            return (int)(it - nbhd.begin());
        };
        VertexData& vd = (*data)[v];
        vd.self_pos = pos_of((int)v);
        for (std::size_t factor = 0; factor < 2 * n; ++factor) {
            for (int sign : {+1, -1}) {
                int u = ball.index_of(multiply_generator(spec, factor, sign, ball.labels[v]));
                int p = pos_of(u);
                (factor < n ? vd.s0_pos : vd.s1_pos).push_back(p);
            }
        }
    }
    LocalRule rule;
    rule.alphabet = 2;
    rule.active = std::move(active);
    rule.allowed = [data](int vertex, const std::vector<int>& values) {
        const VertexData& vd = (*data)[vertex];
        int self = values[vd.self_pos];
        if (self == 0) {
            for (int p : vd.s0_pos)
                if (values[p] == 1) return true;
            return false;
        }
        for (int p : vd.s1_pos)
            if (values[p] == 0) return true;
        return false;
    };
    return rule;
}

Rational marks_kechris_expected_probability(unsigned n) {
    // Disallowed: self 0 with all 2n S0-translates 0, or self 1 with all
    // 2n S1-translates 1; each case leaves the other 2n translates free.
    return Rational(1, pow2(2 * n));
}

ThresholdReport lll_condition_check(unsigned n) {
    ThresholdReport report;
    report.n = n;
    report.lhs = pow2(2 * n);
    Rational degree(BigInt(1) + BigInt(4 * n) * BigInt(4 * n));
    report.rhs_low = euler_lower() * degree;
    report.rhs_high = euler_upper() * degree;
    Rational lhs(report.lhs);
    if (lhs > report.rhs_high)
        report.verdict = ThresholdVerdict::Holds;
    else if (lhs <= report.rhs_low)
        report.verdict = ThresholdVerdict::Fails;
    return report;
}

std::optional<unsigned> lll_sweep(unsigned from, unsigned to) {
    for (unsigned n = from; n <= to; ++n)
        if (lll_condition_check(n).verdict == ThresholdVerdict::Holds) return n;
    return std::nullopt;
}

std::vector<int> satisfies(const SimpleGraph& g, const LocalRule& r,
                           const std::vector<int>& assignment) {
    if (assignment.size() != g.vertex_count())
        throw std::invalid_argument("satisfies: assignment size mismatch");
    std::vector<int> violations;
    std::vector<int> local;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (!r.is_active((int)v)) continue;
        const auto& nbhd = g.neighbors((int)v);
        local.clear();
        for (int u : nbhd) local.push_back(assignment[u]);
        if (!r.allowed((int)v, local)) violations.push_back((int)v);
    }
    return violations;
}

MoserTardosResult moser_tardos(const SimpleGraph& g, const LocalRule& r, std::uint64_t seed,
                               std::uint64_t max_resamples) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> value(0, (int)r.alphabet - 1);
    std::vector<int> f(g.vertex_count());
    for (auto& x : f) x = value(rng);

    MoserTardosResult result;
    std::vector<int> local;
    auto violated = [&](int v) {
        if (!r.is_active(v)) return false;
        local.clear();
        for (int u : g.neighbors(v)) local.push_back(f[u]);
        return !r.allowed(v, local);
    };
    while (true) {
        int bad = -1;
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            if (violated((int)v)) {
                bad = (int)v;
                break;
            }
        if (bad < 0) {
            result.assignment = f;
            return result;
        }
        if (result.resamples >= max_resamples) {
            result.violations_at_stop = satisfies(g, r, f).size();
            return result;
        }
        for (int u : g.neighbors(bad)) f[u] = value(rng);
        ++result.resamples;
    }
}

}  // namespace hyperfin
