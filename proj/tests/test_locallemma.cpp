#include <doctest.h>

#include <stdexcept>

#include "hyperfin/locallemma.hpp"

using namespace hyperfin;

namespace {

CayleyBall free_ball(unsigned n, unsigned radius) {
    GroupSpec spec = GroupSpec::free_group(n);
    return cayley_ball_graph(spec, standard_generators(spec), radius, true);
}

LocalRule constant_rule(std::size_t vertices, bool verdict) {
    LocalRule r;
    r.alphabet = 2;
    r.active.assign(vertices, true);
    r.allowed = [verdict](int, const std::vector<int>&) { return verdict; };
    return r;
}

}  // namespace

TEST_CASE("failure_probability extremes") {
    SimpleGraph g(1, true);
    g.add_edge(0, 0);
    CHECK(failure_probability(g, constant_rule(1, true), 0) == Rational(0));
    CHECK(failure_probability(g, constant_rule(1, false), 0) == Rational(1));
}

TEST_CASE("failure_probability rejects frontier vertices and huge neighborhoods") {
    CayleyBall ball = free_ball(2, 1);
    LocalRule rule = marks_kechris_rule(1, ball);
    int frontier = ball.index_of(parse_word(ball.spec, "s"));
    REQUIRE(frontier >= 0);
    CHECK_THROWS_AS(failure_probability(ball.framed.graph, rule, frontier),
                    std::invalid_argument);
    int center = ball.index_of(Word());
    CHECK_THROWS_AS(failure_probability(ball.framed.graph, rule, center, 3),
                    std::invalid_argument);
}

TEST_CASE("exact clause probability matches the closed form") {
    for (unsigned n : {1u, 2u, 3u}) {
        CayleyBall ball = free_ball(2 * n, 1);
        LocalRule rule = marks_kechris_rule(n, ball);
        int center = ball.index_of(Word());
        REQUIRE(center >= 0);
        Rational p = failure_probability(ball.framed.graph, rule, center);
        CHECK(p == marks_kechris_expected_probability(n));
        CHECK(p == Rational(1, pow2(2 * n)));
    }
}

TEST_CASE("clause probability is translation invariant over interior vertices") {
    CayleyBall ball = free_ball(2, 2);
    LocalRule rule = marks_kechris_rule(1, ball);
    for (std::size_t v = 0; v < ball.labels.size(); ++v) {
        if (!ball.framed.is_interior((int)v)) continue;
        CHECK(failure_probability(ball.framed.graph, rule, (int)v) == Rational(1, 4));
    }
}

TEST_CASE("the constant-0 assignment violates the rule at every interior vertex") {
    CayleyBall ball = free_ball(2, 2);
    LocalRule rule = marks_kechris_rule(1, ball);
    std::vector<int> zeros(ball.labels.size(), 0);
    std::vector<int> bad = satisfies(ball.framed.graph, rule, zeros);
    std::vector<int> interior;
    for (std::size_t v = 0; v < ball.labels.size(); ++v)
        if (ball.framed.is_interior((int)v)) interior.push_back((int)v);
    CHECK(bad == interior);
}

TEST_CASE("threshold certification at 5 and 6") {
    ThresholdReport six = lll_condition_check(6);
    CHECK(six.verdict == ThresholdVerdict::Holds);
    CHECK(six.lhs == 4096);
    CHECK(six.rhs_high == Rational(BigInt(2718281829) * 577, BigInt(1000000000)));
    CHECK(Rational(six.lhs) > six.rhs_high);

    ThresholdReport five = lll_condition_check(5);
    CHECK(five.verdict == ThresholdVerdict::Fails);
    CHECK(five.lhs == 1024);
    CHECK(five.rhs_low == Rational(BigInt(2718281828) * 401, BigInt(1000000000)));
    CHECK(Rational(five.lhs) <= five.rhs_low);
}

TEST_CASE("sweep finds 6 and the condition is monotone past it") {
    CHECK(lll_sweep(1, 12) == 6u);
    CHECK(!lll_sweep(1, 5).has_value());
    for (unsigned n = 1; n <= 32; ++n)
        CHECK((lll_condition_check(n).verdict == ThresholdVerdict::Holds) == (n >= 6));
}

TEST_CASE("moser_tardos on trivial and impossible rules") {
    SimpleGraph triangle = SimpleGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});

    MoserTardosResult easy = moser_tardos(triangle, constant_rule(3, true), 1, 100);
    REQUIRE(easy.assignment.has_value());
    CHECK(easy.resamples == 0);

    MoserTardosResult stuck = moser_tardos(triangle, constant_rule(3, false), 1, 10);
    CHECK(!stuck.assignment.has_value());
    CHECK(stuck.resamples == 10);
    CHECK(stuck.violations_at_stop == 3);
}

TEST_CASE("moser_tardos solves the 2-local rule and the solution re-verifies") {
    CayleyBall ball = free_ball(4, 2);
    LocalRule rule = marks_kechris_rule(2, ball);
    for (std::uint64_t seed : {0ULL, 7ULL, 19ULL}) {
        MoserTardosResult r = moser_tardos(ball.framed.graph, rule, seed, 100000);
        REQUIRE(r.assignment.has_value());
        CHECK(satisfies(ball.framed.graph, rule, *r.assignment).empty());
    }
}
