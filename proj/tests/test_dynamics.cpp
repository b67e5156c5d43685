#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "hyperfin/dynamics.hpp"

using namespace hyperfin;

namespace {

const GroupSpec kSquares = GroupSpec::free_product_of_cyclic(3, 2);
const GroupSpec kZ = GroupSpec::free_group(1);  // generator s

Word w(const GroupSpec& spec, const std::string& text) { return parse_word(spec, text); }

PartialInjection make(const GroupSpec& spec,
                      const std::vector<std::pair<std::string, std::string>>& entries) {
    PartialInjection x(spec);
    for (const auto& [k, v] : entries) x.insert(w(spec, k), w(spec, v));
    return x;
}

/// Single-orbit chain through the identity: v_0 -> v_1 -> ... -> v_L with
/// the identity somewhere inside, all entries distinct.
PartialInjection random_chain(const GroupSpec& spec, std::mt19937_64& rng, std::size_t length,
                              std::vector<Word>* chain_out = nullptr) {
    std::vector<Word> chain;
    std::set<Word, ShortlexLess> used;
    auto gens = standard_generators(spec);
    Word at;  // start the walk at the identity, then shift it inside
    chain.push_back(at);
    used.insert(at);
    while (chain.size() < length + 1) {
        Word next = multiply(spec, chain.back(), gens[rng() % gens.size()]);
        if (!used.insert(next).second) break;
        chain.push_back(next);
    }
    // Shift so the identity sits at a random chain position.
    std::size_t pos = rng() % chain.size();
    Word shift = invert(spec, chain[pos]);
    for (Word& v : chain) v = multiply(spec, shift, v);
    PartialInjection x(spec);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) x.insert(chain[i], chain[i + 1]);
    if (chain_out) *chain_out = chain;
    return x;
}

}  // namespace

TEST_CASE("twisted action on entries") {
    PartialInjection x = make(kSquares, {{"1", "a"}});
    CHECK(act(Word(), x) == x);
    PartialInjection moved = act(w(kSquares, "b"), x);
    CHECK(moved.apply(w(kSquares, "b")) == w(kSquares, "b.a"));
    CHECK(moved.size() == 1);
}

TEST_CASE("action composition on random instances") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
        PartialInjection x = random_chain(kSquares, rng, 2 + rng() % 5);
        Word g = ball(kSquares, standard_generators(kSquares), 2)[rng() % 10];
        Word h = ball(kSquares, standard_generators(kSquares), 2)[rng() % 10];
        CHECK(act(g, act(h, x)) == act(multiply(kSquares, g, h), x));
    }
}

TEST_CASE("action transports orbit structure") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 200; ++i) {
        PartialInjection x = random_chain(kSquares, rng, 2 + rng() % 6);
        OrbitReport before = orbit_report(x);
        Word g = ball(kSquares, standard_generators(kSquares), 2)[rng() % 10];
        OrbitReport after = orbit_report(act(g, x));
        CHECK(after.orbit_count == before.orbit_count);
        REQUIRE(before.begins.has_value());
        REQUIRE(after.begins.has_value());
        CHECK(*after.begins == multiply(kSquares, g, *before.begins));
        CHECK(*after.ends == multiply(kSquares, g, *before.ends));
    }
}

TEST_CASE("w_map worked examples") {
    CHECK(!w_map(make(kSquares, {{"a", "a.b"}})).has_value());

    auto wz = w_map(make(kZ, {{"1", "s"}, {"s", "s^2"}}));
    REQUIRE(wz.has_value());
    CHECK(*wz == make(kZ, {{"s^-1", "1"}, {"1", "s"}}));

    auto ws = w_map(make(kSquares, {{"1", "a"}, {"a", "a.b"}}));
    REQUIRE(ws.has_value());
    CHECK(*ws == make(kSquares, {{"a", "1"}, {"1", "b"}}));
}

TEST_CASE("w_iterate examples") {
    PartialInjection x = make(kZ, {{"1", "s"}, {"s", "s^2"}});
    CHECK(w_iterate(x, 0) == x);

    // x^2(1) = s^2, so w^2(x) = act(s^-2, x).
    auto w2 = w_iterate(x, 2);
    REQUIRE(w2.has_value());
    CHECK(*w2 == act(w(kZ, "s^-2"), x));
}

TEST_CASE("w-iterate identity on random single-orbit chains") {
    std::mt19937_64 rng(23);
    int checked = 0;
    for (int i = 0; i < 400; ++i) {
        const GroupSpec& spec = (i % 2) ? kZ : kSquares;
        PartialInjection x = random_chain(spec, rng, 3 + rng() % 8);
        if (!x.in_domain(Word()) && !x.in_range(Word())) continue;
        for (std::int64_t n = -(std::int64_t)x.size(); n <= (std::int64_t)x.size(); ++n) {
            auto lhs = w_iterate(x, n);
            auto power = x.iterate(Word(), n);
            if (!lhs || !power) continue;
            CHECK(*lhs == act(invert(spec, *power), x));
            ++checked;
        }
    }
    CHECK(checked > 500);
}

TEST_CASE("orbit_report conventions and examples") {
    OrbitReport empty = orbit_report(PartialInjection(kSquares));
    CHECK(empty.is_one_orbit);
    CHECK(empty.begins == Word());
    CHECK(empty.ends == Word());

    OrbitReport chain = orbit_report(make(kSquares, {{"1", "a"}, {"a", "a.b"}}));
    CHECK(chain.orbit_count == 1);
    CHECK(chain.begins == Word());
    CHECK(chain.ends == w(kSquares, "a.b"));

    OrbitReport two = orbit_report(make(kSquares, {{"1", "a"}, {"b", "c"}}));
    CHECK(two.orbit_count == 2);
    CHECK(!two.is_one_orbit);
}

TEST_CASE("orbit_report detects cycles as single orbits") {
    // a -> 1 -> a gives a 2-cycle: one orbit, no begin or end point.
    PartialInjection x = make(kZ, {{"1", "s"}, {"s", "1"}});
    OrbitReport r = orbit_report(x);
    CHECK(r.orbit_count == 1);
    CHECK(!r.begins.has_value());
    CHECK(!r.ends.has_value());
}

TEST_CASE("less_than bounded search") {
    PartialInjection x = make(kZ, {{"1", "s"}, {"s", "s^2"}});
    CHECK(less_than(x, x, 10) == OrderResult::NotLessWithinBound);

    auto wx = w_map(x);
    REQUIRE(wx.has_value());
    CHECK(less_than(x, *wx, 1) == OrderResult::Less);

    PartialInjection unrelated = make(kZ, {{"s^5", "s^7"}});
    CHECK(less_than(x, unrelated, 5) == OrderResult::NotLessWithinBound);
}

TEST_CASE("less_than is transitive where searches succeed") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 100; ++i) {
        PartialInjection x = random_chain(kZ, rng, 6 + rng() % 4);
        auto y = w_iterate(x, 1);
        if (!y) continue;
        auto z = w_iterate(*y, 1);
        if (!z) continue;
        CHECK(less_than(x, *y, 3) == OrderResult::Less);
        CHECK(less_than(*y, *z, 3) == OrderResult::Less);
        CHECK(less_than(x, *z, 3) == OrderResult::Less);
    }
}

TEST_CASE("insert rejects injectivity violations") {
    PartialInjection x(kSquares);
    x.insert(w(kSquares, "a"), w(kSquares, "b"));
    CHECK_THROWS_AS(x.insert(w(kSquares, "a"), w(kSquares, "c")), std::invalid_argument);
    CHECK_THROWS_AS(x.insert(w(kSquares, "c"), w(kSquares, "b")), std::invalid_argument);
}
