#include "hyperfin/dynamics.hpp"

#include <stdexcept>

namespace hyperfin {

PartialInjection::PartialInjection(GroupSpec spec, EntryMap entries)
    : spec_(std::move(spec)) {
    for (const auto& [k, v] : entries) insert(k, v);
}

std::optional<Word> PartialInjection::apply(const Word& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::optional<Word> PartialInjection::apply_inverse(const Word& value) const {
    auto it = inverse_.find(value);
    if (it == inverse_.end()) return std::nullopt;
    return it->second;
}

bool PartialInjection::in_range(const Word& value) const {
    return inverse_.count(value) > 0;
}

void PartialInjection::insert(const Word& key, const Word& value) {
    if (entries_.count(key))
        throw std::invalid_argument("PartialInjection: key already defined");
    if (inverse_.count(value))
        throw std::invalid_argument("PartialInjection: not injective");
    entries_.emplace(key, value);
    inverse_.emplace(value, key);
}

std::optional<Word> PartialInjection::iterate(const Word& start, std::int64_t n) const {
    Word cur = start;
    for (std::int64_t i = 0; i < (n >= 0 ? n : -n); ++i) {
        auto next = n >= 0 ? apply(cur) : apply_inverse(cur);
        if (!next) return std::nullopt;
        cur = *next;
    }
    return cur;
}

PartialInjection act(const Word& g, const PartialInjection& x) {
    PartialInjection y(x.spec());
    for (const auto& [k, v] : x.entries())
        y.insert(multiply(x.spec(), g, k), multiply(x.spec(), g, v));
    return y;
}

std::optional<PartialInjection> w_map(const PartialInjection& x) {
    auto image = x.apply(Word());
    if (!image) return std::nullopt;
    return act(invert(x.spec(), *image), x);
}

namespace {

// Inverse of w: defined when the identity is in ran(x). If x(u) = 1,
// the unique z with w(z) = x is z = (u^-1) . x.
std::optional<PartialInjection> w_inverse(const PartialInjection& x) {
    auto key = x.apply_inverse(Word());
    if (!key) return std::nullopt;
    return act(invert(x.spec(), *key), x);
}

}  // namespace

std::optional<PartialInjection> w_iterate(const PartialInjection& x, std::int64_t n) {
    PartialInjection cur = x;
    for (std::int64_t i = 0; i < (n >= 0 ? n : -n); ++i) {
        auto next = n >= 0 ? w_map(cur) : w_inverse(cur);
        if (!next) return std::nullopt;
        cur = std::move(*next);
    }
    return cur;
}

OrbitReport orbit_report(const PartialInjection& x) {
    OrbitReport report;
    if (x.empty()) {
        report.orbit_count = 0;
        report.is_one_orbit = true;
        report.begins = Word();
        report.ends = Word();
        return report;
    }
    // Chains: every element has at most one successor (the map) and one
    // predecessor (injectivity). Walk each chain from its begin point;
    // anything not reached that way lies on a cycle.
    std::map<Word, bool, ShortlexLess> visited;
    for (const auto& [k, v] : x.entries()) {
        visited.emplace(k, false);
        visited.emplace(v, false);
    }
    std::vector<Word> begin_points, end_points;
    for (const auto& [elem, _] : visited) {
        if (x.in_domain(elem) && !x.in_range(elem)) begin_points.push_back(elem);
        if (x.in_range(elem) && !x.in_domain(elem)) end_points.push_back(elem);
    }
    std::size_t orbits = 0;
    for (const auto& b : begin_points) {
        ++orbits;
        Word cur = b;
        visited[cur] = true;
        while (auto next = x.apply(cur)) {
            cur = *next;
            visited[cur] = true;
        }
    }
    // Remaining unvisited elements form cycles.
    for (auto& [elem, seen] : visited) {
        if (seen) continue;
        ++orbits;
        Word cur = elem;
        while (!visited[cur]) {
            visited[cur] = true;
            cur = *x.apply(cur);
        }
    }
    report.orbit_count = orbits;
    report.is_one_orbit = orbits <= 1;
    if (begin_points.size() == 1) report.begins = begin_points.front();
    if (end_points.size() == 1) report.ends = end_points.front();
    return report;
}

OrderResult less_than(const PartialInjection& x, const PartialInjection& y, unsigned bound) {
    if (bound < 1) throw std::invalid_argument("less_than: bound must be >= 1");
    PartialInjection cur = x;
    for (unsigned n = 1; n <= bound; ++n) {
        auto next = w_map(cur);
        if (!next) return OrderResult::NotLessWithinBound;
        cur = std::move(*next);
        if (cur == y) return OrderResult::Less;
    }
    return OrderResult::NotLessWithinBound;
}

}  // namespace hyperfin
