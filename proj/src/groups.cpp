#include "hyperfin/groups.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hyperfin {

namespace {

const char* kFreeNames[] = {"s", "t", "u", "v"};
const char* kCyclicNames[] = {"a", "b", "c", "d", "e", "f"};

// Reduce an exponent into canonical range: any nonzero value for Z,
// 1..k-1 for a finite factor of order k. Returns 0 if the syllable
// vanishes.
std::int64_t normalize_exponent(const CyclicFactor& factor, std::int64_t e) {
    if (factor.is_infinite()) return e;
    std::int64_t k = factor.order;
    e %= k;
    if (e < 0) e += k;
    return e;
}

// Maps an exponent to its position in the fixed order 1, -1, 2, -2, ...
std::uint64_t exponent_key(std::int64_t e) {
    return e > 0 ? 2 * static_cast<std::uint64_t>(e) - 2
                 : 2 * static_cast<std::uint64_t>(-e) - 1;
}

}  // namespace

GroupSpec::GroupSpec(std::vector<CyclicFactor> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("GroupSpec: no factors");
    for (auto& f : factors_) {
        if (f.order == 1) throw std::invalid_argument("GroupSpec: trivial factor");
    }
}

GroupSpec GroupSpec::free_group(unsigned n) {
    std::vector<CyclicFactor> fs;
    for (unsigned i = 0; i < n; ++i) {
        std::string name = i < 4 && n <= 4 ? kFreeNames[i] : "g" + std::to_string(i);
        fs.push_back({0, name});
    }
    return GroupSpec(std::move(fs));
}

GroupSpec GroupSpec::free_product_of_cyclic(unsigned m, unsigned k) {
    std::vector<CyclicFactor> fs;
    for (unsigned i = 0; i < m; ++i) {
        std::string name = i < 6 ? kCyclicNames[i] : "g" + std::to_string(i);
        fs.push_back({k, name});
    }
    return GroupSpec(std::move(fs));
}

std::optional<std::size_t> GroupSpec::factor_by_name(const std::string& name) const {
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (factors_[i].name == name) return i;
    return std::nullopt;
}

Word reduce(const GroupSpec& spec, const std::vector<Syllable>& raw) {
    std::vector<Syllable> out;
    for (const auto& s : raw) {
        if (s.factor >= spec.factor_count())
            throw std::invalid_argument("reduce: factor index out of range");
        if (s.exponent == 0) continue;
        if (!out.empty() && out.back().factor == s.factor) {
            std::int64_t e = normalize_exponent(spec.factor(s.factor),
                                                out.back().exponent + s.exponent);
            if (e == 0)
                out.pop_back();
            else
                out.back().exponent = e;
        } else {
            std::int64_t e = normalize_exponent(spec.factor(s.factor), s.exponent);
            if (e != 0) out.push_back({s.factor, e});
        }
    }
    return Word(std::move(out));
}

Word multiply(const GroupSpec& spec, const Word& u, const Word& v) {
    std::vector<Syllable> raw = u.syllables();
    raw.insert(raw.end(), v.syllables().begin(), v.syllables().end());
    return reduce(spec, raw);
}

Word invert(const GroupSpec& spec, const Word& u) {
    std::vector<Syllable> raw;
    raw.reserve(u.length());
    for (auto it = u.syllables().rbegin(); it != u.syllables().rend(); ++it)
        raw.push_back({it->factor, -it->exponent});
    return reduce(spec, raw);
}

Word multiply_generator(const GroupSpec& spec, std::size_t factor, int exp_sign, const Word& u) {
    std::vector<Syllable> raw;
    raw.reserve(u.length() + 1);
    raw.push_back({factor, exp_sign >= 0 ? 1 : -1});
    raw.insert(raw.end(), u.syllables().begin(), u.syllables().end());
    return reduce(spec, raw);
}

WordClass classify(const Word& u, const FactorSplit& split) {
    if (u.is_identity()) return WordClass::Identity;
    std::size_t first = u.syllables().front().factor;
    if (first >= split.gamma_block.size())
        throw std::invalid_argument("classify: split does not cover factor");
    return split.gamma_block[first] ? WordClass::GammaWord : WordClass::DeltaWord;
}

bool shortlex_less(const Word& a, const Word& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    for (std::size_t i = 0; i < a.length(); ++i) {
        const auto& sa = a.syllables()[i];
        const auto& sb = b.syllables()[i];
        if (sa.factor != sb.factor) return sa.factor < sb.factor;
        if (sa.exponent != sb.exponent)
            return exponent_key(sa.exponent) < exponent_key(sb.exponent);
    }
    return false;
}

std::vector<Word> standard_generators(const GroupSpec& spec) {
    std::vector<Word> gens;
    for (std::size_t i = 0; i < spec.factor_count(); ++i) {
        gens.push_back(reduce(spec, {{i, 1}}));
        if (spec.factor(i).order != 2) gens.push_back(reduce(spec, {{i, -1}}));
    }
    return gens;
}

std::vector<Word> ball(const GroupSpec& spec, const std::vector<Word>& generators,
                       unsigned radius) {
    std::set<Word, ShortlexLess> seen;
    std::vector<Word> frontier{Word()};
    seen.insert(Word());
    for (unsigned r = 0; r < radius; ++r) {
        std::vector<Word> next;
        for (const auto& w : frontier) {
            for (const auto& g : generators) {
                Word v = multiply(spec, g, w);
                if (seen.insert(v).second) next.push_back(v);
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

unsigned word_norm(const GroupSpec& spec, const Word& u) {
    unsigned total = 0;
    for (const auto& s : u.syllables()) {
        const auto& f = spec.factor(s.factor);
        if (f.is_infinite())
            total += static_cast<unsigned>(s.exponent < 0 ? -s.exponent : s.exponent);
        else
            total += static_cast<unsigned>(
                std::min<std::int64_t>(s.exponent, f.order - s.exponent));
    }
    return total;
}

std::string to_text(const GroupSpec& spec, const Word& u) {
    if (u.is_identity()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& s : u.syllables()) {
        if (!first) os << '.';
        first = false;
        os << spec.factor(s.factor).name;
        if (s.exponent != 1) os << '^' << s.exponent;
    }
    return os.str();
}

Word parse_word(const GroupSpec& spec, const std::string& text) {
    if (text == "1" || text.empty()) return Word();
    std::vector<Syllable> raw;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t dot = text.find('.', pos);
        std::string tok = text.substr(pos, dot == std::string::npos ? dot : dot - pos);
        std::int64_t exp = 1;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            exp = std::stoll(tok.substr(caret + 1));
            tok = tok.substr(0, caret);
        }
        auto idx = spec.factor_by_name(tok);
        if (!idx) throw std::invalid_argument("parse_word: unknown generator '" + tok + "'");
        raw.push_back({*idx, exp});
        if (dot == std::string::npos) break;
        pos = dot + 1;
    }
    return reduce(spec, raw);
}

}  // namespace hyperfin
