#ifndef HYPERFIN_GROUPS_HPP
#define HYPERFIN_GROUPS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hyperfin {

/// One cyclic factor of a free product. order == 0 means the infinite
/// cyclic group Z; otherwise the order must be at least 2.
struct CyclicFactor {
    unsigned order = 0;
    std::string name;

    bool is_infinite() const { return order == 0; }
    bool operator==(const CyclicFactor&) const = default;
};

/// A free product of cyclic groups, given as an ordered list of factors.
class GroupSpec {
public:
    GroupSpec() = default;  // the trivial group; a placeholder for I/O
    explicit GroupSpec(std::vector<CyclicFactor> factors);

    /// F_n, the free group on n generators.
    static GroupSpec free_group(unsigned n);

    /// (Z/kZ)^{*m}, the free product of m copies of Z/kZ.
    static GroupSpec free_product_of_cyclic(unsigned m, unsigned k);

    const std::vector<CyclicFactor>& factors() const { return factors_; }
    std::size_t factor_count() const { return factors_.size(); }
    const CyclicFactor& factor(std::size_t i) const { return factors_.at(i); }

    std::optional<std::size_t> factor_by_name(const std::string& name) const;

    bool operator==(const GroupSpec&) const = default;

private:
    std::vector<CyclicFactor> factors_;
};

struct Syllable {
    std::size_t factor = 0;
    std::int64_t exponent = 0;

    bool operator==(const Syllable&) const = default;
};

/// A canonical reduced word: adjacent syllables have distinct factors,
/// exponents are nonzero, and exponents of a finite order-k factor lie
/// in 1..k-1. The empty word is the identity.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Syllable> syllables) : syllables_(std::move(syllables)) {}

    const std::vector<Syllable>& syllables() const { return syllables_; }
    bool is_identity() const { return syllables_.empty(); }
    std::size_t length() const { return syllables_.size(); }

    bool operator==(const Word&) const = default;

private:
    std::vector<Syllable> syllables_;
};

enum class WordClass { Identity, GammaWord, DeltaWord };

/// A two-block partition of the factor indices of a GroupSpec.
/// gamma_block[i] is true iff factor i belongs to the Gamma block.
struct FactorSplit {
    std::vector<bool> gamma_block;
};

/// Canonicalize a raw syllable list. Throws std::invalid_argument on a
/// factor index outside the spec.
Word reduce(const GroupSpec& spec, const std::vector<Syllable>& raw);

Word multiply(const GroupSpec& spec, const Word& u, const Word& v);
Word invert(const GroupSpec& spec, const Word& u);

/// Left multiplication by a single generator (factor, +1/-1 exponent).
Word multiply_generator(const GroupSpec& spec, std::size_t factor, int exp_sign, const Word& u);

WordClass classify(const Word& u, const FactorSplit& split);

/// Shortlex: first by syllable count, then lexicographically by
/// (factor index, exponent key) where the key orders 1, -1, 2, -2, ...
bool shortlex_less(const Word& a, const Word& b);

struct ShortlexLess {
    bool operator()(const Word& a, const Word& b) const { return shortlex_less(a, b); }
};

/// A symmetric generating set: for each factor, its generator and (for
/// infinite or order > 2 factors) the inverse generator.
std::vector<Word> standard_generators(const GroupSpec& spec);

/// All elements at word-metric distance <= radius from the identity,
/// sorted shortlex. Generators must be closed under inversion.
std::vector<Word> ball(const GroupSpec& spec, const std::vector<Word>& generators,
                       unsigned radius);

/// Word-metric distance to the identity with respect to the standard
/// generators: |e| steps for a Z-syllable, min(e, k-e) for order k.
unsigned word_norm(const GroupSpec& spec, const Word& u);

/// Text form: dot-separated syllables "a.b^2.c^-1"; the identity is "1".
std::string to_text(const GroupSpec& spec, const Word& u);
Word parse_word(const GroupSpec& spec, const std::string& text);

}  // namespace hyperfin

#endif
