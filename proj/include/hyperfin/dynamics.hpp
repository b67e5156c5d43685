#ifndef HYPERFIN_DYNAMICS_HPP
#define HYPERFIN_DYNAMICS_HPP

#include <map>
#include <optional>

#include "hyperfin/groups.hpp"

namespace hyperfin {

/// A finite injective partial map Word -> Word over a fixed GroupSpec.
class PartialInjection {
public:
    using EntryMap = std::map<Word, Word, ShortlexLess>;

    explicit PartialInjection(GroupSpec spec) : spec_(std::move(spec)) {}
    PartialInjection(GroupSpec spec, EntryMap entries);

    const GroupSpec& spec() const { return spec_; }
    const EntryMap& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    std::optional<Word> apply(const Word& key) const;
    std::optional<Word> apply_inverse(const Word& value) const;
    bool in_domain(const Word& key) const { return entries_.count(key) > 0; }
    bool in_range(const Word& value) const;

    /// Adds an entry; throws std::invalid_argument if the key is already
    /// defined or the value already taken.
    void insert(const Word& key, const Word& value);

    /// x^n applied to start: chase the chain forward (n >= 0) or through
    /// the inverse map (n < 0). nullopt when the chain leaves the data.
    std::optional<Word> iterate(const Word& start, std::int64_t n) const;

    bool operator==(const PartialInjection& other) const {
        return spec_ == other.spec_ && entries_ == other.entries_;
    }

private:
    GroupSpec spec_;
    EntryMap entries_;
    std::map<Word, Word, ShortlexLess> inverse_;
};

struct OrbitReport {
    std::size_t orbit_count = 0;
    std::optional<Word> begins;
    std::optional<Word> ends;
    bool is_one_orbit = true;
};

/// The twisted action: (g . x)(d) = g x(g^-1 d), i.e. entries (k, v)
/// become (g k, g v).
PartialInjection act(const Word& g, const PartialInjection& x);

/// w(x) = (x(1))^-1 . x when the identity is in dom(x), otherwise undefined.
std::optional<PartialInjection> w_map(const PartialInjection& x);

/// n-fold w (n >= 0) or its inverse relation (n < 0); undefined as soon
/// as a step is undefined.
std::optional<PartialInjection> w_iterate(const PartialInjection& x, std::int64_t n);

/// Chain structure of the functional relation on dom union ran. The empty
/// function begins and ends at the identity by convention.
OrbitReport orbit_report(const PartialInjection& x);

enum class OrderResult { Less, NotLessWithinBound };

/// x <_Gamma y iff w^n(x) = y for some n in 1..bound.
OrderResult less_than(const PartialInjection& x, const PartialInjection& y, unsigned bound);

}  // namespace hyperfin

#endif
