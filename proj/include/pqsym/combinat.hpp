#pragma once

// Indexing layer: subsets of [n], compositions, cd-words, sparse predicates,
// the peak map and the two-element interval families built from sparse sets.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace pqsym {

inline constexpr int max_ambient = 62;

/// A subset of [n] = {1..n} that remembers n. Element i is bit i-1.
class Subset {
public:
    Subset() = default;

    explicit Subset(int ambient, std::uint64_t bits = 0) : ambient_(ambient), bits_(bits)
    {
        check_ambient(ambient);
        if (ambient < 64 && (bits >> ambient) != 0)
            throw validation_error("subset bits exceed ambient [" + std::to_string(ambient) + "]");
    }

    Subset(int ambient, std::initializer_list<int> members) : Subset(ambient, std::vector<int>(members)) {}

    Subset(int ambient, const std::vector<int>& members) : ambient_(ambient)
    {
        check_ambient(ambient);
        for (int i : members) {
            if (i < 1 || i > ambient)
                throw validation_error("element " + std::to_string(i) + " outside [" +
                                       std::to_string(ambient) + "]");
            bits_ |= bit(i);
        }
    }

    static Subset full(int ambient)
    {
        check_ambient(ambient);
        return Subset(ambient, ambient == 0 ? 0 : (~std::uint64_t{0} >> (64 - ambient)));
    }

    int ambient() const { return ambient_; }
    std::uint64_t bits() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool contains(int i) const { return i >= 1 && i <= ambient_ && (bits_ & bit(i)) != 0; }

    /// Largest element, 0 for the empty set.
    int max() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

    std::vector<int> members() const
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    Subset with(int i) const { return Subset(ambient_, bits_ | checked_bit(i)); }
    Subset without(int i) const { return Subset(ambient_, bits_ & ~checked_bit(i)); }
    Subset complement() const { return Subset(ambient_, full(ambient_).bits_ & ~bits_); }

    bool is_subset_of(const Subset& other) const
    {
        require_same_ambient(other);
        return (bits_ & ~other.bits_) == 0;
    }

    friend Subset operator|(const Subset& a, const Subset& b)
    {
        a.require_same_ambient(b);
        return Subset(a.ambient_, a.bits_ | b.bits_);
    }
    friend Subset operator&(const Subset& a, const Subset& b)
    {
        a.require_same_ambient(b);
        return Subset(a.ambient_, a.bits_ & b.bits_);
    }

    friend bool operator==(const Subset&, const Subset&) = default;
    friend auto operator<=>(const Subset&, const Subset&) = default;

    /// "1,3" style key; "" for the empty set.
    std::string key() const
    {
        std::string s;
        for (int i : members()) {
            if (!s.empty()) s += ',';
            s += std::to_string(i);
        }
        return s;
    }

    void require_same_ambient(const Subset& other) const
    {
        if (ambient_ != other.ambient_)
            throw validation_error("ambient mismatch: [" + std::to_string(ambient_) + "] vs [" +
                                   std::to_string(other.ambient_) + "]");
    }

private:
    static std::uint64_t bit(int i) { return std::uint64_t{1} << (i - 1); }
    std::uint64_t checked_bit(int i) const
    {
        if (i < 1 || i > ambient_)
            throw validation_error("element " + std::to_string(i) + " outside [" +
                                   std::to_string(ambient_) + "]");
        return bit(i);
    }
    static void check_ambient(int n)
    {
        if (n < 0 || n > max_ambient)
            throw validation_error("ambient " + std::to_string(n) + " outside 0.." +
                                   std::to_string(max_ambient));
    }

    int ambient_ = 0;
    std::uint64_t bits_ = 0;
};

/// Parses a "1,3" key into a subset of [ambient].
inline Subset parse_subset_key(std::string_view key, int ambient)
{
    std::vector<int> members;
    std::size_t pos = 0;
    while (pos < key.size()) {
        const std::size_t comma = std::min(key.find(',', pos), key.size());
        const std::string part(key.substr(pos, comma - pos));
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw validation_error("malformed subset key \"" + std::string(key) + "\"");
        members.push_back(std::stoi(part));
        pos = comma + 1;
        if (comma + 1 == key.size()) throw validation_error("trailing comma in \"" + std::string(key) + "\"");
    }
    if (!std::is_sorted(members.begin(), members.end()) ||
        std::adjacent_find(members.begin(), members.end()) != members.end())
        throw validation_error("subset key \"" + std::string(key) + "\" is not strictly ascending");
    return Subset(ambient, members);
}

using Composition = std::vector<int>;

inline int degree_of(const Composition& beta)
{
    int d = 0;
    for (int part : beta) {
        if (part < 1) throw validation_error("composition parts must be positive");
        d += part;
    }
    return d;
}

/// beta(S) = (i1, i2-i1, ..., n+1-ik), a composition of n+1.
inline Composition composition_of_subset(const Subset& s)
{
    Composition beta;
    int prev = 0;
    for (int i : s.members()) {
        beta.push_back(i - prev);
        prev = i;
    }
    beta.push_back(s.ambient() + 1 - prev);
    return beta;
}

/// Partial sums of beta without the last one, as a subset of [deg(beta)-1].
inline Subset subset_of_composition(const Composition& beta)
{
    const int d = degree_of(beta);
    if (d < 1) throw validation_error("the empty composition has no subset encoding");
    std::vector<int> members;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < beta.size(); ++i) members.push_back(acc += beta[i]);
    return Subset(d - 1, members);
}

inline bool is_left_sparse(const Subset& s)
{
    const std::uint64_t b = s.bits();
    return (b & 1u) == 0 && (b & (b << 1)) == 0;
}

inline bool is_right_sparse(const Subset& s)
{
    const std::uint64_t b = s.bits();
    return !s.contains(s.ambient()) && (b & (b << 1)) == 0;
}

/// Lambda(S): elements i of S with i != 1 and i-1 not in S.
inline Subset peaks(const Subset& s)
{
    const std::uint64_t b = s.bits();
    return Subset(s.ambient(), b & ~(b << 1) & ~std::uint64_t{1});
}

/// S^v = { n+1-i : i in S }.
inline Subset reflect_subset(const Subset& s)
{
    std::vector<int> out;
    for (int i : s.members()) out.push_back(s.ambient() + 1 - i);
    return Subset(s.ambient(), out);
}

/// A word in c (degree 1) and d (degree 2). Ordered by degree, then
/// lexicographically with c < d.
class CdWord {
public:
    CdWord() = default;
    explicit CdWord(std::string letters) : letters_(std::move(letters))
    {
        for (char ch : letters_)
            if (ch != 'c' && ch != 'd')
                throw validation_error("cd-word \"" + letters_ + "\" contains a letter other than c, d");
    }

    static CdWord c_power(int m) { return CdWord(std::string(static_cast<std::size_t>(m), 'c')); }

    const std::string& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    int d_count() const { return static_cast<int>(std::count(letters_.begin(), letters_.end(), 'd')); }
    int c_count() const { return static_cast<int>(letters_.size()) - d_count(); }
    int degree() const { return c_count() + 2 * d_count(); }

    /// "1" for the empty word, the letters otherwise.
    std::string str() const { return letters_.empty() ? std::string("1") : letters_; }

    friend CdWord operator+(const CdWord& a, const CdWord& b) { return CdWord(a.letters_ + b.letters_); }

    friend bool operator==(const CdWord&, const CdWord&) = default;
    friend std::strong_ordering operator<=>(const CdWord& a, const CdWord& b)
    {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        return a.letters_ <=> b.letters_;
    }

private:
    std::string letters_;
};

inline CdWord reverse_word(const CdWord& w)
{
    return CdWord(std::string(w.letters().rbegin(), w.letters().rend()));
}

/// S_w: the degrees of the prefixes ending in each d.
inline Subset sw_of_word(const CdWord& w)
{
    std::vector<int> members;
    int deg = 0;
    for (char ch : w.letters()) {
        deg += ch == 'c' ? 1 : 2;
        if (ch == 'd') members.push_back(deg);
    }
    return Subset(deg, members);
}

inline CdWord word_of_left_sparse(const Subset& s)
{
    if (!is_left_sparse(s)) throw validation_error("{" + s.key() + "} is not left sparse");
    std::string letters;
    int prev = 0;
    for (int i : s.members()) {
        letters.append(static_cast<std::size_t>(i - prev - 2), 'c');
        letters += 'd';
        prev = i;
    }
    letters.append(static_cast<std::size_t>(s.ambient() - prev), 'c');
    return CdWord(letters);
}

/// Every element of S_w is even.
inline bool is_even_word(const CdWord& w)
{
    const auto members = sw_of_word(w).members();
    return std::all_of(members.begin(), members.end(), [](int i) { return i % 2 == 0; });
}

namespace detail {
inline void extend_words(std::string& prefix, int remaining, std::vector<CdWord>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    prefix.push_back('c');
    extend_words(prefix, remaining - 1, out);
    prefix.pop_back();
    if (remaining >= 2) {
        prefix.push_back('d');
        extend_words(prefix, remaining - 2, out);
        prefix.pop_back();
    }
}
} // namespace detail

/// All cd-words of degree n, lexicographic with c < d.
inline std::vector<CdWord> cd_words(int n)
{
    if (n < 0) throw validation_error("negative cd-word degree");
    std::vector<CdWord> out;
    std::string prefix;
    detail::extend_words(prefix, n, out);
    return out;
}

/// Fibonacci numbers with fib(1) = fib(2) = 1.
inline std::uint64_t fibonacci(int k)
{
    std::uint64_t a = 0, b = 1;
    for (int i = 0; i < k; ++i) {
        const std::uint64_t t = a + b;
        a = b;
        b = t;
    }
    return a;
}

struct Interval {
    int lo = 0;
    int hi = 0;
    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// A family of integer intervals inside [n].
class IntervalFamily {
public:
    IntervalFamily() = default;
    IntervalFamily(int ambient, std::vector<Interval> intervals) : ambient_(ambient), intervals_(std::move(intervals))
    {
        for (const auto& iv : intervals_)
            if (iv.lo < 1 || iv.hi > ambient || iv.lo > iv.hi)
                throw validation_error("interval [" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) +
                                       "] not inside [" + std::to_string(ambient) + "]");
        std::sort(intervals_.begin(), intervals_.end());
        intervals_.erase(std::unique(intervals_.begin(), intervals_.end()), intervals_.end());
        for (const auto& iv : intervals_) masks_.push_back(as_subset(iv).bits());
    }

    int ambient() const { return ambient_; }
    const std::vector<Interval>& intervals() const { return intervals_; }
    const std::vector<std::uint64_t>& masks() const { return masks_; }
    bool empty() const { return intervals_.empty(); }

    Subset as_subset(const Interval& iv) const
    {
        std::vector<int> members;
        for (int i = iv.lo; i <= iv.hi; ++i) members.push_back(i);
        return Subset(ambient_, members);
    }

    bool is_antichain() const
    {
        for (const auto& a : intervals_)
            for (const auto& b : intervals_)
                if (a != b && b.lo <= a.lo && a.hi <= b.hi) return false;
        return true;
    }

    friend bool operator==(const IntervalFamily&, const IntervalFamily&) = default;

private:
    int ambient_ = 0;
    std::vector<Interval> intervals_;
    std::vector<std::uint64_t> masks_;
};

/// I^S = {{i-1,i} : i in S} for left-sparse S.
inline IntervalFamily interval_family_of_left_sparse(const Subset& s)
{
    if (!is_left_sparse(s)) throw validation_error("{" + s.key() + "} is not left sparse");
    std::vector<Interval> ivs;
    for (int i : s.members()) ivs.push_back({i - 1, i});
    return IntervalFamily(s.ambient(), ivs);
}

/// I^w = I^{S_w}.
inline IntervalFamily interval_family_of_word(const CdWord& w)
{
    return interval_family_of_left_sparse(sw_of_word(w));
}

/// I_S = {{i,i+1} : i in S} for right-sparse S.
inline IntervalFamily interval_family_of_right_sparse(const Subset& s)
{
    if (!is_right_sparse(s)) throw validation_error("{" + s.key() + "} is not right sparse");
    std::vector<Interval> ivs;
    for (int i : s.members()) ivs.push_back({i, i + 1});
    return IntervalFamily(s.ambient(), ivs);
}

inline IntervalFamily reflect_family(const IntervalFamily& f)
{
    const int n = f.ambient();
    std::vector<Interval> ivs;
    for (const auto& iv : f.intervals()) ivs.push_back({n + 1 - iv.hi, n + 1 - iv.lo});
    return IntervalFamily(n, ivs);
}

/// Unchecked variant of blocks() for hot loops over raw masks.
inline bool blocks_bits(const IntervalFamily& f, std::uint64_t bits)
{
    for (std::uint64_t m : f.masks())
        if ((m & bits) == 0) return false;
    return true;
}

/// Membership of S in the blocking family b[F]: S meets every interval.
inline bool blocks(const IntervalFamily& f, const Subset& s)
{
    if (f.ambient() != s.ambient())
        throw validation_error("ambient mismatch: family in [" + std::to_string(f.ambient()) + "], subset in [" +
                               std::to_string(s.ambient()) + "]");
    return blocks_bits(f, s.bits());
}

} // namespace pqsym
