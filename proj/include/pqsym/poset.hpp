#pragma once

// Finite graded posets given by their Hasse diagrams, the built-in families,
// flag enumeration, the Moebius function and the quasisymmetric function F(P).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "combinat.hpp"
#include "errors.hpp"
#include "qsym.hpp"
#include "rational.hpp"

namespace pqsym {

/// A graded poset with unique minimum and maximum. Immutable once built;
/// construction validates gradedness and reports the offending cover.
class GradedPoset {
public:
    using Cover = std::pair<std::string, std::string>;

    GradedPoset(std::string name, std::vector<std::string> labels, const std::vector<Cover>& covers)
        : name_(std::move(name)), labels_(std::move(labels))
    {
        const std::size_t n = labels_.size();
        if (n == 0) throw validation_error("poset has no elements");
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < n; ++i)
            if (!index.emplace(labels_[i], i).second)
                throw validation_error("duplicate element label \"" + labels_[i] + "\"");
        up_.resize(n);
        down_.resize(n);
        for (const auto& [lo, hi] : covers) {
            auto a = index.find(lo), b = index.find(hi);
            if (a == index.end() || b == index.end())
                throw validation_error("cover [" + lo + ", " + hi + "] names an unknown element");
            if (a->second == b->second) throw validation_error("cover [" + lo + ", " + hi + "] is a loop");
            if (std::find(up_[a->second].begin(), up_[a->second].end(), b->second) != up_[a->second].end())
                throw validation_error("duplicate cover [" + lo + ", " + hi + "]");
            up_[a->second].push_back(b->second);
            down_[b->second].push_back(a->second);
        }
        validate();
    }

    const std::string& name() const { return name_; }
    std::size_t size() const { return labels_.size(); }
    const std::string& label(std::size_t x) const { return labels_[x]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t bottom() const { return bottom_; }
    std::size_t top() const { return top_; }
    int rank(std::size_t x) const { return rank_[x]; }
    /// Rank of the maximum, n+1.
    int top_rank() const { return rank_[top_]; }
    const std::vector<std::size_t>& upper_covers(std::size_t x) const { return up_[x]; }
    const std::vector<std::size_t>& lower_covers(std::size_t x) const { return down_[x]; }
    const std::vector<std::size_t>& level(int r) const { return levels_.at(static_cast<std::size_t>(r)); }

    bool leq(std::size_t x, std::size_t y) const { return above_[x][y]; }
    bool less(std::size_t x, std::size_t y) const { return x != y && above_[x][y]; }

    std::optional<std::size_t> find(const std::string& label) const
    {
        auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it == labels_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - labels_.begin());
    }

    std::vector<Cover> covers() const
    {
        std::vector<Cover> out;
        for (std::size_t x = 0; x < size(); ++x)
            for (std::size_t y : up_[x]) out.emplace_back(labels_[x], labels_[y]);
        return out;
    }

private:
    void validate()
    {
        const std::size_t n = size();
        std::vector<std::size_t> minima, maxima;
        for (std::size_t x = 0; x < n; ++x) {
            if (down_[x].empty()) minima.push_back(x);
            if (up_[x].empty()) maxima.push_back(x);
        }
        if (minima.size() != 1)
            throw validation_error("poset must have a unique minimal element, found " + std::to_string(minima.size()));
        if (maxima.size() != 1)
            throw validation_error("poset must have a unique maximal element, found " + std::to_string(maxima.size()));
        bottom_ = minima.front();
        top_ = maxima.front();

        // Topological order; a cycle leaves elements unvisited.
        std::vector<std::size_t> indeg(n), order;
        for (std::size_t x = 0; x < n; ++x) indeg[x] = down_[x].size();
        std::queue<std::size_t> ready;
        ready.push(bottom_);
        while (!ready.empty()) {
            const std::size_t x = ready.front();
            ready.pop();
            order.push_back(x);
            for (std::size_t y : up_[x])
                if (--indeg[y] == 0) ready.push(y);
        }
        if (order.size() != n) throw validation_error("cover relation contains a cycle");

        // Rank = length of the longest chain from the bottom, so a cover that
        // shortcuts a longer chain is the one reported.
        rank_.assign(n, 0);
        for (std::size_t x : order)
            for (std::size_t y : up_[x]) rank_[y] = std::max(rank_[y], rank_[x] + 1);
        for (std::size_t x : order)
            for (std::size_t y : up_[x])
                if (rank_[y] != rank_[x] + 1)
                    throw validation_error("cover [" + labels_[x] + ", " + labels_[y] + "] does not raise rank by 1 (" +
                                           std::to_string(rank_[x]) + " -> " + std::to_string(rank_[y]) + ")");
        levels_.assign(static_cast<std::size_t>(rank_[top_]) + 1, {});
        for (std::size_t x = 0; x < n; ++x) levels_[static_cast<std::size_t>(rank_[x])].push_back(x);

        above_.assign(n, std::vector<bool>(n, false));
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const std::size_t x = *it;
            above_[x][x] = true;
            for (std::size_t y : up_[x])
                for (std::size_t z = 0; z < n; ++z)
                    if (above_[y][z]) above_[x][z] = true;
        }
    }

    std::string name_;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::size_t>> up_, down_;
    std::size_t bottom_ = 0, top_ = 0;
    std::vector<int> rank_;
    std::vector<std::vector<std::size_t>> levels_;
    std::vector<std::vector<bool>> above_;
};

// ---------------------------------------------------------------------------
// Built-in families.

namespace detail {
inline std::string set_label(std::uint64_t bits)
{
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < 64; ++i)
        if (bits >> i & 1u) {
            if (!first) s += ',';
            s += std::to_string(i + 1);
            first = false;
        }
    return s + "}";
}
} // namespace detail

/// The chain 0 < 1 < ... < k.
inline GradedPoset chain_poset(int k)
{
    if (k < 0) throw validation_error("chain length must be >= 0");
    std::vector<std::string> labels;
    std::vector<GradedPoset::Cover> covers;
    for (int i = 0; i <= k; ++i) labels.push_back(std::to_string(i));
    for (int i = 0; i < k; ++i) covers.emplace_back(labels[i], labels[i + 1]);
    return GradedPoset("chain:" + std::to_string(k), labels, covers);
}

/// The lattice of subsets of [k].
inline GradedPoset boolean_poset(int k)
{
    if (k < 0 || k > 12) throw validation_error("boolean lattice rank must be in 0..12");
    std::vector<std::string> labels;
    std::vector<GradedPoset::Cover> covers;
    const std::uint64_t count = std::uint64_t{1} << k;
    for (std::uint64_t m = 0; m < count; ++m) labels.push_back(detail::set_label(m));
    for (std::uint64_t m = 0; m < count; ++m)
        for (int i = 0; i < k; ++i)
            if (!(m >> i & 1u)) covers.emplace_back(labels[m], labels[m | (std::uint64_t{1} << i)]);
    return GradedPoset("boolean:" + std::to_string(k), labels, covers);
}

/// Face lattice of an m-gon: empty face, m vertices, m edges, the polygon.
inline GradedPoset polygon_poset(int m)
{
    if (m < 3) throw validation_error("polygon needs at least 3 vertices");
    std::vector<std::string> labels{"empty"};
    std::vector<GradedPoset::Cover> covers;
    for (int i = 0; i < m; ++i) labels.push_back("v" + std::to_string(i));
    for (int i = 0; i < m; ++i) labels.push_back("e" + std::to_string(i));
    labels.push_back("P");
    for (int i = 0; i < m; ++i) {
        const std::string v = "v" + std::to_string(i), e = "e" + std::to_string(i);
        covers.emplace_back("empty", v);
        covers.emplace_back(v, e);
        covers.emplace_back("v" + std::to_string((i + 1) % m), e);
        covers.emplace_back(e, "P");
    }
    return GradedPoset("polygon:" + std::to_string(m), labels, covers);
}

/// Face lattice of the d-simplex, including the empty face and the simplex.
inline GradedPoset simplex_faces_poset(int d)
{
    if (d < 0 || d > 11) throw validation_error("simplex dimension must be in 0..11");
    GradedPoset b = boolean_poset(d + 1);
    return GradedPoset("simplex:" + std::to_string(d), b.labels(), b.covers());
}

/// Face lattice of the d-cube: words over {0,1,*} plus the empty face.
inline GradedPoset cube_faces_poset(int d)
{
    if (d < 0 || d > 7) throw validation_error("cube dimension must be in 0..7");
    std::vector<std::string> faces{""};
    for (int i = 0; i < d; ++i) {
        std::vector<std::string> next;
        for (const auto& f : faces)
            for (char ch : {'0', '1', '*'}) next.push_back(f + ch);
        faces = std::move(next);
    }
    std::vector<std::string> labels{"empty"};
    std::vector<GradedPoset::Cover> covers;
    for (const auto& f : faces) {
        const std::string lab = "[" + f + "]";
        labels.push_back(lab);
        if (f.find('*') == std::string::npos) covers.emplace_back("empty", lab);
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] != '*') continue;
            for (char ch : {'0', '1'}) {
                std::string g = f;
                g[i] = ch;
                covers.emplace_back("[" + g + "]", lab);
            }
        }
    }
    return GradedPoset("cube:" + std::to_string(d), labels, covers);
}

/// Componentwise order on pairs.
inline GradedPoset product(const GradedPoset& p, const GradedPoset& q)
{
    std::vector<std::string> labels;
    auto lab = [&](std::size_t x, std::size_t y) { return "(" + p.label(x) + "," + q.label(y) + ")"; };
    for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = 0; y < q.size(); ++y) labels.push_back(lab(x, y));
    std::vector<GradedPoset::Cover> covers;
    for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = 0; y < q.size(); ++y) {
            for (std::size_t x2 : p.upper_covers(x)) covers.emplace_back(lab(x, y), lab(x2, y));
            for (std::size_t y2 : q.upper_covers(y)) covers.emplace_back(lab(x, y), lab(x, y2));
        }
    return GradedPoset(p.name() + "*" + q.name(), labels, covers);
}

/// The opposite poset.
inline GradedPoset dual(const GradedPoset& p)
{
    std::vector<GradedPoset::Cover> covers;
    for (const auto& [lo, hi] : p.covers()) covers.emplace_back(hi, lo);
    return GradedPoset("dual:" + p.name(), p.labels(), covers);
}

/// P with a new minimum below the old one; every rank shifts up by one.
inline GradedPoset adjoin_hat_below(const GradedPoset& p)
{
    std::string fresh = "hat0";
    while (p.find(fresh)) fresh += "'";
    std::vector<std::string> labels = p.labels();
    labels.push_back(fresh);
    std::vector<GradedPoset::Cover> covers = p.covers();
    covers.emplace_back(fresh, p.label(p.bottom()));
    return GradedPoset("hat0:" + p.name(), labels, covers);
}

// ---------------------------------------------------------------------------
// Flag enumeration.

/// The full flag f-vector, indexed by masks of subsets of [n] where n+1 is
/// the rank of P. Chains are counted by a dynamic program over rank levels:
/// the count for S ending at x sums the counts for S minus max(S) over the
/// elements below x at the previous selected rank.
inline std::vector<Integer> flag_vector(const GradedPoset& p)
{
    const int n = p.top_rank() - 1;
    if (n < 0) return {Integer(1)};
    if (n > 20) throw validation_error("rank too large for full flag enumeration");
    const std::size_t count = std::size_t{1} << n;
    // chains[S][i]: chains with rank set S whose top element is level(max S)[i].
    std::vector<std::vector<Integer>> chains(count);
    std::vector<Integer> f(count);
    f[0] = 1;
    for (std::size_t s = 1; s < count; ++s) {
        const int top = 64 - std::countl_zero(static_cast<std::uint64_t>(s));
        const std::size_t rest = s & ~(std::size_t{1} << (top - 1));
        const auto& lvl = p.level(top);
        auto& cur = chains[s];
        cur.assign(lvl.size(), Integer(0));
        if (rest == 0) {
            std::fill(cur.begin(), cur.end(), Integer(1));
        } else {
            const int below = 64 - std::countl_zero(static_cast<std::uint64_t>(rest));
            const auto& lower = p.level(below);
            const auto& prev = chains[rest];
            for (std::size_t i = 0; i < lvl.size(); ++i)
                for (std::size_t j = 0; j < lower.size(); ++j)
                    if (prev[j] != 0 && p.less(lower[j], lvl[i])) cur[i] += prev[j];
        }
        for (const auto& c : cur) f[s] += c;
    }
    return f;
}

inline Integer flag_f(const GradedPoset& p, const Subset& s)
{
    if (s.ambient() != p.top_rank() - 1)
        throw validation_error("flag index lives in [" + std::to_string(s.ambient()) + "] but the poset has rank " +
                               std::to_string(p.top_rank()));
    return flag_vector(p)[s.bits()];
}

/// F(P) = sum_S f_S(P) M_S in degree n+1; the rank-0 poset gives 1.
inline QSym qsym_of_poset(const GradedPoset& p)
{
    const int degree = p.top_rank();
    if (degree == 0) return QSym::one();
    const auto f = flag_vector(p);
    QSym q;
    for (std::size_t m = 0; m < f.size(); ++m) q.add({degree, m}, Rational(f[m]));
    return q;
}

// ---------------------------------------------------------------------------
// Moebius function and the Eulerian test.

/// mu(x, y) for all y >= x.
inline std::vector<long long> mobius_from(const GradedPoset& p, std::size_t x)
{
    std::vector<long long> mu(p.size(), 0);
    mu[x] = 1;
    for (int r = p.rank(x) + 1; r <= p.top_rank(); ++r)
        for (std::size_t y : p.level(r)) {
            if (!p.leq(x, y)) continue;
            long long s = 0;
            for (int r2 = p.rank(x); r2 < r; ++r2)
                for (std::size_t z : p.level(r2))
                    if (p.leq(x, z) && p.leq(z, y)) s += mu[z];
            mu[y] = -s;
        }
    return mu;
}

inline long long mobius(const GradedPoset& p, std::size_t x, std::size_t y)
{
    if (!p.leq(x, y))
        throw validation_error("mobius(" + p.label(x) + ", " + p.label(y) + ") needs x <= y");
    return mobius_from(p, x)[y];
}

struct MobiusViolation {
    std::size_t lower = 0;
    std::size_t upper = 0;
    long long value = 0;
    long long expected = 0;
};

/// The first pair x <= y with mu(x,y) != (-1)^{r(y)-r(x)}, if any.
inline std::optional<MobiusViolation> eulerian_violation(const GradedPoset& p)
{
    for (std::size_t x = 0; x < p.size(); ++x) {
        const auto mu = mobius_from(p, x);
        for (std::size_t y = 0; y < p.size(); ++y) {
            if (!p.leq(x, y)) continue;
            const long long expected = (p.rank(y) - p.rank(x)) % 2 == 0 ? 1 : -1;
            if (mu[y] != expected) return MobiusViolation{x, y, mu[y], expected};
        }
    }
    return std::nullopt;
}

inline bool is_eulerian(const GradedPoset& p) { return !eulerian_violation(p).has_value(); }

inline std::string describe(const GradedPoset& p, const MobiusViolation& v)
{
    return "mu(" + p.label(v.lower) + ", " + p.label(v.upper) + ") = " + std::to_string(v.value) + ", Eulerian needs " +
           std::to_string(v.expected);
}

} // namespace pqsym
