#pragma once

// The Stembridge map vartheta(F_S) = Theta_{Lambda(S)}, its matrix on the
// Theta basis, the induced random walk on left-sparse sets, and its
// eigenbasis Omega_w = w(Theta_1, L^2)(Theta_1).

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "combinat.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "peak.hpp"
#include "poset.hpp"
#include "qsym.hpp"
#include "rational.hpp"

namespace pqsym {

inline QSym vartheta(const QSym& q)
{
    QSym out;
    for (int d : q.degrees()) {
        if (d == 0) {
            out.add({0, 0}, counit(q));
            continue;
        }
        std::map<std::uint64_t, Rational> by_peak;
        for (const auto& [k, c] : coefficients(q.component(d), Basis::F)) by_peak[peaks(k.subset()).bits()] += c;
        for (const auto& [lam, c] : by_peak)
            if (sgn(c) != 0) out += theta(Subset(d - 1, lam)) * c;
    }
    return out;
}

inline QSym theta_one() { return theta(CdWord()); }

// ---------------------------------------------------------------------------
// The matrix eta.

/// eta(u, w) with rows u and columns w in canonical word order;
/// vartheta(Theta_w) = 2^{|w|_d+1} sum_u eta(u, w) Theta_u.
struct EtaMatrix {
    int n = 0;
    std::vector<CdWord> words;
    std::vector<std::vector<long long>> entries;

    long long at(std::size_t u, std::size_t w) const { return entries[u][w]; }
    Rational scaled(std::size_t u, std::size_t w) const
    {
        return Rational(static_cast<long>(entries[u][w])) * pow2(static_cast<unsigned>(words[w].d_count() + 1));
    }
    std::size_t index_of(const CdWord& w) const
    {
        auto it = std::lower_bound(words.begin(), words.end(), w);
        if (it == words.end() || *it != w) throw validation_error("word " + w.str() + " is not of degree " + std::to_string(n));
        return static_cast<std::size_t>(it - words.begin());
    }
    friend bool operator==(const EtaMatrix&, const EtaMatrix&) = default;
};

inline void check_matrix_degree(int n)
{
    if (n < 0 || n > 16) throw validation_error("matrix degree must be in 0..16");
}

/// Counts T subset [n] with T and its complement in b[I^w] and Lambda(T) = S_u.
inline EtaMatrix eta_bruteforce(int n)
{
    check_matrix_degree(n);
    EtaMatrix eta{n, cd_words(n), {}};
    const std::size_t dim = eta.words.size();
    eta.entries.assign(dim, std::vector<long long>(dim, 0));
    std::map<std::uint64_t, std::size_t> row_of;
    for (std::size_t i = 0; i < dim; ++i) row_of[sw_of_word(eta.words[i]).bits()] = i;
    const std::uint64_t full = Subset::full(n).bits();
    for (std::size_t col = 0; col < dim; ++col) {
        const IntervalFamily family = interval_family_of_word(eta.words[col]);
        for (std::uint64_t t = 0; t <= full; ++t)
            if (blocks_bits(family, t) && blocks_bits(family, full & ~t))
                ++eta.entries[row_of.at(peaks(Subset(n, t)).bits())][col];
    }
    return eta;
}

/// Closed form: with S_u = {u_1 < ... < u_m}, u_0 = 0, u_{m+1} = n+2, the
/// entry is 0 when some gap (u_i, u_{i+1}) holds two or more elements of
/// S_w, and otherwise the product of u_{i+1} - u_i - 1 over the gaps that
/// miss S_w.
inline long long eta_entry(const CdWord& u, const CdWord& w)
{
    const int n = u.degree();
    std::vector<int> cuts{0};
    for (int x : sw_of_word(u).members()) cuts.push_back(x);
    cuts.push_back(n + 2);
    const Subset sw = sw_of_word(w);
    long long product = 1;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        int inside = 0;
        for (int x = cuts[i] + 1; x < cuts[i + 1]; ++x)
            if (sw.contains(x)) ++inside;
        if (inside > 1) return 0;
        if (inside == 0) product *= cuts[i + 1] - cuts[i] - 1;
    }
    return product;
}

inline EtaMatrix eta_closedform(int n)
{
    check_matrix_degree(n);
    EtaMatrix eta{n, cd_words(n), {}};
    const std::size_t dim = eta.words.size();
    eta.entries.assign(dim, std::vector<long long>(dim, 0));
    for (std::size_t u = 0; u < dim; ++u)
        for (std::size_t w = 0; w < dim; ++w) eta.entries[u][w] = eta_entry(eta.words[u], eta.words[w]);
    return eta;
}

// ---------------------------------------------------------------------------
// Random walk on left-sparse subsets.

/// (1/2^{n+1}) vartheta in Theta coordinates; column-stochastic.
inline Matrix walk_matrix(int n)
{
    const EtaMatrix eta = eta_closedform(n);
    const std::size_t dim = eta.words.size();
    const Rational scale = 1 / pow2(static_cast<unsigned>(n + 1));
    Matrix m(dim, dim);
    for (std::size_t u = 0; u < dim; ++u)
        for (std::size_t w = 0; w < dim; ++w) m(u, w) = eta.scaled(u, w) * scale;
    return m;
}

inline std::vector<Rational> walk_step(const Matrix& walk, const std::vector<Rational>& distribution)
{
    if (distribution.size() != walk.cols())
        throw validation_error("distribution has " + std::to_string(distribution.size()) + " entries, walk needs " +
                               std::to_string(walk.cols()));
    return multiply(walk, distribution);
}

// ---------------------------------------------------------------------------
// Peak-set distribution.

/// Number of permutations of [n+1] with each peak set (left-sparse subsets
/// of [n]).
struct PeakDistribution {
    int size = 0; ///< n+1
    std::map<Subset, Integer> counts;

    Integer total() const
    {
        Integer t = 0;
        for (const auto& [s, c] : counts) t += c;
        return t;
    }
    /// The same data as Theta-coordinates.
    CdPolynomial theta_coordinates() const
    {
        CdPolynomial out;
        for (const auto& [s, c] : counts) out.add(word_of_left_sparse(s), Rational(c));
        return out;
    }
    friend bool operator==(const PeakDistribution&, const PeakDistribution&) = default;
};

/// Enumerates S_{n+1}; the peak set of a permutation is Lambda(descent set).
inline PeakDistribution peak_distribution_enumerated(int size)
{
    if (size < 1 || size > 10) throw validation_error("permutation enumeration supports sizes 1..10");
    const int n = size - 1;
    std::vector<int> perm(static_cast<std::size_t>(size));
    std::iota(perm.begin(), perm.end(), 1);
    PeakDistribution dist{size, {}};
    do {
        std::uint64_t descents = 0;
        for (int i = 1; i <= n; ++i)
            if (perm[static_cast<std::size_t>(i - 1)] > perm[static_cast<std::size_t>(i)])
                descents |= std::uint64_t{1} << (i - 1);
        dist.counts[peaks(Subset(n, descents))] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return dist;
}

/// Reads the same distribution off Theta_1^{n+1}.
inline PeakDistribution peak_distribution_theta(int size)
{
    if (size < 1) throw validation_error("peak distribution size must be >= 1");
    const CdPolynomial coords = theta_expansion(power(theta_one(), size));
    PeakDistribution dist{size, {}};
    for (const auto& [w, c] : coords.terms()) {
        if (!is_integer(c)) throw invariant_error("non-integral Theta-coordinate in Theta_1^" + std::to_string(size));
        dist.counts[sw_of_word(w)] = c.get_num();
    }
    return dist;
}

// ---------------------------------------------------------------------------
// Theta_1-multiplication and L^2 in Theta coordinates.

/// Theta_1 Theta_w = Theta_{cw} + Theta_{wc} + sum_{w=xcy} Theta_{xdy}
///                   + sum_{w=xdy} (Theta_{xcdy} + Theta_{xdcy}).
inline CdPolynomial theta1_multiply(const CdWord& w)
{
    const std::string& s = w.letters();
    CdPolynomial out;
    out.add(CdWord("c" + s), 1);
    out.add(CdWord(s + "c"), 1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        const std::string pre = s.substr(0, i), post = s.substr(i + 1);
        if (s[i] == 'c') {
            out.add(CdWord(pre + "d" + post), 1);
        } else {
            out.add(CdWord(pre + "cd" + post), 1);
            out.add(CdWord(pre + "dc" + post), 1);
        }
    }
    return out;
}

inline CdPolynomial theta1_multiply(const CdPolynomial& p)
{
    CdPolynomial out;
    for (const auto& [w, c] : p.terms()) out += theta1_multiply(w) * c;
    return out;
}

/// L^2(Theta_w) = Theta_{wcc} - Theta_{wd}.
inline CdPolynomial l2_theta(const CdWord& w)
{
    CdPolynomial out;
    out.add(CdWord(w.letters() + "cc"), 1);
    out.add(CdWord(w.letters() + "d"), -1);
    return out;
}

inline CdPolynomial l2_theta(const CdPolynomial& p)
{
    CdPolynomial out;
    for (const auto& [w, c] : p.terms()) out += l2_theta(w) * c;
    return out;
}

// ---------------------------------------------------------------------------
// Eigenbasis.

/// Omega_w: read w as an operator word in c -> (Theta_1 *) and d -> L^2,
/// leftmost letter applied last, and apply it to Theta_1.
inline QSym omega(const CdWord& w)
{
    const QSym t1 = theta_one();
    QSym v = t1;
    const std::string& s = w.letters();
    for (auto it = s.rbegin(); it != s.rend(); ++it) v = *it == 'c' ? multiply(t1, v) : raise_L(raise_L(v));
    return v;
}

/// Omega_w in Theta coordinates, built with the combinatorial rules above.
inline CdPolynomial omega_theta(const CdWord& w)
{
    CdPolynomial v;
    v.add(CdWord(), 1);
    const std::string& s = w.letters();
    for (auto it = s.rbegin(); it != s.rend(); ++it) v = *it == 'c' ? theta1_multiply(v) : l2_theta(v);
    return v;
}

inline Integer omega_eigenvalue(const CdWord& w) { return pow2(static_cast<unsigned>(w.c_count() + 1)).get_num(); }

struct Eigenpair {
    Integer eigenvalue;
    CdWord word;
    CdPolynomial vector; ///< Omega_w in Theta coordinates
};

/// All (2^{|w|_c+1}, Omega_w) for deg w = n. Throws if the Omega_w fail to
/// form a basis of Pi_{n+1}.
inline std::vector<Eigenpair> spectrum(int n)
{
    check_matrix_degree(n);
    const auto words = cd_words(n);
    std::vector<Eigenpair> out;
    std::vector<std::vector<Rational>> cols;
    for (const auto& w : words) {
        CdPolynomial v = omega_theta(w);
        std::vector<Rational> col;
        for (const auto& u : words) col.push_back(v.coefficient(u));
        cols.push_back(std::move(col));
        out.push_back({omega_eigenvalue(w), w, std::move(v)});
    }
    if (rank(Matrix::from_columns(cols)) != words.size())
        throw invariant_error("Omega vectors of degree " + std::to_string(n) + " are not a basis");
    return out;
}

/// Coordinates of q (in Pi, homogeneous of positive degree) in the Omega basis.
inline CdPolynomial omega_expansion(const QSym& q)
{
    if (!q.is_homogeneous() || q.is_zero()) {
        if (q.is_zero()) return {};
        throw precondition_error("Omega-expansion needs a homogeneous element");
    }
    const CdPolynomial coords = theta_expansion(q);
    const int n = q.degrees().front() - 1;
    const auto words = cd_words(n);
    std::vector<std::vector<Rational>> cols;
    for (const auto& w : words) {
        const CdPolynomial v = omega_theta(w);
        std::vector<Rational> col;
        for (const auto& u : words) col.push_back(v.coefficient(u));
        cols.push_back(std::move(col));
    }
    std::vector<Rational> rhs;
    for (const auto& u : words) rhs.push_back(coords.coefficient(u));
    const Solution sol = solve(Matrix::from_columns(cols), rhs);
    if (sol.status != SolveStatus::unique) throw invariant_error("singular Omega change of basis");
    CdPolynomial out;
    for (std::size_t i = 0; i < words.size(); ++i) out.add(words[i], sol.x[i]);
    return out;
}

// ---------------------------------------------------------------------------
// The cone {F in Pi : vartheta(F) >= 0} and the finer flag-h cone.

struct ConeRow {
    std::string label;
    std::vector<long long> coeffs; ///< over cd_words(n), applied to [w]
};

struct GorensteinCone {
    int n = 0;
    std::vector<CdWord> words;
    std::vector<ConeRow> eta_rows; ///< sum_w eta(u,w)[w] >= 0, one per u
    std::vector<ConeRow> h_rows;   ///< h_T = sum_{T, comp T in b[I^w]} [w] >= 0, one per T
};

inline GorensteinCone gorenstein_cone(int n)
{
    check_matrix_degree(n);
    const EtaMatrix eta = eta_closedform(n);
    GorensteinCone cone{n, eta.words, {}, {}};
    for (std::size_t u = 0; u < eta.words.size(); ++u) cone.eta_rows.push_back({"eta:" + eta.words[u].str(), eta.entries[u]});
    std::vector<IntervalFamily> families;
    for (const auto& w : cone.words) families.push_back(interval_family_of_word(w));
    const std::uint64_t full = Subset::full(n).bits();
    for (std::uint64_t t = 0; t <= full; ++t) {
        ConeRow row{"h:{" + Subset(n, t).key() + "}", std::vector<long long>(cone.words.size(), 0)};
        for (std::size_t w = 0; w < families.size(); ++w)
            if (blocks_bits(families[w], t) && blocks_bits(families[w], full & ~t)) row.coeffs[w] = 1;
        cone.h_rows.push_back(std::move(row));
    }
    return cone;
}

/// Row u of the eta system is the sum of the h-rows over T with
/// Lambda(T) = S_u; this is why the h-system implies the eta-system.
inline bool eta_rows_are_sums_of_h_rows(const GorensteinCone& cone)
{
    std::map<std::uint64_t, std::size_t> row_of;
    for (std::size_t i = 0; i < cone.words.size(); ++i) row_of[sw_of_word(cone.words[i]).bits()] = i;
    std::vector<std::vector<long long>> sums(cone.words.size(), std::vector<long long>(cone.words.size(), 0));
    for (std::uint64_t t = 0; t < cone.h_rows.size(); ++t) {
        auto& target = sums[row_of.at(peaks(Subset(cone.n, t)).bits())];
        for (std::size_t w = 0; w < target.size(); ++w) target[w] += cone.h_rows[t].coeffs[w];
    }
    for (std::size_t u = 0; u < sums.size(); ++u)
        if (sums[u] != cone.eta_rows[u].coeffs) return false;
    return true;
}

struct ConeCheck {
    bool eta_ok = true;
    bool h_ok = true;
    std::vector<std::string> failing_eta_rows;
    std::vector<std::string> failing_h_rows;
};

inline ConeCheck cone_check(const GorensteinCone& cone, const CdPolynomial& cd)
{
    ConeCheck out;
    auto eval = [&](const ConeRow& row) {
        Rational v = 0;
        for (std::size_t w = 0; w < cone.words.size(); ++w) v += Rational(static_cast<long>(row.coeffs[w])) * cd.coefficient(cone.words[w]);
        return v;
    };
    for (const auto& row : cone.eta_rows)
        if (sgn(eval(row)) < 0) {
            out.eta_ok = false;
            out.failing_eta_rows.push_back(row.label);
        }
    for (const auto& row : cone.h_rows)
        if (sgn(eval(row)) < 0) {
            out.h_ok = false;
            out.failing_h_rows.push_back(row.label);
        }
    return out;
}

inline ConeCheck cone_check(const QSym& q)
{
    if (!q.is_homogeneous() || q.is_zero() || q.degrees().front() == 0)
        throw precondition_error("cone check needs a homogeneous element of positive degree");
    return cone_check(gorenstein_cone(q.degrees().front() - 1), cd_index(q));
}

// ---------------------------------------------------------------------------
// Coordinate arrangement: intersection lattice boolean(k), zonotope the k-cube.

inline bool zonotope_map_check(int k)
{
    if (k < 1 || k > 6) throw validation_error("zonotope check supports 1 <= k <= 6");
    return vartheta(qsym_of_poset(adjoin_hat_below(boolean_poset(k)))) ==
           qsym_of_poset(cube_faces_poset(k)) * Rational(2);
}

} // namespace pqsym
