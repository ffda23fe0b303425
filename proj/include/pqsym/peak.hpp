#pragma once

// The peak subalgebra Pi of Q.
//
// Theta_w = sum over S in b[I^w] of 2^{|S|+1} M_S spans Pi (one element per
// cd-word). An element of Pi is recognised by the generalized
// Dehn-Sommerville functionals, and its Theta-coordinates are one half of its
// c-2d-index. The cd-index itself is read off the right-sparse flag
// k-vector by solving, for each d-count j, the square system
//
//     k_S = sum { [w] : |w|_d = |S| = j, S_w in b[I_S] }   (S right sparse).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "combinat.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "poset.hpp"
#include "qsym.hpp"
#include "rational.hpp"

namespace pqsym {

/// Exact-rational combination of cd-words: cd-index, c-2d-index, Theta- and
/// Omega-coordinates all use this carrier.
class CdPolynomial {
public:
    CdPolynomial() = default;
    CdPolynomial(std::initializer_list<std::pair<const char*, long>> init)
    {
        for (const auto& [w, c] : init) add(CdWord(w == std::string("1") ? "" : w), Rational(c));
    }

    void add(const CdWord& w, const Rational& c)
    {
        if (sgn(c) == 0) return;
        auto [it, inserted] = coeffs_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) coeffs_.erase(it);
        }
    }

    Rational coefficient(const CdWord& w) const
    {
        auto it = coeffs_.find(w);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    const std::map<CdWord, Rational>& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    CdPolynomial& operator+=(const CdPolynomial& o)
    {
        for (const auto& [w, c] : o.coeffs_) add(w, c);
        return *this;
    }
    CdPolynomial& operator-=(const CdPolynomial& o)
    {
        for (const auto& [w, c] : o.coeffs_) add(w, -c);
        return *this;
    }
    CdPolynomial& operator*=(const Rational& c)
    {
        if (sgn(c) == 0) coeffs_.clear();
        for (auto& [w, v] : coeffs_) v *= c;
        return *this;
    }
    friend CdPolynomial operator+(CdPolynomial a, const CdPolynomial& b) { return a += b; }
    friend CdPolynomial operator-(CdPolynomial a, const CdPolynomial& b) { return a -= b; }
    friend CdPolynomial operator*(CdPolynomial a, const Rational& c) { return a *= c; }
    friend CdPolynomial operator*(const Rational& c, CdPolynomial a) { return a *= c; }
    friend bool operator==(const CdPolynomial&, const CdPolynomial&) = default;

private:
    std::map<CdWord, Rational> coeffs_;
};

inline std::string to_string(const CdPolynomial& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : p.terms()) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c) + ")" + w.str();
    }
    return out;
}

/// Word reversal applied to every term.
inline CdPolynomial reverse_words(const CdPolynomial& p)
{
    CdPolynomial out;
    for (const auto& [w, c] : p.terms()) out.add(reverse_word(w), c);
    return out;
}

// ---------------------------------------------------------------------------
// The Theta and Psi elements.

/// Theta_w = sum_{S in b[I^w]} 2^{|S|+1} M_S, homogeneous of degree deg(w)+1.
inline QSym theta(const CdWord& w)
{
    const int n = w.degree();
    const IntervalFamily family = interval_family_of_word(w);
    QSym out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
        if (blocks_bits(family, m)) out.add({n + 1, m}, pow2(static_cast<unsigned>(std::popcount(m) + 1)));
    return out;
}

/// Theta indexed by a left-sparse subset.
inline QSym theta(const Subset& left_sparse) { return theta(word_of_left_sparse(left_sparse)); }

/// F-basis coefficients of Theta_w: 2^{|w|_d+1} on every T with T and its
/// complement both in b[I^w].
inline CoeffMap theta_f_basis(const CdWord& w)
{
    const int n = w.degree();
    const IntervalFamily family = interval_family_of_word(w);
    const std::uint64_t full = Subset::full(n).bits();
    const Rational c = pow2(static_cast<unsigned>(w.d_count() + 1));
    CoeffMap out;
    for (std::uint64_t t = 0; t <= full; ++t)
        if (blocks_bits(family, t) && blocks_bits(family, full & ~t)) out[{n + 1, t}] = c;
    return out;
}

/// sum_w coeff(w) Theta_w.
inline QSym theta_combination(const CdPolynomial& coords)
{
    QSym out;
    for (const auto& [w, c] : coords.terms()) out += theta(w) * c;
    return out;
}

/// Psi_w = sum of K_S over right-sparse S in b[I^w] with |S| = |w|_d.
inline QSym psi(const CdWord& w)
{
    const int n = w.degree();
    const IntervalFamily family = interval_family_of_word(w);
    CoeffMap k;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        const Subset s(n, m);
        if (s.size() == w.d_count() && is_right_sparse(s) && blocks_bits(family, m)) k[key_of(s)] = 1;
    }
    return from_coefficients(k, Basis::K);
}

// ---------------------------------------------------------------------------
// Dehn-Sommerville relations.

/// A linear functional sum_S a_S f_S on the M-coefficients of one degree.
struct DsRelation {
    int degree = 0;
    std::string description;
    std::map<std::uint64_t, Rational> coeffs;

    Rational evaluate(const QSym& q) const
    {
        Rational v = 0;
        for (const auto& [m, a] : coeffs) v += a * q.coefficient(QKey{degree, m});
        return v;
    }

    /// e.g. "2 f{} - f{1}".
    std::string functional() const
    {
        std::string out;
        for (const auto& [m, a] : coeffs) {
            const Rational mag = abs(a);
            if (out.empty())
                out += sgn(a) < 0 ? "-" : "";
            else
                out += sgn(a) < 0 ? " - " : " + ";
            if (mag != 1) out += to_string(mag) + " ";
            out += "f{" + (degree > 0 ? Subset(degree - 1, m).key() : std::string()) + "}";
        }
        return out;
    }
};

namespace detail {

inline std::vector<std::vector<Composition>> compositions_up_to(int max_degree)
{
    std::vector<std::vector<Composition>> by_degree(static_cast<std::size_t>(max_degree) + 1);
    by_degree[0].push_back({});
    for (int d = 1; d <= max_degree; ++d)
        for (int first = 1; first <= d; ++first)
            for (const auto& rest : by_degree[static_cast<std::size_t>(d - first)]) {
                Composition c{first};
                c.insert(c.end(), rest.begin(), rest.end());
                by_degree[static_cast<std::size_t>(d)].push_back(std::move(c));
            }
    return by_degree;
}

inline std::string y_word(const Composition& c)
{
    std::string s;
    for (int part : c) s += "y" + std::to_string(part);
    return s;
}

} // namespace detail

/// Spanning set of the degree-(n+1) part of the Euler ideal: every
/// y_alpha chi_k y_beta of total degree n+1, with
/// chi_k = sum_{i+j=k} (-1)^i y_i y_j (y_0 = 1), each monomial y_gamma read
/// as the flag number f_{S(gamma)}. Functionals that vanish identically
/// (chi_1, for instance) are dropped; the list may still be redundant.
inline std::vector<DsRelation> ds_relations(int degree)
{
    if (degree < 0) throw validation_error("negative degree");
    std::vector<DsRelation> out;
    if (degree < 2) return out;
    const auto comps = detail::compositions_up_to(degree);
    for (int k = 1; k <= degree; ++k) {
        // chi_k as a list of (sign, composition) before concatenation.
        std::vector<std::pair<int, Composition>> chi;
        for (int i = 0; i <= k; ++i) {
            Composition c;
            if (i > 0) c.push_back(i);
            if (k - i > 0) c.push_back(k - i);
            chi.emplace_back(i % 2 == 0 ? 1 : -1, c);
        }
        for (int a = 0; a + k <= degree; ++a) {
            const int b = degree - k - a;
            for (const auto& alpha : comps[static_cast<std::size_t>(a)])
                for (const auto& beta : comps[static_cast<std::size_t>(b)]) {
                    std::string label = "chi" + std::to_string(k);
                    if (!alpha.empty()) label = detail::y_word(alpha) + " " + label;
                    if (!beta.empty()) label += " " + detail::y_word(beta);
                    DsRelation rel{degree, label, {}};
                    for (const auto& [sign, mid] : chi) {
                        Composition gamma = alpha;
                        gamma.insert(gamma.end(), mid.begin(), mid.end());
                        gamma.insert(gamma.end(), beta.begin(), beta.end());
                        auto& slot = rel.coeffs[subset_of_composition(gamma).bits()];
                        slot += sign;
                    }
                    std::erase_if(rel.coeffs, [](const auto& kv) { return sgn(kv.second) == 0; });
                    if (!rel.coeffs.empty()) out.push_back(std::move(rel));
                }
        }
    }
    return out;
}

struct Membership {
    bool member = true;
    std::optional<DsRelation> violated; ///< first failing functional
    Rational value;                     ///< its value on the input
};

/// Membership in Pi: every Dehn-Sommerville functional annihilates every
/// homogeneous component.
inline Membership is_in_peak_algebra(const QSym& q)
{
    for (int d : q.degrees()) {
        const QSym part = q.component(d);
        for (auto& rel : ds_relations(d)) {
            Rational v = rel.evaluate(part);
            if (sgn(v) != 0) return {false, std::move(rel), std::move(v)};
        }
    }
    return {};
}

inline std::string describe(const Membership& m)
{
    if (m.member) return "in Pi";
    return "violates " + m.violated->description + ": " + m.violated->functional() + " = " + to_string(m.value) +
           " (expected 0)";
}

// ---------------------------------------------------------------------------
// cd-index, c-2d-index, Eulerian projection, Theta-expansion.

/// cd-index of every positive-degree component, defined for all of Q from
/// the right-sparse flag k-vector. Non-sparse k-values are ignored.
inline CdPolynomial cd_index(const QSym& q)
{
    CdPolynomial out;
    for (int d : q.degrees()) {
        if (d == 0) continue;
        const int n = d - 1;
        const auto kvec = flag_k_from_h(flag_h_from_f(dense_component(q, d)));
        std::map<int, std::vector<CdWord>> words_by_d;
        for (auto& w : cd_words(n)) words_by_d[w.d_count()].push_back(std::move(w));
        std::map<int, std::vector<Subset>> sparse_by_size;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            const Subset s(n, m);
            if (is_right_sparse(s)) sparse_by_size[s.size()].push_back(s);
        }
        for (const auto& [j, words] : words_by_d) {
            const auto& rows = sparse_by_size[j];
            if (rows.size() != words.size())
                throw invariant_error("cd-index system for degree " + std::to_string(d) + ", d-count " +
                                      std::to_string(j) + " is not square");
            Matrix a(rows.size(), words.size());
            std::vector<Rational> rhs(rows.size());
            for (std::size_t r = 0; r < rows.size(); ++r) {
                const IntervalFamily family = interval_family_of_right_sparse(rows[r]);
                for (std::size_t c = 0; c < words.size(); ++c)
                    if (blocks(family, sw_of_word(words[c]))) a(r, c) = 1;
                rhs[r] = kvec[rows[r].bits()];
            }
            const Solution sol = solve(a, rhs);
            if (sol.status != SolveStatus::unique)
                throw invariant_error("singular cd-index system for degree " + std::to_string(d) + ", d-count " +
                                      std::to_string(j));
            for (std::size_t c = 0; c < words.size(); ++c) out.add(words[c], sol.x[c]);
        }
    }
    return out;
}

/// [[w]] = [w] / 2^{|w|_d}.
inline CdPolynomial c2d_index(const CdPolynomial& cd)
{
    CdPolynomial out;
    for (const auto& [w, c] : cd.terms()) out.add(w, c / pow2(static_cast<unsigned>(w.d_count())));
    return out;
}

inline CdPolynomial c2d_index(const QSym& q) { return c2d_index(cd_index(q)); }

/// The unique element of Pi agreeing with q under halve_project. The scalar
/// component passes through unchanged.
inline QSym eulerian_projection(const QSym& q)
{
    QSym out = QSym::scalar(counit(q));
    out += theta_combination(c2d_index(q) * Rational(1, 2));
    return out;
}

/// Coordinates of q in the Theta basis, (1/2)[[w]]_q. Requires q in Pi and
/// no scalar component.
inline CdPolynomial theta_expansion(const QSym& q)
{
    if (sgn(counit(q)) != 0) throw precondition_error("the scalar component has no Theta-expansion");
    const Membership m = is_in_peak_algebra(q);
    if (!m.member) throw precondition_error("input is not in the peak algebra: " + describe(m));
    return c2d_index(q) * Rational(1, 2);
}

struct SignedWord {
    int sign = 1;
    CdWord word;
    friend bool operator==(const SignedWord&, const SignedWord&) = default;
};

/// s(Theta_w) = (-1)^{deg w + 1} Theta_{w*}.
inline SignedWord antipode_theta(const CdWord& w)
{
    return {w.degree() % 2 == 0 ? -1 : 1, reverse_word(w)};
}

/// Independent cd-index route: write the flag h-vector as the ab-polynomial
/// sum_S h_S u_S (u_i = b for i in S, a otherwise) and solve exactly for a
/// rewriting in c = a+b, d = ab+ba. A nonzero residual means q is not in Pi.
inline CdPolynomial ab_index_oracle(const QSym& q)
{
    CdPolynomial out;
    for (int d : q.degrees()) {
        if (d == 0) continue;
        const int n = d - 1;
        const auto h = flag_h_from_f(dense_component(q, d));
        const auto words = cd_words(n);
        const std::size_t count = std::size_t{1} << n;
        Matrix a(count, words.size());
        for (std::size_t c = 0; c < words.size(); ++c) {
            // Positions of each d; every ab-monomial of the expansion has
            // exactly one b in each such pair and anything at c positions.
            std::vector<int> pair_starts;
            int pos = 1;
            for (char ch : words[c].letters()) {
                if (ch == 'd') pair_starts.push_back(pos);
                pos += ch == 'c' ? 1 : 2;
            }
            for (std::size_t s = 0; s < count; ++s) {
                bool hit = true;
                for (int p : pair_starts) {
                    const bool first = s >> (p - 1) & 1u, second = s >> p & 1u;
                    if (first == second) {
                        hit = false;
                        break;
                    }
                }
                if (hit) a(s, c) = 1;
            }
        }
        const Solution sol = solve(a, h);
        if (sol.status == SolveStatus::inconsistent)
            throw precondition_error("degree " + std::to_string(d) + " ab-index not expressible in c,d");
        if (sol.status != SolveStatus::unique)
            throw invariant_error("cd-word expansions are linearly dependent in degree " + std::to_string(d));
        for (std::size_t c = 0; c < words.size(); ++c) out.add(words[c], sol.x[c]);
    }
    return out;
}

inline CdPolynomial cd_index(const GradedPoset& p) { return cd_index(qsym_of_poset(p)); }

/// Checks [w]_{P*} = [w*]_P.
inline bool dual_cd_check(const GradedPoset& p)
{
    if (!is_eulerian(p)) throw precondition_error("dual cd-index check needs an Eulerian poset, " + p.name() + " is not");
    return cd_index(dual(p)) == reverse_words(cd_index(p));
}

} // namespace pqsym
