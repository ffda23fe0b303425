#pragma once

// Toric f- and g-polynomials: the poset recursion, its linear extension to
// QSym, and the closed form on the Theta basis.

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "combinat.hpp"
#include "errors.hpp"
#include "peak.hpp"
#include "poset.hpp"
#include "qsym.hpp"
#include "rational.hpp"

namespace pqsym {

/// Dense univariate polynomial in x with exact coefficients; index = power.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(const Rational& a) { return Polynomial(std::vector<Rational>{a}); }
    static Polynomial x_power(int k, const Rational& a = 1)
    {
        std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
        c.back() = a;
        return Polynomial(std::move(c));
    }
    /// (x - 1)^k.
    static Polynomial x_minus_one_power(int k)
    {
        Polynomial out = constant(1);
        const Polynomial f{Rational(-1), Rational(1)};
        for (int i = 0; i < k; ++i) out = out * f;
        return out;
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational coefficient(int i) const
    {
        return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Rational(0);
    }
    Rational operator()(const Rational& x) const
    {
        Rational v = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
        return v;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + b * Rational(-1); }
    friend Polynomial operator*(const Polynomial& a, const Rational& s)
    {
        std::vector<Rational> c = a.c_;
        for (auto& x : c) x *= s;
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim()
    {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline std::string to_string(const Polynomial& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= p.degree(); ++i) {
        const Rational& a = p.coefficients()[static_cast<std::size_t>(i)];
        if (sgn(a) == 0) continue;
        if (!out.empty()) out += " + ";
        out += "(" + to_string(a) + ")";
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

// ---------------------------------------------------------------------------

inline Integer binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Integer p_nk(int n, int k)
{
    if (n < 0) throw validation_error("p(n,k) needs n >= 0");
    return binomial(n, k) - binomial(n, k - 1);
}

/// Q_{n+1} = sum_{k <= n/2} (-1)^k p(n,k) x^k; argument is n+1.
inline Polynomial q_poly(int size)
{
    if (size < 1) throw validation_error("Q_{n+1} needs n+1 >= 1");
    const int n = size - 1;
    std::vector<Rational> c;
    for (int k = 0; k <= n / 2; ++k) c.emplace_back(k % 2 == 0 ? p_nk(n, k) : Integer(-p_nk(n, k)));
    return Polynomial(std::move(c));
}

/// T_{n+1} = (-1)^{n/2} p(n, n/2) x^{n/2}; argument is n+1, n must be even.
inline Polynomial t_poly(int size)
{
    if (size < 1) throw validation_error("T_{n+1} needs n+1 >= 1");
    const int n = size - 1;
    if (n % 2 != 0) throw validation_error("T_{n+1} is defined only for even n, got n = " + std::to_string(n));
    const Integer p = p_nk(n, n / 2);
    return Polynomial::x_power(n / 2, Rational((n / 2) % 2 == 0 ? p : Integer(-p)));
}

/// g from f for rank n+1: kappa_0 + sum_{1 <= i <= n/2} (kappa_i - kappa_{i-1}) x^i.
inline Polynomial g_from_f(const Polynomial& f, int n)
{
    if (n < 0) return f;
    std::vector<Rational> c;
    for (int i = 0; i <= n / 2; ++i) c.push_back(f.coefficient(i) - (i == 0 ? Rational(0) : f.coefficient(i - 1)));
    return Polynomial(std::move(c));
}

struct FgPair {
    Polynomial f;
    Polynomial g;
};

/// f(P) = sum_{y < top} g([bottom, y]) (x-1)^{n - r(y)} for P of rank n+1.
inline FgPair fg_poly_poset(const GradedPoset& p)
{
    const int rank = p.top_rank();
    if (rank == 0) return {Polynomial::constant(1), Polynomial::constant(1)};

    // g of each lower interval, processed by rank.
    std::vector<Polynomial> g(p.size());
    std::vector<Polynomial> powers;
    for (int k = 0; k <= rank; ++k) powers.push_back(Polynomial::x_minus_one_power(k));
    auto f_below = [&](std::size_t top) {
        const int n = p.rank(top) - 1;
        Polynomial f;
        for (int r = 0; r < p.rank(top); ++r)
            for (std::size_t y : p.level(r))
                if (p.leq(y, top)) f += g[y] * powers[static_cast<std::size_t>(n - r)];
        return f;
    };
    g[p.bottom()] = Polynomial::constant(1);
    for (int r = 1; r < rank; ++r)
        for (std::size_t y : p.level(r)) g[y] = g_from_f(f_below(y), r - 1);
    Polynomial f = f_below(p.top());
    Polynomial gt = g_from_f(f, rank - 1);
    return {std::move(f), std::move(gt)};
}

/// (h_0, ..., h_n) = (kappa_n, ..., kappa_0).
inline std::vector<Rational> toric_h(const GradedPoset& p)
{
    const int n = p.top_rank() - 1;
    const Polynomial f = fg_poly_poset(p).f;
    std::vector<Rational> h;
    for (int i = std::max(n, 0); i >= 0; --i) h.push_back(f.coefficient(i));
    return h;
}

/// Degree-k part of the lower-interval aggregate: M-coefficient f'_S = f_{S u {k}}(F).
inline QSym truncate_rank(const QSym& q, int k)
{
    if (!q.is_homogeneous() || q.is_zero()) {
        if (q.is_zero()) return {};
        throw validation_error("rank truncation needs a homogeneous element");
    }
    const int d = q.degrees().front();
    const int n = d - 1;
    if (k < 1 || k > n) throw validation_error("truncation rank " + std::to_string(k) + " outside 1.." + std::to_string(n));
    const std::uint64_t kbit = std::uint64_t{1} << (k - 1);
    QSym out;
    for (const auto& [key, c] : q.terms())
        if ((key.bits & kbit) && (key.bits >> k) == 0) out.add({k, key.bits & ~kbit}, c);
    return out;
}

namespace detail {

class GOnMonomials {
public:
    Polynomial g(int degree, std::uint64_t bits)
    {
        if (degree == 0) return Polynomial::constant(1);
        const auto key = std::make_pair(degree, bits);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const int n = degree - 1;
        Polynomial f;
        if (bits == 0) {
            f = Polynomial::x_minus_one_power(n);
        } else {
            const int top = 64 - std::countl_zero(bits);
            f = g(top, bits & ~(std::uint64_t{1} << (top - 1))) * Polynomial::x_minus_one_power(n - top);
        }
        Polynomial result = g_from_f(f, n);
        memo_.emplace(key, result);
        return result;
    }

private:
    std::map<std::pair<int, std::uint64_t>, Polynomial> memo_;
};

} // namespace detail

/// The linear map g on QSym, determined on M_S^{(n+1)} by the rank-truncation
/// recursion; g of a scalar is the scalar.
inline Polynomial g_on_qsym(const QSym& q)
{
    detail::GOnMonomials cache;
    Polynomial out;
    for (const auto& [key, c] : q.terms()) out += cache.g(key.degree, key.bits) * c;
    return out;
}

/// Closed form for w = c^{n_1} d ... c^{n_k} d c^m:
/// 2^{k+1} x^k Q_{m+1} prod T_{n_j+1} if w is even, else 0.
inline Polynomial g_theta(const CdWord& w)
{
    if (!is_even_word(w)) return {};
    std::vector<int> runs{0};
    for (char ch : w.letters()) {
        if (ch == 'c') ++runs.back();
        else runs.push_back(0);
    }
    const int m = runs.back();
    const int k = static_cast<int>(runs.size()) - 1;
    Polynomial out = Polynomial::x_power(k, pow2(static_cast<unsigned>(k + 1))) * q_poly(m + 1);
    for (int j = 0; j < k; ++j) out = out * t_poly(runs[static_cast<std::size_t>(j)] + 1);
    return out;
}

/// g of sum a_w Theta_w, termwise via the closed form.
inline Polynomial g_theta(const CdPolynomial& coords)
{
    Polynomial out;
    for (const auto& [w, c] : coords.terms()) out += g_theta(w) * c;
    return out;
}

} // namespace pqsym
