#pragma once

// Slow reference computations used to cross-check the fast routes.

#include <map>
#include <vector>

#include "combinat.hpp"
#include "qsym.hpp"
#include "rational.hpp"

namespace pqsym::oracle {

/// Polynomial in x_1..x_N: exponent vector -> coefficient.
using Series = std::map<std::vector<int>, Rational>;

/// M_beta evaluated in N variables: sum over i_1 < ... < i_k of prod x_{i_j}^{beta_j}.
inline Series monomial_series(const Composition& beta, int vars)
{
    Series out;
    const int k = static_cast<int>(beta.size());
    if (k > vars) return out;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) idx[static_cast<std::size_t>(j)] = j;
    while (true) {
        std::vector<int> exps(static_cast<std::size_t>(vars), 0);
        for (int j = 0; j < k; ++j) exps[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])] = beta[static_cast<std::size_t>(j)];
        out[exps] += 1;
        int j = k - 1;
        while (j >= 0 && idx[static_cast<std::size_t>(j)] == vars - k + j) --j;
        if (j < 0) break;
        ++idx[static_cast<std::size_t>(j)];
        for (int t = j + 1; t < k; ++t) idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
    }
    return out;
}

inline Series series_of(const QSym& q, int vars)
{
    Series out;
    for (const auto& [k, c] : q.terms())
        for (const auto& [e, v] : monomial_series(composition_of_key(k), vars)) out[e] += c * v;
    return out;
}

inline Series series_product(const Series& a, const Series& b)
{
    Series out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    return out;
}

/// Product computed through polynomials in as many variables as the total
/// degree (enough for every composition that can appear); the M-coefficient
/// of gamma is read off x_1^{gamma_1} ... x_k^{gamma_k}.
inline QSym product_via_series(const QSym& a, const QSym& b)
{
    int vars = 0;
    for (int da : a.degrees())
        for (int db : b.degrees()) vars = std::max(vars, da + db);
    const Series prod = series_product(series_of(a, vars), series_of(b, vars));
    QSym out;
    for (const auto& [e, c] : prod) {
        std::size_t len = 0;
        while (len < e.size() && e[len] > 0) ++len;
        bool packed = true;
        for (std::size_t i = len; i < e.size(); ++i) packed = packed && e[i] == 0;
        if (!packed) continue;
        out += QSym::monomial(Composition(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(len)), c);
    }
    return out;
}

/// Antipode from its defining recursion s(M_a) = -sum_{a = b.g, g nonempty} s(M_b) M_g.
class RecursiveAntipode {
public:
    QSym operator()(const QSym& q)
    {
        QSym out;
        for (const auto& [k, c] : q.terms()) out += of(composition_of_key(k)) * c;
        return out;
    }

private:
    QSym of(const Composition& a)
    {
        if (a.empty()) return QSym::one();
        if (auto it = memo_.find(a); it != memo_.end()) return it->second;
        QSym out;
        for (std::size_t cut = 0; cut < a.size(); ++cut) {
            const Composition left(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(cut));
            const Composition right(a.begin() + static_cast<std::ptrdiff_t>(cut), a.end());
            out -= multiply(of(left), QSym::monomial(right));
        }
        memo_.emplace(a, out);
        return out;
    }
    std::map<Composition, QSym> memo_;
};

} // namespace pqsym::oracle
