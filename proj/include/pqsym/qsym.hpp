#pragma once

// Quasisymmetric functions over Q, stored in the monomial basis M.
//
// A basis element M_S^{(n+1)} is addressed by (degree n+1, S subset of [n]);
// the degree-0 basis element M_0 = 1 is (0, {}). The fundamental basis
// F_S = sum_{T >= S} M_T and the basis K_S = sum_{T >= S} F_T exist only as
// coefficient views: converting coefficients is Moebius inversion over the
// Boolean lattice, which is also what turns a flag f-vector into its flag h-
// and k-vectors.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "combinat.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace pqsym {

enum class Basis { M, F, K };

inline const char* basis_name(Basis b)
{
    switch (b) {
    case Basis::M: return "M";
    case Basis::F: return "F";
    case Basis::K: return "K";
    }
    return "?";
}

inline Basis parse_basis(std::string_view name)
{
    if (name == "M") return Basis::M;
    if (name == "F") return Basis::F;
    if (name == "K") return Basis::K;
    throw validation_error("unknown basis \"" + std::string(name) + "\" (expected M, F or K)");
}

/// Index of a basis element: its degree n+1 and a subset of [n] as a mask.
struct QKey {
    int degree = 0;
    std::uint64_t bits = 0;

    int ambient() const { return degree - 1; }
    Subset subset() const
    {
        if (degree == 0) throw validation_error("the degree-0 basis element has no subset index");
        return Subset(degree - 1, bits);
    }

    friend bool operator==(const QKey&, const QKey&) = default;
    friend auto operator<=>(const QKey&, const QKey&) = default;
};

inline QKey key_of(const Subset& s) { return {s.ambient() + 1, s.bits()}; }

inline QKey key_of_composition(const Composition& beta)
{
    if (beta.empty()) return {0, 0};
    return key_of(subset_of_composition(beta));
}

inline Composition composition_of_key(const QKey& k)
{
    if (k.degree == 0) return {};
    return composition_of_subset(k.subset());
}

using CoeffMap = std::map<QKey, Rational>;

/// An element of Q with exact rational coefficients in the M basis. Zero
/// coefficients are never stored, so equality is equality of the term maps.
class QSym {
public:
    QSym() = default;

    static QSym scalar(const Rational& c)
    {
        QSym q;
        q.add({0, 0}, c);
        return q;
    }
    static QSym one() { return scalar(1); }

    /// M_S in degree |ambient|+1.
    static QSym monomial(const Subset& s, const Rational& c = 1)
    {
        QSym q;
        q.add(key_of(s), c);
        return q;
    }
    static QSym monomial(const Composition& beta, const Rational& c = 1)
    {
        QSym q;
        q.add(key_of_composition(beta), c);
        return q;
    }
    /// F_S = sum over supersets T of S of M_T.
    static QSym fundamental(const Subset& s);
    /// K_S = sum over supersets T of S of 2^{|T|-|S|} M_T.
    static QSym k_element(const Subset& s);

    void add(const QKey& key, const Rational& c)
    {
        if (key.degree < 0 || key.degree > max_ambient + 1) throw validation_error("degree out of range");
        if (key.degree > 0 && key.degree - 1 < 64 && (key.bits >> (key.degree - 1)) != 0)
            throw validation_error("subset index exceeds ambient");
        if (key.degree == 0 && key.bits != 0) throw validation_error("degree-0 key must have empty subset");
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    const CoeffMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const QKey& key) const
    {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational coefficient(const Subset& s) const { return coefficient(key_of(s)); }

    std::vector<int> degrees() const
    {
        std::vector<int> out;
        for (const auto& [k, c] : terms_)
            if (out.empty() || out.back() != k.degree) out.push_back(k.degree);
        return out;
    }

    bool is_homogeneous() const { return degrees().size() <= 1; }

    QSym component(int degree) const
    {
        QSym out;
        for (auto it = terms_.lower_bound({degree, 0}); it != terms_.end() && it->first.degree == degree; ++it)
            out.terms_.insert(*it);
        return out;
    }

    QSym& operator+=(const QSym& o)
    {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    QSym& operator-=(const QSym& o)
    {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    QSym& operator*=(const Rational& c)
    {
        if (sgn(c) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, v] : terms_) v *= c;
        return *this;
    }

    friend QSym operator+(QSym a, const QSym& b) { return a += b; }
    friend QSym operator-(QSym a, const QSym& b) { return a -= b; }
    friend QSym operator-(QSym a) { return a *= Rational(-1); }
    friend QSym operator*(QSym a, const Rational& c) { return a *= c; }
    friend QSym operator*(const Rational& c, QSym a) { return a *= c; }
    friend bool operator==(const QSym&, const QSym&) = default;

private:
    CoeffMap terms_;
};

/// Human-readable rendering such as "2*M(2,1) - M(3)"; used in diagnostics.
inline std::string to_string(const QSym& q)
{
    if (q.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : q.terms()) {
        std::string coeff = to_string(c);
        if (!out.empty()) {
            if (sgn(c) < 0) {
                out += " - ";
                coeff = to_string(Rational(-c));
            } else {
                out += " + ";
            }
        }
        std::string comp;
        for (int p : composition_of_key(k)) comp += (comp.empty() ? "" : ",") + std::to_string(p);
        out += coeff + "*M(" + comp + ")";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dense per-degree views and Boolean-lattice transforms.

/// M-coefficients of the degree-d component as a vector indexed by mask.
inline std::vector<Rational> dense_component(const QSym& q, int degree)
{
    if (degree < 1) throw validation_error("dense views exist for positive degrees only");
    if (degree - 1 > 24) throw validation_error("degree too large for a dense view");
    std::vector<Rational> v(std::size_t{1} << (degree - 1));
    for (auto it = q.terms().lower_bound({degree, 0}); it != q.terms().end() && it->first.degree == degree; ++it)
        v[it->first.bits] = it->second;
    return v;
}

inline QSym from_dense(int degree, const std::vector<Rational>& v)
{
    QSym q;
    for (std::size_t m = 0; m < v.size(); ++m) q.add({degree, m}, v[m]);
    return q;
}

/// out[S] = sum_{T subset S} v[T].
inline std::vector<Rational> subset_zeta(std::vector<Rational> v)
{
    for (std::size_t b = 1; b < v.size(); b <<= 1)
        for (std::size_t m = 0; m < v.size(); ++m)
            if (m & b) v[m] += v[m ^ b];
    return v;
}

/// Inverse of subset_zeta: out[S] = sum_{T subset S} (-1)^{|S-T|} v[T].
inline std::vector<Rational> subset_mobius(std::vector<Rational> v)
{
    for (std::size_t b = 1; b < v.size(); b <<= 1)
        for (std::size_t m = 0; m < v.size(); ++m)
            if (m & b) v[m] -= v[m ^ b];
    return v;
}

/// Flag h-vector from the flag f-vector: f_S = sum_{T subset S} h_T.
inline std::vector<Rational> flag_h_from_f(const std::vector<Rational>& f) { return subset_mobius(f); }
/// Flag k-vector from the flag h-vector: h_S = sum_{T subset S} k_T.
inline std::vector<Rational> flag_k_from_h(const std::vector<Rational>& h) { return subset_mobius(h); }
inline std::vector<Rational> flag_f_from_h(const std::vector<Rational>& h) { return subset_zeta(h); }
inline std::vector<Rational> flag_h_from_k(const std::vector<Rational>& k) { return subset_zeta(k); }

/// Coefficients of q in the requested basis. The degree-0 coefficient is the
/// same in every basis.
inline CoeffMap coefficients(const QSym& q, Basis basis)
{
    if (basis == Basis::M) return q.terms();
    CoeffMap out;
    for (int d : q.degrees()) {
        if (d == 0) {
            out[{0, 0}] = q.coefficient(QKey{0, 0});
            continue;
        }
        auto v = flag_h_from_f(dense_component(q, d));
        if (basis == Basis::K) v = flag_k_from_h(v);
        for (std::size_t m = 0; m < v.size(); ++m)
            if (sgn(v[m]) != 0) out[{d, m}] = v[m];
    }
    return out;
}

inline QSym from_coefficients(const CoeffMap& coeffs, Basis basis)
{
    if (basis == Basis::M) {
        QSym q;
        for (const auto& [k, c] : coeffs) q.add(k, c);
        return q;
    }
    std::map<int, std::vector<Rational>> per_degree;
    QSym q;
    for (const auto& [k, c] : coeffs) {
        if (k.degree == 0) {
            q.add(k, c);
            continue;
        }
        auto& v = per_degree[k.degree];
        if (v.empty()) v.resize(std::size_t{1} << (k.degree - 1));
        if (k.bits >= v.size()) throw validation_error("subset index exceeds ambient");
        v[k.bits] += c;
    }
    for (auto& [d, v] : per_degree) {
        if (basis == Basis::K) v = flag_h_from_k(v);
        q += from_dense(d, flag_f_from_h(v));
    }
    return q;
}

inline CoeffMap convert(const CoeffMap& coeffs, Basis from, Basis to)
{
    return coefficients(from_coefficients(coeffs, from), to);
}

inline QSym QSym::fundamental(const Subset& s)
{
    return from_coefficients({{key_of(s), Rational(1)}}, Basis::F);
}

inline QSym QSym::k_element(const Subset& s)
{
    return from_coefficients({{key_of(s), Rational(1)}}, Basis::K);
}

// ---------------------------------------------------------------------------
// Product.

namespace detail {

/// Enumerates the overlapping shuffles of a and b, recording each resulting
/// composition of `total` as its subset mask.
class QuasiShuffle {
public:
    QuasiShuffle(const Composition& a, const Composition& b, int total) : a_(a), b_(b), total_(total) {}

    std::map<std::uint64_t, long long> run()
    {
        walk(0, 0, 0, 0);
        return std::move(counts_);
    }

private:
    void push(int part, int sum, std::uint64_t mask, std::size_t i, std::size_t j)
    {
        const int s = sum + part;
        walk(i, j, s, s < total_ ? mask | (std::uint64_t{1} << (s - 1)) : mask);
    }

    void walk(std::size_t i, std::size_t j, int sum, std::uint64_t mask)
    {
        if (i == a_.size() && j == b_.size()) {
            ++counts_[mask];
            return;
        }
        if (i < a_.size()) push(a_[i], sum, mask, i + 1, j);
        if (j < b_.size()) push(b_[j], sum, mask, i, j + 1);
        if (i < a_.size() && j < b_.size()) push(a_[i] + b_[j], sum, mask, i + 1, j + 1);
    }

    const Composition& a_;
    const Composition& b_;
    int total_;
    std::map<std::uint64_t, long long> counts_;
};

} // namespace detail

/// Product in Q: M_a * M_b is the sum of M_c over the overlapping shuffles c
/// of the compositions a and b, counted with multiplicity.
inline QSym multiply(const QSym& x, const QSym& y)
{
    QSym out;
    std::map<QKey, Composition> comps;
    auto comp = [&](const QKey& k) -> const Composition& {
        auto it = comps.find(k);
        if (it == comps.end()) it = comps.emplace(k, composition_of_key(k)).first;
        return it->second;
    };
    for (const auto& [ka, ca] : x.terms()) {
        for (const auto& [kb, cb] : y.terms()) {
            const int total = ka.degree + kb.degree;
            if (total > max_ambient + 1) throw validation_error("product degree exceeds supported range");
            const Rational c = ca * cb;
            if (total == 0) {
                out.add({0, 0}, c);
                continue;
            }
            for (const auto& [mask, count] : detail::QuasiShuffle(comp(ka), comp(kb), total).run())
                out.add({total, mask}, c * static_cast<long>(count));
        }
    }
    return out;
}

inline QSym operator*(const QSym& a, const QSym& b) { return multiply(a, b); }

inline QSym power(const QSym& x, int e)
{
    QSym out = QSym::one();
    for (int i = 0; i < e; ++i) out = multiply(out, x);
    return out;
}

// ---------------------------------------------------------------------------
// Coproduct and tensors.

/// Elements of the N-fold tensor power of Q in the M (x) ... (x) M basis.
template <std::size_t N>
using Tensor = std::map<std::array<QKey, N>, Rational>;

template <std::size_t N>
void tensor_add(Tensor<N>& t, const std::array<QKey, N>& key, const Rational& c)
{
    if (sgn(c) == 0) return;
    auto [it, inserted] = t.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) t.erase(it);
    }
}

/// Deconcatenation: Delta(M_a) = sum over a = a1 . a2 of M_a1 (x) M_a2.
inline Tensor<2> coproduct(const QSym& q)
{
    Tensor<2> out;
    for (const auto& [k, c] : q.terms()) {
        const Composition beta = composition_of_key(k);
        for (std::size_t cut = 0; cut <= beta.size(); ++cut) {
            const Composition left(beta.begin(), beta.begin() + static_cast<std::ptrdiff_t>(cut));
            const Composition right(beta.begin() + static_cast<std::ptrdiff_t>(cut), beta.end());
            tensor_add(out, {key_of_composition(left), key_of_composition(right)}, c);
        }
    }
    return out;
}

/// Applies the coproduct to tensor factor `pos`, producing an (N+1)-tensor.
template <std::size_t N>
Tensor<N + 1> coproduct_at(const Tensor<N>& t, std::size_t pos)
{
    Tensor<N + 1> out;
    for (const auto& [keys, c] : t) {
        for (const auto& [pair, c2] : coproduct(QSym::monomial(composition_of_key(keys[pos])))) {
            std::array<QKey, N + 1> nk{};
            for (std::size_t i = 0, j = 0; i < N; ++i) {
                if (i == pos) {
                    nk[j++] = pair[0];
                    nk[j++] = pair[1];
                } else {
                    nk[j++] = keys[i];
                }
            }
            tensor_add(out, nk, c * c2);
        }
    }
    return out;
}

/// Product in Q (x) Q: (a (x) b)(c (x) d) = ac (x) bd.
inline Tensor<2> tensor_multiply(const Tensor<2>& x, const Tensor<2>& y)
{
    Tensor<2> out;
    for (const auto& [kx, cx] : x)
        for (const auto& [ky, cy] : y) {
            const QSym left = multiply(QSym::monomial(composition_of_key(kx[0])),
                                       QSym::monomial(composition_of_key(ky[0])));
            const QSym right = multiply(QSym::monomial(composition_of_key(kx[1])),
                                        QSym::monomial(composition_of_key(ky[1])));
            const Rational c = cx * cy;
            for (const auto& [kl, cl] : left.terms())
                for (const auto& [kr, cr] : right.terms()) tensor_add(out, {kl, kr}, c * cl * cr);
        }
    return out;
}

/// (f (x) g) applied to a 2-tensor.
inline Tensor<2> tensor_map(const Tensor<2>& t, const std::function<QSym(const QSym&)>& f,
                            const std::function<QSym(const QSym&)>& g)
{
    Tensor<2> out;
    for (const auto& [k, c] : t) {
        const QSym l = f(QSym::monomial(composition_of_key(k[0])));
        const QSym r = g(QSym::monomial(composition_of_key(k[1])));
        for (const auto& [kl, cl] : l.terms())
            for (const auto& [kr, cr] : r.terms()) tensor_add(out, {kl, kr}, c * cl * cr);
    }
    return out;
}

/// The multiplication map m: Q (x) Q -> Q.
inline QSym contract(const Tensor<2>& t)
{
    QSym out;
    for (const auto& [k, c] : t)
        out += multiply(QSym::monomial(composition_of_key(k[0])), QSym::monomial(composition_of_key(k[1]))) * c;
    return out;
}

/// The counit: the degree-0 coefficient.
inline Rational counit(const QSym& q) { return q.coefficient(QKey{0, 0}); }

// ---------------------------------------------------------------------------
// Antipode and the linear operators L, bar, D.

/// s(F_T) = (-1)^{n+1} F_{complement(T)^v} on each degree n+1; s(1) = 1.
inline QSym antipode(const QSym& q)
{
    CoeffMap out;
    for (const auto& [k, c] : coefficients(q, Basis::F)) {
        if (k.degree == 0) {
            out[k] += c;
            continue;
        }
        const Subset image = reflect_subset(k.subset().complement());
        out[key_of(image)] += k.degree % 2 == 0 ? c : Rational(-c);
    }
    return from_coefficients(out, Basis::F);
}

/// L(M_S^{(n)}) = M_S^{(n+1)}. Scalars are sent to 0.
inline QSym raise_L(const QSym& q)
{
    QSym out;
    for (const auto& [k, c] : q.terms())
        if (k.degree > 0) out.add({k.degree + 1, k.bits}, c);
    return out;
}

/// The projection M_S -> M_S for right-sparse S, M_S -> 0 otherwise.
inline QSym halve_project(const QSym& q)
{
    QSym out;
    for (const auto& [k, c] : q.terms())
        if (k.degree == 0 || is_right_sparse(k.subset())) out.add(k, c);
    return out;
}

/// D(M_S) = 2^{|S|+1} M_S. The scalar component is doubled as well (the
/// |S| = 0 case of the same rule).
inline QSym dilate_D(const QSym& q)
{
    QSym out;
    for (const auto& [k, c] : q.terms()) out.add(k, c * pow2(static_cast<unsigned>(std::popcount(k.bits) + 1)));
    return out;
}

/// F_I: the sum of M_S over the blocking family b[I], in degree n+1.
inline QSym interval_qsym(const IntervalFamily& family)
{
    const int n = family.ambient();
    QSym out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
        if (blocks_bits(family, m)) out.add({n + 1, m}, 1);
    return out;
}

} // namespace pqsym
