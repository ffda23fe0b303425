#pragma once

// The acceptance criteria AC1..AC8 as runnable checks. Every comparison is
// exact; the only tolerance is the wall-clock budget of each criterion.

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "combinat.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "oracles.hpp"
#include "peak.hpp"
#include "poset.hpp"
#include "qsym.hpp"
#include "stembridge.hpp"
#include "toricg.hpp"

namespace pqsym::acceptance {

enum class Depth { quick, full };

struct Result {
    std::string id;
    std::string name;
    bool pass = false;
    std::string detail; ///< first counterexample, or a summary on success
    double seconds = 0;
    double budget = 0;
};

/// Records the first failure; later checks are still counted.
class Checker {
public:
    bool operator()(bool ok, const std::function<std::string()>& what)
    {
        ++checks_;
        if (!ok && first_failure_.empty()) first_failure_ = what();
        return ok;
    }
    bool ok() const { return first_failure_.empty(); }
    std::string summary() const { return ok() ? std::to_string(checks_) + " checks" : first_failure_; }

private:
    long checks_ = 0;
    std::string first_failure_;
};

namespace detail {

inline std::vector<GradedPoset> eulerian_products(int max_rank)
{
    const std::vector<GradedPoset> factors{chain_poset(1), boolean_poset(2), polygon_poset(3), polygon_poset(4),
                                           polygon_poset(5), boolean_poset(3), cube_faces_poset(3)};
    std::vector<GradedPoset> out;
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i; j < factors.size(); ++j)
            if (factors[i].top_rank() + factors[j].top_rank() <= max_rank) out.push_back(product(factors[i], factors[j]));
    if (max_rank >= 6) {
        out.push_back(product(product(polygon_poset(3), chain_poset(1)), boolean_poset(2)));
        out.push_back(dual(product(polygon_poset(5), boolean_poset(3))));
    }
    return out;
}

} // namespace detail

// AC1 ----------------------------------------------------------------------

inline std::string ac1(Depth depth, Checker& check)
{
    for (int n = 0; n <= 20; ++n) {
        const auto count = cd_words(n).size();
        check(count == fibonacci(n + 1),
              [&] { return "degree " + std::to_string(n) + ": " + std::to_string(count) + " cd-words"; });
    }
    const int top = depth == Depth::full ? 10 : 6;
    for (int n = 0; n <= top; ++n) {
        std::vector<std::vector<Rational>> cols;
        for (const auto& w : cd_words(n)) cols.push_back(dense_component(theta(w), n + 1));
        const auto r = rank(Matrix::from_columns(cols));
        check(r == cols.size(), [&] { return "Theta basis of degree " + std::to_string(n + 1) + " has rank " + std::to_string(r); });
    }
    return "Theta_w independent through n = " + std::to_string(top);
}

// AC2 ----------------------------------------------------------------------

inline std::string ac2(Depth depth, Checker& check)
{
    const int top = depth == Depth::full ? 9 : 6;
    for (int n = 0; n <= top; ++n) {
        const EtaMatrix brute = eta_bruteforce(n), closed = eta_closedform(n);
        check(brute == closed, [&] { return "eta brute force and closed form differ at n = " + std::to_string(n); });
        for (std::size_t w = 0; w < closed.words.size(); ++w) {
            Rational sum = 0;
            for (std::size_t u = 0; u < closed.words.size(); ++u) sum += closed.scaled(u, w);
            check(sum == pow2(static_cast<unsigned>(n + 1)),
                  [&] { return "scaled column " + closed.words[w].str() + " sums to " + to_string(sum); });
            check(closed.at(w, 0) >= 1, [&] { return "eta(u, c^n) vanishes for u = " + closed.words[w].str(); });
        }
    }
    const EtaMatrix three = eta_closedform(3);
    const std::vector<std::vector<long long>> expected{{4, 1, 1}, {2, 2, 1}, {2, 1, 2}};
    check(three.entries == expected, [] { return "n = 3 eta matrix differs from [[4,1,1],[2,2,1],[2,1,2]]"; });
    return "eta(3) rows: 4[ccc]+[cd]+[dc], 2[ccc]+2[cd]+[dc], 2[ccc]+[cd]+2[dc]";
}

// AC3 ----------------------------------------------------------------------

inline std::string ac3(Depth depth, Checker& check)
{
    const bool full = depth == Depth::full;
    std::vector<GradedPoset> posets;
    for (int k = 1; k <= (full ? 6 : 5); ++k) posets.push_back(boolean_poset(k));
    for (int m = 3; m <= (full ? 12 : 8); ++m) posets.push_back(polygon_poset(m));
    for (int d = 1; d <= (full ? 4 : 3); ++d) {
        posets.push_back(simplex_faces_poset(d));
        posets.push_back(cube_faces_poset(d));
    }
    for (auto& p : detail::eulerian_products(full ? 6 : 5)) posets.push_back(std::move(p));

    for (const auto& p : posets) {
        const QSym f = qsym_of_poset(p);
        const CdPolynomial ksw = cd_index(f);
        const CdPolynomial ab = ab_index_oracle(f);
        check(ksw == ab, [&] { return p.name() + ": ksw " + to_string(ksw) + " vs ab-oracle " + to_string(ab); });
        check(theta_combination(c2d_index(ksw) * Rational(1, 2)) == f,
              [&] { return p.name() + ": F(P) != sum (1/2)[[w]] Theta_w"; });
        check(dual_cd_check(p), [&] { return p.name() + ": dual cd-index is not the reversal"; });
    }
    check(cd_index(boolean_poset(4)) == CdPolynomial{{"ccc", 1}, {"cd", 2}, {"dc", 2}},
          [] { return "psi(B_4) = " + to_string(cd_index(boolean_poset(4))); });
    for (int m = 3; m <= 12; ++m) {
        const CdPolynomial expected{{"cc", 1}, {"d", m - 2}};
        check(cd_index(polygon_poset(m)) == expected, [&] { return "psi of the " + std::to_string(m) + "-gon"; });
    }
    return std::to_string(posets.size()) + " Eulerian posets; psi(B_4) = ccc + 2cd + 2dc";
}

// AC4 ----------------------------------------------------------------------

inline std::string ac4(Depth depth, Checker& check)
{
    const bool full = depth == Depth::full;
    const int top = full ? 8 : 6;
    for (int n = 0; n <= top; ++n) {
        const auto words = cd_words(n);
        std::vector<Integer> eigen;
        for (const auto& w : words) {
            const QSym om = omega(w);
            const Integer lambda = omega_eigenvalue(w);
            check(vartheta(om) == om * Rational(lambda), [&] { return "vartheta(Omega_" + w.str() + ") != " + lambda.get_str() + " Omega"; });
            check(theta_combination(omega_theta(w)) == om, [&] { return "Omega_" + w.str() + " Theta-rules disagree with QSym"; });
            eigen.push_back(lambda);
            if (w != CdWord::c_power(n)) {
                Rational sum = 0;
                const CdPolynomial coords = omega_theta(w);
                for (const auto& [u, c] : coords.terms()) sum += c;
                check(sgn(sum) == 0, [&] { return "Theta-coordinates of Omega_" + w.str() + " sum to " + to_string(sum); });
            }
        }
        // Spectrum is {2^{n+1-2k}} with multiplicity #{w : |w|_d = k}.
        std::vector<Integer> expected;
        for (const auto& w : words) expected.push_back(pow2(static_cast<unsigned>(n + 1 - 2 * w.d_count())).get_num());
        check(eigen == expected, [&] { return "spectrum mismatch at n = " + std::to_string(n); });
        const auto pairs = spectrum(n); // throws if the Omega_w are dependent
        check(pairs.size() == words.size(), [&] { return "spectrum size at n = " + std::to_string(n); });
        // Exact matrix action of eta on the eigenvectors.
        const EtaMatrix eta = eta_closedform(n);
        for (const auto& pr : pairs)
            for (std::size_t u = 0; u < words.size(); ++u) {
                Rational image = 0;
                for (std::size_t w = 0; w < words.size(); ++w) image += eta.scaled(u, w) * pr.vector.coefficient(words[w]);
                check(image == Rational(pr.eigenvalue) * pr.vector.coefficient(words[u]),
                      [&] { return "eta matrix action on Omega_" + pr.word.str(); });
            }
    }
    for (int size = 1; size <= (full ? 8 : 6); ++size) {
        const PeakDistribution enumerated = peak_distribution_enumerated(size);
        check(enumerated == peak_distribution_theta(size),
              [&] { return "peak distribution routes differ for S_" + std::to_string(size); });
        Integer factorial = 1;
        for (int i = 2; i <= size; ++i) factorial *= i;
        check(enumerated.total() == factorial, [&] { return "peak distribution total for S_" + std::to_string(size); });
        const QSym p = theta_combination(enumerated.theta_coordinates());
        check(vartheta(p) == p * pow2(static_cast<unsigned>(size)), [&] { return "vartheta(p_" + std::to_string(size) + ") != 2^{n+1} p"; });
    }
    return "Omega eigenbasis through degree " + std::to_string(top);
}

// AC5 ----------------------------------------------------------------------

inline std::string ac5(Depth depth, Checker& check)
{
    const bool full = depth == Depth::full;
    const int top = full ? 5 : 4;
    std::vector<CdWord> words;
    for (int n = 0; n < top; ++n)
        for (auto& w : cd_words(n)) words.push_back(std::move(w));
    oracle::RecursiveAntipode recursive;
    for (const auto& w : words) {
        const QSym t = theta(w);
        const Tensor<2> delta = coproduct(t);
        check(coproduct_at(delta, 0) == coproduct_at(delta, 1), [&] { return "coassociativity fails on Theta_" + w.str(); });
        const QSym s = antipode(t);
        check(contract(tensor_map(delta, antipode, [](const QSym& x) { return x; })) == QSym::scalar(counit(t)),
              [&] { return "antipode axiom fails on Theta_" + w.str(); });
        const SignedWord sw = antipode_theta(w);
        check(s == theta(sw.word) * Rational(sw.sign), [&] { return "s(Theta_" + w.str() + ") is not the signed reversal"; });
        check(s == recursive(t), [&] { return "F-basis antipode differs from the recursion on Theta_" + w.str(); });
    }
    for (const auto& u : words)
        for (const auto& w : words)
            if (u.degree() + w.degree() + 2 <= top) {
                const QSym a = theta(u), b = theta(w);
                check(coproduct(a * b) == tensor_multiply(coproduct(a), coproduct(b)),
                      [&] { return "Delta is not multiplicative on Theta_" + u.str() + " Theta_" + w.str(); });
            }
    // Quasi-shuffle against the power-series oracle.
    const int prod_top = full ? 6 : 5;
    for (int da = 1; da < prod_top; ++da)
        for (int db = 1; da + db <= prod_top; ++db)
            for (std::uint64_t sa = 0; sa < (std::uint64_t{1} << (da - 1)); ++sa)
                for (std::uint64_t sb = 0; sb < (std::uint64_t{1} << (db - 1)); ++sb) {
                    const QSym a = QSym::monomial(Subset(da - 1, sa)), b = QSym::monomial(Subset(db - 1, sb));
                    check(a * b == oracle::product_via_series(a, b), [&] {
                        return "quasi-shuffle of M_{" + Subset(da - 1, sa).key() + "} (deg " + std::to_string(da) + ") and M_{" +
                               Subset(db - 1, sb).key() + "} (deg " + std::to_string(db) + ") disagrees with series";
                    });
                }
    // vartheta is an algebra map on F-basis pairs.
    for (int da = 1; da < top; ++da)
        for (int db = 1; da + db <= top; ++db)
            for (std::uint64_t sa = 0; sa < (std::uint64_t{1} << (da - 1)); ++sa)
                for (std::uint64_t sb = 0; sb < (std::uint64_t{1} << (db - 1)); ++sb) {
                    const QSym a = QSym::fundamental(Subset(da - 1, sa)), b = QSym::fundamental(Subset(db - 1, sb));
                    check(vartheta(a * b) == vartheta(a) * vartheta(b), [&] {
                        return "vartheta(F_{" + Subset(da - 1, sa).key() + "} F_{" + Subset(db - 1, sb).key() + "}) mismatch";
                    });
                }
    return "Hopf axioms on Theta_w of degree <= " + std::to_string(top);
}

// AC6 ----------------------------------------------------------------------

inline std::string ac6(Depth depth, Checker& check)
{
    for (int m = 3; m <= 12; ++m) {
        const GradedPoset p = polygon_poset(m);
        const QSym f = qsym_of_poset(p);
        const Polynomial expected{Rational(1), Rational(m - 3)};
        const Polynomial by_poset = fg_poly_poset(p).g, by_qsym = g_on_qsym(f), by_theta = g_theta(theta_expansion(f));
        check(by_poset == expected && by_qsym == expected && by_theta == expected, [&] {
            return "g of the " + std::to_string(m) + "-gon: poset " + to_string(by_poset) + ", linear " + to_string(by_qsym) +
                   ", Theta " + to_string(by_theta);
        });
    }
    const std::vector<GradedPoset> factors{chain_poset(1), polygon_poset(3), polygon_poset(4), polygon_poset(5),
                                           boolean_poset(2), boolean_poset(3)};
    const int max_rank = depth == Depth::full ? 6 : 5;
    for (const auto& a : factors)
        for (const auto& b : factors) {
            if (a.top_rank() + b.top_rank() > max_rank) continue;
            const GradedPoset ab = product(a, b);
            const Polynomial gp = fg_poly_poset(ab).g, prod = fg_poly_poset(a).g * fg_poly_poset(b).g;
            check(gp == prod, [&] { return "g(" + ab.name() + ") = " + to_string(gp) + ", product " + to_string(prod); });
            const QSym fa = qsym_of_poset(a), fb = qsym_of_poset(b);
            check(g_on_qsym(fa * fb) == g_on_qsym(fa) * g_on_qsym(fb),
                  [&] { return "g not multiplicative on F(" + a.name() + ") F(" + b.name() + ")"; });
            check(g_on_qsym(qsym_of_poset(ab)) == gp, [&] { return "linear g differs from poset g on " + ab.name(); });
            check(g_theta(theta_expansion(qsym_of_poset(ab))) == gp, [&] { return "Theta route differs on " + ab.name(); });
        }
    const Polynomial x_four = Polynomial::x_power(1, 4);
    check(g_theta(CdWord("cd")).is_zero() && g_on_qsym(theta(CdWord("cd"))).is_zero(), [] { return "g(Theta_cd) != 0"; });
    check(g_theta(CdWord("cc")) == Polynomial{Rational(2), Rational(-2)} && g_on_qsym(theta(CdWord("cc"))) == g_theta(CdWord("cc")),
          [] { return "g(Theta_cc) != 2 - 2x"; });
    for (const char* w : {"d", "dc"})
        check(g_theta(CdWord(w)) == x_four && g_on_qsym(theta(CdWord(w))) == x_four,
              [&] { return std::string("g(Theta_") + w + ") != 4x"; });
    const Polynomial g1_closed = g_theta(CdWord()), g1_linear = g_on_qsym(theta(CdWord()));
    check(g1_closed == Polynomial::constant(2) && g1_linear == Polynomial::constant(2),
          [&] { return "g(Theta_1): closed form " + to_string(g1_closed) + ", linear " + to_string(g1_linear); });
    return "g(Theta_1) = " + to_string(g1_closed) + " (closed form) = " + to_string(g1_linear) + " (linear extension)";
}

// AC7 ----------------------------------------------------------------------

inline std::string ac7(Depth depth, Checker& check)
{
    const int top = depth == Depth::full ? 4 : 3;
    for (int k = 1; k <= top; ++k) {
        check(zonotope_map_check(k), [&] { return "vartheta(F(L_0)) != 2F(Z) for the " + std::to_string(k) + "-cube"; });
        const CdPolynomial coords = theta_expansion(qsym_of_poset(cube_faces_poset(k)) * Rational(2));
        for (const auto& [w, c] : coords.terms())
            check(is_integer(c), [&] { return "2F(cube " + std::to_string(k) + ") has Theta-coordinate " + to_string(c) + " on " + w.str(); });
    }
    return "coordinate arrangements through k = " + std::to_string(top);
}

// AC8 ----------------------------------------------------------------------

inline std::string ac8(Depth depth, Checker& check)
{
    QSym witness;
    witness.add({3, 0b00}, 1);
    witness.add({3, 0b01}, 3);
    witness.add({3, 0b10}, 3);
    witness.add({3, 0b11}, 6);
    const Membership m = is_in_peak_algebra(witness);
    check(m.member, [&] { return "witness (1,3,3,6) rejected: " + describe(m); });
    const GradedPoset chain2 = chain_poset(2);
    const auto violation = eulerian_violation(chain2);
    check(violation.has_value(), [] { return "chain 2 reported Eulerian"; });

    // pi(f0 M_0 + f1 M_1 + f2 M_2 + f12 M_12) = f0 M_0 + f1 (M_1 + M_2 + 2 M_12).
    std::mt19937_64 rng(20240607);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        const Rational f0 = coeff(rng), f1 = coeff(rng), f2 = coeff(rng), f12 = coeff(rng);
        QSym q, expected;
        q.add({3, 0}, f0);
        q.add({3, 1}, f1);
        q.add({3, 2}, f2);
        q.add({3, 3}, f12);
        expected.add({3, 0}, f0);
        expected.add({3, 1}, f1);
        expected.add({3, 2}, f1);
        expected.add({3, 3}, 2 * f1);
        check(eulerian_projection(q) == expected, [&] { return "degree-3 projection of " + to_string(q); });
    }
    check(eulerian_projection(QSym::monomial(Subset(1, {1}))).is_zero(), [] { return "pi(M_1 in degree 2) != 0"; });

    const int top = depth == Depth::full ? 6 : 5;
    for (int d = 1; d <= top; ++d) {
        const int n = d - 1;
        for (int trial = 0; trial < 8; ++trial) {
            QSym q;
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) q.add({d, s}, coeff(rng));
            QSym perturbed = q;
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
                if (!is_right_sparse(Subset(n, s))) perturbed.add({d, s}, coeff(rng));
            check(cd_index(q) == cd_index(perturbed), [&] { return "cd-index moved under perturbation of " + to_string(q); });
            const QSym pq = eulerian_projection(q);
            check(pq == eulerian_projection(perturbed), [&] { return "pi moved under perturbation of " + to_string(q); });
            check(is_in_peak_algebra(pq).member && eulerian_projection(pq) == pq,
                  [&] { return "pi is not an idempotent onto Pi at " + to_string(q); });
            check(halve_project(pq) == halve_project(q), [&] { return "bar(pi(F)) != bar(F) at " + to_string(q); });
        }
    }
    return "witness in Pi; chain 2: " + describe(chain2, *violation);
}

// ---------------------------------------------------------------------------

struct Criterion {
    std::string id;
    std::string name;
    double budget;
    std::function<std::string(Depth, Checker&)> run;
};

inline const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> all{
        {"AC1", "dimension counts", 10, ac1},        {"AC2", "eta consistency", 30, ac2},
        {"AC3", "cd-index and Theta expansion", 60, ac3}, {"AC4", "Stembridge spectral suite", 120, ac4},
        {"AC5", "Hopf suite", 60, ac5},              {"AC6", "toric g suite", 60, ac6},
        {"AC7", "zonotope identity", 30, ac7},       {"AC8", "membership and projection", 10, ac8},
    };
    return all;
}

inline Result run(const Criterion& c, Depth depth)
{
    Result r{c.id, c.name, false, {}, 0, c.budget};
    Checker check;
    const auto start = std::chrono::steady_clock::now();
    std::string note;
    try {
        note = c.run(depth, check);
    } catch (const std::exception& e) {
        check(false, [&] { return std::string("exception: ") + e.what(); });
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.pass = check.ok() && r.seconds <= r.budget;
    if (!check.ok()) r.detail = check.summary();
    else if (r.seconds > r.budget) r.detail = "over budget: " + std::to_string(r.seconds) + " s";
    else r.detail = note + "; " + check.summary();
    return r;
}

inline std::vector<Result> run_all(Depth depth)
{
    std::vector<Result> out;
    for (const auto& c : criteria()) out.push_back(run(c, depth));
    return out;
}

inline std::string format_line(const Result& r)
{
    std::ostringstream os;
    os << r.id << ' ' << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  [" << std::fixed;
    os.precision(2);
    os << r.seconds << " s / " << r.budget << " s]  " << r.detail;
    return os.str();
}

} // namespace pqsym::acceptance
