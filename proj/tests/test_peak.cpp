#include "catch_amalgamated.hpp"

#include <random>

#include "pqsym/peak.hpp"

using namespace pqsym;

namespace {

QSym Mset(int n, std::initializer_list<int> s, long c = 1) { return QSym::monomial(Subset(n, s), Rational(c)); }
QSym Fset(int n, std::initializer_list<int> s) { return QSym::fundamental(Subset(n, s)); }
QSym Kset(int n, std::initializer_list<int> s) { return QSym::k_element(Subset(n, s)); }

std::vector<Rational> kvec(const QSym& q, int d) { return flag_k_from_h(flag_h_from_f(dense_component(q, d))); }

QSym random_homogeneous(std::mt19937_64& rng, int d)
{
    std::uniform_int_distribution<int> coeff(-7, 7);
    QSym q;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << (d - 1)); ++s) q.add({d, s}, Rational(coeff(rng)));
    return q;
}

} // namespace

TEST_CASE("Theta basis")
{
    CHECK(theta(CdWord()) == Mset(0, {}, 2));
    CHECK(theta(CdWord("c")) == Mset(1, {}, 2) + Mset(1, {1}, 4));
    CHECK(theta(CdWord("c")) == (Fset(1, {}) + Fset(1, {1})) * Rational(2));
    CHECK(theta(CdWord("d")) == Mset(2, {1}, 4) + Mset(2, {2}, 4) + Mset(2, {1, 2}, 8));
    CHECK(theta(Subset(3, {2})) == theta(CdWord("dc")));
    CHECK_THROWS_AS(theta(Subset(3, {1})), validation_error);
}

TEST_CASE("Theta through the F basis")
{
    CHECK(from_coefficients(theta_f_basis(CdWord("c")), Basis::F) == (Fset(1, {}) + Fset(1, {1})) * Rational(2));
    CHECK(from_coefficients(theta_f_basis(CdWord("d")), Basis::F) == (Fset(2, {1}) + Fset(2, {2})) * Rational(4));
    for (int n = 0; n <= 10; ++n)
        for (const auto& w : cd_words(n)) {
            const CoeffMap fb = theta_f_basis(w);
            REQUIRE(from_coefficients(fb, Basis::F) == theta(w));
            // The support has 2^{n - |S_w|} elements.
            REQUIRE(fb.size() == (std::size_t{1} << (n - w.d_count())));
        }
}

TEST_CASE("Psi basis")
{
    CHECK(psi(CdWord("ccc")) == Kset(3, {}));
    CHECK(psi(CdWord("d")) == Kset(2, {1}));
    for (int n = 0; n <= 8; ++n)
        for (const auto& w : cd_words(n))
            REQUIRE(halve_project(psi(w)) * pow2(static_cast<unsigned>(w.d_count() + 1)) == halve_project(theta(w)));
}

TEST_CASE("bar(F) is determined by the cd-index")
{
    std::mt19937_64 rng(99);
    for (int d = 1; d <= 9; ++d) {
        const QSym q = random_homogeneous(rng, d);
        QSym rebuilt;
        const CdPolynomial cd = cd_index(q);
        for (const auto& [w, c] : cd.terms()) rebuilt += psi(w) * c;
        REQUIRE(halve_project(rebuilt) == halve_project(q));
    }
}

TEST_CASE("Dehn-Sommerville relations")
{
    const auto r2 = ds_relations(2);
    // 2 f_0 - f_1 = 0 is among them (up to scale).
    bool found = false;
    for (const auto& rel : r2) {
        const auto& c = rel.coeffs;
        if (c.size() == 2 && c.count(0) && c.count(1) && c.at(0) == -2 * c.at(1)) found = true;
    }
    CHECK(found);

    // In degree 3 the relations force f_2 = f_1 and f_12 = 2 f_1.
    QSym good;
    good.add({3, 0}, 5);
    good.add({3, 1}, 7);
    good.add({3, 2}, 7);
    good.add({3, 3}, 14);
    CHECK(is_in_peak_algebra(good).member);
    QSym bad = good;
    bad.add({3, 2}, 1);
    CHECK_FALSE(is_in_peak_algebra(bad).member);

    for (int d = 1; d <= 9; ++d) {
        const int n = d - 1;
        const auto rels = ds_relations(d);
        Matrix a(rels.size(), std::size_t{1} << n);
        for (std::size_t r = 0; r < rels.size(); ++r)
            for (const auto& [s, c] : rels[r].coeffs) a(r, s) = c;
        INFO("degree " << d);
        REQUIRE(rank(a) == (std::size_t{1} << n) - fibonacci(n + 1));
        for (const auto& w : cd_words(n))
            for (const auto& rel : rels) REQUIRE(sgn(rel.evaluate(theta(w))) == 0);
    }
}

TEST_CASE("membership reports a violated relation")
{
    const QSym m1 = Mset(1, {1});
    const Membership m = is_in_peak_algebra(m1);
    REQUIRE_FALSE(m.member);
    REQUIRE(m.violated.has_value());
    CHECK(sgn(m.value) != 0);
    CHECK_FALSE(describe(m).empty());
    CHECK_THROWS_AS(theta_expansion(m1), precondition_error);
    CHECK_THROWS_AS(ab_index_oracle(m1), precondition_error);
}

TEST_CASE("cd-index small degrees")
{
    std::mt19937_64 rng(1);
    for (int t = 0; t < 10; ++t) {
        const QSym q3 = random_homogeneous(rng, 3);
        const auto k3 = kvec(q3, 3);
        CdPolynomial e3;
        e3.add(CdWord("cc"), k3[0]);
        e3.add(CdWord("d"), k3[1]);
        REQUIRE(cd_index(q3) == e3);
        const QSym q4 = random_homogeneous(rng, 4);
        const auto k4 = kvec(q4, 4);
        CdPolynomial expected;
        expected.add(CdWord("ccc"), k4[0]);
        expected.add(CdWord("cd"), k4[2] - k4[1]);
        expected.add(CdWord("dc"), k4[1]);
        REQUIRE(cd_index(q4) == expected);
    }
    CHECK(cd_index(boolean_poset(4)) == CdPolynomial{{"ccc", 1}, {"cd", 2}, {"dc", 2}});
    CHECK(cd_index(boolean_poset(3)) == CdPolynomial{{"cc", 1}, {"d", 1}});
    CHECK(ab_index_oracle(qsym_of_poset(boolean_poset(3))) == CdPolynomial{{"cc", 1}, {"d", 1}});
}

TEST_CASE("c-2d-index")
{
    CHECK(c2d_index(CdPolynomial{{"cc", 1}, {"d", 2}}) == CdPolynomial{{"cc", 1}, {"d", 1}});
    CHECK(c2d_index(cd_index(boolean_poset(4))) == CdPolynomial{{"ccc", 1}, {"cd", 1}, {"dc", 1}});
    CHECK(c2d_index(CdPolynomial{{"cccc", 5}}) == CdPolynomial{{"cccc", 5}});
}

TEST_CASE("Theta expansion")
{
    for (int m = 3; m <= 12; ++m) {
        CdPolynomial expected;
        expected.add(CdWord("cc"), Rational(1, 2));
        expected.add(CdWord("d"), make_rational(m - 2, 4));
        REQUIRE(theta_expansion(qsym_of_poset(polygon_poset(m))) == expected);
    }
    CHECK(theta_expansion(qsym_of_poset(polygon_poset(4)) * Rational(2)) == CdPolynomial{{"cc", 1}, {"d", 1}});
    CHECK_THROWS_AS(theta_expansion(QSym::one()), precondition_error);
    // Reconstruction on every Theta_w.
    for (int n = 0; n <= 7; ++n)
        for (const auto& w : cd_words(n)) {
            CdPolynomial unit;
            unit.add(w, 1);
            REQUIRE(theta_expansion(theta(w)) == unit);
        }
}

TEST_CASE("Eulerian projection")
{
    std::mt19937_64 rng(17);
    for (int t = 0; t < 10; ++t) {
        const QSym q = random_homogeneous(rng, 3);
        const Rational f0 = q.coefficient(QKey{3, 0}), f1 = q.coefficient(QKey{3, 1});
        QSym expected;
        expected.add({3, 0}, f0);
        expected.add({3, 1}, f1);
        expected.add({3, 2}, f1);
        expected.add({3, 3}, 2 * f1);
        REQUIRE(eulerian_projection(q) == expected);
    }
    const QSym m1 = Mset(0, {});
    CHECK(eulerian_projection(Mset(1, {1})).is_zero());
    CHECK_FALSE(eulerian_projection(m1 * m1).is_zero());
    for (int d = 1; d <= 6; ++d) {
        const QSym q = random_homogeneous(rng, d);
        const QSym p = eulerian_projection(q);
        REQUIRE(eulerian_projection(p) == p);
        REQUIRE(is_in_peak_algebra(p).member);
        REQUIRE(halve_project(p) == halve_project(q));
    }
    const QSym b4 = qsym_of_poset(boolean_poset(4));
    CHECK(eulerian_projection(b4) == b4);
}

TEST_CASE("antipode on Theta")
{
    CHECK(antipode_theta(CdWord()) == SignedWord{-1, CdWord()});
    CHECK(antipode_theta(CdWord("ccd")) == SignedWord{-1, CdWord("dcc")});
    CHECK(antipode_theta(CdWord("d")) == SignedWord{-1, CdWord("d")});
    CHECK(antipode_theta(CdWord("c")) == SignedWord{1, CdWord("c")});
    for (int n = 0; n <= 7; ++n)
        for (const auto& w : cd_words(n)) {
            const SignedWord s = antipode_theta(w);
            REQUIRE(antipode(theta(w)) == theta(s.word) * Rational(s.sign));
        }
}

TEST_CASE("dual posets reverse the cd-index")
{
    for (int k = 1; k <= 5; ++k) {
        const CdPolynomial cd = cd_index(boolean_poset(k));
        CHECK(reverse_words(cd) == cd);
        CHECK(dual_cd_check(boolean_poset(k)));
    }
    for (int d = 1; d <= 4; ++d) {
        CHECK(dual_cd_check(simplex_faces_poset(d)));
        CHECK(dual_cd_check(cube_faces_poset(d)));
    }
    CHECK(dual_cd_check(polygon_poset(7)));
    CHECK(dual_cd_check(product(polygon_poset(5), chain_poset(1))));
    CHECK_THROWS_AS(dual_cd_check(chain_poset(2)), precondition_error);
}

TEST_CASE("ksw and ab routes agree")
{
    std::vector<GradedPoset> ps;
    for (int k = 1; k <= 6; ++k) ps.push_back(boolean_poset(k));
    for (int d = 1; d <= 4; ++d) ps.push_back(cube_faces_poset(d));
    ps.push_back(product(polygon_poset(4), polygon_poset(6)));
    ps.push_back(product(cube_faces_poset(2), boolean_poset(3)));
    for (const auto& p : ps) {
        const QSym f = qsym_of_poset(p);
        INFO(p.name());
        REQUIRE(cd_index(f) == ab_index_oracle(f));
        REQUIRE(theta_combination(theta_expansion(f)) == f);
    }
}
