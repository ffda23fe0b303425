#include "catch_amalgamated.hpp"

#include <random>

#include "pqsym/oracles.hpp"
#include "pqsym/peak.hpp"
#include "pqsym/qsym.hpp"
#include "pqsym/stembridge.hpp"

using namespace pqsym;

namespace {

QSym M(const Composition& c, long coeff = 1) { return QSym::monomial(c, Rational(coeff)); }
QSym Mset(int n, std::initializer_list<int> s, long coeff = 1) { return QSym::monomial(Subset(n, s), Rational(coeff)); }
QSym Fset(int n, std::initializer_list<int> s) { return QSym::fundamental(Subset(n, s)); }

QSym random_element(std::mt19937_64& rng, int max_degree)
{
    std::uniform_int_distribution<int> coeff(-5, 5), deg(0, max_degree);
    QSym q;
    const int d = deg(rng);
    if (d == 0) return QSym::scalar(coeff(rng));
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << (d - 1)); ++s) q.add({d, s}, Rational(coeff(rng)));
    return q;
}

} // namespace

TEST_CASE("basis conversions")
{
    CHECK(coefficients(Mset(0, {}), Basis::F) == CoeffMap{{QKey{1, 0}, Rational(1)}});
    const QSym k = QSym::k_element(Subset(1, {}));
    CHECK(k == Mset(1, {}) + Mset(1, {1}, 2));
    CHECK(Fset(1, {1}) == Mset(1, {1}));

    for (int d = 1; d <= 10; ++d)
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << (d - 1)); ++s)
            for (Basis from : {Basis::M, Basis::F, Basis::K}) {
                const CoeffMap unit{{QKey{d, s}, Rational(1)}};
                const QSym q = from_coefficients(unit, from);
                REQUIRE(coefficients(q, from) == unit);
                REQUIRE(convert(convert(convert(unit, from, Basis::M), Basis::M, Basis::F), Basis::F, from) == unit);
                REQUIRE(convert(convert(unit, from, Basis::K), Basis::K, from) == unit);
            }
}

TEST_CASE("flag vector conversions")
{
    const std::vector<Rational> f{1, 3, 3, 6};
    const auto h = flag_h_from_f(f);
    CHECK(h == std::vector<Rational>{1, 2, 2, 1});
    const auto k = flag_k_from_h(h);
    CHECK(k[0] == 1);
    CHECK(k[1] == 1);
    CHECK(flag_h_from_k(k) == h);
    CHECK(flag_f_from_h(h) == f);

    const std::vector<Rational> chain(8, Rational(1));
    const auto hc = flag_h_from_f(chain);
    CHECK(hc[0] == 1);
    for (std::size_t i = 1; i < hc.size(); ++i) CHECK(hc[i] == 0);
}

TEST_CASE("quasi-shuffle product")
{
    CHECK(M({1}) * M({1}) == M({1, 1}, 2) + M({2}));
    CHECK(M({1}) * M({2}) == M({2, 1}) + M({1, 2}) + M({3}));
    CHECK(theta(CdWord()) * theta(CdWord("cd")) ==
          theta(CdWord("ccd")) * Rational(2) + theta(CdWord("cdc")) * Rational(2) + theta(CdWord("dd")));
    CHECK(QSym::scalar(3) * M({2, 1}) == M({2, 1}, 3));

    // M_(1) M_beta = M_{beta,1} + sum_i (M_{..,1,beta_i,..} + M_{..,beta_i + 1,..}).
    for (int d = 1; d <= 6; ++d)
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << (d - 1)); ++s) {
            const Composition beta = composition_of_subset(Subset(d - 1, s));
            Composition tail = beta;
            tail.push_back(1);
            QSym expected = M(tail);
            for (std::size_t i = 0; i < beta.size(); ++i) {
                Composition ins = beta, bump = beta;
                ins.insert(ins.begin() + static_cast<std::ptrdiff_t>(i), 1);
                bump[i] += 1;
                expected += M(ins) + M(bump);
            }
            REQUIRE(M({1}) * M(beta) == expected);
        }
}

TEST_CASE("product matches the power-series oracle through total degree 6")
{
    for (int da = 0; da <= 6; ++da)
        for (int db = 0; da + db <= 6; ++db) {
            const std::uint64_t na = da == 0 ? 1 : std::uint64_t{1} << (da - 1);
            const std::uint64_t nb = db == 0 ? 1 : std::uint64_t{1} << (db - 1);
            for (std::uint64_t sa = 0; sa < na; ++sa)
                for (std::uint64_t sb = 0; sb < nb; ++sb) {
                    const QSym a = da == 0 ? QSym::one() : QSym::monomial(Subset(da - 1, sa));
                    const QSym b = db == 0 ? QSym::one() : QSym::monomial(Subset(db - 1, sb));
                    if (da == 0 || db == 0) REQUIRE(a * b == (da == 0 ? b : a));
                    else REQUIRE(a * b == oracle::product_via_series(a, b));
                }
        }
}

TEST_CASE("product is associative and commutative")
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) {
        const QSym a = random_element(rng, 4), b = random_element(rng, 4), c = random_element(rng, 4);
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
    }
}

TEST_CASE("coproduct")
{
    const Tensor<2> d0 = coproduct(QSym::one());
    CHECK(d0 == Tensor<2>{{{QKey{0, 0}, QKey{0, 0}}, Rational(1)}});
    const Tensor<2> d21 = coproduct(M({2, 1}));
    const Tensor<2> expected{{{key_of_composition({2, 1}), QKey{0, 0}}, Rational(1)},
                             {{key_of_composition({2}), key_of_composition({1})}, Rational(1)},
                             {{QKey{0, 0}, key_of_composition({2, 1})}, Rational(1)}};
    CHECK(d21 == expected);
    const Tensor<2> d111 = coproduct(M({1, 1, 1}));
    CHECK(coproduct_at(d111, 0) == coproduct_at(d111, 1));

    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        const QSym a = random_element(rng, 5);
        const Tensor<2> da = coproduct(a);
        REQUIRE(coproduct_at(da, 0) == coproduct_at(da, 1));
        // Counit on either side recovers a.
        QSym left, right;
        for (const auto& [keys, c] : da) {
            if (keys[0].degree == 0) left.add(keys[1], c);
            if (keys[1].degree == 0) right.add(keys[0], c);
        }
        REQUIRE(left == a);
        REQUIRE(right == a);
    }
    for (int t = 0; t < 30; ++t) {
        const QSym a = random_element(rng, 3), b = random_element(rng, 2);
        REQUIRE(coproduct(a * b) == tensor_multiply(coproduct(a), coproduct(b)));
    }
}

TEST_CASE("antipode")
{
    CHECK(antipode(Fset(0, {})) == Fset(0, {}) * Rational(-1));
    // Degree 2 carries sign +1: s(F_{1}) = F_{} (complement of {1} in [1] is empty).
    CHECK(antipode(Fset(1, {1})) == Fset(1, {}));
    CHECK(antipode(QSym::one()) == QSym::one());

    oracle::RecursiveAntipode recursive;
    const auto identity = [](const QSym& x) { return x; };
    for (int d = 0; d <= 5; ++d) {
        const std::uint64_t count = d == 0 ? 1 : std::uint64_t{1} << (d - 1);
        for (std::uint64_t s = 0; s < count; ++s) {
            const QSym b = d == 0 ? QSym::one() : QSym::monomial(Subset(d - 1, s));
            REQUIRE(antipode(b) == recursive(b));
            REQUIRE(contract(tensor_map(coproduct(b), antipode, identity)) == QSym::scalar(counit(b)));
            REQUIRE(contract(tensor_map(coproduct(b), identity, antipode)) == QSym::scalar(counit(b)));
        }
    }
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        const QSym a = random_element(rng, 5);
        REQUIRE(antipode(antipode(a)) == a);
    }
}

TEST_CASE("operators L, bar and D")
{
    CHECK(raise_L(Mset(0, {})) == Mset(1, {}));
    CHECK(raise_L(Fset(0, {})) == Fset(1, {}) - Fset(1, {1}));
    CHECK(raise_L(raise_L(Fset(0, {}))) == Fset(2, {}) - Fset(2, {1}) - Fset(2, {2}) + Fset(2, {1, 2}));
    CHECK(raise_L(QSym::one()).is_zero());
    // L(F_S^{(n)}) = F_S^{(n+1)} - F_{S u {n}}^{(n+1)}.
    for (int n = 1; n <= 7; ++n)
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << (n - 1)); ++s) {
            const Subset small(n - 1, s), big(n, s);
            REQUIRE(raise_L(QSym::fundamental(small)) == QSym::fundamental(big) - QSym::fundamental(big.with(n)));
        }

    CHECK(halve_project(Mset(2, {1, 2})).is_zero());
    CHECK(halve_project(Mset(2, {1})) == Mset(2, {1}));
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        const QSym a = random_element(rng, 6);
        REQUIRE(halve_project(halve_project(a)) == halve_project(a));
    }
    // bar kills K_S and F_S for S not right sparse.
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
            if (!is_right_sparse(Subset(n, s))) {
                REQUIRE(halve_project(QSym::k_element(Subset(n, s))).is_zero());
                REQUIRE(halve_project(QSym::fundamental(Subset(n, s))).is_zero());
            }

    CHECK(dilate_D(Mset(0, {})) == Mset(0, {}, 2));
    CHECK(dilate_D(Mset(3, {1, 3})) == Mset(3, {1, 3}, 8));
    for (int n = 0; n <= 8; ++n)
        for (const auto& w : cd_words(n)) REQUIRE(dilate_D(interval_qsym(interval_family_of_word(w))) == theta(w));
}

TEST_CASE("interval quasisymmetric functions")
{
    CHECK(interval_qsym(IntervalFamily(2, {})) == Mset(2, {}) + Mset(2, {1}) + Mset(2, {2}) + Mset(2, {1, 2}));
    CHECK(interval_qsym(IntervalFamily(1, {{1, 1}})) == Fset(1, {1}));
    CHECK(interval_qsym(IntervalFamily(3, {{2, 3}})).terms().size() == 6);
    // F_{I(S)} = F_S where I(S) = {{i} : i in S} together with the gaps.
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
            std::vector<Interval> ivs;
            for (int i = 1; i <= n; ++i)
                if (s >> (i - 1) & 1u) ivs.push_back({i, i});
            REQUIRE(interval_qsym(IntervalFamily(n, ivs)) == QSym::fundamental(Subset(n, s)));
        }
}

TEST_CASE("vartheta commutes with L^2 but not with L")
{
    for (int n = 1; n <= 8; ++n)
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << (n - 1)); ++s) {
            const QSym f = QSym::fundamental(Subset(n - 1, s));
            REQUIRE(vartheta(raise_L(raise_L(f))) == raise_L(raise_L(vartheta(f))));
        }
    const QSym m1 = Mset(0, {});
    CHECK(raise_L(vartheta(m1)) == Mset(1, {}, 2));
    CHECK(vartheta(raise_L(m1)).is_zero());
}

TEST_CASE("Q_{n+1} splits as L(Q_n) plus Theta_1 Q_n")
{
    const QSym t1 = theta(CdWord());
    for (int n = 1; n <= 8; ++n) {
        std::vector<std::vector<Rational>> cols;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << (n - 1)); ++s) {
            const QSym b = QSym::monomial(Subset(n - 1, s));
            cols.push_back(dense_component(raise_L(b), n + 1));
            cols.push_back(dense_component(t1 * b, n + 1));
        }
        REQUIRE(cols.size() == (std::size_t{1} << n));
        REQUIRE(rank(Matrix::from_columns(cols)) == cols.size());
    }
}

TEST_CASE("QSym rejects malformed keys")
{
    QSym q;
    CHECK_THROWS_AS(q.add(QKey{2, 0b10}, 1), validation_error);
    CHECK_THROWS_AS(q.add(QKey{0, 1}, 1), validation_error);
    CHECK_THROWS_AS(dense_component(Mset(2, {1}), 0), validation_error);
}
