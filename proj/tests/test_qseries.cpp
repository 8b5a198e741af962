#include <catch2/catch_amalgamated.hpp>

#include "vc1/qseries.hpp"
#include "vc1/verma.hpp"

using namespace vc1;
using namespace vc1::qseries;

TEST_CASE("verma characters") {
    QSeries v = verma_character(1, 0, 3);
    CHECK(v.offset == Rational(-1, 24));
    CHECK(v.coeffs == std::vector<Rational>{1, 1, 2, 3});

    QSeries w = verma_character(1, Rational(1, 4), 5);
    CHECK(w.offset == Rational(1, 4) - Rational(1, 24));
    CHECK(w.coeff(5) == 7);
    CHECK_THROWS_AS(verma_character(1, 0, -1), std::invalid_argument);
}

TEST_CASE("irreducible characters at central charge 1") {
    QSeries n1 = irr_character_c1(1, 4);
    CHECK(n1.offset == Rational(1) - Rational(1, 24));
    CHECK(n1.coeffs == std::vector<Rational>{1, 1, 2, 2, 4});
    QSeries n4 = irr_character_c1(4, 6);
    CHECK(n4.offset == Rational(4) - Rational(1, 24));
    // the submodule starts subtracting at level 5: p(5)-p(0), p(6)-p(1)
    CHECK(n4.coeffs == std::vector<Rational>{1, 1, 2, 3, 5, 6, 10});

    CHECK(irr_character_c1(0, 2).coeffs == std::vector<Rational>{1, 0, 1});
    CHECK(irr_character_c1(2, 3).coeffs == std::vector<Rational>{1, 1, 2, 3});
    // weights (odd)^2 / 4 fall outside the supported families
    CHECK_THROWS_AS(irr_character_c1(Rational(1, 4), 3), std::invalid_argument);
    CHECK_THROWS_AS(irr_character_c1(Rational(9, 4), 3), std::invalid_argument);
    // generic weights give back the full Verma character
    QSeries g = irr_character_c1(Rational(1, 3), 4);
    CHECK(g.coeffs == verma_character(1, Rational(1, 3), 4).coeffs);
}

TEST_CASE("eta collapses the Verma character to a single term") {
    for (const Rational& h : {Rational(0), Rational(1), Rational(5, 7)}) {
        QSeries prod = eta_series(12) * verma_character(1, h, 12);
        CHECK(prod.offset == h);
        CHECK(prod.coeff(0) == 1);
        for (int n = 1; n <= 12; ++n)
            CHECK(prod.coeff(n) == 0);
    }
}

TEST_CASE("theta series coefficients") {
    QSeries t = theta_series(10);
    CHECK(t.coeff(0) == 1);
    CHECK(t.coeff(1) == 2);
    CHECK(t.coeff(4) == 2);
    CHECK(t.coeff(9) == 2);
    CHECK(t.coeff(2) == 0);
    CHECK(t.coeff(3) == 0);
}

TEST_CASE("lattice decomposition identity") {
    for (int order : {0, 10, 50}) {
        auto check = lattice_decomposition_check(order);
        CHECK(check.holds);
        CHECK(check.residual.is_zero());
    }
}

TEST_CASE("sl2 tensor product multiplicities") {
    CHECK(sl2_tensor_multiplicities(2, 2) == std::vector<long>{0, 2, 4});
    CHECK(sl2_tensor_multiplicities(4, 2) == std::vector<long>{2, 4, 6});
    CHECK(sl2_tensor_multiplicities(0, 6) == std::vector<long>{6});
    CHECK_THROWS_AS(sl2_tensor_multiplicities(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(sl2_tensor_multiplicities(2, -2), std::invalid_argument);
    // dimension count: sum of (w+1) over the summands equals (d1+1)(d2+1)
    for (long d1 = 0; d1 <= 8; d1 += 2)
        for (long d2 = 0; d2 <= 8; d2 += 2) {
            long total = 0;
            for (long w : sl2_tensor_multiplicities(d1, d2))
                total += w + 1;
            CHECK(total == (d1 + 1) * (d2 + 1));
        }
}

TEST_CASE("growth diagnostics") {
    SECTION("theta coefficients are polynomially bounded") {
        auto rep = growth_report(theta_series(200), 50, 200, {1, 2});
        CHECK(rep.verdict == "polynomially-bounded");
    }
    SECTION("tail character outgrows every tested power") {
        auto rep = growth_report(eta_scaled_tail_character(200), 50, 200, {1, 2, 3});
        CHECK(rep.verdict == "superpolynomial-evidence");
        for (const auto& w : rep.witnesses) {
            CHECK(w.found);
            CHECK(w.n >= 50);
        }
    }
    SECTION("zero series is polynomially bounded") {
        auto rep = growth_report(zero_series(100), 10, 100, {0, 1});
        CHECK(rep.verdict == "polynomially-bounded");
    }
    CHECK_THROWS_AS(growth_report(theta_series(10), 5, 20, {1}), std::invalid_argument);
}

TEST_CASE("graded dimensions match irreducible character coefficients") {
    for (long m : {0L, 1L, 2L}) {
        Rational h = Rational(m) * m;
        auto dims = virasoro::graded_dims_irreducible({1, h}, 8);
        QSeries ch = irr_character_c1(h, 8);
        for (int n = 0; n <= 8; ++n)
            CHECK(Rational(dims[n]) == ch.coeff(n));
    }
}

TEST_CASE("series inverse") {
    QSeries eta = eta_series(30);
    QSeries prod = eta * inverse(eta);
    CHECK(prod.offset == 0);
    CHECK(prod.coeff(0) == 1);
    for (int n = 1; n <= 30; ++n)
        CHECK(prod.coeff(n) == 0);
    CHECK_THROWS_AS(inverse(zero_series(5)), std::invalid_argument);
}

TEST_CASE("offset mismatch is rejected") {
    QSeries a = verma_character(1, 0, 5);        // offset -1/24
    QSeries b = verma_character(1, Rational(1, 4), 5); // offset differs by 1/4
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    QSeries c = verma_character(1, 2, 5); // integer offset gap: fine
    CHECK((a + c).coeff(2) == Rational(2) + Rational(1));
}
