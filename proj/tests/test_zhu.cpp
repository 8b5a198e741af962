#include <catch2/catch_amalgamated.hpp>

#include "vc1/zhu.hpp"

#include <random>

using namespace vc1;
using namespace vc1::zhu;

namespace {

const virasoro::VermaParams P{1, Rational(2, 5)};

BiPolynomial X() { return BiPolynomial::var_x(); }
BiPolynomial Y() { return BiPolynomial::var_y(); }

Word random_word(std::mt19937& rng, int max_level)
{
    std::uniform_int_distribution<int> part(1, 4);
    Word w;
    int level = 0;
    while (true) {
        int n = part(rng);
        if (level + n > max_level)
            break;
        w.push_back(n);
        level += n;
        if (w.size() >= 4)
            break;
    }
    return w; // arbitrary order, not necessarily PBW
}

} // namespace

TEST_CASE("basic reductions to the bimodule polynomial ring") {
    ZhuReducer red(P);
    CHECK(red.reduce_word({}) == BiPolynomial(Rational(1)));
    CHECK(red.reduce_word({2}) + red.reduce_word({1}) == Y());
    CHECK(red.reduce_word({1}) == X() - Y() - BiPolynomial(P.h));
    CHECK(red.reduce_word({3}) == X() - Rational(3) * Y() - BiPolynomial(P.h));
}

TEST_CASE("reducer rejects foreign elements") {
    ZhuReducer red(P);
    virasoro::VermaParams other{1, 0};
    CHECK_THROWS_AS(red.reduce(virasoro::basis_vector(other, {1})),
                    std::invalid_argument);
}

TEST_CASE("reduction is linear and satisfies the two action identities") {
    std::mt19937 rng(424242);
    ZhuReducer red(P);
    for (int trial = 0; trial < 100; ++trial) {
        Word w = random_word(rng, 4);
        Rational lh = P.h + word_level(w);
        BiPolynomial base = red.reduce_word(w);

        Word w2 = w, w1 = w;
        w2.insert(w2.begin(), 2);
        w1.insert(w1.begin(), 1);
        BiPolynomial left = red.reduce_word(w2) + Rational(2) * red.reduce_word(w1)
            + lh * base;
        CHECK(left == X() * base);
        BiPolynomial right = red.reduce_word(w2) + red.reduce_word(w1);
        CHECK(right == base * Y());

    }
}

TEST_CASE("reduce is linear over module elements") {
    std::mt19937 rng(31337);
    ZhuReducer red(P);
    std::uniform_int_distribution<int> cd(-5, 5);
    for (int level = 2; level <= 5; ++level) {
        auto parts = partitions(level);
        virasoro::ModuleElement e{P, level, {}};
        BiPolynomial expect;
        for (const auto& part : parts) {
            Rational c = cd(rng);
            e.add_term(part, c);
            expect += red.reduce_word(Word(part.begin(), part.end())) * c;
        }
        CHECK(red.reduce(e) == expect);
    }
}

TEST_CASE("reduction traces replay to the same polynomial") {
    ZhuReducer red(P);
    for (const Partition& p : {Partition{3, 2, 1}, Partition{4, 4}, Partition{2, 1, 1}}) {
        auto trace = red.reduce_with_trace(virasoro::basis_vector(P, p));
        CHECK(trace.replay() == trace.output);
        CHECK_FALSE(trace.steps.empty());
    }
}

TEST_CASE("closed-form generator values") {
    BiPolynomial f1 = closed_form_generator(1);
    CHECK(f1.coeff(3, 0) == 1);
    CHECK(f1.degree() == 3);
    CHECK(f1.eval(1, 4) == 0);
    CHECK(f1.eval(9, 1) == 360);
    CHECK(closed_form_generator(2).degree() == 5);
    CHECK(closed_form_generator(3).degree() == 7);
    CHECK_THROWS_AS(closed_form_generator(0), std::invalid_argument);
}

TEST_CASE("generator antisymmetry under swapping the two variables") {
    for (int r = 1; r <= 3; ++r) {
        BiPolynomial f = closed_form_generator(r);
        BiPolynomial swapped;
        for (const auto& [k, c] : f.terms())
            swapped.add_term(k.second, k.first, c);
        CHECK(swapped + f == BiPolynomial());
    }
}

TEST_CASE("three construction routes agree") {
    for (int r : {1, 2}) {
        BiPolynomial c = closed_form_generator(r);
        CHECK(generator_from_singular_vector(r) == c);
        CHECK(generator_by_vandermonde(r) == c);
    }
    CHECK(generator_by_vandermonde(3) == closed_form_generator(3));
}

TEST_CASE("zero locus of the generator matches the admissible band") {
    for (int r = 1; r <= 3; ++r) {
        BiPolynomial f = closed_form_generator(r);
        for (long n = r; n <= r + 4; ++n)
            for (long k = 0; k <= n + r + 3; ++k) {
                bool inside = (n - r <= k) && (k <= n + r);
                bool vanishes = f.eval(Rational(k) * k, Rational(n) * n) == 0;
                INFO("r=" << r << " n=" << n << " k=" << k);
                CHECK(vanishes == inside);
            }
    }
}

TEST_CASE("fusion dimensions for square lowest weights") {
    CHECK(fusion_dim_squares(1, 1, 1) == 1);
    CHECK(fusion_dim_squares(1, 1, 3) == 0);
    CHECK(fusion_dim_squares(0, 5, 5) == 1);
    for (long m = 0; m <= 3; ++m)
        for (long n = 0; n <= 3; ++n)
            for (long k = 0; k <= 8; ++k) {
                long lo = m > n ? m - n : n - m;
                int expected = (lo <= k && k <= m + n) ? 1 : 0;
                INFO("m=" << m << " n=" << n << " k=" << k);
                CHECK(fusion_dim_squares(m, n, k) == expected);
                CHECK(fusion_dim_squares(m, n, k) == fusion_dim_squares(n, m, k));
            }
}

TEST_CASE("fusion dimensions with a non-square middle weight") {
    CHECK(fusion_dim_generic(2, 2, 2) == 1);
    CHECK(fusion_dim_generic(2, 2, 7) == 0);
    CHECK(fusion_dim_generic(1, 3, 2) == 0);
    CHECK_THROWS_AS(fusion_dim_generic(1, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(fusion_dim_generic(1, 0, 0), std::invalid_argument);
}

TEST_CASE("no intertwiners between distinct non-square weights") {
    CHECK(fusion_dim_nonsquare_pair(2, 3) == 0);
    CHECK(fusion_dim_nonsquare_pair(3, 5) == 0);
    CHECK_THROWS_AS(fusion_dim_nonsquare_pair(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(fusion_dim_nonsquare_pair(4, 3), std::invalid_argument);
}
