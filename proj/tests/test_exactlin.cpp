#include <catch2/catch_amalgamated.hpp>

#include "vc1/matrix.hpp"
#include "vc1/partition.hpp"
#include "vc1/rational.hpp"

#include <random>

using namespace vc1;

TEST_CASE("rational rendering and parsing") {
    CHECK(rat_str(Rational(3)) == "3");
    CHECK(rat_str(Rational(-7, 2)) == "-7/2");
    CHECK(rat_str(Rational(4, 8)) == "1/2"); // canonical lowest terms
    CHECK(parse_rational("15/49") == Rational(15, 49));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("integer square detection") {
    CHECK(is_perfect_square(BigInt(0)));
    CHECK(is_perfect_square(BigInt(49)));
    CHECK_FALSE(is_perfect_square(BigInt(2)));
    CHECK_FALSE(is_perfect_square(BigInt(-4)));
    long m = -1;
    CHECK(is_integer_square(Rational(16), m));
    CHECK(m == 4);
    CHECK_FALSE(is_integer_square(Rational(1, 4), m));
    CHECK_FALSE(is_integer_square(Rational(12), m));
}

TEST_CASE("binomial coefficients at negative upper argument") {
    CHECK(binom(3, 2) == Rational(3));
    CHECK(binom(-1, 2) == Rational(1));
    CHECK(binom(-1, 3) == Rational(-1));
    CHECK(binom(5, 0) == Rational(1));
    CHECK(binom(2, 5) == Rational(0));
}

namespace {

Matrix vandermonde(const std::vector<Rational>& nodes)
{
    Matrix m(nodes.size(), nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Rational p = 1;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            m(i, j) = p;
            p *= nodes[i];
        }
    }
    return m;
}

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c)
{
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = Rational(num(rng), den(rng));
    return m;
}

} // namespace

TEST_CASE("rank basics") {
    CHECK(rank(Matrix::identity(2)) == 2);
    CHECK(rank(Matrix(3, 3)) == 0);
    CHECK(rank(vandermonde({1, 4, 9})) == 3);
}

TEST_CASE("nullspace basics") {
    CHECK(nullspace(Matrix::identity(4)).empty());

    Matrix row(1, 2);
    row(0, 0) = 1;
    row(0, 1) = 1;
    auto ns = nullspace(row);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] == -ns[0][1]); // the line spanned by (1,-1)
    CHECK(ns[0][1] != 0);
}

TEST_CASE("determinant basics") {
    CHECK(det(Matrix::identity(3)) == 1);
    Matrix swp(2, 2);
    swp(0, 1) = 1;
    swp(1, 0) = 1;
    CHECK(det(swp) == -1);
    CHECK_THROWS_AS(det(Matrix(2, 3)), std::invalid_argument);
}

TEST_CASE("solve reproduces the two-unknown linear system") {
    Matrix m(2, 2);
    m(0, 0) = 5;
    m(0, 1) = 3;
    m(1, 0) = 12;
    m(1, 1) = 17;
    auto v = solve(m, {15, 80});
    CHECK(v[0] == Rational(15, 49));
    CHECK(v[1] == Rational(220, 49));

    Matrix sing(2, 2);
    sing(0, 0) = 1;
    sing(0, 1) = 2;
    sing(1, 0) = 2;
    sing(1, 1) = 4;
    CHECK_THROWS_AS(solve(sing, {1, 1}), std::domain_error);
}

TEST_CASE("rank-nullity and exact kernel membership on random matrices") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t r = 1 + trial % 5, c = 1 + (trial * 7) % 6;
        Matrix m = random_matrix(rng, r, c);
        auto ns = nullspace(m);
        CHECK(rank(m) + ns.size() == c);
        for (const auto& v : ns)
            for (std::size_t i = 0; i < r; ++i) {
                Rational dot = 0;
                for (std::size_t j = 0; j < c; ++j)
                    dot += m(i, j) * v[j];
                CHECK(dot == 0);
            }
    }
}

TEST_CASE("determinant changes sign under a row transposition") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m = random_matrix(rng, 4, 4);
        Matrix swapped = m;
        for (std::size_t j = 0; j < 4; ++j)
            std::swap(swapped(1, j), swapped(3, j));
        CHECK(det(swapped) == -det(m));
    }
}

TEST_CASE("partition enumeration") {
    CHECK(partitions(0) == std::vector<Partition>{{}});
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(8).size() == 22);
    auto p4 = partitions(4);
    CHECK(p4.front() == Partition{4});         // reverse-lexicographic order
    CHECK(p4[1] == Partition{3, 1});
    CHECK(p4.back() == Partition{1, 1, 1, 1});
    for (int n = 0; n <= 15; ++n) {
        auto ps = partitions(n);
        CHECK(static_cast<long>(ps.size()) == partition_count(n));
        for (const auto& p : ps) {
            CHECK(is_valid_partition(p));
            CHECK(weight(p) == n);
        }
    }
    CHECK(partition_count(50) == 204226);
}
