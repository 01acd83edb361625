#include <doctest.h>

#include <functional>

#include "lpadic/errors.hpp"
#include "lpadic/schur_weyl.hpp"
#include "oracles/oracles.hpp"

using namespace lpadic;

TEST_CASE("leading minors agree with the Leibniz expansion") {
    for (long a = 0; a <= 4; ++a)
        for (long b = 0; b + a <= 5; ++b) {
            if (a + b == 0) continue;
            for (long i = 1; i <= a; ++i)
                CHECK(leading_minor(a, b, Block::A, i) == oracle::leibniz_determinant(a + b, 0, i));
            for (long i = 1; i <= b; ++i)
                CHECK(leading_minor(a, b, Block::D, i) == oracle::leibniz_determinant(a + b, a, i));
        }
    CHECK_THROWS_AS(leading_minor(2, 1, Block::D, 2), DomainError);
    CHECK_THROWS_AS(leading_minor(0, 0, Block::A, 1), DomainError);
}

TEST_CASE("p-polynomial examples") {
    CHECK(p_polynomial({2}, {1}, 1, 1).str() == "x11^2*x22");
    CHECK(p_polynomial({0, 0}, {0}, 2, 1) == MatrixPoly::constant(3, 1));
    CHECK(p_polynomial({0, 1}, {}, 2, 0).str() == "x11*x22 - x12*x21");
    CHECK(p_polynomial_degree({2, 1}, {0, 3}) == 2 + 2 + 0 + 6);
    CHECK(p_polynomial({2, 1}, {0, 3}, 2, 2).degree() == 10);
    CHECK(weight_from_differences({2, 0, 1}) == std::vector<long>{3, 1, 1});
    CHECK_THROWS_AS(p_polynomial({1}, {}, 2, 0), DomainError);
    CHECK_THROWS_AS(p_polynomial({-1}, {}, 1, 0), DomainError);
}

TEST_CASE("highest-weight vectors") {
    const long n = 3;
    auto x = [&](long i, long j) { return MatrixPoly::var(n, i, j); };
    CHECK(highest_weight_verify(x(0, 0), {1, 0, 0}, 3));
    CHECK(highest_weight_verify(leading_minor(3, 0, Block::A, 3), {1, 1, 1}, 3));
    CHECK(highest_weight_verify(leading_minor(3, 0, Block::A, 2), {1, 1, 0}, 3));
    CHECK_FALSE(highest_weight_verify(x(0, 1), {1, 0, 0}, 3));
    CHECK_FALSE(highest_weight_verify(x(0, 0), {0, 1, 0}, 3));
    CHECK_FALSE(highest_weight_verify(x(1, 1), {0, 1, 0}, 3));
    CHECK_THROWS_AS(highest_weight_verify(x(0, 0) + x(0, 0) * x(1, 1), {1, 0, 0}, 3), DomainError);
    CHECK_THROWS_AS(highest_weight_verify(x(0, 0), {1, 0}, 3), DomainError);
    // block D of a (1, 2) signature sits at offset 1
    CHECK(highest_weight_verify(x(1, 1), {1, 0}, 2, 1));
    CHECK(p_polynomial_verify({1, 2}, {3}, 2, 1));
    CHECK(p_polynomial_verify({}, {1, 1}, 0, 2));
}

TEST_CASE("every small p-polynomial passes") {
    long count = 0;
    for (long a = 0; a <= 3; ++a)
        for (long b = 0; a + b <= 3; ++b) {
            if (a + b == 0) continue;
            // all exponent vectors with total degree <= 3
            std::vector<long> r(a, 0), s(b, 0);
            std::function<void(long)> rec = [&](long pos) {
                if (pos == a + b) {
                    if (p_polynomial_degree(r, s) <= 3) {
                        CHECK(p_polynomial_verify(r, s, a, b));
                        ++count;
                    }
                    return;
                }
                for (long e = 0; e <= 3; ++e) {
                    (pos < a ? r[pos] : s[pos - a]) = e;
                    rec(pos + 1);
                }
                (pos < a ? r[pos] : s[pos - a]) = 0;
            };
            rec(0);
        }
    CHECK(count > 20);
}

TEST_CASE("Weyl dimensions and degree decomposition") {
    CHECK(weyl_dimension({1, 0, 0}) == 3);
    CHECK(weyl_dimension({1, 1, 0}) == 3);
    CHECK(weyl_dimension({2, 1, 0}) == 8);
    CHECK(weyl_dimension({3, 0}) == 4);
    CHECK(binomial(6, 2) == 15);
    CHECK(partitions_at_most(4, 2) == std::vector<std::vector<long>>{{4, 0}, {3, 1}, {2, 2}});
    CHECK(partitions_at_most(0, 2) == std::vector<std::vector<long>>{{0, 0}});
    for (long u = 1; u <= 3; ++u)
        for (long d = 0; d <= 4; ++d) {
            auto r = degree_decomposition_check(u, d);
            CHECK(r.holds);
            CHECK(r.sum_of_squares == r.expected);
            CHECK(r.expected == oracle::monomial_count(u * u, d));
        }
}

TEST_CASE("matrix polynomial arithmetic") {
    auto x = MatrixPoly::var(2, 0, 0), y = MatrixPoly::var(2, 1, 1), t = MatrixPoly::param(2);
    CHECK((x + y).pow(2) == x * x + (x * y).scale(2) + y * y);
    CHECK((x - x).is_zero());
    CHECK((x * t).involves_param());
    CHECK_FALSE((x + y * y).is_homogeneous());
    CHECK(MatrixPoly(2).degree() == -1);
    std::vector<MatrixPoly> img = {y, MatrixPoly(2), MatrixPoly(2), x + t};
    CHECK((x * y).substitute(img) == y * x + y * t);
    CHECK_THROWS_AS(x + MatrixPoly::var(3, 0, 0), DomainError);
}
