#include <doctest.h>

#include <algorithm>
#include <random>

#include "lpadic/errors.hpp"
#include "lpadic/ordinarity.hpp"

using namespace lpadic;

namespace {
HalfInt h(long twice) { return HalfInt::from_twice(twice); }

PlaceWeight random_weight(std::mt19937_64& g, bool holomorphic) {
    std::uniform_int_distribution<long> sz(0, 3), fd(1, 2), val(-4, 4);
    PlaceWeight w;
    do {
        w.a = sz(g);
        w.b = sz(g);
    } while (w.a + w.b == 0);
    long f = fd(g), n = w.n();
    for (long s = 0; s < f; ++s) {
        std::vector<long> k(w.a), kc(w.b);
        for (auto& x : k) x = val(g);
        for (auto& x : kc) x = val(g);
        if (holomorphic) {
            std::sort(k.rbegin(), k.rend());
            std::sort(kc.rbegin(), kc.rend());
            if (w.a > 0 && w.b > 0) {
                long lift = n - (k.back() + kc.back());
                if (lift > 0)
                    for (auto& x : k) x += lift;
            }
        }
        w.kappa.push_back(k);
        w.kappa_c.push_back(kc);
    }
    return w;
}

std::vector<mpz_class> random_units(std::mt19937_64& g, long p, long n) {
    std::uniform_int_distribution<long> u(1, 1000);
    std::vector<mpz_class> out;
    for (long i = 0; i < n; ++i) {
        long x;
        do x = u(g);
        while (x % p == 0);
        out.push_back(x);
    }
    return out;
}
}  // namespace

TEST_CASE("kappa norm, delta and theta") {
    PlaceWeight w{1, 1, {{2}}, {{1}}};
    CHECK(kappa_norm(w) == std::vector<long>{1, 0});
    CHECK(delta_exponents(1, 1) == std::vector<long>{1, -1});
    CHECK(delta_exponents(2, 1) == std::vector<long>{2, 0, -2});
    CHECK(delta_exponents(0, 2) == std::vector<long>{-1, 1});
    CHECK(theta(w) == std::vector<HalfInt>{h(3), h(-1)});
    // delta(diag(p, 1)) = |p|^{1}: log_p is -1 for f = 1
    CHECK(modulus_delta_log({1, 0}, 1, 1, 1) == -1);
    CHECK(modulus_delta_log({0, 1}, 1, 1, 2) == 2);
    CHECK_THROWS_AS(modulus_delta_log({1}, 1, 1, 1), DomainError);
    CHECK(eigen_positions(2, 2, 1) == std::vector<long>{0});
    CHECK(eigen_positions(2, 2, 3) == std::vector<long>{0, 1, 3});
    CHECK(eigen_positions(2, 2, 4) == std::vector<long>{0, 1, 2, 3});
    CHECK(eigen_positions(0, 2, 1) == std::vector<long>{1});
    CHECK_THROWS_AS(eigen_positions(1, 1, 3), DomainError);
    CHECK_THROWS_AS(kappa_norm(PlaceWeight{1, 1, {{2}}, {}}), DomainError);
}

TEST_CASE("eigenvalue valuations shift by theta") {
    PlaceWeight w{1, 1, {{2}}, {{1}}};
    auto alpha = std::vector<PadicScalar>{PadicScalar::from_parts(5, 10, h(4), 3),
                                          PadicScalar::from_parts(5, 10, h(-2), 2)};
    auto c = ordinary_eigenvalues(alpha, w);
    CHECK(c[0].valuation() == h(4 + 3));
    CHECK(c[1].valuation() == h(4 + 3 - 2 - 1));
    CHECK_FALSE(is_ordinary(alpha, w));
    auto ord = ordinary_alpha(5, 10, w, {3, 2});
    CHECK(ord[0].valuation() == h(-3));
    CHECK(ord[1].valuation() == h(1));
    CHECK(is_ordinary(ord, w));
    CHECK(ordinary_eigenvalues(ord, w)[0].unit() == 3);
    // perturb one valuation
    ord[1] = ord[1] * PadicScalar::from_integer(5, 10, 5);
    CHECK_FALSE(is_ordinary(ord, w));
    CHECK_THROWS_AS(is_ordinary({alpha[0]}, w), DomainError);
}

TEST_CASE("ordinary and anti-ordinary are exchanged by inversion") {
    std::mt19937_64 g(5);
    std::uniform_int_distribution<long> v(-6, 6);
    for (int t = 0; t < 500; ++t) {
        auto w = random_weight(g, false);
        std::vector<PadicScalar> alpha, inv;
        auto units = random_units(g, 3, w.n());
        bool make_ord = t % 2 == 0;
        if (make_ord) alpha = ordinary_alpha(3, 8, w, units);
        else
            for (long i = 0; i < w.n(); ++i) alpha.push_back(PadicScalar::from_parts(3, 8, h(v(g)), units[i]));
        for (const auto& x : alpha) inv.push_back(x.inverse());
        CHECK(is_ordinary(alpha, w) == is_anti_ordinary(inv, w));
        if (make_ord) CHECK(is_ordinary(alpha, w));
    }
}

TEST_CASE("theta regularity") {
    CHECK(theta_regularity(PlaceWeight{1, 1, {{2}}, {{1}}}));
    // boundary kappa_sigma + kappa_{sigma c} = n - 1 collapses the middle link
    CHECK_FALSE(theta_regularity(PlaceWeight{1, 1, {{1}}, {{0}}}));
    CHECK(theta_regularity(PlaceWeight{2, 0, {{0, 0}}, {{}}}));
    CHECK_FALSE(theta_regularity(PlaceWeight{2, 0, {{0, 2}}, {{}}}));
    CHECK(theta_regularity(PlaceWeight{0, 3, {{}}, {{4, 1, 1}}}));
    std::mt19937_64 g(11);
    for (int t = 0; t < 1000; ++t) CHECK(theta_regularity(random_weight(g, true)));
}

TEST_CASE("ordinary characters are unique up to unit parts") {
    std::mt19937_64 g(19);
    for (int t = 0; t < 100; ++t) {
        auto w = random_weight(g, true);
        auto alpha = ordinary_alpha(7, 6, w, random_units(g, 7, w.n()));
        CHECK(weyl_permutation_unit_count(alpha, w) == 1);
    }
    // repeated valuations allow both orders
    PlaceWeight flat{2, 0, {{0, 1}}, {{}}};  // theta = (1/2, 1/2)
    auto alpha = ordinary_alpha(5, 6, flat, {1, 2});
    CHECK(weyl_permutation_unit_count(alpha, flat) == 2);
}

TEST_CASE("translation to the weights layout") {
    PlaceWeight w{1, 2, {{3}}, {{0, -1}}};
    auto W = as_weight(w);
    REQUIRE(W.sigma.size() == 1);
    CHECK(W.sigma[0].a == 2);
    CHECK(W.sigma[0].b == 1);
    CHECK(W.sigma[0].kappa == std::vector<long>{3});
    CHECK(W.sigma[0].kappa_c == std::vector<long>{0, -1});
}
