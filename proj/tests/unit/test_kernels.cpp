#include <doctest.h>

#include <random>

#include "lpadic/errors.hpp"
#include "lpadic/kernels.hpp"

using namespace lpadic;

TEST_CASE("batch integration: serial and OpenMP agree") {
    std::mt19937_64 g(1);
    std::uniform_int_distribution<long> u(-20, 20);
    FiniteLevelMeasure mu(3, 2, 2);
    for (long i = 0; i < mu.size(); ++i) mu.set(mu.point(i), CycloRational(u(g)));
    std::vector<Point> chars;
    for (long i = 0; i < mu.size(); ++i) chars.push_back(mu.point(i));
    auto a = batch_integrate_serial(mu, chars);
    auto b = batch_integrate_omp(mu, chars);
    CHECK(a == b);
    for (size_t i = 0; i < chars.size(); ++i) CHECK(a[i] == mu.integrate_additive(chars[i]));
}

TEST_CASE("congruence scan: serial and OpenMP agree, integral measures pass") {
    std::mt19937_64 g(2);
    std::uniform_int_distribution<long> u(-30, 30);
    for (long p : {2L, 3L, 5L})
        for (long r = 1; r <= 3; ++r) {
            FiniteLevelMeasure mu(p, r, 1);
            for (long i = 0; i < mu.size(); ++i) mu.set(mu.point(i), CycloRational(u(g)));
            auto s = congruence_scan_serial(mu), o = congruence_scan_omp(mu);
            CHECK(s.pairs == o.pairs);
            CHECK(s.failures == 0);
            CHECK(o.failures == 0);
            CHECK(s.pairs == mu.size() * (mu.size() - 1) / 2);
        }
    auto bern = mazur_finite(7, 2, 2);
    CHECK(congruence_scan_omp(bern).failures == 0);
}

TEST_CASE("congruence scan rejects non-integral coefficients") {
    FiniteLevelMeasure mu(3, 1, 1, {CycloRational(mpq_class(1, 3)), CycloRational(0), CycloRational(0)});
    CHECK_THROWS_AS(congruence_scan_serial(mu), DomainError);
}

TEST_CASE("congruence depth of additive characters") {
    // delta_1 at level 2, p = 3: characters 0 and 3 agree mod 3, so their
    // integrals agree mod pi^3; characters 0 and 1 only mod pi.
    auto mu = FiniteLevelMeasure::point_mass(3, 2, {1});
    auto v0 = mu.integrate_additive({0});
    CHECK(*pi_valuation(v0 - mu.integrate_additive({3}), 3, 2) == 3);
    CHECK(*pi_valuation(v0 - mu.integrate_additive({1}), 3, 2) == 1);
}
