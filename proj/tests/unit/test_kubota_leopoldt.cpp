#include <doctest.h>

#include "lpadic/errors.hpp"
#include "lpadic/measures.hpp"
#include "oracles/oracles.hpp"

using namespace lpadic;

TEST_CASE("Kubota-Leopoldt values") {
    auto r = kubota_leopoldt(5, 20, 0, KLPoint::at_integer(4));
    CHECK(r.value == PadicScalar::from_rational(5, 20, mpq_class(-31, 30)));
    auto r2 = kubota_leopoldt(5, 20, 2, KLPoint::at_integer(2));
    CHECK(r2.value == PadicScalar::from_rational(5, 20, mpq_class(1, 3)));
    // the same character reached through a unit point
    mpz_class u;
    mpz_class base = 6;
    mpz_pow_ui(u.get_mpz_t(), base.get_mpz_t(), 3);
    CHECK(kubota_leopoldt(5, 20, 0, KLPoint::at_unit(u)).value == r.value);
    // c-independence
    for (long c : {2L, 3L, 4L})
        CHECK(kubota_leopoldt(5, 20, 0, KLPoint::at_integer(4), c, false).value == r.value);
    // large weight
    CHECK(kubota_leopoldt(5, 10, 0, KLPoint::at_integer(104)).value ==
          PadicScalar::from_rational(5, 10, oracle::kl_value(5, 104)));
    CHECK_THROWS_AS(kubota_leopoldt(4, 10, 0, KLPoint::at_integer(4)), DomainError);
    CHECK_THROWS_AS(kubota_leopoldt(5, 10, 0, KLPoint::at_unit(3)), DomainError);
}

TEST_CASE("interpolation on every branch for p = 3, 5, 7") {
    for (long p : {3L, 5L, 7L})
        for (long k = 2; k <= 14; k += 2)
            CHECK(kubota_leopoldt(p, 20, k % (p - 1), KLPoint::at_integer(k)).value ==
                  PadicScalar::from_rational(p, 20, oracle::kl_value(p, k)));
}

TEST_CASE("regulator retry picks a c with a unit regulator when one exists") {
    // 1 - c^4 is divisible by 5 for every c prime to 5; at p = 7, 1 - 2^4 is a unit.
    auto r = kubota_leopoldt(5, 12, 0, KLPoint::at_integer(4), 2, true);
    CHECK(r.regulator_valuation >= 1);
    auto s = kubota_leopoldt(7, 12, 4, KLPoint::at_integer(4), 2, true);
    CHECK(s.regulator_valuation == 0);
    CHECK(s.c_used == 2);
}
