#pragma once

// Independent reference computations used by the unit and acceptance tests.
// Each one takes a different route from the library code it checks.

#include <vector>

#include <gmpxx.h>

#include "lpadic/cyclo.hpp"
#include "lpadic/measures.hpp"
#include "lpadic/schur_weyl.hpp"

namespace oracle {

using lpadic::CycloRational;

// B_n from sum_{k<=n} C(n+1,k) B_k = 0, B_1 = -1/2.
mpq_class bernoulli(long n);
// -(1 - p^{k-1}) B_k / k.
mpq_class kl_value(long p, long k);

// omega(a) = a^{p^{N-1}} mod p^N.
mpz_class teichmuller(const mpz_class& a, long p, long N);

// Riemann sum of x^l over a + pZ_p at level R against the coset values.
mpq_class riemann_moment(long p, long c, long a, long l, long R);

// mu(g) = p^{-rd} sum_k F(k) zeta^{-k.g}, by direct double loop.
std::vector<CycloRational> fourier_inverse(long p, long r, long d, const std::vector<CycloRational>& table);

// Leibniz determinant of the i x i block at `offset`.
lpadic::MatrixPoly leibniz_determinant(long n, long offset, long i);

// Number of monomials of degree d in v variables, by enumeration.
long monomial_count(long v, long d);

// Power series num/den to degree D (den[0] must be 1).
std::vector<CycloRational> series_divide(const std::vector<CycloRational>& num, const std::vector<CycloRational>& den,
                                         long D);

// sum_a (a/p) zeta_p^a via Euler's criterion.
CycloRational quadratic_gauss_sum(long p);

// Lower convex hull of points by brute force over all pairs.
std::vector<std::pair<mpq_class, mpq_class>> lower_hull_brute(const std::vector<std::pair<mpq_class, mpq_class>>& pts);

}  // namespace oracle
