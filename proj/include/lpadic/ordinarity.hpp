#pragma once

#include <vector>

#include "lpadic/halfint.hpp"
#include "lpadic/padic.hpp"
#include "lpadic/weights.hpp"

namespace lpadic {

// Weight data at one place w above p: for each of the f embeddings sigma over
// w, kappa_sigma (a entries) and kappa_{sigma c} (b entries).
struct PlaceWeight {
    long a = 0, b = 0;
    std::vector<std::vector<long>> kappa;
    std::vector<std::vector<long>> kappa_c;

    long n() const { return a + b; }
    long places() const { return static_cast<long>(kappa.size()); }
    void validate() const;
};

// The same data in the weights-module layout (per sigma: b-slot = kappa_sigma).
Weight as_weight(const PlaceWeight& w);

// m_i = sum (kappa_{sigma,i} - b), m_{a+j} = -sum (kappa_{sigma c,j} - a).
std::vector<long> kappa_norm(const PlaceWeight& w);
// e_i = n+1-2i (i <= a), e_{a+j} = -(n+1-2j).
std::vector<long> delta_exponents(long a, long b);
// log_p of delta(diag(p^{v_1},...,p^{v_n})) with |.|_w normalized, q = p^f.
long modulus_delta_log(const std::vector<long>& t_valuations, long a, long b, long f);
// theta_i = m_i + f e_i / 2.
std::vector<HalfInt> theta(const PlaceWeight& w);
// Coordinates i with t_{w,j} having entry p, for j = 1..n.
std::vector<long> eigen_positions(long a, long b, long j);

// c_{w,j} for j = 1..n; alpha_i are the values at the uniformizer.
std::vector<PadicScalar> ordinary_eigenvalues(const std::vector<PadicScalar>& alpha, const PlaceWeight& w);
bool is_ordinary(const std::vector<PadicScalar>& alpha, const PlaceWeight& w);
bool is_anti_ordinary(const std::vector<PadicScalar>& alpha, const PlaceWeight& w);

// theta_1 > ... > theta_a > theta_n > theta_{n-1} > ... > theta_{a+1}.
bool theta_regularity(const PlaceWeight& w);

// alpha_i = p^{-theta_i} * units[i], the ordinary character with given unit parts.
std::vector<PadicScalar> ordinary_alpha(long p, long N, const PlaceWeight& w, const std::vector<mpz_class>& units);

// Number of permutations x with (alpha_{x(1)}, ..., alpha_{x(n)}) ordinary.
long weyl_permutation_unit_count(const std::vector<PadicScalar>& alpha, const PlaceWeight& w);

}  // namespace lpadic
