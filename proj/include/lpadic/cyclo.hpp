#pragma once

#include <complex>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lpadic {

long euler_phi(long m);
long gcd_long(long a, long b);
long lcm_long(long a, long b);

// Integer coefficients of the M-th cyclotomic polynomial, low degree first.
const std::vector<long>& cyclotomic_polynomial(long M);
// Coefficients of x^k mod Phi_M (length phi(M)).
std::vector<long> cyclotomic_power(long M, long k);

// Element of Q(zeta_M) in the power basis 1, z, ..., z^(phi(M)-1).
// Stored as integer numerators over one positive common denominator.
class CycloRational {
public:
    CycloRational() : CycloRational(mpq_class(0)) {}
    CycloRational(const mpq_class& q, long M = 1);  // NOLINT(google-explicit-constructor)
    CycloRational(long v) : CycloRational(mpq_class(v)) {}  // NOLINT(google-explicit-constructor)

    // zeta_M^k, for any integer k.
    static CycloRational zeta(long M, long k = 1);
    // Element with the given rational coefficients (length phi(M)).
    static CycloRational from_coeffs(long M, const std::vector<mpq_class>& coeffs);

    long conductor() const { return M_; }
    long degree() const { return static_cast<long>(num_.size()); }
    std::vector<mpq_class> coeffs() const;
    mpq_class coeff(long i) const;
    const std::vector<mpz_class>& numerators() const { return num_; }
    const mpz_class& denominator() const { return den_; }

    bool is_zero() const;
    bool is_rational() const;
    mpq_class rational_value() const;  // requires is_rational()

    // Re-express in Q(zeta_L), M | L.
    CycloRational promote(long L) const;

    CycloRational operator+(const CycloRational& o) const;
    CycloRational operator-(const CycloRational& o) const;
    CycloRational operator-() const;
    CycloRational operator*(const CycloRational& o) const;
    CycloRational operator/(const CycloRational& o) const { return *this * o.inverse(); }
    CycloRational& operator+=(const CycloRational& o) { return *this = *this + o; }
    CycloRational& operator-=(const CycloRational& o) { return *this = *this - o; }
    CycloRational& operator*=(const CycloRational& o) { return *this = *this * o; }
    CycloRational inverse() const;
    CycloRational pow(long e) const;
    CycloRational scale(const mpq_class& q) const;

    // zeta -> zeta^a, gcd(a, M) = 1.
    CycloRational galois(long a) const;
    CycloRational conj() const { return galois(-1); }
    // Field norm down to Q.
    mpq_class norm() const;

    bool operator==(const CycloRational& o) const;
    bool operator!=(const CycloRational& o) const { return !(*this == o); }

    // Value under zeta_M -> exp(2 pi i / M); diagnostics only.
    std::complex<double> evaluate() const;

    std::string str() const;

private:
    CycloRational(long M, std::vector<mpz_class> num, mpz_class den);
    void canonicalize();

    long M_ = 1;
    std::vector<mpz_class> num_;
    mpz_class den_ = 1;
};

CycloRational operator*(const mpq_class& q, const CycloRational& x);

}  // namespace lpadic
