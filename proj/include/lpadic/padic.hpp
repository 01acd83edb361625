#pragma once

#include <string>

#include <gmpxx.h>

#include "lpadic/halfint.hpp"

namespace lpadic {

// Integer helpers shared by the p-adic code.
bool is_prime(long n);
long vp(const mpz_class& x, long p);            // x != 0
long vp(const mpq_class& x, long p);            // x != 0
mpz_class ppow(long p, long e);                 // p^e, e >= 0
mpz_class mod_inverse(const mpz_class& a, const mpz_class& m);  // throws DomainError
// n/d in canonical form (GMP rational arithmetic requires it).
mpq_class make_rat(const mpz_class& n, const mpz_class& d);
// Residue of a p-integral rational in Z/p^N.
mpz_class rational_mod(const mpq_class& x, long p, long N);

// x = p^val * unit, with 0 <= unit < p^N and p not dividing unit.  The
// valuation may be a half-integer (a formal sqrt(p) adjoined).  A zero scalar
// records in `val` the absolute precision to which it is known to vanish.
class PadicScalar {
public:
    PadicScalar() = default;

    static PadicScalar from_integer(long p, long N, const mpz_class& x);
    static PadicScalar from_rational(long p, long N, const mpq_class& x);
    static PadicScalar from_parts(long p, long N, HalfInt val, const mpz_class& unit);
    static PadicScalar zero(long p, long N, HalfInt abs_prec);
    static PadicScalar one(long p, long N) { return from_integer(p, N, 1); }

    long prime() const { return p_; }
    long precision() const { return N_; }
    bool is_zero() const { return zero_; }
    bool truncated() const { return truncated_; }
    // For zero this is the vanishing bound, see valuation_str().
    HalfInt valuation() const { return val_; }
    const mpz_class& unit() const { return unit_; }
    bool is_unit() const { return !zero_ && val_ == HalfInt(0); }
    // Absolute precision: the value is known modulo p^(val+N) (or p^val for zero).
    HalfInt absolute_precision() const;
    // "v" or ">= v" for zero.
    std::string valuation_str() const;

    // The residue of x in Z/p^k; requires integral valuation and val >= 0.
    mpz_class residue(long k) const;

    PadicScalar operator+(const PadicScalar& o) const;
    PadicScalar operator-(const PadicScalar& o) const;
    PadicScalar operator-() const;
    PadicScalar operator*(const PadicScalar& o) const;
    PadicScalar operator/(const PadicScalar& o) const { return *this * o.inverse(); }
    PadicScalar inverse() const;
    PadicScalar pow(long e) const;
    PadicScalar with_precision(long N) const;

    // Equality up to the smaller of the two absolute precisions.
    bool congruent(const PadicScalar& o) const;
    // Exact structural equality.
    bool operator==(const PadicScalar& o) const;

private:
    void check_compatible(const PadicScalar& o) const;
    void normalize();

    long p_ = 2;
    long N_ = 1;
    HalfInt val_{0};
    mpz_class unit_{1};
    bool zero_ = false;
    bool truncated_ = false;
};

// Teichmuller lift of a mod p, by Newton iteration on x^(p-1) - 1.
PadicScalar teichmuller(const mpz_class& a, long p, long N);
// Same, as a residue in Z/p^N.
mpz_class teichmuller_residue(const mpz_class& a, long p, long N);

}  // namespace lpadic
