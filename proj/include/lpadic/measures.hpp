#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lpadic/cyclo.hpp"
#include "lpadic/padic.hpp"

namespace lpadic {

// ---------------------------------------------------------------------------
// Finite level: measures on (Z/p^r)^d as elements of the group ring.

using Point = std::vector<long>;

class FiniteLevelMeasure {
public:
    FiniteLevelMeasure(long p, long r, long d);
    FiniteLevelMeasure(long p, long r, long d, std::vector<CycloRational> coeffs);

    static FiniteLevelMeasure point_mass(long p, long r, const Point& a);
    static FiniteLevelMeasure uniform(long p, long r, long d, const CycloRational& c = CycloRational(1));

    long prime() const { return p_; }
    long level() const { return r_; }
    long rank() const { return d_; }
    long modulus() const { return modulus_; }  // p^r
    long size() const { return static_cast<long>(coeffs_.size()); }

    long index(const Point& g) const;  // coordinates reduced mod p^r
    Point point(long idx) const;
    const CycloRational& coeff(const Point& g) const { return coeffs_[index(g)]; }
    const CycloRational& coeff_at(long idx) const { return coeffs_[idx]; }
    void set(const Point& g, const CycloRational& v) { coeffs_[index(g)] = v; }
    const std::vector<CycloRational>& coeffs() const { return coeffs_; }

    // Sum of f(g) * mu(g); `table` lists f on (Z/p^fl)^d in index order, fl <= r.
    CycloRational integrate(const std::vector<CycloRational>& table, long fl) const;
    CycloRational integrate(const std::function<CycloRational(const Point&)>& f) const;

    // Additive character x -> zeta_{p^r}^{k.x}.
    CycloRational integrate_additive(const Point& k) const;
    // Same value, computed in the group ring by bucketing exponents.
    CycloRational group_ring_evaluate(const Point& k) const;

    FiniteLevelMeasure pushforward(long r_new) const;
    FiniteLevelMeasure operator+(const FiniteLevelMeasure& o) const;
    FiniteLevelMeasure scale(const CycloRational& c) const;
    bool operator==(const FiniteLevelMeasure& o) const;

private:
    long p_, r_, d_, modulus_;
    std::vector<CycloRational> coeffs_;
};

// Values of the additive character zeta_{p^fl}^{k.x} on (Z/p^fl)^d.
std::vector<CycloRational> additive_character_table(long p, long fl, long d, const Point& k);

FiniteLevelMeasure product_measure(const FiniteLevelMeasure& a, const FiniteLevelMeasure& b);

// A measure on X1 with values in measures on X2.
struct CurriedMeasure {
    long p = 0, r = 0, d1 = 0;
    std::vector<FiniteLevelMeasure> fibers;  // indexed by points of X1
    FiniteLevelMeasure integrate(const std::vector<CycloRational>& table1) const;
};

CurriedMeasure curry(const FiniteLevelMeasure& mu, long d1);
FiniteLevelMeasure uncurry(const CurriedMeasure& c);

// pi-adic valuation in Z_p[zeta_{p^r}], pi = 1 - zeta; x must lie in Q(zeta_{p^r}).
// Returns nullopt for zero.
std::optional<long> pi_valuation(const CycloRational& x, long p, long r);

struct CongruenceWitness {
    Point k1, k2;
    long required = 0;  // in pi-units
    long found = 0;     // v_pi of the difference (or -1 when non-integral)
};

struct CongruenceResult {
    std::optional<FiniteLevelMeasure> measure;
    std::optional<CongruenceWitness> witness;
    std::string reason;
};

// Reconstruct a level-r measure from its additive-character values; `table` is
// indexed like the measure itself.  `a` < 0 means no cap on the congruence depth.
CongruenceResult extend_by_congruence(long p, long r, long d, const std::vector<CycloRational>& table,
                                      long a = -1);

// ---------------------------------------------------------------------------
// Z_p-adic side.

// Element of Z_p[zeta_{p^s}] modulo p^N in the basis zeta^i, i < phi(p^s).
struct ZpZeta {
    long p = 2, s = 0, N = 1;
    std::vector<mpz_class> coeffs;

    static ZpZeta scalar(long p, long s, long N, const mpz_class& x);
    long degree() const { return static_cast<long>(coeffs.size()); }
    ZpZeta operator+(const ZpZeta& o) const;
    ZpZeta operator*(const ZpZeta& o) const;
    ZpZeta with_precision(long n) const;
    bool is_scalar() const;
    bool operator==(const ZpZeta& o) const;
};

// F(T) = sum c_k T^k = int (1+T)^x d mu.
class AmiceSeries {
public:
    AmiceSeries(long p, long N, std::vector<mpz_class> coeffs);
    static AmiceSeries point_mass(long p, long N, long D, long a);

    long prime() const { return p_; }
    long precision() const { return N_; }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    // F(z - 1) with z = u * zeta_{p^s}^j, u = 1 mod p; the result is certified
    // modulo p^N_out or a PrecisionError is thrown.
    ZpZeta evaluate(const mpz_class& u, long s, long j, long N_out) const;
    // Precision that evaluate() can certify at such a point.
    long certified_precision(const mpz_class& u, long s) const;

private:
    long p_, N_;
    std::vector<mpz_class> coeffs_;
};

// A measure on Z_p^x, one Amice series per residue class a mod p, each in the
// variable l(x) = log<x>/log(1+p).
class UnitsMeasure {
public:
    UnitsMeasure(long p, long N, std::vector<AmiceSeries> branches, std::vector<mpz_class> teich, long work);

    long prime() const { return p_; }
    long precision() const { return N_; }
    long degree() const { return branches_.front().degree(); }
    const AmiceSeries& branch(long a) const { return branches_.at(a - 1); }

    // int omega(x)^i (u zeta_{p^s}^j)^{l(x)} d mu.
    ZpZeta integrate_character(long i, const mpz_class& u, long s, long j, long N_out) const;
    // Total mass, as a residue mod p^N.
    mpz_class total_mass() const;

private:
    long p_, N_, work_;
    std::vector<AmiceSeries> branches_;
    std::vector<mpz_class> teich_;  // omega(a) mod p^work, a = 1..p-1
};

enum class ExecPolicy { Serial, Parallel };

// Coset value of the regularized Bernoulli measure on a + p^r Z_p:
//   c * B1bar({c^{-1} a / p^r}) - B1bar({a / p^r}).
mpq_class mazur_coset_value(long p, long c, const mpz_class& a, long r);
// The same measure pushed to Z/p^r.
FiniteLevelMeasure mazur_finite(long p, long c, long r);
// Exact moment  int_{a + pZ_p} x^l dE_c.
mpq_class mazur_moment(long p, long c, long a, long l);

// Regularized Bernoulli measure restricted to Z_p^x; Amice coefficients are
// certified mod p^N.  D defaults to N + p^r.
UnitsMeasure mazur_measure(long p, long c, long N, long r = 1, long D = -1,
                           ExecPolicy policy = ExecPolicy::Parallel);

// l(x) = log<x>/log(1+p) mod p^k, x a unit.
mpz_class log_coordinate(const mpz_class& x, long p, long k);

struct KLPoint {
    bool is_integer = true;
    long k = 0;     // integer point: character x^(k-1)
    mpz_class u;    // unit point: character omega^(i-1)(x) u^{l(x)}, u = 1 mod p
    static KLPoint at_integer(long k) { return {true, k, 0}; }
    static KLPoint at_unit(const mpz_class& u) { return {false, 0, u}; }
};

struct KLResult {
    PadicScalar value;
    long c_used = 0;
    long regulator_valuation = 0;
    long working_precision = 0;
};

// p-adic L-value on branch i (mod p-1).  With retry_c, a regulator 1 - c^k of
// positive valuation triggers a search for a c of minimal valuation.
KLResult kubota_leopoldt(long p, long N, long i, const KLPoint& pt, long c = 2, bool retry_c = true);

}  // namespace lpadic
