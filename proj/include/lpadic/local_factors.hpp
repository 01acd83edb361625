#pragma once

#include <string>
#include <vector>

#include "lpadic/cyclo.hpp"
#include "lpadic/halfint.hpp"

namespace lpadic {

// Quasi-character of a local field with residue cardinality q:
// xi(uniformizer) = value, and on units (ramified case, q = p odd prime) xi
// factors through (Z/p^c)^x with xi(g) = zeta_{phi(p^c)}^j for the fixed
// primitive root g mod p^2.
class LocalCharacter {
public:
    LocalCharacter() = default;
    static LocalCharacter unramified(long q, const CycloRational& value);
    static LocalCharacter ramified(long p, const CycloRational& value, long conductor, long j);

    long q() const { return q_; }
    long conductor() const { return c_; }
    long exponent() const { return j_; }
    bool is_unramified() const { return c_ == 0; }
    const CycloRational& at_uniformizer() const { return value_; }

    CycloRational on_unit(long a) const;  // a prime to p
    long sign() const;                    // xi(-1) = +-1
    // Finite-part table over (Z/p^c)^x, listed for a = 1..p^c-1 prime to p.
    std::vector<std::pair<long, CycloRational>> unit_table() const;

    LocalCharacter operator*(const LocalCharacter& o) const;
    LocalCharacter inverse() const;
    bool operator==(const LocalCharacter& o) const;

private:
    void reduce();
    long q_ = 0, c_ = 0, j_ = 0;
    CycloRational value_{1};
};

long primitive_root_mod_p2(long p);

// sum_{a mod p^c, a unit} xi(a) zeta_{p^c}^a   (1 for unramified xi).
CycloRational gauss_sum(const LocalCharacter& xi);

// Element a + b sqrt(q) with a, b cyclotomic.
struct QuadCyclo {
    long q = 1;
    CycloRational a, b;
    QuadCyclo operator*(const QuadCyclo& o) const;
    QuadCyclo operator+(const QuadCyclo& o) const;
    QuadCyclo inverse() const;
    bool operator==(const QuadCyclo& o) const { return q == o.q && a == o.a && b == o.b; }
    std::string str() const;
};

// Affine argument s' = sigma * s + h.
struct Arg {
    long sigma = 1;
    HalfInt h{0};
};

// constant * T^texp * prod (1 - gamma T^k)^mult with T = q^{-(s + v0)}.
class LocalFactorFn {
public:
    struct Factor {
        CycloRational gamma;
        long k = 1;
        long mult = 0;
    };

    LocalFactorFn() = default;
    LocalFactorFn(long q, HalfInt v0);

    static LocalFactorFn constant_fn(long q, HalfInt v0, const CycloRational& c);
    // q^{-d s'} as a monomial in T.
    static LocalFactorFn q_power(long q, HalfInt v0, long d, const Arg& arg);
    // (1 - gamma q^{-s'})^mult.
    static LocalFactorFn euler(long q, HalfInt v0, const CycloRational& gamma, const Arg& arg, long mult);

    long q() const { return q_; }
    HalfInt v0() const { return v0_; }
    const CycloRational& constant() const { return const_; }
    long t_exponent() const { return texp_; }
    const std::vector<Factor>& factors() const { return factors_; }

    LocalFactorFn operator*(const LocalFactorFn& o) const;
    LocalFactorFn operator/(const LocalFactorFn& o) const { return *this * o.inverse(); }
    LocalFactorFn inverse() const;
    // Equality as rational functions, decided by cross-multiplication.
    bool operator==(const LocalFactorFn& o) const;
    bool operator!=(const LocalFactorFn& o) const { return !(*this == o); }

    // Expanded numerator (with the constant) and denominator (constant term 1).
    std::vector<CycloRational> numerator() const;
    std::vector<CycloRational> denominator() const;
    // Power series in T to degree D; requires t_exponent() >= 0.
    std::vector<CycloRational> series(long D) const;
    // Value at s = m.
    QuadCyclo evaluate(long m) const;

private:
    void add_factor(const CycloRational& gamma, long k, long mult);
    void check_same(const LocalFactorFn& o) const;

    long q_ = 1;
    HalfInt v0_{0};
    CycloRational const_{1};
    long texp_ = 0;
    std::vector<Factor> factors_;
};

// Tate factors at s' = arg, over the variable T = q^{-(s + v0)}.
LocalFactorFn abelian_L(const LocalCharacter& xi, HalfInt v0, const Arg& arg);
// Level-zero additive character: eps(s', xi) = xi(uniformizer)^c tau(xi^{-1}) q^{-c s'}.
LocalFactorFn abelian_epsilon(const LocalCharacter& xi, HalfInt v0, const Arg& arg);
LocalFactorFn standard_L(const std::vector<CycloRational>& satake, const LocalCharacter& twist, HalfInt v0,
                         const Arg& arg);

enum class DNormMode { Doubling, Normalizer };

// prod_{r=0}^{n-1} L(2s + n - r, chi_plus eta^r), variable q^{-s} (v0 = 0).
LocalFactorFn d_norm_doubling(long n, const LocalCharacter& chi_plus, long eta_at_uniformizer);
// The same product at s = m.
CycloRational d_norm_normalizer(long n, long m, const LocalCharacter& chi_plus, long eta_at_uniformizer);

struct LocalRep {
    long a = 0, b = 0;
    std::vector<LocalCharacter> mu_a, mu_b;
};

// Modified Euler factor at p, variable T = q^{-(s+1/2)}.
LocalFactorFn modified_euler_p(const LocalRep& pi, const LocalCharacter& chi1, const LocalCharacter& chi2);
// Variant with eps(-s+1/2, pi_a x chi1) rewritten through the reflection formula.
LocalFactorFn modified_euler_p_alt(const LocalRep& pi, const LocalCharacter& chi1, const LocalCharacter& chi2);
// Central sign of pi_a x chi1 at -1.
long central_sign(const LocalRep& pi, const LocalCharacter& chi1);
bool euler_alt_form_identity(const LocalRep& pi, const LocalCharacter& chi1, const LocalCharacter& chi2);

// sum_{k<=D} xi(uniformizer)^k X^k, the GL1 zeta integral of the unit-ball indicator.
std::vector<CycloRational> gj_series_oracle(const LocalCharacter& xi, long D);

}  // namespace lpadic
