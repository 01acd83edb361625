#include <algorithm>
#include <exception>
#include <stdexcept>

#include <omp.h>

#include "lpadic/bernoulli.hpp"
#include "lpadic/errors.hpp"
#include "lpadic/measures.hpp"

namespace lpadic {

namespace {

mpz_class fmod(const mpz_class& x, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

long ipow(long b, long e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

long vp_factorial(long n, long p) {
    long v = 0;
    for (long q = p; q <= n; q *= p) v += n / q;
    return v;
}

long vp_long(long n, long p) {
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

// log(1 + x) mod p^W for x in pZ_p.
mpz_class log1p_mod(const mpz_class& x, long p, long W) {
    if (!mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p)))
        throw DomainError("log1p argument must be divisible by p");
    long K = 1;
    long nmax = W + 2;
    while (ipow(p, K) <= 4 * (W + 8)) ++K;
    nmax = W + K + 2;
    const mpz_class mW = ppow(p, W);
    const mpz_class mbig = ppow(p, W + K);
    mpz_class acc = 0, xp = 1;
    for (long n = 1; n <= nmax; ++n) {
        xp = fmod(xp * x, mbig);
        long v = vp_long(n, p);
        if (n - v >= W + 1 && n > 1) continue;
        mpz_class t = xp / ppow(p, v);
        t = t * mod_inverse(mpz_class(n / ipow(p, v)), mW);
        if (n % 2 == 0) acc -= t;
        else acc += t;
    }
    return fmod(acc, mW);
}

// Bernoulli polynomial from a precomputed table.
mpq_class bpoly(const std::vector<mpq_class>& B, long n, const mpq_class& x) {
    mpq_class acc = 0;
    mpz_class binom = 1;
    std::vector<mpq_class> terms(n + 1);
    for (long k = 0; k <= n; ++k) {
        terms[k] = binom * B[k];
        binom = binom * (n - k) / (k + 1);
    }
    for (long k = 0; k <= n; ++k) acc = acc * x + terms[k];
    acc.canonicalize();
    return acc;
}

mpq_class moment_from_table(const std::vector<mpq_class>& B, long p, long c, long a, long l) {
    long b = 0;
    {
        mpz_class inv = mod_inverse(mpz_class(c), mpz_class(p));
        b = static_cast<long>(fmod(inv * a, mpz_class(p)).get_si());
    }
    mpz_class cl;
    mpz_ui_pow_ui(cl.get_mpz_t(), static_cast<unsigned long>(c), static_cast<unsigned long>(l + 1));
    mpq_class inner = bpoly(B, l + 1, make_rat(a, p)) - mpq_class(cl) * bpoly(B, l + 1, make_rat(b, p));
    mpq_class r = -make_rat(ppow(p, l), l + 1) * inner;
    r.canonicalize();
    return r;
}

}  // namespace

// ------------------------------------------------------------------ ZpZeta

ZpZeta ZpZeta::scalar(long p, long s, long N, const mpz_class& x) {
    ZpZeta z;
    z.p = p;
    z.s = s;
    z.N = N;
    z.coeffs.assign(s == 0 ? 1 : euler_phi(ipow(p, s)), 0);
    z.coeffs[0] = fmod(x, ppow(p, N));
    return z;
}

ZpZeta ZpZeta::operator+(const ZpZeta& o) const {
    if (p != o.p || s != o.s) throw DomainError("ZpZeta operands live in different rings");
    ZpZeta r = *this;
    r.N = std::min(N, o.N);
    const mpz_class m = ppow(p, r.N);
    for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = fmod(coeffs[i] + o.coeffs[i], m);
    return r;
}

ZpZeta ZpZeta::operator*(const ZpZeta& o) const {
    if (p != o.p || s != o.s) throw DomainError("ZpZeta operands live in different rings");
    ZpZeta r;
    r.p = p;
    r.s = s;
    r.N = std::min(N, o.N);
    const mpz_class m = ppow(p, r.N);
    const long phi = degree();
    const long M = ipow(p, s);
    std::vector<mpz_class> prod(2 * phi - 1, 0);
    for (long i = 0; i < phi; ++i) {
        if (coeffs[i] == 0) continue;
        for (long j = 0; j < phi; ++j)
            if (o.coeffs[j] != 0) mpz_addmul(prod[i + j].get_mpz_t(), coeffs[i].get_mpz_t(), o.coeffs[j].get_mpz_t());
    }
    r.coeffs.assign(phi, 0);
    for (long k = 0; k < 2 * phi - 1; ++k) {
        if (prod[k] == 0) continue;
        if (k < phi) {
            r.coeffs[k] += prod[k];
            continue;
        }
        auto row = cyclotomic_power(M, k);
        for (long j = 0; j < phi; ++j)
            if (row[j]) r.coeffs[j] += prod[k] * row[j];
    }
    for (auto& c : r.coeffs) c = fmod(c, m);
    return r;
}

ZpZeta ZpZeta::with_precision(long n) const {
    if (n > N) throw PrecisionError("cannot raise precision");
    ZpZeta r = *this;
    r.N = n;
    const mpz_class m = ppow(p, n);
    for (auto& c : r.coeffs) c = fmod(c, m);
    return r;
}

bool ZpZeta::is_scalar() const {
    for (size_t i = 1; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) return false;
    return true;
}

bool ZpZeta::operator==(const ZpZeta& o) const {
    return p == o.p && s == o.s && N == o.N && coeffs == o.coeffs;
}

// ------------------------------------------------------------------ AmiceSeries

AmiceSeries::AmiceSeries(long p, long N, std::vector<mpz_class> coeffs) : p_(p), N_(N), coeffs_(std::move(coeffs)) {
    if (!is_prime(p)) throw DomainError("Amice series prime must be prime");
    if (coeffs_.empty()) throw DomainError("Amice series needs at least one coefficient");
    const mpz_class m = ppow(p, N);
    for (auto& c : coeffs_) c = fmod(c, m);
}

AmiceSeries AmiceSeries::point_mass(long p, long N, long D, long a) {
    if (a < 0) throw DomainError("point mass location must be a non-negative integer");
    std::vector<mpz_class> c(D + 1);
    for (long k = 0; k <= D; ++k) mpz_bin_uiui(c[k].get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(k));
    return AmiceSeries(p, N, std::move(c));
}

long AmiceSeries::certified_precision(const mpz_class& u, long s) const {
    if (!mpz_divisible_ui_p(mpz_class(u - 1).get_mpz_t(), static_cast<unsigned long>(p_)))
        throw DomainError("evaluation point must be congruent to 1 mod p");
    const long D = degree();
    if (s == 0) {
        mpz_class um1 = fmod(u - 1, ppow(p_, N_));
        if (um1 == 0) return N_;
        return std::min(N_, (D + 1) * vp(um1, p_));
    }
    return std::min(N_, (D + 1) / euler_phi(ipow(p_, s)));
}

ZpZeta AmiceSeries::evaluate(const mpz_class& u, long s, long j, long N_out) const {
    if (s < 0) throw DomainError("root of unity order must be p^s with s >= 0");
    if (s > 0 && j % p_ == 0) throw DomainError("zeta exponent must be prime to p");
    const long cert = certified_precision(u, s);
    if (cert < N_out)
        throw PrecisionError("Amice evaluation certifies only p^" + std::to_string(cert) + ", requested p^" +
                             std::to_string(N_out));
    const long M = ipow(p_, s);
    ZpZeta zm1 = ZpZeta::scalar(p_, s, N_out, 0);
    if (s == 0) {
        zm1.coeffs[0] = fmod(u - 1, ppow(p_, N_out));
    } else {
        auto row = cyclotomic_power(M, j);
        for (size_t k = 0; k < row.size(); ++k) zm1.coeffs[k] = fmod(u * row[k], ppow(p_, N_out));
        zm1.coeffs[0] = fmod(zm1.coeffs[0] - 1, ppow(p_, N_out));
    }
    ZpZeta acc = ZpZeta::scalar(p_, s, N_out, coeffs_.back());
    for (long m = degree() - 1; m >= 0; --m) acc = acc * zm1 + ZpZeta::scalar(p_, s, N_out, coeffs_[m]);
    return acc;
}

// ------------------------------------------------------------------ UnitsMeasure

UnitsMeasure::UnitsMeasure(long p, long N, std::vector<AmiceSeries> branches, std::vector<mpz_class> teich, long work)
    : p_(p), N_(N), work_(work), branches_(std::move(branches)), teich_(std::move(teich)) {
    if (static_cast<long>(branches_.size()) != p - 1 || static_cast<long>(teich_.size()) != p - 1)
        throw DomainError("a measure on Z_p^x needs p-1 branches");
}

ZpZeta UnitsMeasure::integrate_character(long i, const mpz_class& u, long s, long j, long N_out) const {
    const long e = ((i % (p_ - 1)) + (p_ - 1)) % (p_ - 1);
    const mpz_class m = ppow(p_, N_out);
    ZpZeta acc = ZpZeta::scalar(p_, s, N_out, 0);
    for (long a = 1; a < p_; ++a) {
        mpz_class w;
        mpz_powm_ui(w.get_mpz_t(), teich_[a - 1].get_mpz_t(), static_cast<unsigned long>(e), m.get_mpz_t());
        acc = acc + ZpZeta::scalar(p_, s, N_out, w) * branches_[a - 1].evaluate(u, s, j, N_out);
    }
    return acc;
}

mpz_class UnitsMeasure::total_mass() const {
    mpz_class acc = 0;
    for (const auto& b : branches_) acc += b.coeffs().front();
    return fmod(acc, ppow(p_, N_));
}

// ------------------------------------------------------------------ Mazur measure

mpq_class mazur_coset_value(long p, long c, const mpz_class& a, long r) {
    if (c % p == 0) throw DomainError("c must be a unit mod p");
    const mpz_class m = ppow(p, r);
    mpz_class ar = fmod(a, m);
    mpz_class b = fmod(mod_inverse(mpz_class(c), m) * ar, m);
    mpq_class half(1, 2);
    mpq_class v = c * (make_rat(b, m) - half) - (make_rat(ar, m) - half);
    v.canonicalize();
    return v;
}

FiniteLevelMeasure mazur_finite(long p, long c, long r) {
    FiniteLevelMeasure mu(p, r, 1);
    for (long a = 0; a < mu.modulus(); ++a) mu.set({a}, CycloRational(mazur_coset_value(p, c, a, r)));
    return mu;
}

mpq_class mazur_moment(long p, long c, long a, long l) {
    if (c % p == 0) throw DomainError("c must be a unit mod p");
    return moment_from_table(bernoulli_numbers(l + 1), p, c, ((a % p) + p) % p, l);
}

mpz_class log_coordinate(const mpz_class& x, long p, long k) {
    if (p == 2) throw DomainError("log coordinate implemented for odd p");
    const long W = k + 1;
    const mpz_class mW = ppow(p, W);
    mpz_class w = teichmuller_residue(x, p, W);
    mpz_class y = fmod(x * mod_inverse(w, mW), mW);
    mpz_class lx = log1p_mod(y - 1, p, W) / p;
    mpz_class lg = log1p_mod(mpz_class(p), p, W) / p;
    return fmod(lx * mod_inverse(lg, ppow(p, k)), ppow(p, k));
}

UnitsMeasure mazur_measure(long p, long c, long N, long r, long D, ExecPolicy policy) {
    if (!is_prime(p) || p == 2) throw DomainError("mazur_measure needs an odd prime");
    if (c < 2 || c % p == 0) throw DomainError("c must be >= 2 and prime to p");
    if (N < 1) throw DomainError("precision must be positive");
    if (D < 0) D = N + ipow(p, r);
    const long W = N + vp_factorial(D, p) + 2;
    const long Nc = W - vp_factorial(D, p);
    const long Dt = D + (W * (p - 1) + (p - 3)) / (p - 2) + 1;
    const mpz_class mW = ppow(p, W);
    const mpz_class mBig = ppow(p, W + Dt);
    const auto B = bernoulli_numbers(Dt + 2);
    const mpz_class lg = log1p_mod(mpz_class(p), p, W + 1) / p;
    const mpz_class lg_inv = mod_inverse(lg, mW);
    const mpz_class pm1_inv = mod_inverse(mpz_class(p - 1), mW);

    std::vector<std::vector<mpz_class>> coeffs(p - 1);
    std::vector<mpz_class> teich(p - 1);

    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) if (policy == ExecPolicy::Parallel)
    for (long a = 1; a < p; ++a) {
      try {
        teich[a - 1] = teichmuller_residue(a, p, W);
        // l(a + p t) = sum lambda_n t^n
        std::vector<mpz_class> lam(Dt + 1, 0);
        mpz_class apm1;
        mpz_ui_pow_ui(apm1.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(p - 1));
        mpz_class La = log1p_mod(apm1 - 1, p, W + 1) / p;
        lam[0] = fmod(La * pm1_inv * lg_inv, mW);
        const mpz_class ainv = mod_inverse(mpz_class(a), mW);
        mpz_class ainv_pow = 1;
        for (long n = 1; n <= Dt; ++n) {
            ainv_pow = fmod(ainv_pow * ainv, mW);
            long v = vp_long(n, p);
            long e = n - 1 - v;
            if (e >= W) continue;
            mpz_class t = ppow(p, e) * mod_inverse(mpz_class(n / ipow(p, v)), mW) * ainv_pow * lg_inv;
            lam[n] = fmod(n % 2 == 1 ? t : -t, mW);
        }
        // mom_n = int_{a+pZ_p} ((x-a)/p)^n dE_c
        std::vector<mpz_class> Mres(Dt + 1);
        for (long l = 0; l <= Dt; ++l) Mres[l] = rational_mod(moment_from_table(B, p, c, a, l), p, W + Dt);
        std::vector<mpz_class> mom(Dt + 1);
        for (long n = 0; n <= Dt; ++n) {
            mpz_class acc = 0, binom = 1, negapow;
            // sum_l C(n,l) (-a)^(n-l) M_l
            for (long l = 0; l <= n; ++l) {
                mpz_class pw;
                mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(n - l));
                if ((n - l) % 2) pw = -pw;
                acc += binom * pw * Mres[l];
                binom = binom * (n - l) / (l + 1);
            }
            acc = fmod(acc, mBig);
            if (!mpz_divisible_p(acc.get_mpz_t(), ppow(p, n).get_mpz_t()))
                throw std::logic_error("Mazur measure moment is not p-integral");
            mom[n] = fmod(acc / ppow(p, n), mW);
        }
        // Mahler coefficients C_m = sum_n [binom(l(t), m)]_n mom_n
        std::vector<mpz_class> P(Dt + 1, 0);
        P[0] = 1;
        std::vector<mpz_class> out(D + 1);
        mpz_class fact = 1;
        for (long m = 0; m <= D; ++m) {
            if (m > 0) fact *= m;
            mpz_class acc = 0;
            for (long n = 0; n <= Dt; ++n)
                if (P[n] != 0) acc += P[n] * mom[n];
            acc = fmod(acc, mW);
            long vf = vp_factorial(m, p);
            mpz_class pf = ppow(p, vf);
            if (!mpz_divisible_p(acc.get_mpz_t(), pf.get_mpz_t()))
                throw std::logic_error("Mahler coefficient is not integral");
            mpz_class unit_fact = fact / pf;
            out[m] = fmod((acc / pf) * mod_inverse(unit_fact, ppow(p, Nc)), ppow(p, Nc));
            // P <- P * (l(t) - m)
            std::vector<mpz_class> Q(Dt + 1, 0);
            for (long i = 0; i <= Dt; ++i) {
                if (P[i] == 0) continue;
                Q[i] += P[i] * (lam[0] - m);
                for (long k = 1; i + k <= Dt; ++k)
                    if (lam[k] != 0) mpz_addmul(Q[i + k].get_mpz_t(), P[i].get_mpz_t(), lam[k].get_mpz_t());
            }
            for (auto& q : Q) q = fmod(q, mW);
            P = std::move(Q);
        }
        coeffs[a - 1] = std::move(out);
      } catch (...) {
#pragma omp critical(lpadic_mazur_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    std::vector<AmiceSeries> branches;
    branches.reserve(p - 1);
    for (auto& c0 : coeffs) branches.emplace_back(p, Nc, std::move(c0));
    return UnitsMeasure(p, Nc, std::move(branches), std::move(teich), W);
}

}  // namespace lpadic
