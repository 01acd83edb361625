#include "lpadic/padic.hpp"

#include <algorithm>
#include <cstdlib>

#include "lpadic/errors.hpp"

namespace lpadic {

std::string HalfInt::str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

HalfInt HalfInt::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return HalfInt(std::stol(s));
        if (s.substr(slash + 1) != "2") throw SchemaError("half-integer denominator must be 2: " + s);
        return from_twice(std::stol(s.substr(0, slash)));
    } catch (const std::logic_error&) {
        throw SchemaError("not a half-integer: " + s);
    }
}

mpq_class make_rat(const mpz_class& n, const mpz_class& d) {
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long vp(const mpz_class& x, long p) {
    if (x == 0) throw DomainError("valuation of zero");
    mpz_class y = abs(x);
    long v = 0;
    while (mpz_divisible_ui_p(y.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(y.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(p));
        ++v;
    }
    return v;
}

long vp(const mpq_class& x, long p) {
    return vp(mpz_class(x.get_num()), p) - vp(mpz_class(x.get_den()), p);
}

mpz_class ppow(long p, long e) {
    if (e < 0) throw DomainError("negative exponent in ppow");
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    return r;
}

mpz_class mod_inverse(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw DomainError("not invertible modulo " + m.get_str());
    return r;
}

mpz_class rational_mod(const mpq_class& x, long p, long N) {
    mpz_class m = ppow(p, N);
    mpz_class den = x.get_den();
    if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p)))
        throw DomainError("rational " + x.get_str() + " is not p-integral");
    mpz_class r = mpz_class(x.get_num()) * mod_inverse(den, m);
    mpz_class out;
    mpz_fdiv_r(out.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    return out;
}

namespace {

void check_prime(long p, long N) {
    if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
    if (N < 1) throw DomainError("precision must be positive");
}

mpz_class fmod(const mpz_class& x, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace

PadicScalar PadicScalar::from_integer(long p, long N, const mpz_class& x) {
    check_prime(p, N);
    if (x == 0) return zero(p, N, HalfInt(N));
    long v = vp(x, p);
    mpz_class u = x / ppow(p, v);
    return from_parts(p, N, HalfInt(v), u);
}

PadicScalar PadicScalar::from_rational(long p, long N, const mpq_class& x) {
    check_prime(p, N);
    if (x == 0) return zero(p, N, HalfInt(N));
    long vn = vp(mpz_class(x.get_num()), p), vd = vp(mpz_class(x.get_den()), p);
    mpq_class u(mpz_class(x.get_num()) / ppow(p, vn), mpz_class(x.get_den()) / ppow(p, vd));
    u.canonicalize();
    PadicScalar r;
    r.p_ = p;
    r.N_ = N;
    r.val_ = HalfInt(vn - vd);
    r.unit_ = rational_mod(u, p, N);
    return r;
}

PadicScalar PadicScalar::from_parts(long p, long N, HalfInt val, const mpz_class& unit) {
    check_prime(p, N);
    if (unit == 0) throw DomainError("unit part is zero; use PadicScalar::zero");
    if (mpz_divisible_ui_p(unit.get_mpz_t(), static_cast<unsigned long>(p)))
        throw DomainError("unit part divisible by p");
    PadicScalar r;
    r.p_ = p;
    r.N_ = N;
    r.val_ = val;
    r.unit_ = fmod(unit, ppow(p, N));
    return r;
}

PadicScalar PadicScalar::zero(long p, long N, HalfInt abs_prec) {
    check_prime(p, N);
    PadicScalar r;
    r.p_ = p;
    r.N_ = N;
    r.val_ = abs_prec;
    r.unit_ = 0;
    r.zero_ = true;
    return r;
}

HalfInt PadicScalar::absolute_precision() const {
    return zero_ ? val_ : val_ + HalfInt(N_);
}

std::string PadicScalar::valuation_str() const {
    return zero_ ? ">= " + val_.str() : val_.str();
}

mpz_class PadicScalar::residue(long k) const {
    if (zero_) {
        if (val_ < HalfInt(k)) throw PrecisionError("zero not known to the requested precision");
        return 0;
    }
    if (!val_.is_integer() || val_ < HalfInt(0))
        throw DomainError("residue requires an integral element");
    if (absolute_precision() < HalfInt(k)) throw PrecisionError("residue beyond known precision");
    return fmod(ppow(p_, val_.as_integer()) * unit_, ppow(p_, k));
}

void PadicScalar::check_compatible(const PadicScalar& o) const {
    if (p_ != o.p_) throw DomainError("mixing different primes");
}

void PadicScalar::normalize() {
    if (!zero_) unit_ = fmod(unit_, ppow(p_, N_));
}

PadicScalar PadicScalar::operator+(const PadicScalar& o) const {
    check_compatible(o);
    const bool mixed = N_ != o.N_ || truncated_ || o.truncated_;
    HalfInt A = std::min(absolute_precision(), o.absolute_precision());
    if (zero_ || o.zero_) {
        const PadicScalar& x = zero_ ? o : *this;
        if (x.zero_) {
            PadicScalar z = zero(p_, std::min(N_, o.N_), A);
            z.truncated_ = mixed;
            return z;
        }
        if (A >= x.absolute_precision()) return x;
        if ((A - x.val_).twice() % 2 != 0) throw DomainError("adding elements of different valuation parity");
        if (A <= x.val_) return zero(p_, x.N_, A);
        PadicScalar r = x;
        r.N_ = (A - x.val_).as_integer();
        r.truncated_ = true;
        r.normalize();
        return r;
    }
    if ((val_ - o.val_).twice() % 2 != 0) throw DomainError("adding elements of different valuation parity");
    HalfInt v = std::min(val_, o.val_);
    long rel = (A - v).as_integer();
    mpz_class s = unit_ * ppow(p_, (val_ - v).as_integer()) + o.unit_ * ppow(p_, (o.val_ - v).as_integer());
    s = fmod(s, ppow(p_, rel));
    if (s == 0) {
        PadicScalar z = zero(p_, std::min(N_, o.N_), A);
        z.truncated_ = mixed;
        return z;
    }
    long t = vp(s, p_);
    PadicScalar r;
    r.p_ = p_;
    r.val_ = v + HalfInt(t);
    r.N_ = rel - t;
    r.unit_ = s / ppow(p_, t);
    r.truncated_ = mixed || r.N_ < std::max(N_, o.N_);
    r.normalize();
    return r;
}

PadicScalar PadicScalar::operator-() const {
    PadicScalar r = *this;
    if (!zero_) {
        r.unit_ = -r.unit_;
        r.normalize();
    }
    return r;
}

PadicScalar PadicScalar::operator-(const PadicScalar& o) const { return *this + (-o); }

PadicScalar PadicScalar::operator*(const PadicScalar& o) const {
    check_compatible(o);
    long N = std::min(N_, o.N_);
    bool tr = N_ != o.N_ || truncated_ || o.truncated_;
    if (zero_ || o.zero_) {
        HalfInt a = zero_ && o.zero_ ? val_ + o.val_ : (zero_ ? val_ + o.val_ : o.val_ + val_);
        PadicScalar z = zero(p_, N, a);
        z.truncated_ = tr;
        return z;
    }
    PadicScalar r;
    r.p_ = p_;
    r.N_ = N;
    r.val_ = val_ + o.val_;
    r.unit_ = unit_ * o.unit_;
    r.truncated_ = tr;
    r.normalize();
    return r;
}

PadicScalar PadicScalar::inverse() const {
    if (zero_) throw DomainError("inverse of zero");
    PadicScalar r = *this;
    r.val_ = -val_;
    r.unit_ = mod_inverse(unit_, ppow(p_, N_));
    return r;
}

PadicScalar PadicScalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    PadicScalar r = one(p_, N_);
    r.truncated_ = truncated_;
    if (e == 0) return r;
    if (zero_) return zero(p_, N_, val_ * e);
    r.val_ = val_ * e;
    mpz_powm_ui(r.unit_.get_mpz_t(), unit_.get_mpz_t(), static_cast<unsigned long>(e),
                ppow(p_, N_).get_mpz_t());
    return r;
}

PadicScalar PadicScalar::with_precision(long N) const {
    if (N > N_) throw PrecisionError("cannot raise precision of a p-adic scalar");
    PadicScalar r = *this;
    r.N_ = N;
    if (zero_) r.val_ = std::min(val_, absolute_precision());
    r.normalize();
    return r;
}

bool PadicScalar::congruent(const PadicScalar& o) const {
    if (p_ != o.p_) return false;
    try {
        return (*this - o).is_zero();
    } catch (const DomainError&) {
        return false;
    }
}

bool PadicScalar::operator==(const PadicScalar& o) const {
    return p_ == o.p_ && N_ == o.N_ && zero_ == o.zero_ && val_ == o.val_ && unit_ == o.unit_;
}

mpz_class teichmuller_residue(const mpz_class& a, long p, long N) {
    if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
    if (N < 1) throw DomainError("precision must be positive");
    if (mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(p)))
        throw DomainError("Teichmuller lift of a non-unit");
    const mpz_class m = ppow(p, N);
    mpz_class x = fmod(a, m);
    // Newton on f(x) = x^(p-1) - 1; each step doubles the number of correct digits.
    for (long prec = 1; prec < 2 * N; prec *= 2) {
        mpz_class xp2, f, df;
        mpz_powm_ui(xp2.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p - 2), m.get_mpz_t());
        f = fmod(xp2 * x - 1, m);
        df = fmod(xp2 * (p - 1), m);
        x = fmod(x - f * mod_inverse(df, m), m);
    }
    return x;
}

PadicScalar teichmuller(const mpz_class& a, long p, long N) {
    return PadicScalar::from_integer(p, N, teichmuller_residue(a, p, N));
}

}  // namespace lpadic
