#include "lpadic/local_factors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "lpadic/errors.hpp"
#include "lpadic/padic.hpp"

namespace lpadic {

namespace {

long ipow(long b, long e) {
    long r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

long powmod_long(long b, long e, long m) {
    long r = 1 % m;
    b %= m;
    if (b < 0) b += m;
    while (e > 0) {
        if (e & 1) r = static_cast<long>((__int128)r * b % m);
        b = static_cast<long>((__int128)b * b % m);
        e >>= 1;
    }
    return r;
}

long pmod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

// Discrete logarithms base g on (Z/p^c)^x; -1 on non-units.
const std::vector<long>& dlog_table(long p, long c) {
    static std::mutex mu;
    static std::map<std::pair<long, long>, std::vector<long>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, c);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    long m = ipow(p, c);
    std::vector<long> t(m, -1);
    long g = primitive_root_mod_p2(p);
    long phi = m / p * (p - 1);
    long x = 1 % m;
    for (long k = 0; k < phi; ++k) {
        t[x] = k;
        x = static_cast<long>((__int128)x * g % m);
    }
    return cache.emplace(key, std::move(t)).first->second;
}

mpq_class q_pow(long q, long e) {
    mpz_class b = 1;
    for (long i = 0; i < std::abs(e); ++i) b *= q;
    return e >= 0 ? mpq_class(b) : mpq_class(1, b);
}

using Poly = std::vector<CycloRational>;

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, CycloRational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

void trim(Poly& a) {
    while (a.size() > 1 && a.back().is_zero()) a.pop_back();
}

Poly binomial_factor(const CycloRational& gamma, long k) {
    Poly f(k + 1, CycloRational(0));
    f[0] = 1;
    f[k] = -gamma;
    return f;
}

bool perfect_square(long q, long& root) {
    long r = 0;
    while ((r + 1) * (r + 1) <= q) ++r;
    root = r;
    return r * r == q;
}

// q^{E}, E a half-integer, as a + b sqrt(q).
QuadCyclo q_half_power(long q, HalfInt E) {
    if (E.is_integer()) return {q, CycloRational(q_pow(q, E.as_integer())), CycloRational(0)};
    long root = 0;
    if (perfect_square(q, root)) {
        mpq_class v = q_pow(root, E.twice());
        return {q, CycloRational(v), CycloRational(0)};
    }
    long e = (E - HalfInt::from_twice(1)).as_integer();
    return {q, CycloRational(0), CycloRational(q_pow(q, e))};
}

}  // namespace

// ---------------------------------------------------------------------------

long primitive_root_mod_p2(long p) {
    if (p < 3 || !is_prime(p)) throw DomainError("primitive root: p must be an odd prime");
    long m = p * p;
    std::vector<long> primes;
    long t = p - 1;
    for (long d = 2; d * d <= t; ++d)
        if (t % d == 0) {
            primes.push_back(d);
            while (t % d == 0) t /= d;
        }
    if (t > 1) primes.push_back(t);
    for (long g = 2; g < m; ++g) {
        if (g % p == 0) continue;
        bool ok = true;
        for (long q : primes)
            if (powmod_long(g, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok && powmod_long(g, p - 1, m) != 1) return g;
    }
    throw DomainError("primitive root not found");
}

LocalCharacter LocalCharacter::unramified(long q, const CycloRational& value) {
    if (q < 2) throw DomainError("local character: q must be >= 2");
    if (value.is_zero()) throw DomainError("local character: value at uniformizer must be nonzero");
    LocalCharacter x;
    x.q_ = q;
    x.value_ = value;
    return x;
}

LocalCharacter LocalCharacter::ramified(long p, const CycloRational& value, long conductor, long j) {
    if (conductor < 0) throw DomainError("local character: negative conductor");
    if (conductor == 0) return unramified(p, value);
    if (p < 3 || !is_prime(p)) throw DomainError("ramified local character needs an odd prime residue field");
    if (value.is_zero()) throw DomainError("local character: value at uniformizer must be nonzero");
    LocalCharacter x;
    x.q_ = p;
    x.value_ = value;
    x.c_ = conductor;
    x.j_ = j;
    x.reduce();
    return x;
}

void LocalCharacter::reduce() {
    if (c_ == 0) {
        j_ = 0;
        return;
    }
    long phi = ipow(q_, c_ - 1) * (q_ - 1);
    j_ = pmod(j_, phi);
    if (j_ == 0) {
        c_ = 0;
        return;
    }
    while (c_ > 1 && j_ % q_ == 0) {
        j_ /= q_;
        --c_;
    }
}

CycloRational LocalCharacter::on_unit(long a) const {
    if (c_ == 0) {
        if (a % q_ == 0 && q_ > 1 && is_prime(q_)) throw DomainError("character evaluated at a non-unit");
        return CycloRational(1);
    }
    long m = ipow(q_, c_);
    long k = dlog_table(q_, c_)[pmod(a, m)];
    if (k < 0) throw DomainError("character evaluated at a non-unit");
    long phi = m / q_ * (q_ - 1);
    // value lives in Q(zeta_ord), ord the order of xi
    long g = gcd_long(j_, phi);
    long ord = phi / g;
    long e = pmod(k * (j_ / g), ord);
    if (ord <= 2) return CycloRational(e == 0 ? 1 : -1);
    return CycloRational::zeta(ord, e);
}

long LocalCharacter::sign() const { return (j_ % 2 == 0) ? 1 : -1; }

std::vector<std::pair<long, CycloRational>> LocalCharacter::unit_table() const {
    std::vector<std::pair<long, CycloRational>> out;
    if (c_ == 0) return out;
    long m = ipow(q_, c_);
    for (long a = 1; a < m; ++a)
        if (a % q_ != 0) out.emplace_back(a, on_unit(a));
    return out;
}

LocalCharacter LocalCharacter::operator*(const LocalCharacter& o) const {
    if (q_ != o.q_) throw DomainError("local characters over different fields");
    long C = std::max(c_, o.c_);
    LocalCharacter r;
    r.q_ = q_;
    r.value_ = value_ * o.value_;
    r.c_ = C;
    long j1 = c_ == 0 ? 0 : j_ * ipow(q_, C - c_);
    long j2 = o.c_ == 0 ? 0 : o.j_ * ipow(q_, C - o.c_);
    r.j_ = j1 + j2;
    r.reduce();
    return r;
}

LocalCharacter LocalCharacter::inverse() const {
    LocalCharacter r = *this;
    r.value_ = value_.inverse();
    r.j_ = -j_;
    r.reduce();
    return r;
}

bool LocalCharacter::operator==(const LocalCharacter& o) const {
    return q_ == o.q_ && c_ == o.c_ && j_ == o.j_ && value_ == o.value_;
}

CycloRational gauss_sum(const LocalCharacter& xi) {
    if (xi.is_unramified()) return CycloRational(1);
    long p = xi.q();
    long m = ipow(p, xi.conductor());
    CycloRational s(0);
    for (const auto& [a, v] : xi.unit_table()) s += v * CycloRational::zeta(m, a);
    return s;
}

// ---------------------------------------------------------------------------

QuadCyclo QuadCyclo::operator*(const QuadCyclo& o) const {
    return {q, a * o.a + (b * o.b).scale(mpq_class(q)), a * o.b + b * o.a};
}

QuadCyclo QuadCyclo::operator+(const QuadCyclo& o) const { return {q, a + o.a, b + o.b}; }

QuadCyclo QuadCyclo::inverse() const {
    CycloRational den = a * a - (b * b).scale(mpq_class(q));
    if (den.is_zero()) throw DomainError("division by zero in Q(zeta, sqrt q)");
    CycloRational inv = den.inverse();
    return {q, a * inv, -(b * inv)};
}

std::string QuadCyclo::str() const {
    if (b.is_zero()) return a.str();
    std::ostringstream os;
    os << "(" << a.str() << ") + (" << b.str() << ")*sqrt(" << q << ")";
    return os.str();
}

// ---------------------------------------------------------------------------

LocalFactorFn::LocalFactorFn(long q, HalfInt v0) : q_(q), v0_(v0) {}

LocalFactorFn LocalFactorFn::constant_fn(long q, HalfInt v0, const CycloRational& c) {
    LocalFactorFn f(q, v0);
    f.const_ = c;
    return f;
}

LocalFactorFn LocalFactorFn::q_power(long q, HalfInt v0, long d, const Arg& arg) {
    // q^{-d(sigma s + h)} = T^{d sigma} q^{d sigma v0 - d h}
    HalfInt e = v0 * (d * arg.sigma) - arg.h * d;
    if (!e.is_integer()) throw DomainError("q-power is not a Laurent monomial in T");
    LocalFactorFn f(q, v0);
    f.const_ = CycloRational(q_pow(q, e.as_integer()));
    f.texp_ = d * arg.sigma;
    return f;
}

LocalFactorFn LocalFactorFn::euler(long q, HalfInt v0, const CycloRational& gamma, const Arg& arg, long mult) {
    HalfInt e = v0 * arg.sigma - arg.h;
    if (!e.is_integer()) throw DomainError("Euler factor is not a polynomial in T");
    LocalFactorFn f(q, v0);
    f.add_factor(gamma * CycloRational(q_pow(q, e.as_integer())), arg.sigma, mult);
    return f;
}

void LocalFactorFn::add_factor(const CycloRational& gamma, long k, long mult) {
    if (mult == 0 || gamma.is_zero()) return;
    if (k == 0) {
        CycloRational v = CycloRational(1) - gamma;
        if (v.is_zero()) {
            if (mult < 0) throw DomainError("local factor has an identically infinite term");
            const_ = CycloRational(0);
            return;
        }
        const_ *= v.pow(mult);
        return;
    }
    CycloRational g = gamma;
    if (k < 0) {
        // 1 - g T^k = -g T^k (1 - g^{-1} T^{-k})
        const_ *= (-g).pow(mult);
        texp_ += k * mult;
        g = g.inverse();
        k = -k;
    }
    for (auto it = factors_.begin(); it != factors_.end(); ++it) {
        if (it->k == k && it->gamma == g) {
            it->mult += mult;
            if (it->mult == 0) factors_.erase(it);
            return;
        }
    }
    factors_.push_back({g, k, mult});
}

void LocalFactorFn::check_same(const LocalFactorFn& o) const {
    if (q_ != o.q_ || v0_ != o.v0_) throw DomainError("local factors over different variables");
}

LocalFactorFn LocalFactorFn::operator*(const LocalFactorFn& o) const {
    check_same(o);
    LocalFactorFn r = *this;
    r.const_ *= o.const_;
    r.texp_ += o.texp_;
    for (const auto& f : o.factors_) r.add_factor(f.gamma, f.k, f.mult);
    return r;
}

LocalFactorFn LocalFactorFn::inverse() const {
    if (const_.is_zero()) throw DomainError("inverse of the zero local factor");
    LocalFactorFn r(q_, v0_);
    r.const_ = const_.inverse();
    r.texp_ = -texp_;
    for (const auto& f : factors_) r.factors_.push_back({f.gamma, f.k, -f.mult});
    return r;
}

std::vector<CycloRational> LocalFactorFn::numerator() const {
    Poly p{const_};
    for (const auto& f : factors_)
        for (long i = 0; i < f.mult; ++i) p = poly_mul(p, binomial_factor(f.gamma, f.k));
    trim(p);
    return p;
}

std::vector<CycloRational> LocalFactorFn::denominator() const {
    Poly p{CycloRational(1)};
    for (const auto& f : factors_)
        for (long i = 0; i < -f.mult; ++i) p = poly_mul(p, binomial_factor(f.gamma, f.k));
    trim(p);
    return p;
}

bool LocalFactorFn::operator==(const LocalFactorFn& o) const {
    check_same(o);
    Poly l = poly_mul(numerator(), o.denominator());
    Poly r = poly_mul(o.numerator(), denominator());
    trim(l);
    trim(r);
    bool lz = l.size() == 1 && l[0].is_zero();
    bool rz = r.size() == 1 && r[0].is_zero();
    if (lz || rz) return lz && rz;
    long t = std::min(texp_, o.texp_);
    l.insert(l.begin(), texp_ - t, CycloRational(0));
    r.insert(r.begin(), o.texp_ - t, CycloRational(0));
    return l == r;
}

std::vector<CycloRational> LocalFactorFn::series(long D) const {
    if (texp_ < 0) throw DomainError("local factor has a pole at T = 0");
    Poly num = numerator(), den = denominator();
    Poly out(D + 1, CycloRational(0));
    // out * den = T^texp * num
    for (long n = 0; n <= D; ++n) {
        CycloRational v(0);
        long i = n - texp_;
        if (i >= 0 && i < static_cast<long>(num.size())) v = num[i];
        for (long j = 1; j < static_cast<long>(den.size()) && j <= n; ++j) v -= den[j] * out[n - j];
        out[n] = v;
    }
    return out;
}

QuadCyclo LocalFactorFn::evaluate(long m) const {
    HalfInt sv = HalfInt(m) + v0_;  // T = q^{-sv}
    QuadCyclo one{q_, CycloRational(1), CycloRational(0)};
    QuadCyclo val{q_, const_, CycloRational(0)};
    val = val * q_half_power(q_, -(sv * texp_));
    for (const auto& f : factors_) {
        QuadCyclo tk = q_half_power(q_, -(sv * f.k));
        QuadCyclo term = one + QuadCyclo{q_, -f.gamma, CycloRational(0)} * tk;
        if (f.mult < 0) {
            if (term.a.is_zero() && term.b.is_zero()) throw DomainError("local factor has a pole at this point");
            term = term.inverse();
        }
        for (long i = 0; i < std::abs(f.mult); ++i) val = val * term;
    }
    return val;
}

// ---------------------------------------------------------------------------

LocalFactorFn abelian_L(const LocalCharacter& xi, HalfInt v0, const Arg& arg) {
    if (!xi.is_unramified()) return LocalFactorFn(xi.q(), v0);
    return LocalFactorFn::euler(xi.q(), v0, xi.at_uniformizer(), arg, -1);
}

LocalFactorFn abelian_epsilon(const LocalCharacter& xi, HalfInt v0, const Arg& arg) {
    long c = xi.conductor();
    if (c == 0) return LocalFactorFn(xi.q(), v0);
    CycloRational k = xi.at_uniformizer().pow(c) * gauss_sum(xi.inverse());
    return LocalFactorFn::constant_fn(xi.q(), v0, k) * LocalFactorFn::q_power(xi.q(), v0, c, arg);
}

LocalFactorFn standard_L(const std::vector<CycloRational>& satake, const LocalCharacter& twist, HalfInt v0,
                         const Arg& arg) {
    LocalFactorFn f(twist.q(), v0);
    if (!twist.is_unramified()) return f;
    for (const auto& a : satake) f = f * LocalFactorFn::euler(twist.q(), v0, a * twist.at_uniformizer(), arg, -1);
    return f;
}

LocalFactorFn d_norm_doubling(long n, const LocalCharacter& chi_plus, long eta) {
    if (n < 1) throw DomainError("d_norm: n must be positive");
    if (eta != 1 && eta != -1) throw DomainError("d_norm: eta(uniformizer) must be +1 or -1");
    long q = chi_plus.q();
    LocalFactorFn f(q, HalfInt(0));
    if (!chi_plus.is_unramified()) return f;
    for (long r = 0; r < n; ++r) {
        CycloRational g = chi_plus.at_uniformizer() * CycloRational(r % 2 == 0 ? 1 : eta);
        f = f * LocalFactorFn::euler(q, HalfInt(0), g, Arg{2, HalfInt(n - r)}, -1);
    }
    return f;
}

CycloRational d_norm_normalizer(long n, long m, const LocalCharacter& chi_plus, long eta) {
    if (n < 1) throw DomainError("d_norm: n must be positive");
    if (eta != 1 && eta != -1) throw DomainError("d_norm: eta(uniformizer) must be +1 or -1");
    CycloRational v(1);
    if (!chi_plus.is_unramified()) return v;
    long q = chi_plus.q();
    for (long r = 0; r < n; ++r) {
        CycloRational g = chi_plus.at_uniformizer() * CycloRational(r % 2 == 0 ? 1 : eta);
        CycloRational t = CycloRational(1) - g * CycloRational(q_pow(q, -(2 * m + n - r)));
        if (t.is_zero()) throw DomainError("d_norm: pole at this point");
        v *= t.inverse();
    }
    return v;
}

namespace {

void check_rep(const LocalRep& pi, const LocalCharacter& chi1, const LocalCharacter& chi2) {
    if (static_cast<long>(pi.mu_a.size()) != pi.a || static_cast<long>(pi.mu_b.size()) != pi.b)
        throw DomainError("local representation: character list lengths differ from (a, b)");
    for (const auto& m : pi.mu_a)
        if (m.q() != chi1.q()) throw DomainError("local representation: residue fields differ");
    for (const auto& m : pi.mu_b)
        if (m.q() != chi2.q()) throw DomainError("local representation: residue fields differ");
    if (chi1.q() != chi2.q()) throw DomainError("twisting characters over different fields");
}

const HalfInt kHalf = HalfInt::from_twice(1);

LocalFactorFn b_part(const LocalRep& pi, const LocalCharacter& chi2) {
    long q = chi2.q();
    LocalFactorFn f(q, kHalf);
    for (const auto& mu : pi.mu_b) {
        LocalCharacter x = mu * chi2;
        f = f * abelian_L(x, kHalf, {1, kHalf}) / abelian_epsilon(x, kHalf, {1, kHalf}) /
            abelian_L(x.inverse(), kHalf, {-1, kHalf});
    }
    return f;
}

LocalFactorFn a_L_part(const LocalRep& pi, const LocalCharacter& chi1) {
    LocalFactorFn f(chi1.q(), kHalf);
    for (const auto& mu : pi.mu_a) {
        LocalCharacter x = mu * chi1;
        f = f * abelian_L(x.inverse(), kHalf, {1, kHalf}) / abelian_L(x, kHalf, {-1, kHalf});
    }
    return f;
}

}  // namespace

LocalFactorFn modified_euler_p(const LocalRep& pi, const LocalCharacter& chi1, const LocalCharacter& chi2) {
    check_rep(pi, chi1, chi2);
    LocalFactorFn eps(chi1.q(), kHalf);
    for (const auto& mu : pi.mu_a) eps = eps * abelian_epsilon(mu * chi1, kHalf, {-1, kHalf});
    return b_part(pi, chi2) * eps * a_L_part(pi, chi1);
}

long central_sign(const LocalRep& pi, const LocalCharacter& chi1) {
    long s = 1;
    for (const auto& mu : pi.mu_a) s *= (mu * chi1).sign();
    return s;
}

LocalFactorFn modified_euler_p_alt(const LocalRep& pi, const LocalCharacter& chi1, const LocalCharacter& chi2) {
    check_rep(pi, chi1, chi2);
    LocalFactorFn eps_dual(chi1.q(), kHalf);
    for (const auto& mu : pi.mu_a) eps_dual = eps_dual * abelian_epsilon((mu * chi1).inverse(), kHalf, {1, kHalf});
    LocalFactorFn sign = LocalFactorFn::constant_fn(chi1.q(), kHalf, CycloRational(central_sign(pi, chi1)));
    return b_part(pi, chi2) * sign / eps_dual * a_L_part(pi, chi1);
}

bool euler_alt_form_identity(const LocalRep& pi, const LocalCharacter& chi1, const LocalCharacter& chi2) {
    return modified_euler_p(pi, chi1, chi2) == modified_euler_p_alt(pi, chi1, chi2);
}

std::vector<CycloRational> gj_series_oracle(const LocalCharacter& xi, long D) {
    std::vector<CycloRational> out(D + 1, CycloRational(0));
    if (!xi.is_unramified()) {
        out[0] = 1;
        return out;
    }
    CycloRational x(1);
    for (long k = 0; k <= D; ++k) {
        out[k] = x;
        x *= xi.at_uniformizer();
    }
    return out;
}

}  // namespace lpadic
