#include "lpadic/cyclo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "lpadic/errors.hpp"

namespace lpadic {

long gcd_long(long a, long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

long euler_phi(long m) {
    if (m < 1) throw DomainError("phi of non-positive integer");
    long r = m;
    for (long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            while (m % d == 0) m /= d;
            r -= r / d;
        }
    }
    if (m > 1) r -= r / m;
    return r;
}

namespace {

struct Tables {
    long M = 1;
    long phi = 1;
    std::vector<long> poly;                 // Phi_M
    std::vector<std::vector<long>> powers;  // x^k mod Phi_M, k = 0..M-1
};

std::vector<long> poly_divexact(std::vector<long> num, const std::vector<long>& den) {
    // den monic
    const size_t dn = den.size() - 1;
    std::vector<long> q(num.size() - dn, 0);
    for (size_t i = num.size(); i-- > dn;) {
        long c = num[i];
        q[i - dn] = c;
        if (c == 0) continue;
        for (size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    return q;
}

std::shared_ptr<const Tables> build(long M);

std::shared_ptr<const Tables> tables(long M) {
    static std::mutex mu;
    static std::map<long, std::shared_ptr<const Tables>> cache;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(M);
        if (it != cache.end()) return it->second;
    }
    auto t = build(M);
    std::lock_guard<std::mutex> lk(mu);
    return cache.emplace(M, t).first->second;
}

std::shared_ptr<const Tables> build(long M) {
    if (M < 1) throw DomainError("conductor must be positive");
    auto t = std::make_shared<Tables>();
    t->M = M;
    t->phi = euler_phi(M);
    std::vector<long> poly(M + 1, 0);
    poly[0] = -1;
    poly[M] = 1;
    for (long d = 1; d < M; ++d)
        if (M % d == 0) poly = poly_divexact(poly, tables(d)->poly);
    t->poly = poly;
    const long phi = t->phi;
    t->powers.assign(M, std::vector<long>(phi, 0));
    std::vector<long> cur(phi, 0);
    cur[0] = 1;
    for (long k = 0; k < M; ++k) {
        t->powers[k] = cur;
        // multiply by x
        long top = cur[phi - 1];
        for (long i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        for (long i = 0; i < phi; ++i) cur[i] -= top * poly[i];
    }
    return t;
}

long mod_pos(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(long M) { return tables(M)->poly; }

std::vector<long> cyclotomic_power(long M, long k) { return tables(M)->powers[mod_pos(k, M)]; }

CycloRational::CycloRational(long M, std::vector<mpz_class> num, mpz_class den)
    : M_(M), num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

CycloRational::CycloRational(const mpq_class& q, long M) : M_(M) {
    num_.assign(euler_phi(M), 0);
    num_[0] = q.get_num();
    den_ = q.get_den();
    canonicalize();
}

void CycloRational::canonicalize() {
    if (den_ == 0) throw DomainError("zero denominator");
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    mpz_class g = den_;
    for (const auto& c : num_) {
        if (g == 1) break;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (g != 1) {
        for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

CycloRational CycloRational::zeta(long M, long k) {
    auto t = tables(M);
    const auto& row = t->powers[mod_pos(k, M)];
    std::vector<mpz_class> num(row.begin(), row.end());
    return CycloRational(M, std::move(num), 1);
}

CycloRational CycloRational::from_coeffs(long M, const std::vector<mpq_class>& coeffs) {
    if (static_cast<long>(coeffs.size()) != euler_phi(M))
        throw DomainError("coefficient vector length must equal phi(M)");
    mpz_class den = 1;
    for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> num;
    num.reserve(coeffs.size());
    for (const auto& c : coeffs) num.push_back(mpz_class(c.get_num()) * (den / mpz_class(c.get_den())));
    return CycloRational(M, std::move(num), den);
}

std::vector<mpq_class> CycloRational::coeffs() const {
    std::vector<mpq_class> out;
    out.reserve(num_.size());
    for (const auto& c : num_) {
        mpq_class q(c, den_);
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

mpq_class CycloRational::coeff(long i) const {
    mpq_class q(num_.at(i), den_);
    q.canonicalize();
    return q;
}

bool CycloRational::is_zero() const {
    for (const auto& c : num_)
        if (c != 0) return false;
    return true;
}

bool CycloRational::is_rational() const {
    for (size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return false;
    return true;
}

mpq_class CycloRational::rational_value() const {
    if (!is_rational()) throw DomainError("cyclotomic element is not rational");
    return coeff(0);
}

CycloRational CycloRational::promote(long L) const {
    if (L == M_) return *this;
    if (L % M_ != 0) throw DomainError("cannot embed Q(zeta_" + std::to_string(M_) + ") into Q(zeta_" +
                                       std::to_string(L) + ")");
    auto t = tables(L);
    const long step = L / M_;
    std::vector<mpz_class> num(t->phi, 0);
    for (size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        const auto& row = t->powers[(static_cast<long>(i) * step) % L];
        for (long j = 0; j < t->phi; ++j)
            if (row[j]) num[j] += num_[i] * row[j];
    }
    return CycloRational(L, std::move(num), den_);
}

namespace {

long common_conductor(long a, long b) { return lcm_long(a, b); }

}  // namespace

CycloRational CycloRational::operator+(const CycloRational& o) const {
    if (M_ != o.M_) {
        long L = common_conductor(M_, o.M_);
        return promote(L) + o.promote(L);
    }
    std::vector<mpz_class> num(num_.size());
    mpz_class den = den_ * o.den_;
    if (den_ == o.den_) {
        den = den_;
        for (size_t i = 0; i < num.size(); ++i) num[i] = num_[i] + o.num_[i];
    } else {
        for (size_t i = 0; i < num.size(); ++i) num[i] = num_[i] * o.den_ + o.num_[i] * den_;
    }
    return CycloRational(M_, std::move(num), den);
}

CycloRational CycloRational::operator-() const {
    CycloRational r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

CycloRational CycloRational::operator-(const CycloRational& o) const { return *this + (-o); }

CycloRational CycloRational::operator*(const CycloRational& o) const {
    if (M_ != o.M_) {
        long L = common_conductor(M_, o.M_);
        return promote(L) * o.promote(L);
    }
    auto t = tables(M_);
    const long phi = t->phi;
    std::vector<mpz_class> prod(2 * phi - 1, 0);
    for (long i = 0; i < phi; ++i) {
        if (num_[i] == 0) continue;
        for (long j = 0; j < phi; ++j)
            if (o.num_[j] != 0) mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
    }
    std::vector<mpz_class> num(prod.begin(), prod.begin() + phi);
    for (long k = phi; k < 2 * phi - 1; ++k) {
        if (prod[k] == 0) continue;
        const auto& row = t->powers[k % M_];
        for (long j = 0; j < phi; ++j)
            if (row[j]) num[j] += prod[k] * row[j];
    }
    return CycloRational(M_, std::move(num), den_ * o.den_);
}

CycloRational CycloRational::scale(const mpq_class& q) const {
    std::vector<mpz_class> num(num_.size());
    for (size_t i = 0; i < num.size(); ++i) num[i] = num_[i] * mpz_class(q.get_num());
    return CycloRational(M_, std::move(num), den_ * mpz_class(q.get_den()));
}

CycloRational operator*(const mpq_class& q, const CycloRational& x) { return x.scale(q); }

CycloRational CycloRational::galois(long a) const {
    if (gcd_long(a, M_) != 1) throw DomainError("Galois exponent not coprime to conductor");
    auto t = tables(M_);
    std::vector<mpz_class> num(t->phi, 0);
    for (long i = 0; i < degree(); ++i) {
        if (num_[i] == 0) continue;
        const auto& row = t->powers[mod_pos(a * i, M_)];
        for (long j = 0; j < t->phi; ++j)
            if (row[j]) num[j] += num_[i] * row[j];
    }
    return CycloRational(M_, std::move(num), den_);
}

namespace {

// Single-term elements c*zeta^k are inverted directly.
bool as_monomial(const CycloRational& x, long& k, mpq_class& c) {
    const long M = x.conductor();
    if (x.is_zero()) return false;
    if (x.is_rational()) {
        k = 0;
        c = x.coeff(0);
        return true;
    }
    long nz = 0;
    for (const auto& v : x.numerators())
        if (v != 0) ++nz;
    if (nz != 1) {
        // zeta^k for k >= phi has several terms; look it up.
        for (long e = 1; e < M; ++e) {
            CycloRational z = CycloRational::zeta(M, e);
            long j = 0;
            while (z.numerators()[j] == 0) ++j;
            mpq_class ratio(x.numerators()[j], x.denominator());
            ratio.canonicalize();
            if (z.scale(ratio) == x) {
                k = e;
                c = ratio;
                return true;
            }
        }
        return false;
    }
    for (long i = 0; i < x.degree(); ++i)
        if (x.numerators()[i] != 0) {
            k = i;
            c = x.coeff(i);
        }
    return true;
}

}  // namespace

mpq_class CycloRational::norm() const {
    CycloRational acc(mpq_class(1), M_);
    for (long a = 1; a <= M_; ++a)
        if (gcd_long(a, M_) == 1 && (a < M_ || M_ == 1)) acc = acc * galois(a);
    return acc.rational_value();
}

CycloRational CycloRational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero cyclotomic element");
    if (is_rational()) return CycloRational(1 / coeff(0), M_);
    long k = 0;
    mpq_class c;
    if (as_monomial(*this, k, c)) return zeta(M_, -k).scale(1 / c);
    // x^{-1} = (product of the other conjugates) / norm.
    CycloRational acc(mpq_class(1), M_);
    for (long a = 2; a < M_; ++a)
        if (gcd_long(a, M_) == 1) acc = acc * galois(a);
    mpq_class n = (acc * *this).rational_value();
    if (n == 0) throw DomainError("zero divisor in cyclotomic inversion");
    return acc.scale(1 / n);
}

CycloRational CycloRational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloRational r(mpq_class(1), M_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool CycloRational::operator==(const CycloRational& o) const {
    if (M_ != o.M_) {
        long L = common_conductor(M_, o.M_);
        return promote(L) == o.promote(L);
    }
    return den_ == o.den_ && num_ == o.num_;
}

std::complex<double> CycloRational::evaluate() const {
    std::complex<double> acc = 0;
    const double d = den_.get_d();
    for (long i = 0; i < degree(); ++i) {
        double ang = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(M_);
        acc += (num_[i].get_d() / d) * std::polar(1.0, ang);
    }
    return acc;
}

std::string CycloRational::str() const {
    std::ostringstream os;
    bool first = true;
    for (long i = 0; i < degree(); ++i) {
        if (num_[i] == 0) continue;
        mpq_class q(num_[i], den_);
        q.canonicalize();
        if (!first) os << (q > 0 ? " + " : " - ");
        else if (q < 0) os << "-";
        mpq_class a = abs(q);
        if (i == 0) os << a.get_str();
        else {
            if (a != 1) os << a.get_str() << "*";
            os << "z" << M_;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return first ? "0" : os.str();
}

}  // namespace lpadic
