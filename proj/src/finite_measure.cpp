#include <algorithm>

#include "lpadic/errors.hpp"
#include "lpadic/measures.hpp"

namespace lpadic {

namespace {

long ipow(long b, long e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

long mod_pos(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

long dot_mod(const Point& k, const Point& g, long m) {
    long e = 0;
    for (size_t i = 0; i < k.size(); ++i) e = (e + mod_pos(k[i], m) * mod_pos(g[i], m)) % m;
    return e;
}

}  // namespace

FiniteLevelMeasure::FiniteLevelMeasure(long p, long r, long d)
    : FiniteLevelMeasure(p, r, d, std::vector<CycloRational>(ipow(ipow(p, r), d), CycloRational(0))) {}

FiniteLevelMeasure::FiniteLevelMeasure(long p, long r, long d, std::vector<CycloRational> coeffs)
    : p_(p), r_(r), d_(d), modulus_(ipow(p, r)), coeffs_(std::move(coeffs)) {
    if (!is_prime(p)) throw DomainError("measure prime must be prime");
    if (r < 0 || d < 1) throw DomainError("measure level must be >= 0 and rank >= 1");
    if (static_cast<long>(coeffs_.size()) != ipow(modulus_, d))
        throw DomainError("coefficient table has the wrong size for (Z/p^r)^d");
}

FiniteLevelMeasure FiniteLevelMeasure::point_mass(long p, long r, const Point& a) {
    FiniteLevelMeasure mu(p, r, static_cast<long>(a.size()));
    mu.set(a, CycloRational(1));
    return mu;
}

FiniteLevelMeasure FiniteLevelMeasure::uniform(long p, long r, long d, const CycloRational& c) {
    FiniteLevelMeasure mu(p, r, d);
    for (auto& x : mu.coeffs_) x = c;
    return mu;
}

long FiniteLevelMeasure::index(const Point& g) const {
    if (static_cast<long>(g.size()) != d_) throw DomainError("point has the wrong rank");
    long idx = 0;
    for (long x : g) idx = idx * modulus_ + mod_pos(x, modulus_);
    return idx;
}

Point FiniteLevelMeasure::point(long idx) const {
    Point g(d_);
    for (long i = d_ - 1; i >= 0; --i) {
        g[i] = idx % modulus_;
        idx /= modulus_;
    }
    return g;
}

CycloRational FiniteLevelMeasure::integrate(const std::vector<CycloRational>& table, long fl) const {
    if (fl > r_) throw DomainError("function level " + std::to_string(fl) + " exceeds measure level " +
                                   std::to_string(r_));
    if (fl < 0) throw DomainError("negative function level");
    const long mf = ipow(p_, fl);
    if (static_cast<long>(table.size()) != ipow(mf, d_)) throw DomainError("function table has the wrong size");
    CycloRational acc(0);
    for (long idx = 0; idx < size(); ++idx) {
        if (coeffs_[idx].is_zero()) continue;
        Point g = point(idx);
        long j = 0;
        for (long x : g) j = j * mf + x % mf;
        acc += table[j] * coeffs_[idx];
    }
    return acc;
}

CycloRational FiniteLevelMeasure::integrate(const std::function<CycloRational(const Point&)>& f) const {
    CycloRational acc(0);
    for (long idx = 0; idx < size(); ++idx)
        if (!coeffs_[idx].is_zero()) acc += f(point(idx)) * coeffs_[idx];
    return acc;
}

CycloRational FiniteLevelMeasure::integrate_additive(const Point& k) const {
    if (static_cast<long>(k.size()) != d_) throw DomainError("character has the wrong rank");
    CycloRational acc(0);
    for (long idx = 0; idx < size(); ++idx) {
        if (coeffs_[idx].is_zero()) continue;
        acc += CycloRational::zeta(modulus_, dot_mod(k, point(idx), modulus_)) * coeffs_[idx];
    }
    return acc;
}

CycloRational FiniteLevelMeasure::group_ring_evaluate(const Point& k) const {
    if (static_cast<long>(k.size()) != d_) throw DomainError("character has the wrong rank");
    // Image of sum mu(g)[g] in the group ring of Z/p^r under g -> k.g.
    std::vector<CycloRational> bucket(modulus_, CycloRational(0));
    for (long idx = 0; idx < size(); ++idx)
        if (!coeffs_[idx].is_zero()) bucket[dot_mod(k, point(idx), modulus_)] += coeffs_[idx];
    CycloRational acc(0);
    for (long e = 0; e < modulus_; ++e)
        if (!bucket[e].is_zero()) acc += bucket[e] * CycloRational::zeta(modulus_, e);
    return acc;
}

FiniteLevelMeasure FiniteLevelMeasure::pushforward(long r_new) const {
    if (r_new > r_ || r_new < 0) throw DomainError("pushforward must go to a lower level");
    FiniteLevelMeasure out(p_, r_new, d_);
    for (long idx = 0; idx < size(); ++idx) {
        Point g = point(idx);
        out.coeffs_[out.index(g)] += coeffs_[idx];
    }
    return out;
}

FiniteLevelMeasure FiniteLevelMeasure::operator+(const FiniteLevelMeasure& o) const {
    if (p_ != o.p_ || r_ != o.r_ || d_ != o.d_) throw DomainError("adding measures on different groups");
    FiniteLevelMeasure out = *this;
    for (long i = 0; i < size(); ++i) out.coeffs_[i] += o.coeffs_[i];
    return out;
}

FiniteLevelMeasure FiniteLevelMeasure::scale(const CycloRational& c) const {
    FiniteLevelMeasure out = *this;
    for (auto& x : out.coeffs_) x = x * c;
    return out;
}

bool FiniteLevelMeasure::operator==(const FiniteLevelMeasure& o) const {
    return p_ == o.p_ && r_ == o.r_ && d_ == o.d_ && coeffs_ == o.coeffs_;
}

std::vector<CycloRational> additive_character_table(long p, long fl, long d, const Point& k) {
    FiniteLevelMeasure shape(p, fl, d);
    std::vector<CycloRational> t;
    t.reserve(shape.size());
    for (long idx = 0; idx < shape.size(); ++idx)
        t.push_back(CycloRational::zeta(shape.modulus(), dot_mod(k, shape.point(idx), shape.modulus())));
    return t;
}

FiniteLevelMeasure product_measure(const FiniteLevelMeasure& a, const FiniteLevelMeasure& b) {
    if (a.prime() != b.prime() || a.level() != b.level())
        throw DomainError("product of measures needs a common prime and level");
    std::vector<CycloRational> c;
    c.reserve(a.size() * b.size());
    for (long i = 0; i < a.size(); ++i)
        for (long j = 0; j < b.size(); ++j) c.push_back(a.coeff_at(i) * b.coeff_at(j));
    return FiniteLevelMeasure(a.prime(), a.level(), a.rank() + b.rank(), std::move(c));
}

CurriedMeasure curry(const FiniteLevelMeasure& mu, long d1) {
    if (d1 < 1 || d1 >= mu.rank()) throw DomainError("curry split must leave both factors non-empty");
    CurriedMeasure out{mu.prime(), mu.level(), d1, {}};
    const long d2 = mu.rank() - d1;
    const long n2 = ipow(mu.modulus(), d2);
    const long n1 = mu.size() / n2;
    for (long i = 0; i < n1; ++i) {
        std::vector<CycloRational> c(mu.coeffs().begin() + i * n2, mu.coeffs().begin() + (i + 1) * n2);
        out.fibers.emplace_back(mu.prime(), mu.level(), d2, std::move(c));
    }
    return out;
}

FiniteLevelMeasure uncurry(const CurriedMeasure& c) {
    std::vector<CycloRational> all;
    for (const auto& f : c.fibers) all.insert(all.end(), f.coeffs().begin(), f.coeffs().end());
    return FiniteLevelMeasure(c.p, c.r, c.d1 + c.fibers.front().rank(), std::move(all));
}

FiniteLevelMeasure CurriedMeasure::integrate(const std::vector<CycloRational>& table1) const {
    if (table1.size() != fibers.size()) throw DomainError("first-factor function has the wrong size");
    FiniteLevelMeasure acc(p, r, fibers.front().rank());
    for (size_t i = 0; i < fibers.size(); ++i)
        if (!table1[i].is_zero()) acc = acc + fibers[i].scale(table1[i]);
    return acc;
}

std::optional<long> pi_valuation(const CycloRational& x, long p, long r) {
    const long m = ipow(p, r);
    if (m % x.conductor() != 0) throw DomainError("element does not lie in Q(zeta_{p^r})");
    if (x.is_zero()) return std::nullopt;
    CycloRational y = x.promote(m);
    const long phi = y.degree();
    const long vden = vp(y.denominator(), p);
    // Taylor coefficients at zeta = 1: h_j = sum_i f_i C(i, j).
    std::vector<mpz_class> row(phi, 0);  // C(i, .) built incrementally
    std::vector<mpz_class> h(phi, 0);
    for (long i = 0; i < phi; ++i) {
        for (long j = i; j >= 1; --j) row[j] += row[j - 1];
        row[0] = 1;
        if (y.numerators()[i] == 0) continue;
        for (long j = 0; j <= i; ++j) h[j] += y.numerators()[i] * row[j];
    }
    long best = 0;
    bool found = false;
    for (long j = 0; j < phi; ++j) {
        if (h[j] == 0) continue;
        long v = phi * (vp(h[j], p) - vden) + j;
        if (!found || v < best) best = v;
        found = true;
    }
    return best;
}

CongruenceResult extend_by_congruence(long p, long r, long d, const std::vector<CycloRational>& table, long a) {
    FiniteLevelMeasure shape(p, r, d);
    if (static_cast<long>(table.size()) != shape.size())
        throw DomainError("character table must cover every character of (Z/p^r)^d");
    const long m = shape.modulus();
    const long phi = r == 0 ? 1 : euler_phi(m);
    CongruenceResult res;
    for (long i = 0; i < shape.size(); ++i) {
        auto v = pi_valuation(table[i], p, r);
        if (v && *v < 0) {
            res.witness = CongruenceWitness{shape.point(i), shape.point(i), 0, *v};
            res.reason = "value at a character is not integral";
            return res;
        }
    }
    for (long i = 0; i < shape.size(); ++i) {
        Point k1 = shape.point(i);
        for (long j = i + 1; j < shape.size(); ++j) {
            Point k2 = shape.point(j);
            long t = r;
            for (long c = 0; c < d; ++c) {
                long diff = mod_pos(k1[c] - k2[c], m);
                if (diff == 0) continue;
                long tc = 0;
                while (diff % p == 0) {
                    diff /= p;
                    ++tc;
                }
                t = std::min(t, tc);
            }
            long required = ipow(p, t);
            if (a >= 0) required = std::min(required, a * phi);
            auto v = pi_valuation(table[i] - table[j], p, r);
            if (v && *v < required) {
                res.witness = CongruenceWitness{k1, k2, required, *v};
                res.reason = "congruence between characters is not reflected in their values";
                return res;
            }
        }
    }
    // Fourier inversion: mu(g) = p^{-rd} sum_k alpha(k) zeta^{-k.g}.
    std::vector<CycloRational> coeffs;
    coeffs.reserve(shape.size());
    const mpq_class inv_n(1, shape.size());
    for (long gi = 0; gi < shape.size(); ++gi) {
        Point g = shape.point(gi);
        std::vector<CycloRational> bucket(m, CycloRational(0));
        for (long ki = 0; ki < shape.size(); ++ki) {
            Point k = shape.point(ki);
            bucket[mod_pos(-dot_mod(k, g, m), m)] += table[ki];
        }
        CycloRational acc(0);
        for (long e = 0; e < m; ++e)
            if (!bucket[e].is_zero()) acc += bucket[e] * CycloRational::zeta(m, e);
        acc = acc.scale(inv_n);
        auto v = pi_valuation(acc, p, r);
        if (v && *v < 0) {
            res.witness = CongruenceWitness{g, g, 0, *v};
            res.reason = "reconstructed coefficient is not integral";
            return res;
        }
        coeffs.push_back(acc);
    }
    res.measure = FiniteLevelMeasure(p, r, d, std::move(coeffs));
    return res;
}

}  // namespace lpadic
