#include "lpadic/kernels.hpp"

#include <algorithm>

#include <omp.h>

#include "lpadic/errors.hpp"

namespace lpadic {

std::vector<CycloRational> batch_integrate_serial(const FiniteLevelMeasure& mu, const std::vector<Point>& chars) {
    std::vector<CycloRational> out;
    out.reserve(chars.size());
    for (const auto& k : chars) out.push_back(mu.integrate_additive(k));
    return out;
}

std::vector<CycloRational> batch_integrate_omp(const FiniteLevelMeasure& mu, const std::vector<Point>& chars) {
    std::vector<CycloRational> out(chars.size());
    const long n = static_cast<long>(chars.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) out[i] = mu.integrate_additive(chars[i]);
    return out;
}

namespace {

struct TaylorTable {
    long p = 0, r = 0, d = 0, m = 0, J = 0, n = 0;
    std::vector<int64_t> h;  // n x J, row k holds h_j(k) mod p
    const int64_t* row(long k) const { return h.data() + k * J; }
};

long dot_mod(const Point& k, const Point& g, long m) {
    long e = 0;
    for (size_t i = 0; i < k.size(); ++i) e = (e + k[i] * g[i]) % m;
    return e;
}

TaylorTable build_table(const FiniteLevelMeasure& mu, bool parallel) {
    TaylorTable t;
    t.p = mu.prime();
    t.r = mu.level();
    t.d = mu.rank();
    t.m = mu.modulus();
    t.n = mu.size();
    if (t.r == 0) throw DomainError("congruence scan needs level >= 1");
    t.J = t.m / t.p;  // largest congruence depth p^(r-1)
    const long p = t.p;
    std::vector<int64_t> mres(t.n);
    for (long i = 0; i < t.n; ++i) {
        const CycloRational& c = mu.coeff_at(i);
        if (!c.is_rational()) throw DomainError("congruence scan needs rational coefficients");
        mres[i] = static_cast<int64_t>(rational_mod(c.rational_value(), p, 1).get_si());
    }
    // C(e, j) mod p for e < p^r, j < J (Pascal's rule mod p).
    std::vector<int64_t> binom(t.m * t.J, 0);
    for (long e = 0; e < t.m; ++e)
        for (long j = 0; j < t.J; ++j) {
            int64_t v;
            if (j == 0) v = 1;
            else if (e == 0) v = 0;
            else v = (binom[(e - 1) * t.J + j] + binom[(e - 1) * t.J + j - 1]) % p;
            binom[e * t.J + j] = v;
        }
    std::vector<Point> pts(t.n);
    for (long i = 0; i < t.n; ++i) pts[i] = mu.point(i);
    t.h.assign(t.n * t.J, 0);
#pragma omp parallel for schedule(static) if (parallel)
    for (long k = 0; k < t.n; ++k) {
        int64_t* hk = t.h.data() + k * t.J;
        for (long x = 0; x < t.n; ++x) {
            if (mres[x] == 0) continue;
            const int64_t* br = binom.data() + dot_mod(pts[k], pts[x], t.m) * t.J;
            for (long j = 0; j < t.J; ++j) hk[j] = (hk[j] + mres[x] * br[j]) % p;
        }
    }
    return t;
}

long depth(const Point& a, const Point& b, long p, long r, long m) {
    long t = r;
    for (size_t c = 0; c < a.size(); ++c) {
        long diff = ((a[c] - b[c]) % m + m) % m;
        if (diff == 0) continue;
        long tc = 0;
        while (diff % p == 0) {
            diff /= p;
            ++tc;
        }
        t = std::min(t, tc);
    }
    long e = 1;
    for (long i = 0; i < t; ++i) e *= p;
    return e;
}

bool pair_ok(const TaylorTable& t, long a, long b, long e) {
    const int64_t* ha = t.row(a);
    const int64_t* hb = t.row(b);
    for (long j = 0; j < e; ++j)
        if (ha[j] != hb[j]) return false;
    return true;
}

}  // namespace

CongruenceScan congruence_scan_serial(const FiniteLevelMeasure& mu) {
    TaylorTable t = build_table(mu, false);
    CongruenceScan res;
    for (long a = 0; a < t.n; ++a) {
        Point pa = mu.point(a);
        for (long b = a + 1; b < t.n; ++b) {
            Point pb = mu.point(b);
            ++res.pairs;
            if (!pair_ok(t, a, b, depth(pa, pb, t.p, t.r, t.m))) {
                if (!res.witness) res.witness = std::make_pair(pa, pb);
                ++res.failures;
            }
        }
    }
    return res;
}

CongruenceScan congruence_scan_omp(const FiniteLevelMeasure& mu) {
    TaylorTable t = build_table(mu, true);
    long pairs = 0, failures = 0;
    long first_a = -1, first_b = -1;
#pragma omp parallel for schedule(dynamic) reduction(+ : pairs, failures)
    for (long a = 0; a < t.n; ++a) {
        Point pa = mu.point(a);
        for (long b = a + 1; b < t.n; ++b) {
            Point pb = mu.point(b);
            ++pairs;
            if (!pair_ok(t, a, b, depth(pa, pb, t.p, t.r, t.m))) {
                ++failures;
#pragma omp critical(lpadic_scan_witness)
                if (first_a < 0 || a < first_a || (a == first_a && b < first_b)) {
                    first_a = a;
                    first_b = b;
                }
            }
        }
    }
    CongruenceScan res;
    res.pairs = pairs;
    res.failures = failures;
    if (first_a >= 0) res.witness = std::make_pair(mu.point(first_a), mu.point(first_b));
    return res;
}

}  // namespace lpadic
