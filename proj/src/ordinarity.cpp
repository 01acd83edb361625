#include "lpadic/ordinarity.hpp"

#include <algorithm>
#include <numeric>

#include "lpadic/errors.hpp"

namespace lpadic {

void PlaceWeight::validate() const {
    if (a < 0 || b < 0 || a + b < 1) throw DomainError("place weight: bad signature");
    if (kappa.size() != kappa_c.size() || kappa.empty())
        throw DomainError("place weight: need the same positive number of kappa and kappa_c blocks");
    for (const auto& k : kappa)
        if (static_cast<long>(k.size()) != a) throw DomainError("place weight: kappa must have a entries");
    for (const auto& k : kappa_c)
        if (static_cast<long>(k.size()) != b) throw DomainError("place weight: kappa_c must have b entries");
}

Weight as_weight(const PlaceWeight& w) {
    w.validate();
    Weight out;
    for (long s = 0; s < w.places(); ++s)
        out.sigma.push_back({"w" + std::to_string(s + 1), w.b, w.a, w.kappa[s], w.kappa_c[s]});
    return out;
}

std::vector<long> kappa_norm(const PlaceWeight& w) {
    w.validate();
    std::vector<long> m(w.n(), 0);
    for (long s = 0; s < w.places(); ++s) {
        for (long i = 0; i < w.a; ++i) m[i] += w.kappa[s][i] - w.b;
        for (long j = 0; j < w.b; ++j) m[w.a + j] -= w.kappa_c[s][j] - w.a;
    }
    return m;
}

std::vector<long> delta_exponents(long a, long b) {
    long n = a + b;
    std::vector<long> e(n);
    for (long i = 1; i <= a; ++i) e[i - 1] = n + 1 - 2 * i;
    for (long j = 1; j <= b; ++j) e[a + j - 1] = -(n + 1 - 2 * j);
    return e;
}

long modulus_delta_log(const std::vector<long>& t, long a, long b, long f) {
    auto e = delta_exponents(a, b);
    if (t.size() != e.size()) throw DomainError("modulus character: need n diagonal valuations");
    long s = 0;
    for (size_t i = 0; i < e.size(); ++i) s += e[i] * t[i];
    return -f * s;
}

std::vector<HalfInt> theta(const PlaceWeight& w) {
    auto m = kappa_norm(w);
    auto e = delta_exponents(w.a, w.b);
    std::vector<HalfInt> th(w.n());
    for (long i = 0; i < w.n(); ++i) th[i] = HalfInt(m[i]) + HalfInt::from_twice(w.places() * e[i]);
    return th;
}

std::vector<long> eigen_positions(long a, long b, long j) {
    long n = a + b;
    if (j < 1 || j > n) throw DomainError("eigenvalue index out of range");
    std::vector<long> s;
    for (long i = 0; i < std::min(j, a); ++i) s.push_back(i);
    for (long i = n - (j - std::min(j, a)); i < n; ++i) s.push_back(i);
    return s;
}

std::vector<PadicScalar> ordinary_eigenvalues(const std::vector<PadicScalar>& alpha, const PlaceWeight& w) {
    auto th = theta(w);
    long n = w.n();
    if (static_cast<long>(alpha.size()) != n) throw DomainError("ordinary eigenvalues: need n values of alpha");
    for (const auto& x : alpha)
        if (x.is_zero()) throw DomainError("ordinary eigenvalues: alpha must be invertible");
    long p = alpha[0].prime(), N = alpha[0].precision();
    std::vector<PadicScalar> c;
    for (long j = 1; j <= n; ++j) {
        HalfInt shift(0);
        PadicScalar v = PadicScalar::one(p, N);
        for (long i : eigen_positions(w.a, w.b, j)) {
            shift += th[i];
            v = v * alpha[i];
        }
        c.push_back(v * PadicScalar::from_parts(p, N, shift, 1));
    }
    return c;
}

bool is_ordinary(const std::vector<PadicScalar>& alpha, const PlaceWeight& w) {
    for (const auto& c : ordinary_eigenvalues(alpha, w))
        if (!c.is_unit()) return false;
    return true;
}

bool is_anti_ordinary(const std::vector<PadicScalar>& alpha, const PlaceWeight& w) {
    std::vector<PadicScalar> inv;
    inv.reserve(alpha.size());
    for (const auto& x : alpha) inv.push_back(x.inverse());
    return is_ordinary(inv, w);
}

bool theta_regularity(const PlaceWeight& w) {
    auto th = theta(w);
    long a = w.a, n = w.n();
    std::vector<HalfInt> chain(th.begin(), th.begin() + a);
    for (long i = n - 1; i >= a; --i) chain.push_back(th[i]);
    for (size_t k = 1; k < chain.size(); ++k)
        if (!(chain[k - 1] > chain[k])) return false;
    return true;
}

std::vector<PadicScalar> ordinary_alpha(long p, long N, const PlaceWeight& w, const std::vector<mpz_class>& units) {
    auto th = theta(w);
    if (units.size() != th.size()) throw DomainError("ordinary alpha: need n unit parts");
    std::vector<PadicScalar> alpha;
    for (size_t i = 0; i < th.size(); ++i) alpha.push_back(PadicScalar::from_parts(p, N, -th[i], units[i]));
    return alpha;
}

long weyl_permutation_unit_count(const std::vector<PadicScalar>& alpha, const PlaceWeight& w) {
    std::vector<long> x(alpha.size());
    std::iota(x.begin(), x.end(), 0);
    long count = 0;
    do {
        std::vector<PadicScalar> ax;
        for (long i : x) ax.push_back(alpha[i]);
        if (is_ordinary(ax, w)) ++count;
    } while (std::next_permutation(x.begin(), x.end()));
    return count;
}

}  // namespace lpadic
