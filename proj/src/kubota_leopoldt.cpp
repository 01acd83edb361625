#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "lpadic/errors.hpp"
#include "lpadic/measures.hpp"

namespace lpadic {

namespace {

mpz_class fmod(const mpz_class& x, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::shared_ptr<const UnitsMeasure> cached_measure(long p, long c, long Nw) {
    static std::mutex mu;
    static std::map<std::tuple<long, long, long>, std::shared_ptr<const UnitsMeasure>> cache;
    const auto key = std::make_tuple(p, c, Nw);
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto m = std::make_shared<const UnitsMeasure>(mazur_measure(p, c, Nw));
    std::lock_guard<std::mutex> lk(mu);
    return cache.emplace(key, m).first->second;
}

// u^y for u = 1 mod p, y in Z_p given mod p^(k-1); result mod p^k.
mpz_class unit_power(const mpz_class& u, const mpz_class& y, long p, long k) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), u.get_mpz_t(), y.get_mpz_t(), ppow(p, k).get_mpz_t());
    return r;
}

// 1 - c * omega(c)^(i-1) * u^{l(c)} mod p^k.
mpz_class regulator(long p, long c, long i, const mpz_class& u, long k) {
    const mpz_class m = ppow(p, k);
    const long e = (((i - 1) % (p - 1)) + (p - 1)) % (p - 1);
    mpz_class w;
    mpz_powm_ui(w.get_mpz_t(), teichmuller_residue(c, p, k).get_mpz_t(), static_cast<unsigned long>(e), m.get_mpz_t());
    mpz_class lc = log_coordinate(c, p, k);
    return fmod(1 - c * w * unit_power(u, lc, p, k), m);
}

long valuation_or(const mpz_class& x, long p, long cap) {
    return x == 0 ? cap : std::min(cap, vp(x, p));
}

mpz_class point_u(long p, const KLPoint& pt, long k) {
    const mpz_class m = ppow(p, k);
    if (!pt.is_integer) {
        if (fmod(pt.u - 1, mpz_class(p)) != 0) throw DomainError("evaluation point u must be 1 mod p");
        return fmod(pt.u, m);
    }
    mpz_class g = 1 + p, r;
    if (pt.k - 1 >= 0) {
        mpz_powm_ui(r.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(pt.k - 1), m.get_mpz_t());
    } else {
        mpz_powm_ui(r.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(1 - pt.k), m.get_mpz_t());
        r = mod_inverse(r, m);
    }
    return r;
}

}  // namespace

KLResult kubota_leopoldt(long p, long N, long i, const KLPoint& pt, long c, bool retry_c) {
    if (!is_prime(p) || p == 2) throw DomainError("kubota_leopoldt needs an odd prime");
    if (N < 1) throw DomainError("precision must be positive");
    if (c < 2 || c % p == 0) throw DomainError("c must be >= 2 and prime to p");
    const long probe = N + 8;
    const mpz_class u_probe = point_u(p, pt, probe);
    long vR = valuation_or(regulator(p, c, i, u_probe, probe), p, probe);
    if (retry_c && vR > 0) {
        for (long c2 = 2; c2 < 2 * p + 8; ++c2) {
            if (c2 % p == 0 || c2 == c) continue;
            long v2 = valuation_or(regulator(p, c2, i, u_probe, probe), p, probe);
            if (v2 < vR) {
                vR = v2;
                c = c2;
            }
            if (vR == 0) break;
        }
    }
    if (vR >= probe) throw PrecisionError("regulator vanishes to working precision (pole of the L-function)");

    long Nw = ((N + vR + 3 + 7) / 8) * 8;
    for (int attempt = 0; attempt < 6; ++attempt) {
        auto mu = cached_measure(p, c, Nw);
        const long Nc = mu->precision();
        const mpz_class u = point_u(p, pt, Nc + 1);
        const long cert = std::min(Nc, mu->branch(1).certified_precision(u, 0));
        ZpZeta I = mu->integrate_character(i - 1, u, 0, 0, cert);
        mpz_class Iv = I.coeffs[0];
        mpz_class R = regulator(p, c, i, u, Nw);
        if (Iv == 0 || R == 0) {
            Nw += 8;
            continue;
        }
        long vI = vp(Iv, p), vRr = vp(R, p);
        long rel = std::min(cert - vI, Nw - vRr);
        if (rel < N) {
            Nw += N - rel + 4;
            continue;
        }
        const mpz_class mN = ppow(p, N);
        mpz_class unit = fmod((Iv / ppow(p, vI)) * mod_inverse(R / ppow(p, vRr), mN), mN);
        KLResult res{PadicScalar::from_parts(p, N, HalfInt(vI - vRr), unit), c, vRr, Nw};
        return res;
    }
    throw PrecisionError("could not certify the requested precision for the L-value");
}

}  // namespace lpadic
