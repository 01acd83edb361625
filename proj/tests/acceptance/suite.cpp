#include "acceptance/suite.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "lpadic/kernels.hpp"
#include "lpadic/local_factors.hpp"
#include "lpadic/measures.hpp"
#include "lpadic/ordinarity.hpp"
#include "lpadic/polygons.hpp"
#include "lpadic/schur_weyl.hpp"
#include "lpadic/weights.hpp"
#include "oracles/oracles.hpp"

namespace acceptance {

using namespace lpadic;
using Rng = std::mt19937_64;

namespace {

long uniform(Rng& g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

// ---------------------------------------------------------------- 1

Outcome kl_interpolation(Rng&) {
    Outcome o;
    long checked = 0;
    for (long p : {3L, 5L, 7L}) {
        for (long k = 2; k <= 12; k += 2) {
            const long branch = k % (p - 1);
            const PadicScalar expected = PadicScalar::from_rational(p, 20, oracle::kl_value(p, k));
            for (long c : {2L, 3L}) {
                if (c % p == 0) c = 4;  // 3 is not a unit at p = 3
                KLResult r = kubota_leopoldt(p, 20, branch, KLPoint::at_integer(k), c, false);
                ++checked;
                if (!(r.value == expected)) {
                    std::ostringstream os;
                    os << "p=" << p << " k=" << k << " c=" << c << " mismatch";
                    o.fail(os.str());
                }
            }
        }
    }
    o.detail = o.pass ? std::to_string(checked) + " values equal mod p^20 (c = 2, 3; c = 4 replaces 3 at p = 3)" : o.detail;
    return o;
}

// ---------------------------------------------------------------- 2

CycloRational random_value(Rng& g) {
    mpq_class q(uniform(g, 1, 9) * (uniform(g, 0, 1) ? 1 : -1), uniform(g, 1, 5));
    q.canonicalize();
    return CycloRational::zeta(4, uniform(g, 0, 3)).scale(q);
}

LocalCharacter random_character(Rng& g, long p, bool allow_ramified) {
    long c = 0;
    if (allow_ramified) c = uniform(g, 0, p == 3 ? 2 : 1);
    if (c == 0) return LocalCharacter::unramified(p, random_value(g));
    long phi = (p - 1);
    for (long i = 1; i < c; ++i) phi *= p;
    return LocalCharacter::ramified(p, random_value(g), c, uniform(g, 0, phi - 1));
}

Outcome euler_identity(Rng& g) {
    Outcome o;
    long ramified = 0;
    for (int t = 0; t < 200; ++t) {
        const long p = std::vector<long>{3, 5, 7}[uniform(g, 0, 2)];
        const long n = uniform(g, 1, 4);
        LocalRep pi;
        pi.a = uniform(g, 0, n);
        pi.b = n - pi.a;
        for (long i = 0; i < pi.a; ++i) pi.mu_a.push_back(random_character(g, p, true));
        for (long i = 0; i < pi.b; ++i) pi.mu_b.push_back(random_character(g, p, true));
        LocalCharacter chi1 = random_character(g, p, true), chi2 = random_character(g, p, true);
        for (const auto& m : pi.mu_a) ramified += !(m * chi1).is_unramified();
        if (!euler_alt_form_identity(pi, chi1, chi2)) o.fail("trial " + std::to_string(t) + " differs");
    }
    if (o.pass) o.detail = "200 configurations equal (" + std::to_string(ramified) + " ramified a-block factors)";
    return o;
}

// ---------------------------------------------------------------- 3

Outcome gj_oracle(Rng& g) {
    Outcome o;
    for (int t = 0; t < 100; ++t) {
        const long q = std::vector<long>{2, 3, 4, 5, 7, 9, 11}[uniform(g, 0, 6)];
        LocalCharacter xi = LocalCharacter::unramified(q, random_value(g));
        LocalFactorFn L = abelian_L(xi, HalfInt(0), Arg{1, HalfInt(0)});
        if (L.series(30) != gj_series_oracle(xi, 30)) o.fail("character " + std::to_string(t));
    }
    if (o.pass) o.detail = "100 characters agree to degree 30";
    return o;
}

// ---------------------------------------------------------------- 4

PlaceWeight random_place_weight(Rng& g, long n, long a, long f, long lo) {
    PlaceWeight w;
    w.a = a;
    w.b = n - a;
    for (long s = 0; s < f; ++s) {
        std::vector<long> k(w.a), kc(w.b);
        long x = lo + uniform(g, 0, 4);
        for (long i = w.a - 1; i >= 0; --i) k[i] = (x += uniform(g, 0, 2));
        x = lo + uniform(g, 0, 4);
        for (long j = w.b - 1; j >= 0; --j) kc[j] = (x += uniform(g, 0, 2));
        w.kappa.push_back(k);
        w.kappa_c.push_back(kc);
    }
    return w;
}

std::vector<mpz_class> random_units(Rng& g, long p, long n) {
    std::vector<mpz_class> u;
    for (long i = 0; i < n; ++i) {
        long x = uniform(g, 1, 1000);
        if (x % p == 0) ++x;
        u.emplace_back(x);
    }
    return u;
}

Outcome panchishkin(Rng& g) {
    Outcome o;
    for (int t = 0; t < 50; ++t) {
        const long p = std::vector<long>{3, 5, 7}[uniform(g, 0, 2)];
        const long n = uniform(g, 1, 4), a = uniform(g, 0, n), f = uniform(g, 1, 2);
        PlaceWeight w = random_place_weight(g, n, a, f, n / 2 + 1);  // every entry > (n-1)/2
        auto alpha = ordinary_alpha(p, 20, w, random_units(g, p, n));
        if (!is_ordinary(alpha, w)) {
            o.fail("generated data not ordinary");
            continue;
        }
        HeckePolynomial H;
        H.q = p;
        for (const auto& x : alpha) H.alpha_valuations.push_back(x.valuation());
        std::vector<HodgeData> hd;
        for (long s = 0; s < f; ++s) {
            std::vector<long> kc(w.b);
            for (long k = 0; k < w.b; ++k) kc[k] = -w.kappa_c[s][w.b - 1 - k];
            hd.push_back(hodge_types(w.kappa[s], kc, w.a, w.b));
            if (!hd.back().critint) o.fail("critical-interval hypothesis fails on generated data");
        }
        Polygon newton = newton_polygon(H);
        Polygon hodge = normalize_hodge_for_newton(hodge_polygon(hd), n, f);
        if (!panchishkin_check(newton, hodge, n)) o.fail("trial " + std::to_string(t) + ": midpoints differ");
        if (!(newton.simplified() == newton_polygon_from_coefficients(H).simplified()))
            o.fail("trial " + std::to_string(t) + ": Newton polygon constructions differ");
    }
    if (o.pass) o.detail = "50 ordinary configurations meet at x = n";
    return o;
}

// ---------------------------------------------------------------- 5

Outcome schur_weyl(Rng&) {
    Outcome o;
    long polys = 0;
    for (long u = 1; u <= 3; ++u)
        for (long d = 0; d <= 4; ++d) {
            auto r = degree_decomposition_check(u, d);
            if (!r.holds || r.expected != oracle::monomial_count(u * u, d))
                o.fail("u=" + std::to_string(u) + " d=" + std::to_string(d));
        }
    // All p(rt, st) with n <= 3 and degree <= 4.
    for (long n = 1; n <= 3; ++n)
        for (long a = 0; a <= n; ++a) {
            const long b = n - a;
            std::vector<long> ex(n, 0);
            std::function<void(long)> rec = [&](long pos) {
                if (pos == n) {
                    std::vector<long> rt(ex.begin(), ex.begin() + a), st(ex.begin() + a, ex.end());
                    if (p_polynomial_degree(rt, st) > 4) return;
                    ++polys;
                    if (!p_polynomial_verify(rt, st, a, b)) o.fail("p-polynomial fails verification");
                    return;
                }
                for (long e = 0; e <= 4; ++e) {
                    ex[pos] = e;
                    rec(pos + 1);
                }
                ex[pos] = 0;
            };
            rec(0);
        }
    if (o.pass) o.detail = "15 degree checks, " + std::to_string(polys) + " highest-weight vectors verified";
    return o;
}

// ---------------------------------------------------------------- 6

Weight random_weight(Rng& g, long n, long places) {
    Weight w;
    w.kappa0 = uniform(g, -6, 6);
    for (long s = 0; s < places; ++s) {
        SigmaBlock b;
        b.name = "s" + std::to_string(s + 1);
        b.a = uniform(g, 0, n);
        b.b = n - b.a;
        long x = uniform(g, -8, 4);
        for (long i = 0; i < b.b; ++i) b.kappa.insert(b.kappa.begin(), x += uniform(g, 0, 3));
        x = uniform(g, -8, 4);
        for (long i = 0; i < b.a; ++i) b.kappa_c.insert(b.kappa_c.begin(), x += uniform(g, 0, 3));
        w.sigma.push_back(b);
    }
    return w;
}

Outcome involutions(Rng& g) {
    Outcome o;
    for (int t = 0; t < 1000; ++t) {
        const long n = uniform(g, 1, 4), places = uniform(g, 1, 3);
        Weight w = random_weight(g, n, places);
        Weight s = star(w);
        if (!(star(s) == w)) o.fail("star is not an involution");
        if (a_kappa(s) != a_kappa(w)) o.fail("a(kappa*) != a(kappa)");
        if (!is_dominant(s)) o.fail("star breaks dominance");
        if (!(dagger(dagger(w)) == w) || !(flat(flat(w)) == w)) o.fail("dagger/flat not involutive");
        // (kappa^D)^D = kappa + 2 (d on kappa0, 0 on the blocks)
        Weight dd = involution_D(involution_D(w));
        Weight expect = w;
        expect.kappa0 += 2 * signature_d(w);
        if (!(dd == expect)) o.fail("D o D correction");

        // critical round trip
        InfinityType chi;
        chi.m = uniform(g, -5, 5);
        std::vector<CriticalPlace> params;
        for (const auto& b : w.sigma) {
            chi.sigma.push_back({b.name, uniform(g, -4, 4), uniform(g, -4, 4)});
            CriticalPlace cp;
            long x = 0;
            for (long i = 0; i < b.b; ++i) cp.r.insert(cp.r.begin(), x += uniform(g, 0, 3));
            x = 0;
            for (long j = 0; j < b.a; ++j) cp.s.insert(cp.s.begin(), x += uniform(g, 0, 3));
            params.push_back(cp);
        }
        Weight kc = reconstruct_critical(w, chi, params);
        auto got = critical_membership(kc, chi);
        if (!got) {
            o.fail("constructed critical weight rejected");
            continue;
        }
        for (size_t i = 0; i < params.size(); ++i) {
            const auto& cp = (*got)[i];
            if (cp.r != params[i].r || cp.s != params[i].s) o.fail("critical parameters differ");
            std::vector<long> full = kc.sigma[i].kappa;
            full.insert(full.end(), kc.sigma[i].kappa_c.begin(), kc.sigma[i].kappa_c.end());
            for (size_t k = 0; k < full.size(); ++k)
                if (cp.rho[k] + cp.shift[k] != full[k]) o.fail("rho + shift != kappa");
        }
        if (!(reconstruct_critical(kc, chi, *got) == kc)) o.fail("reconstruction differs");
    }
    if (o.pass) o.detail = "1000 weights: star, dagger, flat, D and critical round trip";
    return o;
}

// ---------------------------------------------------------------- 7

Outcome ordinarity_uniqueness(Rng& g) {
    Outcome o;
    for (int t = 0; t < 100; ++t) {
        const long p = std::vector<long>{3, 5, 7}[uniform(g, 0, 2)];
        const long n = uniform(g, 1, 4), a = uniform(g, 0, n), f = uniform(g, 1, 2);
        PlaceWeight w = random_place_weight(g, n, a, f, (a == 0 || a == n) ? n : (n + 1) / 2);
        if (!holo_weight_check(as_weight(w))) {
            o.fail("generator produced a non-holomorphic weight");
            continue;
        }
        auto alpha = ordinary_alpha(p, 20, w, random_units(g, p, n));
        if (!is_ordinary(alpha, w)) o.fail("trial " + std::to_string(t) + ": not ordinary");
        long count = weyl_permutation_unit_count(alpha, w);
        if (count != 1) o.fail("trial " + std::to_string(t) + ": " + std::to_string(count) + " unit permutations");
    }
    if (o.pass) o.detail = "100 ordinary characters, exactly one unit Weyl permutation each";
    return o;
}

// ---------------------------------------------------------------- 8

Outcome congruences(Rng& g) {
    Outcome o;
    long measures = 0, pairs = 0;
    auto scan = [&](const FiniteLevelMeasure& mu, const std::string& label) {
        ++measures;
        CongruenceScan s = congruence_scan_omp(mu);
        pairs += s.pairs;
        if (s.failures) o.fail(label + ": " + std::to_string(s.failures) + " failing pairs");
    };
    for (long p : {2L, 3L, 5L, 7L})
        for (long r = 1; r <= 3; ++r) {
            for (long c : {3L, 5L, 7L, 11L}) {
                if (c % p == 0) continue;
                scan(mazur_finite(p, c, r), "regularized Bernoulli p=" + std::to_string(p));
                break;
            }
            FiniteLevelMeasure rnd(p, r, 1);
            for (long i = 0; i < rnd.size(); ++i) rnd.set(rnd.point(i), CycloRational(uniform(g, -50, 50)));
            scan(rnd, "random p=" + std::to_string(p));
            if (r <= 2) {
                FiniteLevelMeasure b(p, r, 1);
                for (long i = 0; i < b.size(); ++i) b.set(b.point(i), CycloRational(uniform(g, -9, 9)));
                scan(product_measure(rnd, b), "product p=" + std::to_string(p));
            }
        }
    // Exact cross-check of a sample of pairs by pi-adic valuation.
    for (int t = 0; t < 40; ++t) {
        const long p = std::vector<long>{2, 3, 5, 7}[uniform(g, 0, 3)], r = uniform(g, 1, 3);
        FiniteLevelMeasure mu(p, r, 1);
        for (long i = 0; i < mu.size(); ++i) mu.set(mu.point(i), CycloRational(uniform(g, -20, 20)));
        const long m = mu.modulus();
        long k1 = uniform(g, 0, m - 1), k2 = uniform(g, 0, m - 1);
        if (k1 == k2) continue;
        long diff = std::abs(k1 - k2), tt = 0, e = 1;
        while (diff % p == 0) {
            diff /= p;
            ++tt;
            e *= p;
        }
        auto v = pi_valuation(mu.integrate_additive({k1}) - mu.integrate_additive({k2}), p, r);
        if (v && *v < e) o.fail("exact valuation below the congruence depth");
    }
    if (o.pass) o.detail = std::to_string(measures) + " measures, " + std::to_string(pairs) + " character pairs";
    return o;
}

struct CriterionDef {
    int id;
    const char* name;
    double limit;
    std::function<Outcome(Rng&)> run;
};

const std::vector<CriterionDef>& criterion_table() {
    static const std::vector<CriterionDef> s = {
        {1, "Kubota-Leopoldt interpolation", 5.0, kl_interpolation},
        {2, "Euler factor alternative form", 10.0, euler_identity},
        {3, "GL1 zeta-integral series", 1.0, gj_oracle},
        {4, "Newton/Hodge midpoint", 1.0, panchishkin},
        {5, "Schur-Weyl decomposition", 5.0, schur_weyl},
        {6, "Weight involutions", 1.0, involutions},
        {7, "Ordinary Weyl uniqueness", 5.0, ordinarity_uniqueness},
        {8, "Measure congruences", 2.0, congruences},
    };
    return s;
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
    for (const auto& s : criterion_table()) {
        if (s.id != id) continue;
        CriterionResult r;
        r.id = id;
        r.name = s.name;
        r.limit_seconds = s.limit;
        Rng g(seed * 1000003ULL + static_cast<std::uint64_t>(id));
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = s.run(g);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        r.pass = o.pass && r.seconds < s.limit;
        r.detail = o.detail;
        if (o.pass && !r.pass) r.detail += " (over time limit)";
        return r;
    }
    throw std::out_of_range("no such criterion");
}

std::vector<CriterionResult> run_all(std::uint64_t seed) {
    std::vector<CriterionResult> out;
    for (const auto& s : criterion_table()) out.push_back(run_criterion(s.id, seed));
    return out;
}

std::string format_line(const CriterionResult& r) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s  %d  %-32s %7.3fs / %4.1fs  ", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                  r.seconds, r.limit_seconds);
    return std::string(buf) + r.detail;
}

}  // namespace acceptance
