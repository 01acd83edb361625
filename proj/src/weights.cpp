#include "lpadic/weights.hpp"

#include <algorithm>

#include "lpadic/errors.hpp"

namespace lpadic {

Involution parse_involution(const std::string& s) {
    if (s == "star") return Involution::Star;
    if (s == "D") return Involution::D;
    if (s == "flat") return Involution::Flat;
    if (s == "dagger") return Involution::Dagger;
    throw SchemaError("unknown involution: " + s);
}

long signature_n(const Weight& w) {
    long n = -1;
    for (const auto& s : w.sigma) {
        if (s.a < 0 || s.b < 0) throw DomainError("signature entries must be non-negative");
        if (n >= 0 && s.a + s.b != n) throw DomainError("places disagree on n = a + b");
        n = s.a + s.b;
    }
    return n < 0 ? 0 : n;
}

long signature_d(const Weight& w) {
    long d = 0;
    for (const auto& s : w.sigma) d += s.a * s.b;
    return d;
}

namespace {

bool descending(const std::vector<long>& v) {
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] < v[i]) return false;
    return true;
}

std::vector<long> reverse_negate(const std::vector<long>& v) {
    std::vector<long> r(v.rbegin(), v.rend());
    for (auto& x : r) x = -x;
    return r;
}

}  // namespace

bool is_dominant(const Weight& w) {
    for (const auto& s : w.sigma)
        if (!descending(s.kappa) || !descending(s.kappa_c)) return false;
    return true;
}

long a_kappa(const Weight& w) {
    long a = 2 * w.kappa0;
    for (const auto& s : w.sigma) {
        for (long x : s.kappa) a += x;
        for (long x : s.kappa_c) a += x;
    }
    return a;
}

Weight star(const Weight& w) {
    Weight r = w;
    r.kappa0 = -w.kappa0 + a_kappa(w);
    for (auto& s : r.sigma) {
        s.kappa = reverse_negate(s.kappa);
        s.kappa_c = reverse_negate(s.kappa_c);
    }
    return r;
}

Weight kappa_h_plus(const Weight& shape) {
    Weight h = shape;
    h.kappa0 = -signature_d(shape);
    for (auto& s : h.sigma) {
        std::fill(s.kappa.begin(), s.kappa.end(), 2 * s.a);
        std::fill(s.kappa_c.begin(), s.kappa_c.end(), 2 * s.b);
    }
    return h;
}

Weight add(const Weight& x, const Weight& y) {
    if (x.sigma.size() != y.sigma.size()) throw DomainError("adding weights with different places");
    Weight r = x;
    r.kappa0 += y.kappa0;
    for (size_t i = 0; i < r.sigma.size(); ++i) {
        auto& s = r.sigma[i];
        const auto& t = y.sigma[i];
        if (s.kappa.size() != t.kappa.size() || s.kappa_c.size() != t.kappa_c.size())
            throw DomainError("adding weights with different block sizes");
        for (size_t j = 0; j < s.kappa.size(); ++j) s.kappa[j] += t.kappa[j];
        for (size_t j = 0; j < s.kappa_c.size(); ++j) s.kappa_c[j] += t.kappa_c[j];
    }
    return r;
}

Weight involution_D(const Weight& w) { return add(star(w), kappa_h_plus(w)); }

Weight dagger(const Weight& w) {
    Weight r = w;
    r.kappa0 = w.kappa0 - a_kappa(w);
    for (auto& s : r.sigma) {
        std::swap(s.kappa, s.kappa_c);
        std::swap(s.a, s.b);
    }
    return r;
}

Weight flat(const Weight& w) {
    Weight r = dagger(w);
    r.kappa0 += a_kappa(w);
    return r;
}

Weight apply_involution(const Weight& w, Involution kind) {
    switch (kind) {
        case Involution::Star: return star(w);
        case Involution::D: return involution_D(w);
        case Involution::Flat: return flat(w);
        case Involution::Dagger: return dagger(w);
    }
    throw DomainError("unknown involution");
}

std::optional<std::vector<CriticalPlace>> critical_membership(const Weight& w, const InfinityType& chi) {
    if (chi.sigma.size() != w.sigma.size()) throw DomainError("infinity type must list the same places as the weight");
    std::vector<CriticalPlace> out;
    for (size_t i = 0; i < w.sigma.size(); ++i) {
        const auto& s = w.sigma[i];
        const auto& c = chi.sigma[i];
        const long b = static_cast<long>(s.kappa.size());
        const long a = static_cast<long>(s.kappa_c.size());
        if (b != s.b || a != s.a)
            throw DomainError("place " + s.name + ": expected b entries in kappa and a entries in kappa_c");
        const long alpha = -chi.m + c.b_chi;
        const long beta = chi.m - c.a_chi;
        CriticalPlace cp;
        cp.name = s.name;
        cp.r.assign(b, 0);
        cp.s.assign(a, 0);
        // kappa_i = alpha - r_{b+1-i};  kappa_c_j = beta + s_j
        for (long k = 0; k < b; ++k) cp.r[b - 1 - k] = alpha - s.kappa[k];
        for (long j = 0; j < a; ++j) cp.s[j] = s.kappa_c[j] - beta;
        auto ok = [](const std::vector<long>& v) {
            return descending(v) && std::all_of(v.begin(), v.end(), [](long x) { return x >= 0; });
        };
        if (!ok(cp.r) || !ok(cp.s)) return std::nullopt;
        for (long k = 0; k < b; ++k) cp.rho.push_back(-cp.r[b - 1 - k]);
        for (long j = 0; j < a; ++j) cp.rho.push_back(cp.s[j]);
        cp.rho_upsilon = cp.r;
        cp.rho_upsilon.insert(cp.rho_upsilon.end(), cp.s.begin(), cp.s.end());
        cp.shift.assign(b, alpha);
        cp.shift.insert(cp.shift.end(), a, beta);
        out.push_back(std::move(cp));
    }
    return out;
}

Weight reconstruct_critical(const Weight& shape, const InfinityType& chi, const std::vector<CriticalPlace>& params) {
    Weight w = shape;
    for (size_t i = 0; i < w.sigma.size(); ++i) {
        auto& s = w.sigma[i];
        const auto& c = chi.sigma.at(i);
        const auto& cp = params.at(i);
        const long b = static_cast<long>(cp.r.size());
        const long a = static_cast<long>(cp.s.size());
        s.kappa.assign(b, 0);
        s.kappa_c.assign(a, 0);
        for (long k = 0; k < b; ++k) s.kappa[k] = -chi.m + c.b_chi - cp.r[b - 1 - k];
        for (long j = 0; j < a; ++j) s.kappa_c[j] = chi.m - c.a_chi + cp.s[j];
    }
    return w;
}

bool holo_weight_check(const Weight& w) {
    const long n = signature_n(w);
    for (const auto& s : w.sigma) {
        if (s.kappa.empty() && s.kappa_c.empty()) return false;
        long lhs = 0;
        if (!s.kappa.empty()) lhs += *std::min_element(s.kappa.begin(), s.kappa.end());
        if (!s.kappa_c.empty()) lhs += *std::min_element(s.kappa_c.begin(), s.kappa_c.end());
        if (lhs < n) return false;
    }
    return true;
}

}  // namespace lpadic
