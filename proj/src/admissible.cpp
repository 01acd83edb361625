#include "lpadic/admissible.hpp"

#include "lpadic/errors.hpp"

namespace lpadic {

CharacterLabel CharacterLabel::named(const std::string& name, long e) {
    CharacterLabel l;
    if (e != 0 && !name.empty() && name != "1") l.exps_[name] = e;
    return l;
}

CharacterLabel CharacterLabel::operator*(const CharacterLabel& o) const {
    CharacterLabel r = *this;
    for (const auto& [k, e] : o.exps_) {
        long v = (r.exps_[k] += e);
        if (v == 0) r.exps_.erase(k);
    }
    return r;
}

CharacterLabel CharacterLabel::inverse() const {
    CharacterLabel r;
    for (const auto& [k, e] : exps_) r.exps_[k] = -e;
    return r;
}

CharacterLabel CharacterLabel::substitute_chi(const std::string& chi) const {
    CharacterLabel r;
    for (const auto& [k, e] : exps_) {
        std::string key = k;
        if (k == "chi") key = chi;
        else if (k == "chi.det") key = chi + ".det";
        r = r * named(key, e);
    }
    return r;
}

std::string CharacterLabel::str() const {
    if (exps_.empty()) return "1";
    std::string s;
    for (const auto& [k, e] : exps_) {
        if (!s.empty()) s += "*";
        s += k;
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

namespace {

Point lift(const CharacterData& c, long p, long r) {
    if (c.level > r)
        throw DomainError("character " + c.name + " has level " + std::to_string(c.level) +
                          " beyond the payload level " + std::to_string(r));
    if (c.level < 0) throw DomainError("negative character level");
    long f = 1;
    for (long i = c.level; i < r; ++i) f *= p;
    Point k = c.k;
    for (auto& x : k) x *= f;
    return k;
}

}  // namespace

Specialization specialize_admissible(const AdmissibleFamilyMeta& meta, const std::vector<FiniteLevelMeasure>& payload,
                                     const CharacterData& chi, const CharacterData& rho) {
    if (payload.empty()) throw DomainError("empty payload");
    const long p = payload.front().prime(), r = payload.front().level();
    const long d = payload.front().rank();
    if (r > meta.level && meta.level > 0) throw DomainError("payload level exceeds the declared family level");
    if (static_cast<long>(chi.k.size() + rho.k.size()) != d)
        throw DomainError("character ranks do not match the payload rank");
    Point k = lift(chi, p, r);
    Point k2 = lift(rho, p, r);
    k.insert(k.end(), k2.begin(), k2.end());

    Specialization out;
    for (const auto& mu : payload) {
        if (mu.prime() != p || mu.level() != r || mu.rank() != d)
            throw DomainError("payload components must share prime, level and rank");
        out.values.push_back(mu.integrate_additive(k));
    }
    CharacterLabel rho_l = CharacterLabel::named(rho.name);
    CharacterLabel rho_twisted =
        meta.twist.empty() ? rho_l : CharacterLabel::named(rho.name + "^" + meta.twist);
    out.integrand = rho_twisted * meta.psi;
    out.weight.first = rho_l * meta.shift.first.substitute_chi(chi.name);
    out.weight.second = rho_l * meta.shift.second.substitute_chi(chi.name);
    out.nebentypus.first = meta.psi;
    out.nebentypus.second = meta.psi * CharacterLabel::named(chi.name).inverse();
    return out;
}

}  // namespace lpadic
