#pragma once

#include <map>
#include <string>
#include <vector>

#include "lpadic/measures.hpp"

namespace lpadic {

// Formal product of named characters, e.g. rho * chi.det^2.
class CharacterLabel {
public:
    CharacterLabel() = default;
    static CharacterLabel named(const std::string& name, long e = 1);

    CharacterLabel operator*(const CharacterLabel& o) const;
    CharacterLabel inverse() const;
    bool trivial() const { return exps_.empty(); }
    const std::map<std::string, long>& exponents() const { return exps_; }
    // Replace the placeholder symbols "chi" and "chi.det" by a concrete character name.
    CharacterLabel substitute_chi(const std::string& chi) const;
    std::string str() const;
    bool operator==(const CharacterLabel& o) const { return exps_ == o.exps_; }

private:
    std::map<std::string, long> exps_;
};

// Labels on the two factors of T_H.
struct PairLabel {
    CharacterLabel first, second;
    bool operator==(const PairLabel& o) const { return first == o.first && second == o.second; }
};

struct AdmissibleFamilyMeta {
    CharacterLabel psi;   // finite-level character on T_H(Z_p)
    PairLabel shift;      // (alpha(chi), beta(chi)), written with the placeholder "chi"
    std::string twist;    // involution label upsilon; empty = trivial
    std::string tame_level = "K^p";
    long level = 0;       // p-power level r of the payload
};

struct CharacterData {
    std::string name;     // label of the character
    Point k;              // additive-character index
    long level = 0;       // defined modulo p^level
};

struct Specialization {
    std::vector<CycloRational> values;  // one per payload component
    CharacterLabel integrand;           // rho^upsilon * psi
    PairLabel weight;                   // rho^Delta * sh*(chi)
    PairLabel nebentypus;               // psi^Delta_chi
};

// Payload components are measures on (Z/p^r)^(d1+d2); chi lives on the first d1
// coordinates, rho on the remaining d2.
Specialization specialize_admissible(const AdmissibleFamilyMeta& meta, const std::vector<FiniteLevelMeasure>& payload,
                                     const CharacterData& chi, const CharacterData& rho);

}  // namespace lpadic
