#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lpadic {

// One archimedean place sigma (representing the pair sigma, sigma c) with its
// signature and the two weight blocks kappa_sigma and kappa_{sigma c}.
struct SigmaBlock {
    std::string name;
    long a = 0, b = 0;
    std::vector<long> kappa;
    std::vector<long> kappa_c;
    bool operator==(const SigmaBlock&) const = default;
};

struct Weight {
    long kappa0 = 0;
    std::vector<SigmaBlock> sigma;
    bool operator==(const Weight&) const = default;
};

enum class Involution { Star, D, Flat, Dagger };

Involution parse_involution(const std::string& s);

long signature_n(const Weight& w);   // common a + b, throws if inconsistent
long signature_d(const Weight& w);   // sum over listed places of a*b

bool is_dominant(const Weight& w);
long a_kappa(const Weight& w);

Weight star(const Weight& w);
Weight involution_D(const Weight& w);
Weight dagger(const Weight& w);
Weight flat(const Weight& w);
Weight apply_involution(const Weight& w, Involution kind);
// kappa_h^+ = (-d; 2a on kappa_sigma, 2b on kappa_{sigma c}).
Weight kappa_h_plus(const Weight& shape);
Weight add(const Weight& x, const Weight& y);

struct InfinityPlace {
    std::string name;
    long a_chi = 0, b_chi = 0;
};

struct InfinityType {
    long m = 0;
    std::vector<InfinityPlace> sigma;  // matched to Weight::sigma by position
};

struct CriticalPlace {
    std::string name;
    std::vector<long> r;            // length b, descending, >= 0
    std::vector<long> s;            // length a, descending, >= 0
    std::vector<long> rho;          // (-r_b..-r_1; s_1..s_a)
    std::vector<long> rho_upsilon;  // (r_1..r_b; s_1..s_a)
    std::vector<long> shift;        // (alpha^b; beta^a)
};

// Highest weight per sigma is kappa (b entries) followed by kappa_c (a entries).
std::optional<std::vector<CriticalPlace>> critical_membership(const Weight& w, const InfinityType& chi);
// Inverse of critical_membership on the kappa blocks (kappa0 is carried through).
Weight reconstruct_critical(const Weight& shape, const InfinityType& chi, const std::vector<CriticalPlace>& params);

bool holo_weight_check(const Weight& w);

}  // namespace lpadic
