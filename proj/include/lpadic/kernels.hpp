#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lpadic/measures.hpp"

namespace lpadic {

// Integrals of a finite-level measure against many additive characters.
std::vector<CycloRational> batch_integrate_serial(const FiniteLevelMeasure& mu, const std::vector<Point>& chars);
std::vector<CycloRational> batch_integrate_omp(const FiniteLevelMeasure& mu, const std::vector<Point>& chars);

// Pairwise congruence check over all additive characters of (Z/p^r)^d for a
// Z_p-valued measure.  For characters with k1 - k2 of valuation t < r the
// integrals must agree modulo pi^(p^t); this is decided from the Taylor
// coefficients at zeta = 1 reduced mod p.
struct CongruenceScan {
    long pairs = 0;
    long failures = 0;
    std::optional<std::pair<Point, Point>> witness;
};

// Coefficients must be p-integral rationals.
CongruenceScan congruence_scan_serial(const FiniteLevelMeasure& mu);
CongruenceScan congruence_scan_omp(const FiniteLevelMeasure& mu);

}  // namespace lpadic
