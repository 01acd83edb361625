#pragma once

#include <vector>

#include <gmpxx.h>

namespace lpadic {

// Bernoulli numbers with B_1 = -1/2.
mpq_class bernoulli(long n);
// B_0..B_n.
std::vector<mpq_class> bernoulli_numbers(long n);
// Bernoulli polynomial B_n(x).
mpq_class bernoulli_poly(long n, const mpq_class& x);

}  // namespace lpadic
