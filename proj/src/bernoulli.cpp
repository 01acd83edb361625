#include "lpadic/bernoulli.hpp"

#include <mutex>

#include "lpadic/errors.hpp"
#include "lpadic/padic.hpp"

namespace lpadic {

namespace {

std::mutex g_mu;
std::vector<mpq_class> g_cache;

// Akiyama-Tanigawa; step m leaves B_m (with B_1 = +1/2) in a[0].
void extend_cache(long n) {
    const long have = static_cast<long>(g_cache.size());
    if (have > n) return;
    std::vector<mpq_class> a(n + 1);
    std::vector<mpq_class> out(n + 1);
    for (long m = 0; m <= n; ++m) {
        a[m] = make_rat(1, m + 1);
        for (long j = m; j >= 1; --j) {
            a[j - 1] = j * (a[j - 1] - a[j]);
            a[j - 1].canonicalize();
        }
        out[m] = a[0];
    }
    if (n >= 1) out[1] = mpq_class(-1, 2);
    g_cache = std::move(out);
}

}  // namespace

std::vector<mpq_class> bernoulli_numbers(long n) {
    if (n < 0) throw DomainError("negative Bernoulli index");
    std::lock_guard<std::mutex> lk(g_mu);
    extend_cache(n);
    return {g_cache.begin(), g_cache.begin() + n + 1};
}

mpq_class bernoulli(long n) {
    if (n < 0) throw DomainError("negative Bernoulli index");
    std::lock_guard<std::mutex> lk(g_mu);
    extend_cache(n);
    return g_cache[n];
}

mpq_class bernoulli_poly(long n, const mpq_class& x) {
    auto B = bernoulli_numbers(n);
    // sum_k C(n,k) B_k x^(n-k), by Horner in x.
    mpq_class acc = 0;
    mpz_class binom = 1;  // C(n, k) for k = 0, updated as k increases
    std::vector<mpq_class> terms(n + 1);
    for (long k = 0; k <= n; ++k) {
        terms[k] = binom * B[k];
        binom = binom * (n - k) / (k + 1);
    }
    for (long k = 0; k <= n; ++k) acc = acc * x + terms[k];
    acc.canonicalize();
    return acc;
}

}  // namespace lpadic
