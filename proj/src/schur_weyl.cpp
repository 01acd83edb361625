#include "lpadic/schur_weyl.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "lpadic/errors.hpp"
#include "lpadic/padic.hpp"

namespace lpadic {

MatrixPoly::MatrixPoly(long n) : n_(n) {
    if (n < 1) throw DomainError("matrix polynomial: size must be positive");
}

MatrixPoly MatrixPoly::constant(long n, const mpq_class& c) {
    MatrixPoly p(n);
    p.add_term(Exponent(n * n + 1, 0), c);
    return p;
}

MatrixPoly MatrixPoly::var(long n, long i, long j) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw DomainError("matrix variable out of range");
    MatrixPoly p(n);
    Exponent e(n * n + 1, 0);
    e[i * n + j] = 1;
    p.add_term(e, 1);
    return p;
}

MatrixPoly MatrixPoly::param(long n) {
    MatrixPoly p(n);
    Exponent e(n * n + 1, 0);
    e.back() = 1;
    p.add_term(e, 1);
    return p;
}

void MatrixPoly::add_term(const Exponent& e, const mpq_class& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

long MatrixPoly::degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max<long>(d, std::accumulate(e.begin(), e.end() - 1, 0L));
    return d;
}

bool MatrixPoly::is_homogeneous() const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
        long k = std::accumulate(e.begin(), e.end() - 1, 0L);
        if (d >= 0 && k != d) return false;
        d = k;
    }
    return true;
}

bool MatrixPoly::involves_param() const {
    for (const auto& [e, c] : terms_)
        if (e.back() != 0) return true;
    return false;
}

MatrixPoly MatrixPoly::operator+(const MatrixPoly& o) const {
    if (n_ != o.n_) throw DomainError("matrix polynomials of different sizes");
    MatrixPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MatrixPoly MatrixPoly::operator-(const MatrixPoly& o) const { return *this + o.scale(-1); }

MatrixPoly MatrixPoly::operator*(const MatrixPoly& o) const {
    if (n_ != o.n_) throw DomainError("matrix polynomials of different sizes");
    MatrixPoly r(n_);
    Exponent e(n_ * n_ + 1);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            for (size_t k = 0; k < e.size(); ++k) e[k] = e1[k] + e2[k];
            r.add_term(e, c1 * c2);
        }
    return r;
}

MatrixPoly MatrixPoly::pow(long e) const {
    if (e < 0) throw DomainError("negative power of a polynomial");
    MatrixPoly r = constant(n_, 1), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

MatrixPoly MatrixPoly::scale(const mpq_class& c) const {
    MatrixPoly r(n_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

MatrixPoly MatrixPoly::substitute(const std::vector<MatrixPoly>& images) const {
    const long nv = n_ * n_;
    if (static_cast<long>(images.size()) != nv) throw DomainError("substitution needs one image per entry");
    // powers[v][k] = images[v]^k, grown on demand
    std::vector<std::vector<MatrixPoly>> powers(nv);
    auto power = [&](long v, int k) -> const MatrixPoly& {
        auto& pv = powers[v];
        if (pv.empty()) pv.push_back(constant(n_, 1));
        while (static_cast<int>(pv.size()) <= k) pv.push_back(pv.back() * images[v]);
        return pv[k];
    };
    MatrixPoly r(n_);
    for (const auto& [e, c] : terms_) {
        Exponent te(nv + 1, 0);
        te.back() = e.back();
        MatrixPoly m(n_);
        m.add_term(te, c);
        for (long v = 0; v < nv; ++v)
            if (e[v]) m = m * power(v, e[v]);
        r = r + m;
    }
    return r;
}

std::string MatrixPoly::str() const {
    if (terms_.empty()) return "0";
    auto vname = [&](long v) {
        std::ostringstream os;
        if (v == n_ * n_) return std::string("t");
        long i = v / n_ + 1, j = v % n_ + 1;
        os << "x" << i;
        if (n_ > 9) os << "_";
        os << j;
        return os.str();
    };
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpq_class a = abs(c);
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        bool mono = false;
        std::ostringstream ms;
        for (long v = 0; v <= n_ * n_; ++v) {
            if (!e[v]) continue;
            if (mono) ms << "*";
            ms << vname(v);
            if (e[v] > 1) ms << "^" << e[v];
            mono = true;
        }
        if (!mono) os << a.get_str();
        else {
            if (a != 1) os << a.get_str() << "*";
            os << ms.str();
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

MatrixPoly determinant(long n, long offset, long i) {
    // Laplace expansion along the first row of the submatrix.
    std::vector<long> cols(i);
    std::iota(cols.begin(), cols.end(), offset);
    std::function<MatrixPoly(long, std::vector<long>&)> rec = [&](long row, std::vector<long>& avail) {
        if (avail.empty()) return MatrixPoly::constant(n, 1);
        MatrixPoly acc(n);
        for (size_t k = 0; k < avail.size(); ++k) {
            long c = avail[k];
            std::vector<long> rest = avail;
            rest.erase(rest.begin() + k);
            MatrixPoly term = MatrixPoly::var(n, row, c) * rec(row + 1, rest);
            acc = (k % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    return rec(offset, cols);
}

}  // namespace

MatrixPoly leading_minor(long a, long b, Block block, long i) {
    if (a < 0 || b < 0 || a + b < 1) throw DomainError("leading minor: bad signature");
    long size = block == Block::A ? a : b;
    if (i < 1 || i > size) throw DomainError("leading minor: index out of range");
    long offset = block == Block::A ? 0 : a;
    return determinant(a + b, offset, i);
}

MatrixPoly p_polynomial(const std::vector<long>& rtilde, const std::vector<long>& stilde, long a, long b) {
    if (static_cast<long>(rtilde.size()) != a || static_cast<long>(stilde.size()) != b)
        throw DomainError("p-polynomial: exponent lists must have lengths (a, b)");
    long n = a + b;
    MatrixPoly P = MatrixPoly::constant(n, 1);
    for (long i = 0; i < a; ++i) {
        if (rtilde[i] < 0) throw DomainError("p-polynomial: negative exponent");
        if (rtilde[i]) P = P * leading_minor(a, b, Block::A, i + 1).pow(rtilde[i]);
    }
    for (long j = 0; j < b; ++j) {
        if (stilde[j] < 0) throw DomainError("p-polynomial: negative exponent");
        if (stilde[j]) P = P * leading_minor(a, b, Block::D, j + 1).pow(stilde[j]);
    }
    return P;
}

long p_polynomial_degree(const std::vector<long>& rtilde, const std::vector<long>& stilde) {
    long d = 0;
    for (size_t i = 0; i < rtilde.size(); ++i) d += static_cast<long>(i + 1) * rtilde[i];
    for (size_t j = 0; j < stilde.size(); ++j) d += static_cast<long>(j + 1) * stilde[j];
    return d;
}

std::vector<long> weight_from_differences(const std::vector<long>& rtilde) {
    std::vector<long> mu(rtilde.size());
    long s = 0;
    for (long i = static_cast<long>(rtilde.size()) - 1; i >= 0; --i) mu[i] = (s += rtilde[i]);
    return mu;
}

bool highest_weight_verify(const MatrixPoly& P, const std::vector<long>& mu, long u, long offset) {
    long n = P.size();
    if (u < 1 || offset < 0 || offset + u > n) throw DomainError("highest weight: block outside the matrix");
    if (static_cast<long>(mu.size()) != u) throw DomainError("highest weight: mu must have u entries");
    long total = std::accumulate(mu.begin(), mu.end(), 0L);
    auto in_block = [&](long v) {
        long i = v / n, j = v % n;
        return i >= offset && i < offset + u && j >= offset && j < offset + u;
    };
    for (const auto& [e, c] : P.terms()) {
        long d = 0;
        for (long v = 0; v < n * n; ++v)
            if (in_block(v)) d += e[v];
        if (d != total) throw DomainError("highest weight: polynomial is not homogeneous of degree |mu| in the block");
    }
    // Torus: row and column degrees inside the block equal mu.
    for (const auto& [e, c] : P.terms()) {
        for (long k = 0; k < u; ++k) {
            long rs = 0, cs = 0;
            for (long l = 0; l < u; ++l) {
                rs += e[(offset + k) * n + offset + l];
                cs += e[(offset + l) * n + offset + k];
            }
            if (rs != mu[k] || cs != mu[k]) return false;
        }
    }
    std::vector<MatrixPoly> ident;
    ident.reserve(n * n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) ident.push_back(MatrixPoly::var(n, i, j));
    MatrixPoly t = MatrixPoly::param(n);
    for (long i = 0; i < u; ++i)
        for (long j = i + 1; j < u; ++j) {
            long ri = offset + i, rj = offset + j;
            // row_j -= t row_i
            auto rows = ident;
            for (long c = 0; c < n; ++c) rows[rj * n + c] = ident[rj * n + c] - t * ident[ri * n + c];
            if (!(P.substitute(rows) == P)) return false;
            // col_j += t col_i
            auto cols = ident;
            for (long r = 0; r < n; ++r) cols[r * n + rj] = ident[r * n + rj] + t * ident[r * n + ri];
            if (!(P.substitute(cols) == P)) return false;
        }
    return true;
}

bool p_polynomial_verify(const std::vector<long>& rtilde, const std::vector<long>& stilde, long a, long b) {
    MatrixPoly P = p_polynomial(rtilde, stilde, a, b);
    if (P.degree() != p_polynomial_degree(rtilde, stilde)) return false;
    if (a > 0 && !highest_weight_verify(P, weight_from_differences(rtilde), a, 0)) return false;
    if (b > 0 && !highest_weight_verify(P, weight_from_differences(stilde), b, a)) return false;
    return true;
}

mpz_class weyl_dimension(const std::vector<long>& mu) {
    mpq_class d = 1;
    long u = static_cast<long>(mu.size());
    for (long i = 0; i < u; ++i)
        for (long j = i + 1; j < u; ++j) d *= make_rat(mu[i] - mu[j] + j - i, j - i);
    d.canonicalize();
    if (d.get_den() != 1) throw DomainError("Weyl dimension is not an integer");
    return d.get_num();
}

std::vector<std::vector<long>> partitions_at_most(long d, long u) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long rem, long maxpart) {
        if (static_cast<long>(cur.size()) == u) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        for (long x = std::min(rem, maxpart); x >= 0; --x) {
            cur.push_back(x);
            rec(rem - x, x);
            cur.pop_back();
        }
    };
    if (u >= 1 && d >= 0) rec(d, d);
    return out;
}

mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

DegreeDecomposition degree_decomposition_check(long u, long d) {
    if (u < 1 || d < 0) throw DomainError("degree decomposition: need u >= 1, d >= 0");
    DegreeDecomposition r;
    for (const auto& mu : partitions_at_most(d, u)) {
        mpz_class w = weyl_dimension(mu);
        r.sum_of_squares += w * w;
    }
    r.expected = binomial(u * u + d - 1, d);
    r.holds = r.sum_of_squares == r.expected;
    return r;
}

}  // namespace lpadic
