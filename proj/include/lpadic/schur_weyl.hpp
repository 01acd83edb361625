#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lpadic {

// Polynomial in the entries x_ij of a generic n x n matrix plus one formal
// parameter t used by the substitution checks.  Exponent vectors have length
// n*n + 1, entry (i, j) at i*n + j and t last.
class MatrixPoly {
public:
    using Exponent = std::vector<int>;

    explicit MatrixPoly(long n = 1);
    static MatrixPoly constant(long n, const mpq_class& c);
    static MatrixPoly var(long n, long i, long j);  // 0-based
    static MatrixPoly param(long n);               // t

    long size() const { return n_; }
    const std::map<Exponent, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Total degree in the matrix entries; -1 for zero.
    long degree() const;
    bool is_homogeneous() const;
    bool involves_param() const;

    MatrixPoly operator+(const MatrixPoly& o) const;
    MatrixPoly operator-(const MatrixPoly& o) const;
    MatrixPoly operator*(const MatrixPoly& o) const;
    MatrixPoly pow(long e) const;
    MatrixPoly scale(const mpq_class& c) const;
    bool operator==(const MatrixPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    // Replace each x_ij by images[i*n+j] (t is left alone).
    MatrixPoly substitute(const std::vector<MatrixPoly>& images) const;

    // Canonical text, monomials in descending lexicographic exponent order.
    std::string str() const;

private:
    void add_term(const Exponent& e, const mpq_class& c);
    long n_;
    std::map<Exponent, mpq_class> terms_;
};

enum class Block { A, D };

// Determinant of the leading i x i submatrix of block A (rows/cols 0..a-1) or
// block D (rows/cols a..n-1).
MatrixPoly leading_minor(long a, long b, Block block, long i);

// prod_i Delta_i^{rt_i} prod_j Delta'_j^{st_j}.
MatrixPoly p_polynomial(const std::vector<long>& rtilde, const std::vector<long>& stilde, long a, long b);
long p_polynomial_degree(const std::vector<long>& rtilde, const std::vector<long>& stilde);

// mu_i = sum_{k >= i} rt_k.
std::vector<long> weight_from_differences(const std::vector<long>& rtilde);

// Invariance of P under row_j -= t row_i and col_l += t col_k (i < j, k < l)
// inside the u x u block at `offset`, and torus weight mu on rows and columns
// of that block.  Throws DomainError if P is not homogeneous of degree |mu| in
// the block entries.
bool highest_weight_verify(const MatrixPoly& P, const std::vector<long>& mu, long u, long offset = 0);

// Both blocks of a p-polynomial.
bool p_polynomial_verify(const std::vector<long>& rtilde, const std::vector<long>& stilde, long a, long b);

mpz_class weyl_dimension(const std::vector<long>& mu);
// Partitions of d with at most u parts, padded to length u, descending order.
std::vector<std::vector<long>> partitions_at_most(long d, long u);
mpz_class binomial(long n, long k);

struct DegreeDecomposition {
    mpz_class sum_of_squares;
    mpz_class expected;
    bool holds = false;
};
DegreeDecomposition degree_decomposition_check(long u, long d);

}  // namespace lpadic
