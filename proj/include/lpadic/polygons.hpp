#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "lpadic/halfint.hpp"

namespace lpadic {

struct Vertex {
    mpq_class x, y;
    bool operator==(const Vertex& o) const { return x == o.x && y == o.y; }
};

class Polygon {
public:
    Polygon() = default;
    explicit Polygon(std::vector<Vertex> v);  // x strictly increasing

    const std::vector<Vertex>& vertices() const { return v_; }
    // Piecewise-linear ordinate; x must lie within the span.
    mpq_class ordinate(const mpq_class& x) const;
    // Drop vertices lying on the segment between their neighbours.
    Polygon simplified() const;
    bool is_lower_convex() const;
    Polygon translated(const mpq_class& dy) const;
    bool operator==(const Polygon& o) const { return v_ == o.v_; }

    std::string to_tsv() const;
    std::string to_svg(const std::string& title = "") const;

private:
    std::vector<Vertex> v_;
};

struct HodgeData {
    long n = 0;
    std::vector<long> p;  // length 2n
    std::vector<long> q;  // q_i = n - 1 - p_i
    bool critint = false;
};

// kappa: a entries, kappa_c: b entries (kappa_c indexed 1..b as in the
// critical-interval condition -2 kappa_c_1 > n - 1).
HodgeData hodge_types(const std::vector<long>& kappa, const std::vector<long>& kappa_c, long a, long b);

// Vertices (i, sum over places of p_1 + ... + p_i), i = 0..2n.
Polygon hodge_polygon(const std::vector<HodgeData>& places);

// Valuations of the Satake parameters alpha_1..alpha_n at w.
struct HeckePolynomial {
    std::vector<HalfInt> alpha_valuations;
    long q = 0;
};

// Lower convex hull of {(k, v(coefficient of T^k))} for prod (1 - alpha T)(1 - alpha^{-1} T).
Polygon newton_polygon(const HeckePolynomial& H);
// The same hull computed from coefficient valuations (min-plus products).
Polygon newton_polygon_from_coefficients(const HeckePolynomial& H);

bool panchishkin_check(const Polygon& newton, const Polygon& hodge, long n);

// Hodge polygon rescaled to the arithmetic normalization of the Satake
// parameters: y -> x (n-1)/2 * places - y.
Polygon normalize_hodge_for_newton(const Polygon& hodge, long n, long places);

}  // namespace lpadic
