#include <doctest.h>

#include <random>

#include "lpadic/errors.hpp"
#include "lpadic/polygons.hpp"
#include "oracles/oracles.hpp"

using namespace lpadic;

namespace {
std::vector<Vertex> pts(std::initializer_list<std::pair<long, long>> l) {
    std::vector<Vertex> v;
    for (auto [x, y] : l) v.push_back({x, y});
    return v;
}
HeckePolynomial hecke(std::vector<HalfInt> v) { return {std::move(v), 5}; }
}  // namespace

TEST_CASE("Hodge types") {
    auto h = hodge_types({2}, {-2}, 1, 1);
    CHECK(h.p == std::vector<long>{2, 2, -1, -1});
    CHECK(h.q == std::vector<long>{-1, -1, 2, 2});
    CHECK(h.critint);
    CHECK(!hodge_types({1}, {0}, 1, 1).critint);
    // printed extremes: i = 1 gives kappa_1 - b + n - 1, the last first-half entry -kappa_c_1
    auto g = hodge_types({5, 3}, {-4, -6}, 2, 2);
    CHECK(g.p.front() == 5 - 2 + 4 - 1);
    CHECK(g.p[3] == 4);
    for (long i = 0; i < 2 * g.n; ++i) CHECK(g.p[i] + g.q[i] == g.n - 1);
}

TEST_CASE("Hodge polygon") {
    auto h = hodge_types({2}, {-2}, 1, 1);
    CHECK(hodge_polygon({h}) == Polygon(pts({{0, 0}, {1, 2}, {2, 4}, {3, 3}, {4, 2}})));
    auto twice = hodge_polygon({h, h});
    CHECK(twice.ordinate(2) == 8);
    HodgeData zero{1, {0, 0}, {0, 0}, false};
    CHECK(hodge_polygon({zero}) == Polygon(pts({{0, 0}, {1, 0}, {2, 0}})));
}

TEST_CASE("Newton polygon examples") {
    CHECK(newton_polygon(hecke({HalfInt(1)})) == Polygon(pts({{0, 0}, {1, -1}, {2, 0}})));
    CHECK(newton_polygon(hecke({HalfInt(0), HalfInt(0)})).simplified() == Polygon(pts({{0, 0}, {4, 0}})));
    CHECK(newton_polygon(hecke({HalfInt(2), HalfInt(-1)})) ==
          Polygon(pts({{0, 0}, {1, -2}, {2, -3}, {3, -2}, {4, 0}})));
}

TEST_CASE("Newton polygon: two constructions, convexity, symmetry") {
    std::mt19937_64 g(17);
    std::uniform_int_distribution<long> u(-7, 7), len(1, 5);
    for (int t = 0; t < 200; ++t) {
        std::vector<HalfInt> v(len(g));
        for (auto& x : v) x = HalfInt::from_twice(u(g));
        auto H = hecke(v);
        Polygon N = newton_polygon(H);
        CHECK(N.is_lower_convex());
        CHECK(N.simplified() == newton_polygon_from_coefficients(H).simplified());
        // brute-force hull of the generic coefficient valuations
        std::vector<std::pair<mpq_class, mpq_class>> p;
        for (const auto& x : N.vertices()) p.emplace_back(x.x, x.y);
        auto hull = oracle::lower_hull_brute(p);
        auto simp = N.simplified().vertices();
        REQUIRE(hull.size() == simp.size());
        for (size_t i = 0; i < hull.size(); ++i) CHECK((hull[i].first == simp[i].x && hull[i].second == simp[i].y));
        long n = static_cast<long>(v.size());
        for (long k = 0; k <= 2 * n; ++k) CHECK(N.ordinate(k) == N.ordinate(2 * n - k));
    }
}

TEST_CASE("Panchishkin check and polygon utilities") {
    Polygon a(pts({{0, 0}, {1, -1}, {2, 0}}));
    CHECK(panchishkin_check(a, a, 1));
    CHECK(!panchishkin_check(a, a.translated(1), 1));
    CHECK(a.ordinate(mpq_class(1, 2)) == mpq_class(-1, 2));
    CHECK_THROWS_AS(a.ordinate(3), DomainError);
    CHECK_THROWS_AS(Polygon(pts({{0, 0}, {0, 1}})), DomainError);
    CHECK(a.to_tsv().find("1\t-1") != std::string::npos);
    CHECK(a.to_svg("t").find("<svg") != std::string::npos);
    auto n = normalize_hodge_for_newton(Polygon(pts({{0, 0}, {1, 2}, {2, 4}})), 2, 1);
    CHECK(n.ordinate(1) == mpq_class(-3, 2));
}
