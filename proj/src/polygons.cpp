#include "lpadic/polygons.hpp"

#include <algorithm>
#include <sstream>

#include "lpadic/errors.hpp"
#include "lpadic/padic.hpp"

namespace lpadic {

Polygon::Polygon(std::vector<Vertex> v) : v_(std::move(v)) {
    for (auto& p : v_) {
        p.x.canonicalize();
        p.y.canonicalize();
    }
    for (size_t i = 1; i < v_.size(); ++i)
        if (!(v_[i - 1].x < v_[i].x)) throw DomainError("polygon x-coordinates must increase strictly");
}

mpq_class Polygon::ordinate(const mpq_class& x) const {
    if (v_.empty() || x < v_.front().x || x > v_.back().x) throw DomainError("abscissa outside the polygon span");
    for (size_t i = 0; i + 1 < v_.size(); ++i) {
        if (x == v_[i].x) return v_[i].y;
        if (x < v_[i + 1].x) {
            const auto& A = v_[i];
            const auto& B = v_[i + 1];
            mpq_class y = A.y + (B.y - A.y) * (x - A.x) / (B.x - A.x);
            y.canonicalize();
            return y;
        }
    }
    return v_.back().y;
}

Polygon Polygon::simplified() const {
    if (v_.size() < 3) return *this;
    std::vector<Vertex> out{v_.front()};
    for (size_t i = 1; i + 1 < v_.size(); ++i) {
        const auto& A = out.back();
        const auto& B = v_[i];
        const auto& C = v_[i + 1];
        if ((B.y - A.y) * (C.x - B.x) != (C.y - B.y) * (B.x - A.x)) out.push_back(B);
    }
    out.push_back(v_.back());
    return Polygon(std::move(out));
}

bool Polygon::is_lower_convex() const {
    for (size_t i = 1; i + 1 < v_.size(); ++i) {
        const auto& A = v_[i - 1];
        const auto& B = v_[i];
        const auto& C = v_[i + 1];
        if ((B.y - A.y) * (C.x - B.x) > (C.y - B.y) * (B.x - A.x)) return false;
    }
    return true;
}

Polygon Polygon::translated(const mpq_class& dy) const {
    std::vector<Vertex> v = v_;
    for (auto& p : v) p.y += dy;
    return Polygon(std::move(v));
}

std::string Polygon::to_tsv() const {
    std::ostringstream os;
    os << "x\ty\n";
    for (const auto& p : v_) os << p.x.get_str() << '\t' << p.y.get_str() << '\n';
    return os.str();
}

std::string Polygon::to_svg(const std::string& title) const {
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    if (!v_.empty()) {
        xmin = xmax = v_.front().x.get_d();
        ymin = ymax = v_.front().y.get_d();
        for (const auto& p : v_) {
            xmin = std::min(xmin, p.x.get_d());
            xmax = std::max(xmax, p.x.get_d());
            ymin = std::min(ymin, p.y.get_d());
            ymax = std::max(ymax, p.y.get_d());
        }
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    const double W = 480, H = 360, pad = 40;
    auto sx = [&](double x) { return pad + (x - xmin) / (xmax - xmin) * (W - 2 * pad); };
    auto sy = [&](double y) { return H - pad - (y - ymin) / (ymax - ymin) * (H - 2 * pad); };
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    if (!title.empty()) os << "  <title>" << title << "</title>\n";
    os << "  <line x1=\"" << pad << "\" y1=\"" << sy(0 < ymin ? ymin : (0 > ymax ? ymax : 0)) << "\" x2=\"" << W - pad
       << "\" y2=\"" << sy(0 < ymin ? ymin : (0 > ymax ? ymax : 0)) << "\" stroke=\"#999\"/>\n";
    os << "  <polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" points=\"";
    for (size_t i = 0; i < v_.size(); ++i) os << (i ? " " : "") << sx(v_[i].x.get_d()) << "," << sy(v_[i].y.get_d());
    os << "\"/>\n";
    for (const auto& p : v_) {
        os << "  <circle cx=\"" << sx(p.x.get_d()) << "\" cy=\"" << sy(p.y.get_d()) << "\" r=\"3\"/>\n";
        os << "  <text x=\"" << sx(p.x.get_d()) + 4 << "\" y=\"" << sy(p.y.get_d()) - 4
           << "\" font-size=\"10\">(" << p.x.get_str() << "," << p.y.get_str() << ")</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

HodgeData hodge_types(const std::vector<long>& kappa, const std::vector<long>& kappa_c, long a, long b) {
    if (static_cast<long>(kappa.size()) != a || static_cast<long>(kappa_c.size()) != b)
        throw DomainError("hodge_types: block sizes must match (a, b)");
    const long n = a + b;
    if (n < 1) throw DomainError("hodge_types: n must be positive");
    HodgeData h;
    h.n = n;
    std::vector<long> first;
    for (long i = 1; i <= a; ++i) first.push_back(kappa[i - 1] + n - i - b);
    for (long j = 1; j <= b; ++j) first.push_back(-kappa_c[b - j] + b - j);
    h.p = first;
    for (long i = n - 1; i >= 0; --i) h.p.push_back(n - 1 - first[i]);
    for (long x : h.p) h.q.push_back(n - 1 - x);
    const bool left = a == 0 || 2 * kappa[a - 1] > n - 1;
    const bool right = b == 0 || -2 * kappa_c[0] > n - 1;
    h.critint = left && right;
    return h;
}

Polygon hodge_polygon(const std::vector<HodgeData>& places) {
    if (places.empty()) throw DomainError("hodge_polygon needs at least one place");
    const long n = places.front().n;
    std::vector<Vertex> v{{0, 0}};
    mpq_class y = 0;
    for (long i = 0; i < 2 * n; ++i) {
        for (const auto& h : places) {
            if (h.n != n) throw DomainError("places over w must share n");
            y += h.p[i];
        }
        v.push_back({i + 1, y});
    }
    return Polygon(std::move(v));
}

Polygon newton_polygon(const HeckePolynomial& H) {
    std::vector<mpq_class> slopes;
    for (const auto& v : H.alpha_valuations) {
        slopes.push_back(v.to_mpq());
        slopes.push_back(-v.to_mpq());
    }
    std::sort(slopes.begin(), slopes.end());
    std::vector<Vertex> out{{0, 0}};
    mpq_class y = 0;
    for (size_t i = 0; i < slopes.size(); ++i) {
        y += slopes[i];
        out.push_back({static_cast<long>(i + 1), y});
    }
    return Polygon(std::move(out));
}

Polygon newton_polygon_from_coefficients(const HeckePolynomial& H) {
    // Generic valuation of each coefficient: min over subsets of the slope
    // multiset of the subset sum (min-plus convolution of the factors).
    const mpq_class INF(1000000000);
    std::vector<mpq_class> cv{0};
    for (const auto& v : H.alpha_valuations) {
        const mpq_class pm[2] = {-v.to_mpq(), v.to_mpq()};
        for (const mpq_class& s : pm) {
            std::vector<mpq_class> nv(cv.size() + 1, INF);
            for (size_t k = 0; k < cv.size(); ++k) {
                nv[k] = std::min(nv[k], cv[k]);
                nv[k + 1] = std::min(nv[k + 1], mpq_class(cv[k] + s));
            }
            cv = std::move(nv);
        }
    }
    // lower hull (monotone chain)
    std::vector<Vertex> hull;
    for (size_t k = 0; k < cv.size(); ++k) {
        Vertex P{static_cast<long>(k), cv[k]};
        while (hull.size() >= 2) {
            const auto& A = hull[hull.size() - 2];
            const auto& B = hull.back();
            if ((B.y - A.y) * (P.x - B.x) >= (P.y - B.y) * (B.x - A.x)) hull.pop_back();
            else break;
        }
        hull.push_back(P);
    }
    return Polygon(std::move(hull));
}

bool panchishkin_check(const Polygon& newton, const Polygon& hodge, long n) {
    return newton.ordinate(n) == hodge.ordinate(n);
}

Polygon normalize_hodge_for_newton(const Polygon& hodge, long n, long places) {
    std::vector<Vertex> v = hodge.vertices();
    for (auto& p : v) {
        p.y = p.x * make_rat(n - 1, 2) * places - p.y;
        p.y.canonicalize();
    }
    return Polygon(std::move(v));
}

}  // namespace lpadic
