#include "lpadic/json_io.hpp"

#include <fstream>
#include <sstream>

#include "lpadic/errors.hpp"

namespace lpadic::io {

namespace {

const json& field(const json& j, const std::string& key) {
    if (!j.is_object()) throw SchemaError("expected an object with field '" + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError("missing field '" + key + "'");
    return *it;
}

long as_long(const json& v, const std::string& what) {
    if (v.is_number_integer()) return v.get<long>();
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        try {
            size_t pos = 0;
            long x = std::stol(s, &pos);
            if (pos == s.size()) return x;
        } catch (const std::logic_error&) {
        }
    }
    throw SchemaError(what + ": expected an integer");
}

const json& array_field(const json& j, const std::string& key) {
    const json& v = field(j, key);
    if (!v.is_array()) throw SchemaError("field '" + key + "' must be an array");
    return v;
}

HalfInt halfint_from_json(const json& v, const std::string& what) {
    if (v.is_number_integer()) return HalfInt(v.get<long>());
    if (v.is_string()) return HalfInt::parse(v.get<std::string>());
    throw SchemaError(what + ": expected an integer or half-integer string");
}

}  // namespace

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
}

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str());
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

long get_long(const json& j, const std::string& key) { return as_long(field(j, key), key); }

long get_long_or(const json& j, const std::string& key, long fallback) {
    if (!j.is_object() || !j.contains(key)) return fallback;
    return get_long(j, key);
}

std::vector<long> get_long_list(const json& j, const std::string& key) {
    std::vector<long> out;
    for (const auto& v : array_field(j, key)) out.push_back(as_long(v, key));
    return out;
}

json to_json(const mpz_class& x) { return x.get_str(); }

json to_json(const mpq_class& x) {
    mpq_class y = x;
    y.canonicalize();
    return y.get_str();
}

mpz_class mpz_from_json(const json& j) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long>()));
    if (j.is_string()) {
        mpz_class z;
        if (mpz_set_str(z.get_mpz_t(), j.get<std::string>().c_str(), 10) == 0) return z;
    }
    throw SchemaError("expected a decimal integer, got " + j.dump());
}

mpq_class mpq_from_json(const json& j) {
    if (j.is_number_integer()) return mpq_class(mpz_from_json(j));
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        mpq_class q;
        if (!s.empty() && mpq_set_str(q.get_mpq_t(), s.c_str(), 10) == 0 && q.get_den() != 0) {
            q.canonicalize();
            return q;
        }
    }
    throw SchemaError("expected a rational such as \"-31/30\", got " + j.dump());
}

// ---------------------------------------------------------------------------

json to_json(const CycloRational& x) {
    if (x.is_rational()) return to_json(x.rational_value());
    json c = json::array();
    for (const auto& q : x.coeffs()) c.push_back(to_json(q));
    return json{{"conductor", x.conductor()}, {"coeffs", c}};
}

CycloRational cyclo_from_json(const json& j) {
    if (j.is_string() || j.is_number_integer()) return CycloRational(mpq_from_json(j));
    if (!j.is_object()) throw SchemaError("expected a cyclotomic number, got " + j.dump());
    if (j.contains("zeta")) {
        long M = get_long(j, "zeta");
        if (M < 1) throw SchemaError("zeta order must be positive");
        CycloRational z = CycloRational::zeta(M, get_long_or(j, "power", 1));
        if (j.contains("scale")) z = z.scale(mpq_from_json(j.at("scale")));
        return z;
    }
    long M = get_long(j, "conductor");
    if (M < 1) throw SchemaError("conductor must be positive");
    std::vector<mpq_class> c;
    for (const auto& v : array_field(j, "coeffs")) c.push_back(mpq_from_json(v));
    if (static_cast<long>(c.size()) != euler_phi(M))
        throw SchemaError("cyclotomic coefficient list must have phi(conductor) entries");
    return CycloRational::from_coeffs(M, c);
}

json to_json(const PadicScalar& x) {
    json j{{"p", x.prime()}, {"N", x.precision()}};
    if (x.is_zero()) {
        j["zero"] = true;
        j["valuation"] = x.valuation().str();
    } else {
        j["valuation"] = x.valuation().str();
        j["unit"] = to_json(x.unit());
    }
    return j;
}

PadicScalar padic_from_json(const json& j) {
    long p = get_long(j, "p"), N = get_long(j, "N");
    try {
        if (j.contains("rational")) return PadicScalar::from_rational(p, N, mpq_from_json(j.at("rational")));
        HalfInt v = halfint_from_json(field(j, "valuation"), "valuation");
        if (j.contains("zero") && j.at("zero").is_boolean() && j.at("zero").get<bool>())
            return PadicScalar::zero(p, N, v);
        return PadicScalar::from_parts(p, N, v, mpz_from_json(field(j, "unit")));
    } catch (const DomainError& e) {
        throw SchemaError(std::string("p-adic scalar: ") + e.what());
    }
}

namespace {

std::string point_key(const Point& g) {
    std::string k;
    for (size_t i = 0; i < g.size(); ++i) k += (i ? "," : "") + std::to_string(g[i]);
    return k;
}

Point parse_point_key(const std::string& s, long d) {
    Point g;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            size_t pos = 0;
            g.push_back(std::stol(part, &pos));
            if (pos != part.size()) throw SchemaError("bad coordinate in table key '" + s + "'");
        } catch (const std::logic_error&) {
            throw SchemaError("bad coordinate in table key '" + s + "'");
        }
    }
    if (static_cast<long>(g.size()) != d) throw SchemaError("table key '" + s + "' must have d coordinates");
    return g;
}

}  // namespace

json to_json(const FiniteLevelMeasure& mu) {
    json table = json::object();
    for (long i = 0; i < mu.size(); ++i)
        if (!mu.coeff_at(i).is_zero()) table[point_key(mu.point(i))] = to_json(mu.coeff_at(i));
    return json{{"type", "finite"}, {"p", mu.prime()}, {"r", mu.level()}, {"d", mu.rank()}, {"table", table}};
}

FiniteLevelMeasure measure_from_json(const json& j) {
    if (j.contains("type") && j.at("type") != "finite") throw SchemaError("expected a finite-level measure");
    long p = get_long(j, "p"), r = get_long(j, "r"), d = get_long(j, "d");
    try {
        if (j.contains("coeffs")) {
            std::vector<CycloRational> c;
            for (const auto& v : array_field(j, "coeffs")) c.push_back(cyclo_from_json(v));
            return FiniteLevelMeasure(p, r, d, std::move(c));
        }
        const json& table = field(j, "table");
        if (!table.is_object()) throw SchemaError("'table' must map \"x1,...,xd\" keys to values");
        FiniteLevelMeasure mu(p, r, d);
        for (const auto& [key, v] : table.items()) mu.set(parse_point_key(key, d), mu.coeff(parse_point_key(key, d)) + cyclo_from_json(v));
        return mu;
    } catch (const DomainError& e) {
        throw SchemaError(std::string("measure: ") + e.what());
    }
}

json to_json(const AmiceSeries& F) {
    json c = json::array();
    for (const auto& x : F.coeffs()) c.push_back(to_json(x));
    return json{{"type", "amice"}, {"p", F.prime()}, {"N", F.precision()}, {"D", F.degree()}, {"coeffs", c}};
}

AmiceSeries amice_from_json(const json& j) {
    if (j.contains("type") && j.at("type") != "amice") throw SchemaError("expected an Amice series");
    long p = get_long(j, "p"), N = get_long(j, "N");
    std::vector<mpz_class> c;
    for (const auto& v : array_field(j, "coeffs")) c.push_back(mpz_from_json(v));
    if (j.contains("D") && get_long(j, "D") != static_cast<long>(c.size()) - 1)
        throw SchemaError("Amice series: D must equal the number of coefficients minus one");
    try {
        return AmiceSeries(p, N, std::move(c));
    } catch (const DomainError& e) {
        throw SchemaError(std::string("Amice series: ") + e.what());
    }
}

// ---------------------------------------------------------------------------

json to_json(const Weight& w) {
    json s = json::array();
    for (const auto& b : w.sigma)
        s.push_back({{"name", b.name}, {"a", b.a}, {"b", b.b}, {"kappa", b.kappa}, {"kappa_c", b.kappa_c}});
    return json{{"kappa0", w.kappa0}, {"sigma", s}};
}

Weight weight_from_json(const json& j) {
    Weight w;
    w.kappa0 = get_long(j, "kappa0");
    for (const auto& s : array_field(j, "sigma")) {
        SigmaBlock b;
        b.name = s.contains("name") && s.at("name").is_string() ? s.at("name").get<std::string>() : "";
        b.a = get_long(s, "a");
        b.b = get_long(s, "b");
        b.kappa = get_long_list(s, "kappa");
        b.kappa_c = s.contains("kappa_c") ? get_long_list(s, "kappa_c") : std::vector<long>{};
        if (b.a < 0 || b.b < 0) throw SchemaError("signature entries must be nonnegative");
        w.sigma.push_back(std::move(b));
    }
    return w;
}

json to_json(const InfinityType& chi) {
    json s = json::array();
    for (const auto& p : chi.sigma) s.push_back({{"name", p.name}, {"a_chi", p.a_chi}, {"b_chi", p.b_chi}});
    return json{{"m", chi.m}, {"sigma", s}};
}

InfinityType infinity_type_from_json(const json& j) {
    InfinityType chi;
    chi.m = get_long(j, "m");
    for (const auto& s : array_field(j, "sigma")) {
        InfinityPlace p;
        p.name = s.contains("name") && s.at("name").is_string() ? s.at("name").get<std::string>() : "";
        p.a_chi = get_long(s, "a_chi");
        p.b_chi = get_long(s, "b_chi");
        chi.sigma.push_back(p);
    }
    return chi;
}

json to_json(const std::vector<CriticalPlace>& params) {
    json out = json::array();
    for (const auto& c : params)
        out.push_back({{"name", c.name},
                       {"r", c.r},
                       {"s", c.s},
                       {"rho", c.rho},
                       {"rho_upsilon", c.rho_upsilon},
                       {"shift", c.shift}});
    return out;
}

json to_json(const PlaceWeight& w) {
    json s = json::array();
    for (long i = 0; i < w.places(); ++i) s.push_back({{"kappa", w.kappa[i]}, {"kappa_c", w.kappa_c[i]}});
    return json{{"a", w.a}, {"b", w.b}, {"sigma", s}};
}

PlaceWeight place_weight_from_json(const json& j) {
    PlaceWeight w;
    w.a = get_long(j, "a");
    w.b = get_long(j, "b");
    for (const auto& s : array_field(j, "sigma")) {
        w.kappa.push_back(get_long_list(s, "kappa"));
        w.kappa_c.push_back(get_long_list(s, "kappa_c"));
    }
    try {
        w.validate();
    } catch (const DomainError& e) {
        throw SchemaError(e.what());
    }
    return w;
}

// ---------------------------------------------------------------------------

json to_json(const HodgeData& h) {
    return json{{"n", h.n}, {"p", h.p}, {"q", h.q}, {"critint", h.critint}};
}

json to_json(const Polygon& P) {
    json v = json::array();
    for (const auto& x : P.vertices()) v.push_back({{"x", to_json(x.x)}, {"y", to_json(x.y)}});
    return json{{"vertices", v}};
}

Polygon polygon_from_json(const json& j) {
    std::vector<Vertex> v;
    for (const auto& x : array_field(j, "vertices")) v.push_back({mpq_from_json(field(x, "x")), mpq_from_json(field(x, "y"))});
    try {
        return Polygon(std::move(v));
    } catch (const DomainError& e) {
        throw SchemaError(std::string("polygon: ") + e.what());
    }
}

json to_json(const HeckePolynomial& H) {
    json v = json::array();
    for (const auto& a : H.alpha_valuations) v.push_back(a.str());
    return json{{"q", H.q}, {"alpha_valuations", v}};
}

HeckePolynomial hecke_from_json(const json& j) {
    HeckePolynomial H;
    H.q = get_long_or(j, "q", 0);
    for (const auto& v : array_field(j, "alpha_valuations")) H.alpha_valuations.push_back(halfint_from_json(v, "alpha_valuations"));
    if (H.alpha_valuations.empty()) throw SchemaError("alpha_valuations must be nonempty");
    return H;
}

// ---------------------------------------------------------------------------

json to_json(const LocalCharacter& x) {
    return json{{"q", x.q()}, {"value", to_json(x.at_uniformizer())}, {"conductor", x.conductor()}, {"exponent", x.exponent()}};
}

LocalCharacter local_character_from_json(const json& j) {
    long q = get_long(j, "q");
    CycloRational v = j.contains("value") ? cyclo_from_json(j.at("value")) : CycloRational(1);
    long c = get_long_or(j, "conductor", 0), e = get_long_or(j, "exponent", 0);
    try {
        return c == 0 ? LocalCharacter::unramified(q, v) : LocalCharacter::ramified(q, v, c, e);
    } catch (const DomainError& err) {
        throw SchemaError(std::string("local character: ") + err.what());
    }
}

json to_json(const LocalRep& r) {
    json ma = json::array(), mb = json::array();
    for (const auto& x : r.mu_a) ma.push_back(to_json(x));
    for (const auto& x : r.mu_b) mb.push_back(to_json(x));
    return json{{"a", r.a}, {"b", r.b}, {"mu_a", ma}, {"mu_b", mb}};
}

LocalRep local_rep_from_json(const json& j) {
    LocalRep r;
    r.a = get_long(j, "a");
    r.b = get_long(j, "b");
    for (const auto& x : array_field(j, "mu_a")) r.mu_a.push_back(local_character_from_json(x));
    for (const auto& x : array_field(j, "mu_b")) r.mu_b.push_back(local_character_from_json(x));
    if (static_cast<long>(r.mu_a.size()) != r.a || static_cast<long>(r.mu_b.size()) != r.b)
        throw SchemaError("local representation: list lengths must match (a, b)");
    return r;
}

json to_json(const QuadCyclo& x) {
    return json{{"rational_part", to_json(x.a)}, {"sqrt_q_part", to_json(x.b)}, {"q", x.q}};
}

json to_json(const LocalFactorFn& f) {
    json num = json::array(), den = json::array(), fac = json::array();
    for (const auto& c : f.numerator()) num.push_back(to_json(c));
    for (const auto& c : f.denominator()) den.push_back(to_json(c));
    for (const auto& x : f.factors()) fac.push_back({{"gamma", to_json(x.gamma)}, {"k", x.k}, {"mult", x.mult}});
    // T^texp = q^{e s + f} with e = -texp, f = -texp * v0.
    HalfInt fexp = -(f.v0() * f.t_exponent());
    return json{{"q", f.q()},
                {"v0", f.v0().str()},
                {"variable", "T = q^-(s+v0)"},
                {"monomial", {{"T_exponent", f.t_exponent()}, {"e", -f.t_exponent()}, {"f", fexp.str()}}},
                {"numerator", num},
                {"denominator", den},
                {"factors", fac}};
}

std::vector<PadicScalar> alpha_from_json(const json& j) {
    long p = get_long(j, "p"), N = get_long(j, "N");
    std::vector<PadicScalar> out;
    for (json x : array_field(j, "alpha")) {
        if (!x.is_object()) throw SchemaError("alpha entries must be objects");
        if (!x.contains("p")) x["p"] = p;
        if (!x.contains("N")) x["N"] = N;
        out.push_back(padic_from_json(x));
    }
    if (out.empty()) throw SchemaError("alpha must be nonempty");
    return out;
}

}  // namespace lpadic::io
