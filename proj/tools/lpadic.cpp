// Command-line front end: JSON in, canonical JSON out.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "acceptance/suite.hpp"
#include "lpadic/errors.hpp"
#include "lpadic/json_io.hpp"
#include "lpadic/local_factors.hpp"
#include "lpadic/measures.hpp"
#include "lpadic/ordinarity.hpp"
#include "lpadic/polygons.hpp"
#include "lpadic/schur_weyl.hpp"
#include "lpadic/weights.hpp"

using namespace lpadic;
using io::json;

namespace {

struct Globals {
    std::string in, out;
    long p = 0, N = 0;
    std::uint64_t seed = 7;
};

long default_precision() {
    if (const char* env = std::getenv("LPADIC_PRECISION")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1) throw SchemaError("LPADIC_PRECISION must be a positive integer");
        return v;
    }
    return 20;
}

void emit(const Globals& g, const std::string& text) {
    if (g.out.empty() || g.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw SchemaError("cannot write " + g.out);
    f << text;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw SchemaError("cannot write " + path);
    f << text;
}

json input(const Globals& g, const std::string& path = "") {
    const std::string& p = path.empty() ? g.in : path;
    if (p.empty()) throw SchemaError("no input file given (use --in)");
    if (p == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return io::parse_text(ss.str());
    }
    return io::read_file(p);
}

std::vector<long> parse_list(const std::string& s) {
    std::vector<long> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stol(part, &pos));
            if (pos != part.size()) throw SchemaError("bad integer '" + part + "'");
        } catch (const std::logic_error&) {
            throw SchemaError("bad integer '" + part + "'");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

json cmd_measure_eval(const Globals& g, const std::string& mpath, const std::string& chr) {
    auto mu = io::measure_from_json(input(g, mpath));
    Point k = parse_list(chr);
    if (static_cast<long>(k.size()) != mu.rank()) throw SchemaError("--char needs one index per coordinate");
    CycloRational v = mu.integrate_additive(k);
    json j{{"p", mu.prime()}, {"r", mu.level()}, {"char", k}, {"value", io::to_json(v)}};
    bool integral = true;
    for (const auto& c : mu.coeffs())
        if (!c.is_rational() || (!c.is_zero() && vp(c.rational_value(), mu.prime()) < 0)) integral = false;
    if (integral) {
        auto pv = pi_valuation(v, mu.prime(), mu.level());
        j["pi_valuation"] = pv ? json(*pv) : json("infinity");
    }
    return j;
}

json cmd_kl(const Globals& g, long k, long branch, bool branch_set, long c, const std::string& expect) {
    if (g.p < 2) throw SchemaError("kl needs --p");
    long N = g.N > 0 ? g.N : default_precision();
    long i = branch_set ? branch : ((k % (g.p - 1)) + (g.p - 1)) % (g.p - 1);
    KLResult r = kubota_leopoldt(g.p, N, i, KLPoint::at_integer(k), c);
    json j{{"p", g.p},
           {"N", N},
           {"k", k},
           {"branch", i},
           {"c_used", r.c_used},
           {"regulator_valuation", r.regulator_valuation},
           {"value", io::to_json(r.value)}};
    if (!expect.empty()) {
        auto e = PadicScalar::from_rational(g.p, N, io::mpq_from_json(json(expect)));
        j["expected"] = expect;
        j["expected_match"] = r.value.congruent(e) && r.value.valuation() == e.valuation();
    }
    return j;
}

json cmd_euler(const Globals& g, const std::string& rep_path, const std::string& chi_path, long at, bool at_set) {
    LocalRep pi = io::local_rep_from_json(input(g, rep_path));
    json cj = input(g, chi_path);
    LocalCharacter c1 = io::local_character_from_json(cj.at("chi1"));
    LocalCharacter c2 = cj.contains("chi2") ? io::local_character_from_json(cj.at("chi2")) : c1;
    auto f = modified_euler_p(pi, c1, c2);
    json j{{"factor", io::to_json(f)},
           {"central_sign", central_sign(pi, c1)},
           {"alternative_form_agrees", euler_alt_form_identity(pi, c1, c2)}};
    if (at_set) j["value_at"] = {{"s", at}, {"value", io::to_json(f.evaluate(at))}};
    return j;
}

json cmd_dnorm(const Globals& g, long n, long eta, long m, bool m_set) {
    LocalCharacter chi = io::local_character_from_json(input(g));
    auto f = d_norm_doubling(n, chi, eta);
    json j{{"n", n}, {"eta_at_uniformizer", eta}, {"doubling", io::to_json(f)}};
    if (m_set) j["normalizer"] = {{"m", m}, {"value", io::to_json(d_norm_normalizer(n, m, chi, eta))}};
    return j;
}

json cmd_weights(const Globals& g, const std::string& kind) {
    json in = input(g);
    if (kind != "critical") return io::to_json(apply_involution(io::weight_from_json(in), parse_involution(kind)));
    if (!in.contains("weight") || !in.contains("infinity_type"))
        throw SchemaError("critical needs {\"weight\": ..., \"infinity_type\": ...}");
    Weight w = io::weight_from_json(in.at("weight"));
    InfinityType chi = io::infinity_type_from_json(in.at("infinity_type"));
    auto params = critical_membership(w, chi);
    json j{{"critical", params.has_value()}};
    if (params) {
        j["places"] = io::to_json(*params);
        j["round_trip"] = reconstruct_critical(w, chi, *params) == w;
    }
    return j;
}

std::vector<HodgeData> hodge_from_place_weight(const PlaceWeight& w) {
    w.validate();
    std::vector<HodgeData> hd;
    for (long s = 0; s < w.places(); ++s) {
        std::vector<long> kc(w.b);
        for (long k = 0; k < w.b; ++k) kc[k] = -w.kappa_c[s][w.b - 1 - k];
        hd.push_back(hodge_types(w.kappa[s], kc, w.a, w.b));
    }
    return hd;
}

json cmd_polygon(const Globals& g, const std::string& kind, const std::string& svg, const std::string& tsv) {
    json in = input(g);
    Polygon P;
    json j;
    if (kind == "newton") {
        auto H = io::hecke_from_json(in);
        P = newton_polygon(H);
        j["newton"] = io::to_json(P);
        j["constructions_agree"] = P.simplified() == newton_polygon_from_coefficients(H).simplified();
    } else if (kind == "hodge") {
        auto hd = hodge_from_place_weight(io::place_weight_from_json(in));
        P = hodge_polygon(hd);
        json types = json::array();
        for (const auto& h : hd) types.push_back(io::to_json(h));
        j["hodge"] = io::to_json(P);
        j["types"] = types;
    } else if (kind == "panchishkin") {
        if (!in.contains("weight") || !in.contains("alpha"))
            throw SchemaError("panchishkin needs {\"weight\": ..., \"alpha\": {...}}");
        auto w = io::place_weight_from_json(in.at("weight"));
        auto alpha = io::alpha_from_json(in.at("alpha"));
        if (static_cast<long>(alpha.size()) != w.n()) throw SchemaError("alpha must have n entries");
        HeckePolynomial H;
        H.q = alpha[0].prime();
        for (const auto& x : alpha) H.alpha_valuations.push_back(x.valuation());
        Polygon newton = newton_polygon(H);
        P = normalize_hodge_for_newton(hodge_polygon(hodge_from_place_weight(w)), w.n(), w.places());
        j["newton"] = io::to_json(newton);
        j["hodge_normalized"] = io::to_json(P);
        j["ordinary"] = is_ordinary(alpha, w);
        j["midpoint_agrees"] = panchishkin_check(newton, P, w.n());
        if (!svg.empty()) write_text(svg, newton.to_svg("Newton"));
        if (!tsv.empty()) write_text(tsv, newton.to_tsv());
        return j;
    } else {
        throw SchemaError("unknown polygon kind '" + kind + "'");
    }
    if (!svg.empty()) write_text(svg, P.to_svg(kind));
    if (!tsv.empty()) write_text(tsv, P.to_tsv());
    return j;
}

json cmd_sw_check(long u, long d) {
    auto r = degree_decomposition_check(u, d);
    json parts = json::array();
    for (const auto& mu : partitions_at_most(d, u)) parts.push_back({{"mu", mu}, {"dim", io::to_json(weyl_dimension(mu))}});
    return json{{"u", u},
                {"d", d},
                {"sum_of_squares", io::to_json(r.sum_of_squares)},
                {"expected", io::to_json(r.expected)},
                {"holds", r.holds},
                {"weights", parts}};
}

json cmd_sw_poly(const std::string& rt, const std::string& st) {
    auto r = parse_list(rt), s = parse_list(st);
    long a = static_cast<long>(r.size()), b = static_cast<long>(s.size());
    if (a + b == 0) throw SchemaError("give --rtilde and/or --stilde");
    auto P = p_polynomial(r, s, a, b);
    return json{{"rtilde", r},
                {"stilde", s},
                {"polynomial", P.str()},
                {"degree", p_polynomial_degree(r, s)},
                {"mu_a", weight_from_differences(r)},
                {"mu_b", weight_from_differences(s)},
                {"highest_weight", p_polynomial_verify(r, s, a, b)}};
}

json cmd_ordinary(const Globals& g, const std::string& apath, const std::string& kpath) {
    auto alpha = io::alpha_from_json(input(g, apath));
    auto w = io::place_weight_from_json(input(g, kpath));
    json th = json::array(), ev = json::array();
    for (const auto& t : theta(w)) th.push_back(t.str());
    for (const auto& c : ordinary_eigenvalues(alpha, w)) ev.push_back(io::to_json(c));
    return json{{"theta", th},
                {"eigenvalues", ev},
                {"ordinary", is_ordinary(alpha, w)},
                {"anti_ordinary", is_anti_ordinary(alpha, w)},
                {"theta_regular", theta_regularity(w)}};
}

int cmd_acceptance(const Globals& g) {
    bool all = true;
    std::ostringstream table;
    for (const auto& r : acceptance::run_all(g.seed)) {
        table << acceptance::format_line(r) << "\n";
        all = all && r.pass;
    }
    table << (all ? "all criteria passed" : "some criteria failed") << "\n";
    emit(g, table.str());
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-adic measures, local factors and weight combinatorics"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--in", g.in, "input JSON file ('-' for stdin)");
    app.add_option("--out", g.out, "output file (default stdout)");
    app.add_option("--p", g.p, "prime");
    app.add_option("--N", g.N, "p-adic precision (default $LPADIC_PRECISION or 20)");
    app.add_option("--seed", g.seed, "seed for randomized runs");
    app.fallthrough();

    std::function<int()> action;
    auto set = [&](std::function<json()> f) {
        action = [&, f] {
            emit(g, io::dump(f()));
            return 0;
        };
    };

    auto* measure = app.add_subcommand("measure", "finite-level measures");
    measure->require_subcommand(1);
    auto* meval = measure->add_subcommand("eval", "integrate an additive character");
    std::string mpath, chr;
    meval->add_option("--measure", mpath, "measure JSON")->required();
    meval->add_option("--char", chr, "character index, e.g. 1,0")->required();
    meval->callback([&] { set([&] { return cmd_measure_eval(g, mpath, chr); }); });

    auto* kl = app.add_subcommand("kl", "Kubota-Leopoldt value at an integer point");
    long k = 0, branch = 0, c = 2;
    std::string expect;
    kl->add_option("--k", k)->required();
    auto* bopt = kl->add_option("--branch", branch, "Teichmueller branch (default k mod p-1)");
    kl->add_option("--c", c, "regularizing unit");
    kl->add_option("--expect", expect, "rational to compare against, e.g. -31/30");
    kl->callback([&] { set([&] { return cmd_kl(g, k, branch, bopt->count() > 0, c, expect); }); });

    auto* euler = app.add_subcommand("euler-p", "modified Euler factor at p");
    std::string rep, chi;
    long at = 0;
    euler->add_option("--rep", rep, "local representation JSON")->required();
    euler->add_option("--chi", chi, "{\"chi1\": ..., \"chi2\": ...}")->required();
    auto* atopt = euler->add_option("--at", at, "evaluate at s = m");
    euler->callback([&] { set([&] { return cmd_euler(g, rep, chi, at, atopt->count() > 0); }); });

    auto* dnorm = app.add_subcommand("dnorm", "doubling normalizer; --in holds the character chi_+");
    long dn = 1, eta = 1, dm = 0;
    dnorm->add_option("--n", dn)->required();
    dnorm->add_option("--eta", eta, "eta at the uniformizer (+1 or -1)");
    auto* mopt = dnorm->add_option("--m", dm, "evaluate at s = m");
    dnorm->callback([&] { set([&] { return cmd_dnorm(g, dn, eta, dm, mopt->count() > 0); }); });

    auto* weights = app.add_subcommand("weights", "weight involutions and critical membership");
    std::string wkind;
    weights->add_option("kind", wkind, "star | D | flat | dagger | critical")
        ->required()
        ->check(CLI::IsMember({"star", "D", "flat", "dagger", "critical"}));
    weights->callback([&] { set([&] { return cmd_weights(g, wkind); }); });

    auto* polygon = app.add_subcommand("polygon", "Newton and Hodge polygons");
    std::string pkind, svg, tsv;
    polygon->add_option("kind", pkind, "newton | hodge | panchishkin")
        ->required()
        ->check(CLI::IsMember({"newton", "hodge", "panchishkin"}));
    polygon->add_option("--svg", svg, "also write an SVG plot");
    polygon->add_option("--tsv", tsv, "also write vertices as TSV");
    polygon->callback([&] { set([&] { return cmd_polygon(g, pkind, svg, tsv); }); });

    auto* sw = app.add_subcommand("schurweyl", "Schur-Weyl checks");
    sw->require_subcommand(1);
    auto* swc = sw->add_subcommand("check", "sum of squared dimensions");
    long u = 1, d = 0;
    swc->add_option("--u", u)->required();
    swc->add_option("--d", d)->required();
    swc->callback([&] { set([&] { return cmd_sw_check(u, d); }); });
    auto* swp = sw->add_subcommand("poly", "p-polynomial and its highest-weight check");
    std::string rt, st;
    swp->add_option("--rtilde", rt, "exponents on the A-block minors, e.g. 1,0");
    swp->add_option("--stilde", st, "exponents on the D-block minors");
    swp->callback([&] { set([&] { return cmd_sw_poly(rt, st); }); });

    auto* ord = app.add_subcommand("ordinary", "ordinarity of Satake data");
    ord->require_subcommand(1);
    auto* ordc = ord->add_subcommand("check", "normalized eigenvalues and ordinarity");
    std::string apath, kpath;
    ordc->add_option("--alpha", apath, "{\"p\",\"N\",\"alpha\":[...]}")->required();
    ordc->add_option("--kappa", kpath, "place weight JSON")->required();
    ordc->callback([&] { set([&] { return cmd_ordinary(g, apath, kpath); }); });

    auto* acc = app.add_subcommand("acceptance", "run the acceptance suite");
    acc->callback([&] { action = [&] { return cmd_acceptance(g); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action ? action() : 2;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const PrecisionError& e) {
        std::cerr << "precision error: " << e.what() << "\n";
        return 3;
    }
}
