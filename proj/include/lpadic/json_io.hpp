#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lpadic/cyclo.hpp"
#include "lpadic/local_factors.hpp"
#include "lpadic/measures.hpp"
#include "lpadic/ordinarity.hpp"
#include "lpadic/padic.hpp"
#include "lpadic/polygons.hpp"
#include "lpadic/weights.hpp"

// JSON schemas.  Big integers and rationals travel as decimal strings ("-31/30");
// plain JSON integers are accepted on input.  All parsers throw SchemaError.
namespace lpadic::io {

using json = nlohmann::json;

json parse_text(const std::string& text);
json read_file(const std::string& path);
// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);

long get_long(const json& j, const std::string& key);
long get_long_or(const json& j, const std::string& key, long fallback);
std::vector<long> get_long_list(const json& j, const std::string& key);

json to_json(const mpz_class& x);
json to_json(const mpq_class& x);
mpz_class mpz_from_json(const json& j);
mpq_class mpq_from_json(const json& j);

// A rational (string/number) or {"conductor": M, "coeffs": [...]} or
// {"zeta": M, "power": k}.
json to_json(const CycloRational& x);
CycloRational cyclo_from_json(const json& j);

// {"p","N","valuation","unit"} or {"p","N","rational"}; zero as {"p","N","zero": ">= v"}.
json to_json(const PadicScalar& x);
PadicScalar padic_from_json(const json& j);

// {"type":"finite","p","r","d","table":{"x1,...,xd": value}}; a flat "coeffs"
// list in mixed-radix index order is accepted instead of "table".
json to_json(const FiniteLevelMeasure& mu);
FiniteLevelMeasure measure_from_json(const json& j);
// {"type":"amice","p","N","D","coeffs":[...]}.
json to_json(const AmiceSeries& F);
AmiceSeries amice_from_json(const json& j);

json to_json(const Weight& w);
Weight weight_from_json(const json& j);
json to_json(const InfinityType& chi);
InfinityType infinity_type_from_json(const json& j);
json to_json(const std::vector<CriticalPlace>& params);

// {"a","b","sigma":[{"kappa":[a entries],"kappa_c":[b entries]}]}.
json to_json(const PlaceWeight& w);
PlaceWeight place_weight_from_json(const json& j);

json to_json(const HodgeData& h);
json to_json(const Polygon& P);
Polygon polygon_from_json(const json& j);
// {"q", "alpha_valuations": ["1", "-3/2", ...]}.
json to_json(const HeckePolynomial& H);
HeckePolynomial hecke_from_json(const json& j);

// {"q","value","conductor","exponent"}; conductor and exponent default to 0.
json to_json(const LocalCharacter& x);
LocalCharacter local_character_from_json(const json& j);
// {"a","b","mu_a":[...],"mu_b":[...]}.
json to_json(const LocalRep& r);
LocalRep local_rep_from_json(const json& j);
json to_json(const QuadCyclo& x);
json to_json(const LocalFactorFn& f);

// {"p","N","alpha":[scalar...]}; the entries inherit p and N when omitted.
std::vector<PadicScalar> alpha_from_json(const json& j);

}  // namespace lpadic::io
