#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "zonoid/cpn_ring.hpp"
#include "zonoid/schubert.hpp"
#include "zonoid/zonoid.hpp"

namespace zonoid {

using json = nlohmann::json;

// Malformed input documents; the CLI maps these to the usage exit code.
struct SchemaError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

json to_json(const Rational& q);  // "p/q"
json to_json(const PiScalar& x);  // {"coeff", "pi_exp", "value"}
json to_json(const Estimate& e, double z = 3.0);
json to_json(const RingElement& e);
json to_json(const Relation& r);
json to_json(const YoungDiagram& d);
json to_json(const SpanReport& r);
json to_json(const VirtualZonoid<Rational>& z);
json to_json(const VirtualZonoid<double>& z);

Rational rational_from_json(const json& j);
PiScalar pi_scalar_from_json(const json& j);

// "s^j t^i" with the trivial parts dropped ("1" for the unit).
std::string monomial_name(int j, int i);

// Parses a polynomial in s and t such as "s^2 - 1/3*s*t^2 + t^4".
RingElement parse_ring_element(int n, const std::string& text);

// A zonoid document is exact when every number is an integer or a "p/q" string.
struct ParsedZonoid {
  bool exact = true;
  VirtualZonoid<Rational> q;
  VirtualZonoid<double> f;
};

ParsedZonoid parse_zonoid(const json& j);
// Either a single zonoid or {"zonoids": [...]}, all promoted to one mode.
std::vector<ParsedZonoid> parse_zonoid_list(const json& j);
void promote_to_double(ParsedZonoid& z);

}  // namespace zonoid
