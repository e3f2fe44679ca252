#include "zonoid/io.hpp"

#include <cctype>
#include <sstream>

namespace zonoid {

json to_json(const Rational& q) { return to_string(q); }

json to_json(const PiScalar& x) {
  return json{{"coeff", to_string(x.coeff)}, {"pi_exp", to_string(x.pi_exp)}, {"value", x.to_double()}};
}

json to_json(const Estimate& e, double z) {
  return json{{"mean", e.mean},
              {"std_error", e.std_error},
              {"samples", e.samples},
              {"seed", e.seed},
              {"z", z},
              {"ci", json::array({e.lower(z), e.upper(z)})}};
}

std::string monomial_name(int j, int i) {
  std::string s;
  if (j > 0) s += j == 1 ? "s" : "s^" + std::to_string(j);
  if (i > 0) {
    if (!s.empty()) s += " ";
    s += i == 1 ? "t" : "t^" + std::to_string(i);
  }
  return s.empty() ? "1" : s;
}

json to_json(const RingElement& e) {
  json terms = json::array();
  for (const auto& [k, c] : e.coeffs)
    terms.push_back({{"degree", k.first}, {"j", k.second}, {"monomial", monomial_name(k.second, k.first - 2 * k.second)},
                     {"coeff", to_string(c)}});
  return json{{"n", e.n}, {"pi_exp", to_string(e.pi_exp)}, {"terms", terms}};
}

json to_json(const Relation& r) {
  json st = json::array(), gb = json::array();
  for (auto it = r.st.rbegin(); it != r.st.rend(); ++it)
    if (it->second != 0) st.push_back({{"s", it->first.first}, {"t", it->first.second}, {"coeff", to_string(it->second)}});
  for (const auto& t : r.gamma_beta) gb.push_back({{"gamma", t.gamma_pow}, {"beta", t.beta_pow}, {"coeff", to_json(t.coeff)}});
  return json{{"index", r.index}, {"st", st}, {"gamma_beta", gb}};
}

json to_json(const YoungDiagram& d) { return to_string(d); }

json to_json(const SpanReport& r) {
  json orbits = json::array(), wedges = json::array();
  for (const auto& o : r.orbits) orbits.push_back({{"lambda", to_json(o.lambda)}, {"rank", o.rank}, {"expected", o.expected}});
  for (const auto& w : r.wedges)
    wedges.push_back({{"lambda", to_json(w.lambda)}, {"mu", to_json(w.mu)}, {"rank", w.rank}, {"expected", w.expected}});
  return json{{"k", r.k},         {"m", r.m},
              {"d", r.d},         {"orbits", orbits},
              {"max_cross_inner", r.max_cross_inner},
              {"total_rank", r.total_rank},
              {"wedges", wedges}, {"ok", r.ok}};
}

namespace {

std::string key_string(const IndexSet& k) {
  std::string s;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(k[i] + 1);
  }
  return s;
}

template <class T>
json zonoid_json(const VirtualZonoid<T>& z) {
  json atoms = json::array();
  for (const auto& a : z.atoms) {
    json v = json::array();
    for (const auto& f : a.v.factors) {
      json row = json::array();
      for (const auto& x : f) {
        if constexpr (std::is_same_v<T, double>) row.push_back(x);
        else row.push_back(to_json(x));
      }
      v.push_back(row);
    }
    if constexpr (std::is_same_v<T, double>) atoms.push_back({{"w", a.w}, {"v", v}});
    else atoms.push_back({{"w", to_json(a.w)}, {"v", v}});
  }
  json center = json::object();
  for (const auto& [k, c] : z.center.coords) {
    if constexpr (std::is_same_v<T, double>) center[key_string(k)] = c;
    else center[key_string(k)] = to_json(c);
  }
  return json{{"ambient", z.ambient}, {"degree", z.degree}, {"atoms", atoms}, {"center", center}};
}

struct Num {
  bool exact = true;
  Rational q;
  double d = 0.0;
};

Num read_number(const json& j, const std::string& where) {
  Num n;
  try {
    if (j.is_number_integer()) {
      n.q = j.is_number_unsigned() ? Rational(std::to_string(j.get<std::uint64_t>())) : Rational(std::to_string(j.get<std::int64_t>()));
      n.d = n.q.get_d();
    } else if (j.is_number_float()) {
      n.exact = false;
      n.d = j.get<double>();
    } else if (j.is_string()) {
      n.q = parse_rational(j.get<std::string>());
      n.d = n.q.get_d();
    } else {
      throw SchemaError(where + ": expected a number or a \"p/q\" string");
    }
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    throw SchemaError(where + ": " + e.what());
  }
  return n;
}

int read_int(const json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_number_integer()) throw SchemaError(std::string("zonoid: integer field '") + field + "' required");
  return j.at(field).get<int>();
}

IndexSet parse_key(const std::string& s, int n, int d) {
  IndexSet k;
  if (!s.empty()) {
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        std::size_t pos = 0;
        const int v = std::stoi(part, &pos);
        if (pos != part.size()) throw std::invalid_argument("trailing characters");
        k.push_back(v - 1);
      } catch (const std::exception&) {
        throw SchemaError("center key '" + s + "' is not a comma list of indices");
      }
    }
  }
  if (static_cast<int>(k.size()) != d) throw SchemaError("center key '" + s + "' has the wrong number of indices");
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 0 || k[i] >= n) throw SchemaError("center key '" + s + "' out of range");
    if (i && k[i] <= k[i - 1]) throw SchemaError("center key '" + s + "' must be strictly increasing");
  }
  return k;
}

}  // namespace

json to_json(const VirtualZonoid<Rational>& z) { return zonoid_json(z); }
json to_json(const VirtualZonoid<double>& z) { return zonoid_json(z); }

Rational rational_from_json(const json& j) {
  Num n = read_number(j, "rational");
  if (!n.exact) throw SchemaError("expected an exact rational");
  return n.q;
}

PiScalar pi_scalar_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeff") || !j.contains("pi_exp")) throw SchemaError("PiScalar needs coeff and pi_exp");
  return PiScalar(rational_from_json(j.at("coeff")), rational_from_json(j.at("pi_exp")));
}

ParsedZonoid parse_zonoid(const json& j) {
  if (!j.is_object()) throw SchemaError("zonoid: expected an object");
  const int n = read_int(j, "ambient"), d = read_int(j, "degree");
  if (n < 1 || d < 0 || d > n) throw SchemaError("zonoid: need ambient >= 1 and 0 <= degree <= ambient");
  if (!j.contains("atoms") || !j.at("atoms").is_array()) throw SchemaError("zonoid: 'atoms' array required");

  struct RawAtom {
    Num w;
    std::vector<std::vector<Num>> v;
  };
  std::vector<RawAtom> raw;
  bool exact = true;
  for (std::size_t a = 0; a < j.at("atoms").size(); ++a) {
    const json& atom = j.at("atoms")[a];
    const std::string where = "atoms[" + std::to_string(a) + "]";
    if (!atom.is_object() || !atom.contains("w") || !atom.contains("v")) throw SchemaError(where + ": needs 'w' and 'v'");
    RawAtom r;
    r.w = read_number(atom.at("w"), where + ".w");
    exact = exact && r.w.exact;
    const json& v = atom.at("v");
    if (!v.is_array() || static_cast<int>(v.size()) != d) throw SchemaError(where + ".v: expected " + std::to_string(d) + " factors");
    for (const auto& f : v) {
      if (!f.is_array() || static_cast<int>(f.size()) != n) throw SchemaError(where + ".v: factors must have length " + std::to_string(n));
      std::vector<Num> row;
      for (const auto& x : f) {
        row.push_back(read_number(x, where + ".v"));
        exact = exact && row.back().exact;
      }
      r.v.push_back(std::move(row));
    }
    raw.push_back(std::move(r));
  }
  std::vector<std::pair<IndexSet, Num>> center;
  if (j.contains("center") && !j.at("center").is_null()) {
    if (!j.at("center").is_object()) throw SchemaError("zonoid: 'center' must map index lists to numbers");
    for (const auto& [key, val] : j.at("center").items()) {
      center.emplace_back(parse_key(key, n, d), read_number(val, "center"));
      exact = exact && center.back().second.exact;
    }
  }

  ParsedZonoid out;
  out.exact = exact;
  out.q = VirtualZonoid<Rational>(n, d);
  out.f = VirtualZonoid<double>(n, d);
  for (const auto& r : raw) {
    std::vector<std::vector<Rational>> fq;
    std::vector<std::vector<double>> fd;
    for (const auto& row : r.v) {
      fq.emplace_back();
      fd.emplace_back();
      for (const auto& x : row) {
        fq.back().push_back(x.q);
        fd.back().push_back(x.d);
      }
    }
    if (exact) out.q.add_atom(r.w.q, SimpleVector<Rational>(n, fq));
    out.f.add_atom(r.w.d, SimpleVector<double>(n, fd));
  }
  for (const auto& [k, c] : center) {
    if (exact) out.q.center.add(k, c.q);
    out.f.center.add(k, c.d);
  }
  return out;
}

void promote_to_double(ParsedZonoid& z) { z.exact = false; }

std::vector<ParsedZonoid> parse_zonoid_list(const json& j) {
  std::vector<ParsedZonoid> out;
  if (j.is_object() && j.contains("zonoids")) {
    if (!j.at("zonoids").is_array()) throw SchemaError("'zonoids' must be an array");
    for (const auto& z : j.at("zonoids")) out.push_back(parse_zonoid(z));
  } else if (j.is_array()) {
    for (const auto& z : j) out.push_back(parse_zonoid(z));
  } else {
    out.push_back(parse_zonoid(j));
  }
  bool exact = true;
  for (const auto& z : out) exact = exact && z.exact;
  if (!exact)
    for (auto& z : out) promote_to_double(z);
  return out;
}

RingElement parse_ring_element(int n, const std::string& text) {
  RingElement out(n);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int_at = [&]() -> long {
    skip();
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw std::invalid_argument("expected an integer in '" + text + "'");
    return std::stol(text.substr(start, i - start));
  };
  skip();
  if (i == text.size()) throw std::invalid_argument("empty ring element");
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    Rational sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
    } else if (!first) {
      throw std::invalid_argument("expected + or - in '" + text + "'");
    }
    first = false;
    skip();
    Rational coeff = 1;
    bool any = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      long num = read_int_at();
      long den = 1;
      skip();
      if (i < text.size() && text[i] == '/') {
        ++i;
        den = read_int_at();
        if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
      }
      coeff = frac(num, den);
      any = true;
    }
    int js = 0, ts = 0;
    while (true) {
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      }
      if (i >= text.size() || (text[i] != 's' && text[i] != 't')) break;
      const char var = text[i++];
      long e = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        e = read_int_at();
      }
      (var == 's' ? js : ts) += static_cast<int>(e);
      any = true;
    }
    if (!any) throw std::invalid_argument("could not parse term in '" + text + "'");
    out = out + (sign * coeff) * RingElement::monomial(n, js, ts);
  }
  return out;
}

}  // namespace zonoid
