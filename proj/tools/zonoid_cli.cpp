#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "zonoid/cpn_ring.hpp"
#include "zonoid/io.hpp"
#include "zonoid/schubert.hpp"
#include "zonoid/sphere_ring.hpp"
#include "zonoid/version.hpp"
#include "zonoid/zonoid.hpp"

using namespace zonoid;

namespace {

struct RunConfig {
  std::uint64_t seed = 0;
  std::uint64_t samples = 100000;
  unsigned workers = 0;
  double z = 3.0;
  std::string output;
  std::string format = "json";
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

McConfig mc(const RunConfig& rc) {
  McConfig c;
  c.samples = rc.samples;
  c.seed = rc.seed;
  c.workers = rc.workers;
  return c;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

json read_json_file(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
}

std::string csv_cell(const json& v) {
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
    return csv_cell(json(s));
  }
  if (v.is_object() && v.contains("value")) return v["value"].dump();
  return csv_cell(json(v.dump()));
}

// Arrays of flat records become a table; flat objects become key,value rows.
std::string to_csv(const json& result) {
  std::ostringstream out;
  const json* rows = &result;
  if (result.is_object() && result.contains("rows")) rows = &result["rows"];
  if (rows->is_array() && !rows->empty() && (*rows)[0].is_object()) {
    std::vector<std::string> keys;
    for (auto it = (*rows)[0].begin(); it != (*rows)[0].end(); ++it) keys.push_back(it.key());
    for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
    out << "\n";
    for (const auto& r : *rows) {
      for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << (r.contains(keys[i]) ? csv_cell(r[keys[i]]) : "");
      out << "\n";
    }
    return out.str();
  }
  if (result.is_object()) {
    out << "key,value\n";
    for (auto it = result.begin(); it != result.end(); ++it) out << it.key() << "," << csv_cell(it.value()) << "\n";
    return out.str();
  }
  out << "value\n" << csv_cell(result) << "\n";
  return out.str();
}

void emit(const RunConfig& rc, const std::string& command, const json& result) {
  std::string text;
  if (rc.format == "csv") {
    text = to_csv(result);
  } else {
    json doc;
    doc["meta"] = {{"command", command},       {"version", kVersion}, {"seed", rc.seed},
                   {"samples", rc.samples},    {"workers", rc.workers}, {"z", rc.z}};
    doc["result"] = result;
    text = doc.dump(2) + "\n";
  }
  if (rc.output.empty() || rc.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(rc.output);
  if (!out) throw UsageError("cannot write " + rc.output);
  out << text;
}

// ---------------------------------------------------------------- cpn

json cpn_basis(int n) {
  json rows = json::array();
  for (int d = 0; d <= 2 * n; ++d) {
    json names = json::array();
    for (int j = 0; j <= basis_max_j(n, d); ++j) names.push_back(monomial_name(j, d - 2 * j));
    rows.push_back({{"degree", d}, {"dimension", dimension(n, d)}, {"monomials", names}});
  }
  return {{"n", n}, {"rows", rows}};
}

json cpn_length(const RingElement& a) {
  json rows = json::array();
  for (const auto& [d, v] : length(a)) {
    json r = to_json(v);
    r["degree"] = d;
    rows.push_back(r);
  }
  return {{"element", to_json(a)}, {"rows", rows}};
}

json cpn_tasaki(int n, const std::string& xs, const std::string& ys, const RunConfig& rc) {
  if (n < 2) throw UsageError("tasaki needs n >= 2");
  const Rational xq = parse_rational(xs), yq = parse_rational(ys);
  if (xq < 0 || xq > 1 || yq < 0 || yq > 1) throw UsageError("tasaki: x and y must lie in [0,1]");
  const double x = xq.get_d(), y = yq.get_d();
  const Estimate e = mc_tasaki_kernel_d2(n, x, y, mc(rc));
  return {{"n", n},
          {"x", to_json(xq)},
          {"y", to_json(yq)},
          {"closed_form", to_json(PiScalar(tasaki_kernel_d2(n, xq, yq)))},
          {"estimate", to_json(e, rc.z)},
          {"covers", e.covers(tasaki_kernel_d2(n, x, y), rc.z)}};
}

// ---------------------------------------------------------------- schubert

void check_fits(const YoungDiagram& l, int k, int m) {
  if (!fits(l, k, m)) throw UsageError("diagram " + to_string(l) + " does not fit the " + std::to_string(k) + "x" +
                                       std::to_string(m) + " rectangle");
}

json schubert_lr(const std::string& as, const std::string& bs, int k, int m) {
  const YoungDiagram a = parse_diagram(as), b = parse_diagram(bs);
  check_fits(a, k, m);
  check_fits(b, k, m);
  json out = json::object();
  for (const auto& [nu, c] : lr_coefficients(a, b))
    if (fits(nu, k, m)) out[to_string(nu)] = c;
  return out;
}

json schubert_shape(const std::string& spec, int k, int m, const RunConfig& rc) {
  std::vector<YoungDiagram> ls;
  for (const auto& part : split(spec, '|')) {
    ls.push_back(parse_diagram(part));
    check_fits(ls.back(), k, m);
  }
  int total = 0;
  for (const auto& l : ls) total += size(l);
  if (total != k * m) throw UsageError("diagram sizes must add up to k*m");
  json names = json::array();
  for (const auto& l : ls) names.push_back(to_string(l));
  const Estimate e = mc_schubert_shape(ls, k, m, mc(rc));
  return {{"k", k}, {"m", m}, {"diagrams", names}, {"estimate", to_json(e, rc.z)}, {"max_sample", e.max_value}};
}

json schubert_edeg22(const RunConfig& rc) {
  const Edeg22Report r = edeg22_calibrated(mc(rc));
  return {{"edeg", to_json(r.result, rc.z)},
          {"components",
           {{"E4", to_json(r.e4, rc.z)},
            {"D11", to_json(r.d11, rc.z)},
            {"D22", to_json(r.d22, rc.z)},
            {"D3", to_json(r.d3, rc.z)},
            {"D4", to_json(r.d4, rc.z)}}},
          {"upper_below_2", r.result.upper(rc.z) < 2.0}};
}

// ---------------------------------------------------------------- zonoid

json zonoid_length(const json& doc) {
  auto zs = parse_zonoid_list(doc);
  json rows = json::array();
  for (const auto& z : zs)
    rows.push_back(z.exact ? to_json(PiScalar(length(z.q))) : json(length(z.f)));
  if (rows.size() == 1) return {{"length", rows[0]}};
  return {{"lengths", rows}};
}

json zonoid_mixed_volume(const json& doc) {
  auto zs = parse_zonoid_list(doc);
  if (zs.empty()) throw UsageError("no zonoids given");
  if (zs.front().exact) {
    std::vector<VirtualZonoid<Rational>> q;
    for (const auto& z : zs) q.push_back(z.q);
    return {{"mixed_volume", to_json(PiScalar(mixed_volume(q)))}};
  }
  std::vector<VirtualZonoid<double>> f;
  for (const auto& z : zs) f.push_back(z.f);
  return {{"mixed_volume", mixed_volume(f)}};
}

template <class T>
std::vector<VirtualZonoid<T>> star_exp(const VirtualZonoid<T>& M) {
  std::vector<VirtualZonoid<T>> out;
  for (const auto& p : exp_truncated(M, M.ambient)) out.push_back(hodge_dual(p));
  return out;
}

// {"L": zonoid or list, "K": zonoid}; with star_exp the single degree-one L
// is replaced by the Hodge duals of its exponential, giving vol(K + L).
json zonoid_crofton(const json& doc, bool use_star_exp) {
  if (!doc.is_object() || !doc.contains("L") || !doc.contains("K"))
    throw SchemaError("crofton input needs \"L\" and \"K\"");
  json both = json::array();
  json ls = doc["L"].is_array() ? doc["L"] : json::array({doc["L"]});
  for (const auto& l : ls) both.push_back(l);
  both.push_back(doc["K"]);
  auto zs = parse_zonoid_list(both);
  ParsedZonoid K = zs.back();
  zs.pop_back();
  if (use_star_exp && zs.size() != 1) throw UsageError("--star-exp takes a single degree-one L");
  if (K.exact) {
    std::vector<VirtualZonoid<Rational>> L;
    for (const auto& z : zs) L.push_back(z.q);
    if (use_star_exp) L = star_exp(L.front());
    return {{"value", to_json(PiScalar(crofton_evaluate(L, K.q)))}};
  }
  std::vector<VirtualZonoid<double>> L;
  for (const auto& z : zs) L.push_back(z.f);
  if (use_star_exp) L = star_exp(L.front());
  return {{"value", crofton_evaluate(L, K.f)}};
}

json zonoid_intrinsic(const json& doc, int only) {
  auto zs = parse_zonoid_list(doc);
  if (zs.size() != 1) throw UsageError("intrinsic takes a single zonoid");
  const auto& z = zs.front();
  const int n = z.exact ? z.q.ambient : z.f.ambient;
  json rows = json::array();
  for (int d = 0; d <= n; ++d) {
    if (only >= 0 && d != only) continue;
    if (z.exact)
      rows.push_back({{"d", d}, {"value", to_json(PiScalar(intrinsic_volume(z.q, d)))}});
    else
      rows.push_back({{"d", d}, {"value", intrinsic_volume(z.f, d)}});
  }
  return {{"rows", rows}};
}

// ---------------------------------------------------------------- sphere

json sphere_ball_table(int N) {
  if (N < 0) throw UsageError("N must be nonnegative");
  json rows = json::array();
  for (int i = 0; i <= N; ++i) {
    rows.push_back({{"i", i},
                    {"kappa", to_json(kappa(i))},
                    {"ball_wedge_length", to_json(ball_wedge_length(N, 0, i, PiScalar(1)))}});
  }
  return {{"N", N}, {"rows", rows}};
}

json sphere_count(long n, const std::string& codims_s, const std::string& ratios_s, bool projective) {
  std::vector<long> codims;
  std::vector<Rational> ratios;
  for (const auto& c : split(codims_s, ',')) codims.push_back(std::stol(c));
  for (const auto& r : split(ratios_s, ',')) ratios.push_back(parse_rational(r));
  return {{"n", n},
          {"projective", projective},
          {"expected_count", to_json(sphere_expected_count(n, codims, ratios, projective))}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Probabilistic intersection rings: exact zonoid calculus and Monte-Carlo estimates"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  RunConfig rc;
  app.add_option("--seed", rc.seed, "RNG seed")->envname("ZONOID_SEED");
  app.add_option("--samples", rc.samples, "Monte-Carlo samples")->check(CLI::Range(std::uint64_t{1}, ~std::uint64_t{0}));
  app.add_option("--workers", rc.workers, "worker threads (0 = all cores)");
  app.add_option("--z", rc.z, "confidence multiplier")->check(CLI::PositiveNumber);
  app.add_option("--format", rc.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output,-o", rc.output, "output file (default stdout)");

  std::function<json()> run;
  std::string command;

  // cpn
  auto* cpn = app.add_subcommand("cpn", "exact ring of complex projective space")->fallthrough();
  cpn->require_subcommand(1);
  int n = 0;
  cpn->add_option("--n", n, "complex dimension")->required()->check(CLI::Range(1, 64));
  std::string a_text, b_text;
  cpn->add_subcommand("basis", "monomial basis per degree")->callback([&] {
    command = "cpn basis";
    run = [&] { return cpn_basis(n); };
  });
  auto* mul = cpn->add_subcommand("multiply", "product of two elements in s and t");
  mul->add_option("--a", a_text)->required();
  mul->add_option("--b", b_text)->required();
  mul->callback([&] {
    command = "cpn multiply";
    run = [&] { return to_json(parse_ring_element(n, a_text) * parse_ring_element(n, b_text)); };
  });
  cpn->add_subcommand("relations", "generating relations")->callback([&] {
    command = "cpn relations";
    run = [&] {
      auto [f1, f2] = relations(n);
      return json{{"n", n}, {"relations", {to_json(f1), to_json(f2)}}};
    };
  });
  auto* len = cpn->add_subcommand("length", "per-degree lengths");
  len->add_option("--a", a_text)->required();
  len->callback([&] {
    command = "cpn length";
    run = [&] { return cpn_length(parse_ring_element(n, a_text)); };
  });
  std::string d_text, delta_text;
  auto* si = cpn->add_subcommand("selfint", "expected self-intersection of a codimension-2 class");
  si->add_option("--d", d_text)->required();
  si->add_option("--delta", delta_text)->required();
  si->callback([&] {
    command = "cpn selfint";
    run = [&] {
      const Rational d = parse_rational(d_text), delta = parse_rational(delta_text);
      return json{{"closed_form", to_json(PiScalar(self_intersection_codim2(n, d, delta)))},
                  {"via_ring", to_json(PiScalar(self_intersection_via_ring(n, d, delta)))},
                  {"class", to_json(class_codim2(n, d, delta))}};
    };
  });
  std::string x_text = "0", y_text = "0";
  auto* tas = cpn->add_subcommand("tasaki", "degree-2 kernel at Kaehler angles x, y");
  tas->add_option("--x", x_text)->required();
  tas->add_option("--y", y_text)->required();
  tas->callback([&] {
    command = "cpn tasaki";
    run = [&] { return cpn_tasaki(n, x_text, y_text, rc); };
  });

  // schubert
  auto* sch = app.add_subcommand("schubert", "real Grassmannian Schubert zonoids")->fallthrough();
  sch->require_subcommand(1);
  int k = 2, m = 2;
  sch->add_option("--k", k)->check(CLI::Range(1, 16));
  sch->add_option("--m", m)->check(CLI::Range(1, 16));
  auto* lr = sch->add_subcommand("lr", "Littlewood-Richardson coefficients inside the rectangle");
  lr->add_option("--a", a_text)->required();
  lr->add_option("--b", b_text)->required();
  lr->callback([&] {
    command = "schubert lr";
    run = [&] { return schubert_lr(a_text, b_text, k, m); };
  });
  int span_d = -1, draws = 0;
  double tol = 1e-9;
  auto* spans = sch->add_subcommand("spans", "sampled span decompositions");
  spans->add_option("--d", span_d, "degree (default: all)");
  spans->add_option("--draws", draws, "orbit samples per diagram (default: automatic)");
  spans->add_option("--tol", tol)->check(CLI::PositiveNumber);
  spans->callback([&] {
    command = "schubert spans";
    run = [&] {
      json rows = json::array();
      const int lo = span_d < 0 ? 1 : span_d, hi = span_d < 0 ? k * m : span_d;
      if (lo < 0 || hi > k * m) throw UsageError("--d out of range");
      for (int d = lo; d <= hi; ++d) {
        long need = 0;
        for (const auto& l : diagrams_in_rectangle(k, m, d)) need = std::max<long>(need, span_dim(l, k, m).get_si());
        const int s = draws > 0 ? draws : static_cast<int>(2 * need + 8);
        rows.push_back(to_json(verify_span_decomposition(k, m, d, s, tol, rc.seed)));
      }
      return json{{"reports", rows}};
    };
  });
  std::string diagrams;
  auto* shp = sch->add_subcommand("shape", "expected wedge norm of Schubert zonoids");
  shp->add_option("--diagrams", diagrams, "diagrams separated by '|', parts by ','")->required();
  shp->callback([&] {
    command = "schubert shape";
    run = [&] { return schubert_shape(diagrams, k, m, rc); };
  });
  sch->add_subcommand("edeg22", "expected degree of G(2,4)")->fallthrough()->callback([&] {
    command = "schubert edeg22";
    run = [&] { return schubert_edeg22(rc); };
  });

  // zonoid
  auto* zon = app.add_subcommand("zonoid", "zonoid calculus on JSON input")->fallthrough();
  zon->require_subcommand(1);
  std::string file;
  bool use_star_exp = false;
  int only_d = -1;
  auto add_file = [&](CLI::App* sub) { sub->add_option("-f,--file", file, "JSON input, '-' for stdin")->required(); };
  auto* zmv = zon->add_subcommand("mixed-volume", "mixed volume of n zonoids in R^n");
  add_file(zmv);
  zmv->callback([&] {
    command = "zonoid mixed-volume";
    run = [&] { return zonoid_mixed_volume(read_json_file(file)); };
  });
  auto* zl = zon->add_subcommand("length", "length of each zonoid");
  add_file(zl);
  zl->callback([&] {
    command = "zonoid length";
    run = [&] { return zonoid_length(read_json_file(file)); };
  });
  auto* zc = zon->add_subcommand("crofton", "valuation <L, e^K>");
  add_file(zc);
  zc->add_flag("--star-exp", use_star_exp, "use the Hodge duals of exp(L)");
  zc->callback([&] {
    command = "zonoid crofton";
    run = [&] { return zonoid_crofton(read_json_file(file), use_star_exp); };
  });
  auto* zi = zon->add_subcommand("intrinsic", "intrinsic volumes of a zonotope");
  add_file(zi);
  zi->add_option("--d", only_d, "single degree");
  zi->callback([&] {
    command = "zonoid intrinsic";
    run = [&] { return zonoid_intrinsic(read_json_file(file), only_d); };
  });

  // sphere
  auto* sph = app.add_subcommand("sphere", "closed-form sphere formulas")->fallthrough();
  sph->require_subcommand(1);
  int N = 0;
  auto* bt = sph->add_subcommand("ball-table", "kappa_i and l(B^i)");
  bt->add_option("--N", N)->required()->check(CLI::Range(0, 200));
  bt->callback([&] {
    command = "sphere ball-table";
    run = [&] { return sphere_ball_table(N); };
  });
  long sn = 0;
  std::string codims, ratios;
  bool projective = false;
  auto* ec = sph->add_subcommand("expected-count", "expected number of intersection points");
  ec->add_option("--n", sn)->required()->check(CLI::Range(1L, 200L));
  ec->add_option("--codims", codims)->required();
  ec->add_option("--ratios", ratios, "volume ratios, decimals or p/q")->required();
  ec->add_flag("--projective", projective);
  ec->callback([&] {
    command = "sphere expected-count";
    run = [&] { return sphere_count(sn, codims, ratios, projective); };
  });

  for (auto* sub : {cpn, sch, zon, sph})
    for (auto* leaf : sub->get_subcommands({})) leaf->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc_code = app.exit(e);
    return rc_code == 0 ? 0 : 2;
  }

  try {
    if (!run) throw UsageError("no command given");
    emit(rc, command, run());
    return 0;
  } catch (const std::invalid_argument& e) {  // includes SchemaError and UsageError
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
