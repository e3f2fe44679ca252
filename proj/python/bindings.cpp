#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zonoid/cpn_ring.hpp"
#include "zonoid/io.hpp"
#include "zonoid/schubert.hpp"
#include "zonoid/sphere_ring.hpp"
#include "zonoid/version.hpp"

namespace py = pybind11;
using namespace zonoid;

namespace {

// Results cross the boundary as plain Python containers via their JSON form.
py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

json from_py(const py::object& o) { return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>()); }

McConfig mc(std::uint64_t samples, std::uint64_t seed, unsigned workers) {
  if (samples < 1) throw std::invalid_argument("samples must be positive");
  McConfig c;
  c.samples = samples;
  c.seed = seed;
  c.workers = workers;
  return c;
}

Rational rational_arg(const py::object& o) {
  if (py::isinstance<py::str>(o)) return parse_rational(o.cast<std::string>());
  if (py::isinstance<py::int_>(o)) return parse_rational(py::str(o).cast<std::string>());
  throw std::invalid_argument("expected an int or a 'p/q' string");
}

py::object zonoid_scalar(const std::vector<ParsedZonoid>& zs, const std::function<Rational(const std::vector<VirtualZonoid<Rational>>&)>& fq,
                         const std::function<double(const std::vector<VirtualZonoid<double>>&)>& ff) {
  if (zs.empty()) throw std::invalid_argument("no zonoids given");
  if (zs.front().exact) {
    std::vector<VirtualZonoid<Rational>> q;
    for (const auto& z : zs) q.push_back(z.q);
    return to_py(to_json(PiScalar(fq(q))));
  }
  std::vector<VirtualZonoid<double>> f;
  for (const auto& z : zs) f.push_back(z.f);
  return py::float_(ff(f));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact zonoid calculus, probabilistic intersection rings and Monte-Carlo estimates";
  m.attr("__version__") = kVersion;

  // cpn ring
  m.def("multiply", [](int n, const std::string& a, const std::string& b) {
    return to_py(to_json(parse_ring_element(n, a) * parse_ring_element(n, b)));
  }, py::arg("n"), py::arg("a"), py::arg("b"));
  m.def("ring_length", [](int n, const std::string& a) {
    json rows = json::array();
    for (const auto& [d, v] : length(parse_ring_element(n, a))) {
      json r = to_json(v);
      r["degree"] = d;
      rows.push_back(r);
    }
    return to_py(rows);
  }, py::arg("n"), py::arg("a"));
  m.def("relations", [](int n) {
    auto [a, b] = relations(n);
    return to_py(json::array({to_json(a), to_json(b)}));
  }, py::arg("n"));
  m.def("relation", [](int index) { return to_py(to_json(relation(index))); }, py::arg("index"));
  m.def("dimension", &dimension, py::arg("n"), py::arg("d"));
  m.def("hankel_matrix", [](int n, int d) {
    std::vector<std::vector<std::string>> out;
    for (const auto& row : hankel_matrix(n, d)) {
      out.emplace_back();
      for (const auto& x : row) out.back().push_back(to_string(x));
    }
    return out;
  }, py::arg("n"), py::arg("d"));
  m.def("primitive_dims", &primitive_dims, py::arg("n"), py::arg("d"));
  m.def("self_intersection", [](int n, const py::object& d, const py::object& delta) {
    const Rational dq = rational_arg(d), eq = rational_arg(delta);
    return py::make_tuple(to_string(self_intersection_codim2(n, dq, eq)), to_string(self_intersection_via_ring(n, dq, eq)));
  }, py::arg("n"), py::arg("d"), py::arg("delta"), "closed form and ring value, both as exact 'p/q' strings");
  m.def("f_k", [](int k) { return py::int_(py::str(f_k(k).get_str())); }, py::arg("k"));
  m.def("tasaki_kernel", [](int n, double x, double y) { return tasaki_kernel_d2(n, x, y); }, py::arg("n"), py::arg("x"),
        py::arg("y"));
  m.def("mc_tasaki_kernel", [](int n, double x, double y, std::uint64_t samples, std::uint64_t seed, unsigned workers) {
    return to_py(to_json(mc_tasaki_kernel_d2(n, x, y, mc(samples, seed, workers))));
  }, py::arg("n"), py::arg("x"), py::arg("y"), py::arg("samples") = 100000, py::arg("seed") = 0, py::arg("workers") = 0);
  m.def("omega_norm_sq", [](int n, int k) { return to_string(omega_norm_sq(n, k)); }, py::arg("n"), py::arg("k"));

  // spheres
  m.def("kappa", [](long n) { return to_py(to_json(kappa(n))); }, py::arg("n"));
  m.def("ball_length", [](long n) { return to_py(to_json(ball_length(n))); }, py::arg("n"));
  m.def("ball_wedge_length", [](long N, long d, long i) { return to_py(to_json(ball_wedge_length(N, d, i, PiScalar(1)))); },
        py::arg("N"), py::arg("d"), py::arg("i"), "l(Z ^ B^i) for a degree-d Z of length one");
  m.def("sphere_expected_count", [](long n, const std::vector<long>& codims, const std::vector<py::object>& ratios, bool projective) {
    bool exact = true;
    for (const auto& r : ratios) exact = exact && !py::isinstance<py::float_>(r);
    if (exact) {
      std::vector<Rational> q;
      for (const auto& r : ratios) q.push_back(rational_arg(r));
      return to_py(to_json(sphere_expected_count(n, codims, q, projective)));
    }
    std::vector<double> f;
    for (const auto& r : ratios) f.push_back(r.cast<double>());
    return py::object(py::float_(sphere_expected_count(n, codims, f, projective)));
  }, py::arg("n"), py::arg("codims"), py::arg("ratios"), py::arg("projective") = false);

  // schubert
  m.def("lr_coefficients", [](const std::vector<int>& a, const std::vector<int>& b) {
    std::map<std::string, long> out;
    for (const auto& [nu, c] : lr_coefficients(normalize(a), normalize(b))) out[to_string(nu)] = c;
    return out;
  }, py::arg("a"), py::arg("b"));
  m.def("schur_dim", [](const std::vector<int>& l, int k) { return schur_dim(normalize(l), k).get_si(); }, py::arg("lam"),
        py::arg("k"));
  m.def("span_dim", [](const std::vector<int>& l, int k, int mm) { return span_dim(normalize(l), k, mm).get_si(); },
        py::arg("lam"), py::arg("k"), py::arg("m"));
  m.def("mc_schubert_shape", [](const std::vector<std::vector<int>>& ls, int k, int mm, std::uint64_t samples,
                                std::uint64_t seed, unsigned workers) {
    std::vector<YoungDiagram> ds;
    for (const auto& l : ls) ds.push_back(normalize(l));
    const Estimate e = mc_schubert_shape(ds, k, mm, mc(samples, seed, workers));
    json j = to_json(e);
    j["max_sample"] = e.max_value;
    return to_py(j);
  }, py::arg("diagrams"), py::arg("k"), py::arg("m"), py::arg("samples") = 100000, py::arg("seed") = 0, py::arg("workers") = 0);
  m.def("edeg22", [](std::uint64_t samples, std::uint64_t seed, unsigned workers) {
    const Edeg22Report r = edeg22_calibrated(mc(samples, seed, workers));
    return to_py({{"edeg", to_json(r.result)},
                  {"E4", to_json(r.e4)},
                  {"D11", to_json(r.d11)},
                  {"D22", to_json(r.d22)},
                  {"D3", to_json(r.d3)},
                  {"D4", to_json(r.d4)}});
  }, py::arg("samples") = 1000000, py::arg("seed") = 0, py::arg("workers") = 0);
  m.def("verify_span_decomposition", [](int k, int mm, int d, int samples, double tol, std::uint64_t seed) {
    return to_py(to_json(verify_span_decomposition(k, mm, d, samples, tol, seed)));
  }, py::arg("k"), py::arg("m"), py::arg("d"), py::arg("samples") = 40, py::arg("tol") = 1e-9, py::arg("seed") = 0);

  // zonoids, in the JSON document format
  m.def("zonoid_length", [](const py::object& doc) {
    auto zs = parse_zonoid_list(from_py(doc));
    py::list out;
    for (const auto& z : zs) out.append(z.exact ? to_py(to_json(PiScalar(length(z.q)))) : py::object(py::float_(length(z.f))));
    return out;
  }, py::arg("doc"));
  m.def("mixed_volume", [](const py::object& doc) {
    return zonoid_scalar(parse_zonoid_list(from_py(doc)), [](const auto& q) { return mixed_volume(q); },
                         [](const auto& f) { return mixed_volume(f); });
  }, py::arg("doc"));
  m.def("volume_of_sum", [](const py::object& doc) {
    // vol(K + L) through the Hodge duals of exp(L); doc = {"zonoids": [K, L]}
    auto zs = parse_zonoid_list(from_py(doc));
    if (zs.size() != 2) throw std::invalid_argument("expected exactly two zonoids K and L");
    auto run = [](const auto& k, const auto& l) {
      std::remove_cvref_t<decltype(std::vector{l})> star;
      for (const auto& p : exp_truncated(l, l.ambient)) star.push_back(hodge_dual(p));
      return crofton_evaluate(star, k);
    };
    return zonoid_scalar(zs, [&](const auto& q) { return run(q[0], q[1]); }, [&](const auto& f) { return run(f[0], f[1]); });
  }, py::arg("doc"));
}
