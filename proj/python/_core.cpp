// Copyright 2026 The diophex Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings. Structured results cross the boundary as JSON text and
// are decoded by the pure Python layer.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "diophex/acceptance.hpp"
#include "diophex/cli.hpp"
#include "diophex/errors.hpp"
#include "diophex/json_io.hpp"

namespace py = pybind11;
using namespace diophex;

namespace {

RealMatrix to_matrix(const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows[0].empty()) throw ValidationError("shape", "empty matrix");
  std::vector<double> a;
  for (const auto& r : rows) {
    if (r.size() != rows[0].size()) throw ValidationError("shape", "ragged rows");
    a.insert(a.end(), r.begin(), r.end());
  }
  return RealMatrix(rows.size(), rows[0].size(), a);
}

QuasiNorm norm(const std::vector<std::string>& w, Side side) {
  std::vector<Rational> r;
  for (const auto& s : w) r.push_back(Rational::parse(s));
  return QuasiNorm(r, side);
}

EnumOptions enum_options(const std::string& method, unsigned threads) {
  EnumOptions o;
  o.threads = threads;
  if (method == "box")
    o.method = EnumMethod::kBox;
  else if (method == "lattice")
    o.method = EnumMethod::kLattice;
  else if (method != "auto")
    throw ValidationError("usage", "method must be auto, box or lattice");
  return o;
}

py::object big(const mpz_class& v) { return py::module_::import("builtins").attr("int")(v.get_str()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "diophex native core";
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<UniquenessError>(m, "UniquenessError", PyExc_RuntimeError);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release nogil;
      code = run_cli(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));

  m.def("formula_json", [](const std::string& family, std::uint64_t a, std::uint64_t b,
                           std::uint64_t c) {
    ExponentValue v;
    if (family == "heisenberg") v = heisenberg_beta(a);
    else if (family == "us") v = us_beta(a, b);
    else if (family == "free") v = free_beta(a, b, c);
    else if (family == "step2") v = step2_beta(a, b, c);
    else throw ValidationError("usage", "unknown family " + family);
    return to_json(v).dump();
  }, py::arg("family"), py::arg("a"), py::arg("b") = 0, py::arg("c") = 0);
  m.def("veronese_beta", [](std::uint64_t p, std::uint64_t mm) { return veronese_beta(p, mm).str(); });

  m.def("witt_dim", [](int k, int i) { return witt_dim(k, i); });
  m.def("weyl_dim", [](const std::vector<int>& rows, unsigned k) {
    return big(weyl_dim(YoungDiagram(rows), k));
  });
  m.def("hook_content_dim", [](const std::vector<int>& rows, unsigned k) {
    return big(hook_content_dim(YoungDiagram(rows), k));
  });

  m.def("min_image_qnorm", [](const std::vector<std::vector<double>>& x,
                              const std::vector<std::string>& wv, const std::vector<std::string>& we,
                              double q, const std::string& method, unsigned threads) {
    const auto mx = to_matrix(x);
    const auto o = enum_options(method, threads);
    py::gil_scoped_release nogil;
    return min_image_qnorm(mx, norm(wv, Side::kSource), norm(we, Side::kTarget), q, o);
  }, py::arg("x"), py::arg("weights_v"), py::arg("weights_e"), py::arg("q"),
     py::arg("method") = "auto", py::arg("threads") = 1);

  m.def("estimate_beta_json", [](const std::vector<std::vector<double>>& x,
                                 const std::vector<std::string>& wv,
                                 const std::vector<std::string>& we,
                                 const std::vector<double>& schedule, const std::string& method,
                                 unsigned threads) {
    const auto mx = to_matrix(x);
    const auto o = enum_options(method, threads);
    SlopeFit f;
    {
      py::gil_scoped_release nogil;
      f = estimate_beta(mx, norm(wv, Side::kSource), norm(we, Side::kTarget), schedule, o);
    }
    return to_json(f).dump();
  }, py::arg("x"), py::arg("weights_v"), py::arg("weights_e"), py::arg("schedule"),
     py::arg("method") = "auto", py::arg("threads") = 1);

  m.def("geometric_range", &geometric_range);

  m.def("dani_systole_json", [](const std::vector<std::vector<double>>& x, double beta,
                                const std::vector<double>& times) {
    const auto mx = to_matrix(x);
    return to_json(dani_systole(mx, QuasiNorm::unweighted(mx.cols, Side::kSource),
                                QuasiNorm::unweighted(mx.rows, Side::kTarget), beta, times))
        .dump();
  });

  m.def("tau_json", [](const std::string& manifold_text, std::uint64_t seed) {
    const Manifold mf = manifold_from_json(parse_json(manifold_text, "manifold"));
    return to_json(tau_candidates(mf.map, mf.qv, mf.qe, candidates(mf), RationalSampler(seed))).dump();
  }, py::arg("manifold"), py::arg("seed") = 1);

  m.def("run_criterion_json", [](int id, std::uint64_t seed, unsigned threads) {
    AcceptanceOptions o;
    o.seed = seed;
    o.threads = threads;
    CriterionResult r;
    {
      py::gil_scoped_release nogil;
      r = run_criterion(id, o);
    }
    return to_json(r).dump();
  }, py::arg("id"), py::arg("seed") = 1, py::arg("threads") = 1);
}
