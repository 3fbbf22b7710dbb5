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

#include "diophex/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "diophex/errors.hpp"

namespace diophex {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ValidationError("json", where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::size_t count_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    bad(where, std::string("\"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

std::vector<Rational> rationals(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x, where));
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "exact values must be strings \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    bad(where, e.what());
  }
}

Json to_json(const ExtRational& r) { return r.str(); }

Json real_json(double x) {
  if (!std::isfinite(x)) return nullptr;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Json to_json(const QMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

QMatrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "matrix must be an array of rows");
  std::vector<QVector> rows;
  std::size_t cols = 0;
  for (const auto& r : j) {
    rows.push_back(rationals(r, where));
    if (rows.size() > 1 && rows.back().size() != cols) bad(where, "ragged matrix");
    cols = rows.back().size();
  }
  return QMatrix::from_rows(rows, cols);
}

Json to_json(const Subspace& w) {
  Json out;
  out["ambient"] = w.ambient_dim();
  out["dim"] = w.dim();
  out["basis"] = to_json(w.basis());
  return out;
}

Subspace subspace_from_json(const Json& j, std::size_t ambient, const std::string& where) {
  const Json& rows = j.is_object() ? field(j, "basis", where) : j;
  const QMatrix m = matrix_from_json(rows, where);
  if (m.rows() > 0 && m.cols() != ambient) bad(where, "subspace rows have the wrong length");
  if (m.rows() == 0) return Subspace(ambient);
  return Subspace::span(m);
}

Json to_json(const LieElement& x) {
  const auto& b = *x.basis();
  Json out;
  out["k"] = b.k();
  out["s"] = b.s();
  Json terms = Json::array();
  for (const auto& [i, c] : x.terms()) {
    Json t;
    t["word"] = b.word(i);
    t["coeff"] = to_json(c);
    terms.push_back(t);
  }
  out["terms"] = terms;
  return out;
}

LieElement lie_element_from_json(const Json& j) {
  const std::string w = "lie element";
  const auto k = count_field(j, "k", w), s = count_field(j, "s", w);
  if (k < 1 || s < 1) bad(w, "k and s must be positive");
  auto basis = FreeLieBasis::make(static_cast<int>(k), static_cast<int>(s));
  LieElement out(basis);
  const Json& terms = field(j, "terms", w);
  if (!terms.is_array()) bad(w, "\"terms\" must be an array");
  for (const auto& t : terms) {
    const Json& word = field(t, "word", w);
    if (!word.is_array()) bad(w, "\"word\" must be an array of letters");
    Word wd;
    for (const auto& l : word) {
      if (!l.is_number_integer() || l.get<long long>() < 1 ||
          l.get<long long>() > static_cast<long long>(k))
        bad(w, "letters must be integers in 1..k");
      wd.push_back(l.get<int>());
    }
    const auto idx = basis->index(wd);
    if (!idx) bad(w, "word is not a Lyndon word of length <= s");
    out.add_term(*idx, rational_from_json(field(t, "coeff", w), w));
  }
  return out;
}

Json to_json(const LieAlgebra& g, const std::optional<std::vector<std::size_t>>& v1,
             bool riemannian) {
  Json out;
  out["name"] = g.name();
  out["dim"] = g.dim();
  out["basis"] = g.names();
  Json brackets = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const auto& v = g.bracket_basis(i, j);
      if (v.empty()) continue;
      Json b;
      b["i"] = i + 1;
      b["j"] = j + 1;
      Json o = Json::array();
      for (const auto& [kk, c] : v) o.push_back(Json{{"k", kk + 1}, {"c", to_json(c)}});
      b["out"] = o;
      brackets.push_back(b);
    }
  out["brackets"] = brackets;
  if (v1) {
    Json idx = Json::array();
    for (auto i : *v1) idx.push_back(i + 1);
    out["metric"] = Json{{"v1", idx}};
  } else if (riemannian) {
    out["metric"] = Json{{"riemannian", true}};
  }
  return out;
}

AlgebraSpec algebra_from_json(const Json& j) {
  const std::string w = "lie algebra";
  AlgebraSpec out;
  if (j.is_object() && j.contains("builtin")) {
    if (!j["builtin"].is_string()) bad(w, "\"builtin\" must be a string");
    out.algebra = builtin_algebra(j["builtin"].get<std::string>());
  } else {
    const auto dim = count_field(j, "dim", w);
    const Json& names = field(j, "basis", w);
    if (!names.is_array() || names.size() != dim) bad(w, "\"basis\" must list dim names");
    std::vector<std::string> nm;
    for (const auto& n : names) {
      if (!n.is_string()) bad(w, "basis names must be strings");
      nm.push_back(n.get<std::string>());
    }
    std::vector<StructureConstant> cs;
    const Json& br = field(j, "brackets", w);
    if (!br.is_array()) bad(w, "\"brackets\" must be an array");
    auto index = [&](const Json& x) {
      if (!x.is_number_integer() || x.get<long long>() < 1 ||
          x.get<long long>() > static_cast<long long>(dim))
        bad(w, "bracket indices must be integers in 1..dim");
      return static_cast<std::size_t>(x.get<long long>() - 1);
    };
    for (const auto& b : br) {
      const auto i = index(field(b, "i", w)), jj = index(field(b, "j", w));
      const Json& o = field(b, "out", w);
      if (!o.is_array()) bad(w, "\"out\" must be an array");
      for (const auto& t : o)
        cs.push_back({i, jj, index(field(t, "k", w)), rational_from_json(field(t, "c", w), w)});
    }
    std::string name = "custom";
    if (j.contains("name")) {
      if (!j["name"].is_string()) bad(w, "\"name\" must be a string");
      name = j["name"].get<std::string>();
    }
    out.algebra = LieAlgebra(name, nm, cs);
  }
  if (j.contains("metric")) {
    const Json& m = j["metric"];
    if (!m.is_object()) bad(w, "\"metric\" must be an object");
    if (m.contains("v1")) {
      if (!m["v1"].is_array()) bad(w, "\"v1\" must be an index array");
      std::vector<std::size_t> v1;
      for (const auto& x : m["v1"]) {
        if (!x.is_number_integer() || x.get<long long>() < 1 ||
            x.get<long long>() > static_cast<long long>(out.algebra.dim()))
          bad(w, "v1 indices must be integers in 1..dim");
        v1.push_back(static_cast<std::size_t>(x.get<long long>() - 1));
      }
      out.v1 = v1;
    } else if (m.contains("riemannian")) {
      if (!m["riemannian"].is_boolean() || !m["riemannian"].get<bool>())
        bad(w, "\"riemannian\" must be true");
      out.riemannian = true;
    } else {
      bad(w, "metric needs \"v1\" or \"riemannian\"");
    }
  }
  return out;
}

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exp", e}, {"coeff", to_json(c)}});
  return Json{{"terms", terms}};
}

Polynomial polynomial_from_json(const Json& j, std::size_t n_params, const std::string& where) {
  if (j.is_string()) return Polynomial::constant(n_params, rational_from_json(j, where));
  Polynomial p(n_params);
  const Json& terms = field(j, "terms", where);
  if (!terms.is_array()) bad(where, "\"terms\" must be an array");
  for (const auto& t : terms) {
    const Json& e = field(t, "exp", where);
    if (!e.is_array() || e.size() != n_params) bad(where, "\"exp\" must have n_params entries");
    Exponents ex;
    for (const auto& x : e) {
      if (!x.is_number_integer() || x.get<long long>() < 0)
        bad(where, "exponents must be non-negative integers");
      ex.push_back(x.get<int>());
    }
    p.add_term(ex, rational_from_json(field(t, "coeff", where), where));
  }
  return p;
}

Json to_json(const Manifold& m) {
  Json out;
  out["name"] = m.name;
  out["n_params"] = m.map.n_params();
  out["dim_v"] = m.map.dim_v();
  out["dim_e"] = m.map.dim_e();
  Json wv = Json::array(), we = Json::array();
  for (const auto& w : m.qv.weights()) wv.push_back(to_json(w));
  for (const auto& w : m.qe.weights()) we.push_back(to_json(w));
  out["weights_v"] = wv;
  out["weights_e"] = we;
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.map.dim_e(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.map.dim_v(); ++j) row.push_back(to_json(m.map.entry(i, j)));
    entries.push_back(row);
  }
  out["entries"] = entries;
  Json cand;
  cand["strategy"] = m.strategy;
  Json subs = Json::array();
  for (const auto& w : m.explicit_candidates) subs.push_back(to_json(w.basis()));
  cand["subspaces"] = subs;
  out["candidates"] = cand;
  if (m.eta) out["eta"] = *m.eta;
  if (!m.v_labels.empty()) out["v_labels"] = m.v_labels;
  if (!m.e_labels.empty()) out["e_labels"] = m.e_labels;
  if (!m.flags.empty()) out["flags"] = m.flags;
  return out;
}

Manifold manifold_from_json(const Json& j) {
  const std::string w = "manifold";
  Manifold m;
  if (j.contains("name")) {
    if (!j["name"].is_string()) bad(w, "\"name\" must be a string");
    m.name = j["name"].get<std::string>();
  }
  const auto np = count_field(j, "n_params", w), dv = count_field(j, "dim_v", w),
             de = count_field(j, "dim_e", w);
  if (dv == 0 || de == 0) bad(w, "dim_v and dim_e must be positive");
  const auto wv = rationals(field(j, "weights_v", w), w + " weights_v");
  const auto we = rationals(field(j, "weights_e", w), w + " weights_e");
  if (wv.size() != dv || we.size() != de) bad(w, "weight counts must match dim_v, dim_e");
  m.qv = QuasiNorm::source(wv);
  m.qe = QuasiNorm::target(we);
  m.map = PolyMap(np, dv, de);
  const Json& entries = field(j, "entries", w);
  if (!entries.is_array() || entries.size() != de) bad(w, "\"entries\" must have dim_e rows");
  for (std::size_t i = 0; i < de; ++i) {
    if (!entries[i].is_array() || entries[i].size() != dv)
      bad(w, "each entries row must have dim_v polynomials");
    for (std::size_t c = 0; c < dv; ++c)
      m.map.entry(i, c) = polynomial_from_json(entries[i][c], np, w + " entry");
  }
  const Json& cand = field(j, "candidates", w);
  const Json& strat = field(cand, "strategy", w);
  if (!strat.is_string()) bad(w, "strategy must be a string");
  m.strategy = strat.get<std::string>();
  if (m.strategy != "graded" && m.strategy != "flag" && m.strategy != "explicit")
    bad(w, "strategy must be graded, flag or explicit");
  if (cand.contains("subspaces")) {
    if (!cand["subspaces"].is_array()) bad(w, "\"subspaces\" must be an array");
    for (const auto& s : cand["subspaces"])
      m.explicit_candidates.push_back(subspace_from_json(s, dv, w + " candidate"));
  }
  if (m.strategy == "explicit" && m.explicit_candidates.empty())
    bad(w, "explicit strategy needs subspaces");
  if (j.contains("eta")) m.eta = count_field(j, "eta", w);
  auto labels = [&](const char* key, std::size_t n) {
    std::vector<std::string> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array() || j[key].size() != n) bad(w, std::string(key) + " has the wrong length");
    for (const auto& x : j[key]) {
      if (!x.is_string()) bad(w, "labels must be strings");
      out.push_back(x.get<std::string>());
    }
    return out;
  };
  m.v_labels = labels("v_labels", dv);
  m.e_labels = labels("e_labels", de);
  if (j.contains("flags")) m.flags = j["flags"].get<std::vector<std::string>>();
  return m;
}

Json to_json(const TauResult& t) {
  Json out;
  out["tau"] = to_json(t.value);
  out["a"] = to_json(t.a);
  out["b"] = to_json(t.b);
  out["witness"] = to_json(t.witness);
  Json samples = Json::array();
  for (const auto& p : t.samples) {
    Json row = Json::array();
    for (const auto& x : p) row.push_back(to_json(x));
    samples.push_back(row);
  }
  out["samples"] = samples;
  Json scores = Json::array();
  for (const auto& s : t.scores)
    scores.push_back(Json{{"dim", s.w.dim()},
                          {"basis", to_json(s.w.basis())},
                          {"psi_m", to_json(s.a)},
                          {"phi_m", to_json(s.b)},
                          {"ratio", to_json(s.ratio)}});
  out["scores"] = scores;
  out["flags"] = t.flags;
  return out;
}

Json to_json(const ExponentValue& v) {
  Json out;
  out["family"] = v.family;
  Json params;
  for (const auto& [k, x] : v.parameters) params[k] = x;
  out["parameters"] = params;
  out["infinite"] = v.infinite;
  out["alpha"] = to_json(v.alpha);
  out["eta"] = v.eta;
  out["beta"] = to_json(v.beta);
  out["beta_decimal"] = real_json(v.beta.to_double());
  out["limit"] = v.limit ? Json(to_json(*v.limit)) : Json(nullptr);
  out["stable_from"] = v.stable_from ? Json(*v.stable_from) : Json(nullptr);
  out["flags"] = v.flags;
  return out;
}

Json to_json(const SlopeFit& f) {
  Json out;
  out["slope"] = real_json(f.slope);
  out["intercept"] = real_json(f.intercept);
  out["r2"] = real_json(f.r2);
  Json pts = Json::array();
  for (const auto& p : f.points)
    pts.push_back(Json{{"q", real_json(p.q)},
                       {"min_norm", real_json(p.min_norm)},
                       {"log_q", real_json(p.log_q)},
                       {"neg_log_min", real_json(p.neg_log_min)}});
  out["points"] = pts;
  Json sched = Json::array(), ex = Json::array();
  for (double q : f.q_schedule) sched.push_back(real_json(q));
  for (double q : f.excluded) ex.push_back(real_json(q));
  out["q_schedule"] = sched;
  out["excluded"] = ex;
  out["flags"] = f.flags;
  return out;
}

Json to_json(const SystoleTrace& t) {
  auto reals = [](const std::vector<double>& v) {
    Json a = Json::array();
    for (double x : v) a.push_back(real_json(x));
    return a;
  };
  Json out;
  out["beta"] = real_json(t.beta);
  out["times"] = reals(t.times);
  out["systole"] = reals(t.systole);
  out["radius"] = reals(t.radius);
  out["kernel_rows"] = t.kernel_rows;
  out["image_rows"] = t.image_rows;
  out["exponents"] = reals(t.exponents);
  out["condition"] = real_json(t.condition);
  out["flags"] = t.flags;
  return out;
}

Json to_json(const LevelMeasure& m) {
  Json out;
  out["estimate"] = real_json(m.estimate);
  out["std_error"] = real_json(m.std_error);
  out["bound"] = real_json(m.bound);
  out["region_volume"] = real_json(m.region_volume);
  out["within_bound"] = m.within_bound();
  return out;
}

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
}

Json parse_json(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(where, std::string("malformed JSON (") + e.what() + ")");
  }
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace diophex
