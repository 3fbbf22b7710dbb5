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

#include "diophex/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "diophex/acceptance.hpp"
#include "diophex/errors.hpp"
#include "diophex/json_io.hpp"
#include "diophex/liealg.hpp"

namespace diophex {

namespace {

// Carries the report under construction.
struct Session {
  std::vector<std::string> argv;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool strict = false;
  std::string out_path, csv_path;
  Json inputs = Json::array();
  Json certificates = Json::object();
  std::vector<std::string> flags;
  bool escalate = false;  // exit 3 after writing the report

  std::string read_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("io", "cannot read " + path);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    inputs.push_back(Json{{"path", path}, {"content", bytes}});
    return bytes;
  }

  std::string inputs_hash() const {
    std::string all;
    for (const auto& i : inputs) all += i["path"].get<std::string>() + '\0' +
                                        i["content"].get<std::string>() + '\0';
    return fnv1a_hex(all);
  }
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw ValidationError("io", "cannot write " + path);
  o << text;
}

// Manifold source shared by exponent, pencil-check and empirical.
struct ManifoldArgs {
  std::string manifold_path, family, algebra_path, metric = "riemannian";
  std::optional<int> k, s, d, p, m;

  void add(CLI::App* c) {
    c->add_option("--manifold", manifold_path, "manifold JSON file");
    c->add_option("--family", family, "built-in family: heisenberg|us|free|veronese|wedge|curve");
    c->add_option("--algebra", algebra_path, "Lie algebra JSON file (with --k)");
    c->add_option("--metric", metric, "riemannian or cc (built-in Lie families)");
    c->add_option("--k", k, "number of letters / vectors");
    c->add_option("--s", s, "step or matrix size");
    c->add_option("--d", d, "generators of the free nilpotent algebra");
    c->add_option("--p", p, "polynomial degree");
    c->add_option("--m", m, "matrix size");
  }

  Manifold load(Session& ses, RationalSampler& sampler) const {
    const int given = !manifold_path.empty() + !family.empty() + !algebra_path.empty();
    if (given != 1)
      throw ValidationError("usage", "give exactly one of --manifold, --family, --algebra");
    if (!manifold_path.empty())
      return manifold_from_json(parse_json(ses.read_input(manifold_path), manifold_path));
    if (!algebra_path.empty()) {
      if (!k) throw ValidationError("usage", "--algebra needs --k");
      const auto spec = algebra_from_json(parse_json(ses.read_input(algebra_path), algebra_path));
      const auto& g = spec.algebra;
      MetricWeights w = spec.v1 ? metric_weights(g, Subspace::coordinate(g.dim(), *spec.v1))
                                : riemannian_weights(g);
      return lie_manifold(g, *k, w, sampler);
    }
    std::vector<std::pair<std::string, int>> params;
    for (auto [name, v] : {std::pair{"k", k}, std::pair{"s", s}, std::pair{"d", d},
                           std::pair{"p", p}, std::pair{"m", m}})
      if (v) params.emplace_back(name, *v);
    return builtin_manifold(family, params, metric, sampler);
  }
};

std::vector<double> parse_doubles(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ValidationError("usage", what + ": not a number: " + tok);
    }
  }
  return out;
}

// "3" or "3..12".
std::vector<std::uint64_t> parse_range(const std::string& text, const std::string& what) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) return {std::stoull(text)};
    const auto lo = std::stoull(text.substr(0, dots)), hi = std::stoull(text.substr(dots + 2));
    if (hi < lo || hi - lo > 10000) throw std::invalid_argument(text);
    std::vector<std::uint64_t> out;
    for (auto v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  } catch (const std::exception&) {
    throw ValidationError("usage", what + ": expected N or A..B, got " + text);
  }
}

Json rational_row(const QVector& v) {
  Json row = Json::array();
  for (const auto& x : v) row.push_back(to_json(x));
  return row;
}

std::size_t nilpotency_step(const LieAlgebra& g) {
  std::size_t s = 0;
  for (const auto& w : lower_central_series(g))
    if (w.dim() > 0) ++s;
  return s;
}

// Flag names that --strict escalates.
bool escalates(const std::vector<std::string>& flags) {
  return std::find(flags.begin(), flags.end(), "possible-irrational-laws") != flags.end();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Session ses;
  ses.argv = args;
  if (const char* s = std::getenv("DIOPHEX_SEED")) {
    char* end = nullptr;
    const auto v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && end != s) ses.seed = v;
  }

  CLI::App app{"diophex: diophantine exponents of polynomial matrix families"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--seed", ses.seed, "sampling seed (default $DIOPHEX_SEED or 1)");
  app.add_option("--threads", ses.threads, "worker threads for enumeration")->check(CLI::PositiveNumber);
  app.add_flag("--strict", ses.strict, "exit 3 when laws may be irrational");
  app.add_option("--out", ses.out_path, "write the report here instead of stdout");
  app.add_option("--csv", ses.csv_path, "write the CSV trace here");

  // exponent
  auto* exp = app.add_subcommand("exponent", "exact exponent over the candidate family");
  ManifoldArgs exp_m;
  std::string emit_path;
  exp_m.add(exp);
  exp->add_option("--emit", emit_path, "also write the manifold JSON");

  // formula
  auto* form = app.add_subcommand("formula", "closed form exponents");
  std::string fam, k_text, format = "json";
  std::optional<std::uint64_t> fs, fd, fd1, fd2, flast, fp, fm;
  std::vector<std::uint64_t> layer_dims;
  form->add_option("family", fam, "heisenberg|step2|metabelian|us|free|veronese")->required();
  form->add_option("--k", k_text, "number of letters, N or A..B");
  form->add_option("--s", fs, "step");
  form->add_option("--d", fd, "generators (free)");
  form->add_option("--d1", fd1, "dim of the first layer (step2)");
  form->add_option("--d2", fd2, "dim of the second layer (step2)");
  form->add_option("--dim-last", flast, "dim of the last layer (metabelian)");
  form->add_option("--layer-dims", layer_dims, "all layer dims (metabelian)")->delimiter(',');
  form->add_option("--p", fp, "degree (veronese)");
  form->add_option("--m", fm, "matrix size (veronese)");
  form->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  // laws
  auto* laws = app.add_subcommand("laws", "laws ideal and relatively free dimensions");
  std::string laws_alg, laws_builtin;
  int laws_k = 0;
  std::optional<int> laws_s;
  laws->add_option("--algebra", laws_alg, "Lie algebra JSON file");
  laws->add_option("--builtin", laws_builtin, "built-in algebra, e.g. heisenberg, u(3), f(2,3)");
  laws->add_option("--k", laws_k, "number of letters")->required();
  laws->add_option("--s", laws_s, "maximal degree (default: nilpotency step)");

  // pencil-check
  auto* pen = app.add_subcommand("pencil-check", "is the manifold inside a pencil");
  ManifoldArgs pen_m;
  std::string pen_sub, pen_coords, pen_a, pen_b;
  pen_m.add(pen);
  pen->add_option("--subspace", pen_sub, "subspace JSON file");
  pen->add_option("--coords", pen_coords, "coordinate subspace, 1-based, comma separated");
  pen->add_option("--a", pen_a, "psi threshold (rational)")->required();
  pen->add_option("--b", pen_b, "phi threshold (rational)")->required();

  // empirical
  auto* emp = app.add_subcommand("empirical", "slope fit of the minimal image quasi-norm");
  ManifoldArgs emp_m;
  std::string point_text, method = "auto";
  double qmax = 1e4, q0 = 16, tolerance = 0.25;
  std::size_t n_points = 10;
  emp_m.add(emp);
  emp->add_option("--point", point_text, "parameter point, comma separated (default random)");
  emp->add_option("--qmax", qmax, "largest Q");
  emp->add_option("--q0", q0, "smallest Q");
  emp->add_option("--points", n_points, "number of Q values")->check(CLI::Range(6, 1000));
  emp->add_option("--tolerance", tolerance, "allowed |slope - tau|");
  emp->add_option("--method", method, "auto|box|lattice")->check(CLI::IsMember({"auto", "box", "lattice"}));

  // dani
  auto* dani = app.add_subcommand("dani", "systole along the diagonal flow");
  std::string theta_text, matrix_path;
  double beta = 1, tmax = 25, dt = 0.5;
  dani->add_option("--theta", theta_text, "x = [1, theta_1, ...]");
  dani->add_option("--matrix", matrix_path, "JSON array of real rows");
  dani->add_option("--beta", beta, "trial exponent");
  dani->add_option("--tmax", tmax, "end of the time grid");
  dani->add_option("--dt", dt, "time step")->check(CLI::PositiveNumber);

  // heisenberg
  auto* heis = app.add_subcommand("heisenberg", "word maps on the Heisenberg group");
  std::size_t heis_k = 3;
  std::int64_t heis_bound = 60;
  std::string gens_text;
  heis->add_option("--k", heis_k, "number of generators");
  heis->add_option("--bound", heis_bound, "largest word length");
  heis->add_option("--generators", gens_text, "x,y,z;x,y,z;... (default random)");

  // selftest
  auto* self = app.add_subcommand("selftest", "run the acceptance criteria");
  std::vector<int> only;
  self->add_option("--only", only, "criterion ids");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  auto fail = [&](const std::string& kind, const std::string& msg, int code) {
    out << error_json(kind, msg).dump(2) << '\n';
    return code;
  };
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), kExitInvalid);
  }

  auto* cmd = app.get_subcommands().front();
  Json results;
  int code = kExitOk;
  try {
    RationalSampler sampler(ses.seed);
    EnumOptions eo;
    eo.threads = ses.threads;
    if (cmd == exp) {
      const Manifold m = exp_m.load(ses, sampler);
      if (!emit_path.empty()) write_text(emit_path, to_json(m).dump(2) + '\n');
      const auto t = tau_candidates(m.map, m.qv, m.qe, candidates(m), sampler.split(1));
      results = Json{{"manifold", m.name}};
      results["tau"] = to_json(t.value);
      if (m.eta) {
        results["eta"] = *m.eta;
        results["beta"] = t.value.infinite ? Json("inf")
                                           : to_json(t.value.value / Rational(static_cast<long>(*m.eta)));
      }
      results["a"] = to_json(t.a);
      results["b"] = to_json(t.b);
      results["witness"] = to_json(t.witness);
      Json tj = to_json(t);
      results["scores"] = tj["scores"];
      ses.certificates["samples"] = tj["samples"];
      ses.certificates["strategy"] = m.strategy;
      for (const auto& f : t.flags) ses.flags.push_back(f);
      for (const auto& f : m.flags) ses.flags.push_back(f);
      ses.escalate = ses.strict && escalates(ses.flags);
    } else if (cmd == form) {
      auto need = [&](const auto& v, const char* name) {
        if (!v) throw ValidationError("usage", std::string("formula ") + fam + " needs --" + name);
        return *v;
      };
      std::vector<std::uint64_t> ks;
      if (fam != "veronese") {
        if (k_text.empty()) throw ValidationError("usage", "formula needs --k");
        ks = parse_range(k_text, "--k");
      }
      std::vector<ExponentValue> vals;
      if (fam == "veronese") {
        ExponentValue v;
        v.family = "veronese";
        v.parameters = {{"p", std::to_string(need(fp, "p"))}, {"m", std::to_string(need(fm, "m"))}};
        v.beta = veronese_beta(*fp, *fm);
        v.alpha = v.beta;
        vals.push_back(v);
      }
      for (auto k : ks) {
        if (fam == "heisenberg")
          vals.push_back(heisenberg_beta(k));
        else if (fam == "step2")
          vals.push_back(step2_beta(need(fd1, "d1"), need(fd2, "d2"), k));
        else if (fam == "metabelian")
          vals.push_back(metabelian_beta(need(fs, "s"), need(flast, "dim-last"), k, layer_dims));
        else if (fam == "us")
          vals.push_back(us_beta(need(fs, "s"), k));
        else if (fam == "free")
          vals.push_back(free_beta(need(fd, "d"), need(fs, "s"), k));
        else
          throw ValidationError("usage", "unknown formula family " + fam);
      }
      Json arr = Json::array();
      for (const auto& v : vals) arr.push_back(to_json(v));
      results = arr.size() == 1 ? arr[0] : arr;
      if (format == "csv" || !ses.csv_path.empty()) {
        std::ostringstream csv;
        csv << "family,parameters,alpha,eta,beta,beta_decimal\n";
        for (const auto& v : vals) {
          std::string params;
          for (const auto& [key, x] : v.parameters) params += (params.empty() ? "" : ";") + key + "=" + x;
          csv << v.family << ',' << params << ',' << v.alpha << ',' << v.eta << ','
              << (v.infinite ? std::string("inf") : v.beta.str()) << ','
              << real_json(v.beta.to_double()).dump() << '\n';
        }
        if (!ses.csv_path.empty()) write_text(ses.csv_path, csv.str());
        if (format == "csv" && ses.out_path.empty()) {
          out << csv.str();
          return kExitOk;
        }
      }
    } else if (cmd == laws) {
      if (laws_alg.empty() == laws_builtin.empty())
        throw ValidationError("usage", "give exactly one of --algebra, --builtin");
      const LieAlgebra g = laws_alg.empty()
                               ? builtin_algebra(laws_builtin)
                               : algebra_from_json(parse_json(ses.read_input(laws_alg), laws_alg)).algebra;
      const int s = laws_s ? *laws_s : static_cast<int>(nilpotency_step(g));
      if (s < 1) throw ValidationError("domain", "the algebra is zero; give --s");
      const auto rf = laws_ideal(g, laws_k, s, sampler);
      Json per_degree = Json::array(), law_list = Json::array();
      for (int i = 1; i <= s; ++i) per_degree.push_back(rf.laws_in_degree(i).dim());
      for (std::size_t r = 0; r < rf.laws.dim(); ++r) {
        LieElement x(rf.basis);
        for (std::size_t c = 0; c < rf.laws.ambient_dim(); ++c)
          if (!rf.laws.basis()(r, c).is_zero()) x.add_term(c, rf.laws.basis()(r, c));
        law_list.push_back(to_json(x));
      }
      results = Json{{"algebra", g.name()}, {"k", laws_k}, {"s", s},
                     {"quotient_dims", rf.quotient_dims}, {"laws_dims", per_degree},
                     {"growth_exponent", growth_exponent(rf)}, {"laws", law_list}};
      Json samples = Json::array();
      for (const auto& tuple : rf.sample_log) {
        Json t = Json::array();
        for (const auto& v : tuple) t.push_back(rational_row(v));
        samples.push_back(t);
      }
      ses.certificates["samples"] = samples;
      if (rf.possible_irrational_laws) ses.flags.push_back("possible-irrational-laws");
      ses.escalate = ses.strict && rf.possible_irrational_laws;
    } else if (cmd == pen) {
      const Manifold m = pen_m.load(ses, sampler);
      Subspace w;
      if (pen_sub.empty() == pen_coords.empty())
        throw ValidationError("usage", "give exactly one of --subspace, --coords");
      if (!pen_sub.empty()) {
        w = subspace_from_json(parse_json(ses.read_input(pen_sub), pen_sub), m.map.dim_v(), pen_sub);
      } else {
        std::vector<std::size_t> idx;
        for (double c : parse_doubles(pen_coords, "--coords")) {
          if (c < 1 || c > static_cast<double>(m.map.dim_v()) || c != std::floor(c))
            throw ValidationError("range", "--coords entries must be in 1.." + std::to_string(m.map.dim_v()));
          idx.push_back(static_cast<std::size_t>(c) - 1);
        }
        w = Subspace::coordinate(m.map.dim_v(), idx);
      }
      Pencil p{w, Rational::parse(pen_a), Rational::parse(pen_b)};
      const auto r = pencil_contains(m.map, p, m.qv, m.qe, sampler.split(2));
      results = Json{{"manifold", m.name}, {"subspace", to_json(w)}, {"a", to_json(p.a)},
                     {"b", to_json(p.b)}, {"contains", r.contains}, {"psi_m", to_json(r.psi_m)},
                     {"phi_m", to_json(r.phi_m)}};
      Json samples = Json::array();
      for (const auto& v : r.samples) samples.push_back(rational_row(v));
      ses.certificates["samples"] = samples;
    } else if (cmd == emp) {
      const Manifold m = emp_m.load(ses, sampler);
      std::vector<double> point;
      if (!point_text.empty()) {
        point = parse_doubles(point_text, "--point");
        if (point.size() != m.map.n_params())
          throw ValidationError("shape", "--point needs " + std::to_string(m.map.n_params()) + " values");
      } else {
        std::mt19937_64 rng(ses.seed);
        std::uniform_real_distribution<double> u(-1, 1);
        for (std::size_t i = 0; i < m.map.n_params(); ++i) point.push_back(u(rng));
      }
      eo.method = method == "box" ? EnumMethod::kBox
                                  : method == "lattice" ? EnumMethod::kLattice : EnumMethod::kAuto;
      const RealMatrix x(m.map.dim_e(), m.map.dim_v(), m.map.evaluate(point));
      const auto fit = estimate_beta(x, m.qv, m.qe, geometric_range(q0, qmax, n_points), eo);
      const auto t = tau_candidates(m.map, m.qv, m.qe, candidates(m), sampler.split(1));
      results = to_json(fit);
      results["manifold"] = m.name;
      results["tau"] = to_json(t.value);
      results["tolerance"] = real_json(tolerance);
      results["within_tolerance"] =
          !t.value.infinite && std::abs(fit.slope - t.value.value.to_double()) <= tolerance;
      Json pj = Json::array();
      for (double v : point) pj.push_back(real_json(v));
      ses.certificates["point"] = pj;
      ses.certificates["method"] = method;
      for (const auto& f : fit.flags) ses.flags.push_back(f);
      if (!ses.csv_path.empty()) {
        std::ofstream o(ses.csv_path);
        if (!o) throw ValidationError("io", "cannot write " + ses.csv_path);
        write_slope_csv(o, fit);
      }
    } else if (cmd == dani) {
      RealMatrix x;
      if (theta_text.empty() == matrix_path.empty())
        throw ValidationError("usage", "give exactly one of --theta, --matrix");
      if (!theta_text.empty()) {
        auto th = parse_doubles(theta_text, "--theta");
        th.insert(th.begin(), 1.0);
        x = RealMatrix(1, th.size(), th);
      } else {
        const Json j = parse_json(ses.read_input(matrix_path), matrix_path);
        if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
          throw ValidationError("json", matrix_path + ": expected a nonempty array of rows");
        std::vector<double> a;
        for (const auto& row : j) {
          if (!row.is_array() || row.size() != j[0].size())
            throw ValidationError("json", matrix_path + ": ragged rows");
          for (const auto& v : row) {
            if (!v.is_number()) throw ValidationError("json", matrix_path + ": entries must be numbers");
            a.push_back(v.get<double>());
          }
        }
        x = RealMatrix(j.size(), j[0].size(), a);
      }
      if (!(tmax >= 0)) throw ValidationError("range", "--tmax must be >= 0");
      std::vector<double> grid;
      for (int i = 0; i * dt <= tmax * (1 + 1e-12); ++i) grid.push_back(i * dt);
      const auto tr = dani_systole(x, QuasiNorm::unweighted(x.cols, Side::kSource),
                                   QuasiNorm::unweighted(x.rows, Side::kTarget), beta, grid);
      results = to_json(tr);
      for (const auto& f : tr.flags) ses.flags.push_back(f);
      if (!ses.csv_path.empty()) {
        std::ofstream o(ses.csv_path);
        if (!o) throw ValidationError("io", "cannot write " + ses.csv_path);
        write_systole_csv(o, tr);
      }
    } else if (cmd == heis) {
      std::vector<HeisElement> g;
      if (!gens_text.empty()) {
        std::stringstream ss(gens_text);
        std::string tok;
        while (std::getline(ss, tok, ';')) {
          const auto v = parse_doubles(tok, "--generators");
          if (v.size() != 3) throw ValidationError("shape", "each generator needs x,y,z");
          g.push_back({v[0], v[1], v[2]});
        }
      } else {
        std::mt19937_64 rng(ses.seed);
        std::uniform_real_distribution<double> u(-1, 1);
        for (std::size_t i = 0; i < heis_k; ++i) g.push_back({u(rng), u(rng), u(rng)});
      }
      const auto fit = heisenberg_word_min(g, g.size(), heis_bound, eo);
      results = to_json(fit);
      results["k"] = g.size();
      const auto closed = heisenberg_beta(g.size());
      results["closed_form_alpha"] = to_json(closed.alpha);
      Json gj = Json::array();
      for (const auto& h : g) gj.push_back(Json::array({real_json(h.x), real_json(h.y), real_json(h.z)}));
      ses.certificates["generators"] = gj;
      for (const auto& f : fit.flags) ses.flags.push_back(f);
      if (!ses.csv_path.empty()) {
        std::ofstream o(ses.csv_path);
        if (!o) throw ValidationError("io", "cannot write " + ses.csv_path);
        write_slope_csv(o, fit);
      }
    } else if (cmd == self) {
      AcceptanceOptions opt;
      opt.seed = ses.seed;
      opt.threads = ses.threads;
      opt.only = only;
      int failed = 0;
      results = Json::array();
      for (const auto& r : run_acceptance(opt, [&](const CriterionResult& r) {
             err << format_line(r) << '\n';
             failed += !r.pass;
           }))
        results.push_back(to_json(r));
      if (failed) {
        ses.flags.push_back(std::to_string(failed) + "-criteria-failed");
        code = kExitFailed;
      }
    }
  } catch (const ValidationError& e) {
    return fail(e.kind(), e.what(), kExitInvalid);
  } catch (const UniquenessError& e) {
    return fail("uniqueness", e.what(), kExitUniqueness);
  } catch (const std::invalid_argument& e) {
    return fail("validation", e.what(), kExitInvalid);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), kExitFailed);
  }

  Json report;
  report["command"] = cmd->get_name();
  report["argv"] = ses.argv;
  report["inputs"] = ses.inputs;
  report["inputs_hash"] = ses.inputs_hash();
  report["seed"] = ses.seed;
  report["threads"] = ses.threads;
  report["results"] = results;
  report["certificates"] = ses.certificates;
  report["flags"] = ses.flags;
  const std::string text = report.dump(2) + '\n';
  if (ses.out_path.empty()) {
    out << text;
  } else {
    try {
      write_text(ses.out_path, text);
    } catch (const ValidationError& e) {
      return fail(e.kind(), e.what(), kExitInvalid);
    }
  }
  if (ses.escalate) return kExitUniqueness;
  return code;
}

}  // namespace diophex
