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

#ifndef DIOPHEX_EMPIRICAL_HPP_
#define DIOPHEX_EMPIRICAL_HPP_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "diophex/pencil.hpp"

namespace diophex {

// Dense row-major real matrix.
struct RealMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<double> a;
  RealMatrix() = default;
  RealMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  RealMatrix(std::size_t r, std::size_t c, std::vector<double> v);
  static RealMatrix from(const QMatrix& m);
  double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Integer points of the source quasi-norm ball of radius q.
struct SearchBox {
  double q = 1;
  std::vector<std::int64_t> bounds;  // |v_i| <= bounds[i]
};
SearchBox search_box(const QuasiNorm& qv, double q);
// max |v_i|^{1/alpha_i}
double source_qnorm(const std::vector<std::int64_t>& v, const QuasiNorm& qv);
// max |y_i|^{1/alpha'_i}
double target_qnorm(const std::vector<double>& y, const QuasiNorm& qe);

enum class EnumMethod { kAuto, kBox, kLattice };

struct EnumOptions {
  unsigned threads = 1;
  // Guard on the number of enumerated free coordinate vectors (box) or
  // enumeration nodes (lattice).
  double max_points = 1e9;
  // kAuto scans the box when it has at most 1e5 free vectors and otherwise
  // enumerates a reduced lattice whose unit sup ball is the search region.
  EnumMethod method = EnumMethod::kAuto;
};

// min |xv|' over nonzero integer v with |v| <= q. Returns 0 when some v in
// the box is an exact kernel vector in floating point.
double min_image_qnorm(const RealMatrix& x, const QuasiNorm& qv, const QuasiNorm& qe,
                       double q, const EnumOptions& opt = {});

struct SlopePoint {
  double q = 0, min_norm = 0, log_q = 0, neg_log_min = 0;
};

struct SlopeFit {
  std::vector<SlopePoint> points;  // points used in the fit
  std::vector<double> q_schedule;
  std::vector<double> excluded;    // schedule entries whose minimum was 0
  double slope = 0, intercept = 0, r2 = 0;
  std::vector<std::string> flags;
};

// q0, q0 r, ... (n points), or n geometric points from q0 to qmax.
std::vector<double> geometric_schedule(double q0, double ratio, std::size_t n);
std::vector<double> geometric_range(double q0, double qmax, std::size_t n);

// Ordinary least squares of ys on xs.
void ols(const std::vector<double>& xs, const std::vector<double>& ys, double& slope,
         double& intercept, double& r2);

SlopeFit estimate_beta(const RealMatrix& x, const QuasiNorm& qv, const QuasiNorm& qe,
                       const std::vector<double>& q_schedule,
                       const EnumOptions& opt = {});

struct SystoleTrace {
  double beta = 0;
  std::vector<double> times, systole, radius;
  std::vector<std::size_t> kernel_rows, image_rows;  // I(ker x), J(xV), 0-based
  std::vector<double> exponents;                      // a_1..a_d
  double condition = 0;
  std::vector<std::string> flags;
};

// Shortest nonzero vector length of the lattice a_t x' Z^d along t_grid.
SystoleTrace dani_systole(const RealMatrix& x, const QuasiNorm& qv, const QuasiNorm& qe,
                          double beta, const std::vector<double>& t_grid,
                          double rank_tol = 1e-9);

// Euclidean length of a shortest nonzero vector of the lattice spanned by
// the columns of b (full rank, square).
double shortest_vector(const RealMatrix& b, double* radius = nullptr);

// Heisenberg group element (x, y, z) with (x,y,z)*(x',y',z') =
// (x+x', y+y', z+z'+xy').
struct HeisElement {
  double x = 0, y = 0, z = 0;
};
HeisElement heis_mul(const HeisElement& a, const HeisElement& b);
HeisElement heis_pow(const HeisElement& g, std::int64_t n);
HeisElement heis_commutator(const HeisElement& g, const HeisElement& h);

// g_1^{n_1}...g_k^{n_k} prod_{i<j} [g_i,g_j]^{n_ij}
HeisElement heis_word(const std::vector<HeisElement>& g, const std::vector<std::int64_t>& n,
                      const std::vector<std::int64_t>& nij);

// For each length shell l in the schedule: min of max(|x|,|y|,|z|) over
// nontrivial word maps with |n_l| <= l and |n_ij| <= l^2; slope against log l.
SlopeFit heisenberg_word_min(const std::vector<HeisElement>& g, std::size_t k,
                             std::int64_t bound, const EnumOptions& opt = {});
SlopeFit heisenberg_word_min(const std::vector<HeisElement>& g,
                             const std::vector<double>& shells,
                             const EnumOptions& opt = {});

// Square-free quadratic form sum_{k<l} a_kl x_k x_l.
struct QuadForm {
  std::size_t d = 0;
  std::vector<double> a;  // d x d, only k < l entries used
  double coeff(std::size_t k, std::size_t l) const { return a[k * d + l]; }
  double operator()(const std::vector<double>& x) const;
  double max_abs() const;
};

enum class Region { kBall, kCube };

struct LevelMeasure {
  double estimate = 0;  // Lebesgue measure of {|q| <= eps} within the region
  double std_error = 0;
  double bound = 0;
  double region_volume = 0;
  bool within_bound() const { return estimate <= bound + 3 * std_error; }
};

double level_bound(const QuadForm& q, double eps);
LevelMeasure quadratic_level_measure(const QuadForm& q, double eps, std::uint64_t n_mc,
                                     std::uint64_t seed, Region region = Region::kBall,
                                     unsigned threads = 1);

void write_slope_csv(std::ostream& os, const SlopeFit& fit);
void write_systole_csv(std::ostream& os, const SystoleTrace& trace);

}  // namespace diophex

#endif  // DIOPHEX_EMPIRICAL_HPP_
