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

#include "diophex/empirical.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>
#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include "diophex/errors.hpp"

namespace diophex {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

std::vector<double> to_doubles(const std::vector<Rational>& w) {
  std::vector<double> out;
  for (const auto& r : w) out.push_back(r.to_double());
  return out;
}

// Runs f(slab) for slabs 0..n-1 on up to `threads` workers.
void parallel_slabs(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& f) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += threads) f(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

RealMatrix::RealMatrix(std::size_t r, std::size_t c, std::vector<double> v)
    : rows(r), cols(c), a(std::move(v)) {
  if (a.size() != r * c) throw ValidationError("shape", "matrix entry count mismatch");
}

RealMatrix RealMatrix::from(const QMatrix& m) {
  RealMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
  return out;
}

SearchBox search_box(const QuasiNorm& qv, double q) {
  if (!(q >= 1)) throw ValidationError("range", "quasi-norm radius must be >= 1");
  SearchBox box{q, {}};
  for (double a : to_doubles(qv.weights()))
    box.bounds.push_back(static_cast<std::int64_t>(std::floor(std::pow(q, a) * (1 + 1e-12))));
  return box;
}

double source_qnorm(const std::vector<std::int64_t>& v, const QuasiNorm& qv) {
  double out = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0)
      out = std::max(out, std::pow(std::abs(static_cast<double>(v[i])),
                                   1 / qv.weights()[i].to_double()));
  return out;
}

double target_qnorm(const std::vector<double>& y, const QuasiNorm& qe) {
  double out = 0;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (y[i] != 0)
      out = std::max(out, std::pow(std::abs(y[i]), 1 / qe.weights()[i].to_double()));
  return out;
}

namespace {

// Box enumeration with the free/dependent split. The dependent block B is
// a well conditioned invertible minor x[R, B]; for each free vector the
// dependent coordinates are confined to a small box around -B^{-1} x_F v_F.
class BoxMinimizer {
 public:
  BoxMinimizer(const RealMatrix& x, const QuasiNorm& qv, const QuasiNorm& qe, double q)
      : x_(x), box_(search_box(qv, q)), wt_(to_doubles(qe.weights())) {
    if (x.cols != qv.dim() || x.rows != qe.dim())
      throw ValidationError("shape", "matrix does not match the quasi-norms");
    choose_block();
  }

  // min over the columns, i.e. over v = e_j
  double start_bound() const {
    double start = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < x_.cols; ++j) {
      std::vector<double> y(x_.rows);
      for (std::size_t i = 0; i < x_.rows; ++i) y[i] = x_(i, j);
      start = std::min(start, qnorm(y));
    }
    return start;
  }

  // Upper estimate of the vectors the scan visits: free vectors times the
  // dependent box at the starting bound. 0 when x vanishes.
  double work() const {
    if (rows_.empty()) return 0;
    double points = 1;
    for (auto j : free_) points *= 2.0 * static_cast<double>(box_.bounds[j]) + 1;
    const double start = start_bound();
    const std::size_t r = rows_.size();
    for (std::size_t i = 0; i < r; ++i) {
      double acc = 0;
      for (std::size_t l = 0; l < r; ++l)
        acc += std::abs(binv_[i * r + l]) * std::pow(start, wt_[rows_[l]]);
      points *= std::min(2.0 * static_cast<double>(box_.bounds[block_[i]]) + 1, 2 * acc + 1);
    }
    return points;
  }

  double run(const EnumOptions& opt) {
    const double start = start_bound();
    if (rows_.empty()) return 0;
    if (work() > opt.max_points)
      throw ValidationError("box-guard", "enumeration box exceeds the guard");
    if (free_.empty()) return scan(start, 0, 0);
    const std::int64_t b0 = box_.bounds[free_[0]];
    const std::size_t slabs = std::min<std::size_t>(2 * b0 + 1, 64);
    std::vector<double> best(slabs, start);
    parallel_slabs(slabs, opt.threads, [&](std::size_t s) {
      const std::int64_t width = 2 * b0 + 1;
      const std::int64_t lo = -b0 + width * static_cast<std::int64_t>(s) / static_cast<std::int64_t>(slabs);
      const std::int64_t hi = -b0 + width * static_cast<std::int64_t>(s + 1) / static_cast<std::int64_t>(slabs) - 1;
      best[s] = scan(start, lo, hi);
    });
    return *std::min_element(best.begin(), best.end());
  }

 private:
  double qnorm(const std::vector<double>& y) const {
    double out = 0;
    for (std::size_t i = 0; i < y.size(); ++i)
      if (y[i] != 0) out = std::max(out, std::pow(std::abs(y[i]), 1 / wt_[i]));
    return out;
  }

  void choose_block() {
    const std::size_t d = x_.cols, e = x_.rows;
    std::vector<double> s(x_.a);
    double top = 0;
    for (std::size_t i = 0; i < e; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        s[i * d + j] *= static_cast<double>(box_.bounds[j]);
        top = std::max(top, std::abs(s[i * d + j]));
      }
    std::vector<bool> used_r(e), used_c(d);
    for (std::size_t step = 0; step < std::min(d, e); ++step) {
      double m = 0;
      std::size_t pr = 0, pc = 0;
      for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = 0; j < d; ++j)
          if (!used_r[i] && !used_c[j] && std::abs(s[i * d + j]) > m) {
            m = std::abs(s[i * d + j]);
            pr = i;
            pc = j;
          }
      if (m <= 1e-12 * top || m == 0) break;
      used_r[pr] = used_c[pc] = true;
      rows_.push_back(pr);
      block_.push_back(pc);
      for (std::size_t i = 0; i < e; ++i) {
        if (i == pr) continue;
        const double f = s[i * d + pc] / s[pr * d + pc];
        for (std::size_t j = 0; j < d; ++j) s[i * d + j] -= f * s[pr * d + j];
      }
    }
    for (std::size_t j = 0; j < d; ++j)
      if (!used_c[j]) free_.push_back(j);
    const std::size_t r = rows_.size();
    if (r == 0) return;
    Eigen::MatrixXd b(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) b(i, j) = x_(rows_[i], block_[j]);
    const Eigen::MatrixXd inv = b.inverse();
    binv_.assign(r * r, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) binv_[i * r + j] = inv(i, j);
    // g = -B^{-1} x[R, F]
    g_.assign(r * free_.size(), 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t f = 0; f < free_.size(); ++f) {
        double acc = 0;
        for (std::size_t l = 0; l < r; ++l) acc += inv(i, l) * x_(rows_[l], free_[f]);
        g_[i * free_.size() + f] = -acc;
      }
  }

  // Minimum over the box with the first free coordinate in [lo, hi].
  double scan(double best, std::int64_t lo, std::int64_t hi) const {
    const std::size_t d = x_.cols, e = x_.rows, r = rows_.size(), nf = free_.size();
    std::vector<std::int64_t> v(d, 0), lo_f(nf), hi_f(nf);
    for (std::size_t f = 0; f < nf; ++f) {
      lo_f[f] = -box_.bounds[free_[f]];
      hi_f[f] = box_.bounds[free_[f]];
    }
    if (nf > 0) {
      lo_f[0] = lo;
      hi_f[0] = hi;
      if (lo > hi) return best;
    }
    for (std::size_t f = 0; f < nf; ++f) v[free_[f]] = lo_f[f];
    std::vector<double> c(r), w(r), y(e);
    std::vector<std::int64_t> blo(r), bhi(r);
    // half widths of the dependent box for the current best
    auto widen = [&] {
      for (std::size_t i = 0; i < r; ++i) {
        double acc = 0;
        for (std::size_t l = 0; l < r; ++l)
          acc += std::abs(binv_[i * r + l]) * std::pow(best, wt_[rows_[l]]);
        w[i] = acc * (1 + 1e-9) + 1e-12;
      }
    };
    widen();
    auto visit = [&](const std::vector<double>& centre) {
      for (std::size_t i = 0; i < r; ++i) {
        const double lo_d = std::ceil(centre[i] - w[i]), hi_d = std::floor(centre[i] + w[i]);
        if (lo_d > hi_d) return;
        const std::int64_t bb = box_.bounds[block_[i]];
        blo[i] = std::max<std::int64_t>(-bb, static_cast<std::int64_t>(std::max(lo_d, -1e18)));
        bhi[i] = std::min<std::int64_t>(bb, static_cast<std::int64_t>(std::min(hi_d, 1e18)));
        if (blo[i] > bhi[i]) return;
      }
      for (std::size_t i = 0; i < r; ++i) v[block_[i]] = blo[i];
      while (true) {
        bool nonzero = false;
        for (auto t : v) nonzero = nonzero || t != 0;
        if (nonzero) {
          for (std::size_t i = 0; i < e; ++i) {
            long double acc = 0;
            for (std::size_t j = 0; j < d; ++j)
              if (v[j] != 0) acc += static_cast<long double>(x_(i, j)) * v[j];
            y[i] = static_cast<double>(acc);
          }
          const double val = qnorm(y);
          if (val < best) {
            best = val;
            widen();
          }
        }
        std::size_t i = 0;
        for (; i < r; ++i) {
          if (v[block_[i]] < bhi[i]) {
            ++v[block_[i]];
            break;
          }
          v[block_[i]] = blo[i];
        }
        if (i == r) break;
      }
      for (std::size_t i = 0; i < r; ++i) v[block_[i]] = 0;
    };
    if (nf == 0) {
      visit(std::vector<double>(r, 0.0));
      return best;
    }
    const std::size_t inner = nf - 1;
    while (true) {
      // centre for the current outer coordinates with the inner one at lo
      std::vector<double> c0(r, 0.0);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t f = 0; f < nf; ++f)
          c0[i] += g_[i * nf + f] * static_cast<double>(v[free_[f]]);
      for (std::int64_t t = lo_f[inner]; t <= hi_f[inner]; ++t) {
        const double dt = static_cast<double>(t - lo_f[inner]);
        bool hit = true;
        for (std::size_t i = 0; i < r && hit; ++i) {
          c[i] = c0[i] + dt * g_[i * nf + inner];
          hit = std::floor(c[i] + w[i]) >= c[i] - w[i];
        }
        if (!hit) continue;
        v[free_[inner]] = t;
        visit(c);
        if (best == 0) return 0;
      }
      v[free_[inner]] = lo_f[inner];
      if (inner == 0) break;
      std::size_t f = inner;
      bool done = true;
      while (f-- > 0) {
        if (v[free_[f]] < hi_f[f]) {
          ++v[free_[f]];
          done = false;
          break;
        }
        v[free_[f]] = lo_f[f];
      }
      if (done) break;
    }
    return best;
  }

  const RealMatrix& x_;
  SearchBox box_;
  std::vector<double> wt_;
  std::vector<std::size_t> rows_, block_, free_;
  std::vector<double> binv_, g_;
};

}  // namespace


std::vector<double> geometric_schedule(double q0, double ratio, std::size_t n) {
  if (!(q0 >= 1) || !(ratio > 1)) throw ValidationError("range", "bad geometric schedule");
  std::vector<double> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(q0 * std::pow(ratio, static_cast<double>(i)));
  return out;
}

std::vector<double> geometric_range(double q0, double qmax, std::size_t n) {
  if (n < 2 || !(qmax > q0)) throw ValidationError("range", "bad geometric range");
  return geometric_schedule(q0, std::pow(qmax / q0, 1.0 / static_cast<double>(n - 1)), n);
}

void ols(const std::vector<double>& xs, const std::vector<double>& ys, double& slope,
         double& intercept, double& r2) {
  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  slope = sxx > 0 ? sxy / sxx : 0;
  intercept = my - slope * mx;
  if (syy == 0) {
    r2 = 1;
    return;
  }
  double ss = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double res = ys[i] - (intercept + slope * xs[i]);
    ss += res * res;
  }
  r2 = std::clamp(1 - ss / syy, 0.0, 1.0);
}

namespace {

void fit_points(SlopeFit& fit) {
  if (fit.points.size() < 2) {
    fit.flags.push_back("insufficient-points");
    return;
  }
  std::vector<double> xs, ys;
  for (const auto& p : fit.points) {
    xs.push_back(p.log_q);
    ys.push_back(p.neg_log_min);
  }
  ols(xs, ys, fit.slope, fit.intercept, fit.r2);
}

}  // namespace

SlopeFit estimate_beta(const RealMatrix& x, const QuasiNorm& qv, const QuasiNorm& qe,
                       const std::vector<double>& q_schedule, const EnumOptions& opt) {
  if (q_schedule.size() < 6)
    throw ValidationError("schedule", "the Q schedule needs at least 6 points");
  for (std::size_t i = 1; i < q_schedule.size(); ++i)
    if (!(q_schedule[i] > q_schedule[i - 1]))
      throw ValidationError("schedule", "the Q schedule must be increasing");
  SlopeFit fit;
  fit.q_schedule = q_schedule;
  for (double q : q_schedule) {
    const double m = min_image_qnorm(x, qv, qe, q, opt);
    if (m == 0) {
      fit.excluded.push_back(q);
      continue;
    }
    fit.points.push_back({q, m, std::log(q), -std::log(m)});
  }
  if (!fit.excluded.empty()) fit.flags.push_back("exact-zero-minimum");
  fit_points(fit);
  return fit;
}

namespace {

using RealVec = std::vector<Real>;

Real dot(const RealVec& a, const RealVec& b) {
  Real s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void gram_schmidt(const std::vector<RealVec>& b, std::vector<RealVec>& mu, RealVec& bn) {
  const std::size_t n = b.size();
  std::vector<RealVec> bs(n);
  mu.assign(n, RealVec(n, Real(0)));
  bn.assign(n, Real(0));
  for (std::size_t i = 0; i < n; ++i) {
    bs[i] = b[i];
    for (std::size_t j = 0; j < i; ++j) {
      mu[i][j] = dot(b[i], bs[j]) / bn[j];
      for (std::size_t l = 0; l < bs[i].size(); ++l) bs[i][l] -= mu[i][j] * bs[j][l];
    }
    bn[i] = dot(bs[i], bs[i]);
  }
}

void lll(std::vector<RealVec>& b) {
  const std::size_t n = b.size();
  std::vector<RealVec> mu;
  RealVec bn;
  gram_schmidt(b, mu, bn);
  std::size_t k = 1;
  std::size_t guard = 0;
  while (k < n) {
    if (++guard > 100000) throw std::runtime_error("lattice reduction did not terminate");
    for (std::size_t j = k; j-- > 0;) {
      const Real q = boost::multiprecision::round(mu[k][j]);
      if (q != 0) {
        for (std::size_t l = 0; l < b[k].size(); ++l) b[k][l] -= q * b[j][l];
        gram_schmidt(b, mu, bn);
      }
    }
    if (bn[k] >= (Real(0.99) - mu[k][k - 1] * mu[k][k - 1]) * bn[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gram_schmidt(b, mu, bn);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
}

// Squared length of a shortest nonzero lattice vector; radius2 is the
// enumeration radius used.
Real shortest2(std::vector<RealVec> b, Real& radius2) {
  const std::size_t n = b.size();
  lll(b);
  std::vector<RealVec> mu;
  RealVec bn;
  gram_schmidt(b, mu, bn);
  radius2 = dot(b[0], b[0]);
  for (const auto& v : b) radius2 = std::min<Real>(radius2, dot(v, v));
  Real best = radius2;
  std::vector<Real> u(n, Real(0));
  std::function<void(std::size_t, Real)> rec = [&](std::size_t i, Real partial) {
    Real c = 0;
    for (std::size_t j = i + 1; j < n; ++j) c -= mu[j][i] * u[j];
    const Real slack = (best * (1 + Real(1e-30)) - partial) / bn[i];
    if (slack < 0) return;
    const Real w = boost::multiprecision::sqrt(slack);
    const Real lo = boost::multiprecision::ceil(c - w), hi = boost::multiprecision::floor(c + w);
    for (Real t = lo; t <= hi; t += 1) {
      u[i] = t;
      const Real p = partial + (t - c) * (t - c) * bn[i];
      if (i == 0) {
        bool nonzero = false;
        for (const auto& x : u) nonzero = nonzero || x != 0;
        if (nonzero && p > 0 && p < best) best = p;
      } else {
        rec(i - 1, p);
      }
    }
    u[i] = 0;
  };
  rec(n - 1, Real(0));
  return best;
}

// Lattice form of the box problem. With source bounds b_j and target
// tolerances t_i = delta^{alpha'_i}, v is feasible iff the lattice vector
// (v_j / b_j ; (xv)_i / t_i) lies in the unit sup ball, hence in the
// Euclidean ball of radius sqrt(d + e). The ball is enumerated on an LLL
// reduced basis; delta grows by 8x until a feasible v turns up.
double lattice_min(const RealMatrix& x, const SearchBox& box, const std::vector<double>& wt,
                   double start, const EnumOptions& opt) {
  const std::size_t d = x.cols, e = x.rows, n = d + e;
  double sum_w = 0, xmax = 0;
  for (double w : wt) sum_w += w;
  for (double v : x.a) xmax = std::max(xmax, std::abs(v));
  double log_n = 0;
  for (auto b : box.bounds) log_n += std::log(2.0 * static_cast<double>(b) + 1);
  double delta = std::min(start, std::exp(-log_n / sum_w) * std::max(xmax, 1e-300));
  double nodes = 0;
  for (;;) {
    std::vector<double> t(e);
    for (std::size_t i = 0; i < e; ++i) t[i] = std::pow(delta, wt[i]);
    std::vector<RealVec> b(d, RealVec(n, Real(0)));
    for (std::size_t j = 0; j < d; ++j) {
      b[j][j] = Real(1) / static_cast<double>(box.bounds[j]);
      for (std::size_t i = 0; i < e; ++i) b[j][d + i] = Real(x(i, j)) / t[i];
    }
    lll(b);
    std::vector<RealVec> mu;
    RealVec bn;
    gram_schmidt(b, mu, bn);
    double best = std::numeric_limits<double>::infinity();
    auto radius2 = [&] {
      if (!(best < delta)) return Real(static_cast<double>(n)) * (1 + Real(1e-9));
      Real r = static_cast<double>(d);
      for (std::size_t i = 0; i < e; ++i) {
        const Real s = Real(std::pow(best, wt[i])) / t[i];
        r += s * s;
      }
      return r * (1 + Real(1e-9));
    };
    Real r2 = radius2();
    std::vector<Real> u(d, Real(0));
    std::vector<std::int64_t> v(d);
    auto leaf = [&] {
      bool nonzero = false;
      for (std::size_t j = 0; j < d; ++j) {
        Real y = 0;
        for (std::size_t k = 0; k < d; ++k) y += u[k] * b[k][j];
        v[j] = static_cast<std::int64_t>(boost::multiprecision::round(y * static_cast<double>(box.bounds[j])));
        if (std::abs(v[j]) > box.bounds[j]) return;
        nonzero = nonzero || v[j] != 0;
      }
      if (!nonzero) return;
      double q = 0;
      for (std::size_t i = 0; i < e; ++i) {
        Real y = 0;
        for (std::size_t j = 0; j < d; ++j) y += Real(x(i, j)) * v[j];
        const double a = static_cast<double>(boost::multiprecision::abs(y));
        if (a != 0) q = std::max(q, std::pow(a, 1 / wt[i]));
      }
      if (q < best) {
        best = q;
        r2 = radius2();
      }
    };
    std::function<void(std::size_t, Real)> rec = [&](std::size_t i, Real partial) {
      if (best == 0) return;
      if ((nodes += 1) > opt.max_points)
        throw ValidationError("box-guard", "lattice enumeration exceeds the node guard");
      Real c = 0;
      for (std::size_t j = i + 1; j < d; ++j) c -= mu[j][i] * u[j];
      const Real slack = (r2 - partial) / bn[i];
      if (slack < 0) return;
      const Real w = boost::multiprecision::sqrt(slack);
      const Real hi = boost::multiprecision::floor(c + w);
      for (Real s = boost::multiprecision::ceil(c - w); s <= hi; s += 1) {
        u[i] = s;
        const Real p = partial + (s - c) * (s - c) * bn[i];
        if (p > r2) continue;
        if (i == 0)
          leaf();
        else
          rec(i - 1, p);
      }
      u[i] = 0;
    };
    rec(d - 1, Real(0));
    if (best <= delta || delta >= start) return std::min(best, start);
    delta = std::min(start, 8 * delta);
  }
}

}  // namespace

double min_image_qnorm(const RealMatrix& x, const QuasiNorm& qv, const QuasiNorm& qe,
                       double q, const EnumOptions& opt) {
  if (qv.side() != Side::kSource || qe.side() != Side::kTarget)
    throw ValidationError("quasi-norm", "expected a source and a target quasi-norm");
  BoxMinimizer box(x, qv, qe, q);
  const double work = box.work();
  const bool lattice = opt.method == EnumMethod::kLattice ||
                       (opt.method == EnumMethod::kAuto && work > 1e6);
  if (!lattice || work == 0) return box.run(opt);
  return lattice_min(x, search_box(qv, q), to_doubles(qe.weights()), box.start_bound(), opt);
}

double shortest_vector(const RealMatrix& b, double* radius) {
  if (b.rows != b.cols || b.rows == 0) throw ValidationError("shape", "lattice basis must be square");
  std::vector<RealVec> cols(b.cols, RealVec(b.rows));
  for (std::size_t j = 0; j < b.cols; ++j)
    for (std::size_t i = 0; i < b.rows; ++i) cols[j][i] = b(i, j);
  Real r2;
  const Real s = shortest2(cols, r2);
  if (radius) *radius = static_cast<double>(boost::multiprecision::sqrt(r2));
  return static_cast<double>(boost::multiprecision::sqrt(s));
}

namespace {

std::size_t numeric_rank(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * s(0)) ++r;
  return r;
}

}  // namespace

SystoleTrace dani_systole(const RealMatrix& x, const QuasiNorm& qv, const QuasiNorm& qe,
                          double beta, const std::vector<double>& t_grid, double rank_tol) {
  const std::size_t d = x.cols, e = x.rows;
  if (d != qv.dim() || e != qe.dim())
    throw ValidationError("shape", "matrix does not match the quasi-norms");
  if (!(beta > 0)) throw ValidationError("range", "beta must be positive");
  SystoleTrace tr;
  tr.beta = beta;
  Eigen::MatrixXd xm(e, d);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < d; ++j) xm(i, j) = x(i, j);
  {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(xm);
    const auto& s = svd.singularValues();
    double smin = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
      if (s(i) > rank_tol * s(0)) smin = s(i);
    tr.condition = smin > 0 ? s(0) / smin : std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < s.size(); ++i)
      if (s(i) > rank_tol * s(0) && s(i) < 1e3 * rank_tol * s(0)) {
        tr.flags.push_back("rank-ambiguous");
        break;
      }
    if (tr.condition > 1e6) tr.flags.push_back("ill-conditioned");
  }
  // J(xV): first rows raising the rank of x_1..x_i.
  std::vector<Eigen::VectorXd> rows;
  for (std::size_t i = 0; i < e; ++i) {
    Eigen::MatrixXd m(i + 1, d);
    for (std::size_t l = 0; l <= i; ++l) m.row(l) = xm.row(l);
    if (numeric_rank(m, rank_tol) > tr.image_rows.size()) {
      tr.image_rows.push_back(i);
      Eigen::VectorXd r = xm.row(i).transpose();
      rows.push_back(r / r.norm());
    }
  }
  const std::size_t m = tr.image_rows.size();
  // I(ker x): first unit forms raising the rank past the image rows.
  for (std::size_t i = 0; i < d && tr.kernel_rows.size() < d - m; ++i) {
    Eigen::MatrixXd s(m + tr.kernel_rows.size() + 1, d);
    s.setZero();
    for (std::size_t l = 0; l < m; ++l) s.row(l) = rows[l].transpose();
    std::size_t r = m;
    for (auto k : tr.kernel_rows) s(r++, k) = 1;
    s(r, i) = 1;
    if (numeric_rank(s, rank_tol) == r + 1) tr.kernel_rows.push_back(i);
  }
  if (tr.kernel_rows.size() + m != d) throw ValidationError("rank", "could not complete x'");
  const auto alpha = to_doubles(qv.weights()), alpha_t = to_doubles(qe.weights());
  std::vector<std::vector<double>> xp;
  for (auto i : tr.kernel_rows) {
    std::vector<double> u(d, 0.0);
    u[i] = 1;
    xp.push_back(u);
    tr.exponents.push_back(alpha[i]);
  }
  for (std::size_t l = m; l-- > 0;) {
    const std::size_t i = tr.image_rows[l];
    xp.emplace_back(x.a.begin() + static_cast<std::ptrdiff_t>(i * d),
                    x.a.begin() + static_cast<std::ptrdiff_t>((i + 1) * d));
    tr.exponents.push_back(alpha_t[i]);
  }
  const std::size_t n = d - m;
  for (double t : t_grid) {
    std::vector<RealVec> cols(d, RealVec(d));
    for (std::size_t i = 0; i < d; ++i) {
      const Real s = i < n ? boost::multiprecision::exp(Real(-tr.exponents[i]) * Real(t))
                           : boost::multiprecision::exp(Real(beta) * Real(tr.exponents[i]) * Real(t));
      for (std::size_t j = 0; j < d; ++j) cols[j][i] = s * Real(xp[i][j]);
    }
    Real r2;
    const Real s2 = shortest2(cols, r2);
    tr.times.push_back(t);
    tr.systole.push_back(static_cast<double>(boost::multiprecision::sqrt(s2)));
    tr.radius.push_back(static_cast<double>(boost::multiprecision::sqrt(r2)));
  }
  return tr;
}

HeisElement heis_mul(const HeisElement& a, const HeisElement& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z + a.x * b.y};
}

HeisElement heis_pow(const HeisElement& g, std::int64_t n) {
  const double nd = static_cast<double>(n);
  return {nd * g.x, nd * g.y, nd * g.z + nd * (nd - 1) / 2 * g.x * g.y};
}

HeisElement heis_commutator(const HeisElement& g, const HeisElement& h) {
  return {0, 0, g.x * h.y - h.x * g.y};
}

HeisElement heis_word(const std::vector<HeisElement>& g, const std::vector<std::int64_t>& n,
                      const std::vector<std::int64_t>& nij) {
  const std::size_t k = g.size();
  if (n.size() != k || nij.size() != k * (k - 1) / 2)
    throw ValidationError("shape", "word exponent count mismatch");
  HeisElement out;
  for (std::size_t i = 0; i < k; ++i) out = heis_mul(out, heis_pow(g[i], n[i]));
  std::size_t p = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j, ++p)
      out.z += static_cast<double>(nij[p]) * heis_commutator(g[i], g[j]).z;
  return out;
}

namespace {

// min |z0 + sum n_i c_i| over |n_i| <= L; all-zero n excluded if asked.
// The last coefficient is solved by rounding, the rest enumerated.
double min_linear_form(const std::vector<double>& c, long double z0, std::int64_t L,
                       bool exclude_zero, unsigned threads, double max_points) {
  const std::size_t m = c.size();
  if (std::pow(2.0 * static_cast<double>(L) + 1, static_cast<double>(m - 1)) > max_points)
    throw ValidationError("box-guard", "commutator enumeration exceeds the guard");
  auto last = [&](long double s, bool zero_so_far) {
    const long double cl = c[m - 1];
    long double best = std::numeric_limits<long double>::infinity();
    auto consider = [&](std::int64_t t) {
      if (t < -L || t > L) return;
      if (exclude_zero && zero_so_far && t == 0) return;
      best = std::min(best, std::fabs(s + cl * static_cast<long double>(t)));
    };
    if (cl == 0) {
      consider(0);
      consider(1);
    } else {
      const long double r = -s / cl;
      const auto f = static_cast<std::int64_t>(std::floor(std::clamp<long double>(r, -L - 1, L + 1)));
      for (std::int64_t t = f - 1; t <= f + 2; ++t) consider(t);
      consider(-L);
      consider(L);
    }
    return best;
  };
  std::function<long double(std::size_t, long double, bool)> rec =
      [&](std::size_t i, long double s, bool zero) -> long double {
    if (i + 1 == m) return last(s, zero);
    long double best = std::numeric_limits<long double>::infinity();
    for (std::int64_t t = -L; t <= L; ++t)
      best = std::min(best, rec(i + 1, s + static_cast<long double>(c[i]) * t, zero && t == 0));
    return best;
  };
  if (m == 1) return static_cast<double>(last(z0, true));
  const std::size_t slabs = static_cast<std::size_t>(std::min<std::int64_t>(2 * L + 1, 64));
  std::vector<long double> best(slabs, std::numeric_limits<long double>::infinity());
  parallel_slabs(slabs, threads, [&](std::size_t sl) {
    const std::int64_t width = 2 * L + 1;
    const std::int64_t lo = -L + width * static_cast<std::int64_t>(sl) / static_cast<std::int64_t>(slabs);
    const std::int64_t hi = -L + width * static_cast<std::int64_t>(sl + 1) / static_cast<std::int64_t>(slabs) - 1;
    for (std::int64_t t = lo; t <= hi; ++t)
      best[sl] = std::min(best[sl], rec(1, z0 + static_cast<long double>(c[0]) * t, t == 0));
  });
  return static_cast<double>(*std::min_element(best.begin(), best.end()));
}

}  // namespace

SlopeFit heisenberg_word_min(const std::vector<HeisElement>& g, std::size_t k,
                             std::int64_t bound, const EnumOptions& opt) {
  if (k < 2 || g.size() != k) throw ValidationError("range", "need k >= 2 generators");
  if (bound < 2) throw ValidationError("range", "bound must be at least 2");
  std::vector<double> shells;
  for (double l : geometric_range(2, static_cast<double>(bound), 8)) {
    const double r = std::round(l);
    if (shells.empty() || r > shells.back()) shells.push_back(r);
  }
  return heisenberg_word_min(g, shells, opt);
}

SlopeFit heisenberg_word_min(const std::vector<HeisElement>& g,
                             const std::vector<double>& shells, const EnumOptions& opt) {
  const std::size_t k = g.size();
  if (k < 2) throw ValidationError("range", "need k >= 2 generators");
  std::vector<double> c;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) c.push_back(heis_commutator(g[i], g[j]).z);
  SlopeFit fit;
  fit.q_schedule = shells;
  for (double shell : shells) {
    const auto l = static_cast<std::int64_t>(shell);
    if (l < 1) throw ValidationError("range", "shell lengths must be positive");
    const std::int64_t L = l * l;
    // words in the centre
    double best = min_linear_form(c, 0, L, true, opt.threads, opt.max_points);
    if (best == 0) {
      fit.flags.push_back("commutators-rationally-dependent");
      fit.excluded.push_back(shell);
      continue;
    }
    // words nontrivial modulo the centre
    std::vector<std::int64_t> n(k, -l);
    while (true) {
      bool nonzero = false;
      for (auto t : n) nonzero = nonzero || t != 0;
      if (nonzero) {
        double x = 0, y = 0;
        for (std::size_t i = 0; i < k; ++i) {
          x += static_cast<double>(n[i]) * g[i].x;
          y += static_cast<double>(n[i]) * g[i].y;
        }
        const double lb = std::max(std::abs(x), std::abs(y));
        if (lb < best) {
          HeisElement w;
          for (std::size_t i = 0; i < k; ++i) w = heis_mul(w, heis_pow(g[i], n[i]));
          const double z = min_linear_form(c, w.z, L, false, 1, opt.max_points);
          best = std::min(best, std::max(lb, z));
        }
      }
      std::size_t i = 0;
      for (; i < k; ++i) {
        if (n[i] < l) {
          ++n[i];
          break;
        }
        n[i] = -l;
      }
      if (i == k) break;
    }
    if (best == 0) {
      fit.flags.push_back("generators-rationally-dependent");
      fit.excluded.push_back(shell);
      continue;
    }
    fit.points.push_back({shell, best, std::log(shell), -std::log(best)});
  }
  fit_points(fit);
  return fit;
}

double QuadForm::operator()(const std::vector<double>& x) const {
  double s = 0;
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = k + 1; l < d; ++l) s += coeff(k, l) * x[k] * x[l];
  return s;
}

double QuadForm::max_abs() const {
  double m = 0;
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = k + 1; l < d; ++l) m = std::max(m, std::abs(coeff(k, l)));
  return m;
}

double level_bound(const QuadForm& q, double eps) {
  const double a = q.max_abs();
  const double dd = static_cast<double>(q.d);
  return std::pow(2.0, dd + 1) * eps / a *
         (1 + std::max(0.0, std::log(std::sqrt(dd) * a / eps)));
}

LevelMeasure quadratic_level_measure(const QuadForm& q, double eps, std::uint64_t n_mc,
                                     std::uint64_t seed, Region region, unsigned threads) {
  if (q.d < 2 || q.a.size() != q.d * q.d) throw ValidationError("shape", "bad quadratic form");
  if (q.max_abs() == 0) throw ValidationError("range", "coefficients are all zero");
  if (!(eps > 0) || n_mc == 0) throw ValidationError("range", "need eps > 0 and samples");
  constexpr std::size_t kChunks = 64;
  std::vector<std::uint64_t> hits(kChunks, 0);
  const std::size_t d = q.d;
  parallel_slabs(kChunks, threads, [&](std::size_t ch) {
    std::seed_seq ss{seed, static_cast<std::uint64_t>(ch)};
    std::mt19937_64 rng(ss);
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const std::uint64_t n = n_mc / kChunks + (ch < n_mc % kChunks ? 1 : 0);
    std::vector<double> x(d);
    for (std::uint64_t s = 0; s < n; ++s) {
      if (region == Region::kBall) {
        double r2 = 0;
        for (auto& v : x) {
          v = gauss(rng);
          r2 += v * v;
        }
        const double scale = std::pow(unif(rng), 1.0 / static_cast<double>(d)) / std::sqrt(r2);
        for (auto& v : x) v *= scale;
      } else {
        for (auto& v : x) v = 2 * unif(rng) - 1;
      }
      if (std::abs(q(x)) <= eps) ++hits[ch];
    }
  });
  std::uint64_t total = 0;
  for (auto h : hits) total += h;
  const double dd = static_cast<double>(d);
  LevelMeasure out;
  out.region_volume = region == Region::kBall
                          ? std::pow(std::numbers::pi, dd / 2) / std::tgamma(dd / 2 + 1)
                          : std::pow(2.0, dd);
  const double p = static_cast<double>(total) / static_cast<double>(n_mc);
  out.estimate = out.region_volume * p;
  out.std_error = out.region_volume * std::sqrt(p * (1 - p) / static_cast<double>(n_mc));
  out.bound = level_bound(q, eps);
  return out;
}

void write_slope_csv(std::ostream& os, const SlopeFit& fit) {
  os << "Q,min_norm,log_Q,neg_log_min\n" << std::setprecision(12);
  for (const auto& p : fit.points)
    os << p.q << ',' << p.min_norm << ',' << p.log_q << ',' << p.neg_log_min << '\n';
}

void write_systole_csv(std::ostream& os, const SystoleTrace& trace) {
  os << "t,systole\n" << std::setprecision(12);
  for (std::size_t i = 0; i < trace.times.size(); ++i)
    os << trace.times[i] << ',' << trace.systole[i] << '\n';
}

}  // namespace diophex
