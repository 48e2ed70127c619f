// Copyright 2026 The sppr Authors.
//
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

#include "sppr/oracle.h"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>

namespace sppr {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

MatrixXd DenseQ(const MQuadratic& q) {
  const Index n = q.dim();
  MatrixXd m = MatrixXd::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    auto cols = q.q().row_cols(i);
    auto vals = q.q().row_values(i);
    for (std::size_t k = 0; k < cols.size(); ++k) m(i, cols[k]) = vals[k];
  }
  return m;
}

VectorXd DenseB(const MQuadratic& q) {
  return Eigen::Map<const VectorXd>(q.b().data(), q.dim());
}

// Gradient scale used for "grad >= 0" acceptance.
double AcceptTolerance(const MQuadratic& q) {
  return 1e-12 * std::max(1.0, q.b_inf_norm());
}

OracleSolution Finish(const MQuadratic& q, const MatrixXd* dense,
                      std::vector<double> x) {
  const Index n = q.dim();
  OracleSolution out;
  std::vector<double> grad(n);
  if (dense != nullptr) {
    VectorXd g = (*dense) * Eigen::Map<const VectorXd>(x.data(), n) -
                 DenseB(q);
    for (Index i = 0; i < n; ++i) grad[i] = g[i];
  } else {
    for (Index i = 0; i < n; ++i) {
      double acc = -q.b()[i];
      auto cols = q.q().row_cols(i);
      auto vals = q.q().row_values(i);
      for (std::size_t k = 0; k < cols.size(); ++k) acc += vals[k] * x[cols[k]];
      grad[i] = acc;
    }
  }
  out.kkt_residuals.resize(n);
  for (Index i = 0; i < n; ++i) {
    if (x[i] > 0.0) {
      out.support.push_back(i);
      out.kkt_residuals[i] = std::abs(grad[i]);
    } else {
      x[i] = 0.0;
      out.kkt_residuals[i] = std::max(0.0, -grad[i]);
    }
  }
  out.objective = Objective(q, x);
  out.x_star = std::move(x);
  return out;
}

struct Candidate {
  std::vector<Index> support;
  std::vector<double> x;
  double violation = 0.0;  // max of -x_S and -grad off S, floored at 0
};

}  // namespace

double OracleSolution::max_kkt_residual() const {
  double worst = 0.0;
  for (double r : kkt_residuals) worst = std::max(worst, r);
  return worst;
}

OracleSolution DenseSolveEnumerate(const MQuadratic& q) {
  const Index n = q.dim();
  if (n > kEnumerationLimit) {
    throw std::invalid_argument("enumeration oracle limited to n <= " +
                                std::to_string(kEnumerationLimit));
  }
  const MatrixXd dense = DenseQ(q);
  const VectorXd b = DenseB(q);
  const double accept = AcceptTolerance(q);

  std::vector<Candidate> accepted;
  std::vector<Candidate> near;  // best rejected ones, for the error message
  std::vector<Index> idx;
  VectorXd x_full(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    idx.clear();
    for (Index i = 0; i < n; ++i) {
      if (mask >> i & 1) idx.push_back(i);
    }
    const Index m = static_cast<Index>(idx.size());
    x_full.setZero();
    if (m > 0) {
      MatrixXd qs(m, m);
      VectorXd bs(m);
      for (Index a = 0; a < m; ++a) {
        bs[a] = b[idx[a]];
        for (Index c = 0; c < m; ++c) qs(a, c) = dense(idx[a], idx[c]);
      }
      Eigen::LLT<MatrixXd> llt(qs);
      if (llt.info() != Eigen::Success) continue;
      VectorXd xs = llt.solve(bs);
      xs += llt.solve(bs - qs * xs);
      for (Index a = 0; a < m; ++a) x_full[idx[a]] = xs[a];
    }
    const VectorXd grad = dense * x_full - b;
    double violation = 0.0;
    bool positive = true;
    for (Index i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        if (!(x_full[i] > 0.0)) positive = false;
        violation = std::max(violation, -x_full[i]);
      } else {
        violation = std::max(violation, -grad[i]);
      }
    }
    Candidate c{idx, std::vector<double>(x_full.data(), x_full.data() + n),
                violation};
    double off_violation = 0.0;
    for (Index i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) off_violation = std::max(off_violation, -grad[i]);
    }
    if (positive && off_violation <= accept) {
      accepted.push_back(std::move(c));
    } else {
      near.push_back(std::move(c));
      std::sort(near.begin(), near.end(),
                [](const Candidate& l, const Candidate& r) {
                  return l.violation < r.violation;
                });
      if (near.size() > 3) near.pop_back();
    }
  }

  if (accepted.empty()) {
    std::ostringstream msg;
    msg << "enumeration oracle accepted no support; closest:";
    for (const Candidate& c : near) {
      msg << " {";
      for (std::size_t k = 0; k < c.support.size(); ++k) {
        msg << (k ? "," : "") << c.support[k];
      }
      msg << "} violation " << c.violation << ";";
    }
    throw SolverError(msg.str());
  }
  // More than one only in degenerate cases (an optimal coordinate at zero
  // with zero gradient); they describe the same point up to rounding.
  const Candidate& best = *std::min_element(
      accepted.begin(), accepted.end(),
      [](const Candidate& l, const Candidate& r) {
        return l.violation < r.violation;
      });
  return Finish(q, &dense, best.x);
}

OracleSolution DenseSolveProjected(const MQuadratic& q, double gap,
                                   Index max_iterations) {
  const Index n = q.dim();
  if (n > 4096) {
    throw std::invalid_argument("projected oracle limited to n <= 4096");
  }
  if (!(gap > 0.0)) throw std::invalid_argument("gap must be positive");
  const double inv_l = 1.0 / q.smoothness();
  const double accept = AcceptTolerance(q);
  const auto& qm = q.q();
  const auto& b = q.b();

  auto gradient = [&](const std::vector<double>& x, std::vector<double>& g) {
    for (Index i = 0; i < n; ++i) {
      double acc = -b[i];
      auto cols = qm.row_cols(i);
      auto vals = qm.row_values(i);
      for (std::size_t k = 0; k < cols.size(); ++k) acc += vals[k] * x[cols[k]];
      g[i] = acc;
    }
  };
  auto certified = [&](const std::vector<double>& x,
                       const std::vector<double>& g) {
    double sq = 0.0;
    for (Index i = 0; i < n; ++i) {
      const double r = x[i] > 0.0 ? g[i] : std::min(g[i], 0.0);
      sq += r * r;
    }
    return sq / (2.0 * q.alpha());
  };

  // Direct solve on {i : x_i > threshold}; returns true and overwrites `out`
  // when the result satisfies the optimality conditions.
  std::vector<Index> last_guess;
  auto try_support = [&](const std::vector<double>& x,
                         std::vector<double>& out) {
    double top = 0.0;
    for (double v : x) top = std::max(top, v);
    std::vector<Index> guess;
    for (Index i = 0; i < n; ++i) {
      if (x[i] > kSupportThreshold * top) guess.push_back(i);
    }
    if (guess == last_guess) return false;
    last_guess = guess;
    const Index m = static_cast<Index>(guess.size());
    std::vector<double> candidate(n, 0.0);
    if (m > 0) {
      std::vector<Index> local(n, -1);
      for (Index a = 0; a < m; ++a) local[guess[a]] = a;
      std::vector<Eigen::Triplet<double>> trip;
      Eigen::VectorXd bs(m);
      for (Index a = 0; a < m; ++a) {
        const Index i = guess[a];
        bs[a] = b[i];
        auto cols = qm.row_cols(i);
        auto vals = qm.row_values(i);
        for (std::size_t k = 0; k < cols.size(); ++k) {
          if (local[cols[k]] >= 0) trip.emplace_back(a, local[cols[k]], vals[k]);
        }
      }
      Eigen::SparseMatrix<double> qs(m, m);
      qs.setFromTriplets(trip.begin(), trip.end());
      Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(qs);
      if (ldlt.info() != Eigen::Success) return false;
      Eigen::VectorXd xs = ldlt.solve(bs);
      xs += ldlt.solve(bs - qs * xs);
      for (Index a = 0; a < m; ++a) {
        if (!(xs[a] > 0.0)) return false;
        candidate[guess[a]] = xs[a];
      }
    }
    std::vector<double> g(n);
    gradient(candidate, g);
    for (Index i = 0; i < n; ++i) {
      if (candidate[i] == 0.0 && g[i] < -accept) return false;
    }
    out = std::move(candidate);
    return true;
  };

  std::vector<double> x(n, 0.0), g(n);
  Index chunk = 16;
  Index done = 0;
  while (true) {
    gradient(x, g);
    std::vector<double> exact;
    if (try_support(x, exact)) return Finish(q, nullptr, std::move(exact));
    if (certified(x, g) <= gap) return Finish(q, nullptr, std::move(x));
    if (done >= max_iterations) {
      throw SolverError("projected oracle: no convergence after " +
                        std::to_string(done) + " iterations");
    }
    for (Index t = 0; t < chunk && done < max_iterations; ++t, ++done) {
      if (t > 0) gradient(x, g);
      for (Index i = 0; i < n; ++i) x[i] = std::max(0.0, x[i] - inv_l * g[i]);
    }
    chunk = std::min<Index>(chunk * 2, 4096);
  }
}

OracleSolution Solve(const MQuadratic& q) {
  return q.dim() <= kEnumerationLimit ? DenseSolveEnumerate(q)
                                      : DenseSolveProjected(q);
}

std::vector<double> SubspaceSolve(const MQuadratic& q,
                                  std::span<const Index> subset) {
  const Index n = q.dim();
  const Index m = static_cast<Index>(subset.size());
  std::vector<double> out(n, 0.0);
  if (m == 0) return out;
  std::vector<Index> local(n, -1);
  for (Index a = 0; a < m; ++a) {
    if (subset[a] < 0 || subset[a] >= n || local[subset[a]] >= 0) {
      throw std::invalid_argument("subset index out of range or repeated");
    }
    local[subset[a]] = a;
  }
  std::vector<Triplet> entries;
  std::vector<double> b(m);
  for (Index a = 0; a < m; ++a) {
    const Index i = subset[a];
    b[a] = q.b()[i];
    auto cols = q.q().row_cols(i);
    auto vals = q.q().row_values(i);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const Index c = local[cols[k]];
      if (c >= 0 && c <= a) entries.push_back({a, c, vals[k]});
    }
  }
  // A principal submatrix keeps its spectrum inside [alpha, L].
  MQuadratic sub(SymmetricCsr::FromTriangle(m, entries), std::move(b),
                 q.alpha(), q.smoothness());
  OracleSolution sol = Solve(sub);
  for (Index a = 0; a < m; ++a) out[subset[a]] = sol.x_star[a];
  return out;
}

GeometryReport VerifyGeometry(const MQuadratic& q,
                              std::span<const Index> subset,
                              const SparseVector& x0, double tol,
                              const OracleSolution* optimum) {
  const Index n = q.dim();
  if (x0.dim() != n) throw std::invalid_argument("x0 has the wrong dimension");
  std::vector<char> in_s(n, 0);
  for (Index i : subset) in_s.at(i) = 1;
  for (Index k = 0; k < x0.nnz(); ++k) {
    if (!(x0.values()[k] >= 0.0)) {
      throw std::invalid_argument("x0 has a negative entry");
    }
    if (x0.values()[k] != 0.0 && !in_s[x0.indices()[k]]) {
      throw std::invalid_argument("x0 is nonzero outside S");
    }
  }
  const std::vector<double> grad0 = Gradient(q, x0);
  for (Index i : subset) {
    if (grad0[i] > tol) {
      throw std::invalid_argument("gradient at x0 is positive on S at " +
                                  std::to_string(i));
    }
  }

  GeometryReport report;
  report.subspace_minimizer = SubspaceSolve(q, subset);
  const std::vector<double>& xc = report.subspace_minimizer;
  double scale = 1.0;
  for (double v : xc) scale = std::max(scale, v);
  const double slack = 1e-9 * scale;
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    report.failures.push_back(what);
  };

  const std::vector<double> grad_c = Gradient(q, SparseVector::FromDense(xc));
  for (Index i : subset) {
    if (x0.at(i) > xc[i] + slack && report.below_subspace_minimizer) {
      fail(report.below_subspace_minimizer,
           "x0 exceeds the subspace minimizer at " + std::to_string(i));
    }
    if (std::abs(grad_c[i]) > 1e-9 * std::max(1.0, q.b_inf_norm()) &&
        report.subspace_stationary) {
      fail(report.subspace_stationary,
           "subspace minimizer not stationary at " + std::to_string(i));
    }
    if ((x0.at(i) > 0.0 || grad0[i] < -tol) && !(xc[i] > 0.0) &&
        report.positive_where_expected) {
      fail(report.positive_where_expected,
           "subspace minimizer vanishes at active " + std::to_string(i));
    }
    if (!(xc[i] > 0.0)) report.subspace_positive = false;
  }

  if (report.subspace_positive) {
    OracleSolution computed;
    if (optimum == nullptr) {
      computed = Solve(q);
      optimum = &computed;
    }
    for (Index i = 0; i < n; ++i) {
      if (xc[i] > optimum->x_star[i] + slack && report.below_optimum) {
        fail(report.below_optimum,
             "subspace minimizer exceeds the optimum at " + std::to_string(i));
      }
    }
    for (Index i : subset) {
      if (!(optimum->x_star[i] > 0.0) && report.subset_of_support) {
        fail(report.subset_of_support,
             std::to_string(i) + " is outside the optimal support");
      }
    }
  }
  return report;
}

}  // namespace sppr
