#pragma once

// Ordinary least squares through the normal equations, with an explicit rank
// check that names the offending columns.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "firefront/error.hpp"

namespace firefront {

struct FitReport {
  std::size_t n = 0;
  double rmse = 0.0;
  double mae = 0.0;
  double r2 = 0.0;
  std::vector<std::string> warnings;
};

inline FitReport score_predictions(std::span<const double> observed, std::span<const double> predicted) {
  FitReport r;
  r.n = observed.size();
  if (r.n == 0) return r;
  const double mean = std::accumulate(observed.begin(), observed.end(), 0.0) / static_cast<double>(r.n);
  double sse = 0.0, sae = 0.0, sst = 0.0;
  for (std::size_t i = 0; i < r.n; ++i) {
    const double e = observed[i] - predicted[i];
    sse += e * e;
    sae += std::fabs(e);
    sst += (observed[i] - mean) * (observed[i] - mean);
  }
  r.rmse = std::sqrt(sse / static_cast<double>(r.n));
  r.mae = sae / static_cast<double>(r.n);
  r.r2 = sst > 0.0 ? 1.0 - sse / sst : (sse == 0.0 ? 1.0 : 0.0);
  return r;
}

/// Design matrix stored row-major; `names` labels the columns for error messages.
struct Design {
  std::vector<std::string> names;
  std::vector<std::vector<double>> rows;

  std::size_t cols() const { return names.size(); }
  double column_value(std::size_t row, std::size_t col) const { return rows[row][col]; }
};

namespace detail {

/// Cholesky solve of a symmetric positive-definite system, in place.
inline std::vector<double> cholesky_solve(std::vector<std::vector<double>> a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t j = 0; j < n; ++j) {
    double d = a[j][j];
    for (std::size_t k = 0; k < j; ++k) d -= a[j][k] * a[j][k];
    if (!(d > 0.0)) throw SingularFitError("normal equations are not positive definite");
    a[j][j] = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a[i][j];
      for (std::size_t k = 0; k < j; ++k) s -= a[i][k] * a[j][k];
      a[i][j] = s / a[j][j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k) b[i] -= a[i][k] * b[k];
    b[i] /= a[i][i];
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t k = i + 1; k < n; ++k) b[i] -= a[k][i] * b[k];
    b[i] /= a[i][i];
  }
  return b;
}

}  // namespace detail

/// Throws SingularFitError if the columns are linearly dependent. The check is
/// modified Gram-Schmidt on the columns in order; a column whose residual is
/// below `rel_tol` of its norm is reported together with the earlier columns
/// it is a combination of.
inline void check_full_rank(const Design& x, double rel_tol = 1e-9) {
  const std::size_t m = x.rows.size(), p = x.cols();
  if (m < p)
    throw SingularFitError("need at least " + std::to_string(p) + " rows for " + std::to_string(p) +
                           " unknowns, got " + std::to_string(m));
  std::vector<std::vector<double>> q;  // orthonormal basis so far
  std::vector<std::size_t> basis_col;
  for (std::size_t j = 0; j < p; ++j) {
    std::vector<double> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = x.column_value(i, j);
    const double original = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    std::vector<std::string> partners;
    for (std::size_t k = 0; k < q.size(); ++k) {
      const double proj = std::inner_product(v.begin(), v.end(), q[k].begin(), 0.0);
      if (std::fabs(proj) > rel_tol * std::max(original, 1e-300)) partners.push_back(x.names[basis_col[k]]);
      for (std::size_t i = 0; i < m; ++i) v[i] -= proj * q[k][i];
    }
    const double residual = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    if (original == 0.0 || residual <= rel_tol * original) {
      std::string msg = "rank-deficient design: column '" + x.names[j] + "'";
      if (original == 0.0)
        msg += " is identically zero";
      else {
        msg += " is collinear with";
        for (std::size_t k = 0; k < partners.size(); ++k) msg += (k ? ", '" : " '") + partners[k] + "'";
      }
      throw SingularFitError(msg);
    }
    for (double& e : v) e /= residual;
    q.push_back(std::move(v));
    basis_col.push_back(j);
  }
}

/// Least-squares coefficients. Column 0 must be the intercept (all ones); the
/// other columns are standardized before forming X'X to keep it well conditioned.
inline std::vector<double> fit_ols(const Design& x, std::span<const double> y) {
  const std::size_t m = x.rows.size(), p = x.cols();
  if (y.size() != m) throw ValidationError("response length does not match design rows");
  check_full_rank(x);

  std::vector<double> mean(p, 0.0), scale(p, 1.0);
  for (std::size_t j = 1; j < p; ++j) {
    for (std::size_t i = 0; i < m; ++i) mean[j] += x.rows[i][j];
    mean[j] /= static_cast<double>(m);
    double ss = 0.0;
    for (std::size_t i = 0; i < m; ++i) ss += (x.rows[i][j] - mean[j]) * (x.rows[i][j] - mean[j]);
    scale[j] = std::sqrt(ss / static_cast<double>(m));
    if (!(scale[j] > 0.0)) scale[j] = 1.0;
  }
  auto z = [&](std::size_t i, std::size_t j) { return j == 0 ? 1.0 : (x.rows[i][j] - mean[j]) / scale[j]; };

  std::vector<std::vector<double>> xtx(p, std::vector<double>(p, 0.0));
  std::vector<double> xty(p, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      const double zij = z(i, j);
      xty[j] += zij * y[i];
      for (std::size_t k = 0; k <= j; ++k) xtx[j][k] += zij * z(i, k);
    }
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t k = j + 1; k < p; ++k) xtx[j][k] = xtx[k][j];

  std::vector<double> g = detail::cholesky_solve(std::move(xtx), std::move(xty));
  std::vector<double> beta(p);
  beta[0] = g[0];
  for (std::size_t j = 1; j < p; ++j) {
    beta[j] = g[j] / scale[j];
    beta[0] -= beta[j] * mean[j];
  }
  return beta;
}

}  // namespace firefront
