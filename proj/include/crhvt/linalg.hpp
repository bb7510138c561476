#pragma once

#include <vector>

#include "crhvt/errors.hpp"

namespace crhvt {

// Feature/parameter vectors live in a fixed ambient dimension d that is small
// (the experiments use d = 10); plain contiguous storage is all we need.
using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& a);
// y += c * x
void axpy(double c, const Vec& x, Vec& y);
Vec scaled(const Vec& x, double c);

// Dense square matrix, row-major.
class Mat {
 public:
  Mat() = default;
  Mat(int n, double fill = 0.0) : n_(n), a_(static_cast<std::size_t>(n) * n, fill) {}
  static Mat identity(int n);

  int dim() const { return n_; }
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

 private:
  int n_ = 0;
  std::vector<double> a_;
};

Vec matvec(const Mat& m, const Vec& x);
// x^T m x
double quad_form(const Mat& m, const Vec& x);
// sqrt(x^T m x) with the SPD rounding contract: radicands below -1e-12 throw
// numeric_error, values in [-1e-12, 0) clamp to zero.
double mahalanobis_norm(const Mat& m, const Vec& x);
// m += w * x x^T
void add_outer(Mat& m, const Vec& x, double w);
// max_ij |A B - I|
double identity_residual(const Mat& a, const Mat& b);

// Cholesky factorization/solve/inverse for SPD systems. Throws numeric_error
// if a pivot is not strictly positive.
Mat cholesky(const Mat& a);
Vec cholesky_solve(const Mat& chol_lower, const Vec& b);
Mat spd_inverse(const Mat& a);

enum class Metric { kV, kVinv };

// Positive definite matrix V with its inverse kept in sync. The inverse is
// maintained with the rank-one (Sherman-Morrison) identity and recomputed
// from scratch every kRefreshInterval updates to bound drift; with d <= ~64
// both paths are O(d^2)/O(d^3) and cheap.
class SpdState {
 public:
  static constexpr int kRefreshInterval = 512;
  static constexpr double kDefaultProjectionTol = 1e-10;

  // V = lambda * I, Vinv = I / lambda.
  SpdState(double lambda, int dim);

  // V += weight * x x^T. weight must be > 0; x = 0 leaves the state unchanged.
  void rank_one_update(const Vec& x, double weight);

  // sqrt(x^T V x) or sqrt(x^T Vinv x). Radicands below -1e-12 are a
  // numeric_error; values in [-1e-12, 0) clamp to zero.
  double mahalanobis(const Vec& x, Metric metric) const;

  // argmin_{||theta||_2 <= radius} ||theta - theta_tilde||_V. Interior points
  // are returned unchanged (bit-exact). Otherwise solves for the Lagrange
  // multiplier mu with ||(V + mu I)^-1 V theta_tilde||_2 = radius by
  // bisection; ||theta(mu)||_2 is strictly decreasing in mu.
  Vec project_ball(const Vec& theta_tilde, double radius,
                   double tol = kDefaultProjectionTol) const;

  int dim() const { return dim_; }
  double lambda_floor() const { return lambda_; }
  const Mat& V() const { return v_; }
  const Mat& Vinv() const { return vinv_; }

  // max|V Vinv - I|, for the sync invariant.
  double sync_error() const { return identity_residual(v_, vinv_); }

 private:
  void check_dim(const Vec& x) const;

  int dim_ = 0;
  double lambda_ = 0.0;
  Mat v_, vinv_;
  int updates_since_refresh_ = 0;
};

}  // namespace crhvt
