#pragma once

#include <Eigen/Dense>

#include "drs/core.hpp"

namespace drs::la {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr double kRankTol = 1e-9;

// Numerical rank with the relative cutoff sigma >= tol * sigma_max.
int rank(const Mat& a, double tol = kRankTol);
inline int nullity(const Mat& a, double tol = kRankTol) {
  return static_cast<int>(a.cols()) - rank(a, tol);
}

// Orthonormal basis of the numerical kernel, one vector per column.
Mat kernel(const Mat& a, double tol = kRankTol);

struct Solution {
  Vec x;
  double residual = 0.0;  // max-abs of A x - b
  int rank = 0;
};

// Minimum-norm least-squares solution.
Solution solve(const Mat& a, const Vec& b, double tol = kRankTol);

// Factor once, solve for many right-hand sides.
class LeastSquares {
 public:
  explicit LeastSquares(const Mat& a, double tol = kRankTol);
  Mat solve(const Mat& rhs) const;
  int rank() const { return rank_; }
  int cols() const { return static_cast<int>(v_.rows()); }
  // Largest |A x - b| entry over all columns of a previous solve.
  double residual(const Mat& x, const Mat& rhs) const;

 private:
  Mat a_, u_, v_;
  Eigen::VectorXd sv_;
  int rank_ = 0;
};

}  // namespace drs::la
