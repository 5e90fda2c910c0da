#include "drs/linalg.hpp"

namespace drs::la {

namespace {

int count_rank(const Eigen::VectorXd& sv, double tol) {
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) >= tol * sv(0)) ++r;
  return r;
}

}  // namespace

int rank(const Mat& a, double tol) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::BDCSVD<Mat> svd(a);
  return count_rank(svd.singularValues(), tol);
}

Mat kernel(const Mat& a, double tol) {
  const Eigen::Index n = a.cols();
  if (a.rows() == 0) return Mat::Identity(n, n);
  // Pad to a square system so the full V factor is available.
  Mat sq = Mat::Zero(std::max(a.rows(), n), n);
  sq.topRows(a.rows()) = a;
  Eigen::BDCSVD<Mat> svd(sq, Eigen::ComputeFullV);
  int r = count_rank(svd.singularValues(), tol);
  return svd.matrixV().rightCols(n - r);
}

Solution solve(const Mat& a, const Vec& b, double tol) {
  Solution s;
  Eigen::BDCSVD<Mat> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  s.rank = count_rank(sv, tol);
  Vec ub = svd.matrixU().adjoint() * b;
  for (Eigen::Index i = 0; i < ub.size(); ++i) ub(i) = i < s.rank ? ub(i) / sv(i) : 0.0;
  s.x = svd.matrixV() * ub;
  s.residual = a.rows() ? (a * s.x - b).cwiseAbs().maxCoeff() : 0.0;
  return s;
}

LeastSquares::LeastSquares(const Mat& a, double tol) : a_(a) {
  Eigen::BDCSVD<Mat> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  u_ = svd.matrixU();
  v_ = svd.matrixV();
  sv_ = svd.singularValues();
  rank_ = count_rank(sv_, tol);
}

Mat LeastSquares::solve(const Mat& rhs) const {
  Mat ub = u_.adjoint() * rhs;
  for (Eigen::Index i = 0; i < ub.rows(); ++i) {
    if (i < rank_)
      ub.row(i) /= sv_(i);
    else
      ub.row(i).setZero();
  }
  return v_ * ub;
}

double LeastSquares::residual(const Mat& x, const Mat& rhs) const {
  if (rhs.size() == 0) return 0.0;
  return (a_ * x - rhs).cwiseAbs().maxCoeff();
}

}  // namespace drs::la
