#include "gcorr/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gcorr/errors.hpp"

namespace gcorr {

namespace {

// Entries within this relative distance of the largest modulus count as
// ties when choosing the phase anchor.
constexpr double kPhaseTie = 1e-8;

Eigen::JacobiSVD<CMatrix> svd_of(const CMatrix& m, unsigned options) {
  Eigen::JacobiSVD<CMatrix> svd;
  svd.compute(m, options);
  return svd;
}

std::size_t rank_of(const Eigen::VectorXd& sigma, const Tolerance& tol) {
  if (sigma.size() == 0) return 0;
  const double largest = sigma(0);
  if (largest == 0.0) return 0;
  const double cut = tol.rank_threshold(largest);
  std::size_t r = 0;
  while (r < static_cast<std::size_t>(sigma.size()) && sigma(static_cast<Eigen::Index>(r)) > cut) ++r;
  return r;
}

}  // namespace

Tolerance::Tolerance(double eps) : eps_(eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) input_error("tolerance must be a positive finite number, got " + std::to_string(eps));
}

double Tolerance::rank_threshold(double scale) const noexcept { return eps_ * std::max(1.0, scale); }

double max_abs(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool all_finite(const CMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (!std::isfinite(m.data()[i].real()) || !std::isfinite(m.data()[i].imag())) return false;
  }
  return true;
}

void fix_phase(Eigen::Ref<CVector> v) {
  if (v.size() == 0) return;
  const double largest = v.cwiseAbs().maxCoeff();
  if (largest == 0.0) return;
  Eigen::Index anchor = 0;
  while (std::abs(v(anchor)) < largest * (1.0 - kPhaseTie)) ++anchor;
  const Complex phase = std::conj(v(anchor)) / std::abs(v(anchor));
  v *= phase;
  v(anchor) = Complex(v(anchor).real(), 0.0);
}

CMatrix orthonormal_range_basis(const CMatrix& m, const Tolerance& tol) {
  if (m.size() == 0) return CMatrix(m.rows(), 0);
  const auto svd = svd_of(m, Eigen::ComputeThinU);
  const auto rank = static_cast<Eigen::Index>(rank_of(svd.singularValues(), tol));
  CMatrix basis = svd.matrixU().leftCols(rank);
  for (Eigen::Index k = 0; k < rank; ++k) fix_phase(basis.col(k));
  return basis;
}

std::size_t numerical_rank(const CMatrix& m, const Tolerance& tol) {
  if (m.size() == 0) return 0;
  return rank_of(svd_of(m, 0).singularValues(), tol);
}

CMatrix nullspace_basis(const CMatrix& l, const Tolerance& tol) {
  const Eigen::Index n = l.cols();
  if (n == 0) return CMatrix(0, 0);
  if (l.rows() == 0) {
    return CMatrix::Identity(n, n);
  }
  const auto svd = svd_of(l, Eigen::ComputeFullV);
  const auto rank = static_cast<Eigen::Index>(rank_of(svd.singularValues(), tol));
  CMatrix basis = svd.matrixV().rightCols(n - rank);
  for (Eigen::Index k = 0; k < basis.cols(); ++k) fix_phase(basis.col(k));
  return basis;
}

bool is_projection(const CMatrix& m, const Tolerance& tol) {
  if (m.rows() != m.cols()) {
    input_error("is_projection needs a square matrix, got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  const CMatrix sq = m * m;
  return max_abs(sq - m) <= tol.eps() && max_abs(m.adjoint() - m) <= tol.eps();
}

bool is_partial_isometry(const CMatrix& m, const Tolerance& tol) {
  const CMatrix mmm = m * m.adjoint() * m;
  return max_abs(mmm - m) <= tol.eps();
}

double unitarity_defect(const CMatrix& u) {
  if (u.rows() != u.cols()) input_error("unitarity check needs a square matrix");
  if (u.size() == 0) return 0.0;
  return max_abs(u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols()));
}

}  // namespace gcorr
