#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace gcorr {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// The single tolerance knob shared by every verifier and extractor.
class Tolerance {
 public:
  static constexpr double kDefault = 1e-9;

  Tolerance() = default;
  explicit Tolerance(double eps);

  double eps() const noexcept { return eps_; }

  // Threshold used for rank decisions on a matrix with largest singular
  // value `scale`: absolute below scale 1, relative above.
  double rank_threshold(double scale) const noexcept;

 private:
  double eps_ = kDefault;
};

// Largest entry modulus; 0 for empty matrices.
double max_abs(const CMatrix& m);

bool all_finite(const CMatrix& m);

// Orthonormal columns spanning range(m), one per singular value above
// tol.rank_threshold(sigma_max), ordered by descending singular value.
// Each column is rotated so that its first entry of (numerically) largest
// modulus is real and positive. Returns an m.rows() x 0 matrix for m == 0.
CMatrix orthonormal_range_basis(const CMatrix& m, const Tolerance& tol = {});

// Numerical rank with the same threshold as orthonormal_range_basis.
std::size_t numerical_rank(const CMatrix& m, const Tolerance& tol = {});

// Orthonormal basis (as columns) of the numerical kernel of l, with the same
// ordering and phase conventions as orthonormal_range_basis.
CMatrix nullspace_basis(const CMatrix& l, const Tolerance& tol = {});

// ||m^2 - m|| <= eps and ||m* - m|| <= eps in the max-entry norm.
// Throws Error(Input) if m is not square.
bool is_projection(const CMatrix& m, const Tolerance& tol = {});

// ||m m* m - m|| <= eps.
bool is_partial_isometry(const CMatrix& m, const Tolerance& tol = {});

// max-entry norm of u* u - I; requires a square matrix.
double unitarity_defect(const CMatrix& u);

// Rotates v in place so that its first entry of largest modulus is real
// positive. Leaves zero vectors alone.
void fix_phase(Eigen::Ref<CVector> v);

}  // namespace gcorr
