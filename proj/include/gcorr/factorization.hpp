#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "gcorr/endomorphism.hpp"
#include "gcorr/graph.hpp"
#include "gcorr/representation.hpp"

namespace gcorr {

// alpha_ij(x) = P_j alpha(P_i x) restricted to B(H_i) -> B(H_j), stored by
// its values on the matrix units of block i.
struct ComponentMap {
  std::string from;
  std::string to;
  Eigen::Index from_dim = 0;
  Eigen::Index to_dim = 0;
  std::vector<CMatrix> images;  // index p * from_dim + q

  const CMatrix& at(Eigen::Index p, Eigen::Index q) const { return images[static_cast<std::size_t>(p * from_dim + q)]; }
  // alpha_ij applied to a d_i x d_i matrix.
  CMatrix apply(const CMatrix& x) const;
};

// The functions below throw Error(NotAnEndomorphism) when endo_verify fails.

ComponentMap component_map(const Endo& a, const std::string& i, const std::string& j, const Tolerance& tol = {});

// Rank of alpha_ij(E_00). Throws Error(InconsistentMultiplicity) unless
// rank(alpha_ij(I)) equals that rank times d_i.
int multiplicity(const Endo& a, const std::string& i, const std::string& j, const Tolerance& tol = {});

// The n_ij isometries V_k: H_i -> H_j with alpha_ij(T) = sum_k V_k T V_k*.
// With xi_k the range basis of alpha_ij(E_00), V_k e_p = alpha_ij(E_p0) xi_k.
// Throws Error(ReconstructionFailure) if the isometry or reconstruction
// residual exceeds tol.
std::vector<CMatrix> extract_isometries(const Endo& a, const std::string& i, const std::string& j,
                                        const Tolerance& tol = {});

struct FactorizationResult {
  Eigen::MatrixXi multiplicities;  // [i][j] = n_ij, layout order
  GraphPtr graph;
  ToeplitzRep rep;
  double residual = 0.0;  // max over matrix units of |alpha(u) - Ad_tau(u)|
  bool unital = false;
  CoisometricReport coisometric;
};

// Factors alpha as Ad_tau. The graph has one vertex per block and n_ij edges
// i -> j named "<i>-><j>#<k>" (k from 1), ordered by (i, j, k) in layout
// order; tau(delta_e) is the corresponding isometry V_k.
FactorizationResult factor_endo(const Endo& a, const Tolerance& tol = {});

// Formats a matrix unit as "(v,p,q)".
std::string describe(const MatrixUnit& u);

}  // namespace gcorr
