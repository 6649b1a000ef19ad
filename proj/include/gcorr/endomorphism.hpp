#pragma once

#include <map>
#include <string>
#include <vector>

#include "gcorr/layout.hpp"
#include "gcorr/numerics.hpp"
#include "gcorr/representation.hpp"

namespace gcorr {

// Element of W = sum over v of B(H_v), stored block by block.
class BlockOperator {
 public:
  // Throws Error(Input) if a block is missing or has the wrong size.
  BlockOperator(BlockLayout layout, std::map<std::string, CMatrix> blocks);

  static BlockOperator zero(const BlockLayout& layout);
  static BlockOperator identity(const BlockLayout& layout);
  static BlockOperator unit(const BlockLayout& layout, const MatrixUnit& u);
  // Keeps only the diagonal blocks of an n x n matrix.
  static BlockOperator from_full(const BlockLayout& layout, const CMatrix& m);

  const BlockLayout& layout() const noexcept { return layout_; }
  const CMatrix& block(const std::string& v) const;
  const std::map<std::string, CMatrix>& blocks() const noexcept { return blocks_; }
  CMatrix to_full() const;

  BlockOperator adjoint() const;
  BlockOperator& operator+=(const BlockOperator& other);
  friend BlockOperator operator+(BlockOperator a, const BlockOperator& b) { return a += b; }
  friend BlockOperator operator-(const BlockOperator& a, const BlockOperator& b);
  friend BlockOperator operator*(const BlockOperator& a, const BlockOperator& b);
  friend BlockOperator operator*(Complex s, BlockOperator a);

 private:
  BlockLayout layout_;
  std::map<std::string, CMatrix> blocks_;
};

// Largest entry modulus of a - b over all blocks.
double distance(const BlockOperator& a, const BlockOperator& b);

// A *-endomorphism of W given by its values on the matrix units; extended
// linearly to all of W.
class Endo {
 public:
  // images[layout.unit_index(v,p,q)] = alpha(E^{(v)}_{pq}). Throws
  // Error(Input) if the list is incomplete or an image has another layout.
  Endo(BlockLayout layout, std::vector<BlockOperator> images);

  static Endo zero(const BlockLayout& layout);
  static Endo identity(const BlockLayout& layout);

  const BlockLayout& layout() const noexcept { return layout_; }
  const BlockOperator& image(const MatrixUnit& u) const { return images_[layout_.unit_index(u.vertex, u.p, u.q)]; }
  const std::vector<BlockOperator>& images() const noexcept { return images_; }

  BlockOperator apply(const BlockOperator& w) const;

 private:
  BlockLayout layout_;
  std::vector<BlockOperator> images_;
};

struct EndoReport {
  bool pass = false;
  double multiplicativity = 0.0;  // alpha(E_pq) alpha(E_rs) = [same block][q = r] alpha(E_ps)
  double adjoint = 0.0;           // alpha(E_pq)* = alpha(E_qp)
  // Worst offending unit (and partner for products), for diagnostics.
  MatrixUnit worst_left;
  MatrixUnit worst_right;
  double max_violation() const { return multiplicativity > adjoint ? multiplicativity : adjoint; }
};

EndoReport endo_verify(const Endo& a, const Tolerance& tol = {});

// Ad_tau(w) = sum_e S_e w S_e*, computed block-wise. Throws Error(Input) if
// w's layout differs from rep's.
BlockOperator ad_apply(const ToeplitzRep& rep, const BlockOperator& w);

// Same sum on full n x n matrices; w need not lie in W.
CMatrix ad_apply_full(const ToeplitzRep& rep, const CMatrix& w);

Endo ad_endo(const ToeplitzRep& rep);

// Frobenius-orthonormal basis of I_tau = {T : Ad_tau(u) T = T u for all
// matrix units u}. The constraints decouple over the blocks T_{wv} = P_w T P_v,
// so the kernel is computed block pair by block pair; basis elements are
// ordered by (w, v) in layout order.
std::vector<CMatrix> intertwiner_basis(const ToeplitzRep& rep, const Tolerance& tol = {});

}  // namespace gcorr
