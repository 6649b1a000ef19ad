#pragma once

#include <map>
#include <string>

#include "gcorr/correspondence.hpp"
#include "gcorr/endomorphism.hpp"
#include "gcorr/representation.hpp"

namespace gcorr {

// A *-automorphism gamma of W = sum of B(H_v). gamma permutes the blocks,
// gamma(P_i) = P_{sigma(i)}, and on each block is conjugation by a unitary
// H_i -> H_{sigma(i)}.
class BlockAutomorphism {
 public:
  // Validates gamma (endo_verify, block permutation with matching
  // dimensions) and extracts the per-block unitaries. Throws
  // Error(NotAutomorphism) on failure.
  static BlockAutomorphism from_endo(Endo gamma, const Tolerance& tol = {});

  const Endo& endo() const noexcept { return endo_; }
  const BlockLayout& layout() const noexcept { return endo_.layout(); }
  const std::map<std::string, std::string>& block_permutation() const noexcept { return sigma_; }
  // Unitary d_{sigma(i)} x d_i for each source block i.
  const std::map<std::string, CMatrix>& block_unitaries() const noexcept { return unitaries_; }

  // gamma applied to the block-diagonal part of an n x n matrix.
  CMatrix apply_full(const CMatrix& w) const;

 private:
  BlockAutomorphism(Endo gamma, std::map<std::string, std::string> sigma, std::map<std::string, CMatrix> unitaries)
      : endo_(std::move(gamma)), sigma_(std::move(sigma)), unitaries_(std::move(unitaries)) {}

  Endo endo_;
  std::map<std::string, std::string> sigma_;
  std::map<std::string, CMatrix> unitaries_;
};

// Unitary V on H with gamma(w) = V w V*. Unique up to one phase per block.
// Throws Error(NotAutomorphism) if the verification residual exceeds tol.
CMatrix implement_automorphism(const BlockAutomorphism& g, const Tolerance& tol = {});

// For t1 of E and t2 of F on the same H with Ad_t1 = Ad_t2: the CUE
// X(E) -> X(F) with pullback(t2, cue) = t1.
// Errors: Input (different H), VertexMismatch (projection families differ),
// AdMismatch (edge operators not reproduced), NotUnitary.
Cue recover_cue(const ToeplitzRep& t1, const ToeplitzRep& t2, const Tolerance& tol = {});

// kappa(t) = V tau(t) V*, re-extracted into blocks. V must map every block
// projection onto a block projection of the same layout (Error(Input)
// otherwise).
ToeplitzRep conjugate_rep(const ToeplitzRep& rep, const CMatrix& v, const Tolerance& tol = {});

struct ConjugacyWitness {
  CMatrix v;
  Cue cue;  // from t2's graph to t1's graph
  double residual = 0.0;
};

// Given gamma with gamma o Ad_t1 = Ad_t2 o gamma, returns V implementing gamma
// and a CUE with t2 = V (t1 o Gamma_cue) V* on generators.
// Errors: NotConjugate if the intertwining relation fails, plus those of
// implement_automorphism and recover_cue.
ConjugacyWitness conjugacy_witness(const ToeplitzRep& t1, const ToeplitzRep& t2, const BlockAutomorphism& g,
                                   const Tolerance& tol = {});

}  // namespace gcorr
