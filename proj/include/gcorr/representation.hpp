#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "gcorr/correspondence.hpp"
#include "gcorr/graph.hpp"
#include "gcorr/layout.hpp"
#include "gcorr/numerics.hpp"

namespace gcorr {

// Toeplitz representation of X(E) on H = sum of blocks, stored by generator:
// pi(delta_v) = P_v is the identity on block v, and sigma(delta_e) = S_e has
// a single nonzero block of shape d_{r(e)} x d_{s(e)} at (r(e), s(e)).
class ToeplitzRep {
 public:
  // Throws Error(Input) if the layout does not match the graph, an edge block
  // is missing, extra, non-finite or of the wrong shape.
  ToeplitzRep(GraphPtr graph, BlockLayout layout, std::map<std::string, CMatrix> edge_blocks);

  const Graph& graph() const noexcept { return *graph_; }
  const GraphPtr& graph_ptr() const noexcept { return graph_; }
  const BlockLayout& layout() const noexcept { return layout_; }
  Eigen::Index dimension() const noexcept { return layout_.total_dim(); }

  const CMatrix& edge_block(const std::string& e) const;
  const std::map<std::string, CMatrix>& edge_blocks() const noexcept { return blocks_; }

  // S_e and P_v as full n x n matrices.
  CMatrix edge_operator(const std::string& e) const;
  CMatrix vertex_projection(const std::string& v) const { return layout_.projection(v); }

 private:
  GraphPtr graph_;
  BlockLayout layout_;
  std::map<std::string, CMatrix> blocks_;
};

struct ToeplitzReport {
  double source_support = 0.0;  // S_e P_v = [v = s(e)] S_e
  double range_support = 0.0;   // P_v S_e = [v = r(e)] S_e
  double inner_products = 0.0;  // S_e* S_f = [e = f] P_{s(e)}
  double projections = 0.0;     // P_v mutually orthogonal projections summing to I
  bool pass = false;
  double max_violation() const;
};

// Checks the generator identities on full matrices.
ToeplitzReport verify_toeplitz(const ToeplitzRep& rep, const Tolerance& tol = {});

// Random representation: per vertex v a Haar unitary on block v whose
// consecutive column groups (sizes d_{s(e)}, e in r^{-1}(v)) are the edge
// ranges, each right-multiplied by an independent Haar unitary. Pure in
// (g, d, seed). Throws Error(Input) if feasible_dims(g, d) is false.
ToeplitzRep random_rep(GraphPtr g, const DimVector& d, std::uint64_t seed);

// rep o Gamma_{U,alpha} on generators: a representation of the source graph of
// c on the same H with S'_e = sum_f U[f][e] S_f and P'_v = P_{b(v)}.
// Throws Error(Input) if c.target is not rep's graph or U violates the
// support condition by more than tol.
ToeplitzRep pullback(const ToeplitzRep& rep, const Cue& c, const Tolerance& tol = {});

struct CoisometricReport {
  std::map<std::string, bool> at_vertex;
  std::map<std::string, double> violation;
  bool all = false;
};

// Per vertex: || sum over e in r^{-1}(v) of S_e S_e* - P_v || <= eps.
CoisometricReport coisometric_check(const ToeplitzRep& rep, const Tolerance& tol = {});

// Linear extensions sigma(x) = sum_e x(e) S_e and pi(a) = sum_v a(v) P_v.
CMatrix sigma(const ToeplitzRep& rep, const CorrVector& x);
CMatrix pi(const ToeplitzRep& rep, const VertexFunction& a);

}  // namespace gcorr
