#pragma once

#include <cstdint>

#include "gcorr/correspondence.hpp"
#include "gcorr/equivalence.hpp"
#include "gcorr/graph.hpp"
#include "gcorr/layout.hpp"
#include "gcorr/random.hpp"
#include "gcorr/representation.hpp"

namespace gcorr {

inline constexpr int kInstanceDrawCap = 1000;

struct Instance {
  GraphPtr graph;
  DimVector dims;
  ToeplitzRep rep;
  std::uint64_t seed = 0;
  int draws = 0;  // number of graph/dimension draws until a feasible one
};

// Random graph (1..max_vertices vertices "v1".., min_edges..max_edges edges
// "e1"..) with dims in [1, max_dim] satisfying feasible_dims, plus random_rep
// on it.
// Each draw starts from random dims and raises every d_v to the sum of its
// incoming source dims until stable; draws that overflow max_dim are
// rejected. Throws Error(BoundsInfeasible) after kInstanceDrawCap draws.
Instance random_instance(int max_vertices, int max_edges, int max_dim, std::uint64_t seed, int min_edges = 0);

// Compares Ad_t1 and Ad_t2 on every matrix unit of W using full matrices
// (independent of the block-wise ad_apply / ad_endo path). False when the
// two representations do not share the same block algebra.
bool brute_force_ad_equal(const ToeplitzRep& t1, const ToeplitzRep& t2, const Tolerance& tol = {});

// b uniformly among the graph automorphisms of g (identity always qualifies),
// U block-diagonal over parallel-edge classes with Haar blocks.
Cue random_cue(GraphPtr g, std::uint64_t seed);

// Random permutation among equal-dimension blocks, Haar unitary per block.
CMatrix random_block_unitary(const BlockLayout& layout, std::uint64_t seed);

// gamma = Ad_V on matrix units. Throws Error(NotAutomorphism) if V does not
// permute the blocks.
BlockAutomorphism automorphism_from_unitary(const BlockLayout& layout, const CMatrix& v, const Tolerance& tol = {});

BlockAutomorphism random_automorphism(const BlockLayout& layout, std::uint64_t seed);

}  // namespace gcorr
