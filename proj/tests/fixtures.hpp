#pragma once

#include <map>
#include <string>

#include "gcorr/endomorphism.hpp"
#include "gcorr/graph.hpp"
#include "gcorr/layout.hpp"
#include "gcorr/random.hpp"
#include "gcorr/representation.hpp"

namespace gcorr::testing {

// G1: one vertex, no edges.
inline GraphPtr g1() { return make_graph({"v"}, {}); }

// G2: two parallel edges v1 -> v2.
inline GraphPtr g2() { return make_graph({"v1", "v2"}, {{"e1", "v1", "v2"}, {"e2", "v1", "v2"}}); }

// G3: G2 plus a loop at v1.
inline GraphPtr g3() {
  return make_graph({"v1", "v2"}, {{"a", "v1", "v1"}, {"e1", "v1", "v2"}, {"e2", "v1", "v2"}});
}

// G4: a single edge v1 -> v2.
inline GraphPtr g4() { return make_graph({"v1", "v2"}, {{"e", "v1", "v2"}}); }

inline DimVector dims12() { return DimVector({{"v1", 1}, {"v2", 2}}); }

inline CMatrix col(Eigen::Index n, Eigen::Index k) {
  CMatrix c = CMatrix::Zero(n, 1);
  c(k, 0) = 1.0;
  return c;
}

// Reference representations on C^3 = C (+) C^2.
inline ToeplitzRep g1_rep() { return ToeplitzRep(g1(), BlockLayout({"v"}, DimVector({{"v", 1}})), {}); }

inline ToeplitzRep g2_rep() {
  auto g = g2();
  return ToeplitzRep(g, BlockLayout::of(*g, dims12()), {{"e1", col(2, 0)}, {"e2", col(2, 1)}});
}

inline ToeplitzRep g3_rep() {
  auto g = g3();
  return ToeplitzRep(g, BlockLayout::of(*g, dims12()),
                     {{"a", CMatrix::Ones(1, 1)}, {"e1", col(2, 0)}, {"e2", col(2, 1)}});
}

inline ToeplitzRep g4_rep() {
  auto g = g4();
  return ToeplitzRep(g, BlockLayout::of(*g, dims12()), {{"e", col(2, 0)}});
}

inline CMatrix random_matrix(Eigen::Index rows, Eigen::Index cols, Seeded& rng) {
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Complex(rng.normal(), rng.normal());
  return m;
}

inline BlockOperator random_block_operator(const BlockLayout& layout, Seeded& rng) {
  std::map<std::string, CMatrix> blocks;
  for (const auto& v : layout.vertex_order()) blocks[v] = random_matrix(layout.dim(v), layout.dim(v), rng);
  return BlockOperator(layout, std::move(blocks));
}

}  // namespace gcorr::testing
