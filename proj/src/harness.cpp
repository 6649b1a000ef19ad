#include "gcorr/harness.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "gcorr/endomorphism.hpp"
#include "gcorr/errors.hpp"

namespace gcorr {

namespace {

struct Draw {
  GraphPtr graph;
  std::map<std::string, int> dims;
};

std::optional<Draw> draw_once(int max_vertices, int min_edges, int max_edges, int max_dim, Seeded rng) {
  const int nv = rng.uniform_int(1, max_vertices);
  const int ne = rng.uniform_int(min_edges, max_edges);
  std::vector<std::string> vertices;
  for (int i = 1; i <= nv; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<Edge> edges;
  for (int k = 1; k <= ne; ++k) {
    const auto s = static_cast<std::size_t>(rng.uniform_int(0, nv - 1));
    const auto r = static_cast<std::size_t>(rng.uniform_int(0, nv - 1));
    edges.push_back({"e" + std::to_string(k), vertices[s], vertices[r]});
  }
  auto g = make_graph(vertices, std::move(edges));

  std::vector<int> d(static_cast<std::size_t>(nv));
  for (auto& x : d) x = rng.uniform_int(1, max_dim);
  bool changed = true;
  for (int pass = 0; changed && pass <= nv + 1; ++pass) {
    changed = false;
    for (std::size_t v = 0; v < g->vertex_count(); ++v) {
      int need = 0;
      for (std::size_t k : g->in_edges(v)) need += d[g->src_index(k)];
      if (need > max_dim) return std::nullopt;
      if (need > d[v]) {
        d[v] = need;
        changed = true;
      }
    }
  }
  std::map<std::string, int> dims;
  for (std::size_t v = 0; v < d.size(); ++v) dims[vertices[v]] = d[v];
  if (!feasible_dims(*g, DimVector(dims))) return std::nullopt;
  return Draw{g, dims};
}

}  // namespace

Instance random_instance(int max_vertices, int max_edges, int max_dim, std::uint64_t seed, int min_edges) {
  if (max_vertices < 1 || max_dim < 1 || min_edges < 0 || max_edges < min_edges) {
    input_error("random_instance: invalid bounds");
  }
  const Seeded root(seed);
  for (int draw = 0; draw < kInstanceDrawCap; ++draw) {
    auto found = draw_once(max_vertices, min_edges, max_edges, max_dim, root.split(static_cast<std::uint64_t>(draw)));
    if (!found) continue;
    DimVector dims(found->dims);
    ToeplitzRep rep = random_rep(found->graph, dims, root.split(0xfeedULL + static_cast<std::uint64_t>(draw)).seed());
    return Instance{found->graph, std::move(dims), std::move(rep), seed, draw + 1};
  }
  fail(ErrorKind::BoundsInfeasible, "no feasible instance within " + std::to_string(kInstanceDrawCap) + " draws");
}

bool brute_force_ad_equal(const ToeplitzRep& t1, const ToeplitzRep& t2, const Tolerance& tol) {
  if (t1.dimension() != t2.dimension() || !t1.layout().same_blocks(t2.layout())) return false;
  for (const auto& unit : matrix_units(t1.layout())) {
    CMatrix w = CMatrix::Zero(t1.dimension(), t1.dimension());
    w(t1.layout().offset(unit.vertex) + unit.p, t1.layout().offset(unit.vertex) + unit.q) = 1.0;
    if (max_abs(ad_apply_full(t1, w) - ad_apply_full(t2, w)) > tol.eps()) return false;
  }
  return true;
}

Cue random_cue(GraphPtr g, std::uint64_t seed) {
  Seeded rng(seed);
  const auto autos = automorphisms(*g);
  const GraphIso& pick = autos[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(autos.size()) - 1))];

  Cue c;
  c.source = g;
  c.target = g;
  c.vertex_bijection = pick.vertex_map;
  const auto m = static_cast<Eigen::Index>(g->edge_count());
  c.u = CMatrix::Zero(m, m);
  // Parallel classes keyed by (src index, dst index), edges in order.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> classes;
  for (std::size_t k = 0; k < g->edge_count(); ++k) classes[{g->src_index(k), g->dst_index(k)}].push_back(k);
  for (const auto& [key, members] : classes) {
    const auto bs = g->vertex_index(pick.vertex_map.at(g->vertices()[key.first]));
    const auto br = g->vertex_index(pick.vertex_map.at(g->vertices()[key.second]));
    const auto& image = classes.at({bs, br});
    const CMatrix h = haar_unitary(static_cast<Eigen::Index>(members.size()), rng);
    for (std::size_t a = 0; a < image.size(); ++a) {
      for (std::size_t b = 0; b < members.size(); ++b) {
        c.u(static_cast<Eigen::Index>(image[a]), static_cast<Eigen::Index>(members[b])) =
            h(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
      }
    }
  }
  return c;
}

CMatrix random_block_unitary(const BlockLayout& layout, std::uint64_t seed) {
  Seeded rng(seed);
  std::map<Eigen::Index, std::vector<std::string>> by_dim;
  for (const auto& v : layout.vertex_order()) by_dim[layout.dim(v)].push_back(v);
  std::map<std::string, std::string> sigma;
  for (auto& [d, group] : by_dim) {
    std::vector<std::string> image = group;
    std::shuffle(image.begin(), image.end(), rng.engine());
    for (std::size_t k = 0; k < group.size(); ++k) sigma[group[k]] = image[k];
  }
  const Eigen::Index n = layout.total_dim();
  CMatrix v = CMatrix::Zero(n, n);
  for (const auto& i : layout.vertex_order()) {
    const std::string& j = sigma.at(i);
    v.block(layout.offset(j), layout.offset(i), layout.dim(i), layout.dim(i)) = haar_unitary(layout.dim(i), rng);
  }
  return v;
}

BlockAutomorphism automorphism_from_unitary(const BlockLayout& layout, const CMatrix& v, const Tolerance& tol) {
  if (v.rows() != layout.total_dim() || v.cols() != layout.total_dim()) input_error("unitary has the wrong size");
  std::vector<BlockOperator> images;
  for (const auto& unit : matrix_units(layout)) {
    const CMatrix w = BlockOperator::unit(layout, unit).to_full();
    images.push_back(BlockOperator::from_full(layout, v * w * v.adjoint()));
  }
  return BlockAutomorphism::from_endo(Endo(layout, std::move(images)), tol);
}

BlockAutomorphism random_automorphism(const BlockLayout& layout, std::uint64_t seed) {
  return automorphism_from_unitary(layout, random_block_unitary(layout, seed));
}

}  // namespace gcorr
