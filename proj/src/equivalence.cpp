#include "gcorr/equivalence.hpp"

#include <algorithm>
#include <set>

#include "gcorr/errors.hpp"
#include "gcorr/factorization.hpp"

namespace gcorr {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

std::string fmt(double x) { return std::to_string(x); }

}  // namespace

BlockAutomorphism BlockAutomorphism::from_endo(Endo gamma, const Tolerance& tol) {
  const EndoReport check = endo_verify(gamma, tol);
  if (!check.pass) {
    fail(ErrorKind::NotAutomorphism, "not a *-endomorphism (violation " + fmt(check.max_violation()) + " at " +
                                         describe(check.worst_left) + ", " + describe(check.worst_right) + ")");
  }
  const BlockLayout& layout = gamma.layout();
  std::map<std::string, std::string> sigma;
  std::set<std::string> hit;
  for (const auto& i : layout.vertex_order()) {
    BlockOperator image_of_unit = BlockOperator::zero(layout);
    for (Eigen::Index p = 0; p < layout.dim(i); ++p) image_of_unit += gamma.image({i, p, p});
    std::string target;
    for (const auto& j : layout.vertex_order()) {
      if (layout.dim(j) != layout.dim(i)) continue;
      if (distance(image_of_unit, BlockOperator::from_full(layout, layout.projection(j))) <= tol.eps()) {
        target = j;
        break;
      }
    }
    if (target.empty()) fail(ErrorKind::NotAutomorphism, "image of P_" + i + " is not a block projection of equal size");
    if (!hit.insert(target).second) fail(ErrorKind::NotAutomorphism, "blocks are not permuted bijectively");
    sigma.emplace(i, target);
  }

  std::map<std::string, CMatrix> unitaries;
  for (const auto& i : layout.vertex_order()) {
    const std::string& j = sigma.at(i);
    const Eigen::Index d = layout.dim(i);
    const CMatrix xi = orthonormal_range_basis(gamma.image({i, 0, 0}).block(j), tol);
    if (xi.cols() != 1) fail(ErrorKind::NotAutomorphism, "image of E_00 in block " + i + " does not have rank one");
    CMatrix u(d, d);
    for (Eigen::Index p = 0; p < d; ++p) u.col(p) = gamma.image({i, p, 0}).block(j) * xi.col(0);
    unitaries.emplace(i, std::move(u));
  }
  return BlockAutomorphism(std::move(gamma), std::move(sigma), std::move(unitaries));
}

CMatrix BlockAutomorphism::apply_full(const CMatrix& w) const {
  return endo_.apply(BlockOperator::from_full(layout(), w)).to_full();
}

CMatrix implement_automorphism(const BlockAutomorphism& g, const Tolerance& tol) {
  const BlockLayout& layout = g.layout();
  const Eigen::Index n = layout.total_dim();
  CMatrix v = CMatrix::Zero(n, n);
  for (const auto& [i, u] : g.block_unitaries()) {
    const std::string& j = g.block_permutation().at(i);
    v.block(layout.offset(j), layout.offset(i), u.rows(), u.cols()) = u;
  }
  double residual = unitarity_defect(v);
  for (const auto& unit : matrix_units(layout)) {
    const CMatrix w = BlockOperator::unit(layout, unit).to_full();
    residual = std::max(residual, max_abs(g.endo().image(unit).to_full() - v * w * v.adjoint()));
  }
  if (residual > tol.eps()) fail(ErrorKind::NotAutomorphism, "spatial implementation residual " + fmt(residual));
  return v;
}

Cue recover_cue(const ToeplitzRep& t1, const ToeplitzRep& t2, const Tolerance& tol) {
  if (t1.dimension() != t2.dimension()) input_error("recover_cue: representations act on different spaces");
  const Graph& e = t1.graph();
  const Graph& f = t2.graph();

  // (1) match projections: P_v of t1 equals P_{b(v)} of t2.
  if (e.vertex_count() != f.vertex_count()) {
    fail(ErrorKind::VertexMismatch, "different numbers of vertex projections");
  }
  std::map<std::string, std::string> b;
  std::set<std::string> used;
  for (const auto& v : e.vertices()) {
    const CMatrix pv = t1.vertex_projection(v);
    for (const auto& w : f.vertices()) {
      if (used.count(w) == 0 && t1.layout().dim(v) == t2.layout().dim(w) &&
          max_abs(pv - t2.vertex_projection(w)) <= tol.eps()) {
        b.emplace(v, w);
        used.insert(w);
        break;
      }
    }
    if (b.count(v) == 0) fail(ErrorKind::VertexMismatch, "no projection of the second representation equals P_" + v);
  }
  if (e.edge_count() != f.edge_count()) {
    fail(ErrorKind::NotUnitary, "edge counts differ (" + std::to_string(e.edge_count()) + " vs " +
                                    std::to_string(f.edge_count()) + ")");
  }

  // (2) scalar coefficients by normalized traces.
  std::vector<CMatrix> s_ops, t_ops;
  for (const auto& edge : e.edges()) s_ops.push_back(t1.edge_operator(edge.id));
  for (const auto& edge : f.edges()) t_ops.push_back(t2.edge_operator(edge.id));
  CMatrix u = CMatrix::Zero(idx(f.edge_count()), idx(e.edge_count()));
  for (std::size_t ei = 0; ei < e.edge_count(); ++ei) {
    const Edge& ee = e.edges()[ei];
    const double ds = static_cast<double>(t1.layout().dim(ee.src));
    for (std::size_t fi = 0; fi < f.edge_count(); ++fi) {
      const Edge& fe = f.edges()[fi];
      const Complex c = (t_ops[fi].adjoint() * s_ops[ei]).trace() / ds;
      const bool matched = fe.src == b.at(ee.src) && fe.dst == b.at(ee.dst);
      if (matched) {
        u(idx(fi), idx(ei)) = c;
      } else if (std::abs(c) > tol.eps()) {
        fail(ErrorKind::AdMismatch, "edges " + ee.id + " and " + fe.id + " lie in different classes but overlap");
      }
    }
  }

  // (3) the coefficients must reproduce every S_e, and form a unitary.
  double residual = 0.0;
  for (std::size_t ei = 0; ei < e.edge_count(); ++ei) {
    CMatrix acc = s_ops[ei];
    for (std::size_t fi = 0; fi < f.edge_count(); ++fi) acc -= u(idx(fi), idx(ei)) * t_ops[fi];
    residual = std::max(residual, max_abs(acc));
  }
  if (residual > tol.eps()) fail(ErrorKind::AdMismatch, "edge operators not reproduced, residual " + fmt(residual));
  const double defect = unitarity_defect(u);
  if (defect > tol.eps()) fail(ErrorKind::NotUnitary, "recovered coefficient matrix is not unitary (" + fmt(defect) + ")");

  return Cue{t1.graph_ptr(), t2.graph_ptr(), std::move(b), std::move(u)};
}

ToeplitzRep conjugate_rep(const ToeplitzRep& rep, const CMatrix& v, const Tolerance& tol) {
  const BlockLayout& layout = rep.layout();
  const Eigen::Index n = layout.total_dim();
  if (v.rows() != n || v.cols() != n) input_error("conjugate_rep: unitary has the wrong size");

  // New offset of each vertex: the block onto which V maps its projection.
  std::vector<std::pair<Eigen::Index, std::string>> placed;
  std::set<Eigen::Index> taken;
  for (const auto& vert : layout.vertex_order()) {
    const CMatrix q = v * layout.projection(vert) * v.adjoint();
    bool found = false;
    for (const auto& w : layout.vertex_order()) {
      if (layout.dim(w) == layout.dim(vert) && max_abs(q - layout.projection(w)) <= tol.eps() &&
          taken.insert(layout.offset(w)).second) {
        placed.emplace_back(layout.offset(w), vert);
        found = true;
        break;
      }
    }
    if (!found) input_error("conjugate_rep: V does not map P_" + vert + " onto a block projection");
  }
  std::sort(placed.begin(), placed.end());
  std::vector<std::string> order;
  for (const auto& [off, vert] : placed) order.push_back(vert);
  BlockLayout moved(std::move(order), layout.dims());

  std::map<std::string, CMatrix> blocks;
  for (const auto& e : rep.graph().edges()) {
    const CMatrix k = v * rep.edge_operator(e.id) * v.adjoint();
    blocks.emplace(e.id, k.block(moved.offset(e.dst), moved.offset(e.src), moved.dim(e.dst), moved.dim(e.src)));
  }
  return ToeplitzRep(rep.graph_ptr(), std::move(moved), std::move(blocks));
}

ConjugacyWitness conjugacy_witness(const ToeplitzRep& t1, const ToeplitzRep& t2, const BlockAutomorphism& g,
                                   const Tolerance& tol) {
  if (t1.dimension() != t2.dimension()) input_error("conjugacy_witness: representations act on different spaces");
  if (!t1.layout().same_blocks(g.layout()) || !t2.layout().same_blocks(g.layout())) {
    input_error("conjugacy_witness: automorphism is defined on a different block algebra");
  }

  double relation = 0.0;
  for (const auto& unit : matrix_units(g.layout())) {
    const CMatrix w = BlockOperator::unit(g.layout(), unit).to_full();
    const CMatrix lhs = g.apply_full(ad_apply_full(t1, w));
    const CMatrix rhs = ad_apply_full(t2, g.apply_full(w));
    relation = std::max(relation, max_abs(lhs - rhs));
  }
  if (relation > tol.eps()) {
    fail(ErrorKind::NotConjugate, "gamma o Ad_t1 differs from Ad_t2 o gamma by " + fmt(relation));
  }

  CMatrix v = implement_automorphism(g, tol);
  const ToeplitzRep kappa = conjugate_rep(t1, v, tol);
  Cue cue = recover_cue(t2, kappa, tol);

  const ToeplitzRep pulled = pullback(t1, cue, tol);
  double residual = 0.0;
  for (const auto& e : t2.graph().edges()) {
    residual = std::max(residual, max_abs(t2.edge_operator(e.id) - v * pulled.edge_operator(e.id) * v.adjoint()));
  }
  for (const auto& vert : t2.graph().vertices()) {
    residual = std::max(residual, max_abs(t2.vertex_projection(vert) - v * pulled.vertex_projection(vert) * v.adjoint()));
  }
  if (residual > tol.eps()) fail(ErrorKind::NotConjugate, "witness residual " + fmt(residual));
  return ConjugacyWitness{std::move(v), std::move(cue), residual};
}

}  // namespace gcorr
