#include "gcorr/correspondence.hpp"

#include <algorithm>
#include <set>

#include "gcorr/errors.hpp"

namespace gcorr {

namespace {

bool same_graph(const GraphPtr& a, const GraphPtr& b) { return a == b || (a && b && *a == *b); }

void require_same(const GraphPtr& a, const GraphPtr& b, const char* what) {
  if (!same_graph(a, b)) input_error(std::string(what) + ": operands belong to different graphs");
}

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

// b as a vector of target vertex indices; validates bijectivity.
std::vector<std::size_t> bijection_indices(const Cue& c) {
  const Graph& e = *c.source;
  const Graph& f = *c.target;
  if (e.vertex_count() != f.vertex_count()) input_error("vertex bijection: vertex counts differ");
  if (c.vertex_bijection.size() != e.vertex_count()) input_error("vertex bijection must be defined on every source vertex");
  std::vector<std::size_t> out(e.vertex_count());
  std::set<std::size_t> seen;
  for (const auto& [v, w] : c.vertex_bijection) {
    if (!e.has_vertex(v)) input_error("vertex bijection: unknown source vertex '" + v + "'");
    if (!f.has_vertex(w)) input_error("vertex bijection: unknown target vertex '" + w + "'");
    const std::size_t wi = f.vertex_index(w);
    if (!seen.insert(wi).second) input_error("vertex bijection is not injective at '" + w + "'");
    out[e.vertex_index(v)] = wi;
  }
  return out;
}

void check_shape(const Cue& c) {
  if (!c.source || !c.target) input_error("CUE without graphs");
  if (c.u.rows() != idx(c.target->edge_count()) || c.u.cols() != idx(c.source->edge_count())) {
    input_error("CUE matrix must be " + std::to_string(c.target->edge_count()) + "x" +
                std::to_string(c.source->edge_count()));
  }
}

double diff(const CVector& a, const CVector& b) { return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

VertexFunction VertexFunction::zero(GraphPtr g) {
  const auto n = idx(g->vertex_count());
  return {std::move(g), CVector::Zero(n)};
}

VertexFunction VertexFunction::delta(GraphPtr g, const std::string& v) {
  auto out = zero(g);
  out.values(idx(g->vertex_index(v))) = 1.0;
  return out;
}

CorrVector CorrVector::zero(GraphPtr g) {
  const auto n = idx(g->edge_count());
  return {std::move(g), CVector::Zero(n)};
}

CorrVector CorrVector::delta(GraphPtr g, const std::string& e) {
  auto out = zero(g);
  out.values(idx(g->edge_index(e))) = 1.0;
  return out;
}

CorrVector right_action(const CorrVector& x, const VertexFunction& a) {
  require_same(x.graph, a.graph, "right_action");
  CorrVector out = x;
  for (std::size_t k = 0; k < x.graph->edge_count(); ++k) out.values(idx(k)) *= a.values(idx(x.graph->src_index(k)));
  return out;
}

CorrVector left_action(const VertexFunction& a, const CorrVector& x) {
  require_same(x.graph, a.graph, "left_action");
  CorrVector out = x;
  for (std::size_t k = 0; k < x.graph->edge_count(); ++k) out.values(idx(k)) *= a.values(idx(x.graph->dst_index(k)));
  return out;
}

VertexFunction inner_product(const CorrVector& x, const CorrVector& y) {
  require_same(x.graph, y.graph, "inner_product");
  VertexFunction out = VertexFunction::zero(x.graph);
  for (std::size_t k = 0; k < x.graph->edge_count(); ++k) {
    out.values(idx(x.graph->src_index(k))) += std::conj(x.values(idx(k))) * y.values(idx(k));
  }
  return out;
}

double CueReport::max_violation() const { return std::max({module_right, module_left, inner, unitarity, support}); }

VertexFunction apply_alpha(const Cue& c, const VertexFunction& a) {
  require_same(c.source, a.graph, "apply_alpha");
  const auto b = bijection_indices(c);
  VertexFunction out = VertexFunction::zero(c.target);
  for (std::size_t v = 0; v < b.size(); ++v) out.values(idx(b[v])) = a.values(idx(v));
  return out;
}

CorrVector apply_u(const Cue& c, const CorrVector& x) {
  require_same(c.source, x.graph, "apply_u");
  check_shape(c);
  return {c.target, c.u * x.values};
}

CueReport cue_verify(const Cue& c, const Tolerance& tol) {
  check_shape(c);
  const auto b = bijection_indices(c);
  const Graph& e = *c.source;
  const Graph& f = *c.target;
  CueReport rep;

  // Eigen's decompositions do not accept empty matrices.
  const CMatrix uinv = c.u.size() == 0 ? CMatrix(CMatrix::Zero(c.u.cols(), c.u.rows()))
                                       : CMatrix(c.u.completeOrthogonalDecomposition().pseudoInverse());

  for (const auto& edge : e.edges()) {
    const auto de = CorrVector::delta(c.source, edge.id);
    const auto ude = apply_u(c, de);
    for (const auto& v : e.vertices()) {
      const auto dv = VertexFunction::delta(c.source, v);
      const auto adv = apply_alpha(c, dv);
      rep.module_right = std::max(rep.module_right, diff(apply_u(c, right_action(de, dv)).values, right_action(ude, adv).values));
      rep.module_left = std::max(rep.module_left, diff(apply_u(c, left_action(dv, de)).values, left_action(adv, ude).values));
    }
    for (const auto& fedge : f.edges()) {
      const auto df = CorrVector::delta(c.target, fedge.id);
      const CorrVector uinv_df{c.source, uinv * df.values};
      const auto lhs = inner_product(ude, df);
      const auto rhs = apply_alpha(c, inner_product(de, uinv_df));
      rep.inner = std::max(rep.inner, diff(lhs.values, rhs.values));
    }
  }

  if (c.u.size() > 0) {
    rep.unitarity = std::max(max_abs(c.u.adjoint() * c.u - CMatrix::Identity(c.u.cols(), c.u.cols())),
                             max_abs(c.u * c.u.adjoint() - CMatrix::Identity(c.u.rows(), c.u.rows())));
  } else if (c.u.rows() != c.u.cols()) {
    rep.unitarity = 1.0;
  }
  for (std::size_t fi = 0; fi < f.edge_count(); ++fi) {
    for (std::size_t ei = 0; ei < e.edge_count(); ++ei) {
      const bool matched = f.src_index(fi) == b[e.src_index(ei)] && f.dst_index(fi) == b[e.dst_index(ei)];
      if (!matched) rep.support = std::max(rep.support, std::abs(c.u(idx(fi), idx(ei))));
    }
  }
  rep.pass = rep.max_violation() <= tol.eps();
  return rep;
}

Cue identity_cue(GraphPtr g) {
  Cue c;
  c.source = g;
  c.target = g;
  for (const auto& v : g->vertices()) c.vertex_bijection[v] = v;
  c.u = CMatrix::Identity(idx(g->edge_count()), idx(g->edge_count()));
  return c;
}

Cue cue_from_graph_iso(const GraphIso& iso, GraphPtr f, GraphPtr e) {
  if (!is_isomorphism(*f, *e, iso)) input_error("cue_from_graph_iso: not a graph isomorphism from F to E");
  Cue c;
  c.source = e;
  c.target = f;
  for (const auto& [w, v] : iso.vertex_map) c.vertex_bijection[v] = w;
  c.u = CMatrix::Zero(idx(f->edge_count()), idx(e->edge_count()));
  for (const auto& [fe, ee] : iso.edge_map) c.u(idx(f->edge_index(fe)), idx(e->edge_index(ee))) = 1.0;
  return c;
}

Cue cue_compose(const Cue& c1, const Cue& c2) {
  check_shape(c1);
  check_shape(c2);
  require_same(c1.target, c2.source, "cue_compose");
  bijection_indices(c1);
  bijection_indices(c2);
  Cue out;
  out.source = c1.source;
  out.target = c2.target;
  for (const auto& [v, w] : c1.vertex_bijection) out.vertex_bijection[v] = c2.vertex_bijection.at(w);
  out.u = c2.u * c1.u;
  return out;
}

Cue cue_inverse(const Cue& c) {
  check_shape(c);
  bijection_indices(c);
  Cue out;
  out.source = c.target;
  out.target = c.source;
  for (const auto& [v, w] : c.vertex_bijection) out.vertex_bijection[w] = v;
  out.u = c.u.adjoint();
  return out;
}

}  // namespace gcorr
