#include "gcorr/representation.hpp"

#include <algorithm>

#include "gcorr/errors.hpp"
#include "gcorr/random.hpp"

namespace gcorr {

ToeplitzRep::ToeplitzRep(GraphPtr graph, BlockLayout layout, std::map<std::string, CMatrix> edge_blocks)
    : graph_(std::move(graph)), layout_(std::move(layout)), blocks_(std::move(edge_blocks)) {
  if (!graph_) input_error("representation without a graph");
  if (!layout_.matches(*graph_)) input_error("block layout vertices do not match the graph's vertices");
  for (const auto& e : graph_->edges()) {
    const auto it = blocks_.find(e.id);
    if (it == blocks_.end()) input_error("representation has no block for edge '" + e.id + "'");
    const CMatrix& b = it->second;
    if (b.rows() != layout_.dim(e.dst) || b.cols() != layout_.dim(e.src)) {
      input_error("block of edge '" + e.id + "' must be " + std::to_string(layout_.dim(e.dst)) + "x" +
                  std::to_string(layout_.dim(e.src)) + ", got " + std::to_string(b.rows()) + "x" +
                  std::to_string(b.cols()));
    }
    if (!all_finite(b)) input_error("block of edge '" + e.id + "' has non-finite entries");
  }
  if (blocks_.size() != graph_->edge_count()) {
    for (const auto& [id, b] : blocks_) {
      if (!graph_->has_edge(id)) input_error("representation has a block for unknown edge '" + id + "'");
    }
  }
}

const CMatrix& ToeplitzRep::edge_block(const std::string& e) const {
  const auto it = blocks_.find(e);
  if (it == blocks_.end()) input_error("unknown edge '" + e + "'");
  return it->second;
}

CMatrix ToeplitzRep::edge_operator(const std::string& e) const {
  const Edge& edge = graph_->edge(e);
  const Eigen::Index n = dimension();
  CMatrix s = CMatrix::Zero(n, n);
  const CMatrix& b = edge_block(e);
  s.block(layout_.offset(edge.dst), layout_.offset(edge.src), b.rows(), b.cols()) = b;
  return s;
}

double ToeplitzReport::max_violation() const {
  return std::max({source_support, range_support, inner_products, projections});
}

ToeplitzReport verify_toeplitz(const ToeplitzRep& rep, const Tolerance& tol) {
  const Graph& g = rep.graph();
  const Eigen::Index n = rep.dimension();
  ToeplitzReport out;

  std::map<std::string, CMatrix> proj;
  CMatrix sum = CMatrix::Zero(n, n);
  for (const auto& v : g.vertices()) {
    proj.emplace(v, rep.vertex_projection(v));
    sum += proj.at(v);
  }
  out.projections = max_abs(sum - CMatrix::Identity(n, n));
  for (const auto& v : g.vertices()) {
    const CMatrix& p = proj.at(v);
    out.projections = std::max({out.projections, max_abs(p * p - p), max_abs(p.adjoint() - p)});
    for (const auto& w : g.vertices()) {
      if (w != v) out.projections = std::max(out.projections, max_abs(p * proj.at(w)));
    }
  }

  std::map<std::string, CMatrix> ops;
  for (const auto& e : g.edges()) ops.emplace(e.id, rep.edge_operator(e.id));
  const CMatrix zero = CMatrix::Zero(n, n);
  for (const auto& e : g.edges()) {
    const CMatrix& s = ops.at(e.id);
    for (const auto& v : g.vertices()) {
      const CMatrix& p = proj.at(v);
      out.source_support = std::max(out.source_support, max_abs(s * p - (v == e.src ? s : zero)));
      out.range_support = std::max(out.range_support, max_abs(p * s - (v == e.dst ? s : zero)));
    }
    for (const auto& f : g.edges()) {
      const CMatrix expected = e.id == f.id ? proj.at(e.src) : zero;
      out.inner_products = std::max(out.inner_products, max_abs(s.adjoint() * ops.at(f.id) - expected));
    }
  }
  out.pass = out.max_violation() <= tol.eps();
  return out;
}

ToeplitzRep random_rep(GraphPtr g, const DimVector& d, std::uint64_t seed) {
  if (!feasible_dims(*g, d)) input_error("infeasible dimensions for a Toeplitz representation of this graph");
  Seeded rng(seed);
  std::map<std::string, CMatrix> blocks;
  for (std::size_t v = 0; v < g->vertex_count(); ++v) {
    const CMatrix frame = haar_unitary(d.at(g->vertices()[v]), rng);
    Eigen::Index col = 0;
    for (std::size_t k : g->in_edges(v)) {
      const Edge& e = g->edges()[k];
      const Eigen::Index ds = d.at(e.src);
      blocks.emplace(e.id, frame.middleCols(col, ds) * haar_unitary(ds, rng));
      col += ds;
    }
  }
  return ToeplitzRep(g, BlockLayout::of(*g, d), std::move(blocks));
}

ToeplitzRep pullback(const ToeplitzRep& rep, const Cue& c, const Tolerance& tol) {
  if (!c.target || !(c.target == rep.graph_ptr() || *c.target == rep.graph())) {
    input_error("pullback: CUE target graph differs from the representation's graph");
  }
  const Graph& e = *c.source;
  const Graph& f = rep.graph();
  if (c.u.rows() != static_cast<Eigen::Index>(f.edge_count()) || c.u.cols() != static_cast<Eigen::Index>(e.edge_count())) {
    input_error("pullback: CUE matrix has the wrong shape");
  }
  if (c.vertex_bijection.size() != e.vertex_count()) input_error("pullback: vertex bijection incomplete");

  std::map<std::string, std::string> inverse;
  for (const auto& [v, w] : c.vertex_bijection) {
    if (!e.has_vertex(v) || !f.has_vertex(w) || !inverse.emplace(w, v).second) {
      input_error("pullback: vertex map is not a bijection");
    }
  }
  std::vector<std::string> order;
  std::map<std::string, int> dims;
  for (const auto& w : rep.layout().vertex_order()) {
    const std::string& v = inverse.at(w);
    order.push_back(v);
    dims[v] = static_cast<int>(rep.layout().dim(w));
  }
  BlockLayout layout(std::move(order), DimVector(std::move(dims)));

  std::map<std::string, CMatrix> blocks;
  for (std::size_t ei = 0; ei < e.edge_count(); ++ei) {
    const Edge& edge = e.edges()[ei];
    const std::string& bs = c.vertex_bijection.at(edge.src);
    const std::string& br = c.vertex_bijection.at(edge.dst);
    CMatrix acc = CMatrix::Zero(layout.dim(edge.dst), layout.dim(edge.src));
    for (std::size_t fi = 0; fi < f.edge_count(); ++fi) {
      const Edge& fe = f.edges()[fi];
      const Complex coef = c.u(static_cast<Eigen::Index>(fi), static_cast<Eigen::Index>(ei));
      if (fe.src == bs && fe.dst == br) {
        acc += coef * rep.edge_block(fe.id);
      } else if (std::abs(coef) > tol.eps()) {
        input_error("pullback: U[" + fe.id + "][" + edge.id + "] is nonzero across parallel-edge classes");
      }
    }
    blocks.emplace(edge.id, std::move(acc));
  }
  return ToeplitzRep(c.source, std::move(layout), std::move(blocks));
}

CoisometricReport coisometric_check(const ToeplitzRep& rep, const Tolerance& tol) {
  const Graph& g = rep.graph();
  CoisometricReport out;
  out.all = true;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const std::string& name = g.vertices()[v];
    const Eigen::Index d = rep.layout().dim(name);
    CMatrix acc = -CMatrix::Identity(d, d);
    for (std::size_t k : g.in_edges(v)) {
      const CMatrix& b = rep.edge_block(g.edges()[k].id);
      acc += b * b.adjoint();
    }
    const double viol = max_abs(acc);
    out.violation[name] = viol;
    out.at_vertex[name] = viol <= tol.eps();
    out.all = out.all && out.at_vertex[name];
  }
  return out;
}

CMatrix sigma(const ToeplitzRep& rep, const CorrVector& x) {
  if (!(x.graph == rep.graph_ptr() || *x.graph == rep.graph())) input_error("sigma: vector from a different graph");
  const Eigen::Index n = rep.dimension();
  CMatrix out = CMatrix::Zero(n, n);
  for (const auto& e : rep.graph().edges()) out += x.at(e.id) * rep.edge_operator(e.id);
  return out;
}

CMatrix pi(const ToeplitzRep& rep, const VertexFunction& a) {
  if (!(a.graph == rep.graph_ptr() || *a.graph == rep.graph())) input_error("pi: function from a different graph");
  const Eigen::Index n = rep.dimension();
  CMatrix out = CMatrix::Zero(n, n);
  for (const auto& v : rep.graph().vertices()) out += a.at(v) * rep.vertex_projection(v);
  return out;
}

}  // namespace gcorr
