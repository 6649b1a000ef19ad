#include "gcorr/graph.hpp"

#include <functional>
#include <set>
#include <tuple>

#include "gcorr/errors.hpp"

namespace gcorr {

Graph::Graph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_index_.emplace(vertices_[i], i).second) input_error("duplicate vertex '" + vertices_[i] + "'");
  }
  in_edges_.resize(vertices_.size());
  out_edges_.resize(vertices_.size());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    if (!edge_index_.emplace(e.id, k).second) input_error("duplicate edge '" + e.id + "'");
    const auto s = vertex_index_.find(e.src);
    const auto r = vertex_index_.find(e.dst);
    if (s == vertex_index_.end()) input_error("edge '" + e.id + "' has unknown src '" + e.src + "'");
    if (r == vertex_index_.end()) input_error("edge '" + e.id + "' has unknown dst '" + e.dst + "'");
    src_.push_back(s->second);
    dst_.push_back(r->second);
    out_edges_[s->second].push_back(k);
    in_edges_[r->second].push_back(k);
  }
}

std::size_t Graph::vertex_index(const std::string& v) const {
  const auto it = vertex_index_.find(v);
  if (it == vertex_index_.end()) input_error("unknown vertex '" + v + "'");
  return it->second;
}

std::size_t Graph::edge_index(const std::string& e) const {
  const auto it = edge_index_.find(e);
  if (it == edge_index_.end()) input_error("unknown edge '" + e + "'");
  return it->second;
}

bool is_isomorphism(const Graph& from, const Graph& to, const GraphIso& iso) {
  if (from.vertex_count() != to.vertex_count() || from.edge_count() != to.edge_count()) return false;
  if (iso.vertex_map.size() != from.vertex_count() || iso.edge_map.size() != from.edge_count()) return false;
  std::set<std::string> vimage;
  for (const auto& [v, w] : iso.vertex_map) {
    if (!from.has_vertex(v) || !to.has_vertex(w) || !vimage.insert(w).second) return false;
  }
  std::set<std::string> eimage;
  for (const auto& [e, f] : iso.edge_map) {
    if (!from.has_edge(e) || !to.has_edge(f) || !eimage.insert(f).second) return false;
    const Edge& ee = from.edge(e);
    const Edge& ff = to.edge(f);
    if (ff.src != iso.vertex_map.at(ee.src) || ff.dst != iso.vertex_map.at(ee.dst)) return false;
  }
  return true;
}

DimVector::DimVector(std::map<std::string, int> dims) : dims_(std::move(dims)) {
  for (const auto& [v, d] : dims_) {
    if (d < 1) input_error("dimension of vertex '" + v + "' must be >= 1, got " + std::to_string(d));
  }
}

int DimVector::at(const std::string& v) const {
  const auto it = dims_.find(v);
  if (it == dims_.end()) input_error("no dimension given for vertex '" + v + "'");
  return it->second;
}

bool DimVector::covers(const Graph& g) const {
  for (const auto& v : g.vertices()) {
    if (dims_.count(v) == 0) return false;
  }
  return true;
}

Eigen::MatrixXi adjacency_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    a(static_cast<Eigen::Index>(g.dst_index(k)), static_cast<Eigen::Index>(g.src_index(k))) += 1;
  }
  return a;
}

namespace {

using Profile = std::tuple<int, int, int>;  // in-degree, out-degree, loops

std::vector<Profile> profiles(const Graph& g, const Eigen::MatrixXi& a) {
  std::vector<Profile> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto i = static_cast<Eigen::Index>(v);
    out.emplace_back(static_cast<int>(g.in_edges(v).size()), static_cast<int>(g.out_edges(v).size()), a(i, i));
  }
  return out;
}

// Completes a vertex bijection (by index) with the in-order edge matching.
GraphIso complete(const Graph& e, const Graph& f, const std::vector<std::size_t>& vmap) {
  GraphIso iso;
  for (std::size_t v = 0; v < e.vertex_count(); ++v) iso.vertex_map[e.vertices()[v]] = f.vertices()[vmap[v]];
  std::vector<bool> used(f.edge_count(), false);
  for (std::size_t k = 0; k < e.edge_count(); ++k) {
    const std::size_t s = vmap[e.src_index(k)];
    const std::size_t r = vmap[e.dst_index(k)];
    for (std::size_t l : f.out_edges(s)) {
      if (!used[l] && f.dst_index(l) == r) {
        used[l] = true;
        iso.edge_map[e.edges()[k].id] = f.edges()[l].id;
        break;
      }
    }
  }
  return iso;
}

// Calls visit(vmap) for each count-preserving vertex bijection until it
// returns false.
void search(const Graph& e, const Graph& f, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (e.vertex_count() != f.vertex_count() || e.edge_count() != f.edge_count()) return;
  const Eigen::MatrixXi ae = adjacency_matrix(e);
  const Eigen::MatrixXi af = adjacency_matrix(f);
  const auto pe = profiles(e, ae);
  const auto pf = profiles(f, af);
  const std::size_t n = e.vertex_count();
  std::vector<std::size_t> vmap(n);
  std::vector<bool> taken(n, false);

  std::function<bool(std::size_t)> step = [&](std::size_t i) -> bool {
    if (i == n) return visit(vmap);
    for (std::size_t j = 0; j < n; ++j) {
      if (taken[j] || pe[i] != pf[j]) continue;
      vmap[i] = j;
      bool ok = true;
      for (std::size_t k = 0; k <= i && ok; ++k) {
        const auto ii = static_cast<Eigen::Index>(i), kk = static_cast<Eigen::Index>(k);
        const auto jj = static_cast<Eigen::Index>(j), mk = static_cast<Eigen::Index>(vmap[k]);
        ok = ae(ii, kk) == af(jj, mk) && ae(kk, ii) == af(mk, jj);
      }
      if (!ok) continue;
      taken[j] = true;
      const bool keep_going = step(i + 1);
      taken[j] = false;
      if (!keep_going) return false;
    }
    return true;
  };
  step(0);
}

}  // namespace

std::optional<GraphIso> find_isomorphism(const Graph& e, const Graph& f) {
  std::optional<GraphIso> found;
  search(e, f, [&](const std::vector<std::size_t>& vmap) {
    found = complete(e, f, vmap);
    return false;
  });
  return found;
}

std::vector<GraphIso> automorphisms(const Graph& g) {
  std::vector<GraphIso> all;
  search(g, g, [&](const std::vector<std::size_t>& vmap) {
    all.push_back(complete(g, g, vmap));
    return true;
  });
  return all;
}

bool feasible_dims(const Graph& g, const DimVector& d) {
  if (!d.covers(g)) input_error("dimension vector does not cover every vertex");
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    long incoming = 0;
    for (std::size_t k : g.in_edges(v)) incoming += d.at(g.vertices()[g.src_index(k)]);
    if (incoming > d.at(g.vertices()[v])) return false;
  }
  return true;
}

}  // namespace gcorr
