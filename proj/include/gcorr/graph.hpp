#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace gcorr {

// An edge e with s(e) = src and r(e) = dst.
struct Edge {
  std::string id;
  std::string src;
  std::string dst;

  bool operator==(const Edge&) const = default;
};

// Finite directed multigraph E = (E^0, E^1, r, s). Immutable once built; the
// vertex and edge orders given at construction are preserved everywhere
// (adjacency indices, matrix rows, block layouts).
class Graph {
 public:
  // Throws Error(Input) on duplicate names or dangling endpoints.
  Graph(std::vector<std::string> vertices, std::vector<Edge> edges);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_vertex(const std::string& v) const { return vertex_index_.count(v) != 0; }
  bool has_edge(const std::string& e) const { return edge_index_.count(e) != 0; }
  std::size_t vertex_index(const std::string& v) const;
  std::size_t edge_index(const std::string& e) const;
  const Edge& edge(const std::string& e) const { return edges_[edge_index(e)]; }

  // Indices of r^{-1}(v) and s^{-1}(v), in edge order.
  const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_edges_[v]; }
  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_edges_[v]; }
  std::size_t src_index(std::size_t e) const { return src_[e]; }
  std::size_t dst_index(std::size_t e) const { return dst_[e]; }

  bool operator==(const Graph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, std::size_t> vertex_index_;
  std::map<std::string, std::size_t> edge_index_;
  std::vector<std::size_t> src_;
  std::vector<std::size_t> dst_;
  std::vector<std::vector<std::size_t>> in_edges_;
  std::vector<std::vector<std::size_t>> out_edges_;
};

using GraphPtr = std::shared_ptr<const Graph>;

inline GraphPtr make_graph(std::vector<std::string> vertices, std::vector<Edge> edges) {
  return std::make_shared<const Graph>(std::move(vertices), std::move(edges));
}

// psi0: E^0 -> F^0 and psi1: E^1 -> F^1.
struct GraphIso {
  std::map<std::string, std::string> vertex_map;
  std::map<std::string, std::string> edge_map;
};

// True when iso is a pair of bijections intertwining r and s.
bool is_isomorphism(const Graph& from, const Graph& to, const GraphIso& iso);

// Positive block dimension d_v per vertex.
class DimVector {
 public:
  DimVector() = default;
  // Throws Error(Input) if any dimension is < 1.
  explicit DimVector(std::map<std::string, int> dims);

  int at(const std::string& v) const;
  bool covers(const Graph& g) const;
  const std::map<std::string, int>& values() const noexcept { return dims_; }

  bool operator==(const DimVector&) const = default;

 private:
  std::map<std::string, int> dims_;
};

// A[w][v] = #{e : s(e) = v, r(e) = w} in vertex order.
Eigen::MatrixXi adjacency_matrix(const Graph& g);

// Backtracking search over vertex bijections with degree-profile pruning;
// edges are then matched in order within each parallel class. Returns the
// first isomorphism found under the input orderings. Exponential in the worst
// case, intended for graphs with at most about 8 vertices.
std::optional<GraphIso> find_isomorphism(const Graph& e, const Graph& f);

// Every vertex bijection E^0 -> E^0 that extends to an automorphism, each
// completed with the in-order edge matching. Same search as above.
std::vector<GraphIso> automorphisms(const Graph& g);

// For every v: sum over e in r^{-1}(v) of d_{s(e)} <= d_v.
bool feasible_dims(const Graph& g, const DimVector& d);

}  // namespace gcorr
