#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gcorr/graph.hpp"
#include "gcorr/numerics.hpp"

namespace gcorr {

// Decomposition H = H_1 + ... + H_k into consecutive blocks, one per vertex,
// placed in `vertex_order`. Block v occupies [offset(v), offset(v)+dim(v)).
class BlockLayout {
 public:
  BlockLayout() = default;
  // Throws Error(Input) on duplicate vertices or missing dimensions.
  BlockLayout(std::vector<std::string> vertex_order, DimVector dims);

  // Layout of g in its own vertex order.
  static BlockLayout of(const Graph& g, const DimVector& dims) { return BlockLayout(g.vertices(), dims); }

  const std::vector<std::string>& vertex_order() const noexcept { return order_; }
  const DimVector& dims() const noexcept { return dims_; }
  std::size_t block_count() const noexcept { return order_.size(); }
  Eigen::Index total_dim() const noexcept { return total_; }

  bool contains(const std::string& v) const { return position_.count(v) != 0; }
  std::size_t position(const std::string& v) const;
  Eigen::Index offset(const std::string& v) const { return offsets_[position(v)]; }
  Eigen::Index dim(const std::string& v) const { return dims_.at(v); }

  // Same vertices as g (in any order).
  bool matches(const Graph& g) const;

  // The blocks as (offset, dim) intervals; two layouts with equal intervals
  // describe the same algebra W = sum of B(H_v), whatever the vertex names.
  std::vector<std::pair<Eigen::Index, Eigen::Index>> intervals() const;
  bool same_blocks(const BlockLayout& other) const { return intervals() == other.intervals(); }

  // Full n x n orthogonal projection onto block v.
  CMatrix projection(const std::string& v) const;

  // Number of matrix units sum_v d_v^2, and their flat index
  // (position-major, then p, then q).
  std::size_t unit_count() const;
  std::size_t unit_index(const std::string& v, Eigen::Index p, Eigen::Index q) const;

  bool operator==(const BlockLayout& other) const { return order_ == other.order_ && dims_ == other.dims_; }

 private:
  std::vector<std::string> order_;
  DimVector dims_;
  std::map<std::string, std::size_t> position_;
  std::vector<Eigen::Index> offsets_;
  std::vector<std::size_t> unit_offsets_;
  Eigen::Index total_ = 0;
};

// A matrix unit E^{(v)}_{pq}.
struct MatrixUnit {
  std::string vertex;
  Eigen::Index p = 0;
  Eigen::Index q = 0;
};

// All matrix units of the layout in unit_index order.
std::vector<MatrixUnit> matrix_units(const BlockLayout& layout);

}  // namespace gcorr
