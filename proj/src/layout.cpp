#include "gcorr/layout.hpp"

#include "gcorr/errors.hpp"

namespace gcorr {

BlockLayout::BlockLayout(std::vector<std::string> vertex_order, DimVector dims)
    : order_(std::move(vertex_order)), dims_(std::move(dims)) {
  std::size_t units = 0;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (!position_.emplace(order_[i], i).second) input_error("layout lists vertex '" + order_[i] + "' twice");
    const Eigen::Index d = dims_.at(order_[i]);
    offsets_.push_back(total_);
    unit_offsets_.push_back(units);
    total_ += d;
    units += static_cast<std::size_t>(d * d);
  }
  unit_offsets_.push_back(units);
  if (dims_.values().size() != order_.size()) input_error("layout dimensions name vertices outside the vertex order");
}

std::size_t BlockLayout::position(const std::string& v) const {
  const auto it = position_.find(v);
  if (it == position_.end()) input_error("vertex '" + v + "' is not in the block layout");
  return it->second;
}

bool BlockLayout::matches(const Graph& g) const {
  if (g.vertex_count() != order_.size()) return false;
  for (const auto& v : g.vertices()) {
    if (!contains(v)) return false;
  }
  return true;
}

std::vector<std::pair<Eigen::Index, Eigen::Index>> BlockLayout::intervals() const {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> out;
  for (std::size_t i = 0; i < order_.size(); ++i) out.emplace_back(offsets_[i], dims_.at(order_[i]));
  return out;
}

CMatrix BlockLayout::projection(const std::string& v) const {
  CMatrix p = CMatrix::Zero(total_, total_);
  const Eigen::Index o = offset(v);
  const Eigen::Index d = dim(v);
  p.block(o, o, d, d).setIdentity();
  return p;
}

std::size_t BlockLayout::unit_count() const { return unit_offsets_.back(); }

std::size_t BlockLayout::unit_index(const std::string& v, Eigen::Index p, Eigen::Index q) const {
  const std::size_t i = position(v);
  const Eigen::Index d = dims_.at(v);
  if (p < 0 || q < 0 || p >= d || q >= d) {
    input_error("matrix unit (" + v + ", " + std::to_string(p) + ", " + std::to_string(q) + ") out of range");
  }
  return unit_offsets_[i] + static_cast<std::size_t>(p * d + q);
}

std::vector<MatrixUnit> matrix_units(const BlockLayout& layout) {
  std::vector<MatrixUnit> out;
  out.reserve(layout.unit_count());
  for (const auto& v : layout.vertex_order()) {
    const Eigen::Index d = layout.dim(v);
    for (Eigen::Index p = 0; p < d; ++p) {
      for (Eigen::Index q = 0; q < d; ++q) out.push_back({v, p, q});
    }
  }
  return out;
}

}  // namespace gcorr
