#include "gcorr/endomorphism.hpp"

#include <algorithm>

#include "gcorr/errors.hpp"

namespace gcorr {

BlockOperator::BlockOperator(BlockLayout layout, std::map<std::string, CMatrix> blocks)
    : layout_(std::move(layout)), blocks_(std::move(blocks)) {
  if (blocks_.size() != layout_.block_count()) input_error("block operator must have exactly one block per vertex");
  for (const auto& v : layout_.vertex_order()) {
    const auto it = blocks_.find(v);
    if (it == blocks_.end()) input_error("block operator has no block for vertex '" + v + "'");
    const Eigen::Index d = layout_.dim(v);
    if (it->second.rows() != d || it->second.cols() != d) {
      input_error("block of vertex '" + v + "' must be " + std::to_string(d) + "x" + std::to_string(d));
    }
    if (!all_finite(it->second)) input_error("block of vertex '" + v + "' has non-finite entries");
  }
}

BlockOperator BlockOperator::zero(const BlockLayout& layout) {
  std::map<std::string, CMatrix> blocks;
  for (const auto& v : layout.vertex_order()) blocks.emplace(v, CMatrix::Zero(layout.dim(v), layout.dim(v)));
  return BlockOperator(layout, std::move(blocks));
}

BlockOperator BlockOperator::identity(const BlockLayout& layout) {
  std::map<std::string, CMatrix> blocks;
  for (const auto& v : layout.vertex_order()) blocks.emplace(v, CMatrix::Identity(layout.dim(v), layout.dim(v)));
  return BlockOperator(layout, std::move(blocks));
}

BlockOperator BlockOperator::unit(const BlockLayout& layout, const MatrixUnit& u) {
  layout.unit_index(u.vertex, u.p, u.q);
  BlockOperator out = zero(layout);
  out.blocks_.at(u.vertex)(u.p, u.q) = 1.0;
  return out;
}

BlockOperator BlockOperator::from_full(const BlockLayout& layout, const CMatrix& m) {
  if (m.rows() != layout.total_dim() || m.cols() != layout.total_dim()) input_error("from_full: size mismatch");
  std::map<std::string, CMatrix> blocks;
  for (const auto& v : layout.vertex_order()) {
    const Eigen::Index o = layout.offset(v), d = layout.dim(v);
    blocks.emplace(v, m.block(o, o, d, d));
  }
  return BlockOperator(layout, std::move(blocks));
}

const CMatrix& BlockOperator::block(const std::string& v) const {
  const auto it = blocks_.find(v);
  if (it == blocks_.end()) input_error("block operator has no vertex '" + v + "'");
  return it->second;
}

CMatrix BlockOperator::to_full() const {
  const Eigen::Index n = layout_.total_dim();
  CMatrix m = CMatrix::Zero(n, n);
  for (const auto& v : layout_.vertex_order()) {
    const Eigen::Index o = layout_.offset(v), d = layout_.dim(v);
    m.block(o, o, d, d) = blocks_.at(v);
  }
  return m;
}

BlockOperator BlockOperator::adjoint() const {
  BlockOperator out = *this;
  for (auto& [v, b] : out.blocks_) b = blocks_.at(v).adjoint();
  return out;
}

namespace {

void require_layout(const BlockLayout& a, const BlockLayout& b, const char* what) {
  if (!(a == b)) input_error(std::string(what) + ": block layouts differ");
}

}  // namespace

BlockOperator& BlockOperator::operator+=(const BlockOperator& other) {
  require_layout(layout_, other.layout_, "operator+");
  for (auto& [v, b] : blocks_) b += other.blocks_.at(v);
  return *this;
}

BlockOperator operator-(const BlockOperator& a, const BlockOperator& b) { return a + (Complex(-1.0) * b); }

BlockOperator operator*(const BlockOperator& a, const BlockOperator& b) {
  require_layout(a.layout_, b.layout_, "operator*");
  BlockOperator out = a;
  for (auto& [v, blk] : out.blocks_) blk = a.blocks_.at(v) * b.blocks_.at(v);
  return out;
}

BlockOperator operator*(Complex s, BlockOperator a) {
  for (auto& [v, blk] : a.blocks_) blk *= s;
  return a;
}

double distance(const BlockOperator& a, const BlockOperator& b) {
  require_layout(a.layout(), b.layout(), "distance");
  double out = 0.0;
  for (const auto& [v, blk] : a.blocks()) out = std::max(out, max_abs(blk - b.block(v)));
  return out;
}

Endo::Endo(BlockLayout layout, std::vector<BlockOperator> images) : layout_(std::move(layout)), images_(std::move(images)) {
  if (images_.size() != layout_.unit_count()) {
    input_error("endomorphism needs an image for each of the " + std::to_string(layout_.unit_count()) +
                " matrix units, got " + std::to_string(images_.size()));
  }
  for (const auto& img : images_) require_layout(layout_, img.layout(), "endomorphism image");
}

Endo Endo::zero(const BlockLayout& layout) {
  return Endo(layout, std::vector<BlockOperator>(layout.unit_count(), BlockOperator::zero(layout)));
}

Endo Endo::identity(const BlockLayout& layout) {
  std::vector<BlockOperator> images;
  for (const auto& u : matrix_units(layout)) images.push_back(BlockOperator::unit(layout, u));
  return Endo(layout, std::move(images));
}

BlockOperator Endo::apply(const BlockOperator& w) const {
  require_layout(layout_, w.layout(), "Endo::apply");
  BlockOperator out = BlockOperator::zero(layout_);
  std::size_t k = 0;
  for (const auto& v : layout_.vertex_order()) {
    const CMatrix& b = w.block(v);
    for (Eigen::Index p = 0; p < b.rows(); ++p) {
      for (Eigen::Index q = 0; q < b.cols(); ++q, ++k) {
        if (b(p, q) != Complex(0.0)) out += b(p, q) * images_[k];
      }
    }
  }
  return out;
}

EndoReport endo_verify(const Endo& a, const Tolerance& tol) {
  const auto units = matrix_units(a.layout());
  const BlockOperator zero = BlockOperator::zero(a.layout());
  EndoReport out;
  for (const auto& u : units) {
    const BlockOperator& au = a.image(u);
    const double adj = distance(au.adjoint(), a.image({u.vertex, u.q, u.p}));
    if (adj > out.adjoint) out.adjoint = adj;
    for (const auto& w : units) {
      const bool chained = u.vertex == w.vertex && u.q == w.p;
      const BlockOperator& expected = chained ? a.image({u.vertex, u.p, w.q}) : zero;
      const double viol = distance(au * a.image(w), expected);
      if (viol > out.multiplicativity) {
        out.multiplicativity = viol;
        out.worst_left = u;
        out.worst_right = w;
      }
    }
  }
  if (out.adjoint > out.multiplicativity) {
    // Point the diagnostic at the adjoint failure instead.
    for (const auto& u : units) {
      if (distance(a.image(u).adjoint(), a.image({u.vertex, u.q, u.p})) == out.adjoint) {
        out.worst_left = u;
        out.worst_right = {u.vertex, u.q, u.p};
        break;
      }
    }
  }
  out.pass = out.max_violation() <= tol.eps();
  return out;
}

BlockOperator ad_apply(const ToeplitzRep& rep, const BlockOperator& w) {
  require_layout(rep.layout(), w.layout(), "ad_apply");
  BlockOperator out = BlockOperator::zero(w.layout());
  std::map<std::string, CMatrix> acc = out.blocks();
  for (const auto& e : rep.graph().edges()) {
    const CMatrix& s = rep.edge_block(e.id);
    acc.at(e.dst) += s * w.block(e.src) * s.adjoint();
  }
  return BlockOperator(w.layout(), std::move(acc));
}

CMatrix ad_apply_full(const ToeplitzRep& rep, const CMatrix& w) {
  const Eigen::Index n = rep.dimension();
  if (w.rows() != n || w.cols() != n) input_error("ad_apply_full: operator size does not match the representation");
  CMatrix out = CMatrix::Zero(n, n);
  for (const auto& e : rep.graph().edges()) {
    const CMatrix s = rep.edge_operator(e.id);
    out += s * w * s.adjoint();
  }
  return out;
}

Endo ad_endo(const ToeplitzRep& rep) {
  std::vector<BlockOperator> images;
  for (const auto& u : matrix_units(rep.layout())) images.push_back(ad_apply(rep, BlockOperator::unit(rep.layout(), u)));
  return Endo(rep.layout(), std::move(images));
}

std::vector<CMatrix> intertwiner_basis(const ToeplitzRep& rep, const Tolerance& tol) {
  const BlockLayout& layout = rep.layout();
  const auto units = matrix_units(layout);
  std::vector<BlockOperator> ad_units;
  for (const auto& u : units) ad_units.push_back(ad_apply(rep, BlockOperator::unit(layout, u)));

  std::vector<CMatrix> basis;
  const Eigen::Index n = layout.total_dim();
  for (const auto& w : layout.vertex_order()) {
    for (const auto& v : layout.vertex_order()) {
      const Eigen::Index dw = layout.dim(w), dv = layout.dim(v);
      const Eigen::Index unknowns = dw * dv;
      // Rows: for each unit, the dw x dv entries of Ad(u)_w T - [u in block v] T u_v,
      // with T vectorized column-major.
      CMatrix system = CMatrix::Zero(static_cast<Eigen::Index>(units.size()) * unknowns, unknowns);
      for (std::size_t k = 0; k < units.size(); ++k) {
        const CMatrix& a = ad_units[k].block(w);
        const Eigen::Index row0 = static_cast<Eigen::Index>(k) * unknowns;
        for (Eigen::Index j = 0; j < dv; ++j) {
          // (Ad(u)_w T)(:, j) = a * T(:, j)
          system.block(row0 + j * dw, j * dw, dw, dw) += a;
        }
        if (units[k].vertex == v) {
          // (T u)(:, j) = T(:, p) if j == q for u = E_pq
          const Eigen::Index p = units[k].p, q = units[k].q;
          system.block(row0 + q * dw, p * dw, dw, dw) -= CMatrix::Identity(dw, dw);
        }
      }
      const CMatrix kernel = nullspace_basis(system, tol);
      for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
        CMatrix t = CMatrix::Zero(n, n);
        const CVector col = kernel.col(c);
        t.block(layout.offset(w), layout.offset(v), dw, dv) = Eigen::Map<const CMatrix>(col.data(), dw, dv);
        basis.push_back(std::move(t));
      }
    }
  }
  return basis;
}

}  // namespace gcorr
