#include "gcorr/factorization.hpp"

#include <algorithm>

#include "gcorr/errors.hpp"

namespace gcorr {

std::string describe(const MatrixUnit& u) {
  return "(" + u.vertex + "," + std::to_string(u.p) + "," + std::to_string(u.q) + ")";
}

CMatrix ComponentMap::apply(const CMatrix& x) const {
  CMatrix out = CMatrix::Zero(to_dim, to_dim);
  for (Eigen::Index p = 0; p < from_dim; ++p) {
    for (Eigen::Index q = 0; q < from_dim; ++q) out += x(p, q) * at(p, q);
  }
  return out;
}

namespace {

void require_endomorphism(const Endo& a, const Tolerance& tol) {
  const EndoReport rep = endo_verify(a, tol);
  if (!rep.pass) {
    fail(ErrorKind::NotAnEndomorphism, "violation " + std::to_string(rep.max_violation()) + " at matrix units " +
                                           describe(rep.worst_left) + " and " + describe(rep.worst_right));
  }
}

ComponentMap component_of(const Endo& a, const std::string& i, const std::string& j) {
  const BlockLayout& layout = a.layout();
  ComponentMap out{i, j, layout.dim(i), layout.dim(j), {}};
  for (Eigen::Index p = 0; p < out.from_dim; ++p) {
    for (Eigen::Index q = 0; q < out.from_dim; ++q) out.images.push_back(a.image({i, p, q}).block(j));
  }
  return out;
}

int multiplicity_of(const ComponentMap& c, const Tolerance& tol) {
  const auto n = static_cast<int>(numerical_rank(c.at(0, 0), tol));
  const CMatrix unit_image = c.apply(CMatrix::Identity(c.from_dim, c.from_dim));
  const auto full = static_cast<int>(numerical_rank(unit_image, tol));
  if (full != n * c.from_dim) {
    fail(ErrorKind::InconsistentMultiplicity, "component " + c.from + " -> " + c.to + ": rank of image of E_00 is " +
                                                  std::to_string(n) + " but rank of image of the unit is " +
                                                  std::to_string(full) + " (expected " +
                                                  std::to_string(n * c.from_dim) + ")");
  }
  return n;
}

std::vector<CMatrix> isometries_of(const ComponentMap& c, const Tolerance& tol) {
  multiplicity_of(c, tol);
  const CMatrix xi = orthonormal_range_basis(c.at(0, 0), tol);
  std::vector<CMatrix> vs;
  for (Eigen::Index k = 0; k < xi.cols(); ++k) {
    CMatrix v(c.to_dim, c.from_dim);
    for (Eigen::Index p = 0; p < c.from_dim; ++p) v.col(p) = c.at(p, 0) * xi.col(k);
    vs.push_back(std::move(v));
  }

  double residual = 0.0;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    for (std::size_t l = 0; l < vs.size(); ++l) {
      const CMatrix expected = (k == l ? 1.0 : 0.0) * CMatrix::Identity(c.from_dim, c.from_dim);
      residual = std::max(residual, max_abs(vs[k].adjoint() * vs[l] - expected));
    }
  }
  for (Eigen::Index p = 0; p < c.from_dim; ++p) {
    for (Eigen::Index q = 0; q < c.from_dim; ++q) {
      CMatrix acc = -c.at(p, q);
      for (const auto& v : vs) acc += v.col(p) * v.col(q).adjoint();
      residual = std::max(residual, max_abs(acc));
    }
  }
  if (residual > tol.eps()) {
    fail(ErrorKind::ReconstructionFailure,
         "component " + c.from + " -> " + c.to + ": isometry residual " + std::to_string(residual));
  }
  return vs;
}

}  // namespace

ComponentMap component_map(const Endo& a, const std::string& i, const std::string& j, const Tolerance& tol) {
  require_endomorphism(a, tol);
  return component_of(a, i, j);
}

int multiplicity(const Endo& a, const std::string& i, const std::string& j, const Tolerance& tol) {
  require_endomorphism(a, tol);
  return multiplicity_of(component_of(a, i, j), tol);
}

std::vector<CMatrix> extract_isometries(const Endo& a, const std::string& i, const std::string& j,
                                        const Tolerance& tol) {
  require_endomorphism(a, tol);
  return isometries_of(component_of(a, i, j), tol);
}

FactorizationResult factor_endo(const Endo& a, const Tolerance& tol) {
  require_endomorphism(a, tol);
  const BlockLayout& layout = a.layout();
  const auto& order = layout.vertex_order();
  const auto nv = static_cast<Eigen::Index>(order.size());

  Eigen::MatrixXi mult = Eigen::MatrixXi::Zero(nv, nv);
  std::vector<Edge> edges;
  std::map<std::string, CMatrix> blocks;
  for (Eigen::Index i = 0; i < nv; ++i) {
    for (Eigen::Index j = 0; j < nv; ++j) {
      const auto& vi = order[static_cast<std::size_t>(i)];
      const auto& vj = order[static_cast<std::size_t>(j)];
      const auto vs = isometries_of(component_of(a, vi, vj), tol);
      mult(i, j) = static_cast<int>(vs.size());
      for (std::size_t k = 0; k < vs.size(); ++k) {
        const std::string id = vi + "->" + vj + "#" + std::to_string(k + 1);
        edges.push_back({id, vi, vj});
        blocks.emplace(id, vs[k]);
      }
    }
  }

  GraphPtr graph = make_graph(order, std::move(edges));
  ToeplitzRep rep(graph, layout, std::move(blocks));
  const ToeplitzReport check = verify_toeplitz(rep, tol);
  if (!check.pass) {
    fail(ErrorKind::ReconstructionFailure, "assembled representation violates the Toeplitz relations by " +
                                               std::to_string(check.max_violation()));
  }

  double residual = 0.0;
  BlockOperator unit_image = BlockOperator::zero(layout);
  for (const auto& u : matrix_units(layout)) {
    residual = std::max(residual, distance(a.image(u), ad_apply(rep, BlockOperator::unit(layout, u))));
    if (u.p == u.q) unit_image += a.image(u);
  }
  if (residual > tol.eps()) {
    fail(ErrorKind::ReconstructionFailure, "alpha differs from Ad_tau by " + std::to_string(residual));
  }

  const bool unital = distance(unit_image, BlockOperator::identity(layout)) <= tol.eps();
  CoisometricReport cois = coisometric_check(rep, tol);
  if (unital && !cois.all) {
    fail(ErrorKind::ReconstructionFailure, "unital endomorphism produced a non-coisometric representation");
  }
  return FactorizationResult{std::move(mult), graph, std::move(rep), residual, unital, std::move(cois)};
}

}  // namespace gcorr
