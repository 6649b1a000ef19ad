#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gcorr/endomorphism.hpp"
#include "gcorr/errors.hpp"
#include "gcorr/harness.hpp"
#include "oracles.hpp"

using namespace gcorr;
using namespace gcorr::testing;

namespace {

BlockOperator on_g3_layout(Complex a, const CMatrix& b) {
  return BlockOperator(BlockLayout::of(*g3(), dims12()), {{"v1", CMatrix::Constant(1, 1, a)}, {"v2", b}});
}

}  // namespace

TEST(Ad, G3MapsScalarToDiagonal) {
  Seeded rng(1);
  const Complex a(0.3, -1.2);
  const CMatrix b = random_matrix(2, 2, rng);
  const auto out = ad_apply(g3_rep(), on_g3_layout(a, b));
  EXPECT_EQ(out.block("v1")(0, 0), a);
  EXPECT_LE((out.block("v2") - a * CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Ad, G1IsZeroAndG4HitsOneCorner) {
  Seeded rng(2);
  const auto l1 = g1_rep().layout();
  EXPECT_EQ(distance(ad_apply(g1_rep(), random_block_operator(l1, rng)), BlockOperator::zero(l1)), 0.0);
  const Complex a(2.0, 1.0);
  const auto out = ad_apply(g4_rep(), on_g3_layout(a, random_matrix(2, 2, rng)));
  EXPECT_EQ(out.block("v1")(0, 0), Complex(0.0));
  CMatrix expect = CMatrix::Zero(2, 2);
  expect(0, 0) = a;
  EXPECT_EQ(out.block("v2"), expect);
}

TEST(Ad, LayoutMismatchThrows) {
  const auto w = BlockOperator::identity(BlockLayout({"v"}, DimVector({{"v", 3}})));
  EXPECT_THROW(ad_apply(g3_rep(), w), Error);
}

TEST(AdEndo, FixtureImages) {
  const auto a3 = ad_endo(g3_rep());
  const auto layout = a3.layout();
  EXPECT_EQ(a3.image({"v1", 0, 0}).to_full(), CMatrix::Identity(3, 3));
  for (Eigen::Index p = 0; p < 2; ++p)
    for (Eigen::Index q = 0; q < 2; ++q) EXPECT_EQ(a3.image({"v2", p, q}).to_full(), CMatrix::Zero(3, 3));
  const auto a4 = ad_endo(g4_rep());
  CMatrix e11 = CMatrix::Zero(3, 3);
  e11(1, 1) = 1.0;
  EXPECT_EQ(a4.image({"v1", 0, 0}).to_full(), e11);
}

TEST(EndoVerify, Examples) {
  EXPECT_TRUE(endo_verify(ad_endo(random_rep(g3(), DimVector({{"v1", 2}, {"v2", 4}}), 1))).pass);
  EXPECT_TRUE(endo_verify(Endo::zero(g3_rep().layout())).pass);
  EXPECT_TRUE(endo_verify(Endo::identity(g3_rep().layout())).pass);

  const auto layout = BlockLayout({"v1", "v2"}, DimVector({{"v1", 1}, {"v2", 1}}));
  auto images = Endo::zero(layout).images();
  images[layout.unit_index("v1", 0, 0)] = BlockOperator(layout, {{"v1", CMatrix::Constant(1, 1, 2.0)}, {"v2", CMatrix::Zero(1, 1)}});
  const auto r = endo_verify(Endo(layout, images));
  EXPECT_FALSE(r.pass);
  EXPECT_DOUBLE_EQ(r.multiplicativity, 2.0);
  EXPECT_EQ(r.worst_left.vertex, "v1");
}

TEST(Ad, PropertyStarHomomorphism) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto inst = random_instance(4, 6, 6, seed);
    const auto& layout = inst.rep.layout();
    Seeded rng(seed);
    for (int k = 0; k < 5; ++k) {
      const auto x = random_block_operator(layout, rng), y = random_block_operator(layout, rng);
      const Complex c(rng.normal(), rng.normal());
      const auto ax = ad_apply(inst.rep, x), ay = ad_apply(inst.rep, y);
      EXPECT_LE(distance(ad_apply(inst.rep, x + c * y), ax + c * ay), 1e-9);
      EXPECT_LE(distance(ad_apply(inst.rep, x.adjoint()), ax.adjoint()), 1e-9);
      EXPECT_LE(distance(ad_apply(inst.rep, x * y), ax * ay), 1e-9);
      // agrees with the full-matrix sum
      EXPECT_LE((ax.to_full() - dense_ad(inst.rep, x.to_full())).cwiseAbs().maxCoeff(), 1e-9);
    }
  }
}

TEST(Ad, PropertyUnitIsRangeProjection) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = random_instance(4, 6, 6, seed);
    const auto& layout = inst.rep.layout();
    const CMatrix one = ad_apply(inst.rep, BlockOperator::identity(layout)).to_full();
    EXPECT_TRUE(is_projection(one));
    const CMatrix id = CMatrix::Identity(layout.total_dim(), layout.total_dim());
    const bool unital = (one - id).cwiseAbs().maxCoeff() <= 1e-9;
    EXPECT_EQ(unital, coisometric_check(inst.rep).all) << "seed " << seed;
  }
}

TEST(Intertwiner, Fixtures) {
  EXPECT_TRUE(intertwiner_basis(g1_rep()).empty());
  for (const auto& rep : {g2_rep(), g3_rep(), g4_rep()}) {
    const auto basis = intertwiner_basis(rep);
    EXPECT_EQ(basis.size(), dense_intertwiner_dim(rep, 1e-9));
    for (const auto& e : rep.graph().edges()) EXPECT_LE(span_residual(basis, rep.edge_operator(e.id)), 1e-8);
  }
}

TEST(Intertwiner, PropertyOrthonormalAndIntertwining) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto inst = random_instance(3, 4, 3, seed);
    const auto basis = intertwiner_basis(inst.rep);
    const auto units = full_units(inst.rep.layout());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const Complex ip = (basis[i].adjoint() * basis[j]).trace();
        EXPECT_NEAR(std::abs(ip - Complex(i == j ? 1.0 : 0.0)), 0.0, 1e-9);
      }
      for (const auto& u : units)
        EXPECT_LE((dense_ad(inst.rep, u) * basis[i] - basis[i] * u).cwiseAbs().maxCoeff(), 1e-9);
    }
    // closed under the right action of the commutant (block scalars)
    for (const auto& t : basis)
      for (const auto& v : inst.rep.layout().vertex_order())
        EXPECT_LE(span_residual(basis, t * inst.rep.vertex_projection(v)), 1e-8);
  }
}
