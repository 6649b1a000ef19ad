#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gcorr/correspondence.hpp"
#include "gcorr/errors.hpp"
#include "gcorr/harness.hpp"

using namespace gcorr;
using namespace gcorr::testing;

namespace {

CorrVector random_vector(GraphPtr g, Seeded& rng) {
  CorrVector x = CorrVector::zero(g);
  x.values = random_matrix(static_cast<Eigen::Index>(g->edge_count()), 1, rng);
  return x;
}

VertexFunction random_function(GraphPtr g, Seeded& rng) {
  VertexFunction a = VertexFunction::zero(g);
  a.values = random_matrix(static_cast<Eigen::Index>(g->vertex_count()), 1, rng);
  return a;
}

// Conditions (i)-(iii) and the unitary-plus-support reformulation, separately.
bool identities_hold(const CueReport& r, double eps) {
  return std::max({r.module_right, r.module_left, r.inner}) <= eps;
}
bool structure_holds(const CueReport& r, double eps) { return std::max(r.unitarity, r.support) <= eps; }

}  // namespace

TEST(Correspondence, DeltaRelations) {
  auto g = g2();
  const auto e1 = CorrVector::delta(g, "e1"), e2 = CorrVector::delta(g, "e2");
  const auto ip = inner_product(e1, e1);
  EXPECT_EQ(ip.at("v1"), Complex(1.0));
  EXPECT_EQ(ip.at("v2"), Complex(0.0));
  EXPECT_EQ(inner_product(e1, e2).values.cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(right_action(e1, VertexFunction::delta(g, "v2")).values.cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(right_action(e1, VertexFunction::delta(g, "v1")).values, e1.values);
  EXPECT_EQ(left_action(VertexFunction::delta(g, "v2"), e1).values, e1.values);
  EXPECT_EQ(left_action(VertexFunction::delta(g, "v1"), e1).values.cwiseAbs().maxCoeff(), 0.0);
}

TEST(Correspondence, GraphMismatchThrows) {
  EXPECT_THROW(right_action(CorrVector::delta(g2(), "e1"), VertexFunction::delta(g3(), "v1")), Error);
  EXPECT_THROW(inner_product(CorrVector::delta(g2(), "e1"), CorrVector::delta(g3(), "e1")), Error);
}

TEST(Correspondence, PropertyHilbertModule) {
  Seeded rng(7);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = random_instance(4, 6, 6, seed).graph;
    const auto x = random_vector(g, rng), y = random_vector(g, rng);
    const auto a = random_function(g, rng);
    // <x,x> >= 0 pointwise
    const auto xx = inner_product(x, x);
    for (Eigen::Index v = 0; v < xx.values.size(); ++v) {
      EXPECT_GE(xx.values(v).real(), -1e-12);
      EXPECT_LE(std::abs(xx.values(v).imag()), 1e-12);
    }
    // <x, y.a> = <x,y> a and <y,x> = conj <x,y>
    const auto lhs = inner_product(x, right_action(y, a));
    const auto xy = inner_product(x, y);
    EXPECT_LE((lhs.values - xy.values.cwiseProduct(a.values)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE((inner_product(y, x).values - xy.values.conjugate()).cwiseAbs().maxCoeff(), 1e-12);
    // <phi(a)x, y> = <x, phi(a*)y>
    VertexFunction ac = a;
    ac.values = a.values.conjugate();
    EXPECT_LE((inner_product(left_action(a, x), y).values - inner_product(x, left_action(ac, y)).values)
                  .cwiseAbs()
                  .maxCoeff(),
              1e-12);
  }
}

TEST(Cue, IdentityAndSwapPass) {
  auto g = g2();
  const auto id = cue_verify(identity_cue(g));
  EXPECT_TRUE(id.pass);
  EXPECT_EQ(id.max_violation(), 0.0);

  Cue swap = identity_cue(g);
  swap.u = CMatrix::Zero(2, 2);
  swap.u(0, 1) = swap.u(1, 0) = 1.0;
  EXPECT_TRUE(cue_verify(swap).pass);
}

TEST(Cue, NonUnitaryFails) {
  Cue c = identity_cue(g2());
  c.u(1, 1) = 2.0;
  const auto r = cue_verify(c);
  EXPECT_FALSE(r.pass);
  EXPECT_GT(r.inner, 0.1);
  EXPECT_GT(r.unitarity, 0.1);
}

TEST(Cue, SupportViolationFails) {
  // mixes the loop a with e1 on G3
  Cue c = identity_cue(g3());
  const double h = 1.0 / std::sqrt(2.0);
  c.u.topLeftCorner(2, 2) << h, h, h, -h;
  const auto r = cue_verify(c);
  EXPECT_FALSE(r.pass);
  EXPECT_GT(r.support, 0.5);
  EXPECT_GT(std::max(r.module_left, r.module_right), 0.1);
}

TEST(Cue, BadShapeOrBijectionThrows) {
  Cue c = identity_cue(g2());
  c.vertex_bijection["v2"] = "v1";
  EXPECT_THROW(cue_verify(c), Error);
  Cue d = identity_cue(g2());
  d.u = CMatrix::Identity(3, 3);
  EXPECT_THROW(cue_verify(d), Error);
}

TEST(Cue, PropertyFormulationsAgree) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = random_instance(4, 6, 6, seed).graph;
    if (g->edge_count() == 0) continue;
    const double eps = Tolerance().eps();
    Cue c = random_cue(g, seed);
    auto r = cue_verify(c);
    EXPECT_TRUE(identities_hold(r, eps) && structure_holds(r, eps)) << "seed " << seed;

    Cue scaled = c;
    scaled.u *= 1.1;
    r = cue_verify(scaled);
    EXPECT_FALSE(identities_hold(r, eps));
    EXPECT_FALSE(structure_holds(r, eps));

    Seeded rng(seed);
    Cue noisy = c;
    noisy.u += 1e-3 * random_matrix(c.u.rows(), c.u.cols(), rng);
    r = cue_verify(noisy);
    EXPECT_EQ(identities_hold(r, eps), structure_holds(r, eps)) << "seed " << seed;
  }
}

TEST(Cue, FromGraphIso) {
  auto g = g2();
  GraphIso swap{{{"v1", "v1"}, {"v2", "v2"}}, {{"e1", "e2"}, {"e2", "e1"}}};
  const Cue c = cue_from_graph_iso(swap, g, g);
  EXPECT_EQ(c.u(0, 1), Complex(1.0));
  EXPECT_EQ(c.u(1, 0), Complex(1.0));
  EXPECT_EQ(cue_verify(c).max_violation(), 0.0);

  auto id = find_isomorphism(*g3(), *g3());
  ASSERT_TRUE(id.has_value());
  EXPECT_EQ(cue_from_graph_iso(*id, g3(), g3()).u, CMatrix::Identity(3, 3));

  GraphIso broken{{{"v1", "v2"}, {"v2", "v1"}}, {{"e1", "e1"}, {"e2", "e2"}}};
  EXPECT_THROW(cue_from_graph_iso(broken, g, g), Error);
}

TEST(Cue, ComposeAndInverse) {
  auto g = g2();
  Cue h = identity_cue(g);
  const double s = 1.0 / std::sqrt(2.0);
  h.u << s, s, s, -s;
  const Cue hh = cue_compose(h, h);
  EXPECT_LE((hh.u - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-15);
  const Cue inv = cue_inverse(random_cue(g, 3));
  const Cue back = cue_compose(random_cue(g, 3), inv);
  EXPECT_LE((back.u - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_THROW(cue_compose(identity_cue(g2()), identity_cue(g3())), Error);
}

TEST(Cue, ApplyMapsDeltas) {
  auto g = g2();
  Cue swap = identity_cue(g);
  swap.u << 0, 1, 1, 0;
  EXPECT_EQ(apply_u(swap, CorrVector::delta(g, "e1")).values, CorrVector::delta(g, "e2").values);
  EXPECT_EQ(apply_alpha(swap, VertexFunction::delta(g, "v1")).values, VertexFunction::delta(g, "v1").values);
}
