#pragma once

#include <map>
#include <string>

#include "gcorr/graph.hpp"
#include "gcorr/numerics.hpp"

namespace gcorr {

// a in C_0(E^0): one value per vertex, in vertex order.
struct VertexFunction {
  GraphPtr graph;
  CVector values;

  static VertexFunction zero(GraphPtr g);
  static VertexFunction delta(GraphPtr g, const std::string& v);
  Complex at(const std::string& v) const { return values(static_cast<Eigen::Index>(graph->vertex_index(v))); }
};

// x in X(E): one value per edge, in edge order.
struct CorrVector {
  GraphPtr graph;
  CVector values;

  static CorrVector zero(GraphPtr g);
  static CorrVector delta(GraphPtr g, const std::string& e);
  Complex at(const std::string& e) const { return values(static_cast<Eigen::Index>(graph->edge_index(e))); }
};

// (x.a)(e) = x(e) a(s(e))
CorrVector right_action(const CorrVector& x, const VertexFunction& a);
// (phi(a)x)(e) = a(r(e)) x(e)
CorrVector left_action(const VertexFunction& a, const CorrVector& x);
// <x,y>(v) = sum over e in s^{-1}(v) of conj(x(e)) y(e)
VertexFunction inner_product(const CorrVector& x, const CorrVector& y);

// Coherent unitary equivalence X(E) -> X(F). U has rows indexed by F^1 and
// columns by E^1 (in edge order); the coefficient isomorphism is the
// pushforward along the vertex bijection b: alpha(delta_v) = delta_{b(v)}.
struct Cue {
  GraphPtr source;
  GraphPtr target;
  std::map<std::string, std::string> vertex_bijection;
  CMatrix u;
};

struct CueReport {
  bool pass = false;
  double module_right = 0.0;   // U(x.a) = (Ux).alpha(a)
  double module_left = 0.0;    // U(phi(a)x) = phi(alpha(a)) Ux
  double inner = 0.0;          // <Ux,y> = alpha(<x,U^{-1}y>)
  double unitarity = 0.0;      // ||U*U - I||
  double support = 0.0;        // largest |U[f][e]| outside the matched classes
  double max_violation() const;
};

// Pushforward of a along the vertex bijection of c.
VertexFunction apply_alpha(const Cue& c, const VertexFunction& a);
CorrVector apply_u(const Cue& c, const CorrVector& x);

// Checks the three defining identities on the spanning vectors delta_e,
// delta_v together with the equivalent unitarity + support formulation.
// Throws Error(Input) if the vertex map is not a bijection or U has the
// wrong shape.
CueReport cue_verify(const Cue& c, const Tolerance& tol = {});

Cue identity_cue(GraphPtr g);

// From an isomorphism F -> E, the CUE X(E) -> X(F) given by Ux = x o psi1.
Cue cue_from_graph_iso(const GraphIso& iso, GraphPtr f, GraphPtr e);

// (U2 U1, b2 o b1) for c1: X(E) -> X(F), c2: X(F) -> X(G).
Cue cue_compose(const Cue& c1, const Cue& c2);
// (U*, b^{-1})
Cue cue_inverse(const Cue& c);

}  // namespace gcorr
