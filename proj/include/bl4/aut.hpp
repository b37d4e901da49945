// Automorphism machinery: the 3x3 automorphism group of the nonabelian
// nilpotent algebra e1 e2 = e3 with its scalar/unimodular factorization, the
// cocycle phi with its functional equation, the block-matrix group zoo, and
// the literal automorphism families of the canonical algebras.
#pragma once

#include "bl4/normal_form.hpp"

namespace bl4 {

// phi(A, a) for A = [[p1,q1],[p2,q2]], a = (p3,q3):
//   ((p3 q1 - p1 q3) / det A, (p3 q2 - p2 q3) / det A).
// Satisfies phi(A,a) + A phi(B,b) = phi(AB, (a^t B + det(A) b^t)^t), which is
// exactly what makes the 4x4 blocks below close under multiplication.
Vec2 phi(const Mat2& A, const Vec2& a);

enum class CocycleVariant {
  Phi,       // phi on all invertible 2x2 blocks
  ThetaPhi,  // diag(-1,1) * phi, on diagonal blocks only
};

// Exact check of the functional equation above for the given instance.
bool check_cocycle(CocycleVariant variant, const Mat2& A, const Vec2& a,
                   const Mat2& B, const Vec2& b);

// Automorphisms of the algebra e1 e2 = e3: matrices [[A, 0], [a^t, det A]]
// with invertible A.
struct AutNElement {
  Mat2 A;
  Vec2 a;
};

Mat3 autn_matrix(const AutNElement& e);
AutNElement autn_mul(const AutNElement& f, const AutNElement& g);

// Factorized form (xi, S, x) with xi != 0 and det(S) * xi = 1, multiplied by
//   (xi, S, x) . (eta, T, y) = (xi eta, S T, (x^t T + y^t)^t).
// The determinant constraint is what a scalar/unimodular split looks like
// without square roots: delta below rebuilds A = xi S with det A = xi.
struct AutNFactor {
  Rational xi;
  Mat2 S;
  Vec2 x;
};

void validate(const AutNFactor& f);

// delta(xi, S, x) = [[xi S, 0], [xi x^t, xi]]; delta and delta_inv are
// mutually inverse, and delta(f.g) = delta(f) delta(g).
AutNElement autn_delta(const AutNFactor& f);
AutNFactor autn_delta_inv(const AutNElement& e);
AutNFactor autn_factor_mul(const AutNFactor& f, const AutNFactor& g);

// The 4x4 block-matrix groups. All render as
//   [ u0  0   0   0  ]
//   [ c1  A         0 ]
//   [ c2            0 ]
//   [ u   p3  q3  |A| ]
// with u0 = 1 (except the flip coset of AutA1, where u0 = -1) and the first
// column c determined by the variant:
//   Gamma:         c = phi(A, a), A any invertible 2x2
//   Gamma0:        c = 0, A any invertible
//   GammaTriangle: c = 0, A = [[1,0],[p2,q2]], a = 0
//   GammaPlus:     c = phi(A, a), A diagonal
//   GammaMinus:    c = diag(-1,1) phi(A, a), A diagonal
//   GammaAB(alpha, beta): c = (-alpha q3/q2, beta p3/p1), A = diag(p1, q2)
//   AutA1: union of GammaAB(-1, 1) and its flip coset, whose elements have
//          u0 = -1, antidiagonal A = [[0,q1],[p2,0]] and
//          c = (-p3/p2, -q3/q1).
struct GroupId {
  enum class Variant {
    Gamma,
    Gamma0,
    GammaTriangle,
    GammaPlus,
    GammaMinus,
    GammaAB,
    AutA1,
  };
  Variant variant = Variant::Gamma;
  Rational alpha;  // GammaAB only
  Rational beta;   // GammaAB only

  friend bool operator==(const GroupId&, const GroupId&) = default;
};

std::string group_id_string(const GroupId& id);

// True for the variants whose first column is identically zero (these are the
// semidirect-product extensions; the others twist by phi).
bool has_zero_phi_block(const GroupId& id);

struct GroupParams {
  Mat2 A;          // shape constrained per variant, see above
  Vec2 a;          // (p3, q3)
  Rational u;      // bottom-left entry
  bool flip = false;  // AutA1 only: selects the u0 = -1 coset

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

// Renders the element; throws std::invalid_argument when params violate the
// variant's shape constraints.
Mat4 group_element(const GroupId& id, const GroupParams& params);

// Matrix product with membership enforced on both factors and on the result
// (the families are closed; a closure failure is a logic error).
Mat4 group_mul(const GroupId& id, const Mat4& m1, const Mat4& m2);

struct Membership {
  bool member = false;
  GroupParams params;  // recovered parameters when member
  std::string reject;  // first violated constraint otherwise
};

// Recovers parameters by reading designated entries in the order u0, 2x2
// block, (p3, q3), u, re-renders, and accepts only on exact match.
Membership group_membership(const GroupId& id, const Mat4& m);

// For the two diagonal-block variants: the pairing that separates them.
// GammaPlus: a^t phi(E, b) - b^t phi(E, a) = 2(q3 b_p3 - p3 b_q3), generally
// nonzero; GammaMinus: the same with diag(-1,1) phi, identically zero.
Rational t_subgroup_commutator(const GroupId& id, const Vec2& a, const Vec2& b);

struct AutFamily {
  CanonicalLabel algebra;
  GroupId abstract_id;
};

// The abstract isomorphism type of the automorphism group of each canonical
// algebra:
//   A0 -> Gamma; C(lambda != 1) -> Gamma; C(1) -> Gamma0;
//   B(lambda) -> GammaTriangle;
//   D(lambda, mu) -> GammaAB(1,1), or GammaAB(-1,1) when mu - 2 lambda + 1 = 0;
//   A1 -> AutA1.
AutFamily aut_family_of(const CanonicalLabel& l);

// Literal automorphism matrices of the canonical algebra (these differ from
// the abstract groups by parameter-dependent rescalings of the first column):
//   A0: Gamma elements.
//   C(lambda != 1): Gamma shape with c = (lambda - 1) phi(A, a).
//   C(1): Gamma0 elements.
//   B(lambda): [[1,0,0,0],[0,1,0,0],[p2(lambda-1),p2,q2,0],
//               [u,p2(1-lambda),0,q2]] — free parameters (p2, q2 != 0, u);
//               params.A = [[1,0],[p2,q2]], params.a is derived.
//   D(lambda, mu): GammaAB(lambda - mu, lambda - 1) elements.
//   A1: GammaAB(1, -1) elements, plus the flip coset with antidiagonal block
//       and c = (+p3/p2, +q3/q1).
// Every rendered element is an automorphism of the canonical algebra (oracle
// property, exercised heavily in the tests).
Mat4 aut_element(const CanonicalLabel& l, const GroupParams& params);

Membership aut_membership(const CanonicalLabel& l, const Mat4& m);

}  // namespace bl4
