// The distinguished-basis presentation of the four-dimensional algebras under
// study, membership testing, flag-preserving basis changes, the isomorphism
// matrix equation, and recovery of a presentation from raw structure
// constants.
#pragma once

#include <optional>
#include <string>

#include "bl4/algebra.hpp"

namespace bl4 {

// Multiplication table in a distinguished basis (e0, e1, e2, e3):
//   e0 e1 = x11 e1
//   e0 e2 = X(0,0) e2 + X(1,0) e3
//   e0 e3 = X(0,1) e2 + X(1,1) e3
//   e1 e2 = xi3 e3,   e1 e3 = e2 e3 = 0.
// X acts on span(e2, e3); column j of X is the image of e_{j+2}. xi3 must be
// nonzero, otherwise span(e1,e2,e3) fails to be the expected nilpotent ideal.
struct Bl4Presentation {
  Rational x11;
  Rational xi3;
  Mat2 X;

  friend bool operator==(const Bl4Presentation&, const Bl4Presentation&) = default;
};

StructureConstants to_structure_constants(const Bl4Presentation& p);

// Reasons the classification pipeline rejects an input algebra.
enum class NotBl4Reason {
  FirstRowVanishing,      // x11 != 0 but e0 kills the e2-line of the flag
  Decomposable,           // splits as a line plus a complementary ideal
  WrongDerivedDimension,  // derived subalgebra dimension not in {1, 3}
  PNotNilpotent3Dim,      // no 3-dimensional ideal isomorphic to the
                          // nonabelian nilpotent algebra e1 e2 = e3
  NoRationalSplitting,    // the induced action on the flag quotient has no
                          // rational eigenbasis of invariant lines
};

std::string reason_string(NotBl4Reason r);

struct Bl4Check {
  bool ok = false;
  std::optional<NotBl4Reason> reason;
};

// Membership criterion on the presentation parameters: the algebra belongs to
// the classified family iff
//   (1) x11 != 0 and the first row (X(0,0), X(0,1)) of X is nonzero, or
//   (2) x11 = 0, the first row of X is zero, and X(1,1) != 0.
// When x11 = 0, the first row is zero, and X(1,1) = 0, the algebra splits:
// e0 - (X(1,0)/xi3) e1 spans a complement with all cross products zero, so the
// reason is Decomposable. When x11 = 0 but the first row is nonzero, the
// derived subalgebra is 2-dimensional and no flag exists.
Bl4Check is_bl4(const Bl4Presentation& p);

struct Normalization {
  Bl4Presentation normalized;  // same x11, xi3 = 1
  Mat4 witness;                // maps the normalized algebra onto the input one
};

// Rescales e3 by xi3 so that e1 e2 = e3. The witness is diag(1, 1, 1, xi3);
// X keeps its diagonal while the off-diagonal entries pick up the conjugation
// X(0,1) -> xi3 X(0,1), X(1,0) -> X(1,0)/xi3. (Rescaling e2 and e3 by the
// SAME factor never changes the e1 e2 coefficient, so the correct move is the
// lone e3 rescale.) The witness satisfies
// is_isomorphism(input constants, normalized constants, witness).
Normalization normalize_xi3(const Bl4Presentation& p);

// Flag-preserving invertible maps: matrices of the shape
//   [ u0  0   0   0 ]
//   [ u1  p1  q1  0 ]
//   [ u2  p2  q2  0 ]
//   [ u3  p3  q3  r3 ]
// with u0 != 0, r3 != 0 and invertible middle block P = [[p1,q1],[p2,q2]].
// The subclass with r3 = det P additionally fixes the e1 e2 = e3 coefficient.
struct WeakIso {
  Rational u0;
  std::array<Rational, 3> u;  // (u1, u2, u3)
  Mat2 P;
  Vec2 pq3;  // (p3, q3)
  Rational r3;
};

// Throws std::invalid_argument when the shape constraints fail.
void validate(const WeakIso& w);

WeakIso identity_weak_iso();
Mat4 weak_iso_matrix(const WeakIso& w);
std::optional<WeakIso> weak_iso_from_matrix(const Mat4& m);
WeakIso compose(const WeakIso& a, const WeakIso& b);
WeakIso invert(const WeakIso& w);
bool is_xi3_preserving(const WeakIso& w);

// The isomorphism criterion as a 3x3 matrix identity, for presentations with
// xi3 = 1 and a weak iso with r3 = det P. Equivalent to the oracle
// is_isomorphism(to_structure_constants(pA), to_structure_constants(pB),
// weak_iso_matrix(w)); pB plays the transformed ("hatted") side. u3 and r3
// drop out of the identity: the product pairs involving e3 match
// automatically on both sides.
bool iso_condition_holds(const Bl4Presentation& pA, const Bl4Presentation& pB,
                         const WeakIso& w);

struct Extraction {
  bool ok = false;
  Bl4Presentation presentation;  // set when ok
  Mat4 basis;                    // columns = distinguished basis; set when ok
  NotBl4Reason reason{};         // set when !ok
};

// Finds a distinguished basis for raw antisymmetric structure constants and
// reads off the presentation, or reports a structured failure. Deterministic:
// the same input always yields the same basis. On success,
// is_isomorphism(sc, to_structure_constants(presentation), basis) holds.
Extraction extract_presentation(const StructureConstants& sc);

}  // namespace bl4
