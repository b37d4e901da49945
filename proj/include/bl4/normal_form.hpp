// Reduction of presentations to the five canonical families, isomorphism
// decisions with explicit verified witnesses, and the per-family identity
// table.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bl4/presentation.hpp"

namespace bl4 {

// The classification output: one of the five canonical families.
//   A0: e1 e2 = e3, e0 e3 = e3
//   A1: e1 e2 = e3, e0 e1 = e1, e0 e2 = -e2
//   B(lambda): e1 e2 = e3, e0 e1 = e1, e0 e2 = lambda e2, e0 e3 = e2
//   C(lambda): e1 e2 = e3, e0 e1 = e1, e0 e2 = e2, e0 e3 = lambda e3
//   D(lambda, mu): e1 e2 = e3, e0 e1 = e1, e0 e2 = mu e2, e0 e3 = lambda e3,
//                  with mu not in {0, 1} and (lambda, mu) != (0, -1).
// D-labels come in isomorphic pairs {(lambda, mu), (lambda/mu, 1/mu)}; the
// canonical representative minimizes (mu, lambda) lexicographically.
struct CanonicalLabel {
  enum class Kind { A0, A1, B, C, D };
  Kind kind = Kind::A0;
  Rational lambda;  // B, C, D
  Rational mu;      // D only

  friend bool operator==(const CanonicalLabel&, const CanonicalLabel&) = default;
};

std::string label_string(const CanonicalLabel& l);

// Throws std::invalid_argument when the D-constraints are violated.
void validate(const CanonicalLabel& l);

Bl4Presentation canonical_presentation(const CanonicalLabel& l);
StructureConstants canonical_structure_constants(const CanonicalLabel& l);

// A reduction is recorded as the list of basis-change matrices applied, in
// pipeline order. Each step maps the LATER stage's algebra onto the EARLIER
// stage's algebra, so the ordered product maps the final (canonical) algebra
// onto the original input:
//   is_isomorphism(input constants, canonical constants, product) == true.
struct WitnessStep {
  std::string tag;
  Mat4 matrix;
};

struct WitnessChain {
  std::vector<WitnessStep> steps;
  Mat4 product = Mat4::identity();
};

struct Reduction {
  CanonicalLabel label;
  WitnessChain chain;
};

// Thrown when an algebra outside the classified family enters the pipeline.
struct NotBl4Error : std::runtime_error {
  NotBl4Reason reason;
  explicit NotBl4Error(NotBl4Reason r)
      : std::runtime_error("not in the classified family: " + reason_string(r)),
        reason(r) {}
};

// Normalizes xi3, then reduces by the direct (flag-diagonal) moves only; the
// label identifies the direct-isomorphism class. Throws NotBl4Error when the
// membership criterion fails.
Reduction reduce_direct(const Bl4Presentation& p);

// reduce_direct plus the opposite-pair tie-break for D-labels: when
// (1/mu, lambda/mu) precedes (mu, lambda) lexicographically, compose with the
// swap witness [[1/mu,0,0,0],[0,0,1,0],[0,1,0,0],[0,0,0,-1]] and relabel to
// D(lambda/mu, 1/mu). The result is a full-isomorphism invariant.
Reduction canonical_label(const Bl4Presentation& p);

struct IsoResult {
  bool isomorphic = false;
  Mat4 witness;  // maps the second algebra onto the first; set when isomorphic
  CanonicalLabel label_a;
  CanonicalLabel label_b;
};

// Decides isomorphism via canonical labels; equal labels yield the verified
// witness chainA.product * (chainB.product)^{-1}.
IsoResult are_isomorphic(const Bl4Presentation& pA, const Bl4Presentation& pB);

struct PropertyTriple {
  bool lie = false;
  bool malcev = false;
  bool binary_lie = false;

  friend bool operator==(const PropertyTriple&, const PropertyTriple&) = default;
};

// Closed-form identity table per canonical family:
//   A0 (F,F,T); A1 (T,T,T); B (F,F,F);
//   C(lambda): lie iff lambda = 2, malcev iff lambda in {-1, 2}, binary-lie
//   always; D(lambda, mu): all three iff lambda = mu + 1.
// Cross-checked against the grid predicates in the test suites.
PropertyTriple property_table(const CanonicalLabel& l);

struct ClassifyResult {
  bool ok = false;
  CanonicalLabel label;   // set when ok
  Mat4 witness;           // maps canonical constants onto the input; when ok
  NotBl4Reason reason{};  // set when !ok
};

ClassifyResult classify_presentation(const Bl4Presentation& p);
ClassifyResult classify_constants(const StructureConstants& sc);

}  // namespace bl4
