#include "bl4/normal_form.hpp"

namespace bl4 {

std::string label_string(const CanonicalLabel& l) {
  switch (l.kind) {
    case CanonicalLabel::Kind::A0: return "A0";
    case CanonicalLabel::Kind::A1: return "A1";
    case CanonicalLabel::Kind::B: return "B(" + l.lambda.str() + ")";
    case CanonicalLabel::Kind::C: return "C(" + l.lambda.str() + ")";
    case CanonicalLabel::Kind::D:
      return "D(" + l.lambda.str() + "," + l.mu.str() + ")";
  }
  return "?";
}

void validate(const CanonicalLabel& l) {
  if (l.kind != CanonicalLabel::Kind::D) return;
  if (l.mu.is_zero() || l.mu == Rational(1))
    throw std::invalid_argument("label: D requires mu outside {0, 1}");
  if (l.lambda.is_zero() && l.mu == Rational(-1))
    throw std::invalid_argument("label: D(0,-1) is the A1 family");
}

Bl4Presentation canonical_presentation(const CanonicalLabel& l) {
  validate(l);
  Bl4Presentation p;
  p.xi3 = 1;
  switch (l.kind) {
    case CanonicalLabel::Kind::A0:
      p.x11 = 0;
      p.X = Mat2::diagonal(0, 1);
      break;
    case CanonicalLabel::Kind::A1:
      p.x11 = 1;
      p.X = Mat2::diagonal(-1, 0);
      break;
    case CanonicalLabel::Kind::B:
      p.x11 = 1;
      p.X = Mat2::diagonal(l.lambda, 0);
      p.X(0, 1) = 1;
      break;
    case CanonicalLabel::Kind::C:
      p.x11 = 1;
      p.X = Mat2::diagonal(1, l.lambda);
      break;
    case CanonicalLabel::Kind::D:
      p.x11 = 1;
      p.X = Mat2::diagonal(l.mu, l.lambda);
      break;
  }
  return p;
}

StructureConstants canonical_structure_constants(const CanonicalLabel& l) {
  return to_structure_constants(canonical_presentation(l));
}

namespace {

void push_step(WitnessChain& chain, const std::string& tag, const Mat4& m) {
  chain.steps.push_back({tag, m});
  chain.product = mul(chain.product, m);
}

// The lower-triangular shear [[u0,0,0,0],[u1,1,0,0],[0,0,1,0],[0,0,0,1]].
Mat4 shear_matrix(const Rational& u0, const Rational& u1) {
  Mat4 m = Mat4::identity();
  m(0, 0) = u0;
  m(1, 0) = u1;
  return m;
}

}  // namespace

Reduction reduce_direct(const Bl4Presentation& input) {
  Bl4Check check = is_bl4(input);
  if (!check.ok) throw NotBl4Error(*check.reason);

  Reduction red;
  Bl4Presentation q = input;
  if (q.xi3 != Rational(1)) {
    Normalization n = normalize_xi3(q);
    push_step(red.chain, "normalize-e3-scale", n.witness);
    q = n.normalized;
  }

  const Rational& x11 = q.x11;
  const Rational& x22 = q.X(0, 0);
  const Rational& x32 = q.X(0, 1);
  const Rational& x23 = q.X(1, 0);
  const Rational& x33 = q.X(1, 1);

  if (x11.is_zero()) {
    // Nilpotent e0-action: first row of X is zero and x33 != 0. Rescale e0 by
    // 1/x33 and shear away the lone off-diagonal entry.
    push_step(red.chain, "reduce-nilpotent-action",
              shear_matrix(x33.inverse(), -x23 / x33));
    red.label = {CanonicalLabel::Kind::A0, 0, 0};
  } else if (x32.is_zero()) {
    // X is lower triangular with nonzero x22; e0-rescale plus shear
    // diagonalizes the action to diag(1, mu, lambda).
    push_step(red.chain, "reduce-diagonal-action",
              shear_matrix(x11.inverse(), -x23 / x11));
    Rational mu = x22 / x11;
    Rational lambda = x33 / x11;
    if (lambda.is_zero() && mu == Rational(-1))
      red.label = {CanonicalLabel::Kind::A1, 0, 0};
    else if (mu == Rational(1))
      red.label = {CanonicalLabel::Kind::C, lambda, 0};
    else
      red.label = {CanonicalLabel::Kind::D, lambda, mu};
  } else {
    // x11 != 0 and x32 != 0: the action is conjugate to the shear family with
    // parameter (x22 + x33)/x11 (the trace of X over x11).
    Mat4 m;
    m(0, 0) = x11.inverse();
    m(1, 0) = x33 * x22 / (x32 * x11) - x23 / x11;
    m(1, 1) = x11 / x32;
    m(2, 2) = x32;
    m(3, 2) = x33;
    m(3, 3) = x11;
    push_step(red.chain, "reduce-to-shear", m);
    red.label = {CanonicalLabel::Kind::B, (x22 + x33) / x11, 0};
  }

  if (!is_isomorphism(to_structure_constants(input),
                      canonical_structure_constants(red.label),
                      red.chain.product))
    throw std::logic_error("reduce_direct: witness failed verification");
  return red;
}

Reduction canonical_label(const Bl4Presentation& p) {
  Reduction red = reduce_direct(p);
  if (red.label.kind == CanonicalLabel::Kind::D) {
    const Rational& lambda = red.label.lambda;
    const Rational& mu = red.label.mu;
    auto current = std::make_pair(mu, lambda);
    auto paired = std::make_pair(mu.inverse(), lambda / mu);
    if (paired < current) {
      // Swap the e1 and e2 roles: maps the paired canonical algebra onto the
      // current one.
      Mat4 swap;
      swap(0, 0) = mu.inverse();
      swap(1, 2) = 1;
      swap(2, 1) = 1;
      swap(3, 3) = -1;
      push_step(red.chain, "opposite-swap", swap);
      red.label = {CanonicalLabel::Kind::D, paired.second, paired.first};
      if (!is_isomorphism(to_structure_constants(p),
                          canonical_structure_constants(red.label),
                          red.chain.product))
        throw std::logic_error("canonical_label: witness failed verification");
    }
  }
  return red;
}

IsoResult are_isomorphic(const Bl4Presentation& pA, const Bl4Presentation& pB) {
  Reduction ra = canonical_label(pA);
  Reduction rb = canonical_label(pB);
  IsoResult result;
  result.label_a = ra.label;
  result.label_b = rb.label;
  if (ra.label != rb.label) return result;
  result.isomorphic = true;
  result.witness = mul(ra.chain.product, inverse(rb.chain.product));
  if (!is_isomorphism(to_structure_constants(pA), to_structure_constants(pB),
                      result.witness))
    throw std::logic_error("are_isomorphic: witness failed verification");
  return result;
}

PropertyTriple property_table(const CanonicalLabel& l) {
  validate(l);
  switch (l.kind) {
    case CanonicalLabel::Kind::A0: return {false, false, true};
    case CanonicalLabel::Kind::A1: return {true, true, true};
    case CanonicalLabel::Kind::B: return {false, false, false};
    case CanonicalLabel::Kind::C: {
      bool lie = l.lambda == Rational(2);
      bool malcev = lie || l.lambda == Rational(-1);
      return {lie, malcev, true};
    }
    case CanonicalLabel::Kind::D: {
      bool lie = l.lambda == l.mu + Rational(1);
      return {lie, lie, lie};
    }
  }
  return {};
}

ClassifyResult classify_presentation(const Bl4Presentation& p) {
  ClassifyResult r;
  Bl4Check check = is_bl4(p);
  if (!check.ok) {
    r.reason = *check.reason;
    return r;
  }
  Reduction red = canonical_label(p);
  r.ok = true;
  r.label = red.label;
  r.witness = red.chain.product;
  return r;
}

ClassifyResult classify_constants(const StructureConstants& sc) {
  ClassifyResult r;
  Extraction ex = extract_presentation(sc);
  if (!ex.ok) {
    r.reason = ex.reason;
    return r;
  }
  Reduction red = canonical_label(ex.presentation);
  r.ok = true;
  r.label = red.label;
  // basis maps presentation coordinates onto the input; the chain product
  // maps the canonical algebra onto presentation coordinates.
  r.witness = mul(ex.basis, red.chain.product);
  if (!is_isomorphism(sc, canonical_structure_constants(r.label), r.witness))
    throw std::logic_error("classify_constants: witness failed verification");
  return r;
}

}  // namespace bl4
