#include "bl4/presentation.hpp"

#include <stdexcept>

namespace bl4 {

StructureConstants to_structure_constants(const Bl4Presentation& p) {
  if (p.xi3.is_zero())
    throw std::invalid_argument("presentation: xi3 must be nonzero");
  StructureConstants sc;
  sc.set_product(0, 1, {0, p.x11, 0, 0});
  sc.set_product(0, 2, {0, 0, p.X(0, 0), p.X(1, 0)});
  sc.set_product(0, 3, {0, 0, p.X(0, 1), p.X(1, 1)});
  sc.set_product(1, 2, {0, 0, 0, p.xi3});
  return sc;
}

std::string reason_string(NotBl4Reason r) {
  switch (r) {
    case NotBl4Reason::FirstRowVanishing: return "first-row-vanishing";
    case NotBl4Reason::Decomposable: return "decomposable";
    case NotBl4Reason::WrongDerivedDimension: return "wrong-derived-dimension";
    case NotBl4Reason::PNotNilpotent3Dim: return "p-not-nilpotent-3dim";
    case NotBl4Reason::NoRationalSplitting: return "no-rational-splitting";
  }
  return "unknown";
}

Bl4Check is_bl4(const Bl4Presentation& p) {
  if (p.xi3.is_zero())
    throw std::invalid_argument("is_bl4: xi3 must be nonzero");
  bool first_row_zero = p.X(0, 0).is_zero() && p.X(0, 1).is_zero();
  if (!p.x11.is_zero()) {
    if (!first_row_zero) return {true, std::nullopt};
    return {false, NotBl4Reason::FirstRowVanishing};
  }
  if (!first_row_zero) {
    // e0 acts nilpotently on the flag quotient yet moves the e2-line; the
    // derived subalgebra comes out 2-dimensional and no flag exists.
    return {false, NotBl4Reason::WrongDerivedDimension};
  }
  if (!p.X(1, 1).is_zero()) return {true, std::nullopt};
  // x11 = 0, first row zero, X(1,1) = 0: pass to the basis e0' = e0 - a e1
  // with a = X(1,0)/xi3; then e0' e2 = X(1,0) e3 - a xi3 e3 = 0 and e0'
  // multiplies everything to zero, splitting off span(e0').
  return {false, NotBl4Reason::Decomposable};
}

Normalization normalize_xi3(const Bl4Presentation& p) {
  if (p.xi3.is_zero())
    throw std::invalid_argument("normalize_xi3: xi3 must be nonzero");
  Bl4Presentation out = p;
  out.xi3 = 1;
  out.X(0, 1) = p.xi3 * p.X(0, 1);
  out.X(1, 0) = p.X(1, 0) / p.xi3;
  Mat4 witness = Mat4::diagonal(1, 1, 1, p.xi3);
  return {out, witness};
}

void validate(const WeakIso& w) {
  if (w.u0.is_zero())
    throw std::invalid_argument("weak iso: u0 must be nonzero");
  if (w.r3.is_zero())
    throw std::invalid_argument("weak iso: r3 must be nonzero");
  if (det(w.P).is_zero())
    throw std::invalid_argument("weak iso: middle block must be invertible");
}

WeakIso identity_weak_iso() {
  return {1, {0, 0, 0}, Mat2::identity(), {0, 0}, 1};
}

Mat4 weak_iso_matrix(const WeakIso& w) {
  validate(w);
  Mat4 m;
  m(0, 0) = w.u0;
  m(1, 0) = w.u[0];
  m(2, 0) = w.u[1];
  m(3, 0) = w.u[2];
  m(1, 1) = w.P(0, 0);
  m(1, 2) = w.P(0, 1);
  m(2, 1) = w.P(1, 0);
  m(2, 2) = w.P(1, 1);
  m(3, 1) = w.pq3[0];
  m(3, 2) = w.pq3[1];
  m(3, 3) = w.r3;
  return m;
}

std::optional<WeakIso> weak_iso_from_matrix(const Mat4& m) {
  // Zero pattern first, then the nondegeneracy constraints.
  const int zero_positions[][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}};
  for (auto [r, c] : zero_positions)
    if (!m(r, c).is_zero()) return std::nullopt;
  WeakIso w;
  w.u0 = m(0, 0);
  w.u = {m(1, 0), m(2, 0), m(3, 0)};
  w.P(0, 0) = m(1, 1);
  w.P(0, 1) = m(1, 2);
  w.P(1, 0) = m(2, 1);
  w.P(1, 1) = m(2, 2);
  w.pq3 = {m(3, 1), m(3, 2)};
  w.r3 = m(3, 3);
  if (w.u0.is_zero() || w.r3.is_zero() || det(w.P).is_zero())
    return std::nullopt;
  return w;
}

WeakIso compose(const WeakIso& a, const WeakIso& b) {
  auto w = weak_iso_from_matrix(mul(weak_iso_matrix(a), weak_iso_matrix(b)));
  if (!w) throw std::logic_error("weak iso composition left the shape");
  return *w;
}

WeakIso invert(const WeakIso& w) {
  auto inv = weak_iso_from_matrix(inverse(weak_iso_matrix(w)));
  if (!inv) throw std::logic_error("weak iso inverse left the shape");
  return *inv;
}

bool is_xi3_preserving(const WeakIso& w) { return w.r3 == det(w.P); }

bool iso_condition_holds(const Bl4Presentation& pA, const Bl4Presentation& pB,
                         const WeakIso& w) {
  if (pA.xi3 != Rational(1) || pB.xi3 != Rational(1))
    throw std::invalid_argument("iso_condition_holds: presentations need xi3 = 1");
  validate(w);
  if (!is_xi3_preserving(w))
    throw std::invalid_argument("iso_condition_holds: weak iso must satisfy r3 = det P");

  const Rational &p1 = w.P(0, 0), &q1 = w.P(0, 1), &p2 = w.P(1, 0), &q2 = w.P(1, 1);
  const Rational &p3 = w.pq3[0], &q3 = w.pq3[1];
  const Rational &u0 = w.u0, &u1 = w.u[0], &u2 = w.u[1];
  Rational dp = det(w.P);

  const Rational &x11 = pA.x11, &hx11 = pB.x11;
  const Rational &x22 = pA.X(0, 0), &x32 = pA.X(0, 1), &x23 = pA.X(1, 0), &x33 = pA.X(1, 1);
  const Rational &hx22 = pB.X(0, 0), &hx32 = pB.X(0, 1), &hx23 = pB.X(1, 0), &hx33 = pB.X(1, 1);

  Mat3 lhs, rhs;
  lhs(0, 0) = p1 * hx11;
  lhs(0, 1) = q1 * hx22;
  lhs(0, 2) = q1 * hx32;
  lhs(1, 0) = p2 * hx11;
  lhs(1, 1) = q2 * hx22;
  lhs(1, 2) = q2 * hx32;
  lhs(2, 0) = p3 * hx11;
  lhs(2, 1) = q3 * hx22 + dp * hx23;
  lhs(2, 2) = q3 * hx32 + dp * hx33;

  rhs(0, 0) = u0 * p1 * x11;
  rhs(0, 1) = u0 * q1 * x11;
  rhs(0, 2) = 0;
  rhs(1, 0) = u0 * (x22 * p2 + x32 * p3);
  rhs(1, 1) = u0 * (x22 * q2 + x32 * q3);
  rhs(1, 2) = u0 * x32 * dp;
  rhs(2, 0) = u0 * (x23 * p2 + x33 * p3) + u1 * p2 - u2 * p1;
  rhs(2, 1) = u0 * (x23 * q2 + x33 * q3) + u1 * q2 - u2 * q1;
  rhs(2, 2) = u0 * x33 * dp;

  return lhs == rhs;
}

namespace {

// Normalizes a nonzero 2-vector so its first nonzero entry is 1.
Vec2 normalize_line(const Vec2& v) {
  if (!v[0].is_zero()) return {1, v[1] / v[0]};
  return {0, 1};
}

bool parallel(const Vec2& a, const Vec2& b) {
  return (a[0] * b[1] - a[1] * b[0]).is_zero();
}

bool is_zero2(const Vec2& v) { return v[0].is_zero() && v[1].is_zero(); }

struct LineChoice {
  Vec2 e1_line;  // quotient direction for the e1 role
  Vec2 e2_line;  // quotient direction for the e2 role
};

// Picks the ordered pair of invariant lines of the 2x2 quotient action.
// vq is the quotient image of the e3-product direction: when nonzero, the e2
// role is forced to its line (the middle flag member must be an ideal).
std::optional<LineChoice> choose_lines(const Mat2& lbar, const Vec2& vq) {
  Rational tr = lbar(0, 0) + lbar(1, 1);
  Rational dt = det(lbar);
  auto s = exact_sqrt(tr * tr - Rational(4) * dt);
  if (!s) return std::nullopt;  // irrational eigenvalues

  if (s->is_zero()) {
    // Double eigenvalue: either the action is scalar (every line invariant)
    // or it is a Jordan block with a single invariant line, which cannot
    // split off two distinct roles.
    Rational t0 = tr / Rational(2);
    bool scalar = lbar(0, 1).is_zero() && lbar(1, 0).is_zero() &&
                  lbar(0, 0) == t0 && lbar(1, 1) == t0;
    if (!scalar) return std::nullopt;
    if (!is_zero2(vq)) {
      Vec2 e2 = normalize_line(vq);
      Vec2 e1 = parallel(e2, Vec2{1, 0}) ? Vec2{0, 1} : Vec2{1, 0};
      return LineChoice{e1, e2};
    }
    return LineChoice{{1, 0}, {0, 1}};
  }

  Rational t_lo = (tr - *s) / Rational(2);
  Rational t_hi = (tr + *s) / Rational(2);
  auto eigenline = [&](const Rational& t) -> Vec2 {
    // Kernel direction of (lbar - t I), a rank-1 matrix.
    Rational a = lbar(0, 0) - t, b = lbar(0, 1);
    if (!a.is_zero() || !b.is_zero()) return normalize_line({b, -a});
    Rational c = lbar(1, 0), d = lbar(1, 1) - t;
    return normalize_line({d, -c});
  };
  Vec2 lo = eigenline(t_lo);
  Vec2 hi = eigenline(t_hi);

  if (!is_zero2(vq)) {
    // The e2 line must carry the e3-image AND be invariant, so vq has to be
    // one of the two eigenlines.
    if (parallel(vq, hi)) return LineChoice{lo, hi};
    if (parallel(vq, lo)) return LineChoice{hi, lo};
    return std::nullopt;
  }
  // Free choice; break the tie by (pivot position, eigenvalue).
  auto rank_of = [](const Vec2& v, const Rational& t) {
    int pivot = v[0].is_zero() ? 1 : 0;
    return std::make_pair(pivot, t);
  };
  if (rank_of(lo, t_lo) <= rank_of(hi, t_hi)) return LineChoice{lo, hi};
  return LineChoice{hi, lo};
}

Extraction fail(NotBl4Reason r) {
  Extraction e;
  e.ok = false;
  e.reason = r;
  return e;
}

}  // namespace

Extraction extract_presentation(const StructureConstants& sc) {
  if (sc.dim != 4)
    throw std::invalid_argument("extract_presentation: dimension must be 4");

  // Stage 1: locate the 3-dimensional ideal candidate p.
  Subspace derived = derived_subalgebra(sc);
  std::vector<Vec4> p_basis;
  if (derived.dim() == 3) {
    p_basis = derived.basis;
  } else if (derived.dim() == 1) {
    // p = annihilator of the derived line.
    const Vec4& gen = derived.basis[0];
    Mat4 action;
    for (int j = 0; j < 4; ++j) {
      Vec4 img = multiply(sc, basis_vec4(j), gen);
      for (int i = 0; i < 4; ++i) action(i, j) = img[i];
    }
    Subspace ann = kernel(action);
    if (ann.dim() == 4) {
      // The derived line is central; any complement of a 3-dimensional
      // subalgebra containing it splits off.
      return fail(NotBl4Reason::Decomposable);
    }
    if (ann.dim() != 3) return fail(NotBl4Reason::PNotNilpotent3Dim);
    p_basis = ann.basis;
  } else {
    return fail(NotBl4Reason::WrongDerivedDimension);
  }

  // Stage 2: p must be an ideal isomorphic to the nonabelian nilpotent
  // 3-dimensional algebra: dim p.p = 1 and (p.p).p = 0.
  Subspace p_space{p_basis};
  for (int i = 0; i < 4; ++i)
    for (const Vec4& b : p_basis)
      if (!p_space.contains(multiply(sc, basis_vec4(i), b)))
        return fail(NotBl4Reason::PNotNilpotent3Dim);
  std::vector<Vec4> inner_products;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      inner_products.push_back(multiply(sc, p_basis[i], p_basis[j]));
  Subspace pp = span(inner_products);
  if (pp.dim() != 1) return fail(NotBl4Reason::PNotNilpotent3Dim);
  Vec4 w = pp.basis[0];
  for (const Vec4& b : p_basis)
    if (!bl4::is_zero(multiply(sc, w, b)))
      return fail(NotBl4Reason::PNotNilpotent3Dim);
  if (derived.dim() == 1 && !(pp == derived))
    return fail(NotBl4Reason::PNotNilpotent3Dim);

  // Stage 3: first standard basis vector outside p becomes the e0 candidate;
  // split p as (lift plane) + span(w) for quotient coordinates.
  int i0 = 0;
  while (i0 < 4 && p_space.contains(basis_vec4(i0))) ++i0;
  Vec4 e0 = basis_vec4(i0);

  auto cw = coordinates_in(p_basis, w);
  if (!cw) throw std::logic_error("extract: derived line escaped its ideal");
  int drop = -1;
  for (int i = 2; i >= 0; --i) {
    if (!(*cw)[i].is_zero()) {
      drop = i;
      break;
    }
  }
  std::vector<Vec4> lift;
  for (int i = 0; i < 3; ++i)
    if (i != drop) lift.push_back(p_basis[i]);
  std::vector<Vec4> frame = {lift[0], lift[1], w};

  auto quotient_coords = [&](const Vec4& v) -> Vec2 {
    auto c = coordinates_in(frame, v);
    if (!c) throw std::logic_error("extract: vector outside the ideal frame");
    return {(*c)[0], (*c)[1]};
  };

  // Induced action of e0 on p/span(w), plus the quotient image of e0.w.
  Mat2 lbar;
  for (int j = 0; j < 2; ++j) {
    Vec2 col = quotient_coords(multiply(sc, e0, lift[j]));
    lbar(0, j) = col[0];
    lbar(1, j) = col[1];
  }
  Vec2 vq = quotient_coords(multiply(sc, e0, w));

  auto lines = choose_lines(lbar, vq);
  if (!lines) return fail(NotBl4Reason::NoRationalSplitting);

  Vec4 e1 = add(scale(lines->e1_line[0], lift[0]), scale(lines->e1_line[1], lift[1]));
  Vec4 e2 = add(scale(lines->e2_line[0], lift[0]), scale(lines->e2_line[1], lift[1]));
  Vec4 e3 = w;

  // Stage 4: correct e0 so that e0 e1 has no e3 component. e1 e2 spans
  // span(e3) (it generates p.p), so adding a multiple of e2 to e0 shifts the
  // e3 coefficient of e0 e1 freely.
  std::vector<Vec4> dist = {e1, e2, e3};
  auto in_dist = [&](const Vec4& v) {
    auto c = coordinates_in(dist, v);
    if (!c) throw std::logic_error("extract: product left the ideal");
    return *c;
  };
  auto xi_coords = in_dist(multiply(sc, e1, e2));
  if (!xi_coords[0].is_zero() || !xi_coords[1].is_zero() || xi_coords[2].is_zero())
    throw std::logic_error("extract: e1 e2 escaped the derived line");
  Rational xi = xi_coords[2];
  auto u_coords = in_dist(multiply(sc, e0, e1));
  e0 = add(e0, scale(u_coords[2] / xi, e2));

  // Stage 5: read off the parameters and verify the round trip.
  Mat4 basis;
  const Vec4 cols[4] = {e0, e1, e2, e3};
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) basis(i, j) = cols[j][i];

  StructureConstants in_basis = apply_basis_change(sc, basis);
  Bl4Presentation p;
  p.x11 = in_basis.c[0][1][1];
  p.xi3 = in_basis.c[1][2][3];
  p.X(0, 0) = in_basis.c[0][2][2];
  p.X(1, 0) = in_basis.c[0][2][3];
  p.X(0, 1) = in_basis.c[0][3][2];
  p.X(1, 1) = in_basis.c[0][3][3];
  if (p.xi3.is_zero() || in_basis != to_structure_constants(p))
    throw std::logic_error("extract: distinguished basis failed verification");

  // Every failure of the membership criterion is caught earlier: a vanishing
  // first row with x11 != 0 forces derived dimension 2, and the decomposable
  // corner forces a central derived line. Reaching this point with a non-
  // member would be a bug, not an input condition.
  if (!is_bl4(p).ok)
    throw std::logic_error("extract: read-off produced a non-member");

  Extraction result;
  result.ok = true;
  result.presentation = p;
  result.basis = basis;
  return result;
}

}  // namespace bl4
