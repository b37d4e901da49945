// Fixed-size exact linear algebra: vectors, 2x2/3x3/4x4 matrices, echelon
// subspaces of the ambient 4-dimensional space.
#pragma once

#include <array>
#include <vector>

#include "bl4/rational.hpp"

namespace bl4 {

using Vec2 = std::array<Rational, 2>;
using Vec4 = std::array<Rational, 4>;

struct Mat2 {
  // m[row][col]
  std::array<std::array<Rational, 2>, 2> m{};

  static Mat2 identity();
  static Mat2 diagonal(const Rational& a, const Rational& b);
  Rational& operator()(int r, int c) { return m[r][c]; }
  const Rational& operator()(int r, int c) const { return m[r][c]; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

struct Mat3 {
  std::array<std::array<Rational, 3>, 3> m{};

  static Mat3 identity();
  Rational& operator()(int r, int c) { return m[r][c]; }
  const Rational& operator()(int r, int c) const { return m[r][c]; }
  friend bool operator==(const Mat3&, const Mat3&) = default;
};

struct Mat4 {
  std::array<std::array<Rational, 4>, 4> m{};

  static Mat4 identity();
  static Mat4 diagonal(const Rational& a, const Rational& b, const Rational& c,
                       const Rational& d);
  Rational& operator()(int r, int c) { return m[r][c]; }
  const Rational& operator()(int r, int c) const { return m[r][c]; }
  friend bool operator==(const Mat4&, const Mat4&) = default;
};

Rational det(const Mat2& a);
Rational det(const Mat3& a);
Rational det(const Mat4& a);

Mat2 mul(const Mat2& a, const Mat2& b);
Mat3 mul(const Mat3& a, const Mat3& b);
Mat4 mul(const Mat4& a, const Mat4& b);

Vec2 mul(const Mat2& a, const Vec2& v);
Vec4 mul(const Mat4& a, const Vec4& v);

// Throw std::domain_error on a singular argument.
Mat2 inverse(const Mat2& a);
Mat4 inverse(const Mat4& a);

Vec4 add(const Vec4& a, const Vec4& b);
Vec4 sub(const Vec4& a, const Vec4& b);
Vec4 scale(const Rational& c, const Vec4& v);
bool is_zero(const Vec4& v);
Vec4 zero_vec4();
Vec4 basis_vec4(int i);

// A subspace of the 4-dimensional column space, stored as its unique reduced
// row-echelon basis (leading coefficient 1), so equality of subspaces is
// equality of the stored data.
struct Subspace {
  std::vector<Vec4> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  bool contains(const Vec4& v) const;
  friend bool operator==(const Subspace&, const Subspace&) = default;
};

Subspace span(const std::vector<Vec4>& vectors);

// Coordinates of v in the given (independent) spanning set, if v lies in its
// span: solves sum_i coords[i] * basis[i] = v exactly.
std::optional<std::vector<Rational>> coordinates_in(const std::vector<Vec4>& basis,
                                                    const Vec4& v);

// Basis of {x : Mx = 0}, in reduced echelon form.
Subspace kernel(const Mat4& a);

}  // namespace bl4
