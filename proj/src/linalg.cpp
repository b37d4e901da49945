#include "bl4/linalg.hpp"

#include <stdexcept>

namespace bl4 {

Mat2 Mat2::identity() { return diagonal(1, 1); }

Mat2 Mat2::diagonal(const Rational& a, const Rational& b) {
  Mat2 r;
  r(0, 0) = a;
  r(1, 1) = b;
  return r;
}

Mat3 Mat3::identity() {
  Mat3 r;
  for (int i = 0; i < 3; ++i) r(i, i) = 1;
  return r;
}

Mat4 Mat4::identity() { return diagonal(1, 1, 1, 1); }

Mat4 Mat4::diagonal(const Rational& a, const Rational& b, const Rational& c,
                    const Rational& d) {
  Mat4 r;
  r(0, 0) = a;
  r(1, 1) = b;
  r(2, 2) = c;
  r(3, 3) = d;
  return r;
}

Rational det(const Mat2& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }

Rational det(const Mat3& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

Rational det(const Mat4& a) {
  // Laplace expansion along the first row; 4x4 is small enough that fraction-
  // free elimination buys nothing.
  Rational d = 0;
  for (int c = 0; c < 4; ++c) {
    if (a(0, c).is_zero()) continue;
    Mat3 minor;
    for (int i = 1; i < 4; ++i) {
      int jj = 0;
      for (int j = 0; j < 4; ++j) {
        if (j == c) continue;
        minor(i - 1, jj++) = a(i, j);
      }
    }
    Rational term = a(0, c) * det(minor);
    d = (c % 2 == 0) ? d + term : d - term;
  }
  return d;
}

Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) r(i, j) += a(i, k) * b(k, j);
  return r;
}

Mat3 mul(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r(i, j) += a(i, k) * b(k, j);
  return r;
}

Mat4 mul(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) r(i, j) += a(i, k) * b(k, j);
  return r;
}

Vec2 mul(const Mat2& a, const Vec2& v) {
  return {a(0, 0) * v[0] + a(0, 1) * v[1], a(1, 0) * v[0] + a(1, 1) * v[1]};
}

Vec4 mul(const Mat4& a, const Vec4& v) {
  Vec4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += a(i, j) * v[j];
  return r;
}

Mat2 inverse(const Mat2& a) {
  Rational d = det(a);
  if (d.is_zero()) throw std::domain_error("inverse: singular 2x2 matrix");
  Mat2 r;
  r(0, 0) = a(1, 1) / d;
  r(0, 1) = -a(0, 1) / d;
  r(1, 0) = -a(1, 0) / d;
  r(1, 1) = a(0, 0) / d;
  return r;
}

Mat4 inverse(const Mat4& a) {
  // Gauss-Jordan with exact pivoting (any nonzero pivot works over Q).
  Mat4 left = a;
  Mat4 right = Mat4::identity();
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    for (int r = col; r < 4; ++r) {
      if (!left(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw std::domain_error("inverse: singular 4x4 matrix");
    if (pivot != col) {
      std::swap(left.m[pivot], left.m[col]);
      std::swap(right.m[pivot], right.m[col]);
    }
    Rational p = left(col, col);
    for (int j = 0; j < 4; ++j) {
      left(col, j) /= p;
      right(col, j) /= p;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col || left(r, col).is_zero()) continue;
      Rational f = left(r, col);
      for (int j = 0; j < 4; ++j) {
        left(r, j) -= f * left(col, j);
        right(r, j) -= f * right(col, j);
      }
    }
  }
  return right;
}

Vec4 add(const Vec4& a, const Vec4& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

Vec4 sub(const Vec4& a, const Vec4& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

Vec4 scale(const Rational& c, const Vec4& v) {
  return {c * v[0], c * v[1], c * v[2], c * v[3]};
}

bool is_zero(const Vec4& v) {
  return v[0].is_zero() && v[1].is_zero() && v[2].is_zero() && v[3].is_zero();
}

Vec4 zero_vec4() { return Vec4{}; }

Vec4 basis_vec4(int i) {
  Vec4 v{};
  v[i] = 1;
  return v;
}

namespace {

// Reduced row echelon form in place; returns the rank.
int rref(std::vector<Vec4>& rows) {
  int rank = 0;
  for (int col = 0; col < 4 && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (!rows[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[pivot], rows[rank]);
    Rational p = rows[rank][col];
    for (int j = 0; j < 4; ++j) rows[rank][j] /= p;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Rational f = rows[r][col];
      for (int j = 0; j < 4; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  rows.resize(rank);
  return rank;
}

}  // namespace

bool Subspace::contains(const Vec4& v) const {
  Vec4 r = v;
  for (const Vec4& b : basis) {
    int lead = 0;
    while (lead < 4 && b[lead].is_zero()) ++lead;
    if (lead < 4 && !r[lead].is_zero()) {
      Rational f = r[lead];
      for (int j = 0; j < 4; ++j) r[j] -= f * b[j];
    }
  }
  return is_zero(r);
}

Subspace span(const std::vector<Vec4>& vectors) {
  std::vector<Vec4> rows;
  for (const Vec4& v : vectors)
    if (!is_zero(v)) rows.push_back(v);
  rref(rows);
  return Subspace{std::move(rows)};
}

std::optional<std::vector<Rational>> coordinates_in(const std::vector<Vec4>& basis,
                                                    const Vec4& v) {
  // Solve the 4 x n system column by column; n <= 4 here.
  int n = static_cast<int>(basis.size());
  std::vector<std::array<Rational, 5>> rows(4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < n; ++j) rows[i][j] = basis[j][i];
    rows[i][4] = v[i];
  }
  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < n && rank < 4; ++col) {
    int pivot = -1;
    for (int r = rank; r < 4; ++r) {
      if (!rows[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[pivot], rows[rank]);
    Rational p = rows[rank][col];
    for (int j = 0; j <= 4; ++j) rows[rank][j] /= p;
    for (int r = 0; r < 4; ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Rational f = rows[r][col];
      for (int j = 0; j <= 4; ++j) rows[r][j] -= f * rows[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  // Inconsistent iff some zero row has nonzero right-hand side.
  for (int r = rank; r < 4; ++r)
    if (!rows[r][4].is_zero()) return std::nullopt;
  if (rank < n) return std::nullopt;  // basis was not independent
  std::vector<Rational> coords(n);
  for (int r = 0; r < rank; ++r) coords[pivot_col[r]] = rows[r][4];
  return coords;
}

Subspace kernel(const Mat4& a) {
  std::vector<Vec4> rows(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rows[i][j] = a(i, j);
  int rank = rref(rows);
  std::vector<int> pivots;
  for (const Vec4& row : rows) {
    int lead = 0;
    while (lead < 4 && row[lead].is_zero()) ++lead;
    pivots.push_back(lead);
  }
  std::vector<Vec4> result;
  for (int free = 0; free < 4; ++free) {
    bool is_pivot = false;
    for (int p : pivots)
      if (p == free) is_pivot = true;
    if (is_pivot) continue;
    Vec4 v{};
    v[free] = 1;
    for (int r = 0; r < rank; ++r) v[pivots[r]] = -rows[r][free];
    result.push_back(v);
  }
  return span(result);
}

}  // namespace bl4
