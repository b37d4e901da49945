#include "bl4/algebra.hpp"

#include <stdexcept>

namespace bl4 {

void StructureConstants::set_product(int i, int j, const Vec4& v) {
  if (i == j) {
    if (!bl4::is_zero(v))
      throw std::invalid_argument("structure constants: e_i e_i must be zero");
    return;
  }
  c[i][j] = v;
  c[j][i] = scale(-1, v);
}

Vec4 multiply(const StructureConstants& sc, const Vec4& x, const Vec4& y) {
  if (sc.dim != 4)
    throw std::invalid_argument("multiply: dimension mismatch (need 4)");
  Vec4 r{};
  // Antisymmetry lets the sum run over i < j with the off-diagonal factor
  // (x_i y_j - x_j y_i).
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      Rational f = x[i] * y[j] - x[j] * y[i];
      if (f.is_zero()) continue;
      const Vec4& cij = sc.c[i][j];
      for (int k = 0; k < 4; ++k) r[k] += f * cij[k];
    }
  }
  return r;
}

Vec4 jacobian(const StructureConstants& sc, const Vec4& x, const Vec4& y,
              const Vec4& z) {
  Vec4 xy = multiply(sc, x, y);
  Vec4 zx = multiply(sc, z, x);
  Vec4 yz = multiply(sc, y, z);
  return add(multiply(sc, xy, z), add(multiply(sc, zx, y), multiply(sc, yz, x)));
}

bool is_lie(const StructureConstants& sc) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k)
        if (!bl4::is_zero(jacobian(sc, basis_vec4(i), basis_vec4(j), basis_vec4(k))))
          return false;
  return true;
}

namespace {

// Enumerates {0,...,radix-1}^4 in odometer order with coordinate 0 fastest.
bool next_grid_point(Vec4& v, int radix) {
  for (int i = 0; i < 4; ++i) {
    if (v[i] < radix - 1) {
      v[i] += 1;
      for (int j = 0; j < i; ++j) v[j] = 0;
      return true;
    }
  }
  return false;
}

}  // namespace

BinaryLieResult is_binary_lie(const StructureConstants& sc) {
  if (sc.dim != 4)
    throw std::invalid_argument("is_binary_lie: unsupported dimension");
  Vec4 x{};
  do {
    Vec4 y{};
    do {
      Vec4 xy = multiply(sc, x, y);
      if (!bl4::is_zero(jacobian(sc, x, y, xy)))
        return {false, std::make_pair(x, y)};
    } while (next_grid_point(y, 3));
  } while (next_grid_point(x, 3));
  return {true, std::nullopt};
}

MalcevResult is_malcev(const StructureConstants& sc) {
  if (sc.dim != 4)
    throw std::invalid_argument("is_malcev: unsupported dimension");
  Vec4 x{};
  do {
    Vec4 y{};
    do {
      Vec4 z{};
      do {
        Vec4 xy = multiply(sc, x, y);
        Vec4 xz = multiply(sc, x, z);
        Vec4 yz = multiply(sc, y, z);
        Vec4 zx = multiply(sc, z, x);
        Vec4 lhs = multiply(sc, xy, xz);
        Vec4 rhs = add(multiply(sc, multiply(sc, xy, z), x),
                       add(multiply(sc, multiply(sc, yz, x), x),
                           multiply(sc, multiply(sc, zx, x), y)));
        if (lhs != rhs) return {false, std::array<Vec4, 3>{x, y, z}};
      } while (next_grid_point(z, 2));
    } while (next_grid_point(y, 2));
  } while (next_grid_point(x, 3));
  return {true, std::nullopt};
}

Subspace derived_subalgebra(const StructureConstants& sc) {
  std::vector<Vec4> products;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) products.push_back(sc.product(i, j));
  return span(products);
}

StructureConstants apply_basis_change(const StructureConstants& sc, const Mat4& m) {
  Mat4 minv = inverse(m);  // throws on singular input
  StructureConstants out;
  for (int i = 0; i < 4; ++i) {
    Vec4 mi = mul(m, basis_vec4(i));
    for (int j = i + 1; j < 4; ++j) {
      Vec4 mj = mul(m, basis_vec4(j));
      out.set_product(i, j, mul(minv, multiply(sc, mi, mj)));
    }
  }
  return out;
}

bool is_isomorphism(const StructureConstants& scA, const StructureConstants& scB,
                    const Mat4& m) {
  if (det(m).is_zero())
    throw std::domain_error("is_isomorphism: singular matrix");
  for (int i = 0; i < 4; ++i) {
    Vec4 mi = mul(m, basis_vec4(i));
    for (int j = i + 1; j < 4; ++j) {
      Vec4 mj = mul(m, basis_vec4(j));
      if (mul(m, scB.product(i, j)) != multiply(scA, mi, mj)) return false;
    }
  }
  return true;
}

}  // namespace bl4
