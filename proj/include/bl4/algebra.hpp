// Anti-commutative algebras on K^4 given by structure constants, with the
// multiplication, the Jacobian map, identity predicates decided by exact grid
// evaluation, and the change-of-basis action.
#pragma once

#include <optional>

#include "bl4/linalg.hpp"

namespace bl4 {

// e_i e_j = sum_k c[i][j][k] e_k with c antisymmetric in (i, j). Entries are
// stored dense (64 rationals at dimension 4); antisymmetry is enforced by the
// write path, never assumed of callers.
struct StructureConstants {
  int dim = 4;
  std::array<std::array<Vec4, 4>, 4> c{};

  static StructureConstants zero() { return {}; }

  const Vec4& product(int i, int j) const { return c[i][j]; }

  // Sets e_i e_j = v and e_j e_i = -v. Diagonal writes must be zero.
  void set_product(int i, int j, const Vec4& v);

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;
};

Vec4 multiply(const StructureConstants& sc, const Vec4& x, const Vec4& y);

// J(x,y,z) = xy.z + zx.y + yz.x; alternating, vanishes identically exactly on
// Lie algebras.
Vec4 jacobian(const StructureConstants& sc, const Vec4& x, const Vec4& y,
              const Vec4& z);

// True iff J vanishes on every basis triple i < j < k (enough by
// trilinearity and the alternating property).
bool is_lie(const StructureConstants& sc);

struct BinaryLieResult {
  bool holds = false;
  // A grid pair with nonzero defect J(x, y, xy) when the identity fails.
  std::optional<std::pair<Vec4, Vec4>> witness;
};

// Decides J(x,y,xy) = 0 for all x,y. The defect is a polynomial of degree
// at most 2 in each of the 8 coordinates, so vanishing on the grid
// x, y in {0,1,2}^4 (3 points per coordinate) over a characteristic-zero
// field forces identical vanishing.
BinaryLieResult is_binary_lie(const StructureConstants& sc);

struct MalcevResult {
  bool holds = false;
  // A grid triple violating the identity when it fails.
  std::optional<std::array<Vec4, 3>> witness;
};

// Decides xy.xz = (xy.z)x + (yz.x)x + (zx.x)y for all x,y,z. Degree at most 2
// in each x-coordinate and 1 in each y-, z-coordinate, so the grid
// x in {0,1,2}^4, y, z in {0,1}^4 is decisive.
MalcevResult is_malcev(const StructureConstants& sc);

// Echelon span of { e_i e_j : i < j }.
Subspace derived_subalgebra(const StructureConstants& sc);

// Pull-back of the multiplication along M: the returned constants satisfy
// new_multiply(x, y) = M^{-1} multiply(Mx, My). Throws on singular M.
StructureConstants apply_basis_change(const StructureConstants& sc, const Mat4& m);

// Ground-truth witness oracle: true iff M carries the scB-multiplication to
// the scA-multiplication, i.e. M(e_i *_B e_j) = (M e_i) *_A (M e_j) for all
// basis pairs. Equivalently apply_basis_change(scA, M) == scB. Throws on
// singular M.
bool is_isomorphism(const StructureConstants& scA, const StructureConstants& scB,
                    const Mat4& m);

}  // namespace bl4
