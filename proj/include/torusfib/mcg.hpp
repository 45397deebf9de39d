#pragma once

// Mapping classes of the one-holed torus, represented faithfully as pairs
// (symplectic matrix, abelianization integer).
//
// The symplectic representation MCG -> SL(2,Z) has kernel generated by the
// boundary twist delta, which acts trivially on homology and abelianizes to
// 12; twists about non-separating curves abelianize to 1. Two products of
// generators are equal in the group iff both components agree: equal matrices
// force the quotient into <delta>, and delta^k has abelianization 12k, so the
// abelianization pins k = 0.

#include <stdexcept>
#include <utility>

#include "torusfib/lattice.hpp"

namespace torusfib {

// Row-major 2x2 integer matrix acting on column vectors (p, q).
struct Mat2 {
  Int a, b, c, d;  // [[a, b], [c, d]]

  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
};

inline Mat2 mat2_identity() { return {1, 0, 0, 1}; }

inline Int det(const Mat2& m) { return m.a * m.d - m.b * m.c; }

// Inverse of a determinant-1 matrix (adjugate).
inline Mat2 unimodular_inverse(const Mat2& m) {
  return {m.d, -m.b, -m.c, m.a};
}

inline HomologyClass apply(const Mat2& m, const HomologyClass& g) {
  return {m.a * g.p + m.b * g.q, m.c * g.p + m.d * g.q};
}

struct MCGElement {
  Mat2 mat;
  Int ab;  // image under the abelianization MCG -> Z

  friend bool operator==(const MCGElement& x, const MCGElement& y) {
    return x.mat == y.mat && x.ab == y.ab;
  }
  friend bool operator!=(const MCGElement& x, const MCGElement& y) {
    return !(x == y);
  }
};

inline MCGElement identity_element() { return {mat2_identity(), 0}; }

// tau_c^power as a mapping class; on homology g -> g + power * <c, g> * c.
inline MCGElement twist(const HomologyClass& c, const Int& power) {
  require_primitive(c, "twist");
  Mat2 m{1 + power * c.p * c.q, -power * c.p * c.p,
         power * c.q * c.q, 1 - power * c.p * c.q};
  return {m, power};
}

// Boundary twist: trivial on homology, abelianization 12.
inline MCGElement delta() { return {mat2_identity(), 12}; }

// Product notation ab means b applied first; matrices multiply as written.
inline MCGElement compose(const MCGElement& x, const MCGElement& y) {
  return {x.mat * y.mat, x.ab + y.ab};
}

inline MCGElement inverse(const MCGElement& x) {
  return {unimodular_inverse(x.mat), -x.ab};
}

inline bool equals(const MCGElement& x, const MCGElement& y) { return x == y; }

// phi tau_c^k phi^{-1} = tau_{phi(c)}^k: conjugating a twist is a twist about
// the image class.
inline std::pair<HomologyClass, Int> conjugate_twist(const MCGElement& phi,
                                                     const HomologyClass& c,
                                                     const Int& power) {
  require_primitive(c, "conjugate_twist");
  return {apply(phi.mat, c), power};
}

// Discriminant of the binary quadratic form <mat*g, g> in (p, q).
// Coefficients are read off symbolically from the matrix entries:
//   <M g, g> = c p^2 + (d - a) p q - b q^2.
inline Int discriminant(const MCGElement& e) {
  const Mat2& m = e.mat;
  Int B = m.d - m.a;
  return B * B + 4 * m.b * m.c;
}

}  // namespace torusfib
