#pragma once

// The first homology of the one-holed torus as the symplectic lattice Z^2.
//
// A class (p, q) stands for p[v] + q[u], where u = (0,1), v = (1,0) form the
// standard symplectic basis with <u, v> = 1. Simple closed curves on the
// surface correspond to primitive classes, so all curve-level operations in
// this library work on HomologyClass values.

#include <stdexcept>
#include <string>

#include "torusfib/integers.hpp"

namespace torusfib {

struct HomologyClass {
  Int p;  // coefficient of [v]
  Int q;  // coefficient of [u]

  friend bool operator==(const HomologyClass& a, const HomologyClass& b) {
    return a.p == b.p && a.q == b.q;
  }
  friend bool operator!=(const HomologyClass& a, const HomologyClass& b) {
    return !(a == b);
  }
  // lexicographic, for use as an ordered container key
  friend bool operator<(const HomologyClass& a, const HomologyClass& b) {
    int c = cmp(a.p, b.p);
    if (c != 0) return c < 0;
    return a.q < b.q;
  }

  std::string str() const { return "(" + p.get_str() + "," + q.get_str() + ")"; }
};

inline HomologyClass u_class() { return {0, 1}; }
inline HomologyClass v_class() { return {1, 0}; }

inline HomologyClass negated(const HomologyClass& a) {
  return {-a.p, -a.q};
}

// Canonical sign representative of {a, -a}: first nonzero coordinate > 0.
// tau_C = tau_{-C}, so a cycle and its negative define the same twist.
inline HomologyClass sign_normalized(const HomologyClass& a) {
  if (a.p < 0 || (a.p == 0 && a.q < 0)) return negated(a);
  return a;
}

// Symplectic pairing: <a, b> = q_a p_b - p_a q_b, so that <u, v> = 1.
inline Int pairing(const HomologyClass& a, const HomologyClass& b) {
  return a.q * b.p - a.p * b.q;
}

inline bool is_primitive(const HomologyClass& a) {
  if (a.p == 0 && a.q == 0) return false;
  return gcd_int(a.p, a.q) == 1;
}

inline void require_primitive(const HomologyClass& a, const char* what) {
  if (!is_primitive(a))
    throw std::invalid_argument(std::string(what) + ": class " + a.str() +
                                " is not primitive");
}

// Action of the power of a Dehn twist on homology:
//   tau_c^m(g) = g + m * <c, g> * c.
inline HomologyClass dehn_twist_action(const HomologyClass& c, const Int& power,
                                       const HomologyClass& g) {
  require_primitive(c, "dehn_twist_action");
  Int k = power * pairing(c, g);
  return {g.p + k * c.p, g.q + k * c.q};
}

// Completes a primitive class u' to a symplectic basis: returns v' with
// <u', v'> = 1, computed from an extended gcd of the coordinates.
inline HomologyClass complete_symplectic_basis(const HomologyClass& u1) {
  require_primitive(u1, "complete_symplectic_basis");
  // <u', v'> = q_{u'} p_{v'} - p_{u'} q_{v'} = 1
  ExtendedGcd e = extended_gcd(u1.q, u1.p);
  // e.g == 1 since u' is primitive; s*q + t*p = 1
  return {e.s, -e.t};
}

}  // namespace torusfib
