#pragma once

// Two-fiber fibrations: the Auroux invariant of a primitive pair, the braid
// action k -> -k^{-1}, the equivalence decision with a replayable witness,
// and exact counting of equivalence classes of length-2 factorizations.

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "torusfib/mcg.hpp"

namespace torusfib::auroux {

struct PrimitivePair {
  HomologyClass c1, c2;

  friend bool operator==(const PrimitivePair& a, const PrimitivePair& b) {
    return a.c1 == b.c1 && a.c2 == b.c2;
  }
};

inline PrimitivePair make_pair(const HomologyClass& c1,
                               const HomologyClass& c2) {
  require_primitive(c1, "primitive pair");
  require_primitive(c2, "primitive pair");
  if (pairing(c1, c2) <= 0)
    throw std::invalid_argument("primitive pair: pairing must be positive");
  return {c1, c2};
}

struct AurouxInvariant {
  Int n;  // modulus: the pairing of the two classes
  Int k;  // residue in [0, n), coprime to n

  friend bool operator==(const AurouxInvariant& a, const AurouxInvariant& b) {
    return a.n == b.n && a.k == b.k;
  }
};

inline Int mod_reduce(const Int& k, const Int& n) {
  Int r = k % n;
  if (r < 0) r += n;
  return r;
}

// Complete c1 to a symplectic basis (c1, v'), write c2 = n v' + k c1, and
// reduce k mod n. The completion is unique up to v' -> v' + t c1, under which
// k shifts by -t n, so the residue is basis-independent.
inline AurouxInvariant auroux_invariant(const PrimitivePair& pair) {
  Int n = pairing(pair.c1, pair.c2);
  if (n <= 0)
    throw std::invalid_argument("auroux_invariant: pairing must be positive");
  HomologyClass v1 = complete_symplectic_basis(pair.c1);
  Int k = pairing(pair.c2, v1);
  return {n, mod_reduce(k, n)};
}

// The braid generator: (C1, C2) -> (-tau_{C1} C2, C1). Pairing is preserved.
inline PrimitivePair braid_action(const PrimitivePair& pair) {
  return {negated(dehn_twist_action(pair.c1, 1, pair.c2)), pair.c1};
}

struct EquivalenceWitness {
  bool braid_move = false;  // apply one braid generator to the first pair
  Mat2 matrix;              // then map classes by this determinant-1 matrix
};

inline bool verify_witness(const PrimitivePair& p1, const PrimitivePair& p2,
                           const EquivalenceWitness& w) {
  PrimitivePair moved = w.braid_move ? braid_action(p1) : p1;
  return apply(w.matrix, moved.c1) == p2.c1 &&
         apply(w.matrix, moved.c2) == p2.c2;
}

namespace detail {

// Determinant-1 matrix carrying pair a onto pair b exactly, given equal
// pairings and equal Auroux residues. Basis completions are shifted until the
// integer k values agree, then the matrix is the change of basis.
inline Mat2 matching_matrix(const PrimitivePair& a, const PrimitivePair& b) {
  Int n = pairing(a.c1, a.c2);
  HomologyClass va = complete_symplectic_basis(a.c1);
  HomologyClass vb = complete_symplectic_basis(b.c1);
  Int ka = pairing(a.c2, va);
  Int kb = pairing(b.c2, vb);
  Int t = exact_div(ka - kb, n);  // shift va by t*c1: ka -> ka - t n = kb
  va = {va.p + t * a.c1.p, va.q + t * a.c1.q};
  // columns (c1 | v) have determinant -<c1, v> = -1; the quotient of two such
  // matrices has determinant 1
  Mat2 A{a.c1.p, va.p, a.c1.q, va.q};
  Mat2 B{b.c1.p, vb.p, b.c1.q, vb.q};
  // inverse of A with det(A) = -1 is the negated adjugate
  Mat2 Ainv{-A.d, A.b, A.c, -A.a};
  return B * Ainv;
}

}  // namespace detail

// Equivalence under Hurwitz moves and global conjugation: pairings must be
// equal and the residues must satisfy k1 = k2 or k1 = -k2^{-1} (mod n). On
// success the returned witness replays to exact class equality.
inline std::pair<bool, std::optional<EquivalenceWitness>> equivalent(
    const PrimitivePair& p1, const PrimitivePair& p2) {
  Int n1 = pairing(p1.c1, p1.c2);
  Int n2 = pairing(p2.c1, p2.c2);
  if (n1 <= 0 || n2 <= 0)
    throw std::invalid_argument("equivalent: pairings must be positive");
  if (n1 != n2) return {false, std::nullopt};
  AurouxInvariant k1 = auroux_invariant(p1);
  AurouxInvariant k2 = auroux_invariant(p2);

  EquivalenceWitness w;
  if (k1.k == k2.k) {
    w.braid_move = false;
  } else {
    // check k1 = -k2^{-1}  <=>  k1 * k2 = -1 (mod n)
    if (mod_reduce(k1.k * k2.k + 1, n1) != 0) return {false, std::nullopt};
    w.braid_move = true;  // one braid move sends k1 to -k1^{-1} = k2
  }
  PrimitivePair base = w.braid_move ? braid_action(p1) : p1;
  w.matrix = detail::matching_matrix(base, p2);
  if (!verify_witness(p1, p2, w))
    throw std::logic_error("equivalent: witness failed replay");
  return {true, w};
}

// ---- counting ----------------------------------------------------------

inline long long euler_phi(long long n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  long long result = n;
  long long m = n;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

// 1 iff n = 2^i k with k odd and i <= 1.
inline int psi(long long n) {
  if (n < 1) throw std::invalid_argument("psi: n must be positive");
  return n % 4 == 0 ? 0 : 1;
}

// Number of residues k mod n with k^2 = -1: multiplicative over prime
// powers; 1 + (-1)^{(p-1)/2} at odd prime powers, 1 at 2^0 and 2^1, 0 at
// higher powers of two.
inline long long residue_count_r(long long n) {
  if (n < 1) throw std::invalid_argument("residue_count_r: n must be positive");
  long long r = 1;
  long long m = n;
  int two = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++two;
  }
  if (two >= 2) return 0;
  for (long long p = 3; p * p <= m; p += 2) {
    if (m % p == 0) {
      if (p % 4 == 3) return 0;
      r *= 2;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) {
    if (m % 4 == 3) return 0;
    r *= 2;
  }
  return r;
}

inline long long residue_count_r_bruteforce(long long n) {
  if (n < 1) throw std::invalid_argument("residue_count_r: n must be positive");
  long long count = 0;
  for (long long k = 0; k < n; ++k)
    if ((k * k + 1) % n == 0) ++count;
  return count;
}

// Number of equivalence classes of length-2 factorizations with pairing n:
//   (phi(n) + psi(n) * prod over odd primes p | n of (1 + (-1)^{(p-1)/2})) / 2.
inline long long count_classes(long long n) {
  if (n < 1) throw std::invalid_argument("count_classes: n must be positive");
  long long prod = 1;
  long long m = n;
  while (m % 2 == 0) m /= 2;
  for (long long p = 3; p * p <= m; p += 2) {
    if (m % p == 0) {
      prod *= 1 + (p % 4 == 1 ? 1 : -1);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) prod *= 1 + (m % 4 == 1 ? 1 : -1);
  return (euler_phi(n) + psi(n) * prod) / 2;
}

// Oracle: orbits of k -> -k^{-1} on the unit group, counted directly.
inline long long count_classes_bruteforce(long long n) {
  if (n < 1) throw std::invalid_argument("count_classes: n must be positive");
  if (n == 1) return 1;
  auto inv_mod = [n](long long a) {
    long long t = 0, new_t = 1, r = n, new_r = a;
    while (new_r != 0) {
      long long q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    return t < 0 ? t + n : t;
  };
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  long long orbits = 0;
  for (long long k = 1; k < n; ++k) {
    if (std::gcd(k, n) != 1 || seen[static_cast<std::size_t>(k)]) continue;
    ++orbits;
    long long j = k;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      j = (n - inv_mod(j)) % n;
    }
  }
  return orbits;
}

}  // namespace torusfib::auroux
