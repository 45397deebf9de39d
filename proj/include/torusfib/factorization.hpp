#pragma once

// Monodromy factorizations over the one-holed torus: ordered lists of twist
// blocks (cycle, power), together with the boundary curve class. Provides the
// extremal-rational identity check, block Hurwitz moves, global conjugation,
// and the canonical registry of the 14 extremal configurations.

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "torusfib/mcg.hpp"

namespace torusfib {

struct TwistFactor {
  HomologyClass cycle;  // primitive
  Int power;            // >= 1 (fiber multiplicity)

  friend bool operator==(const TwistFactor& a, const TwistFactor& b) {
    return a.cycle == b.cycle && a.power == b.power;
  }
};

struct Factorization {
  std::vector<TwistFactor> factors;
  HomologyClass boundary;

  void validate() const {
    for (const TwistFactor& f : factors) {
      require_primitive(f.cycle, "factorization cycle");
      if (f.power < 1)
        throw std::invalid_argument("factorization: power must be >= 1");
    }
    require_primitive(boundary, "factorization boundary");
  }

  Int power_sum() const {
    Int s = 0;
    for (const TwistFactor& f : factors) s += f.power;
    return s;
  }

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.factors == b.factors && a.boundary == b.boundary;
  }
};

// Replaces every cycle (and the boundary) by its canonical sign
// representative. tau_C = tau_{-C}, so this does not change the mapping
// classes; it gives factorizations a unique comparable form.
inline Factorization sign_normalized(const Factorization& f) {
  Factorization out = f;
  for (TwistFactor& t : out.factors) t.cycle = sign_normalized(t.cycle);
  out.boundary = sign_normalized(out.boundary);
  return out;
}

// Product of the twist blocks in written order (leftmost factor outermost).
inline MCGElement evaluate(const Factorization& f) {
  f.validate();
  MCGElement e = identity_element();
  for (const TwistFactor& t : f.factors)
    e = compose(e, twist(t.cycle, t.power));
  return e;
}

// The element delta * tau_C^{l+m+n-12} that an extremal factorization with
// power sum l+m+n must equal.
inline MCGElement extremal_target(const std::array<Int, 3>& powers,
                                  const HomologyClass& boundary) {
  require_primitive(boundary, "extremal_target");
  Int s = powers[0] + powers[1] + powers[2];
  return compose(delta(), twist(boundary, s - 12));
}

enum class HurwitzDirection { forward, inverse };

// Block Hurwitz move at position i (1-based, acting on blocks i, i+1):
//   forward:  (c,a),(d,b) -> (tau_c^a d, b), (c, a)
//   inverse:  (c,a),(d,b) -> (d, b), (tau_d^{-b} c, a)
// The evaluated product is unchanged.
inline Factorization hurwitz_move(const Factorization& f, std::size_t i,
                                  HurwitzDirection dir) {
  if (i < 1 || i >= f.factors.size())
    throw std::invalid_argument("hurwitz_move: index out of range");
  Factorization out = f;
  TwistFactor& lhs = out.factors[i - 1];
  TwistFactor& rhs = out.factors[i];
  if (dir == HurwitzDirection::forward) {
    TwistFactor moved{dehn_twist_action(lhs.cycle, lhs.power, rhs.cycle),
                      rhs.power};
    rhs = lhs;
    lhs = moved;
  } else {
    TwistFactor moved{dehn_twist_action(rhs.cycle, -rhs.power, lhs.cycle),
                      lhs.power};
    lhs = rhs;
    rhs = moved;
  }
  return out;
}

// Simultaneous conjugation of every factor (and the boundary class) by phi.
inline Factorization global_conjugate(const Factorization& f,
                                      const MCGElement& phi) {
  Factorization out = f;
  for (TwistFactor& t : out.factors) t.cycle = apply(phi.mat, t.cycle);
  out.boundary = apply(phi.mat, out.boundary);
  return out;
}

struct CanonicalRow {
  int row_id;                          // 1..14
  std::array<Int, 3> powers;           // (l0, m0, n0)
  std::array<HomologyClass, 3> cycles; // minimal-intersection configuration
  HomologyClass boundary;              // always u = (0, 1)

  Factorization factorization() const {
    return {{{cycles[0], powers[0]}, {cycles[1], powers[1]},
             {cycles[2], powers[2]}},
            boundary};
  }
};

inline bool same_power_multiset(const std::array<Int, 3>& a,
                                const std::array<Int, 3>& b) {
  std::array<Int, 3> x = a, y = b;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

namespace detail {
inline std::vector<CanonicalRow> build_registry() {
  const HomologyClass u = u_class();
  auto row = [&](int id, int l, int m, int n, long p1, long q1, long p2,
                 long q2, long p3, long q3) {
    return CanonicalRow{id,
                        {Int(l), Int(m), Int(n)},
                        {HomologyClass{p1, q1}, HomologyClass{p2, q2},
                         HomologyClass{p3, q3}},
                        u};
  };
  // Validated at load against the extremal identity. The registry unit tests
  // additionally pin rows 4, 6, 9 and 12 as the unique configurations passing
  // the identity within their natural search families; nearby sign and power
  // variants of those rows all fail.
  return {
      row(1, 1, 1, 1, /**/ 1, -3, /**/ 1, 0, /**/ 1, 3),
      row(2, 1, 1, 2, /**/ 1, -4, /**/ 1, 0, /**/ 1, 2),
      row(3, 1, 2, 3, /**/ 1, -3, /**/ 1, 0, /**/ 1, 1),
      row(4, 1, 1, 5, /**/ 1, -3, /**/ 2, -1, /**/ 1, 0),
      row(5, 2, 2, 4, /**/ 1, -2, /**/ 1, 0, /**/ 1, 1),
      row(6, 3, 3, 3, /**/ 1, -1, /**/ 1, 0, /**/ 1, 1),
      row(7, 1, 2, 6, /**/ 2, -3, /**/ 1, 0, /**/ 1, 1),
      row(8, 1, 1, 8, /**/ 2, -3, /**/ 2, -1, /**/ 1, 0),
      row(9, 2, 4, 4, /**/ 2, -1, /**/ 1, 0, /**/ 1, 1),
      row(10, 1, 3, 6, /**/ 3, -2, /**/ 1, 0, /**/ 1, 1),
      row(11, 1, 1, 9, /**/ 3, -2, /**/ 3, -1, /**/ 1, 0),
      row(12, 1, 2, 8, /**/ 4, -3, /**/ 2, -1, /**/ 1, 0),
      row(13, 2, 3, 6, /**/ 3, -2, /**/ 2, -1, /**/ 1, 0),
      row(14, 1, 5, 5, /**/ 5, -3, /**/ 2, -1, /**/ 1, 0),
  };
}

inline const std::vector<std::array<Int, 3>>& power_multisets() {
  static const std::vector<std::array<Int, 3>> sets = [] {
    std::vector<std::array<Int, 3>> out;
    for (const CanonicalRow& row : build_registry()) {
      std::array<Int, 3> s = row.powers;
      std::sort(s.begin(), s.end());
      out.push_back(s);
    }
    return out;
  }();
  return sets;
}
}  // namespace detail

inline bool is_extremal_rational(const Factorization& f);

// The 14 canonical configurations. Validated once at first use; a broken
// table aborts the process rather than producing silent nonsense.
inline const std::vector<CanonicalRow>& canonical_registry() {
  static const std::vector<CanonicalRow> registry = [] {
    std::vector<CanonicalRow> r = detail::build_registry();
    for (const CanonicalRow& row : r) {
      if (!is_extremal_rational(row.factorization()))
        throw std::logic_error("canonical registry row " +
                               std::to_string(row.row_id) +
                               " fails the extremal identity");
    }
    return r;
  }();
  return registry;
}

inline const CanonicalRow* find_row_for_powers(const std::array<Int, 3>& powers) {
  for (const CanonicalRow& row : canonical_registry())
    if (same_power_multiset(row.powers, powers)) return &row;
  return nullptr;
}

// Extremal rational <=> exactly 3 blocks, product equals
// delta * tau_C^{l+m+n-12}, and the power multiset is one of the 14 types.
// The wrong block count is a contract violation, distinct from the identity
// simply failing.
inline bool is_extremal_rational(const Factorization& f) {
  if (f.factors.size() != 3)
    throw std::invalid_argument(
        "is_extremal_rational: factorization must have exactly 3 blocks");
  f.validate();
  std::array<Int, 3> powers{f.factors[0].power, f.factors[1].power,
                            f.factors[2].power};
  if (evaluate(f) != extremal_target(powers, f.boundary)) return false;
  std::sort(powers.begin(), powers.end());
  const auto& sets = detail::power_multisets();
  return std::find(sets.begin(), sets.end(), powers) != sets.end();
}

}  // namespace torusfib
