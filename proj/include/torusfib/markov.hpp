#pragma once

// The 14 Markov-type Diophantine equations
//
//     l x^2 + m y^2 + n z^2 = c x y z,   c = sqrt(l m n (12 - l - m - n)),
//
// their positive solutions, the three Vieta-style mutations, bounded
// enumeration, greedy reduction to a minimum, and normalization to the
// canonical minimum read off from the registry row.
//
// Mutations jump one coordinate to the second root of its quadratic and
// permute the powers:
//   1: (x, y, z) -> (x, (c/n) x y - z, y)   powers (l, n, m)   [z-jump]
//   2: (x, y, z) -> ((c/m) x z - y, x, z)   powers (m, l, n)   [y-jump]
//   3: (x, y, z) -> (y, (c/l) y z - x, z)   powers (m, l, n)   [x-jump]
// c/n etc. need not be integral on their own (type (1,1,8) has c/n = 1/2);
// the full jumped value is, because it equals a pairing of integer homology
// classes. Division is therefore performed on the whole product, exactly.

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "torusfib/factorization.hpp"

namespace torusfib::markov {

inline Int markov_coefficient(const Int& l, const Int& m, const Int& n) {
  if (l < 1 || m < 1 || n < 1)
    throw std::domain_error("markov_coefficient: powers must be positive");
  Int rem = 12 - l - m - n;
  if (rem <= 0)
    throw std::domain_error(
        "markov_coefficient: power sum must be less than 12");
  auto root = exact_sqrt(l * m * n * rem);
  if (!root)
    throw std::domain_error(
        "markov_coefficient: l*m*n*(12-l-m-n) is not a perfect square");
  return *root;
}

struct MarkovType {
  Int l, m, n;
  Int c;  // markov_coefficient(l, m, n)

  friend bool operator==(const MarkovType& a, const MarkovType& b) {
    return a.l == b.l && a.m == b.m && a.n == b.n;
  }
  friend bool operator!=(const MarkovType& a, const MarkovType& b) {
    return !(a == b);
  }
};

// Validated constructor: the ordered powers must additionally be a
// permutation of one of the 14 registry rows.
inline MarkovType make_type(const Int& l, const Int& m, const Int& n) {
  Int c = markov_coefficient(l, m, n);
  if (find_row_for_powers({l, m, n}) == nullptr)
    throw std::domain_error("make_type: (" + l.get_str() + "," + m.get_str() +
                            "," + n.get_str() + ") is not a registry type");
  return {l, m, n, c};
}

inline MarkovType type_for_row(const CanonicalRow& row) {
  return make_type(row.powers[0], row.powers[1], row.powers[2]);
}

struct MarkovTriple {
  Int x, y, z;

  friend bool operator==(const MarkovTriple& a, const MarkovTriple& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const MarkovTriple& a, const MarkovTriple& b) {
    return !(a == b);
  }
  friend bool operator<(const MarkovTriple& a, const MarkovTriple& b) {
    return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
  }
  Int sum() const { return x + y + z; }
};

inline bool is_solution(const MarkovTriple& t, const MarkovType& ty) {
  if (t.x < 1 || t.y < 1 || t.z < 1) return false;
  return ty.l * t.x * t.x + ty.m * t.y * t.y + ty.n * t.z * t.z ==
         ty.c * t.x * t.y * t.z;
}

struct MarkovState {
  MarkovTriple t;
  MarkovType ty;

  friend bool operator==(const MarkovState& a, const MarkovState& b) {
    return a.t == b.t && a.ty == b.ty;
  }
  friend bool operator<(const MarkovState& a, const MarkovState& b) {
    return std::tie(a.t.x, a.t.y, a.t.z, a.ty.l, a.ty.m, a.ty.n) <
           std::tie(b.t.x, b.t.y, b.t.z, b.ty.l, b.ty.m, b.ty.n);
  }
};

inline MarkovState mutate(const MarkovTriple& t, const MarkovType& ty,
                          int which) {
  if (!is_solution(t, ty))
    throw std::invalid_argument("mutate: input is not a positive solution");
  MarkovState out;
  switch (which) {
    case 1:
      out.t = {t.x, exact_div(ty.c * t.x * t.y, ty.n) - t.z, t.y};
      out.ty = {ty.l, ty.n, ty.m, ty.c};
      break;
    case 2:
      out.t = {exact_div(ty.c * t.x * t.z, ty.m) - t.y, t.x, t.z};
      out.ty = {ty.m, ty.l, ty.n, ty.c};
      break;
    case 3:
      out.t = {t.y, exact_div(ty.c * t.y * t.z, ty.l) - t.x, t.z};
      out.ty = {ty.m, ty.l, ty.n, ty.c};
      break;
    default:
      throw std::invalid_argument("mutate: which must be 1, 2 or 3");
  }
  // Vieta second root of a positive solution is positive.
  if (out.t.x < 1 || out.t.y < 1 || out.t.z < 1)
    throw std::domain_error("mutate: non-positive result, input inadmissible");
  return out;
}

// All positive solutions with max(x,y,z) <= bound, lexicographically sorted.
// For each (x, y) the z coordinate is a root of n z^2 - c x y z + (l x^2 +
// m y^2), so only the quadratic's integer roots are examined.
inline std::vector<MarkovTriple> enumerate_solutions(const MarkovType& ty,
                                                     const Int& bound) {
  std::set<MarkovTriple> out;
  for (Int x = 1; x <= bound; ++x) {
    for (Int y = 1; y <= bound; ++y) {
      Int B = ty.c * x * y;
      Int disc = B * B - 4 * ty.n * (ty.l * x * x + ty.m * y * y);
      auto s = exact_sqrt(disc);
      if (!s) continue;
      for (const Int& num : {Int(B - *s), Int(B + *s)}) {
        Int den = 2 * ty.n;
        if (num % den != 0) continue;
        Int z = num / den;
        if (z >= 1 && z <= bound) out.insert({x, y, z});
      }
    }
  }
  return {out.begin(), out.end()};
}

struct ReduceResult {
  MarkovTriple t;
  MarkovType ty;
  std::vector<int> word;
};

// True iff no mutation strictly reduces x + y + z.
inline bool is_minimal(const MarkovTriple& t, const MarkovType& ty) {
  for (int which : {1, 2, 3})
    if (mutate(t, ty, which).t.sum() < t.sum()) return false;
  return true;
}

// Greedy descent: while some mutation strictly reduces the coordinate sum,
// apply the lowest-index one. Terminates because the sum is a positive
// integer strictly decreasing along the way.
inline ReduceResult reduce_to_minimum(const MarkovTriple& t0,
                                      const MarkovType& ty0) {
  ReduceResult r{t0, ty0, {}};
  if (!is_solution(r.t, r.ty))
    throw std::invalid_argument(
        "reduce_to_minimum: input is not a positive solution");
  for (;;) {
    Int s = r.t.sum();
    bool moved = false;
    for (int which : {1, 2, 3}) {
      MarkovState next = mutate(r.t, r.ty, which);
      if (next.t.sum() < s) {
        r.t = next.t;
        r.ty = next.ty;
        r.word.push_back(which);
        moved = true;
        break;
      }
    }
    if (!moved) return r;
  }
}

// Canonical minimum for a power multiset: the triple of pairings of the
// boundary with the registry cycles, in registry power order. Validated as a
// solution once at first use.
inline const MarkovState& canonical_minimum(const std::array<Int, 3>& powers) {
  static const std::vector<MarkovState> minima = [] {
    std::vector<MarkovState> out;
    for (const CanonicalRow& row : canonical_registry()) {
      MarkovTriple t{pairing(row.boundary, row.cycles[0]),
                     pairing(row.boundary, row.cycles[1]),
                     pairing(row.boundary, row.cycles[2])};
      MarkovType ty = type_for_row(row);
      if (!is_solution(t, ty) || !is_minimal(t, ty))
        throw std::logic_error("registry row " + std::to_string(row.row_id) +
                               " does not induce a minimal solution");
      out.push_back({t, ty});
    }
    return out;
  }();
  const CanonicalRow* row = find_row_for_powers(powers);
  if (row == nullptr)
    throw std::domain_error("canonical_minimum: unknown power multiset");
  return minima[static_cast<std::size_t>(row->row_id - 1)];
}

// Maps a minimum solution to the canonical minimum of its equation via a
// breadth-first search over mutation words (deterministic: shortest word,
// mutations tried in index order). Bridges between minima pass through
// slightly larger solutions; over all descent endpoints of all solutions with
// coordinates <= 100, for every type, the longest bridge has length 5, so a
// depth cap of 8 is generous while keeping the deduplicated frontier small.
inline ReduceResult normalize_minimum(const MarkovTriple& t0,
                                      const MarkovType& ty0) {
  if (!is_solution(t0, ty0))
    throw std::invalid_argument(
        "normalize_minimum: input is not a positive solution");
  if (!is_minimal(t0, ty0))
    throw std::invalid_argument("normalize_minimum: input is not minimal");
  const MarkovState& goal = canonical_minimum({ty0.l, ty0.m, ty0.n});
  MarkovState start{t0, ty0};
  if (start == goal) return {t0, ty0, {}};

  constexpr int kDepthCap = 8;
  std::set<MarkovState> seen{start};
  std::deque<std::pair<MarkovState, std::vector<int>>> queue{{start, {}}};
  while (!queue.empty()) {
    auto [state, word] = queue.front();
    queue.pop_front();
    if (static_cast<int>(word.size()) >= kDepthCap) continue;
    for (int which : {1, 2, 3}) {
      MarkovState next = mutate(state.t, state.ty, which);
      std::vector<int> next_word = word;
      next_word.push_back(which);
      if (next == goal) return {next.t, next.ty, next_word};
      if (seen.insert(next).second) queue.emplace_back(next, next_word);
    }
  }
  throw std::logic_error("normalize_minimum: no bridge found within depth cap");
}

}  // namespace torusfib::markov
