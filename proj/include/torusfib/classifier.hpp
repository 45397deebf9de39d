#pragma once

// Classification of extremal rational factorizations down to their canonical
// registry row, with replayable certificates.
//
// Pipeline: verify the extremal identity; fix the unique admissible
// orientation of the three vanishing cycles; greedily descend the Markov
// shadow (x, y, z) = pairings of the boundary with the cycles, mirroring each
// mutation at the cycle level; bridge to the canonical minimum; conjugate the
// boundary to u; absorb the residual tau_u power. The certificate records the
// mutation word and the single global conjugation, and is verified by an
// independent replay through block Hurwitz moves only.
//
// Key exactness facts used throughout (D = 12 - l - m - n, c^2 = l m n D):
//   l m <C1,C2> = -c z,   m n <C2,C3> = -c x,
//   l n (<C1,C3> + m <C1,C2><C2,C3>) = c y,
// all as plain integer identities, since sqrt(D n / (l m)) = c / (l m) etc.

#include <array>
#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "torusfib/markov.hpp"

namespace torusfib {

class classify_error : public std::runtime_error {
 public:
  classify_error(std::string stage, const std::string& message)
      : std::runtime_error("[" + stage + "] " + message),
        stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

struct OrientedConfiguration {
  std::array<HomologyClass, 3> cycles;  // signed: orientation chosen
  std::array<Int, 3> powers;            // (l, m, n)
  HomologyClass boundary;
  std::array<Int, 3> xyz;  // pairings of boundary with cycles, all > 0

  Factorization factorization() const {
    return {{{cycles[0], powers[0]}, {cycles[1], powers[1]},
             {cycles[2], powers[2]}},
            boundary};
  }
  markov::MarkovTriple triple() const { return {xyz[0], xyz[1], xyz[2]}; }
  markov::MarkovType type() const {
    return markov::make_type(powers[0], powers[1], powers[2]);
  }
};

// Signed pairings of the boundary with the three cycles as stored.
inline std::array<Int, 3> compute_xyz(const Factorization& f) {
  if (!is_extremal_rational(f))
    throw classify_error("identity", "factorization is not extremal rational");
  return {pairing(f.boundary, f.factors[0].cycle),
          pairing(f.boundary, f.factors[1].cycle),
          pairing(f.boundary, f.factors[2].cycle)};
}

namespace detail {

// The three orientation relations in cross-multiplied integer form, plus
// positivity of x, y, z.
inline bool orientation_holds(const std::array<HomologyClass, 3>& cycles,
                              const std::array<Int, 3>& powers,
                              const HomologyClass& boundary, const Int& coeff) {
  const Int& l = powers[0];
  const Int& m = powers[1];
  const Int& n = powers[2];
  Int x = pairing(boundary, cycles[0]);
  Int y = pairing(boundary, cycles[1]);
  Int z = pairing(boundary, cycles[2]);
  if (x <= 0 || y <= 0 || z <= 0) return false;
  if (l * m * pairing(cycles[0], cycles[1]) != -coeff * z) return false;
  if (m * n * pairing(cycles[1], cycles[2]) != -coeff * x) return false;
  Int lhs = pairing(cycles[0], cycles[2]) +
            m * pairing(cycles[0], cycles[1]) * pairing(cycles[1], cycles[2]);
  return l * n * lhs == coeff * y;
}

// Exhaustive scan of the 8 sign assignments. Expects a configuration already
// known to satisfy the extremal identity; exactly one assignment must pass.
inline OrientedConfiguration orient_cycles(
    const std::array<HomologyClass, 3>& cycles,
    const std::array<Int, 3>& powers, const HomologyClass& boundary) {
  for (const HomologyClass& c : cycles)
    if (pairing(boundary, c) == 0)
      throw classify_error("orientation",
                           "zero pairing with the boundary class");
  Int coeff = markov::markov_coefficient(powers[0], powers[1], powers[2]);
  std::vector<std::array<HomologyClass, 3>> admissible;
  for (int mask = 0; mask < 8; ++mask) {
    std::array<HomologyClass, 3> signed_cycles = cycles;
    for (int i = 0; i < 3; ++i)
      if (mask & (1 << i)) signed_cycles[i] = negated(signed_cycles[i]);
    if (orientation_holds(signed_cycles, powers, boundary, coeff))
      admissible.push_back(signed_cycles);
  }
  if (admissible.size() != 1)
    throw classify_error("orientation",
                         admissible.empty()
                             ? "no admissible sign assignment"
                             : "multiple admissible sign assignments");
  OrientedConfiguration cfg;
  cfg.cycles = admissible.front();
  cfg.powers = powers;
  cfg.boundary = boundary;
  for (int i = 0; i < 3; ++i) cfg.xyz[i] = pairing(boundary, cfg.cycles[i]);
  return cfg;
}

}  // namespace detail

// The unique admissible orientation of an extremal rational factorization.
inline OrientedConfiguration admissible_orient(const Factorization& f) {
  if (!is_extremal_rational(f))
    throw classify_error("identity", "factorization is not extremal rational");
  return detail::orient_cycles(
      {f.factors[0].cycle, f.factors[1].cycle, f.factors[2].cycle},
      {f.factors[0].power, f.factors[1].power, f.factors[2].power},
      f.boundary);
}

// Cycle-level mutations; powers permute alongside:
//   1: (C1, C2, C3) -> (C1, -tau_{C2}^{m} C3, C2)    powers (l, n, m)
//   2: (C1, C2, C3) -> (-tau_{C1}^{l} C2, C1, C3)    powers (m, l, n)
//   3: (C1, C2, C3) -> (C2, -tau_{C2}^{-m} C1, C3)   powers (m, l, n)
// These are block Hurwitz moves up to cycle sign, so the evaluated product is
// unchanged; the admissible orientation is preserved, which is re-checked.
inline OrientedConfiguration cycle_mutation(const OrientedConfiguration& cfg,
                                            int which) {
  const auto& [C1, C2, C3] = cfg.cycles;
  const Int& l = cfg.powers[0];
  const Int& m = cfg.powers[1];
  std::array<HomologyClass, 3> cycles;
  std::array<Int, 3> powers;
  switch (which) {
    case 1:
      cycles = {C1, negated(dehn_twist_action(C2, m, C3)), C2};
      powers = {cfg.powers[0], cfg.powers[2], cfg.powers[1]};
      break;
    case 2:
      cycles = {negated(dehn_twist_action(C1, l, C2)), C1, C3};
      powers = {cfg.powers[1], cfg.powers[0], cfg.powers[2]};
      break;
    case 3:
      cycles = {C2, negated(dehn_twist_action(C2, -m, C1)), C3};
      powers = {cfg.powers[1], cfg.powers[0], cfg.powers[2]};
      break;
    default:
      throw std::invalid_argument("cycle_mutation: which must be 1, 2 or 3");
  }
  Int coeff = markov::markov_coefficient(powers[0], powers[1], powers[2]);
  if (!detail::orientation_holds(cycles, powers, cfg.boundary, coeff))
    throw classify_error("mutation",
                         "mutation did not preserve the admissible orientation");
  OrientedConfiguration out;
  out.cycles = cycles;
  out.powers = powers;
  out.boundary = cfg.boundary;
  for (int i = 0; i < 3; ++i)
    out.xyz[i] = pairing(cfg.boundary, out.cycles[i]);
  return out;
}

struct Certificate {
  std::string digest;        // of the (sign-normalized) input factorization
  std::vector<int> word;     // mutation indices over {1, 2, 3}
  MCGElement conjugator;     // single global conjugation, applied after word
  int row_id = 0;            // target registry row

  friend bool operator==(const Certificate& a, const Certificate& b) {
    return a.digest == b.digest && a.word == b.word &&
           a.conjugator == b.conjugator && a.row_id == b.row_id;
  }
};

// FNV-1a over a canonical rendering; sign-normalized so that equivalent
// inputs hash alike.
inline std::string factorization_digest(const Factorization& f) {
  Factorization n = sign_normalized(f);
  std::string repr;
  for (const TwistFactor& t : n.factors)
    repr += t.cycle.str() + "^" + t.power.get_str() + " ";
  repr += "| " + n.boundary.str();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : repr) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

namespace detail {

// An MCG element whose matrix maps C to u = (0,1), built as an explicit word
// of tau_u / tau_v twists performing the Euclidean reduction of C. Building
// from generator twists keeps the abelianization coordinate well defined.
inline MCGElement boundary_normalizer(const HomologyClass& boundary) {
  require_primitive(boundary, "boundary_normalizer");
  const HomologyClass u = u_class();
  const HomologyClass v = v_class();
  MCGElement phi = identity_element();
  HomologyClass cur = boundary;
  auto twist_step = [&](const HomologyClass& about, const Int& power) {
    phi = compose(twist(about, power), phi);
    cur = dehn_twist_action(about, power, cur);
  };
  // tau_u^k: (p, q) -> (p, q + k p); tau_v^k: (p, q) -> (p - k q, q).
  // Truncated division strictly shrinks the larger coordinate, so this is the
  // Euclidean algorithm; primitivity lands it on (0, +-1) or (+-1, 0).
  while (cur.p != 0 && cur.q != 0) {
    if (cmp(abs(cur.p), abs(cur.q)) >= 0)
      twist_step(v, cur.p / cur.q);
    else
      twist_step(u, -(cur.q / cur.p));
  }
  if (cur.q == 0) {  // +-v: two twists walk it to u
    Int s = cur.p > 0 ? 1 : -1;
    twist_step(u, s);
    twist_step(v, s);
  }
  if (cur.q < 0) {  // -u: apply the elliptic involution (tau_v tau_u)^3 = -I
    for (int i = 0; i < 3; ++i) {
      twist_step(u, 1);
      twist_step(v, 1);
    }
  }
  if (cur != u || apply(phi.mat, boundary) != u)
    throw classify_error("conjugation", "boundary normalization failed");
  return phi;
}

}  // namespace detail

// Classifies an extremal rational factorization: returns a certificate whose
// replay transforms the input into its canonical registry row exactly.
inline Certificate classify(const Factorization& f) {
  OrientedConfiguration cfg = admissible_orient(f);
  const CanonicalRow* row = find_row_for_powers(cfg.powers);
  if (row == nullptr)
    throw classify_error("powers", "power multiset matches no registry row");

  Certificate cert;
  cert.digest = factorization_digest(f);
  cert.row_id = row->row_id;

  // Greedy descent on the Markov shadow, mirrored on cycles. The shadow
  // commutation (xyz of the mutated configuration == mutated xyz) is an
  // invariant of the construction; it is asserted here and property-tested.
  auto mutate_cfg = [&](int which) {
    markov::MarkovState expect = markov::mutate(cfg.triple(), cfg.type(), which);
    cfg = cycle_mutation(cfg, which);
    if (cfg.triple() != expect.t || cfg.type() != expect.ty)
      throw classify_error("mutation", "Markov shadow desynchronized");
    cert.word.push_back(which);
  };
  for (;;) {
    Int s = cfg.triple().sum();
    bool moved = false;
    for (int which : {1, 2, 3}) {
      if (markov::mutate(cfg.triple(), cfg.type(), which).t.sum() < s) {
        mutate_cfg(which);
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  std::vector<int> bridge;
  try {
    bridge = markov::normalize_minimum(cfg.triple(), cfg.type()).word;
  } catch (const std::exception& e) {
    throw classify_error("normalize", e.what());
  }
  for (int which : bridge) mutate_cfg(which);

  // Conjugate the boundary to u, then shift by the tau_u power aligning C3
  // (all q coordinates then align at once, since the two configurations have
  // equal pairing matrices and equal p coordinates).
  MCGElement phi = detail::boundary_normalizer(cfg.boundary);
  Factorization g = global_conjugate(cfg.factorization(), phi);
  Int shift = row->cycles[2].q - g.factors[2].cycle.q;
  MCGElement conj = compose(twist(u_class(), shift), phi);
  cert.conjugator = conj;

  g = global_conjugate(cfg.factorization(), conj);
  if (g != row->factorization())
    throw classify_error("final", "canonical configuration not reached");
  return cert;
}

// Independent replay using factorization primitives only: mutation 1 is the
// forward block Hurwitz move at position 2, mutation 2 forward at 1,
// mutation 3 inverse at 1. Comparison is componentwise after canonical sign
// normalization (tau_C = tau_{-C}).
inline bool verify_certificate(const Factorization& f, const Certificate& cert) {
  if (cert.row_id < 1 ||
      cert.row_id > static_cast<int>(canonical_registry().size()))
    return false;
  if (f.factors.size() != 3) return false;
  Factorization g = f;
  for (int which : cert.word) {
    switch (which) {
      case 1: g = hurwitz_move(g, 2, HurwitzDirection::forward); break;
      case 2: g = hurwitz_move(g, 1, HurwitzDirection::forward); break;
      case 3: g = hurwitz_move(g, 1, HurwitzDirection::inverse); break;
      default: return false;
    }
  }
  g = global_conjugate(g, cert.conjugator);
  const CanonicalRow& row =
      canonical_registry()[static_cast<std::size_t>(cert.row_id - 1)];
  return sign_normalized(g) == row.factorization();
}

class hypothesis_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Given tau_{c1}^m tau_{c2}^n = delta tau_{c3}^{-k} tau_{c4}^{-l} (verified
// in the group representation; the check is vacuous otherwise), tests the
// intersection identity  m n <c1,c2>^2 = l k <c3,c4>^2.
inline bool check_intersections_identity(
    const HomologyClass& c1, const HomologyClass& c2, const HomologyClass& c3,
    const HomologyClass& c4, const Int& m, const Int& n, const Int& k,
    const Int& l) {
  if (m < 1 || n < 1 || k < 1 || l < 1)
    throw hypothesis_error("check_intersections_identity: powers must be positive");
  MCGElement lhs = compose(twist(c1, m), twist(c2, n));
  MCGElement rhs = compose(delta(), compose(twist(c3, -k), twist(c4, -l)));
  if (lhs != rhs)
    throw hypothesis_error(
        "check_intersections_identity: hypothesis factorization identity fails");
  Int p12 = pairing(c1, c2);
  Int p34 = pairing(c3, c4);
  return m * n * p12 * p12 == l * k * p34 * p34;
}

}  // namespace torusfib
