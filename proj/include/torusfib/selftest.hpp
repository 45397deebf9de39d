#pragma once

// Seeded scrambling of canonical rows and the randomized round-trip check
// used by both the CLI fuzz verb and the acceptance suite: scramble, classify,
// then independently replay the certificate.

#include <cstdint>
#include <random>
#include <string>

#include "torusfib/classifier.hpp"

namespace torusfib {

// Deterministic bounded sampling on top of mt19937_64. Plain modulo is used
// on purpose: outputs must be reproducible byte-for-byte for a given seed,
// and std::uniform_int_distribution is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // uniform-ish integer in [lo, hi]
  long pick(long lo, long hi) {
    return lo + static_cast<long>(engine_() %
                                  static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return (engine_() & 1) != 0; }

 private:
  std::mt19937_64 engine_;
};

// Scrambles a canonical row by a boundary-fixing conjugation (a random power
// of the boundary twist) followed by random block Hurwitz moves.
inline Factorization scramble_row(const CanonicalRow& row, Rng& rng,
                                  int max_moves, int max_conjugation_power) {
  Factorization f = row.factorization();
  Int t = rng.pick(-max_conjugation_power, max_conjugation_power);
  f = global_conjugate(f, twist(f.boundary, t));
  int moves = static_cast<int>(rng.pick(0, max_moves));
  for (int i = 0; i < moves; ++i) {
    std::size_t pos = static_cast<std::size_t>(rng.pick(1, 2));
    f = hurwitz_move(f, pos, rng.coin() ? HurwitzDirection::forward
                                        : HurwitzDirection::inverse);
  }
  return f;
}

struct FuzzTrial {
  int row_id = 0;
  int trial = 0;
  bool ok = false;
  std::string failure;  // stage-tagged message when !ok
};

// One scramble/classify/replay round trip. Success requires the independent
// certificate replay, never just classify's own say-so.
inline FuzzTrial fuzz_trial(const CanonicalRow& row, int trial_index, Rng& rng,
                            int max_moves, int max_conjugation_power) {
  FuzzTrial result;
  result.row_id = row.row_id;
  result.trial = trial_index;
  Factorization f = scramble_row(row, rng, max_moves, max_conjugation_power);
  try {
    Certificate cert = classify(f);
    if (cert.row_id != row.row_id) {
      result.failure = "[final] certificate targets row " +
                       std::to_string(cert.row_id);
      return result;
    }
    if (!verify_certificate(f, cert)) {
      result.failure = "[replay] certificate failed independent replay";
      return result;
    }
    result.ok = true;
  } catch (const classify_error& e) {
    result.failure = e.what();
  } catch (const std::exception& e) {
    result.failure = std::string("[internal] ") + e.what();
  }
  return result;
}

}  // namespace torusfib
