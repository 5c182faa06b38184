#pragma once

#include <cstdint>

#include "lieop/checkers.hpp"

namespace lieop {

/// splitmix64; tiny, seedable, and stable across platforms so seeded
/// sweeps reproduce bit-identically everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// uniform in [lo, hi] inclusive
  long next_in(long lo, long hi);
  Scalar next_rational(long max_num, long max_den);

 private:
  std::uint64_t state_;
};

/// Random n x n matrix with numerators in [-max_num, max_num] and
/// denominators in [1, max_den].
Mat random_matrix(Rng& rng, std::size_t n, long max_num, long max_den);
/// Same, with m^T = -m.
Mat random_antisymmetric(Rng& rng, std::size_t n, long max_num, long max_den);

enum class SweepKind { xvr_gl, xvr_so, bimyb_lr, assoc_theta };
SweepKind sweep_kind_from_string(const std::string& s);

struct SweepResult {
  std::size_t total = 0;
  std::size_t passed = 0;
  // first failure, for replay
  long failed_index = -1;
  Mat failed_q;
  CheckReport failed_report{StructureKind::xvr, {}};
  bool all_pass() const { return passed == total; }
};

/// Deterministic given the seed: samples q matrices, runs the matching
/// factory + checker per sample.  xvr kinds run the full derivation-pair
/// check plus the compatibility suite; bimyb-lr runs the even-tempered
/// check; assoc-theta runs the commuting-pair check with the special
/// identity required.
SweepResult random_sweep(SweepKind kind, std::size_t n, std::size_t samples, std::uint64_t seed,
                         long max_num, long max_den);

}  // namespace lieop
