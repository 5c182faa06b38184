#pragma once

#include "lieop/checkers.hpp"

namespace lieop {

enum class TowerFamily { rrho, xvr, theta };
std::string to_string(TowerFamily f);

/// The source text is inconsistent about the auxiliary operator feeding
/// the doubling recursions (rho + xi^2 vs 2 rho + xi^2); the tower takes
/// the variant explicitly and the verdict tables decide by data.
enum class ThetaVariant { two_rho_plus_xi_sq, rho_plus_xi_sq };
std::string to_string(ThetaVariant v);
ThetaVariant theta_variant_from_string(const std::string& s);

/// One rung of a tower.  Level 0 carries the recursion's seed data
/// (R_0 = Theta_0 = identity with rho^0 = identity); its class check is
/// recorded in full but marked seed_data and does not gate the tower
/// verdict, since the degenerate identity pair fails the class identities
/// on every nonabelian algebra.  Levels n >= 1 gate.
struct TowerLevel {
  unsigned n = 0;
  bool seed_data = false;
  Mat op;                                 // R_n / Theta_n
  Mat rho_power;                          // rho^n / rho^2n
  std::optional<Mat> xi_op;               // xvr family: xi_n
  CheckReport op_check;                   // (R_n, rho^n) or (Theta_n, rho^2n)
  std::optional<CheckReport> xi_check;    // xvr family: (xi_n, rho^(2n+1))

  bool passes() const {
    bool ok = seed_data ? true : op_check.overall();
    if (xi_check) ok = ok && xi_check->overall();
    return ok;
  }
};

struct TowerReport {
  TowerFamily family;
  ThetaVariant variant = ThetaVariant::two_rho_plus_xi_sq;  // xvr family only
  unsigned depth = 0;
  std::vector<TowerLevel> levels;

  bool all_levels_pass() const {
    for (const auto& l : levels)
      if (!l.passes()) return false;
    return true;
  }
  /// First failing level, or -1 when all pass.
  int first_failing_level() const {
    for (const auto& l : levels)
      if (!l.passes()) return static_cast<int>(l.n);
    return -1;
  }
  std::string str() const;
};

/// R_{n+1} = R R_n - rho R_{n-1}, R_0 = 1, R_1 = R; level n checks
/// (g, R_n, rho^n) as a regular operator-pair algebra.  Requires the seed
/// to pass the regular check with commuting R, rho; refuses otherwise.
TowerReport rrho_tower(const AlgebraPtr& l, const Mat& r, const Mat& rho, unsigned depth);

/// Doubling tower of a derivation-pair algebra: with T per variant,
///   R_{n+1} = T R_n - rho^2 R_{n-1},  R_0 = 1, R_1 = T,
///   xi_{n+1} = T xi_n + rho^2 xi_{n-1},  xi_0 = xi, xi_1 = (T + rho) xi;
/// level n checks (g, R_n, rho^2n) as regular operator-pair and
/// (g, xi_n, rho^(2n+1)) as derivation-pair.
TowerReport xvr_tower(const AlgebraPtr& l, const Mat& xi, const Mat& rho, unsigned depth,
                      ThetaVariant variant);

/// Theta_{n+1} = Theta Theta_n - rho^2 Theta_{n-1}; level n checks
/// (g, Theta_n, rho^2n).
TowerReport theta_tower(const AlgebraPtr& l, const Mat& theta, const Mat& rho, unsigned depth);

/// Derivation pair to commuting pair: Theta = 2 rho + xi^2, same rho.
std::pair<Mat, CheckReport> xvr_to_theta(const AlgebraPtr& l, const Mat& xi, const Mat& rho);

/// Regular operator pair to commuting pair: Theta = R^2 - 2 rho, same rho.
std::pair<Mat, CheckReport> rrho_to_theta(const AlgebraPtr& l, const Mat& r, const Mat& rho);

}  // namespace lieop
