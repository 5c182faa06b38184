#include "lieop/towers.hpp"

#include <sstream>

namespace lieop {

std::string to_string(TowerFamily f) {
  switch (f) {
    case TowerFamily::rrho: return "rrho";
    case TowerFamily::xvr: return "xvr";
    case TowerFamily::theta: return "theta";
  }
  return "?";
}

std::string to_string(ThetaVariant v) {
  return v == ThetaVariant::two_rho_plus_xi_sq ? "2rho+xi2" : "rho+xi2";
}

ThetaVariant theta_variant_from_string(const std::string& s) {
  if (s == "2rho+xi2") return ThetaVariant::two_rho_plus_xi_sq;
  if (s == "rho+xi2") return ThetaVariant::rho_plus_xi_sq;
  throw input_error("unknown theta variant '" + s + "' (expected 2rho+xi2 or rho+xi2)");
}

std::string TowerReport::str() const {
  std::ostringstream os;
  os << to_string(family) << " tower, depth " << depth;
  if (family == TowerFamily::xvr) os << ", variant " << to_string(variant);
  os << ": " << (all_levels_pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& lv : levels) {
    os << "level " << lv.n << (lv.seed_data ? " (seed data)" : "") << ": "
       << (lv.passes() ? "pass" : "FAIL") << "\n";
    {
      std::istringstream in(lv.op_check.str());
      std::string line;
      while (std::getline(in, line)) os << "  " << line << "\n";
    }
    if (lv.xi_check) {
      std::istringstream in(lv.xi_check->str());
      std::string line;
      while (std::getline(in, line)) os << "  " << line << "\n";
    }
  }
  return os.str();
}

namespace {

// Tower operators are polynomials in commuting seeds, so this can only
// trip on an implementation fault, never on input.
void assert_commutes_with(const Mat& op, const Mat& rho, const char* what) {
  if (!commute(op, rho)) throw std::logic_error(std::string(what) + " stopped commuting with rho");
}

// Entries grow exponentially with depth; exact arithmetic keeps them
// correct but large.
void check_depth(unsigned depth) {
  if (depth > 16) throw input_error("tower depth capped at 16");
}

}  // namespace

TowerReport rrho_tower(const AlgebraPtr& l, const Mat& r, const Mat& rho, unsigned depth) {
  check_depth(depth);
  {
    CheckReport seed = check_rrho(*l, r, rho, /*require_regular=*/true);
    if (!seed.overall())
      throw precondition_error("tower seed is not a regular operator-pair algebra",
                               std::move(seed));
    if (!commute(r, rho)) {
      CheckReport rep{StructureKind::rrho_regular, {}};
      rep.add("commute(R,rho)", false, {});
      throw precondition_error("tower seed operators do not commute", std::move(rep));
    }
  }
  const std::size_t d = l->dim();
  TowerReport out{TowerFamily::rrho, ThetaVariant::two_rho_plus_xi_sq, depth, {}};
  Mat prev = Mat::identity(d);  // R_0
  Mat cur = r;                  // R_1
  Mat rho_pow = Mat::identity(d);
  for (unsigned n = 0; n <= depth; ++n) {
    const Mat& rn = (n == 0) ? prev : cur;
    assert_commutes_with(rn, rho, "tower operator");
    TowerLevel lv;
    lv.n = n;
    lv.seed_data = (n == 0);
    lv.op = rn;
    lv.rho_power = rho_pow;
    lv.op_check = check_rrho(*l, rn, rho_pow, true);
    out.levels.push_back(std::move(lv));
    rho_pow = rho_pow * rho;
    if (n >= 1) {
      Mat next = r * cur - rho * prev;
      prev = cur;
      cur = std::move(next);
    }
  }
  return out;
}

TowerReport xvr_tower(const AlgebraPtr& l, const Mat& xi, const Mat& rho, unsigned depth,
                      ThetaVariant variant) {
  check_depth(depth);
  {
    CheckReport seed = check_xvr(OperatorTriple(l, xi, rho));
    if (!seed.overall())
      throw precondition_error("tower seed is not a derivation-pair algebra", std::move(seed));
  }
  const std::size_t d = l->dim();
  const Mat xi2 = xi * xi;
  const Mat t = (variant == ThetaVariant::two_rho_plus_xi_sq) ? Scalar(2) * rho + xi2
                                                              : rho + xi2;
  const Mat rho2 = rho * rho;

  TowerReport out{TowerFamily::xvr, variant, depth, {}};
  Mat r_prev = Mat::identity(d), r_cur = t;
  Mat xi_prev = xi, xi_cur = (t + rho) * xi;
  Mat rho_even = Mat::identity(d);  // rho^(2n)
  Mat rho_odd = rho;                // rho^(2n+1)
  for (unsigned n = 0; n <= depth; ++n) {
    const Mat& rn = (n == 0) ? r_prev : r_cur;
    const Mat& xn = (n == 0) ? xi_prev : xi_cur;
    assert_commutes_with(rn, rho, "tower operator");
    assert_commutes_with(xn, rho, "tower derivation");
    TowerLevel lv;
    lv.n = n;
    lv.seed_data = (n == 0);
    lv.op = rn;
    lv.rho_power = rho_even;
    lv.xi_op = xn;
    lv.op_check = check_rrho(*l, rn, rho_even, true);
    lv.xi_check = check_xvr(OperatorTriple(l, xn, rho_odd));
    out.levels.push_back(std::move(lv));
    rho_even = rho_even * rho2;
    rho_odd = rho_odd * rho2;
    if (n >= 1) {
      Mat r_next = t * r_cur - rho2 * r_prev;
      r_prev = r_cur;
      r_cur = std::move(r_next);
      Mat xi_next = t * xi_cur + rho2 * xi_prev;
      xi_prev = xi_cur;
      xi_cur = std::move(xi_next);
    }
  }
  return out;
}

TowerReport theta_tower(const AlgebraPtr& l, const Mat& theta, const Mat& rho, unsigned depth) {
  check_depth(depth);
  {
    CheckReport seed = check_theta_rho(*l, theta, rho, /*require_special=*/false);
    if (!seed.overall())
      throw precondition_error("tower seed is not a commuting-pair algebra", std::move(seed));
  }
  const std::size_t d = l->dim();
  const Mat rho2 = rho * rho;
  TowerReport out{TowerFamily::theta, ThetaVariant::two_rho_plus_xi_sq, depth, {}};
  Mat prev = Mat::identity(d), cur = theta;
  Mat rho_pow = Mat::identity(d);  // rho^(2n)
  for (unsigned n = 0; n <= depth; ++n) {
    const Mat& tn = (n == 0) ? prev : cur;
    assert_commutes_with(tn, rho, "tower operator");
    TowerLevel lv;
    lv.n = n;
    lv.seed_data = (n == 0);
    lv.op = tn;
    lv.rho_power = rho_pow;
    lv.op_check = check_theta_rho(*l, tn, rho_pow, false);
    out.levels.push_back(std::move(lv));
    rho_pow = rho_pow * rho2;
    if (n >= 1) {
      Mat next = theta * cur - rho2 * prev;
      prev = cur;
      cur = std::move(next);
    }
  }
  return out;
}

std::pair<Mat, CheckReport> xvr_to_theta(const AlgebraPtr& l, const Mat& xi, const Mat& rho) {
  CheckReport seed = check_xvr(OperatorTriple(l, xi, rho));
  if (!seed.overall())
    throw precondition_error("triple is not a derivation-pair algebra", std::move(seed));
  Mat theta = Scalar(2) * rho + xi * xi;
  CheckReport rep = check_theta_rho(*l, theta, rho, false);
  return {std::move(theta), std::move(rep)};
}

std::pair<Mat, CheckReport> rrho_to_theta(const AlgebraPtr& l, const Mat& r, const Mat& rho) {
  CheckReport seed = check_rrho(*l, r, rho, true);
  if (!seed.overall())
    throw precondition_error("pair is not a regular operator-pair algebra", std::move(seed));
  if (!commute(r, rho)) {
    CheckReport rep{StructureKind::rrho_regular, {}};
    rep.add("commute(R,rho)", false, {});
    throw precondition_error("operators do not commute", std::move(rep));
  }
  Mat theta = r * r - Scalar(2) * rho;
  CheckReport rep = check_theta_rho(*l, theta, rho, false);
  return {std::move(theta), std::move(rep)};
}

}  // namespace lieop
