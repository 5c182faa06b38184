#include "lieop/random_sweep.hpp"

#include "lieop/factories.hpp"

namespace lieop {

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

long Rng::next_in(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(next() % span);
}

Scalar Rng::next_rational(long max_num, long max_den) {
  return Scalar(next_in(-max_num, max_num), next_in(1, max_den));
}

Mat random_matrix(Rng& rng, std::size_t n, long max_num, long max_den) {
  Mat m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng.next_rational(max_num, max_den);
  return m;
}

Mat random_antisymmetric(Rng& rng, std::size_t n, long max_num, long max_den) {
  Mat m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Scalar v = rng.next_rational(max_num, max_den);
      m.at(i, j) = v;
      m.at(j, i) = -v;
    }
  return m;
}

SweepKind sweep_kind_from_string(const std::string& s) {
  if (s == "xvr-gl") return SweepKind::xvr_gl;
  if (s == "xvr-so") return SweepKind::xvr_so;
  if (s == "bimyb-lr") return SweepKind::bimyb_lr;
  if (s == "assoc-theta") return SweepKind::assoc_theta;
  throw input_error("unknown sweep kind '" + s +
                    "' (expected xvr-gl, xvr-so, bimyb-lr or assoc-theta)");
}

SweepResult random_sweep(SweepKind kind, std::size_t n, std::size_t samples, std::uint64_t seed,
                         long max_num, long max_den) {
  Rng rng(seed);
  SweepResult out;
  out.total = samples;
  for (std::size_t s = 0; s < samples; ++s) {
    Mat q = (kind == SweepKind::xvr_so) ? random_antisymmetric(rng, n, max_num, max_den)
                                        : random_matrix(rng, n, max_num, max_den);
    CheckReport rep{StructureKind::xvr, {}};
    switch (kind) {
      case SweepKind::xvr_gl:
      case SweepKind::xvr_so: {
        OperatorTriple t = (kind == SweepKind::xvr_gl) ? gl_example(n, q) : so_example(n, q);
        rep = check_xvr(t);
        if (rep.overall()) {
          CheckReport t1 = theorem1_suite(t);
          for (auto& c : t1.checks) rep.checks.push_back(std::move(c));
        }
        break;
      }
      case SweepKind::bimyb_lr: {
        BiMybPair p = bi_myb_left_right(n, q);
        rep = check_even_tempered(*p.algebra, p.r1, p.r2);
        break;
      }
      case SweepKind::assoc_theta: {
        ThetaRhoTriple t = assoc_theta_example(n, q);
        rep = check_theta_rho(*t.algebra, t.theta, t.rho, /*require_special=*/true);
        break;
      }
    }
    if (rep.overall()) {
      ++out.passed;
    } else if (out.failed_index < 0) {
      out.failed_index = static_cast<long>(s);
      out.failed_q = q;
      out.failed_report = std::move(rep);
    }
  }
  return out;
}

}  // namespace lieop
