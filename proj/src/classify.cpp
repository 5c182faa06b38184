#include "lieop/classify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lieop {

void Poly2::add_term(unsigned da, unsigned db, const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(da, db);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Poly2::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == std::make_pair(0u, 0u));
}

unsigned Poly2::deg_a() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.first);
  return d;
}

unsigned Poly2::deg_b() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.second);
  return d;
}

Scalar Poly2::eval(const Scalar& a, const Scalar& b) const {
  Scalar r;
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (unsigned k = 0; k < m.first; ++k) t *= a;
    for (unsigned k = 0; k < m.second; ++k) t *= b;
    r += t;
  }
  return r;
}

Poly2 Poly2::coeff_of_a(unsigned k) const {
  Poly2 r;
  for (const auto& [m, c] : terms_)
    if (m.first == k) r.add_term(0, m.second, c);
  return r;
}

namespace {

// Lex order with a > b.
bool mono_less(const std::pair<unsigned, unsigned>& x, const std::pair<unsigned, unsigned>& y) {
  if (x.first != y.first) return x.first < y.first;
  return x.second < y.second;
}

std::pair<unsigned, unsigned> leading_mono(const Poly2& p) {
  std::pair<unsigned, unsigned> best{0, 0};
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (first || mono_less(best, m)) best = m;
    first = false;
  }
  return best;
}

Scalar leading_coeff(const Poly2& p) {
  auto lm = leading_mono(p);
  auto it = p.terms().find(lm);
  return it == p.terms().end() ? Scalar(0) : it->second;
}

Poly2 monomial(unsigned da, unsigned db, const Scalar& c) {
  Poly2 p;
  p.add_term(da, db, c);
  return p;
}

}  // namespace

Poly2 Poly2::normalized() const {
  if (is_zero()) return *this;
  Scalar lc = leading_coeff(*this);
  Poly2 r;
  for (const auto& [m, c] : terms_) r.add_term(m.first, m.second, c / lc);
  return r;
}

Poly2 operator+(const Poly2& x, const Poly2& y) {
  Poly2 r = x;
  for (const auto& [m, c] : y.terms_) r.add_term(m.first, m.second, c);
  return r;
}

Poly2 operator-(const Poly2& x, const Poly2& y) {
  Poly2 r = x;
  for (const auto& [m, c] : y.terms_) r.add_term(m.first, m.second, -c);
  return r;
}

Poly2 operator*(const Poly2& x, const Poly2& y) {
  Poly2 r;
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_)
      r.add_term(mx.first + my.first, mx.second + my.second, cx * cy);
  return r;
}

Poly2 operator*(const Scalar& s, const Poly2& y) {
  Poly2 r;
  for (const auto& [m, c] : y.terms_) r.add_term(m.first, m.second, s * c);
  return r;
}

Poly2 Poly2::operator-() const { return Scalar(-1) * *this; }

bool operator<(const Poly2& x, const Poly2& y) {
  auto xi = x.terms_.begin();
  auto yi = y.terms_.begin();
  for (; xi != x.terms_.end() && yi != y.terms_.end(); ++xi, ++yi) {
    if (xi->first != yi->first) return xi->first < yi->first;
    if (xi->second != yi->second) return xi->second < yi->second;
  }
  return xi == x.terms_.end() && yi != y.terms_.end();
}

std::string Poly2::str() const {
  if (is_zero()) return "0";
  // highest lex term first
  std::vector<std::pair<std::pair<unsigned, unsigned>, Scalar>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(),
            [](const auto& u, const auto& v) { return mono_less(v.first, u.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : ts) {
    Scalar coeff = c;
    if (first) {
      if (coeff.sign() < 0) {
        os << "-";
        coeff = -coeff;
      }
    } else {
      os << (coeff.sign() < 0 ? " - " : " + ");
      if (coeff.sign() < 0) coeff = -coeff;
    }
    first = false;
    const bool has_var = m.first > 0 || m.second > 0;
    if (!has_var || coeff != Scalar(1)) os << coeff.str();
    if (has_var && coeff != Scalar(1)) os << "*";
    if (m.first > 0) os << "a" << (m.first > 1 ? "^" + std::to_string(m.first) : "");
    if (m.first > 0 && m.second > 0) os << "*";
    if (m.second > 0) os << "b" << (m.second > 1 ? "^" + std::to_string(m.second) : "");
  }
  return os.str();
}

namespace {

// ---- symbolic vectors/matrices over Poly2 -------------------------------

using PVec = std::vector<Poly2>;

struct PMat {
  std::size_t n = 0;
  std::vector<Poly2> e;  // row-major
  explicit PMat(std::size_t dim) : n(dim), e(dim * dim) {}
  Poly2& at(std::size_t i, std::size_t j) { return e[i * n + j]; }
  const Poly2& at(std::size_t i, std::size_t j) const { return e[i * n + j]; }
};

PVec to_pvec(const Vec& v) {
  PVec r(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) r[i] = Poly2(v[i]);
  return r;
}

PVec app_p(const PMat& m, const PVec& v) {
  PVec r(m.n);
  for (std::size_t i = 0; i < m.n; ++i) {
    Poly2 acc;
    for (std::size_t j = 0; j < m.n; ++j) acc = acc + m.at(i, j) * v[j];
    r[i] = acc;
  }
  return r;
}

PVec app_r(const Mat& m, const PVec& v) {
  PVec r(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Poly2 acc;
    for (std::size_t j = 0; j < m.dim(); ++j) acc = acc + Poly2(m.at(i, j)) * v[j];
    r[i] = acc;
  }
  return r;
}

PMat mul(const PMat& x, const PMat& y) {
  PMat r(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t j = 0; j < x.n; ++j) {
      Poly2 acc;
      for (std::size_t k = 0; k < x.n; ++k) acc = acc + x.at(i, k) * y.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

PVec sub(const PVec& x, const PVec& y) {
  PVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

PVec add(const PVec& x, const PVec& y) {
  PVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

PVec bracket_sym(const BilinearMap& b, const PVec& x, const PVec& y) {
  const std::size_t n = b.dim();
  PVec r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Poly2 c = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (b.at(i, j, k).is_zero()) continue;
        r[k] = r[k] + b.at(i, j, k) * c;
      }
    }
  }
  return r;
}

// rho_q with symbolic (a, b): entries a*(q.q) I + b * q q^T.
PMat symbolic_rho(const Vec& q) {
  const std::size_t n = q.dim();
  Scalar qq;
  for (std::size_t i = 0; i < n; ++i) qq += q[i] * q[i];
  PMat m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Poly2 p;
      if (i == j) p.add_term(1, 0, qq);
      p.add_term(0, 1, q[i] * q[j]);
      m.at(i, j) = p;
    }
  return m;
}

// ---- exact elimination (lex a > b) ---------------------------------------

bool mono_divides(const std::pair<unsigned, unsigned>& d, const std::pair<unsigned, unsigned>& m) {
  return d.first <= m.first && d.second <= m.second;
}

Poly2 reduce_mod(Poly2 p, const std::vector<Poly2>& basis) {
  bool changed = true;
  while (changed && !p.is_zero()) {
    changed = false;
    auto lm = leading_mono(p);
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      auto gm = leading_mono(g);
      if (!mono_divides(gm, lm)) continue;
      Scalar factor = leading_coeff(p) / leading_coeff(g);
      Poly2 q = monomial(lm.first - gm.first, lm.second - gm.second, factor);
      p = p - q * g;
      changed = true;
      break;
    }
  }
  return p;
}

std::vector<Poly2> groebner(std::vector<Poly2> gens) {
  std::vector<Poly2> basis;
  for (auto& g : gens)
    if (!g.is_zero()) basis.push_back(g.normalized());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t m = basis.size();
    for (std::size_t i = 0; i < m && !grew; ++i)
      for (std::size_t j = i + 1; j < m && !grew; ++j) {
        auto mi = leading_mono(basis[i]);
        auto mj = leading_mono(basis[j]);
        std::pair<unsigned, unsigned> lcm{std::max(mi.first, mj.first),
                                          std::max(mi.second, mj.second)};
        Poly2 spoly =
            monomial(lcm.first - mi.first, lcm.second - mi.second, Scalar(1)) * basis[i] -
            monomial(lcm.first - mj.first, lcm.second - mj.second,
                     leading_coeff(basis[i]) / leading_coeff(basis[j])) *
                basis[j];
        Poly2 rem = reduce_mod(spoly, basis);
        if (!rem.is_zero()) {
          basis.push_back(rem.normalized());
          grew = true;
        }
      }
  }
  // interreduce
  std::vector<Poly2> reduced;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::vector<Poly2> others;
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (j != i) others.push_back(basis[j]);
    Poly2 r = reduce_mod(basis[i], others);
    if (!r.is_zero()) reduced.push_back(r.normalized());
  }
  std::sort(reduced.begin(), reduced.end());
  reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
  return reduced;
}

// Rational roots of a univariate polynomial (given as Poly2 in b or a),
// with the multiplicity-stripped cofactor degree returned so callers know
// whether the factorization over Q was complete.
struct RootResult {
  std::vector<Scalar> roots;
  bool complete = true;  // all roots rational
};

RootResult rational_roots_in_b(const Poly2& p) {
  RootResult out;
  // clear denominators -> integer coefficients indexed by degree
  unsigned deg = p.deg_b();
  mpz_class lcm_den = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_class den(c.den_str());
    lcm_den = lcm_den / gcd(lcm_den, den) * den;
  }
  std::vector<mpz_class> coeff(deg + 1, mpz_class(0));
  for (const auto& [m, c] : p.terms()) {
    mpz_class num(c.num_str()), den(c.den_str());
    coeff[m.second] += num * (lcm_den / den);
  }
  // strip zero roots
  std::vector<mpz_class> work = coeff;
  unsigned low = 0;
  while (low <= deg && work[low] == 0) ++low;
  if (low > 0) out.roots.push_back(Scalar(0));
  std::vector<mpz_class> poly(work.begin() + low, work.end());
  if (poly.size() <= 1) return out;

  auto divisors = [](mpz_class v) {
    std::vector<mpz_class> ds;
    v = abs(v);
    for (mpz_class d = 1; d * d <= v; ++d)
      if (v % d == 0) {
        ds.push_back(d);
        if (d * d != v) ds.push_back(v / d);
      }
    return ds;
  };
  auto eval_at = [&](const std::vector<mpz_class>& cs, const mpq_class& x) {
    mpq_class acc = 0;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * x + mpq_class(*it);
    return acc;
  };
  auto deflate = [](std::vector<mpz_class>& cs, const mpq_class& root) {
    // synthetic division by (x - root) over Q, then re-clear denominators
    std::vector<mpq_class> qs(cs.size() - 1);
    mpq_class carry = 0;
    for (std::size_t k = cs.size(); k-- > 1;) {
      carry = mpq_class(cs[k]) + carry * root;
      qs[k - 1] = carry;
    }
    mpz_class l = 1;
    for (auto& q : qs) {
      q.canonicalize();
      l = l / gcd(l, q.get_den()) * q.get_den();
    }
    std::vector<mpz_class> out;
    for (auto& q : qs) out.push_back(mpz_class(q * l));
    cs = std::move(out);
  };

  bool progress = true;
  while (poly.size() > 1 && progress) {
    progress = false;
    for (const auto& pnum : divisors(poly.front())) {
      for (const auto& pden : divisors(poly.back())) {
        for (int sign : {1, -1}) {
          mpq_class cand(sign * pnum, pden);
          cand.canonicalize();
          if (eval_at(poly, cand) == 0) {
            out.roots.push_back(Scalar(mpq_class(cand)));
            deflate(poly, cand);
            progress = true;
            break;
          }
        }
        if (progress) break;
      }
      if (progress) break;
    }
  }
  if (poly.size() > 1) out.complete = false;
  std::sort(out.roots.begin(), out.roots.end());
  out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
  return out;
}

std::vector<Scalar> grid_values(long bound) {
  std::set<mpq_class> vals;
  for (long num = -bound; num <= bound; ++num)
    for (long den = 1; den <= bound; ++den) {
      mpq_class v(num, den);
      v.canonicalize();
      vals.insert(v);
    }
  std::vector<Scalar> out;
  for (const auto& v : vals) out.push_back(Scalar(mpq_class(v)));
  return out;
}

}  // namespace

std::string ClassificationReport::str() const {
  std::ostringstream os;
  os << "ansatz: " << ansatz << "\n";
  os << "sample q count: " << sample_qs.size() << ", raw nonzero constraints: "
     << raw_constraints.size() << "\n";
  os << "distinct constraints:";
  for (const auto& p : distinct_constraints) os << " {" << p.str() << "}";
  os << "\n";
  os << "reduced generators:";
  for (const auto& p : generators) os << " {" << p.str() << "}";
  os << "\n";
  switch (variety) {
    case VarietyKind::empty: os << "solution set: empty\n"; break;
    case VarietyKind::plane: os << "solution set: every (a,b)\n"; break;
    case VarietyKind::finite: {
      os << "solution set (finite):";
      for (const auto& [a, b] : solution_points)
        os << " (" << a.str() << ", " << b.str() << ")";
      os << "\n";
      break;
    }
    case VarietyKind::curve: {
      os << "solution set: curve " << parametrization << "; sample points:";
      for (const auto& [a, b] : solution_points)
        os << " (" << a.str() << ", " << b.str() << ")";
      os << "\n";
      break;
    }
  }
  os << "contains the restriction family (a,b)=(0,-1): " << (contains_canonical ? "yes" : "no")
     << "\n";
  os << "restriction family is the only solution: " << (canonical_is_unique ? "yes" : "no")
     << "\n";
  os << "reported solutions re-verified: " << (solutions_reverified ? "yes" : "no") << "\n";
  if (grid_checked) {
    os << "grid sweep agreement: " << (grid_agrees ? "yes" : "no") << " ("
       << grid_solutions.size() << " grid solutions)\n";
  }
  return os.str();
}

ClassificationReport classify_so3(bool run_grid, long grid_bound) {
  ClassificationReport rep;
  rep.ansatz =
      "rho_q x = a (q.q) x + b (q.x) q on the cross-product algebra; "
      "the only rotation-equivariant maps quadratic in q "
      "(q x (q x x) = (q.x) q - (q.q) x is dependent)";

  const LieAlgebra so3 = LieAlgebra::so3_vector_form();
  const std::size_t n = 3;
  rep.sample_qs = default_sample_qs(n);
  {
    Vec ones(n);
    for (std::size_t i = 0; i < n; ++i) ones[i] = Scalar(1);
    rep.sample_qs.push_back(ones);
  }

  // Residuals of the five defining identities, symbolically in (a, b).
  for (std::size_t qi = 0; qi < rep.sample_qs.size(); ++qi) {
    const Vec& q = rep.sample_qs[qi];
    const Mat xi = so3.ad(q);
    const Mat xi2 = xi * xi;
    const PMat rho = symbolic_rho(q);
    const PMat rho2 = mul(rho, rho);
    const BilinearMap& amb = so3.bracket();

    auto record = [&](const char* identity, std::size_t i, std::size_t j, const PVec& res) {
      for (std::size_t comp = 0; comp < res.size(); ++comp)
        if (!res[comp].is_zero())
          rep.raw_constraints.push_back({identity, qi, i, j, comp, res[comp]});
    };

    // commutation of ad q with rho_q: xi*rho - rho*xi, entrywise
    {
      PMat xr(n), rx(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Poly2 acc1, acc2;
          for (std::size_t k = 0; k < n; ++k) {
            acc1 = acc1 + Poly2(xi.at(i, k)) * rho.at(k, j);
            acc2 = acc2 + rho.at(i, k) * Poly2(xi.at(k, j));
          }
          xr.at(i, j) = acc1;
          rx.at(i, j) = acc2;
        }
      for (std::size_t jcol = 0; jcol < n; ++jcol) {
        PVec res(n);
        for (std::size_t i = 0; i < n; ++i) res[i] = xr.at(i, jcol) - rx.at(i, jcol);
        record("commute", jcol, jcol, res);
      }
    }

    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const PVec ei = to_pvec(Vec::basis(n, i));
        const PVec ej = to_pvec(Vec::basis(n, j));
        const PVec rei = app_p(rho, ei);
        const PVec rej = app_p(rho, ej);
        const PVec xei = app_r(xi, ei);
        const PVec xej = app_r(xi, ej);

        // derivation property of ad q (identically zero by Jacobi; kept
        // in the sweep so the record is complete)
        record("derivation", i, j,
               sub(app_r(xi, bracket_sym(amb, ei, ej)),
                   add(bracket_sym(amb, xei, ej), bracket_sym(amb, ei, xej))));

        PVec b_rho = sub(sub(add(bracket_sym(amb, rei, ej), bracket_sym(amb, ei, rej)),
                             app_p(rho, bracket_sym(amb, ei, ej))),
                         bracket_sym(amb, xei, xej));

        record("identity-1", i, j,
               sub(app_p(rho, b_rho), bracket_sym(amb, rei, rej)));
        record("identity-2", i, j,
               sub(app_r(xi, b_rho),
                   add(bracket_sym(amb, rei, xej), bracket_sym(amb, xei, rej))));
        PVec i3_rhs = add(bracket_sym(amb, app_p(rho2, ei), ej),
                          bracket_sym(amb, ei, app_p(rho2, ej)));
        PVec two_rr = bracket_sym(amb, rei, rej);
        for (auto& p : two_rr) p = Scalar(2) * p;
        i3_rhs = sub(i3_rhs, two_rr);
        record("identity-3", i, j, sub(app_r(xi2, b_rho), i3_rhs));
      }
  }

  // Normalize and deduplicate.
  {
    std::set<Poly2> uniq;
    for (const auto& rc : rep.raw_constraints) uniq.insert(rc.poly.normalized());
    rep.distinct_constraints.assign(uniq.begin(), uniq.end());
  }

  rep.generators = groebner(rep.distinct_constraints);

  // Interpret the reduced system.
  bool inconsistent = false;
  for (const auto& g : rep.generators)
    if (!g.is_zero() && g.is_constant()) inconsistent = true;

  if (inconsistent) {
    rep.variety = ClassificationReport::VarietyKind::empty;
  } else if (rep.generators.empty()) {
    rep.variety = ClassificationReport::VarietyKind::plane;
  } else if (rep.generators.size() == 1 && rep.generators[0].deg_a() == 1 &&
             rep.generators[0].coeff_of_a(1).is_constant()) {
    // a = -g0(b) / c: a rational curve of solutions, one for every b.
    const Poly2& g = rep.generators[0];
    const Poly2 g0 = g.coeff_of_a(0);
    const Scalar c = g.coeff_of_a(1).eval(Scalar(0), Scalar(0));
    rep.variety = ClassificationReport::VarietyKind::curve;
    {
      Poly2 rhs = Scalar(-1) / c * g0;
      rep.parametrization = "a = " + rhs.str() + " (b free)";
    }
    for (long num : {0L, -1L, 1L, -2L, 2L, -3L}) {
      for (long den : {1L, 2L}) {
        Scalar b(num, den);
        Scalar a = (Scalar(-1) / c) * g0.eval(Scalar(0), b);
        rep.solution_points.emplace_back(a, b);
      }
    }
  } else {
    // Try the zero-dimensional (triangular) reading: a univariate
    // generator in b plus back-substitution.
    const Poly2* univ_b = nullptr;
    for (const auto& g : rep.generators)
      if (g.deg_a() == 0) univ_b = &g;
    if (univ_b) {
      RootResult rb = rational_roots_in_b(*univ_b);
      if (!rb.complete) rep.parametrization = "(irrational roots present; not enumerated)";
      rep.variety = ClassificationReport::VarietyKind::finite;
      for (const Scalar& b : rb.roots) {
        // substitute b, solve the remaining univariate polys in a
        std::vector<Scalar> cand_a;
        bool have = false;
        for (const auto& g : rep.generators) {
          if (g.deg_a() == 0) continue;
          Poly2 in_a;
          for (const auto& [m, c] : g.terms()) {
            Scalar bc = c;
            for (unsigned k = 0; k < m.second; ++k) bc *= b;
            in_a.add_term(0, m.first, bc);  // reuse b-slot for a-degree
          }
          RootResult ra = rational_roots_in_b(in_a);
          if (!ra.complete) rep.parametrization = "(irrational roots present; not enumerated)";
          if (!have) {
            cand_a = ra.roots;
            have = true;
          } else {
            std::vector<Scalar> keep;
            for (const auto& x : cand_a)
              if (std::find(ra.roots.begin(), ra.roots.end(), x) != ra.roots.end())
                keep.push_back(x);
            cand_a = keep;
          }
        }
        for (const Scalar& a : cand_a) {
          bool all_zero = true;
          for (const auto& g : rep.distinct_constraints)
            if (!g.eval(a, b).is_zero()) all_zero = false;
          if (all_zero) rep.solution_points.emplace_back(a, b);
        }
      }
    } else {
      rep.variety = ClassificationReport::VarietyKind::curve;
      rep.parametrization = "(implicit; generators listed above)";
    }
  }

  // Membership of the restriction family and uniqueness.
  {
    const Scalar a0(0), b0(-1);
    bool member = true;
    for (const auto& g : rep.distinct_constraints)
      if (!g.eval(a0, b0).is_zero()) member = false;
    rep.contains_canonical = member;
    rep.canonical_is_unique =
        rep.variety == ClassificationReport::VarietyKind::finite &&
        rep.solution_points.size() == 1 && member;
  }

  // Every reported solution re-passes the full structure check.
  {
    bool all_ok = !rep.solution_points.empty();
    for (const auto& [a, b] : rep.solution_points) {
      QuadraticRhoFamily f = ansatz_family(a, b);
      if (!check_xvr_structure(f, default_sample_qs(3)).overall()) all_ok = false;
    }
    rep.solutions_reverified = all_ok;
  }

  if (run_grid) {
    rep.grid_checked = true;
    rep.grid_agrees = true;
    const std::vector<Scalar> vals = grid_values(grid_bound);
    const std::vector<Vec> qs = default_sample_qs(3);
    for (const Scalar& a : vals)
      for (const Scalar& b : vals) {
        bool sym_ok = true;
        for (const auto& g : rep.distinct_constraints)
          if (!g.eval(a, b).is_zero()) {
            sym_ok = false;
            break;
          }
        QuadraticRhoFamily f = ansatz_family(a, b);
        bool num_ok = check_xvr_structure(f, qs).overall();
        if (sym_ok != num_ok) rep.grid_agrees = false;
        if (num_ok) rep.grid_solutions.emplace_back(a, b);
      }
  }
  return rep;
}

}  // namespace lieop
