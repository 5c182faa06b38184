// Command-line front end: loads algebra/operator/family files, drives the
// checkers, factories, towers, the classifier and seeded random sweeps,
// and renders deterministic text or structured reports.
//
// Exit codes: 0 = all checks pass, 1 = a verified identity violation,
// 2 = input/validation/hypothesis error.  Never conflated.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "lieop/io.hpp"
#include "lieop/random_sweep.hpp"
#include "lieop/render.hpp"

namespace fs = std::filesystem;
using namespace lieop;

namespace {

struct Ctx {
  std::string command;
  std::vector<InputStamp> inputs;
  std::string report_mode = "text";

  void stamp(const fs::path& p) { inputs.push_back({p.string(), file_digest(p)}); }
};

AlgebraPtr load_algebra(Ctx& ctx, const fs::path& p) {
  AlgebraPtr a = read_algebra(p);
  ctx.stamp(p);
  return a;
}

Mat load_operator(Ctx& ctx, const fs::path& p, std::size_t expect_dim) {
  auto [name, m] = read_operator(p);
  if (m.dim() != expect_dim)
    throw input_error("'" + p.string() + "': operator dimension " + std::to_string(m.dim()) +
                      " does not match algebra dimension " + std::to_string(expect_dim));
  ctx.stamp(p);
  return m;
}

int emit_check_report(const Ctx& ctx, const CheckReport& rep) {
  if (ctx.report_mode == "structured")
    std::cout << structured_document(ctx.command, ctx.inputs, rep);
  else
    std::cout << rep.str();
  if (rep.precondition_failed()) return 2;
  return rep.overall() ? 0 : 1;
}

Vec parse_vector(const std::string& text, std::size_t dim) {
  std::vector<Scalar> coords;
  std::string tok;
  std::istringstream ss(text);
  while (std::getline(ss, tok, ',')) coords.push_back(Scalar::parse(tok));
  if (coords.size() != dim)
    throw input_error("vector '" + text + "' has " + std::to_string(coords.size()) +
                      " coordinates, expected " + std::to_string(dim));
  return Vec(std::move(coords));
}

std::string join_args(int argc, char** argv) {
  std::ostringstream os;
  for (int i = 0; i < argc; ++i) {
    if (i) os << " ";
    os << argv[i];
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for Lie algebras with unary operators"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  Ctx ctx;
  ctx.command = join_args(argc, argv);

  // ---- check ----
  auto* check = app.add_subcommand("check", "verify class membership with witnesses");
  std::string check_kind;
  std::string alg_path, op1_path, op2_path, family_path;
  bool flag_regular = false, flag_special = false, flag_even = false;
  check->add_option("kind", check_kind, "xvr | myb | bimyb | rrho | thetarho | structure")
      ->required();
  check->add_option("--algebra", alg_path, "algebra file")->required();
  check->add_option("--xi", op1_path, "derivation operator file (xvr)");
  check->add_option("--rho", op2_path, "rho operator file (xvr, rrho, thetarho)");
  check->add_option("--r", op1_path, "R operator file (myb, rrho)");
  check->add_option("--r1", op1_path, "R1 operator file (bimyb)");
  check->add_option("--r2", op2_path, "R2 operator file (bimyb)");
  check->add_option("--theta", op1_path, "Theta operator file (thetarho)");
  check->add_option("--family", family_path, "polarization file (structure)");
  check->add_flag("--regular", flag_regular, "also require the regularity identity (rrho)");
  check->add_flag("--special", flag_special, "also require the special identity (thetarho)");
  check->add_flag("--even-tempered", flag_even, "also require the balancing identities (bimyb)");
  check->add_option("--report", ctx.report_mode, "text | structured");

  // ---- example ----
  auto* example = app.add_subcommand("example", "emit a worked example as files");
  std::string ex_kind, q_path, out_dir = ".";
  std::size_t ex_n = 2;
  example->add_option("kind", ex_kind, "gl | so | bimyb-lr | assoc-theta")->required();
  example->add_option("--n", ex_n, "matrix size")->required();
  example->add_option("--q", q_path, "n x n matrix file for the parameter q")->required();
  example->add_option("--out", out_dir, "output directory (default .)");

  // ---- tower ----
  auto* tower = app.add_subcommand("tower", "build an operator tower and check every level");
  std::string tower_kind, variant_str = "2rho+xi2";
  unsigned depth = 3;
  tower->add_option("kind", tower_kind, "rrho | xvr | theta")->required();
  tower->add_option("--algebra", alg_path, "algebra file")->required();
  tower->add_option("--xi", op1_path, "derivation operator file (xvr)");
  tower->add_option("--r", op1_path, "R operator file (rrho)");
  tower->add_option("--theta", op1_path, "Theta operator file (theta)");
  tower->add_option("--rho", op2_path, "rho operator file")->required();
  tower->add_option("--depth", depth, "highest level N (levels 0..N)");
  tower->add_option("--theta-variant", variant_str, "2rho+xi2 | rho+xi2 (xvr only)");
  tower->add_option("--report", ctx.report_mode, "text | structured");

  // ---- ipair ----
  auto* ipair = app.add_subcommand("ipair", "induced-bracket pair of a quadratic family");
  std::string ip_kind = "so", ip_q, emit_bracket;
  std::size_t ip_n = 3;
  ipair->add_option("--kind", ip_kind, "canonical family: gl | so");
  ipair->add_option("--n", ip_n, "matrix size of the canonical family");
  ipair->add_option("--algebra", alg_path, "algebra file (with --family)");
  ipair->add_option("--family", family_path, "polarization file (instead of --kind/--n)");
  ipair->add_option("--q", ip_q, "comma-separated coordinates; default: conformance sweep");
  ipair->add_option("--emit-bracket", emit_bracket, "write the bracket at --q as an algebra file");
  ipair->add_option("--report", ctx.report_mode, "text | structured");

  // ---- classify ----
  auto* classify = app.add_subcommand("classify", "exact classification runs");
  std::string classify_target;
  bool grid_check = false;
  long grid_bound = 6;
  std::string emit_family_dir;
  classify->add_option("target", classify_target, "so3")->required();
  classify->add_flag("--grid-check", grid_check, "cross-check by rational grid sweep");
  classify->add_option("--grid-bound", grid_bound, "grid numerator/denominator bound");
  classify->add_option("--emit-family", emit_family_dir, "write the matching family here");
  classify->add_option("--report", ctx.report_mode, "text | structured");

  // ---- random ----
  auto* random = app.add_subcommand("random", "seeded randomized factory + checker sweeps");
  std::string rnd_kind;
  std::size_t rnd_n = 2, rnd_samples = 10;
  std::uint64_t rnd_seed = 1;
  long max_num = 9, max_den = 4;
  random->add_option("kind", rnd_kind, "xvr-gl | xvr-so | bimyb-lr | assoc-theta")->required();
  random->add_option("--n", rnd_n, "matrix size");
  random->add_option("--samples", rnd_samples, "sample count");
  random->add_option("--seed", rnd_seed, "RNG seed");
  random->add_option("--max-num", max_num, "numerator bound");
  random->add_option("--max-den", max_den, "denominator bound");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) {
      if (check_kind == "xvr") {
        AlgebraPtr l = load_algebra(ctx, alg_path);
        Mat xi = load_operator(ctx, op1_path, l->dim());
        Mat rho = load_operator(ctx, op2_path, l->dim());
        return emit_check_report(ctx, check_xvr(OperatorTriple(l, xi, rho)));
      }
      if (check_kind == "myb") {
        AlgebraPtr l = load_algebra(ctx, alg_path);
        Mat r = load_operator(ctx, op1_path, l->dim());
        return emit_check_report(ctx, check_myb(*l, r));
      }
      if (check_kind == "bimyb") {
        AlgebraPtr l = load_algebra(ctx, alg_path);
        Mat r1 = load_operator(ctx, op1_path, l->dim());
        Mat r2 = load_operator(ctx, op2_path, l->dim());
        return emit_check_report(
            ctx, flag_even ? check_even_tempered(*l, r1, r2) : check_bi_myb(*l, r1, r2));
      }
      if (check_kind == "rrho") {
        AlgebraPtr l = load_algebra(ctx, alg_path);
        Mat r = load_operator(ctx, op1_path, l->dim());
        Mat rho = load_operator(ctx, op2_path, l->dim());
        return emit_check_report(ctx, check_rrho(*l, r, rho, flag_regular));
      }
      if (check_kind == "thetarho") {
        AlgebraPtr l = load_algebra(ctx, alg_path);
        Mat theta = load_operator(ctx, op1_path, l->dim());
        Mat rho = load_operator(ctx, op2_path, l->dim());
        return emit_check_report(ctx, check_theta_rho(*l, theta, rho, flag_special));
      }
      if (check_kind == "structure") {
        AlgebraPtr l = load_algebra(ctx, alg_path);
        if (family_path.empty()) throw input_error("check structure needs --family");
        QuadraticRhoFamily f = read_family(family_path, l);
        ctx.stamp(family_path);
        std::vector<QuadraticLawSample> law_samples;
        auto qs = default_sample_qs(l->dim());
        for (std::size_t i = 0; i + 1 < qs.size() && i < 4; ++i)
          law_samples.push_back({qs[i], qs[i + 1], Scalar(3)});
        CheckReport rep = check_quadratic_law(f, law_samples);
        CheckReport st = check_xvr_structure(f, qs);
        for (auto& c : st.checks) rep.checks.push_back(std::move(c));
        rep.kind = StructureKind::xvr_structure;
        return emit_check_report(ctx, rep);
      }
      throw input_error("unknown check kind '" + check_kind + "'");
    }

    if (*example) {
      auto [qname, q] = read_operator(q_path);
      if (q.dim() != ex_n)
        throw input_error("q has size " + std::to_string(q.dim()) + ", expected " +
                          std::to_string(ex_n));
      fs::create_directories(out_dir);
      auto write_ops = [&](const LieAlgebra& l, std::initializer_list<
                               std::pair<std::string, const Mat*>> ops) {
        fs::path ap = fs::path(out_dir) / (l.name() + ".alg");
        write_algebra(l, ap);
        std::cout << "wrote " << ap.string() << "\n";
        for (const auto& [nm, m] : ops) {
          fs::path p = fs::path(out_dir) / (nm + ".op");
          write_operator(nm, *m, p);
          std::cout << "wrote " << p.string() << "\n";
        }
      };
      if (ex_kind == "gl") {
        OperatorTriple t = gl_example(ex_n, q);
        write_ops(*t.algebra, {{"xi", &t.xi}, {"rho", &t.rho}});
      } else if (ex_kind == "so") {
        OperatorTriple t = so_example(ex_n, q);
        write_ops(*t.algebra, {{"xi", &t.xi}, {"rho", &t.rho}});
      } else if (ex_kind == "bimyb-lr") {
        BiMybPair p = bi_myb_left_right(ex_n, q);
        write_ops(*p.algebra, {{"r1", &p.r1}, {"r2", &p.r2}});
      } else if (ex_kind == "assoc-theta") {
        ThetaRhoTriple t = assoc_theta_example(ex_n, q);
        write_ops(*t.algebra, {{"theta", &t.theta}, {"rho", &t.rho}});
      } else {
        throw input_error("unknown example kind '" + ex_kind + "'");
      }
      return 0;
    }

    if (*tower) {
      AlgebraPtr l = load_algebra(ctx, alg_path);
      Mat op1 = load_operator(ctx, op1_path, l->dim());
      Mat rho = load_operator(ctx, op2_path, l->dim());
      TowerReport rep{TowerFamily::rrho, ThetaVariant::two_rho_plus_xi_sq, 0, {}};
      if (tower_kind == "rrho")
        rep = rrho_tower(l, op1, rho, depth);
      else if (tower_kind == "xvr")
        rep = xvr_tower(l, op1, rho, depth, theta_variant_from_string(variant_str));
      else if (tower_kind == "theta")
        rep = theta_tower(l, op1, rho, depth);
      else
        throw input_error("unknown tower kind '" + tower_kind + "'");
      if (ctx.report_mode == "structured")
        std::cout << structured_document(ctx.command, ctx.inputs, rep);
      else
        std::cout << rep.str();
      return rep.all_levels_pass() ? 0 : 1;
    }

    if (*ipair) {
      QuadraticRhoFamily f = [&]() {
        if (!family_path.empty()) {
          if (alg_path.empty()) throw input_error("--family needs --algebra");
          AlgebraPtr l = load_algebra(ctx, alg_path);
          QuadraticRhoFamily ff = read_family(family_path, l);
          ctx.stamp(family_path);
          return ff;
        }
        if (ip_kind == "gl") return canonical_family(MatrixAlgebraBasis::Kind::gl, ip_n);
        if (ip_kind == "so")
          return canonical_family(MatrixAlgebraBasis::Kind::so_transpose, ip_n);
        throw input_error("unknown family kind '" + ip_kind + "'");
      }();
      if (!ip_q.empty()) {
        Vec q = parse_vector(ip_q, f.dim());
        BilinearMap b = ipair_bracket(f, q);
        LieCheck c = is_lie_bracket(b);
        CheckReport rep{StructureKind::xvr_structure, {}};
        rep.add("jacobi(h(q))", c.ok, c.witness);
        if (!emit_bracket.empty()) {
          std::vector<std::string> labels = f.algebra()->basis_labels();
          LieAlgebra out(f.algebra()->name() + "_ipair", labels, b);
          write_algebra(out, emit_bracket);
          std::cout << "wrote " << emit_bracket << "\n";
        }
        return emit_check_report(ctx, rep);
      }
      IPair pair = build_ipair(f);
      return emit_check_report(ctx, pair.conformance);
    }

    if (*classify) {
      if (classify_target != "so3")
        throw input_error("unknown classification target '" + classify_target + "'");
      ClassificationReport rep = classify_so3(grid_check, grid_bound);
      if (!emit_family_dir.empty()) {
        fs::create_directories(emit_family_dir);
        QuadraticRhoFamily f = ansatz_family(Scalar(0), Scalar(-1));
        fs::path ap = fs::path(emit_family_dir) / "so3.alg";
        fs::path fp = fs::path(emit_family_dir) / "so3_restriction.family";
        write_algebra(*f.algebra(), ap);
        write_family("so3_restriction", f, fp);
        std::cout << "wrote " << ap.string() << "\n" << "wrote " << fp.string() << "\n";
      }
      if (ctx.report_mode == "structured")
        std::cout << structured_document(ctx.command, ctx.inputs, rep);
      else
        std::cout << rep.str();
      const bool ok = !rep.solution_points.empty() && rep.solutions_reverified &&
                      (!rep.grid_checked || rep.grid_agrees);
      return ok ? 0 : 1;
    }

    if (*random) {
      SweepResult res = random_sweep(sweep_kind_from_string(rnd_kind), rnd_n, rnd_samples,
                                     rnd_seed, max_num, max_den);
      std::cout << res.passed << "/" << res.total << " samples passed\n";
      if (!res.all_pass()) {
        std::cout << "first failure at sample " << res.failed_index << "; q =\n"
                  << res.failed_q.str() << "\n"
                  << res.failed_report.str();
        return 1;
      }
      return 0;
    }
  } catch (const precondition_error& e) {
    std::cerr << "hypothesis error: " << e.what() << "\n" << e.report.str();
    return 2;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
