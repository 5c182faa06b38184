// Drives the installed binary end to end: file emission, checking,
// towers, classification, seeded sweeps, exit-code taxonomy and
// byte-determinism of structured reports.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

std::string g_binary;
int g_failures = 0;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
  const std::string cmd = g_binary + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    std::cerr << "cannot spawn: " << cmd << "\n";
    std::exit(2);
  }
  RunResult res;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) res.output.append(buf, got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

void expect(bool cond, const std::string& what) {
  if (cond) {
    std::cout << "ok: " << what << "\n";
  } else {
    std::cout << "FAILED: " << what << "\n";
    ++g_failures;
  }
}

void expect_exit(const std::string& args, int want, const std::string& what) {
  RunResult res = run(args);
  if (res.exit_code != want) {
    std::cout << "FAILED: " << what << " (exit " << res.exit_code << ", wanted " << want
              << ")\n--- output ---\n"
              << res.output << "---\n";
    ++g_failures;
  } else {
    std::cout << "ok: " << what << "\n";
  }
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-binary>\n";
    return 2;
  }
  g_binary = argv[1];

  fs::path tmp = fs::temp_directory_path() / ("lieop_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(tmp);
  const std::string dir = tmp.string();

  // parameter files
  write_text(tmp / "q_e11.op", "operator q\ndim 2\nrow 1 0\nrow 0 0\nend\n");
  write_text(tmp / "q_diag12.op", "operator q\ndim 2\nrow 1 0\nrow 0 2\nend\n");
  write_text(tmp / "q_f12.op", "operator q\ndim 3\nrow 0 1 0\nrow -1 0 0\nrow 0 0 0\nend\n");
  write_text(tmp / "q_sym.op", "operator q\ndim 3\nrow 0 1 0\nrow 1 0 0\nrow 0 0 0\nend\n");

  // emit the gl(2) example and check it
  expect_exit("example gl --n 2 --q " + dir + "/q_e11.op --out " + dir + "/gl2", 0,
              "example gl emits files");
  const std::string gl2 = dir + "/gl2";
  expect_exit("check xvr --algebra " + gl2 + "/gl2.alg --xi " + gl2 + "/xi.op --rho " + gl2 +
                  "/rho.op",
              0, "check xvr on emitted files passes");

  // dimension mismatch is a validation error, not an identity failure
  expect_exit("check xvr --algebra " + gl2 + "/gl2.alg --xi " + dir + "/q_e11.op --rho " + gl2 +
                  "/rho.op",
              2, "mismatched operator dimension exits 2");

  // so example rejects a symmetric q
  expect_exit("example so --n 3 --q " + dir + "/q_sym.op --out " + dir + "/so3", 2,
              "example so with symmetric q exits 2");
  expect_exit("example so --n 3 --q " + dir + "/q_f12.op --out " + dir + "/so3", 0,
              "example so with antisymmetric q");
  expect_exit("check xvr --algebra " + dir + "/so3/so3.alg --xi " + dir + "/so3/xi.op --rho " +
                  dir + "/so3/rho.op",
              0, "check xvr on the so(3) example");

  // bi-mYB pair and the even-tempered gate
  expect_exit("example bimyb-lr --n 2 --q " + dir + "/q_e11.op --out " + dir + "/lr", 0,
              "example bimyb-lr emits files");
  expect_exit("check bimyb --even-tempered --algebra " + dir + "/lr/gl2.alg --r1 " + dir +
                  "/lr/r1.op --r2 " + dir + "/lr/r2.op",
              0, "left/right pair is even-tempered");

  // associative example with the special identity
  expect_exit("example assoc-theta --n 2 --q " + dir + "/q_diag12.op --out " + dir + "/at", 0,
              "example assoc-theta emits files");
  expect_exit("check thetarho --special --algebra " + dir + "/at/gl2.alg --theta " + dir +
                  "/at/theta.op --rho " + dir + "/at/rho.op",
              0, "special commuting-pair check passes");

  // towers: depth 0 records only the seed-data level and exits 0;
  // deeper runs map where the recursion leaves the class
  expect_exit("tower theta --algebra " + dir + "/at/gl2.alg --theta " + dir + "/at/theta.op" +
                  " --rho " + dir + "/at/rho.op --depth 0",
              0, "theta tower depth 0");
  expect_exit("tower theta --algebra " + dir + "/at/gl2.alg --theta " + dir + "/at/theta.op" +
                  " --rho " + dir + "/at/rho.op --depth 3",
              1, "theta tower depth 3 reports the level-1 failure");
  expect_exit("tower xvr --algebra " + gl2 + "/gl2.alg --xi " + gl2 + "/xi.op --rho " + gl2 +
                  "/rho.op --depth 3 --theta-variant 2rho+xi2",
              1, "doubling tower maps its level-2 failure");
  {
    RunResult res = run("tower xvr --algebra " + gl2 + "/gl2.alg --xi " + gl2 +
                        "/xi.op --rho " + gl2 + "/rho.op --depth 1 --theta-variant 2rho+xi2");
    expect(res.exit_code == 0, "doubling tower depth 1 passes");
  }
  // hypothesis failure is exit 2, distinct from level failures
  expect_exit("tower rrho --algebra " + gl2 + "/gl2.alg --r " + gl2 + "/xi.op --rho " + gl2 +
                  "/rho.op --depth 2",
              2, "tower with a seed outside the class exits 2");

  // classification
  {
    RunResult res = run("classify so3 --grid-check --grid-bound 2 --emit-family " + dir + "/cls");
    expect(res.exit_code == 0, "classify so3 exits 0");
    expect(res.output.find("a + b^2 + b") != std::string::npos,
           "classification prints the conic generator");
    expect(res.output.find("(0, -1)") != std::string::npos,
           "classification solution set shows (0,-1)");
    expect(res.output.find("grid sweep agreement: yes") != std::string::npos,
           "grid sweep agrees");
    expect_exit("check structure --algebra " + dir + "/cls/so3.alg --family " + dir +
                    "/cls/so3_restriction.family",
                0, "emitted family re-checks clean");
  }

  // ipair round trip through an emitted bracket
  expect_exit("ipair --kind so --n 3", 0, "ipair conformance sweep");
  expect_exit("ipair --kind so --n 3 --q 1,0,0 --emit-bracket " + dir + "/ipair_q.alg", 0,
              "ipair bracket at a basis q");
  write_text(tmp / "zero3.op", "operator z\ndim 3\nrow 0 0 0\nrow 0 0 0\nrow 0 0 0\nend\n");
  write_text(tmp / "id3.op", "operator i\ndim 3\nrow 1 0 0\nrow 0 1 0\nrow 0 0 1\nend\n");
  expect_exit("check myb --algebra " + dir + "/ipair_q.alg --r " + dir + "/zero3.op", 0,
              "emitted induced bracket reloads as a valid algebra");

  // a verified identity violation exits 1, never 2
  expect_exit("check thetarho --algebra " + dir + "/so3/so3.alg --theta " + dir +
                  "/zero3.op --rho " + dir + "/id3.op",
              1, "zero Theta against identity rho fails with exit 1");

  // seeded sweeps
  expect_exit("random xvr-gl --n 3 --samples 20 --seed 7", 0, "random xvr-gl sweep");
  expect_exit("random bimyb-lr --n 2 --samples 10 --seed 1", 0, "random bimyb-lr sweep");
  expect_exit("random xvr-so --n 4 --samples 5 --seed 3", 0, "random xvr-so sweep");
  expect_exit("random xvr-gl --n 2 --samples 0 --seed 9", 0, "empty sweep is a vacuous pass");

  // structured reports are byte-identical across runs
  {
    const std::string cmd = "check xvr --algebra " + gl2 + "/gl2.alg --xi " + gl2 +
                            "/xi.op --rho " + gl2 + "/rho.op --report structured";
    RunResult r1 = run(cmd);
    RunResult r2 = run(cmd);
    expect(r1.exit_code == 0 && r1.output == r2.output,
           "structured reports are deterministic");
    expect(r1.output.find("\"digest\"") != std::string::npos,
           "structured reports carry input digests");
  }

  // unknown input file
  expect_exit("check xvr --algebra " + dir + "/nope.alg --xi " + gl2 + "/xi.op --rho " + gl2 +
                  "/rho.op",
              2, "missing file exits 2");

  fs::remove_all(tmp);
  if (g_failures) {
    std::cout << g_failures << " cli check(s) failed\n";
    return 1;
  }
  std::cout << "all cli checks passed\n";
  return 0;
}
