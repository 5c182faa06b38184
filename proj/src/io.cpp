#include "lieop/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace lieop {

namespace {

struct LineReader {
  std::filesystem::path path;
  std::ifstream in;
  std::size_t lineno = 0;

  explicit LineReader(const std::filesystem::path& p) : path(p), in(p) {
    if (!in) throw input_error("cannot open '" + p.string() + "'");
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw input_error(path.string() + ":" + std::to_string(lineno) + ": " + msg);
  }

  // next non-empty, non-comment line split into tokens; empty at EOF
  std::vector<std::string> next() {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ss(line);
      std::vector<std::string> toks;
      std::string t;
      while (ss >> t) toks.push_back(t);
      if (!toks.empty()) return toks;
    }
    return {};
  }
};

std::size_t parse_index(LineReader& r, const std::string& tok, std::size_t dim) {
  std::size_t val = 0;
  try {
    val = std::stoul(tok);
  } catch (...) {
    r.fail("bad index '" + tok + "'");
  }
  if (val >= dim) r.fail("index " + tok + " out of range for dimension " + std::to_string(dim));
  return val;
}

Scalar parse_scalar(LineReader& r, const std::string& tok) {
  try {
    return Scalar::parse(tok);
  } catch (const input_error& e) {
    r.fail(e.what());
  }
}

struct Header {
  std::string name;
  std::size_t dim = 0;
};

Header read_header(LineReader& r, const std::string& expected_kind) {
  Header h;
  auto kind = r.next();
  if (kind.size() != 2 || kind[0] != expected_kind)
    r.fail("expected '" + expected_kind + " <name>'");
  h.name = kind[1];
  auto dim = r.next();
  if (dim.size() != 2 || dim[0] != "dim") r.fail("expected 'dim <n>'");
  try {
    h.dim = std::stoul(dim[1]);
  } catch (...) {
    r.fail("bad dimension '" + dim[1] + "'");
  }
  if (h.dim == 0 || h.dim > 64) r.fail("dimension out of range");
  return h;
}

}  // namespace

AlgebraPtr read_algebra(const std::filesystem::path& path) {
  LineReader r(path);
  Header h = read_header(r, "algebra");
  auto basis = r.next();
  if (basis.size() != h.dim + 1 || basis[0] != "basis")
    r.fail("expected 'basis' with " + std::to_string(h.dim) + " labels");
  std::vector<std::string> labels(basis.begin() + 1, basis.end());

  BilinearMap b(h.dim);
  for (auto toks = r.next(); !toks.empty(); toks = r.next()) {
    if (toks[0] == "end") {
      try {
        return std::make_shared<const LieAlgebra>(h.name, labels, std::move(b));
      } catch (const input_error& e) {
        r.fail(e.what());
      }
    }
    if (toks[0] != "c" || toks.size() != 5) r.fail("expected 'c i j k value' or 'end'");
    std::size_t i = parse_index(r, toks[1], h.dim);
    std::size_t j = parse_index(r, toks[2], h.dim);
    std::size_t k = parse_index(r, toks[3], h.dim);
    if (i >= j) r.fail("structure records require i < j");
    Scalar v = parse_scalar(r, toks[4]);
    b.at(i, j, k) = v;
    b.at(j, i, k) = -v;
  }
  r.fail("missing 'end'");
}

void write_algebra(const LieAlgebra& l, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write '" + path.string() + "'");
  out << "algebra " << l.name() << "\n";
  out << "dim " << l.dim() << "\n";
  out << "basis";
  for (const auto& lab : l.basis_labels()) out << " " << lab;
  out << "\n";
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j)
      for (std::size_t k = 0; k < l.dim(); ++k)
        if (!l.bracket().at(i, j, k).is_zero())
          out << "c " << i << " " << j << " " << k << " " << l.bracket().at(i, j, k) << "\n";
  out << "end\n";
}

std::pair<std::string, Mat> read_operator(const std::filesystem::path& path) {
  LineReader r(path);
  Header h = read_header(r, "operator");
  Mat m(h.dim);
  for (std::size_t i = 0; i < h.dim; ++i) {
    auto toks = r.next();
    if (toks.size() != h.dim + 1 || toks[0] != "row")
      r.fail("expected 'row' with " + std::to_string(h.dim) + " entries");
    for (std::size_t j = 0; j < h.dim; ++j) m.at(i, j) = parse_scalar(r, toks[j + 1]);
  }
  auto end = r.next();
  if (end.size() != 1 || end[0] != "end") r.fail("missing 'end'");
  return {h.name, std::move(m)};
}

void write_operator(const std::string& name, const Mat& m, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write '" + path.string() + "'");
  out << "operator " << name << "\n";
  out << "dim " << m.dim() << "\n";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out << "row";
    for (std::size_t j = 0; j < m.dim(); ++j) out << " " << m.at(i, j);
    out << "\n";
  }
  out << "end\n";
}

QuadraticRhoFamily read_family(const std::filesystem::path& path, const AlgebraPtr& algebra) {
  LineReader r(path);
  Header h = read_header(r, "family");
  if (h.dim != algebra->dim())
    r.fail("family dimension " + std::to_string(h.dim) + " does not match algebra dimension " +
           std::to_string(algebra->dim()));
  const std::size_t n = h.dim;
  std::vector<Scalar> p(n * n * n * n);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) -> Scalar& {
    return p[((i * n + j) * n + k) * n + l];
  };
  for (auto toks = r.next(); !toks.empty(); toks = r.next()) {
    if (toks[0] == "end") return QuadraticRhoFamily(algebra, std::move(p));
    if (toks[0] != "p" || toks.size() != 6) r.fail("expected 'p i j k l value' or 'end'");
    std::size_t i = parse_index(r, toks[1], n);
    std::size_t j = parse_index(r, toks[2], n);
    std::size_t k = parse_index(r, toks[3], n);
    std::size_t l = parse_index(r, toks[4], n);
    if (i > j) r.fail("polarization records require i <= j");
    Scalar v = parse_scalar(r, toks[5]);
    at(i, j, k, l) = v;
    at(j, i, k, l) = v;
  }
  r.fail("missing 'end'");
}

void write_family(const std::string& name, const QuadraticRhoFamily& f,
                  const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write '" + path.string() + "'");
  const std::size_t n = f.dim();
  out << "family " << name << "\n";
  out << "dim " << n << "\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          if (!f.at(i, j, k, l).is_zero())
            out << "p " << i << " " << j << " " << k << " " << l << " " << f.at(i, j, k, l)
                << "\n";
  out << "end\n";
}

std::string file_digest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open '" + path.string() + "'");
  std::uint64_t h = 14695981039346656037ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

}  // namespace lieop
