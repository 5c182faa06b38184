#pragma once

#include <filesystem>

#include "lieop/family.hpp"

namespace lieop {

/// Algebra file: name, dimension, basis labels, then sparse structure
/// records "c i j k value" with i < j (0-based); omitted entries are zero
/// and (j,i,k) entries are implied by antisymmetry.  Loading runs the full
/// Lie-algebra validation, so a file violating Jacobi is rejected.
AlgebraPtr read_algebra(const std::filesystem::path& path);
void write_algebra(const LieAlgebra& l, const std::filesystem::path& path);

/// Operator file: name, dimension, then dim rows of dim rational literals.
/// Column j holds the image of basis vector e_j, i.e. entry (row i,
/// column j) is the coefficient of e_i in the image of e_j.
std::pair<std::string, Mat> read_operator(const std::filesystem::path& path);
void write_operator(const std::string& name, const Mat& m, const std::filesystem::path& path);

/// Family file: name, dimension, then sparse polarization records
/// "p i j k l value" with i <= j (symmetric completion implied).
QuadraticRhoFamily read_family(const std::filesystem::path& path, const AlgebraPtr& algebra);
void write_family(const std::string& name, const QuadraticRhoFamily& f,
                  const std::filesystem::path& path);

/// FNV-1a 64-bit digest of a file's bytes, as 16 hex digits; used to pin
/// inputs inside structured reports.
std::string file_digest(const std::filesystem::path& path);

}  // namespace lieop
