#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "chepta/dense_matrix.hpp"
#include "chepta/hepta_matrix.hpp"

namespace chepta::io {

/// Matrix file: {"n": n, "D": [...], "B": [...], ..., "C": [...]} with scalar strings.
ExactMatrix parse_matrix_json(std::string_view text);
std::string matrix_to_json(const ExactMatrix& m);

/// Dense CSV: n rows of n comma-separated scalar strings.
DenseMatrix<Rational> parse_dense_csv(std::string_view text);
std::string dense_to_csv(const DenseMatrix<Rational>& m);

/// Right-hand side: a JSON array of scalar strings, or a CSV column (one scalar per line).
std::vector<Rational> parse_rhs(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

ExactMatrix load_matrix(const std::filesystem::path& path);

}  // namespace chepta::io
