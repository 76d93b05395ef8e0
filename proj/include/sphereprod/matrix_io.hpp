#pragma once

#include <filesystem>
#include <istream>
#include <string_view>
#include <vector>

#include "sphereprod/int_matrix.hpp"

namespace sphereprod {

// Text matrix format: a line holding n, then n lines of n space-separated
// integers. Lines starting with '#' are ignored.
IntMatrix parse_matrix(std::string_view text);
IntMatrix read_matrix(std::istream& in);
IntMatrix read_matrix_file(const std::filesystem::path& path);

// Concatenated matrices in the same format, read until end of input.
std::vector<IntMatrix> parse_matrices(std::string_view text);
std::vector<IntMatrix> read_matrices_file(const std::filesystem::path& path);

}  // namespace sphereprod
