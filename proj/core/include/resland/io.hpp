#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "resland/matcore.hpp"

namespace resland {

// Matrix files are JSON objects {"n": N, "entries": [[re, im], ...]} with the
// N*N entries in row-major order.

ComplexMatrix parse_matrix_json(std::string_view text);
std::string matrix_to_json(const ComplexMatrix& a);

ComplexMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& a);

/// Parses "a+bi", "a-bi", "a", "bi" (no spaces). Throws ParseError.
Complex parse_complex(std::string_view text);
std::string format_complex(Complex z);

/// Comma separated lists, e.g. "1e-2,1e-3" or "1e6,1+2i".
std::vector<double> parse_real_list(std::string_view text);
std::vector<Complex> parse_complex_list(std::string_view text);

} // namespace resland
