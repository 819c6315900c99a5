#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace pentasolve {

/// Writes one number per line with 17 significant digits, which
/// round-trips any double exactly. Locale independent.
void write_vector(std::ostream& out, std::span<const double> x);
void write_vector_file(const std::filesystem::path& path,
                       std::span<const double> x);

/// Reads the format written above. Blank lines and lines whose first
/// non-space character is '#' are skipped. Throws IoError on malformed
/// content, naming the line.
std::vector<double> read_vector(std::istream& in);
std::vector<double> read_vector_file(const std::filesystem::path& path);

}  // namespace pentasolve
