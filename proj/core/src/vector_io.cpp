#include "pentasolve/vector_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <system_error>

#include "pentasolve/errors.hpp"

namespace pentasolve {

void write_vector(std::ostream& out, std::span<const double> x) {
  char buf[64];
  for (double v : x) {
    const auto res =
        std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    out.write(buf, res.ptr - buf);
    out.put('\n');
  }
  if (!out) throw IoError("failed writing vector data");
}

void write_vector_file(const std::filesystem::path& path,
                       std::span<const double> x) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  write_vector(out, x);
  out.flush();
  if (!out) throw IoError("failed writing: " + path.string());
}

std::vector<double> read_vector(std::istream& in) {
  std::vector<double> x;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::size_t begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    if (line[begin] == '#') continue;
    const std::size_t end = line.find_last_not_of(" \t") + 1;
    double v{};
    const auto res =
        std::from_chars(line.data() + begin, line.data() + end, v);
    if (res.ec != std::errc{} || res.ptr != line.data() + end)
      throw IoError("line " + std::to_string(lineno) +
                    ": not a number: " + line.substr(begin, end - begin));
    x.push_back(v);
  }
  if (in.bad()) throw IoError("failed reading vector data");
  return x;
}

std::vector<double> read_vector_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path.string());
  return read_vector(in);
}

}  // namespace pentasolve
