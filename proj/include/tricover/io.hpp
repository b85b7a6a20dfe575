#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "tricover/triangulation.hpp"

namespace tricover {

/// Malformed structured-text input. `line()` is 1-based, 0 when not tied to a line.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Triangulation text:
//   tets N
//   g <tet> <face> -> <tet'> <face'> <perm>
// one line per glued (tet, face); blank lines and '#' comments are ignored.
Triangulation parse_triangulation(std::istream& in);
void write_triangulation(std::ostream& out, const Triangulation& t);

Triangulation read_triangulation_file(const std::string& path);
Triangulation triangulation_from_string(const std::string& text);
std::string triangulation_to_string(const Triangulation& t);

namespace detail {
/// Splits on whitespace after stripping a trailing '#' comment.
std::vector<std::string> tokenize(const std::string& line);
long long parse_integer(const std::string& token, std::size_t line);
}  // namespace detail

}  // namespace tricover
