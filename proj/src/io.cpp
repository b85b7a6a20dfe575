#include "tricover/io.hpp"

#include <array>
#include <charconv>
#include <optional>
#include <fstream>
#include <sstream>

namespace tricover {

FormatError::FormatError(std::size_t line, const std::string& message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

namespace detail {

std::vector<std::string> tokenize(const std::string& line) {
  const std::string body = line.substr(0, line.find('#'));
  std::istringstream is(body);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

long long parse_integer(const std::string& token, std::size_t line) {
  long long v = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  if (!token.empty() && token[0] == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) throw FormatError(line, "expected an integer, got '" + token + "'");
  return v;
}

}  // namespace detail

Triangulation parse_triangulation(std::istream& in) {
  std::string raw;
  std::size_t lineno = 0;
  std::optional<Triangulation> t;
  std::vector<std::array<std::size_t, 4>> seen_at;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto tok = detail::tokenize(raw);
    if (tok.empty()) continue;
    if (!t) {
      if (tok.size() != 2 || tok[0] != "tets") throw FormatError(lineno, "expected header 'tets N'");
      const long long n = detail::parse_integer(tok[1], lineno);
      if (n < 0) throw FormatError(lineno, "tetrahedron count must be non-negative");
      t.emplace(static_cast<std::size_t>(n));
      seen_at.assign(static_cast<std::size_t>(n), {0, 0, 0, 0});
      continue;
    }
    if (tok[0] != "g" || tok.size() != 7 || tok[3] != "->")
      throw FormatError(lineno, "expected 'g <tet> <face> -> <tet'> <face'> <perm>'");
    const long long a = detail::parse_integer(tok[1], lineno);
    const long long f = detail::parse_integer(tok[2], lineno);
    const long long b = detail::parse_integer(tok[4], lineno);
    const long long g = detail::parse_integer(tok[5], lineno);
    const auto n = static_cast<long long>(t->size());
    if (a < 0 || a >= n || b < 0 || b >= n) throw FormatError(lineno, "tetrahedron index out of range");
    if (f < 0 || f > 3 || g < 0 || g > 3) throw FormatError(lineno, "face index must be 0..3");
    Perm4 perm;
    if (!perm_from_face_code(static_cast<int>(f), static_cast<int>(g), tok[6], perm))
      throw FormatError(lineno, "'" + tok[6] + "' is not a permutation of 012");
    const FaceGluing gl{static_cast<std::size_t>(b), perm};
    auto& prev = seen_at[a][f];
    if (prev != 0) {
      const bool same = t->gluing(a, f) == gl;
      throw FormatError(lineno, std::string(same ? "duplicate" : "conflicting") + " entry for tet " + tok[1] + " face " +
                                    tok[2] + " (first given on line " + std::to_string(prev) + ")");
    }
    prev = lineno;
    t->set_gluing(static_cast<std::size_t>(a), static_cast<int>(f), gl);
  }
  if (!t) throw FormatError(lineno, "missing header 'tets N'");
  return *t;
}

void write_triangulation(std::ostream& out, const Triangulation& t) {
  out << "tets " << t.size() << '\n';
  for (std::size_t i = 0; i < t.size(); ++i)
    for (int f = 0; f < 4; ++f)
      if (const auto& g = t.gluing(i, f))
        out << "g " << i << ' ' << f << " -> " << g->tet << ' ' << g->target_face(f) << ' ' << face_code(f, g->perm)
            << '\n';
}

Triangulation read_triangulation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(0, "cannot open " + path);
  return parse_triangulation(in);
}

Triangulation triangulation_from_string(const std::string& text) {
  std::istringstream is(text);
  return parse_triangulation(is);
}

std::string triangulation_to_string(const Triangulation& t) {
  std::ostringstream os;
  write_triangulation(os, t);
  return os.str();
}

}  // namespace tricover
