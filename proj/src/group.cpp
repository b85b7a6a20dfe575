#include "tricover/group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "tricover/io.hpp"

namespace tricover {

std::string FiniteGroup::check_axioms(const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  if (n == 0) return "empty table";
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) return "row " + std::to_string(a) + " has wrong length";
    for (auto x : table[a])
      if (x >= n) return "row " + std::to_string(a) + " has an entry out of range";
  }
  for (std::size_t a = 0; a < n; ++a)
    if (table[0][a] != a || table[a][0] != a) return "0 is not the identity";
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (row[table[a][b]]++) return "row " + std::to_string(a) + " repeats an element";
      if (col[table[b][a]]++) return "column " + std::to_string(a) + " repeats an element";
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          return "not associative at (" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
  return {};
}

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table) : table_(std::move(table)) {
  if (const std::string err = check_axioms(table_); !err.empty()) throw std::invalid_argument("FiniteGroup: " + err);
  inverse_.assign(order(), 0);
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = 0; b < order(); ++b)
      if (table_[a][b] == 0) inverse_[a] = b;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic: order must be positive");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order();
  std::vector<std::vector<std::size_t>> t(na * nb, std::vector<std::size_t>(na * nb));
  for (std::size_t x = 0; x < na * nb; ++x)
    for (std::size_t y = 0; y < na * nb; ++y) t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t m = perms.size();
  std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::quaternion() {
  // element 2u + s is (-1)^s times unit u, units 1, i, j, k
  static constexpr int unit_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign_prod[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a / 2, ub = b / 2;
      const int s = (a % 2) ^ (b % 2) ^ sign_prod[ua][ub];
      t[a][b] = static_cast<std::size_t>(2 * unit_prod[ua][ub] + s);
    }
  return FiniteGroup(std::move(t));
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::size_t> FiniteGroup::generated_subgroup(const std::vector<std::size_t>& gens) const {
  std::vector<char> in(order(), 0);
  std::queue<std::size_t> q;
  in[0] = 1;
  q.push(0);
  while (!q.empty()) {
    const std::size_t a = q.front();
    q.pop();
    for (auto g : gens) {
      const std::size_t b = mul(a, g);
      if (!in[b]) {
        in[b] = 1;
        q.push(b);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < order(); ++a)
    if (in[a]) out.push_back(a);
  return out;
}

IntMatrix Presentation::exponent_matrix() const {
  IntMatrix m(relators.size(), generator_count);
  for (std::size_t r = 0; r < relators.size(); ++r)
    for (const Letter& l : relators[r]) m(r, l.generator) += l.exponent;
  return m;
}

Presentation presentation_from(const Triangulation& t, const Skeleton& s) {
  (void)t;
  if (s.vertices.size() != 1)
    throw MultipleVertices("presentation_from: " + std::to_string(s.vertices.size()) +
                           " vertex classes; a one-vertex triangulation is required");
  Presentation p;
  p.generator_count = s.edges.size();
  for (const FaceClass& f : s.faces) {
    const auto vs = face_vertices(f.rep.face);
    const std::size_t tet = f.rep.tet;
    const int e01 = edge_index(vs[0], vs[1]), e12 = edge_index(vs[1], vs[2]), e02 = edge_index(vs[0], vs[2]);
    p.relators.push_back(Word{{s.edge_of[tet][e01], s.edge_sign[tet][e01]},
                              {s.edge_of[tet][e12], s.edge_sign[tet][e12]},
                              {s.edge_of[tet][e02], -s.edge_sign[tet][e02]}});
  }
  return p;
}

AbelianGroup abelianization(const Presentation& p) { return abelian_group_from_relations(p.exponent_matrix()); }

std::size_t FiniteQuotient::evaluate(const Word& w) const {
  std::size_t acc = 0;
  for (const Letter& l : w) {
    const std::size_t x = images.at(l.generator);
    acc = group.mul(acc, l.exponent > 0 ? x : group.inverse(x));
  }
  return acc;
}

QuotientReport validate_quotient(const Presentation& p, const FiniteQuotient& q) {
  QuotientReport r;
  if (q.images.size() != p.generator_count) {
    r.problem = "expected " + std::to_string(p.generator_count) + " generator images, got " + std::to_string(q.images.size());
    return r;
  }
  for (std::size_t i = 0; i < q.images.size(); ++i)
    if (!q.group.contains(q.images[i])) {
      r.problem = "image of generator " + std::to_string(i) + " is not a group element";
      return r;
    }
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    if (q.evaluate(p.relators[j]) != 0) {
      r.relators_ok = false;
      r.failing_relator = j;
      break;
    }
  }
  r.image_order = q.group.generated_subgroup(q.images).size();
  r.surjective = r.image_order == q.group.order();
  return r;
}

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

std::vector<FiniteQuotient> cyclic_quotients(const Presentation& p, std::size_t n) {
  if (n < 2) throw std::invalid_argument("cyclic_quotients: n must be at least 2");
  const auto modulus = static_cast<std::int64_t>(n);
  const std::size_t gens = p.generator_count;
  const SmithForm f = smith_normal_form(p.exponent_matrix(), false, true);
  const IntMatrix& v = *f.column_transform;

  // y_j ranges over multiples of n / gcd(d_j, n) for j < rank and over Z/n beyond
  std::vector<std::int64_t> step(gens, 1), count(gens, modulus);
  for (std::size_t j = 0; j < f.rank(); ++j) {
    const std::int64_t g = std::gcd(f.divisors[j], modulus);
    step[j] = modulus / g;
    count[j] = g;
  }
  std::vector<std::int64_t> units;
  for (std::int64_t u = 1; u < modulus; ++u)
    if (std::gcd(u, modulus) == 1) units.push_back(u);

  std::set<std::vector<std::size_t>> found;
  std::vector<std::int64_t> idx(gens, 0);
  const IntMatrix rel = p.exponent_matrix();
  for (;;) {
    std::vector<std::int64_t> x(gens, 0);
    for (std::size_t i = 0; i < gens; ++i) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < gens; ++j) acc = mod(acc + mod(v(i, j), modulus) * (idx[j] * step[j]), modulus);
      x[i] = acc;
    }
    std::int64_t g = modulus;
    for (auto xi : x) g = std::gcd(g, xi);
    if (g == 1) {
      for (std::size_t r = 0; r < rel.rows(); ++r) {
        std::int64_t acc = 0;
        for (std::size_t i = 0; i < gens; ++i) acc = mod(acc + rel(r, i) * x[i], modulus);
        if (acc != 0) throw std::logic_error("cyclic_quotients: generated map does not kill a relator");
      }
      std::vector<std::size_t> best;
      for (auto u : units) {
        std::vector<std::size_t> cand(gens);
        for (std::size_t i = 0; i < gens; ++i) cand[i] = static_cast<std::size_t>(mod(u * x[i], modulus));
        if (best.empty() || cand < best) best = std::move(cand);
      }
      found.insert(std::move(best));
    }
    std::size_t k = 0;
    while (k < gens && ++idx[k] == count[k]) idx[k++] = 0;
    if (k == gens) break;
  }

  std::vector<FiniteQuotient> out;
  const FiniteGroup zn = FiniteGroup::cyclic(n);
  for (const auto& images : found) out.push_back(FiniteQuotient{zn, images});
  return out;
}

FiniteQuotient parse_quotient(std::istream& in) {
  std::string raw;
  std::size_t lineno = 0;
  auto next = [&]() -> std::vector<std::string> {
    while (std::getline(in, raw)) {
      ++lineno;
      auto tok = detail::tokenize(raw);
      if (!tok.empty()) return tok;
    }
    return {};
  };
  auto header = next();
  if (header.size() != 2 || header[0] != "group") throw FormatError(lineno, "expected header 'group N'");
  const long long n = detail::parse_integer(header[1], lineno);
  if (n <= 0) throw FormatError(lineno, "group order must be positive");
  std::vector<std::vector<std::size_t>> table;
  for (long long r = 0; r < n; ++r) {
    auto row = next();
    if (static_cast<long long>(row.size()) != n) throw FormatError(lineno, "expected " + std::to_string(n) + " table entries");
    std::vector<std::size_t> entries;
    for (const auto& tok : row) {
      const long long v = detail::parse_integer(tok, lineno);
      if (v < 0 || v >= n) throw FormatError(lineno, "table entry out of range");
      entries.push_back(static_cast<std::size_t>(v));
    }
    table.push_back(std::move(entries));
  }
  const std::size_t table_end = lineno;
  if (const std::string err = FiniteGroup::check_axioms(table); !err.empty())
    throw FormatError(table_end, "multiplication table is not a group: " + err);
  auto marker = next();
  if (marker.size() != 1 || marker[0] != "images") throw FormatError(lineno, "expected 'images'");
  std::vector<std::optional<std::size_t>> images;
  for (auto tok = next(); !tok.empty(); tok = next()) {
    if (tok.size() != 4 || tok[0] != "gen" || tok[2] != "->") throw FormatError(lineno, "expected 'gen <id> -> <element>'");
    const long long id = detail::parse_integer(tok[1], lineno);
    const long long el = detail::parse_integer(tok[3], lineno);
    if (id < 0) throw FormatError(lineno, "negative generator id");
    if (el < 0 || el >= n) throw FormatError(lineno, "element out of range");
    if (static_cast<std::size_t>(id) >= images.size()) images.resize(static_cast<std::size_t>(id) + 1);
    if (images[id]) throw FormatError(lineno, "duplicate image for generator " + tok[1]);
    images[id] = static_cast<std::size_t>(el);
  }
  FiniteQuotient q{FiniteGroup(std::move(table)), {}};
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i]) throw FormatError(0, "missing image for generator " + std::to_string(i));
    q.images.push_back(*images[i]);
  }
  return q;
}

void write_quotient(std::ostream& out, const FiniteQuotient& q) {
  out << "group " << q.group.order() << '\n';
  for (const auto& row : q.group.table()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  out << "images\n";
  for (std::size_t i = 0; i < q.images.size(); ++i) out << "gen " << i << " -> " << q.images[i] << '\n';
}

FiniteQuotient read_quotient_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(0, "cannot open " + path);
  return parse_quotient(in);
}

}  // namespace tricover
