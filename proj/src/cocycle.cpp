#include "tricover/cocycle.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <deque>
#include <istream>
#include <numeric>
#include <ostream>

#include "tricover/homology.hpp"
#include "tricover/io.hpp"
#include "union_find.hpp"

namespace tricover {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using RMatrix = std::vector<std::vector<Rational>>;

void check_domain(const Skeleton& s, const Cocycle& c) {
  if (c.values.size() != s.edges.size())
    throw DomainMismatch("cochain has " + std::to_string(c.values.size()) + " values but the triangulation has " +
                         std::to_string(s.edges.size()) + " edge classes");
}

// Reduced row echelon form, visiting columns in `order`. Returns the pivot column of each
// remaining row; rows of `m` are replaced by the reduced nonzero rows.
std::vector<std::size_t> rref(RMatrix& m, const std::vector<std::size_t>& order) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col : order) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational lead = m[row][col];
    for (auto& x : m[row]) x /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t k = 0; k < m[r].size(); ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

// Basis of {x : m x = 0}; one vector per free column, with a 1 at that column.
RMatrix nullspace(RMatrix m, std::size_t cols, const std::vector<std::size_t>& order,
                  std::vector<std::size_t>* free_out = nullptr) {
  const std::vector<std::size_t> pivots = rref(m, order);
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t p : pivots) is_pivot[p] = 1;
  std::vector<std::size_t> free;
  for (std::size_t k = 0; k < cols; ++k)
    if (!is_pivot[k]) free.push_back(k);
  RMatrix basis;
  for (std::size_t k : free) {
    std::vector<Rational> v(cols, 0);
    v[k] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][k];
    basis.push_back(std::move(v));
  }
  if (free_out) *free_out = free;
  return basis;
}

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw ArithmeticOverflow("certificate search: coefficient exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

// Scales a rational vector to integers with a positive common denominator.
std::pair<std::vector<std::int64_t>, std::int64_t> integer_row(const std::vector<Rational>& row) {
  BigInt den = 1;
  for (const Rational& x : row) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(x));
  std::vector<std::int64_t> out;
  out.reserve(row.size());
  for (const Rational& x : row) out.push_back(to_int64(boost::multiprecision::numerator(Rational(x * den))));
  return {out, to_int64(den)};
}

// Depth-first enumeration of {-1, 0, 1} points of the cocycle space Z (supported on the search
// positions), skipping the coboundary subspace W. Free positions of Z are branched on; every
// other position is an integer combination of earlier free positions.
class CertificateSearch {
 public:
  CertificateSearch(std::size_t size, const std::vector<std::size_t>& free, const RMatrix& z_basis,
                    const RMatrix& annihilator)
      : size_(size), param_of_(size, kNone), forced_num_(size), forced_den_(size, 1) {
    for (std::size_t k = 0; k < free.size(); ++k) param_of_[free[k]] = k;
    const std::size_t f = free.size();
    // Column j of the parametrization: coordinate j as a combination of the parameters.
    for (std::size_t j = 0; j < size; ++j) {
      if (param_of_[j] != kNone) continue;
      std::vector<Rational> row(f);
      for (std::size_t k = 0; k < f; ++k) row[k] = z_basis[k][j];
      std::tie(forced_num_[j], forced_den_[j]) = integer_row(row);
      for (std::size_t k = 0; k < f; ++k)
        if (forced_num_[j][k] != 0 && free[k] > j)
          throw std::logic_error("certificate search: coordinate depends on a later parameter");
    }
    // Coboundary test in parameter coordinates: t lies in W iff every row of ann * basis vanishes.
    for (const auto& a : annihilator) {
      std::vector<Rational> row(f);
      for (std::size_t k = 0; k < f; ++k)
        for (std::size_t j = 0; j < size; ++j) row[k] += a[j] * z_basis[k][j];
      auto [num, den] = integer_row(row);
      (void)den;
      if (std::any_of(num.begin(), num.end(), [](std::int64_t x) { return x != 0; })) test_.push_back(std::move(num));
    }
    last_relevant_.assign(f, false);
    if (!test_.empty()) {
      std::size_t last = 0;
      for (std::size_t k = 0; k < f; ++k)
        for (const auto& row : test_)
          if (row[k] != 0) last = k;
      for (std::size_t k = last; k < f; ++k) last_relevant_[k] = true;
    }
    acc_.assign(size, 0);
    slack_.assign(size, 0);
    for (std::size_t j = 0; j < size; ++j)
      for (std::int64_t x : forced_num_[j]) slack_[j] += x < 0 ? -x : x;
    test_acc_.assign(test_.size(), 0);
    value_.assign(size, 0);
  }

  bool possible() const { return !test_.empty(); }

  std::optional<std::vector<int>> run() {
    if (!possible()) return std::nullopt;
    if (dfs(0)) return value_;
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool dfs(std::size_t j) {
    if (j == size_) return std::any_of(test_acc_.begin(), test_acc_.end(), [](std::int64_t x) { return x != 0; });
    const std::size_t k = param_of_[j];
    if (k == kNone) {
      const std::int64_t den = forced_den_[j], num = acc_[j];
      if (num % den != 0) return false;
      const std::int64_t v = num / den;
      if (v < -1 || v > 1) return false;
      value_[j] = static_cast<int>(v);
      return dfs(j + 1);
    }
    for (int v : {-1, 0, 1}) {
      assign(k, v, +1);
      value_[j] = v;
      const bool ok = feasible(j) && dfs(j + 1);
      assign(k, v, -1);
      if (ok) return true;
    }
    return false;
  }

  void assign(std::size_t k, int v, int dir) {
    for (std::size_t j = 0; j < size_; ++j) {
      if (param_of_[j] != kNone) continue;
      const std::int64_t x = forced_num_[j][k];
      if (x == 0) continue;
      acc_[j] += dir * v * x;
      slack_[j] -= dir * (x < 0 ? -x : x);
    }
    for (std::size_t i = 0; i < test_.size(); ++i) test_acc_[i] += dir * v * test_[i][k];
  }

  // Every later forced coordinate can still land in [-1, 1], and W can still be avoided.
  bool feasible(std::size_t j) const {
    for (std::size_t p = j + 1; p < size_; ++p) {
      if (param_of_[p] != kNone) continue;
      const std::int64_t den = forced_den_[p];
      if (acc_[p] - slack_[p] > den || acc_[p] + slack_[p] < -den) return false;
    }
    if (last_relevant_[param_of_[j]])
      return std::any_of(test_acc_.begin(), test_acc_.end(), [](std::int64_t x) { return x != 0; });
    return true;
  }

  std::size_t size_;
  std::vector<std::size_t> param_of_;
  std::vector<std::vector<std::int64_t>> forced_num_;
  std::vector<std::int64_t> forced_den_;
  std::vector<std::vector<std::int64_t>> test_;
  std::vector<bool> last_relevant_;
  std::vector<std::int64_t> acc_, slack_, test_acc_;
  std::vector<int> value_;
};

}  // namespace

std::vector<std::size_t> Cocycle::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != 0) out.push_back(i);
  return out;
}

std::optional<std::size_t> violated_face(const Skeleton& s, const Cocycle& c) {
  check_domain(s, c);
  for (std::size_t f = 0; f < s.faces.size(); ++f) {
    std::int64_t sum = 0;
    for (int k = 0; k < 3; ++k) sum += s.faces[f].signs[k] * c.values[s.faces[f].edges[k]];
    if (sum != 0) return f;
  }
  return std::nullopt;
}

bool is_cocycle(const Skeleton& s, const Cocycle& c) { return !violated_face(s, c).has_value(); }

bool is_cocycle(const Triangulation& t, const Cocycle& c) { return is_cocycle(build_skeleton(t), c); }

CoboundaryResult is_coboundary(const Skeleton& s, const Cocycle& c) {
  if (!is_cocycle(s, c)) throw PreconditionViolation("is_coboundary: cochain is not a cocycle");
  const std::size_t nv = s.vertices.size();
  if (nv == 0) throw PreconditionViolation("is_coboundary: empty triangulation");
  struct Arc {
    std::size_t edge, to;
    int sign;
  };
  std::vector<std::vector<Arc>> adj(nv);
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    adj[s.edges[e].tail].push_back({e, s.edges[e].head, +1});
    adj[s.edges[e].head].push_back({e, s.edges[e].tail, -1});
  }
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(nv, kNone);
  std::vector<OrientedEdge> via(nv);
  std::vector<std::int64_t> pot(nv, 0);
  std::vector<char> seen(nv, 0);
  for (std::size_t root = 0; root < nv; ++root) {  // one BFS tree per component, rooted at its lowest vertex
    if (seen[root]) continue;
    seen[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (const Arc& a : adj[v]) {
        if (seen[a.to]) continue;
        seen[a.to] = 1;
        parent[a.to] = v;
        via[a.to] = {a.edge, a.sign};
        pot[a.to] = pot[v] + a.sign * c.values[a.edge];
        queue.push_back(a.to);
      }
    }
  }

  auto path_from_root = [&](std::size_t v) {
    std::vector<OrientedEdge> p;
    for (; parent[v] != kNone; v = parent[v]) p.push_back(via[v]);
    std::reverse(p.begin(), p.end());
    return p;
  };

  CoboundaryResult r;
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    const EdgeClass& ec = s.edges[e];
    if (pot[ec.head] - pot[ec.tail] == c.values[e]) continue;
    r.witness = path_from_root(ec.tail);
    r.witness.push_back({e, +1});
    auto back = path_from_root(ec.head);
    for (auto it = back.rbegin(); it != back.rend(); ++it) r.witness.push_back({it->edge, -it->sign});
    r.witness_sum = evaluate(c, r.witness);
    if (r.witness_sum == 0) throw std::logic_error("is_coboundary: witness walk sums to zero");
    return r;
  }
  r.coboundary = true;
  r.potential = std::move(pot);
  return r;
}

CoboundaryResult is_coboundary(const Triangulation& t, const Cocycle& c) { return is_coboundary(build_skeleton(t), c); }

Cocycle coboundary_of(const Skeleton& s, const std::vector<std::int64_t>& potential) {
  if (potential.size() != s.vertices.size()) throw DomainMismatch("coboundary_of: potential size mismatch");
  Cocycle c;
  c.values.reserve(s.edges.size());
  for (const EdgeClass& e : s.edges) c.values.push_back(potential[e.head] - potential[e.tail]);
  return c;
}

std::int64_t evaluate(const Cocycle& c, const std::vector<OrientedEdge>& walk) {
  std::int64_t sum = 0;
  for (const OrientedEdge& o : walk) sum += o.sign * c.values.at(o.edge);
  return sum;
}

std::optional<Cocycle> search_certificate_on_support(const Skeleton& s, std::vector<std::size_t> support,
                                                     std::size_t cap) {
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  if (!support.empty() && support.back() >= s.edges.size())
    throw DomainMismatch("search_certificate: support edge out of range");
  if (support.size() > cap)
    throw SupportTooLarge("search_certificate: support of " + std::to_string(support.size()) +
                          " edges exceeds cap " + std::to_string(cap));
  const std::size_t n = support.size();
  if (n == 0) return std::nullopt;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pos(s.edges.size(), kNone);
  for (std::size_t j = 0; j < n; ++j) pos[support[j]] = j;

  RMatrix faces;
  for (const FaceClass& f : s.faces) {
    std::vector<Rational> row(n, 0);
    bool any = false;
    for (int k = 0; k < 3; ++k) {
      if (pos[f.edges[k]] == kNone) continue;
      row[pos[f.edges[k]]] += f.signs[k];
      any = true;
    }
    if (any) faces.push_back(std::move(row));
  }
  std::vector<std::size_t> descending(n);
  std::iota(descending.rbegin(), descending.rend(), std::size_t{0});
  std::vector<std::size_t> free;
  const RMatrix z_basis = nullspace(faces, n, descending, &free);
  if (free.empty()) return std::nullopt;

  // Coboundaries supported on the support: indicator coboundaries of components of the
  // 1-skeleton with the support edges removed.
  detail::ParityUnionFind uf(s.vertices.size());
  for (std::size_t e = 0; e < s.edges.size(); ++e)
    if (pos[e] == kNone) uf.unite(s.edges[e].tail, s.edges[e].head, 0);
  std::vector<std::size_t> comp_index(s.vertices.size(), kNone);
  std::size_t comps = 0;
  for (std::size_t v = 0; v < s.vertices.size(); ++v) {
    const std::size_t r = uf.root(v);
    if (comp_index[r] == kNone) comp_index[r] = comps++;
  }
  RMatrix w(comps, std::vector<Rational>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    const EdgeClass& e = s.edges[support[j]];
    const std::size_t ct = comp_index[uf.root(e.tail)], ch = comp_index[uf.root(e.head)];
    if (ct == ch) continue;
    w[ch][j] += 1;
    w[ct][j] -= 1;
  }
  std::vector<std::size_t> ascending(n);
  std::iota(ascending.begin(), ascending.end(), std::size_t{0});
  const RMatrix annihilator = nullspace(w, n, ascending);

  CertificateSearch search(n, free, z_basis, annihilator);
  const auto values = search.run();
  if (!values) return std::nullopt;
  Cocycle c;
  c.values.assign(s.edges.size(), 0);
  for (std::size_t j = 0; j < n; ++j) c.values[support[j]] = (*values)[j];
  if (!is_cocycle(s, c) || is_coboundary(s, c).coboundary)
    throw std::logic_error("search_certificate: candidate failed independent verification");
  return c;
}

std::vector<std::size_t> cut_edges(const CoverTriangulation& cover, const CutCertificate& cut) {
  std::vector<char> in(cover.degree(), 0);
  for (std::size_t v : cut.subset) in.at(v) = 1;
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < cover.edge_start.size(); ++e) {
    const std::size_t a = cover.edge_start[e];
    const std::size_t b = cover.quotient.group.mul(a, cover.quotient.images[cover.edge_generator[e]]);
    if (in[a] != in[b]) out.push_back(e);
  }
  return out;
}

namespace {

void check_cut(const CoverTriangulation& cover, const CutCertificate& cut) {
  const std::size_t n = cover.degree();
  for (std::size_t v : cut.subset)
    if (v >= n) throw PreconditionViolation("cut vertex " + std::to_string(v) + " is not a Cayley graph vertex");
  if (cut.subset.empty() || 2 * cut.subset.size() > n)
    throw PreconditionViolation("cut must satisfy 0 < |A| <= |V|/2");
  const MultiGraph g = cayley_graph(cover.quotient);
  const std::int64_t b = boundary_size(g, cut.subset);
  if (b != cut.boundary || Ratio(b, static_cast<std::int64_t>(cut.subset.size())) != cut.ratio)
    throw PreconditionViolation("cut boundary does not match the Cayley graph of the cover");
}

}  // namespace

SearchResult search_certificate(const CoverTriangulation& cover, const CutCertificate& cut,
                                const SearchOptions& options) {
  check_cut(cover, cut);
  SearchResult r;
  r.threshold_holds = below_certificate_threshold(cut.ratio, cover.degree());
  if (!r.threshold_holds) {
    if (!options.force)
      throw PreconditionViolation("cut ratio " + cut.ratio.str() + " is not below the certificate threshold");
    r.warnings.push_back("PreconditionOverridden: cut ratio " + cut.ratio.str() +
                         " is not below the certificate threshold");
  }
  r.support = cut_edges(cover, cut);
  r.certificate = search_certificate_on_support(cover.lifted_skeleton, r.support, options.cap);
  return r;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Agree:
      return "AGREE";
    case Verdict::Disagree:
      return "DISAGREE";
    case Verdict::TheoremViolation:
      return "THEOREM_VIOLATION";
  }
  return "?";
}

VerificationReport verify_certificate_implication(const CoverTriangulation& cover, const CutCertificate& cut,
                                                  std::size_t cap) {
  SearchOptions opts;
  opts.cap = cap;
  opts.force = true;
  const SearchResult sr = search_certificate(cover, cut, opts);
  VerificationReport rep;
  rep.ratio = cut.ratio;
  rep.threshold = certificate_threshold(cover.degree());
  rep.threshold_holds = sr.threshold_holds;
  rep.cut_optimal = cut.optimal;
  if (!rep.cut_optimal && cover.degree() <= kDefaultExactLimit)
    rep.cut_optimal = cheeger_exact(cayley_graph(cover.quotient)).ratio == cut.ratio;
  rep.found = sr.certificate.has_value();
  rep.certificate = sr.certificate;
  rep.support_size = sr.support.size();
  rep.b1 = homology(cover.lifted_skeleton).b(1);
  rep.warnings = sr.warnings;
  if (rep.found && rep.b1 == 0)
    rep.verdict = Verdict::Disagree;
  else if (rep.threshold_holds && rep.cut_optimal && !rep.found)
    rep.verdict = Verdict::TheoremViolation;
  return rep;
}

void write_cocycle(std::ostream& out, const Cocycle& c) {
  out << "cocycle\n";
  for (std::size_t e : c.support()) out << "edge " << e << ' ' << c.values[e] << '\n';
}

Cocycle parse_cocycle(std::istream& in, std::size_t edge_count) {
  std::string raw;
  std::size_t lineno = 0;
  bool header = false;
  Cocycle c;
  c.values.assign(edge_count, 0);
  std::vector<char> seen(edge_count, 0);
  while (std::getline(in, raw)) {
    ++lineno;
    const auto tok = detail::tokenize(raw);
    if (tok.empty()) continue;
    if (!header) {
      if (tok.size() != 1 || tok[0] != "cocycle") throw FormatError(lineno, "expected header 'cocycle'");
      header = true;
      continue;
    }
    if (tok.size() != 3 || tok[0] != "edge") throw FormatError(lineno, "expected 'edge <class-id> <value>'");
    const long long e = detail::parse_integer(tok[1], lineno);
    if (e < 0 || static_cast<std::size_t>(e) >= edge_count) throw FormatError(lineno, "edge class out of range");
    if (seen[e]) throw FormatError(lineno, "edge class listed twice");
    seen[e] = 1;
    c.values[e] = detail::parse_integer(tok[2], lineno);
  }
  if (!header) throw FormatError(0, "missing header 'cocycle'");
  return c;
}

}  // namespace tricover
