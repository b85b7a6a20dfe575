#include "tricover/cheeger.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <string>

#include "tricover/io.hpp"

namespace tricover {

MultiGraph::MultiGraph(std::size_t vertex_count, const std::vector<std::pair<std::size_t, std::size_t>>& edge_list)
    : vertex_count_(vertex_count) {
  edges_.reserve(edge_list.size());
  for (auto [u, v] : edge_list) edges_.push_back({u, v, 1});
  normalize();
}

MultiGraph::MultiGraph(std::size_t vertex_count, std::vector<GraphEdge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  normalize();
}

void MultiGraph::normalize() {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> merged;
  for (const GraphEdge& e : edges_) {
    if (e.u >= vertex_count_ || e.v >= vertex_count_) throw std::out_of_range("MultiGraph: edge endpoint out of range");
    if (e.multiplicity == 0) continue;
    merged[{std::min(e.u, e.v), std::max(e.u, e.v)}] += e.multiplicity;
  }
  edges_.clear();
  for (const auto& [k, m] : merged) edges_.push_back({k.first, k.second, m});
}

std::size_t MultiGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (const GraphEdge& e : edges_)
    if (!e.is_loop() && (e.u == v || e.v == v)) d += e.multiplicity;
  return d;
}

std::size_t MultiGraph::max_degree() const {
  std::vector<std::size_t> d(vertex_count_, 0);
  for (const GraphEdge& e : edges_)
    if (!e.is_loop()) d[e.u] += e.multiplicity, d[e.v] += e.multiplicity;
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

bool MultiGraph::connected() const {
  if (vertex_count_ == 0) return false;
  std::vector<std::size_t> parent(vertex_count_);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t parts = vertex_count_;
  for (const GraphEdge& e : edges_) {
    const std::size_t a = find(e.u), b = find(e.v);
    if (a != b) parent[a] = b, --parts;
  }
  return parts == 1;
}

bool MultiGraph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const GraphEdge& e) { return e.is_loop(); });
}

MultiGraph cayley_graph(const FiniteQuotient& q) {
  std::vector<std::pair<std::size_t, std::size_t>> list;
  for (std::size_t g = 0; g < q.degree(); ++g)
    for (std::size_t x : q.images) list.emplace_back(g, q.group.mul(g, x));
  return MultiGraph(q.degree(), list);
}

std::int64_t boundary_size(const MultiGraph& g, const std::vector<std::size_t>& subset) {
  std::vector<char> in(g.vertex_count(), 0);
  for (std::size_t v : subset) in.at(v) = 1;
  std::int64_t b = 0;
  for (const GraphEdge& e : g.edges())
    if (in[e.u] != in[e.v]) b += static_cast<std::int64_t>(e.multiplicity);
  return b;
}

CutCertificate make_cut(const MultiGraph& g, std::vector<std::size_t> subset, bool optimal) {
  std::sort(subset.begin(), subset.end());
  if (subset.empty()) throw std::invalid_argument("cut: subset is empty");
  if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
    throw std::invalid_argument("cut: repeated vertex");
  if (subset.back() >= g.vertex_count()) throw std::invalid_argument("cut: vertex out of range");
  if (2 * subset.size() > g.vertex_count()) throw std::invalid_argument("cut: subset exceeds half the vertices");
  CutCertificate c;
  c.boundary = boundary_size(g, subset);
  c.ratio = Ratio(c.boundary, static_cast<std::int64_t>(subset.size()));
  c.subset = std::move(subset);
  c.optimal = optimal;
  return c;
}

namespace {

using Mask = std::uint64_t;

std::vector<std::size_t> mask_vertices(Mask m) {
  std::vector<std::size_t> out;
  for (; m; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

Mask bit(std::size_t v) { return Mask{1} << v; }

Mask at_most(std::size_t v) { return v >= 63 ? ~Mask{0} : (bit(v + 1) - 1); }

// Exhaustive search over connected subsets of size <= |V|/2. A disconnected subset never beats
// its best component, so the minimum over connected subsets is the Cheeger constant, and every
// minimizer is a union of pairwise non-adjacent connected minimizers.
class ExactSolver {
 public:
  explicit ExactSolver(const MultiGraph& g) : n_(g.vertex_count()), adj_(n_), nbr_(n_, 0), deg_(n_, 0) {
    for (const GraphEdge& e : g.edges()) {
      if (e.is_loop()) continue;
      const auto m = static_cast<std::int64_t>(e.multiplicity);
      adj_[e.u].push_back({e.v, m});
      adj_[e.v].push_back({e.u, m});
      nbr_[e.u] |= bit(e.v);
      nbr_[e.v] |= bit(e.u);
      deg_[e.u] += m;
      deg_[e.v] += m;
    }
    max_size_ = n_ / 2;
  }

  CutCertificate solve(const MultiGraph& g) {
    for (std::size_t r = 0; r < n_; ++r) {
      const Mask above = ~at_most(r);
      extend(bit(r), nbr_[r] & above, bit(r) | nbr_[r], above, deg_[r], 1);
    }
    index_pool();
    Mask chosen = 0;
    std::size_t last = 0;
    bool started = false;
    while (true) {
      if (chosen && packable(chosen, n_ - 1)) break;
      bool grew = false;
      for (std::size_t a = started ? last + 1 : 0; a < n_; ++a) {
        if (packable(chosen | bit(a), a)) {
          chosen |= bit(a);
          last = a;
          started = grew = true;
          break;
        }
      }
      if (!grew) throw std::logic_error("cheeger_exact: minimizer reconstruction failed");
    }
    return make_cut(g, mask_vertices(chosen), true);
  }

 private:
  struct Arc {
    std::size_t to;
    std::int64_t mult;
  };
  struct Part {
    Mask set;
    Mask closed;  // set plus its neighbours
    std::size_t size;
  };

  void record(Mask set, std::int64_t boundary, std::size_t size) {
    const Ratio r(boundary, static_cast<std::int64_t>(size));
    if (!have_best_ || r < best_) {
      best_ = r;
      have_best_ = true;
      pool_.clear();
    } else if (r != best_) {
      return;
    }
    Mask closed = set;
    for (Mask m = set; m; m &= m - 1) closed |= nbr_[std::countr_zero(m)];
    pool_.push_back({set, closed, size});
  }

  void extend(Mask set, Mask ext, Mask closed, Mask above, std::int64_t boundary, std::size_t size) {
    record(set, boundary, size);
    if (size == max_size_) return;
    while (ext) {
      const auto w = static_cast<std::size_t>(std::countr_zero(ext));
      ext &= ext - 1;
      std::int64_t inside = 0;
      for (const Arc& a : adj_[w])
        if (set & bit(a.to)) inside += a.mult;
      const Mask fresh = nbr_[w] & ~closed & above;
      extend(set | bit(w), ext | fresh, closed | nbr_[w], above, boundary + deg_[w] - 2 * inside, size + 1);
    }
  }

  void index_pool() {
    by_vertex_.assign(n_, {});
    for (std::size_t i = 0; i < pool_.size(); ++i)
      for (std::size_t v : mask_vertices(pool_[i].set)) by_vertex_[v].push_back(i);
  }

  // Is there a minimizer B with B ∩ {0..bound} == target?
  bool packable(Mask target, std::size_t bound) const {
    return pack(target, at_most(bound), target, 0, max_size_);
  }

  bool pack(Mask uncovered, Mask low, Mask target, Mask blocked, std::size_t budget) const {
    if (!uncovered) return true;
    const auto u = static_cast<std::size_t>(std::countr_zero(uncovered));
    for (std::size_t i : by_vertex_[u]) {
      const Part& p = pool_[i];
      if (p.size > budget || (p.set & blocked) || (p.set & low & ~target)) continue;
      if (pack(uncovered & ~p.set, low, target, blocked | p.closed, budget - p.size)) return true;
    }
    return false;
  }

  std::size_t n_;
  std::vector<std::vector<Arc>> adj_;
  std::vector<Mask> nbr_;
  std::vector<std::int64_t> deg_;
  std::size_t max_size_ = 0;
  bool have_best_ = false;
  Ratio best_;
  std::vector<Part> pool_;
  std::vector<std::vector<std::size_t>> by_vertex_;
};

Eigen::MatrixXd laplacian(const MultiGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (const GraphEdge& e : g.edges()) {
    if (e.is_loop()) continue;
    const double m = static_cast<double>(e.multiplicity);
    const auto u = static_cast<Eigen::Index>(e.u), v = static_cast<Eigen::Index>(e.v);
    L(u, u) += m;
    L(v, v) += m;
    L(u, v) -= m;
    L(v, u) -= m;
  }
  return L;
}

void require_spectral_input(const MultiGraph& g, const char* who) {
  if (g.vertex_count() < 2) throw std::invalid_argument(std::string(who) + ": need at least two vertices");
  if (!g.connected()) throw Disconnected(std::string(who) + ": graph is disconnected");
}

}  // namespace

CutCertificate cheeger_exact(const MultiGraph& g, std::size_t limit) {
  const std::size_t n = g.vertex_count();
  if (n > std::min<std::size_t>(limit, 64))
    throw TooLarge("cheeger_exact: " + std::to_string(n) + " vertices exceeds limit " +
                   std::to_string(std::min<std::size_t>(limit, 64)));
  if (n < 2) throw std::invalid_argument("cheeger_exact: need at least two vertices");
  ExactSolver solver(g);
  return solver.solve(g);
}

CutCertificate cheeger_sweep(const MultiGraph& g) {
  require_spectral_input(g, "cheeger_sweep");
  const std::size_t n = g.vertex_count();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(laplacian(g));
  Eigen::VectorXd f = es.eigenvectors().col(1);
  for (Eigen::Index i = 0; i < f.size(); ++i) {
    if (std::abs(f(i)) > 1e-9) {
      if (f(i) < 0) f = -f;
      break;
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return f(static_cast<Eigen::Index>(a)) < f(static_cast<Eigen::Index>(b));
  });

  std::vector<char> in(n, 0);
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> adj(n);
  for (const GraphEdge& e : g.edges()) {
    if (e.is_loop()) continue;
    adj[e.u].push_back({e.v, static_cast<std::int64_t>(e.multiplicity)});
    adj[e.v].push_back({e.u, static_cast<std::int64_t>(e.multiplicity)});
  }
  std::int64_t boundary = 0;
  std::size_t best_k = 0;
  Ratio best;
  for (std::size_t k = 1; k < n; ++k) {
    const std::size_t v = order[k - 1];
    for (auto [w, m] : adj[v]) boundary += in[w] ? -m : m;
    in[v] = 1;
    const Ratio r(boundary, static_cast<std::int64_t>(std::min(k, n - k)));
    if (best_k == 0 || r < best) best = r, best_k = k;
  }
  std::vector<std::size_t> side;
  if (2 * best_k <= n) {
    side.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(best_k));
  } else {
    side.assign(order.begin() + static_cast<std::ptrdiff_t>(best_k), order.end());
  }
  return make_cut(g, std::move(side), false);
}

SpectralBrackets spectral_brackets(const MultiGraph& g) {
  require_spectral_input(g, "spectral_brackets");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(laplacian(g), Eigen::EigenvaluesOnly);
  SpectralBrackets b;
  b.lambda2 = std::max(0.0, es.eigenvalues()(1));
  b.max_degree = g.max_degree();
  b.lower = b.lambda2 / 2;
  b.upper = std::sqrt(2.0 * static_cast<double>(b.max_degree) * b.lambda2);
  return b;
}

double certificate_threshold(std::size_t vertex_count) {
  return std::sqrt(2.0 / (3.0 * static_cast<double>(vertex_count)));
}

bool below_certificate_threshold(const Ratio& ratio, std::size_t vertex_count) {
  const __int128 num = ratio.num, den = ratio.den;
  return num * num * 3 * static_cast<__int128>(vertex_count) < 2 * den * den;
}

void write_graph(std::ostream& out, const MultiGraph& g) {
  out << "graph " << g.vertex_count() << ' ' << g.edges().size() << '\n';
  for (const GraphEdge& e : g.edges()) out << "e " << e.u << ' ' << e.v << ' ' << e.multiplicity << '\n';
}

namespace {

struct LineReader {
  std::istream& in;
  std::size_t lineno = 0;

  std::vector<std::string> next() {
    std::string raw;
    while (std::getline(in, raw)) {
      ++lineno;
      auto tok = detail::tokenize(raw);
      if (!tok.empty()) return tok;
    }
    return {};
  }

  std::size_t count(const std::string& token) {
    const long long v = detail::parse_integer(token, lineno);
    if (v < 0) throw FormatError(lineno, "expected a non-negative integer");
    return static_cast<std::size_t>(v);
  }
};

}  // namespace

MultiGraph parse_graph(std::istream& in) {
  LineReader r{in};
  auto tok = r.next();
  if (tok.size() != 3 || tok[0] != "graph") throw FormatError(r.lineno, "expected header 'graph N M'");
  const std::size_t n = r.count(tok[1]), m = r.count(tok[2]);
  std::vector<GraphEdge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    tok = r.next();
    if (tok.size() != 4 || tok[0] != "e") throw FormatError(r.lineno, "expected 'e u v mult'");
    GraphEdge e{r.count(tok[1]), r.count(tok[2]), r.count(tok[3])};
    if (e.u >= n || e.v >= n) throw FormatError(r.lineno, "edge endpoint out of range");
    edges.push_back(e);
  }
  if (!r.next().empty()) throw FormatError(r.lineno, "unexpected trailing content");
  return MultiGraph(n, std::move(edges));
}

void write_cut(std::ostream& out, const CutCertificate& c) {
  out << "cut " << c.subset.size() << '\n';
  for (std::size_t i = 0; i < c.subset.size(); ++i) out << (i ? " " : "") << c.subset[i];
  out << '\n' << "boundary " << c.boundary << " ratio " << c.ratio << '\n';
}

CutCertificate parse_cut(std::istream& in) {
  LineReader r{in};
  auto tok = r.next();
  if (tok.size() != 2 || tok[0] != "cut") throw FormatError(r.lineno, "expected header 'cut k'");
  const std::size_t k = r.count(tok[1]);
  CutCertificate c;
  while (c.subset.size() < k) {
    tok = r.next();
    if (tok.empty()) throw FormatError(r.lineno, "missing cut vertices");
    if (tok[0] == "boundary") throw FormatError(r.lineno, "fewer vertices than declared");
    for (const auto& t : tok) c.subset.push_back(r.count(t));
  }
  if (c.subset.size() != k) throw FormatError(r.lineno, "more vertices than declared");
  tok = r.next();
  if (tok.size() != 4 || tok[0] != "boundary" || tok[2] != "ratio")
    throw FormatError(r.lineno, "expected 'boundary B ratio p/q'");
  c.boundary = static_cast<std::int64_t>(r.count(tok[1]));
  const auto slash = tok[3].find('/');
  if (slash == std::string::npos) throw FormatError(r.lineno, "ratio must be p/q");
  const std::size_t p = r.count(tok[3].substr(0, slash)), q = r.count(tok[3].substr(slash + 1));
  if (q == 0) throw FormatError(r.lineno, "ratio denominator is zero");
  c.ratio = Ratio(static_cast<std::int64_t>(p), static_cast<std::int64_t>(q));
  if (k > 0 && c.ratio != Ratio(c.boundary, static_cast<std::int64_t>(k)))
    throw FormatError(r.lineno, "ratio does not equal boundary / k");
  std::sort(c.subset.begin(), c.subset.end());
  return c;
}

}  // namespace tricover
