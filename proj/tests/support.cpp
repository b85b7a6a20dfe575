#include "support.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "tricover/homology.hpp"

namespace oracle {

using namespace tricover;

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a), b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

constexpr std::array<std::array<int, 2>, 6> kEdges{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

int local_edge(int a, int b) {
  if (a > b) std::swap(a, b);
  for (int e = 0; e < 6; ++e)
    if (kEdges[e][0] == a && kEdges[e][1] == b) return e;
  return -1;
}

std::vector<std::size_t> class_sizes(UnionFind& uf, std::size_t n) {
  std::vector<std::size_t> order, size(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = uf.find(i);
    if (size[r]++ == 0) order.push_back(r);
  }
  std::vector<std::size_t> out;
  for (std::size_t r : order) out.push_back(size[r]);
  return out;
}

}  // namespace

std::vector<std::size_t> edge_class_sizes(const Triangulation& t) {
  UnionFind uf(6 * t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (int f = 0; f < 4; ++f) {
      const auto& g = t.gluing(i, f);
      for (const auto& e : kEdges) {
        if (e[0] == f || e[1] == f) continue;
        uf.unite(6 * i + local_edge(e[0], e[1]), 6 * g->tet + local_edge(g->perm[e[0]], g->perm[e[1]]));
      }
    }
  return class_sizes(uf, 6 * t.size());
}

std::size_t vertex_class_count(const Triangulation& t) {
  UnionFind uf(4 * t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (int f = 0; f < 4; ++f) {
      const auto& g = t.gluing(i, f);
      for (int v = 0; v < 4; ++v)
        if (v != f) uf.unite(4 * i + v, 4 * g->tet + g->perm[v]);
    }
  return class_sizes(uf, 4 * t.size()).size();
}

std::size_t rational_rank(const IntMatrix& m) {
  using Q = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Q>> a(m.rows(), std::vector<Q>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Q f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

BruteCut brute_cheeger(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  BruteCut best;
  bool have = false;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const auto k = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (2 * k > n) continue;
    std::int64_t boundary = 0;
    for (const auto& e : g.edges())
      if (((mask >> e.u) & 1) != ((mask >> e.v) & 1)) boundary += static_cast<std::int64_t>(e.multiplicity);
    std::vector<std::size_t> subset;
    for (std::size_t v = 0; v < n; ++v)
      if ((mask >> v) & 1) subset.push_back(v);
    const Ratio r(boundary, static_cast<std::int64_t>(k));
    if (!have || r < best.ratio || (r == best.ratio && subset < best.subset)) {
      best = {r, subset};
      have = true;
    }
  }
  return best;
}

MultiGraph random_multigraph(Rng& rng, std::size_t vertices, std::size_t extra_edges) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t v = 1; v < vertices; ++v) edges.emplace_back(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng), v);
  std::uniform_int_distribution<std::size_t> pick(0, vertices - 1);
  for (std::size_t i = 0; i < extra_edges; ++i) edges.emplace_back(pick(rng), pick(rng));
  return MultiGraph(vertices, edges);
}

bool rank_is_cocycle(const Skeleton& s, const Cocycle& c) {
  const IntMatrix d2 = boundary_matrix(s, 2);
  for (std::size_t f = 0; f < d2.cols(); ++f) {
    std::int64_t sum = 0;
    for (std::size_t e = 0; e < d2.rows(); ++e) sum += d2(e, f) * c.values[e];
    if (sum != 0) return false;
  }
  return true;
}

bool rank_is_coboundary(const Skeleton& s, const Cocycle& c) {
  const IntMatrix d1 = boundary_matrix(s, 1);
  IntMatrix delta(d1.cols(), d1.rows()), augmented(d1.cols(), d1.rows() + 1);
  for (std::size_t e = 0; e < d1.cols(); ++e) {
    for (std::size_t v = 0; v < d1.rows(); ++v) delta(e, v) = augmented(e, v) = d1(v, e);
    augmented(e, d1.rows()) = c.values[e];
  }
  return rational_rank(delta) == rational_rank(augmented);
}

std::optional<Cocycle> brute_certificate(const Skeleton& s, std::vector<std::size_t> support) {
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < support.size(); ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    Cocycle c{std::vector<std::int64_t>(s.edges.size(), 0)};
    std::uint64_t rest = code;
    for (std::size_t i = support.size(); i-- > 0;) {
      c.values[support[i]] = static_cast<std::int64_t>(rest % 3) - 1;
      rest /= 3;
    }
    if (rank_is_cocycle(s, c) && !rank_is_coboundary(s, c)) return c;
  }
  return std::nullopt;
}

std::set<std::vector<std::size_t>> brute_cyclic_quotients(const Presentation& p, std::size_t n) {
  std::set<std::vector<std::size_t>> out;
  const std::size_t g = p.generator_count;
  std::vector<std::size_t> x(g, 0);
  while (true) {
    bool ok = true;
    for (const Word& w : p.relators) {
      std::int64_t sum = 0;
      for (const Letter& l : w) sum += l.exponent * static_cast<std::int64_t>(x[l.generator]);
      if (((sum % static_cast<std::int64_t>(n)) + static_cast<std::int64_t>(n)) % static_cast<std::int64_t>(n) != 0) {
        ok = false;
        break;
      }
    }
    std::size_t gcd = n;
    for (std::size_t v : x) gcd = std::gcd(gcd, v);
    if (ok && gcd == 1) {
      std::vector<std::size_t> best = x;
      for (std::size_t u = 1; u < n; ++u) {
        if (std::gcd(u, n) != 1) continue;
        std::vector<std::size_t> y(g);
        for (std::size_t i = 0; i < g; ++i) y[i] = u * x[i] % n;
        best = std::min(best, y);
      }
      out.insert(best);
    }
    std::size_t i = 0;
    while (i < g && ++x[i] == n) x[i++] = 0;
    if (i == g) break;
  }
  return out;
}

Triangulation random_closed_triangulation(Rng& rng, std::size_t tets) {
  while (true) {
    std::vector<TetFace> faces;
    for (std::size_t i = 0; i < tets; ++i)
      for (int f = 0; f < 4; ++f) faces.push_back({i, f});
    std::shuffle(faces.begin(), faces.end(), rng);
    Triangulation t(tets);
    for (std::size_t k = 0; k < faces.size(); k += 2) {
      const TetFace a = faces[k], b = faces[k + 1];
      std::array<int, 3> others{}, targets{};
      for (int v = 0, i = 0, j = 0; v < 4; ++v) {
        if (v != a.face) others[i++] = v;
        if (v != b.face) targets[j++] = v;
      }
      std::shuffle(targets.begin(), targets.end(), rng);
      std::array<int, 4> img{};
      img[a.face] = b.face;
      for (int i = 0; i < 3; ++i) img[others[i]] = targets[i];
      t.glue(a.tet, a.face, b.tet, Perm4(img[0], img[1], img[2], img[3]));
    }
    if (!validate(t).passed("connected")) continue;
    try {
      build_skeleton(t);
    } catch (const InvalidTriangulation&) {
      continue;
    }
    return t;
  }
}

Profile random_admissible_profile(Rng& rng) {
  std::uniform_int_distribution<int> half_length(0, 4), step(1, 4);
  const std::size_t n = 2 * static_cast<std::size_t>(half_length(rng)) + 1;
  Profile p;
  p.chis.push_back(-2 * step(rng));
  std::int64_t total = -p.chis.back() / 2;
  for (std::size_t j = 1; j < n; ++j) {
    const std::int64_t prev = p.chis.back();
    std::int64_t next;
    if (j % 2 == 1) {
      // rise by at least 2 without reaching a positive value
      const std::int64_t room = -prev / 2;
      next = prev + 2 * std::uniform_int_distribution<std::int64_t>(1, room)(rng);
    } else {
      next = prev - 2 * step(rng);
    }
    total += (j % 2 == 1 ? next - prev : prev - next) / 2;
    p.chis.push_back(next);
  }
  total += -p.chis.back() / 2;
  p.chi_F = -total;
  return p;
}

}  // namespace oracle
