#include "tricover/triangulation.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "union_find.hpp"

namespace tricover {

void Triangulation::glue(std::size_t tet, int face, std::size_t target, const Perm4& perm) {
  set_gluing(tet, face, FaceGluing{target, perm});
  set_gluing(target, perm[face], FaceGluing{tet, perm.inverse()});
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool ValidationReport::passed(const std::string& name) const {
  const Check* c = find(name);
  return c != nullptr && c->passed;
}

namespace {

std::string describe(const TetFace& f) {
  std::ostringstream os;
  os << "tet " << f.tet << " face " << f.face;
  return os.str();
}

Check skipped(const std::string& name, const std::string& needs) {
  return Check{name, false, "not evaluated: requires " + needs, std::nullopt};
}

// Sign of the permutation of the three face positions induced by `perm` on face `face`.
int face_perm_sign(int face, const Perm4& perm) {
  const std::string code = face_code(face, perm);
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (code[i] > code[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

Check check_closed(const Triangulation& t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    for (int f = 0; f < 4; ++f)
      if (!t.gluing(i, f)) return Check{"closed", false, describe({i, f}) + " is unglued", TetFace{i, f}};
  return Check{"closed", true, "", std::nullopt};
}

Check check_involution(const Triangulation& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = t.gluing(i, f);
      if (!g) continue;
      const TetFace here{i, f};
      if (g->tet >= t.size()) return Check{"involution", false, describe(here) + " targets a missing tetrahedron", here};
      const int tf = g->target_face(f);
      if (g->tet == i && tf == f) return Check{"involution", false, describe(here) + " is glued to itself", here};
      const auto& back = t.gluing(g->tet, tf);
      if (!back) return Check{"involution", false, describe(here) + " has no partner gluing", here};
      if (back->tet != i || back->target_face(tf) != f)
        return Check{"involution", false, describe(here) + " partner points elsewhere", here};
      if (!back->perm.compose(g->perm).is_identity())
        return Check{"involution", false, describe(here) + " partner vertex map is not inverse", here};
    }
  }
  return Check{"involution", true, "", std::nullopt};
}

Check check_edges(const Triangulation& t) {
  detail::ParityUnionFind uf(t.size() * 6);
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (int f = 0; f < 4; ++f) {
      const FaceGluing& g = *t.gluing(i, f);
      for (int e = 0; e < 6; ++e) {
        const int a = kEdgeVertices[e][0], b = kEdgeVertices[e][1];
        if (a == f || b == f) continue;
        const int ia = g.perm[a], ib = g.perm[b];
        const int flip = ia > ib ? 1 : 0;
        if (!uf.unite(i * 6 + e, g.tet * 6 + edge_index(ia, ib), flip))
          return Check{"edge_consistency", false, describe({i, f}) + " identifies an edge with its reverse",
                       TetFace{i, f}};
      }
    }
  }
  return Check{"edge_consistency", true, "", std::nullopt};
}

Check check_links(const Triangulation& t) {
  const Skeleton s = build_skeleton(t);
  // link of a vertex: triangles = corners, edges = face corners, vertices = edge ends
  std::vector<long long> chi(s.vertices.size(), 0);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (int v = 0; v < 4; ++v) chi[s.vertex_of[i][v]] += 1;
  for (const auto& f : s.faces) {
    for (int v : face_vertices(f.rep.face)) chi[s.vertex_of[f.rep.tet][v]] -= 1;
  }
  for (const auto& e : s.edges) {
    chi[e.tail] += 1;
    chi[e.head] += 1;
  }
  for (std::size_t v = 0; v < chi.size(); ++v) {
    if (chi[v] != 2) {
      std::ostringstream os;
      os << "vertex class " << v << " has link Euler characteristic " << chi[v];
      return Check{"vertex_links", false, os.str(), std::nullopt};
    }
  }
  return Check{"vertex_links", true, "", std::nullopt};
}

Check check_orientable(const Triangulation& t) {
  if (orientation(t)) return Check{"orientable", true, "", std::nullopt};
  return Check{"orientable", false, "no consistent orientation", std::nullopt};
}

Check check_connected(const Triangulation& t) {
  if (t.size() == 0) return Check{"connected", false, "no tetrahedra", std::nullopt};
  std::vector<char> seen(t.size(), 0);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = 1;
  std::size_t count = 1;
  while (!q.empty()) {
    const std::size_t i = q.front();
    q.pop();
    for (int f = 0; f < 4; ++f) {
      const auto& g = t.gluing(i, f);
      if (g && g->tet < t.size() && !seen[g->tet]) {
        seen[g->tet] = 1;
        ++count;
        q.push(g->tet);
      }
    }
  }
  if (count == t.size()) return Check{"connected", true, "", std::nullopt};
  const auto first = static_cast<std::size_t>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
  std::ostringstream os;
  os << "tetrahedron " << first << " is unreachable from tetrahedron 0";
  return Check{"connected", false, os.str(), TetFace{first, 0}};
}

}  // namespace

ValidationReport validate(const Triangulation& t) {
  ValidationReport r;
  r.checks.push_back(check_closed(t));
  r.checks.push_back(check_involution(t));
  const bool glued = r.checks[0].passed && r.checks[1].passed;
  if (glued) {
    r.checks.push_back(check_edges(t));
    r.checks.push_back(r.checks.back().passed ? check_links(t) : skipped("vertex_links", "edge_consistency"));
    r.checks.push_back(check_orientable(t));
  } else {
    r.checks.push_back(skipped("edge_consistency", "closed, involution"));
    r.checks.push_back(skipped("vertex_links", "closed, involution"));
    r.checks.push_back(skipped("orientable", "closed, involution"));
  }
  r.checks.push_back(check_connected(t));
  return r;
}

std::optional<std::vector<int>> orientation(const Triangulation& t) {
  std::vector<int> o(t.size(), 0);
  for (std::size_t start = 0; start < t.size(); ++start) {
    if (o[start] != 0) continue;
    o[start] = 1;
    std::queue<std::size_t> q;
    q.push(start);
    while (!q.empty()) {
      const std::size_t i = q.front();
      q.pop();
      for (int f = 0; f < 4; ++f) {
        const auto& g = t.gluing(i, f);
        if (!g) return std::nullopt;
        // an even vertex map joins oppositely oriented tetrahedra
        const int want = -g->perm.sign() * o[i];
        if (o[g->tet] == 0) {
          o[g->tet] = want;
          q.push(g->tet);
        } else if (o[g->tet] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return o;
}

Skeleton build_skeleton(const Triangulation& t) {
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i)
    for (int f = 0; f < 4; ++f)
      if (!t.gluing(i, f) || t.gluing(i, f)->tet >= n)
        throw InvalidTriangulation("build_skeleton: triangulation is not closed");

  Skeleton s;
  s.tet_count = n;
  s.vertex_of.assign(n, {});
  s.edge_of.assign(n, {});
  s.edge_sign.assign(n, {});
  s.face_of.assign(n, {});
  s.face_sign.assign(n, {});

  detail::ParityUnionFind vuf(n * 4);
  detail::ParityUnionFind euf(n * 6);
  for (std::size_t i = 0; i < n; ++i) {
    for (int f = 0; f < 4; ++f) {
      const FaceGluing& g = *t.gluing(i, f);
      for (int v : face_vertices(f)) vuf.unite(i * 4 + v, g.tet * 4 + g.perm[v]);
      for (int e = 0; e < 6; ++e) {
        const int a = kEdgeVertices[e][0], b = kEdgeVertices[e][1];
        if (a == f || b == f) continue;
        const int ia = g.perm[a], ib = g.perm[b];
        if (!euf.unite(i * 6 + e, g.tet * 6 + edge_index(ia, ib), ia > ib ? 1 : 0))
          throw InvalidTriangulation("build_skeleton: an edge is identified with its reverse");
      }
    }
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> vid(n * 4, kNone);
  for (std::size_t i = 0; i < n; ++i) {
    for (int v = 0; v < 4; ++v) {
      const std::size_t r = vuf.root(i * 4 + v);
      if (vid[r] == kNone) {
        vid[r] = s.vertices.size();
        s.vertices.push_back(VertexClass{i, v, 0});
      }
      s.vertex_of[i][v] = vid[r];
      ++s.vertices[vid[r]].corners;
    }
  }

  std::vector<std::size_t> eid(n * 6, kNone);
  std::vector<int> rep_parity;
  for (std::size_t i = 0; i < n; ++i) {
    for (int e = 0; e < 6; ++e) {
      const auto [r, p] = euf.find(i * 6 + e);
      if (eid[r] == kNone) {
        eid[r] = s.edges.size();
        EdgeClass ec;
        ec.rep_tet = i;
        ec.rep_edge = e;
        ec.tail = s.vertex_of[i][kEdgeVertices[e][0]];
        ec.head = s.vertex_of[i][kEdgeVertices[e][1]];
        s.edges.push_back(ec);
        rep_parity.push_back(p);
      }
      const std::size_t id = eid[r];
      s.edge_of[i][e] = id;
      s.edge_sign[i][e] = (p ^ rep_parity[id]) ? -1 : 1;
      ++s.edges[id].valence;
    }
  }

  std::vector<std::vector<char>> face_done(n, std::vector<char>(4, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (int f = 0; f < 4; ++f) {
      if (face_done[i][f]) continue;
      const FaceGluing& g = *t.gluing(i, f);
      const int tf = g.target_face(f);
      FaceClass fc;
      fc.rep = TetFace{i, f};
      const auto vs = face_vertices(f);
      const int e12 = edge_index(vs[1], vs[2]), e02 = edge_index(vs[0], vs[2]), e01 = edge_index(vs[0], vs[1]);
      fc.edges = {s.edge_of[i][e12], s.edge_of[i][e02], s.edge_of[i][e01]};
      fc.signs = {s.edge_sign[i][e12], -s.edge_sign[i][e02], s.edge_sign[i][e01]};
      const std::size_t id = s.faces.size();
      s.faces.push_back(fc);
      s.face_of[i][f] = id;
      s.face_sign[i][f] = 1;
      face_done[i][f] = 1;
      s.face_of[g.tet][tf] = id;
      s.face_sign[g.tet][tf] = face_perm_sign(f, g.perm);
      face_done[g.tet][tf] = 1;
    }
  }
  return s;
}

std::size_t max_edge_valence(const Skeleton& s) {
  std::size_t best = 0;
  for (const auto& e : s.edges) best = std::max(best, e.valence);
  return best;
}

Triangulation relabel(const Triangulation& t, const std::vector<std::size_t>& map) {
  if (map.size() != t.size()) throw std::invalid_argument("relabel: size mismatch");
  Triangulation out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (int f = 0; f < 4; ++f)
      if (const auto& g = t.gluing(i, f)) out.set_gluing(map[i], f, FaceGluing{map.at(g->tet), g->perm});
  return out;
}

Triangulation disjoint_union(const Triangulation& a, const Triangulation& b) {
  Triangulation out(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int f = 0; f < 4; ++f)
      if (const auto& g = a.gluing(i, f)) out.set_gluing(i, f, *g);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (int f = 0; f < 4; ++f)
      if (const auto& g = b.gluing(i, f)) out.set_gluing(a.size() + i, f, FaceGluing{a.size() + g->tet, g->perm});
  return out;
}

}  // namespace tricover
