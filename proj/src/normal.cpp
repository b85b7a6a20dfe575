#include "tricover/normal.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "tricover/io.hpp"
#include "union_find.hpp"

namespace tricover {

std::shared_ptr<const Ambient> make_ambient(const Triangulation& t) {
  return std::make_shared<const Ambient>(Ambient{t, build_skeleton(t)});
}

int quad_type(int a, int b) {
  if (a > b) std::swap(a, b);
  if (a == b || a < 0 || b > 3) throw std::invalid_argument("quad_type: need two distinct vertices");
  if (a == 0) return b - 1;
  // {a, b} avoids 0, so the complement pairs 0 with the remaining vertex
  return (6 - a - b) - 1;
}

std::int64_t TetDiscs::disc_count() const {
  return std::accumulate(tri.begin(), tri.end(), std::int64_t{0}) +
         std::accumulate(quad.begin(), quad.end(), std::int64_t{0});
}

std::int64_t NormalSurface::disc_count() const {
  std::int64_t n = 0;
  for (const TetDiscs& d : tets) n += d.disc_count();
  return n;
}

namespace {

bool in_pair_with_zero(int q, int v) { return v == 0 || v == q + 1; }

// Number of discs meeting local edge (a, b).
std::int64_t edge_weight(const TetDiscs& d, int a, int b) {
  std::int64_t w = d.tri[a] + d.tri[b];
  const int skip = quad_type(a, b);
  for (int q = 0; q < 3; ++q)
    if (q != skip) w += d.quad[q];
  return w;
}

void require_ambient(const NormalSurface& s) {
  if (!s.ambient) throw std::invalid_argument("normal surface has no ambient triangulation");
  if (s.tets.size() != s.ambient->triangulation.size())
    throw std::invalid_argument("normal surface tetrahedron count does not match its triangulation");
}

struct Disc {
  std::size_t tet;
  bool quad;
  int type;  // vertex for triangles, quad type for quads
  std::int64_t copy;
  int sign;
};

// Points on edges, glued across faces, and the discs that meet them.
struct Cells {
  std::vector<Disc> discs;
  std::vector<std::array<std::size_t, 6>> point_base;  // first point id of (tet, local edge)
  std::size_t point_count = 0;
  std::vector<std::size_t> point_class;                // point id -> class representative
  std::size_t class_count = 0;
  // Incidences (disc, point id, +1 if the disc's positive side faces the edge class head).
  struct Incidence {
    std::size_t disc;
    std::size_t point;
    int toward_head;
  };
  std::vector<Incidence> incidences;
};

Cells build_cells(const NormalSurface& s) {
  require_ambient(s);
  if (auto problem = matching_problem(s)) throw MatchingViolation(*problem);
  const Triangulation& t = s.ambient->triangulation;
  const Skeleton& sk = s.ambient->skeleton;
  Cells c;
  c.point_base.resize(t.size());
  for (std::size_t tet = 0; tet < t.size(); ++tet) {
    for (int e = 0; e < 6; ++e) {
      c.point_base[tet][e] = c.point_count;
      c.point_count += static_cast<std::size_t>(edge_weight(s.tets[tet], kEdgeVertices[e][0], kEdgeVertices[e][1]));
    }
  }
  detail::ParityUnionFind points(c.point_count);
  for (std::size_t tet = 0; tet < t.size(); ++tet) {
    for (int f = 0; f < 4; ++f) {
      const FaceGluing& g = *t.gluing(tet, f);
      for (int e = 0; e < 6; ++e) {
        const int a = kEdgeVertices[e][0], b = kEdgeVertices[e][1];
        if (a == f || b == f) continue;
        const int a2 = g.perm[a], b2 = g.perm[b];
        const int e2 = edge_index(a2, b2);
        const std::int64_t w = edge_weight(s.tets[tet], a, b);
        for (std::int64_t d = 0; d < w; ++d) {
          const std::int64_t d2 = a2 < b2 ? d : w - 1 - d;
          points.unite(c.point_base[tet][e] + static_cast<std::size_t>(d),
                       c.point_base[g.tet][e2] + static_cast<std::size_t>(d2), 0);
        }
      }
    }
  }
  c.point_class.resize(c.point_count);
  std::map<std::size_t, std::size_t> class_id;
  for (std::size_t p = 0; p < c.point_count; ++p) {
    const auto [it, fresh] = class_id.try_emplace(points.root(p), class_id.size());
    (void)fresh;
    c.point_class[p] = it->second;
  }
  c.class_count = class_id.size();

  for (std::size_t tet = 0; tet < t.size(); ++tet) {
    const TetDiscs& d = s.tets[tet];
    auto add_point = [&](std::size_t disc, int a, int b, std::int64_t depth, int positive_end) {
      const int e = edge_index(a, b);
      const int toward_high = positive_end == std::max(a, b) ? 1 : -1;
      c.incidences.push_back({disc, c.point_class[c.point_base[tet][e] + static_cast<std::size_t>(depth)],
                              toward_high * sk.edge_sign[tet][e]});
    };
    for (int v = 0; v < 4; ++v) {
      for (std::int64_t j = 0; j < d.tri[v]; ++j) {
        const std::size_t id = c.discs.size();
        c.discs.push_back({tet, false, v, j, d.tri_sign[v]});
        for (int x = 0; x < 4; ++x) {
          if (x == v) continue;
          const std::int64_t w = edge_weight(d, v, x);
          add_point(id, std::min(v, x), std::max(v, x), v < x ? j : w - 1 - j, v);
        }
      }
    }
    for (int q = 0; q < 3; ++q) {
      for (std::int64_t j = 0; j < d.quad[q]; ++j) {
        const std::size_t id = c.discs.size();
        c.discs.push_back({tet, true, q, j, d.quad_sign[q]});
        for (int e = 0; e < 6; ++e) {
          const int a = kEdgeVertices[e][0], b = kEdgeVertices[e][1];
          if (quad_type(a, b) == q) continue;
          const std::int64_t depth = d.tri[a] + (in_pair_with_zero(q, a) ? j : d.quad[q] - 1 - j);
          add_point(id, a, b, depth, in_pair_with_zero(q, a) ? a : b);
        }
      }
    }
  }
  return c;
}

}  // namespace

std::optional<std::string> matching_problem(const NormalSurface& s) {
  require_ambient(s);
  const Triangulation& t = s.ambient->triangulation;
  for (std::size_t tet = 0; tet < t.size(); ++tet) {
    const TetDiscs& d = s.tets[tet];
    for (int k = 0; k < 4; ++k)
      if (d.tri[k] < 0) return "tetrahedron " + std::to_string(tet) + ": negative coordinate";
    int quads = 0;
    for (int q = 0; q < 3; ++q) {
      if (d.quad[q] < 0) return "tetrahedron " + std::to_string(tet) + ": negative coordinate";
      quads += d.quad[q] > 0;
    }
    if (quads > 1) return "tetrahedron " + std::to_string(tet) + ": more than one quad type";
  }
  for (std::size_t tet = 0; tet < t.size(); ++tet) {
    for (int f = 0; f < 4; ++f) {
      const FaceGluing& g = *t.gluing(tet, f);
      for (int v : face_vertices(f)) {
        const std::int64_t here = s.tets[tet].tri[v] + s.tets[tet].quad[quad_type(v, f)];
        const int v2 = g.perm[v], f2 = g.perm[f];
        const std::int64_t there = s.tets[g.tet].tri[v2] + s.tets[g.tet].quad[quad_type(v2, f2)];
        if (here != there)
          return "face " + std::to_string(f) + " of tetrahedron " + std::to_string(tet) + ": corner " +
                 std::to_string(v) + " carries " + std::to_string(here) + " arcs but the glued corner carries " +
                 std::to_string(there);
      }
    }
  }
  return std::nullopt;
}

NormalSurface dual_surface(std::shared_ptr<const Ambient> ambient, const Cocycle& c) {
  if (!ambient) throw std::invalid_argument("dual_surface: no ambient triangulation");
  const Skeleton& sk = ambient->skeleton;
  if (c.values.size() != sk.edges.size()) throw DomainMismatch("dual_surface: cochain size mismatch");
  for (std::size_t e = 0; e < c.values.size(); ++e)
    if (c.values[e] < -1 || c.values[e] > 1)
      throw ValueOutOfRange("dual_surface: edge class " + std::to_string(e) + " has value " +
                            std::to_string(c.values[e]));
  if (auto f = violated_face(sk, c)) throw NotACocycle("dual_surface: face class " + std::to_string(*f) + " sums to nonzero");

  NormalSurface s;
  s.ambient = ambient;
  s.tets.resize(ambient->triangulation.size());
  for (std::size_t tet = 0; tet < s.tets.size(); ++tet) {
    std::array<std::int64_t, 4> h{};
    for (int v = 1; v < 4; ++v) {
      const int e = edge_index(0, v);
      h[v] = c.values[sk.edge_of[tet][e]] * sk.edge_sign[tet][e];
    }
    for (int e = 0; e < 6; ++e) {
      const int a = kEdgeVertices[e][0], b = kEdgeVertices[e][1];
      if (h[b] - h[a] != c.values[sk.edge_of[tet][e]] * sk.edge_sign[tet][e])
        throw std::logic_error("dual_surface: heights inconsistent in tetrahedron " + std::to_string(tet));
    }
    const std::int64_t hi = *std::max_element(h.begin(), h.end());
    std::vector<int> high;
    for (int v = 0; v < 4; ++v)
      if (h[v] == hi) high.push_back(v);
    TetDiscs& d = s.tets[tet];
    if (high.size() == 4) continue;
    if (high.size() == 1) {
      d.tri[high[0]] = 1;
      d.tri_sign[high[0]] = 1;
    } else if (high.size() == 3) {
      const int low = 6 - high[0] - high[1] - high[2];
      d.tri[low] = 1;
      d.tri_sign[low] = -1;
    } else {
      const int q = quad_type(high[0], high[1]);
      d.quad[q] = 1;
      d.quad_sign[q] = in_pair_with_zero(q, high[0]) ? 1 : -1;
    }
  }
  if (auto problem = matching_problem(s)) throw std::logic_error("dual_surface: " + *problem);
  return s;
}

NormalSurface dual_surface(const Triangulation& t, const Cocycle& c) { return dual_surface(make_ambient(t), c); }

namespace {

struct Components {
  std::vector<std::size_t> of_disc;  // component index per disc
  std::size_t count = 0;
  std::vector<bool> two_sided;
};

Components components_of(const Cells& c) {
  detail::ParityUnionFind discs(c.discs.size());
  // first incidence seen at each point class
  std::vector<std::optional<Cells::Incidence>> first(c.class_count);
  std::vector<std::size_t> conflicts;
  for (const auto& inc : c.incidences) {
    auto& f = first[inc.point];
    if (!f) {
      f = inc;
      continue;
    }
    if (!discs.unite(f->disc, inc.disc, f->toward_head != inc.toward_head ? 1 : 0)) conflicts.push_back(inc.disc);
  }
  Components out;
  out.of_disc.resize(c.discs.size());
  std::map<std::size_t, std::size_t> index;
  for (std::size_t d = 0; d < c.discs.size(); ++d) {
    const auto [it, fresh] = index.try_emplace(discs.root(d), index.size());
    (void)fresh;
    out.of_disc[d] = it->second;
  }
  out.count = index.size();
  out.two_sided.assign(out.count, true);
  for (std::size_t d : conflicts) out.two_sided[out.of_disc[d]] = false;
  return out;
}

}  // namespace

SurfaceProfile profile(const NormalSurface& s) {
  const Cells c = build_cells(s);
  const Components comps = components_of(c);
  // Discs are created in tetrahedron order, so first appearance orders components by tetrahedron.
  SurfaceProfile p;
  p.components.resize(comps.count);
  std::vector<std::int64_t> arc_ends(comps.count, 0);
  std::vector<std::vector<char>> has_point(comps.count);
  for (std::size_t d = 0; d < c.discs.size(); ++d) {
    ComponentProfile& cp = p.components[comps.of_disc[d]];
    cp.faces += 1;
    arc_ends[comps.of_disc[d]] += c.discs[d].quad ? 4 : 3;
    if (cp.tets.empty() || cp.tets.back() != c.discs[d].tet) cp.tets.push_back(c.discs[d].tet);
  }
  std::vector<std::size_t> point_component(c.class_count, 0);
  for (const auto& inc : c.incidences) point_component[inc.point] = comps.of_disc[inc.disc];
  for (std::size_t pt = 0; pt < c.class_count; ++pt) p.components[point_component[pt]].vertices += 1;
  for (std::size_t k = 0; k < comps.count; ++k) {
    ComponentProfile& cp = p.components[k];
    if (arc_ends[k] % 2 != 0) throw std::logic_error("profile: unpaired normal arc");
    cp.edges = arc_ends[k] / 2;
    cp.euler = cp.vertices - cp.edges + cp.faces;
    cp.orientable = comps.two_sided[k];
    cp.genus = cp.orientable ? (2 - cp.euler) / 2 : 2 - cp.euler;
    std::sort(cp.tets.begin(), cp.tets.end());
    cp.tets.erase(std::unique(cp.tets.begin(), cp.tets.end()), cp.tets.end());
    p.vertices += cp.vertices;
    p.edges += cp.edges;
    p.faces += cp.faces;
  }
  p.euler = p.vertices - p.edges + p.faces;
  return p;
}

bool consistently_oriented(const NormalSurface& s) {
  const Cells c = build_cells(s);
  std::vector<int> seen(c.class_count, 0);
  for (const auto& inc : c.incidences) {
    const int sign = c.discs[inc.disc].sign;
    if (sign == 0) return false;
    const int dir = sign * inc.toward_head;
    if (seen[inc.point] == 0) seen[inc.point] = dir;
    if (seen[inc.point] != dir) return false;
  }
  return true;
}

Cocycle rebuild_cocycle(const NormalSurface& s) {
  require_ambient(s);
  const Skeleton& sk = s.ambient->skeleton;
  for (std::size_t tet = 0; tet < s.tets.size(); ++tet) {
    const TetDiscs& d = s.tets[tet];
    for (int v = 0; v < 4; ++v)
      if (d.tri[v] > 0 && d.tri_sign[v] == 0)
        throw OrientationMissing("rebuild_cocycle: triangle " + std::to_string(v) + " of tetrahedron " +
                                 std::to_string(tet) + " has no transverse orientation");
    for (int q = 0; q < 3; ++q)
      if (d.quad[q] > 0 && d.quad_sign[q] == 0)
        throw OrientationMissing("rebuild_cocycle: quad " + std::to_string(q) + " of tetrahedron " +
                                 std::to_string(tet) + " has no transverse orientation");
  }
  Cocycle c;
  c.values.assign(sk.edges.size(), 0);
  for (std::size_t e = 0; e < sk.edges.size(); ++e) {
    const std::size_t tet = sk.edges[e].rep_tet;
    const int le = sk.edges[e].rep_edge;
    const int a = kEdgeVertices[le][0], b = kEdgeVertices[le][1];
    const TetDiscs& d = s.tets[tet];
    // crossings counted toward b, the local high end
    std::int64_t toward_b = d.tri[b] * d.tri_sign[b] - d.tri[a] * d.tri_sign[a];
    for (int q = 0; q < 3; ++q) {
      if (q == quad_type(a, b) || d.quad[q] == 0) continue;
      toward_b += d.quad[q] * d.quad_sign[q] * (in_pair_with_zero(q, b) ? 1 : -1);
    }
    c.values[e] = toward_b * sk.edge_sign[tet][le];
  }
  return c;
}

SphereRemoval remove_spheres(const NormalSurface& s) {
  const SurfaceProfile p = profile(s);
  const Cells c = build_cells(s);
  const Components comps = components_of(c);
  SphereRemoval out;
  out.surface = s;
  NormalSurface removed;
  removed.ambient = s.ambient;
  removed.tets.assign(s.tets.size(), TetDiscs{});
  for (std::size_t k = 0; k < p.components.size(); ++k)
    if (p.components[k].euler == 2) ++out.removed;
  if (out.removed == 0) return out;
  for (std::size_t d = 0; d < c.discs.size(); ++d) {
    if (p.components[comps.of_disc[d]].euler != 2) continue;
    const Disc& disc = c.discs[d];
    TetDiscs& keep = out.surface.tets[disc.tet];
    TetDiscs& gone = removed.tets[disc.tet];
    if (disc.quad) {
      keep.quad[disc.type] -= 1;
      gone.quad[disc.type] += 1;
      gone.quad_sign[disc.type] = keep.quad_sign[disc.type];
      if (keep.quad[disc.type] == 0) keep.quad_sign[disc.type] = 0;
    } else {
      keep.tri[disc.type] -= 1;
      gone.tri[disc.type] += 1;
      gone.tri_sign[disc.type] = keep.tri_sign[disc.type];
      if (keep.tri[disc.type] == 0) keep.tri_sign[disc.type] = 0;
    }
  }
  if (auto problem = matching_problem(out.surface)) throw std::logic_error("remove_spheres: " + *problem);
  if (consistently_oriented(removed)) {
    const Cocycle dual = rebuild_cocycle(removed);
    if (is_cocycle(s.ambient->skeleton, dual) && !is_coboundary(s.ambient->skeleton, dual).coboundary)
      out.warnings.push_back("removed 2-sphere components are dual to a cocycle that is not a coboundary; "
                             "the remaining surface no longer carries that class");
  }
  return out;
}

NormalSurface merge(const NormalSurface& a, const NormalSurface& b) {
  require_ambient(a);
  require_ambient(b);
  if (a.ambient != b.ambient && !(a.ambient->triangulation == b.ambient->triangulation))
    throw std::invalid_argument("merge: surfaces live in different triangulations");
  NormalSurface out = a;
  for (std::size_t tet = 0; tet < a.tets.size(); ++tet) {
    if (b.tets[tet].disc_count() == 0) continue;
    if (a.tets[tet].disc_count() != 0)
      throw std::invalid_argument("merge: both surfaces meet tetrahedron " + std::to_string(tet));
    out.tets[tet] = b.tets[tet];
  }
  return out;
}

NormalSurface deck_translate(const CoverTriangulation& cover, std::size_t g, const NormalSurface& s) {
  require_ambient(s);
  if (!(s.ambient->triangulation == cover.lifted))
    throw std::invalid_argument("deck_translate: surface does not live in the cover");
  if (!cover.quotient.group.contains(g)) throw UnknownElement("deck_translate: element not in the group");
  NormalSurface out;
  out.ambient = s.ambient;
  out.tets.resize(s.tets.size());
  for (std::size_t lt = 0; lt < s.tets.size(); ++lt)
    out.tets[cover.lift_index(cover.base_tet(lt), cover.quotient.group.mul(g, cover.element(lt)))] = s.tets[lt];
  return out;
}

bool separates(const NormalSurface& s) {
  require_ambient(s);
  if (auto problem = matching_problem(s)) throw MatchingViolation(*problem);
  const Triangulation& t = s.ambient->triangulation;
  detail::ParityUnionFind corners(4 * t.size());
  for (std::size_t tet = 0; tet < t.size(); ++tet) {
    const TetDiscs& d = s.tets[tet];
    if (d.disc_count() > 1) throw std::invalid_argument("separates: more than one disc in a tetrahedron");
    for (int e = 0; e < 6; ++e) {
      const int a = kEdgeVertices[e][0], b = kEdgeVertices[e][1];
      if (edge_weight(d, a, b) == 0) corners.unite(4 * tet + a, 4 * tet + b, 0);
    }
    for (int f = 0; f < 4; ++f) {
      const FaceGluing& g = *t.gluing(tet, f);
      for (int v : face_vertices(f)) corners.unite(4 * tet + v, 4 * g.tet + g.perm[v], 0);
    }
  }
  const std::size_t r = corners.root(0);
  for (std::size_t k = 1; k < 4 * t.size(); ++k)
    if (corners.root(k) != r) return true;
  return false;
}

bool CountingReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.holds; });
}

CountingReport verify_counting_bounds(const NormalSurface& s, std::int64_t cut_boundary, std::size_t k3) {
  const SurfaceProfile p = profile(s);
  CountingReport r;
  r.degenerate = p.faces == 0;
  const auto k = static_cast<std::int64_t>(k3);
  r.checks.push_back({"vertices_le_boundary", p.vertices, cut_boundary, p.vertices <= cut_boundary, r.degenerate});
  r.checks.push_back({"edges_le_vertices_k3_half", 2 * p.edges, p.vertices * k, 2 * p.edges <= p.vertices * k,
                      r.degenerate});
  const std::int64_t chi = p.euler < 0 ? -p.euler : p.euler;
  const bool vacuous = p.edges == 0;
  r.checks.push_back({"abs_euler_lt_edges", chi, p.edges, vacuous || chi < p.edges, vacuous});
  return r;
}

void write_surface(std::ostream& out, const NormalSurface& s) {
  for (std::size_t tet = 0; tet < s.tets.size(); ++tet) {
    const TetDiscs& d = s.tets[tet];
    out << "tet " << tet << " tri " << d.tri[0] << ' ' << d.tri[1] << ' ' << d.tri[2] << ' ' << d.tri[3] << " quad "
        << d.quad[0] << ' ' << d.quad[1] << ' ' << d.quad[2] << " orient " << d.tri_sign[0] << ' ' << d.tri_sign[1]
        << ' ' << d.tri_sign[2] << ' ' << d.tri_sign[3] << ' ' << d.quad_sign[0] << ' ' << d.quad_sign[1] << ' '
        << d.quad_sign[2] << '\n';
  }
}

NormalSurface parse_surface(std::istream& in, std::shared_ptr<const Ambient> ambient) {
  if (!ambient) throw std::invalid_argument("parse_surface: no ambient triangulation");
  NormalSurface s;
  s.ambient = ambient;
  s.tets.resize(ambient->triangulation.size());
  std::vector<char> seen(s.tets.size(), 0);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto tok = detail::tokenize(raw);
    if (tok.empty()) continue;
    if (tok.size() != 19 || tok[0] != "tet" || tok[2] != "tri" || tok[7] != "quad" || tok[11] != "orient")
      throw FormatError(lineno, "expected 'tet <i> tri <a b c d> quad <p q r> orient <7 signs>'");
    const long long i = detail::parse_integer(tok[1], lineno);
    if (i < 0 || static_cast<std::size_t>(i) >= s.tets.size()) throw FormatError(lineno, "tetrahedron out of range");
    if (seen[i]) throw FormatError(lineno, "tetrahedron listed twice");
    seen[i] = 1;
    TetDiscs& d = s.tets[i];
    for (int k = 0; k < 4; ++k) d.tri[k] = detail::parse_integer(tok[3 + k], lineno);
    for (int k = 0; k < 3; ++k) d.quad[k] = detail::parse_integer(tok[8 + k], lineno);
    for (int k = 0; k < 7; ++k) {
      const long long v = detail::parse_integer(tok[12 + k], lineno);
      if (v < -1 || v > 1) throw FormatError(lineno, "orientation signs must be -1, 0 or 1");
      (k < 4 ? d.tri_sign[k] : d.quad_sign[k - 4]) = static_cast<int>(v);
    }
    for (int k = 0; k < 4; ++k)
      if (d.tri[k] < 0) throw FormatError(lineno, "negative coordinate");
    for (int k = 0; k < 3; ++k)
      if (d.quad[k] < 0) throw FormatError(lineno, "negative coordinate");
  }
  return s;
}

}  // namespace tricover
