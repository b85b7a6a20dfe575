#include "tricover/cover.hpp"

#include <ostream>

namespace tricover {

CoverTriangulation build_cover(const Triangulation& base, const FiniteQuotient& q) {
  const ValidationReport report = validate(base);
  if (!report.ok()) throw CoverError("build_cover: base triangulation fails validation");
  const Skeleton bs = build_skeleton(base);
  if (bs.vertices.size() != 1) throw CoverError("build_cover: base must have exactly one vertex");
  const Presentation p = presentation_from(base, bs);
  const QuotientReport qr = validate_quotient(p, q);
  if (!qr.ok()) throw CoverError("build_cover: quotient is not a surjection from the edge group");

  const FiniteGroup& G = q.group;
  const std::size_t n = q.degree();
  const std::size_t tets = base.size();

  // offset[t][v]: label of corner v of lift (t, e), i.e. the image of the path along edge 0 -> v
  std::vector<std::array<std::size_t, 4>> offset(tets);
  for (std::size_t t = 0; t < tets; ++t) {
    offset[t][0] = 0;
    for (int v = 1; v < 4; ++v) {
      const int e = edge_index(0, v);
      const std::size_t x = q.images[bs.edge_of[t][e]];
      offset[t][v] = bs.edge_sign[t][e] > 0 ? x : G.inverse(x);
    }
  }

  CoverTriangulation c;
  c.base = base;
  c.quotient = q;
  c.base_edges = bs.edges.size();
  c.lifted = Triangulation(tets * n);
  for (std::size_t t = 0; t < tets; ++t) {
    for (int f = 0; f < 4; ++f) {
      const FaceGluing& g = *base.gluing(t, f);
      std::optional<std::size_t> shift;
      for (int a : face_vertices(f)) {
        const std::size_t s = G.mul(offset[t][a], G.inverse(offset[g.tet][g.perm[a]]));
        if (shift && *shift != s) throw std::logic_error("build_cover: inconsistent face transition");
        shift = s;
      }
      for (std::size_t h = 0; h < n; ++h)
        c.lifted.set_gluing(t * n + h, f, FaceGluing{g.tet * n + G.mul(h, *shift), g.perm});
    }
  }

  c.lifted_skeleton = build_skeleton(c.lifted);
  const Skeleton& ls = c.lifted_skeleton;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  c.vertex_element.assign(ls.vertices.size(), kNone);
  c.element_vertex.assign(n, kNone);
  for (std::size_t lt = 0; lt < tets * n; ++lt) {
    for (int v = 0; v < 4; ++v) {
      const std::size_t el = G.mul(lt % n, offset[lt / n][v]);
      std::size_t& slot = c.vertex_element[ls.vertex_of[lt][v]];
      if (slot == kNone) slot = el;
      if (slot != el) throw std::logic_error("build_cover: vertex class carries two labels");
    }
  }
  for (std::size_t vc = 0; vc < ls.vertices.size(); ++vc) {
    const std::size_t el = c.vertex_element[vc];
    if (c.element_vertex[el] != kNone) throw std::logic_error("build_cover: two vertex classes share a label");
    c.element_vertex[el] = vc;
  }
  if (ls.vertices.size() != n) throw std::logic_error("build_cover: vertex classes do not match group elements");

  c.edge_generator.resize(ls.edges.size());
  c.edge_start.resize(ls.edges.size());
  c.edge_direction.resize(ls.edges.size());
  for (std::size_t le = 0; le < ls.edges.size(); ++le) {
    const EdgeClass& ec = ls.edges[le];
    const std::size_t t = ec.rep_tet / n;
    const std::size_t x = bs.edge_of[t][ec.rep_edge];
    const std::size_t tail = c.vertex_element[ec.tail], head = c.vertex_element[ec.head];
    const bool forward = bs.edge_sign[t][ec.rep_edge] > 0;
    const std::size_t start = forward ? tail : head;
    const std::size_t end = forward ? head : tail;
    if (G.mul(start, q.images[x]) != end) throw std::logic_error("build_cover: lifted edge does not follow its generator");
    c.edge_generator[le] = x;
    c.edge_start[le] = start;
    c.edge_direction[le] = forward ? 1 : -1;
  }
  return c;
}

Cell deck_translate(const CoverTriangulation& c, std::size_t g, Cell cell) {
  const FiniteGroup& G = c.quotient.group;
  if (!G.contains(g)) throw UnknownElement("deck_translate: element " + std::to_string(g) + " is not in the group");
  const Skeleton& ls = c.lifted_skeleton;
  auto move_tet = [&](std::size_t lt) { return c.lift_index(c.base_tet(lt), G.mul(g, c.element(lt))); };
  switch (cell.kind) {
    case CellKind::Tetrahedron:
      if (cell.index >= c.lifted.size()) throw std::out_of_range("deck_translate: no such tetrahedron");
      return {cell.kind, move_tet(cell.index)};
    case CellKind::Face: {
      const TetFace rep = ls.faces.at(cell.index).rep;
      return {cell.kind, ls.face_of[move_tet(rep.tet)][rep.face]};
    }
    case CellKind::Edge: {
      const EdgeClass& e = ls.edges.at(cell.index);
      return {cell.kind, ls.edge_of[move_tet(e.rep_tet)][e.rep_edge]};
    }
    case CellKind::Vertex:
      return {cell.kind, c.element_vertex[G.mul(g, c.vertex_element.at(cell.index))]};
  }
  return cell;
}

void write_lift_labels(std::ostream& out, const CoverTriangulation& c) {
  for (std::size_t lt = 0; lt < c.lifted.size(); ++lt)
    out << "lift " << lt << " = " << c.base_tet(lt) << ' ' << c.element(lt) << '\n';
}

}  // namespace tricover
