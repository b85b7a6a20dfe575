#include "tricover/homology.hpp"

#include <stdexcept>

namespace tricover {

AbelianGroup abelian_group_from_relations(const IntMatrix& relations) {
  const SmithForm f = smith_normal_form(relations);
  AbelianGroup g;
  g.rank = relations.cols() - f.rank();
  for (auto d : f.divisors)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

IntMatrix boundary_matrix(const Skeleton& s, int k) {
  switch (k) {
    case 1: {
      IntMatrix m(s.vertices.size(), s.edges.size());
      for (std::size_t e = 0; e < s.edges.size(); ++e) {
        m(s.edges[e].head, e) += 1;
        m(s.edges[e].tail, e) -= 1;
      }
      return m;
    }
    case 2: {
      IntMatrix m(s.edges.size(), s.faces.size());
      for (std::size_t f = 0; f < s.faces.size(); ++f)
        for (int j = 0; j < 3; ++j) m(s.faces[f].edges[j], f) += s.faces[f].signs[j];
      return m;
    }
    case 3: {
      IntMatrix m(s.faces.size(), s.tet_count);
      for (std::size_t t = 0; t < s.tet_count; ++t)
        for (int i = 0; i < 4; ++i) m(s.face_of[t][i], t) += (i % 2 == 0 ? 1 : -1) * s.face_sign[t][i];
      return m;
    }
    default:
      throw std::invalid_argument("boundary_matrix: k must be 1, 2 or 3");
  }
}

HomologyProfile homology(const Skeleton& s) {
  const std::array<std::size_t, 4> dims{s.vertices.size(), s.edges.size(), s.faces.size(), s.tet_count};
  std::array<SmithForm, 4> forms;  // forms[k] diagonalises d_k, k = 1..3
  for (int k = 1; k <= 3; ++k) forms[k] = smith_normal_form(boundary_matrix(s, k));
  HomologyProfile h;
  for (int k = 0; k <= 3; ++k) {
    const std::size_t rank_out = k >= 1 ? forms[k].rank() : 0;
    const std::size_t rank_in = k <= 2 ? forms[k + 1].rank() : 0;
    h.betti[k] = dims[k] - rank_out - rank_in;
    if (k <= 2)
      for (auto d : forms[k + 1].divisors)
        if (d > 1) h.torsion[k].push_back(d);
  }
  return h;
}

HomologyProfile homology(const Triangulation& t) {
  const ValidationReport r = validate(t);
  if (!r.passed("connected")) throw InvalidTriangulation("homology: triangulation is not connected");
  return homology(build_skeleton(t));
}

}  // namespace tricover
