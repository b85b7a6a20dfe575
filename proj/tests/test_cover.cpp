#include <doctest.h>

#include <set>
#include <sstream>

#include "tricover/census.hpp"
#include "tricover/cover.hpp"
#include "tricover/homology.hpp"

using namespace tricover;

namespace {

Presentation present(const Triangulation& t) { return presentation_from(t, build_skeleton(t)); }

FiniteQuotient q8_quotient(const Triangulation& t) {
  const Presentation p = present(t);
  std::vector<std::size_t> x(p.generator_count, 0);
  while (true) {
    FiniteQuotient q{FiniteGroup::quaternion(), x};
    if (validate_quotient(p, q).ok()) return q;
    std::size_t i = 0;
    while (i < x.size() && ++x[i] == 8) x[i++] = 0;
    if (i == x.size()) throw std::runtime_error("no Q8 quotient");
  }
}

void check_cover_structure(const CoverTriangulation& c) {
  const std::size_t n = c.degree();
  CHECK(c.lifted.size() == n * c.base.size());
  CHECK(validate(c.lifted).ok());
  CHECK(c.lifted_skeleton.euler_characteristic() == 0);
  // Projection sends lifted gluings to base gluings with the same vertex maps.
  for (std::size_t lt = 0; lt < c.lifted.size(); ++lt)
    for (int f = 0; f < 4; ++f) {
      const FaceGluing& up = *c.lifted.gluing(lt, f);
      const FaceGluing& down = *c.base.gluing(c.base_tet(lt), f);
      CHECK(c.base_tet(up.tet) == down.tet);
      CHECK(up.perm == down.perm);
    }
  // Lifted vertices are in bijection with the group.
  CHECK(c.lifted_skeleton.vertices.size() == n);
  std::set<std::size_t> elements(c.vertex_element.begin(), c.vertex_element.end());
  CHECK(elements.size() == n);
  for (std::size_t g = 0; g < n; ++g) CHECK(c.vertex_element[c.element_vertex[g]] == g);
  // A lifted edge runs from its start element to start * image(generator), with or against the
  // orientation of its class.
  std::set<std::pair<std::size_t, std::size_t>> lifts;
  for (std::size_t e = 0; e < c.lifted_skeleton.edges.size(); ++e) {
    const EdgeClass& ec = c.lifted_skeleton.edges[e];
    const std::size_t start = c.edge_start[e];
    const std::size_t end = c.quotient.group.mul(start, c.quotient.images[c.edge_generator[e]]);
    const bool forward = c.edge_direction[e] > 0;
    CHECK(c.vertex_element[forward ? ec.tail : ec.head] == start);
    CHECK(c.vertex_element[forward ? ec.head : ec.tail] == end);
    lifts.insert({c.edge_generator[e], start});
  }
  CHECK(lifts.size() == n * c.base_edges);
}

void check_deck_action(const CoverTriangulation& c) {
  const FiniteGroup& G = c.quotient.group;
  for (std::size_t t = 0; t < c.base.size(); ++t)
    for (std::size_t h = 0; h < c.degree(); ++h) {
      std::set<std::size_t> orbit;
      const Cell cell{CellKind::Tetrahedron, c.lift_index(t, h)};
      for (std::size_t g = 0; g < c.degree(); ++g) {
        const Cell moved = deck_translate(c, g, cell);
        CHECK(c.base_tet(moved.index) == t);
        CHECK(c.element(moved.index) == G.mul(g, h));
        orbit.insert(moved.index);
      }
      CHECK(orbit.size() == c.degree());  // free and transitive on the fiber
    }
  // Deck transformations commute with gluings.
  for (std::size_t g = 0; g < c.degree(); ++g)
    for (std::size_t lt = 0; lt < c.lifted.size(); ++lt)
      for (int f = 0; f < 4; ++f) {
        const std::size_t moved = deck_translate(c, g, {CellKind::Tetrahedron, lt}).index;
        const std::size_t across = c.lifted.gluing(lt, f)->tet;
        CHECK(c.lifted.gluing(moved, f)->tet == deck_translate(c, g, {CellKind::Tetrahedron, across}).index);
      }
  for (CellKind kind : {CellKind::Face, CellKind::Edge, CellKind::Vertex}) {
    const Skeleton& s = c.lifted_skeleton;
    const std::size_t count = kind == CellKind::Face ? s.faces.size() : kind == CellKind::Edge ? s.edges.size() : s.vertices.size();
    for (std::size_t i = 0; i < count; ++i) {
      const Cell cell{kind, i};
      CHECK(deck_translate(c, 0, cell) == cell);
      for (std::size_t g = 0; g < c.degree(); ++g)
        CHECK(deck_translate(c, G.inverse(g), deck_translate(c, g, cell)) == cell);
    }
  }
}

}  // namespace

TEST_SUITE("cover") {

TEST_CASE("Z/2 cover of the three-torus") {
  const Triangulation t = census::t3();
  for (const auto& q : cyclic_quotients(present(t), 2)) {
    const CoverTriangulation c = build_cover(t, q);
    CHECK(c.lifted.size() == 12);
    CHECK(homology(c.lifted).b(1) == 3);
    check_cover_structure(c);
    check_deck_action(c);
    // The non-trivial element swaps the two lifts of every tetrahedron.
    for (std::size_t b = 0; b < t.size(); ++b) {
      CHECK(deck_translate(c, 1, {CellKind::Tetrahedron, c.lift_index(b, 0)}).index == c.lift_index(b, 1));
      CHECK(deck_translate(c, 1, {CellKind::Tetrahedron, c.lift_index(b, 1)}).index == c.lift_index(b, 0));
    }
  }
}

TEST_CASE("trivial group gives the base back") {
  for (const auto& e : census::all()) {
    const Triangulation t = e.make();
    const FiniteQuotient q{FiniteGroup::cyclic(1), std::vector<std::size_t>(build_skeleton(t).edges.size(), 0)};
    const CoverTriangulation c = build_cover(t, q);
    CHECK(c.lifted == t);
  }
}

TEST_CASE("cyclic covers of S2xS1 are S2xS1") {
  const Triangulation t = census::s2xs1();
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto qs = cyclic_quotients(present(t), n);
    REQUIRE(qs.size() == 1);
    const CoverTriangulation c = build_cover(t, qs.front());
    CHECK(c.lifted.size() == 2 * n);
    const HomologyProfile h = homology(c.lifted);
    CHECK(h.b(1) == 1);
    CHECK(h.torsion[1].empty());
    check_cover_structure(c);
  }
}

TEST_CASE("covers of the three-torus keep b1 = 3") {
  const Triangulation t = census::t3();
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto qs = cyclic_quotients(present(t), n);
    const CoverTriangulation c = build_cover(t, qs.back());
    CHECK(homology(c.lifted).b(1) == 3);
    check_cover_structure(c);
    check_deck_action(c);
  }
}

TEST_CASE("Q8 cover of the quaternionic manifold is a homology sphere") {
  const Triangulation t = census::quaternionic();
  const CoverTriangulation c = build_cover(t, q8_quotient(t));
  CHECK(c.lifted.size() == 16);
  check_cover_structure(c);
  check_deck_action(c);
  const HomologyProfile h = homology(c.lifted);
  CHECK(h.b(1) == 0);
  CHECK(h.torsion[1].empty());
}

TEST_CASE("cover preconditions") {
  const Triangulation t = census::t3();
  FiniteQuotient bad{FiniteGroup::cyclic(2), std::vector<std::size_t>(7, 0)};
  CHECK_THROWS_AS(build_cover(t, bad), CoverError);
  Triangulation broken = t;
  broken.clear_gluing(0, 1);
  CHECK_THROWS_AS(build_cover(broken, cyclic_quotients(present(t), 2).front()), CoverError);
  const CoverTriangulation c = build_cover(t, cyclic_quotients(present(t), 2).front());
  CHECK_THROWS_AS(deck_translate(c, 5, {CellKind::Tetrahedron, 0}), UnknownElement);
}

TEST_CASE("lift labels") {
  const Triangulation t = census::s2xs1();
  const CoverTriangulation c = build_cover(t, cyclic_quotients(present(t), 3).front());
  std::stringstream ss;
  write_lift_labels(ss, c);
  std::string line;
  std::size_t count = 0;
  while (std::getline(ss, line)) {
    std::istringstream ls(line);
    std::string word, eq;
    std::size_t lt = 0, base = 0, g = 0;
    ls >> word >> lt >> eq >> base >> g;
    CHECK(word == "lift");
    CHECK(lt == count);
    CHECK(base == lt / 3);
    CHECK(g == lt % 3);
    ++count;
  }
  CHECK(count == 6);
}

}  // TEST_SUITE
