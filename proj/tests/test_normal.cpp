#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "support.hpp"
#include "tricover/census.hpp"
#include "tricover/cocycle.hpp"
#include "tricover/cover.hpp"
#include "tricover/normal.hpp"

using namespace tricover;

namespace {

Presentation present(const Triangulation& t) { return presentation_from(t, build_skeleton(t)); }

std::vector<std::size_t> all_edges(const Skeleton& s) {
  std::vector<std::size_t> v(s.edges.size());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

struct Instance {
  CoverTriangulation cover;
  CutCertificate cut;
  Cocycle certificate;
};

std::vector<Instance> certificates(const Triangulation& base, std::size_t n, std::size_t stride = 1) {
  std::vector<Instance> out;
  const auto qs = cyclic_quotients(present(base), n);
  for (std::size_t i = 0; i < qs.size(); i += stride) {
    CoverTriangulation c = build_cover(base, qs[i]);
    const CutCertificate cut = cheeger_exact(cayley_graph(qs[i]));
    const auto r = search_certificate(c, cut, {kDefaultSupportCap, true});
    if (r.certificate) out.push_back({std::move(c), cut, *r.certificate});
  }
  return out;
}

// Corner heights integrated from vertex 0 along the tetrahedron's edges.
std::array<std::int64_t, 4> heights(const Skeleton& s, const Cocycle& c, std::size_t tet) {
  std::array<std::int64_t, 4> h{};
  for (int v = 1; v < 4; ++v) {
    const int e = v - 1;  // local edges 01, 02, 03
    h[v] = s.edge_sign[tet][e] * c.values[s.edge_of[tet][e]];
  }
  return h;
}

// Expected disc of one tetrahedron from its corner heights.
TetDiscs expected_discs(const std::array<std::int64_t, 4>& h) {
  TetDiscs d;
  const std::int64_t lo = *std::min_element(h.begin(), h.end()), hi = *std::max_element(h.begin(), h.end());
  if (lo == hi) return d;
  std::vector<int> high, low;
  for (int v = 0; v < 4; ++v) (h[v] == hi ? high : low).push_back(v);
  if (high.size() == 1 || low.size() == 1) {
    const bool alone_high = high.size() == 1;
    const int v = alone_high ? high[0] : low[0];
    d.tri[v] = 1;
    d.tri_sign[v] = alone_high ? 1 : -1;
  } else {
    const int q = quad_type(high[0], high[1]);
    d.quad[q] = 1;
    d.quad_sign[q] = h[0] == hi ? 1 : -1;
  }
  return d;
}

std::int64_t orientable_sum(const SurfaceProfile& p) {
  std::int64_t sum = 0;
  for (const auto& c : p.components) {
    REQUIRE(c.orientable);
    sum += 2 - 2 * c.genus;
  }
  return sum;
}

}  // namespace

TEST_SUITE("normal") {

TEST_CASE("quad types") {
  CHECK(quad_type(0, 1) == 0);
  CHECK(quad_type(2, 3) == 0);
  CHECK(quad_type(0, 2) == 1);
  CHECK(quad_type(1, 3) == 1);
  CHECK(quad_type(3, 0) == 2);
  CHECK(quad_type(1, 2) == 2);
}

TEST_CASE("zero cocycle gives the empty surface") {
  const Triangulation t = census::t3();
  const Cocycle z{std::vector<std::int64_t>(build_skeleton(t).edges.size(), 0)};
  const NormalSurface s = dual_surface(t, z);
  CHECK(s.empty());
  const SurfaceProfile p = profile(s);
  CHECK(p.component_count() == 0);
  CHECK(p.euler == 0);
  CHECK(rebuild_cocycle(s) == z);
  const SphereRemoval r = remove_spheres(s);
  CHECK(r.surface.empty());
  CHECK(r.removed == 0);
  const CountingReport b = verify_counting_bounds(s, 0, 6);
  CHECK(b.degenerate);
  CHECK(b.ok());
  for (const auto& c : b.checks) CHECK(c.vacuous);
}

TEST_CASE("discs follow the corner heights") {
  std::size_t quads = 0, triangles = 0;
  for (const Triangulation& base : {census::t3(), census::s2xs1()})
    for (std::size_t n = 3; n <= 9; n += 3)
      for (const Instance& in : certificates(base, n, 4)) {
        const Skeleton& s = in.cover.lifted_skeleton;
        const NormalSurface surf = dual_surface(in.cover.lifted, in.certificate);
        for (std::size_t t = 0; t < surf.tets.size(); ++t) {
          const auto h = heights(s, in.certificate, t);
          CHECK(surf.tets[t] == expected_discs(h));
          quads += std::count(surf.tets[t].quad.begin(), surf.tets[t].quad.end(), 1);
          triangles += std::count(surf.tets[t].tri.begin(), surf.tets[t].tri.end(), 1);
        }
        CHECK_FALSE(matching_problem(surf));
      }
  CHECK(quads > 0);
  CHECK(triangles > 0);
}

TEST_CASE("the circle class of an S2xS1 cover is dual to a 2-sphere") {
  const Triangulation base = census::s2xs1();
  const CoverTriangulation c = build_cover(base, cyclic_quotients(present(base), 4).front());
  const auto cert = search_certificate_on_support(c.lifted_skeleton, all_edges(c.lifted_skeleton));
  REQUIRE(cert);
  const NormalSurface s = dual_surface(c.lifted, *cert);
  const SurfaceProfile p = profile(s);
  REQUIRE(p.component_count() == 1);
  CHECK(p.components[0].euler == 2);
  CHECK(p.components[0].orientable);
  CHECK(p.components[0].genus == 0);
  CHECK(consistently_oriented(s));
  CHECK(rebuild_cocycle(s) == *cert);

  const SphereRemoval r = remove_spheres(s);
  CHECK(r.surface.empty());
  CHECK(r.removed == 1);
  CHECK(r.warnings.size() == 1);
}

TEST_CASE("sphere removal keeps the torus of a torus plus sphere") {
  const Triangulation t3 = census::t3();
  const CoverTriangulation tc = build_cover(t3, cyclic_quotients(present(t3), 4).at(4));
  const Triangulation s2 = census::s2xs1();
  const CoverTriangulation sc = build_cover(s2, cyclic_quotients(present(s2), 4).front());
  const auto torus = search_certificate(tc, cheeger_exact(cayley_graph(tc.quotient)), {kDefaultSupportCap, true});
  const auto sphere = search_certificate_on_support(sc.lifted_skeleton, all_edges(sc.lifted_skeleton));
  REQUIRE(torus.certificate);
  REQUIRE(sphere);

  const Triangulation both = disjoint_union(tc.lifted, sc.lifted);
  Cocycle joined = *torus.certificate;
  joined.values.insert(joined.values.end(), sphere->values.begin(), sphere->values.end());
  const auto ambient = make_ambient(both);
  REQUIRE(ambient->skeleton.edges.size() == joined.values.size());
  const NormalSurface s = dual_surface(ambient, joined);
  const SurfaceProfile p = profile(s);
  REQUIRE(p.component_count() == 2);
  CHECK(p.components[0].genus == 1);
  CHECK(p.components[1].euler == 2);

  const SphereRemoval r = remove_spheres(s);
  CHECK(r.removed == 1);
  const SurfaceProfile kept = profile(r.surface);
  REQUIRE(kept.component_count() == 1);
  CHECK(kept.components[0] == p.components[0]);
  CHECK(kept.component_count() == p.component_count() - r.removed);
}

TEST_CASE("merging disjoint deck translates doubles the components") {
  const Triangulation base = census::t3();
  bool tested = false;
  for (const Instance& in : certificates(base, 4)) {
    const NormalSurface s = dual_surface(make_ambient(in.cover.lifted), in.certificate);
    const SurfaceProfile p = profile(s);
    if (p.component_count() != 1) continue;
    for (std::size_t g = 1; g < 4 && !tested; ++g) {
      const NormalSurface t = deck_translate(in.cover, g, s);
      bool disjoint = true;
      for (std::size_t k = 0; k < s.tets.size(); ++k) disjoint &= !(s.tets[k].disc_count() && t.tets[k].disc_count());
      if (!disjoint) {
        CHECK_THROWS_AS(merge(s, t), std::invalid_argument);
        continue;
      }
      const SurfaceProfile m = profile(merge(s, t));
      REQUIRE(m.component_count() == 2);
      CHECK(m.components[0].euler == m.components[1].euler);
      CHECK(m.components[0].genus == m.components[1].genus);
      CHECK(m.euler == 2 * p.euler);
      tested = true;
    }
    if (tested) break;
  }
  CHECK(tested);
}

TEST_CASE("deck translates are dual to cohomologous cocycles") {
  for (const Instance& in : certificates(census::t3(), 3, 2)) {
    const NormalSurface s = dual_surface(make_ambient(in.cover.lifted), in.certificate);
    for (std::size_t g = 0; g < in.cover.degree(); ++g) {
      const NormalSurface t = deck_translate(in.cover, g, s);
      CHECK_FALSE(matching_problem(t));
      const Cocycle moved = rebuild_cocycle(t);
      Cocycle diff = moved;
      for (std::size_t e = 0; e < diff.values.size(); ++e) diff.values[e] -= in.certificate.values[e];
      CHECK(is_coboundary(in.cover.lifted_skeleton, diff).coboundary);
      CHECK(profile(t).euler == profile(s).euler);
    }
  }
}

TEST_CASE("coboundaries separate, certificates do not") {
  oracle::Rng rng(8);
  std::vector<CoverTriangulation> covers;
  for (std::size_t n = 2; n <= 5; ++n) {
    covers.push_back(build_cover(census::t3(), cyclic_quotients(present(census::t3()), n).back()));
    covers.push_back(build_cover(census::s2xs1(), cyclic_quotients(present(census::s2xs1()), n).front()));
  }
  int nonempty = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const CoverTriangulation& c = covers[trial % covers.size()];
    std::vector<std::int64_t> pot(c.lifted_skeleton.vertices.size());
    for (auto& p : pot) p = std::uniform_int_distribution<int>(0, 1)(rng);
    const Cocycle d = coboundary_of(c.lifted_skeleton, pot);
    const NormalSurface s = dual_surface(c.lifted, d);
    CHECK_FALSE(matching_problem(s));
    CHECK(rebuild_cocycle(s) == d);
    if (s.empty()) continue;
    ++nonempty;
    CHECK(separates(s));
  }
  CHECK(nonempty > 0);
  // A connected surface dual to a non-trivial class cannot separate; unions of parallel copies can.
  int connected = 0;
  for (const Instance& in : certificates(census::t3(), 4, 2)) {
    const NormalSurface s = dual_surface(in.cover.lifted, in.certificate);
    if (profile(s).component_count() != 1) continue;
    CHECK_FALSE(separates(s));
    ++connected;
  }
  CHECK(connected > 0);
}

TEST_CASE("certificate surfaces satisfy the counting bounds and the Euler identity") {
  int surfaces = 0;
  for (const Triangulation& base : {census::t3(), census::s2xs1()})
    for (std::size_t n = 2; n <= 9; ++n)
      for (const Instance& in : certificates(base, n, 5)) {
        const NormalSurface s = dual_surface(in.cover.lifted, in.certificate);
        CHECK(rebuild_cocycle(s) == in.certificate);
        CHECK(consistently_oriented(s));
        const SurfaceProfile p = profile(s);
        CHECK(p.euler == p.vertices - p.edges + p.faces);
        CHECK(p.euler == orientable_sum(p));
        const std::size_t k3 = max_edge_valence(in.cover.lifted_skeleton);
        const CountingReport r = verify_counting_bounds(s, in.cut.boundary, k3);
        CHECK(r.ok());
        CHECK(p.vertices <= in.cut.boundary);
        CHECK(2 * p.edges <= p.vertices * static_cast<std::int64_t>(k3));
        CHECK(std::abs(p.euler) < p.edges);
        const SphereRemoval sr = remove_spheres(s);
        std::size_t spheres = 0;
        for (const auto& c : p.components) spheres += c.euler == 2;
        CHECK(sr.removed == spheres);
        CHECK(profile(sr.surface).component_count() == p.component_count() - spheres);
        ++surfaces;
      }
  CHECK(surfaces > 10);
}

TEST_CASE("S2xS1 cover at degree nine: spheres bounded by the cut") {
  const Triangulation base = census::s2xs1();
  const auto qs = cyclic_quotients(present(base), 9);
  const CoverTriangulation c = build_cover(base, qs.front());
  const CutCertificate cut = cheeger_exact(cayley_graph(qs.front()));
  const auto r = search_certificate(c, cut, {kDefaultSupportCap, true});
  REQUIRE(r.certificate);
  const NormalSurface s = dual_surface(c.lifted, *r.certificate);
  const SurfaceProfile p = profile(s);
  for (const auto& comp : p.components) CHECK(comp.euler == 2);
  CHECK(p.vertices <= cut.boundary);
  CHECK(remove_spheres(s).surface.empty());
}

TEST_CASE("dual surface preconditions and matching failures") {
  const Triangulation t = census::t3();
  const Skeleton sk = build_skeleton(t);
  const auto cert = *search_certificate_on_support(sk, all_edges(sk));
  Cocycle scaled = cert;
  for (auto& v : scaled.values) v *= 2;
  CHECK_THROWS_AS(dual_surface(t, scaled), ValueOutOfRange);
  Cocycle broken{std::vector<std::int64_t>(sk.edges.size(), 0)};
  const IntMatrix d2 = boundary_matrix(sk, 2);
  for (std::size_t e = 0; e < d2.rows(); ++e)
    if (d2(e, 0) != 0) {
      broken.values[e] = 1;
      break;
    }
  CHECK_THROWS_AS(dual_surface(t, broken), NotACocycle);

  NormalSurface s = dual_surface(t, cert);
  for (auto& d : s.tets)
    if (d.disc_count()) {
      for (int v = 0; v < 4; ++v)
        if (d.tri[v] == 0 && std::all_of(d.quad.begin(), d.quad.end(), [](auto x) { return x == 0; })) {
          d.tri[v] = 1;
          d.tri_sign[v] = 1;
          break;
        }
      break;
    }
  CHECK(matching_problem(s));
  CHECK_THROWS_AS(profile(s), MatchingViolation);
}

TEST_CASE("surface text round trip") {
  const auto ins = certificates(census::t3(), 3, 4);
  REQUIRE_FALSE(ins.empty());
  const auto ambient = make_ambient(ins.front().cover.lifted);
  const NormalSurface s = dual_surface(ambient, ins.front().certificate);
  std::stringstream ss;
  write_surface(ss, s);
  CHECK(parse_surface(ss, ambient) == s);
  std::stringstream bad("tet 0 tri 1 0 0 0 quad 0 0 0 orient 1 0 0\n");
  CHECK_THROWS(parse_surface(bad, ambient));
}

}  // TEST_SUITE
