#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tricover/cocycle.hpp"
#include "tricover/triangulation.hpp"

namespace tricover {

/// Triangulation together with its skeleton, shared by the surfaces that live in it.
struct Ambient {
  Triangulation triangulation;
  Skeleton skeleton;
};

std::shared_ptr<const Ambient> make_ambient(const Triangulation& t);

/// Quad type q separates {0, q + 1} from the other two vertices; this returns the type
/// separating {a, b} from its complement.
int quad_type(int a, int b);

/// Disc coordinates of one tetrahedron. Orientation signs: +1 means the transverse normal
/// points toward the triangle's vertex (toward the side holding vertex 0 for quads), 0 unset.
struct TetDiscs {
  std::array<std::int64_t, 4> tri{};
  std::array<std::int64_t, 3> quad{};
  std::array<int, 4> tri_sign{};
  std::array<int, 3> quad_sign{};

  std::int64_t disc_count() const;
  bool operator==(const TetDiscs&) const = default;
};

struct NormalSurface {
  std::shared_ptr<const Ambient> ambient;
  std::vector<TetDiscs> tets;

  std::int64_t disc_count() const;
  bool empty() const { return disc_count() == 0; }
  bool operator==(const NormalSurface& o) const { return tets == o.tets; }
};

class NotACocycle : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ValueOutOfRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MatchingViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OrientationMissing : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Surface dual to a {-1, 0, 1} cocycle, one disc per tetrahedron where the corner heights
/// take two values. Normals point toward increasing height.
NormalSurface dual_surface(std::shared_ptr<const Ambient> ambient, const Cocycle& c);
NormalSurface dual_surface(const Triangulation& t, const Cocycle& c);

/// Empty optional if every glued face carries matching normal arcs and each tetrahedron has at
/// most one quad type; otherwise the first problem.
std::optional<std::string> matching_problem(const NormalSurface& s);

struct ComponentProfile {
  std::int64_t vertices = 0, edges = 0, faces = 0;
  std::int64_t euler = 0;
  bool orientable = true;
  std::int64_t genus = 0;  // orientable genus, or the number of crosscaps when non-orientable
  std::vector<std::size_t> tets;  // tetrahedra holding discs of this component, sorted

  bool operator==(const ComponentProfile&) const = default;
};

struct SurfaceProfile {
  std::int64_t vertices = 0, edges = 0, faces = 0;
  std::int64_t euler = 0;
  std::vector<ComponentProfile> components;  // ordered by smallest tetrahedron index

  std::size_t component_count() const { return components.size(); }
};

/// Cell structure: vertices are intersection points with edges, edges are normal arcs, faces
/// are discs. Throws MatchingViolation when matching_problem reports one.
SurfaceProfile profile(const NormalSurface& s);

/// Whether the transverse signs agree across every intersection point.
bool consistently_oriented(const NormalSurface& s);

struct SphereRemoval {
  NormalSurface surface;
  std::size_t removed = 0;
  std::vector<std::string> warnings;
};

/// Drops the components with Euler characteristic 2. Warns when the dropped part is dual to a
/// cocycle that is not a coboundary.
SphereRemoval remove_spheres(const NormalSurface& s);

/// Signed intersection count with each edge class, read along the class orientation.
Cocycle rebuild_cocycle(const NormalSurface& s);

/// Union of two surfaces in disjoint sets of tetrahedra of the same ambient triangulation.
NormalSurface merge(const NormalSurface& a, const NormalSurface& b);

/// Image under a deck transformation of the cover the surface lives in.
NormalSurface deck_translate(const CoverTriangulation& cover, std::size_t g, const NormalSurface& s);

/// Whether the complement has at least two regions. Requires at most one disc per tetrahedron.
bool separates(const NormalSurface& s);

struct BoundCheck {
  std::string name;
  std::int64_t lhs = 0, rhs = 0;  // rhs of the edge bound is the doubled value V * k3
  bool holds = true;
  bool vacuous = false;
};

struct CountingReport {
  std::vector<BoundCheck> checks;
  bool degenerate = false;  // empty surface
  bool ok() const;
};

/// |V(S)| <= |dA|, 2|E(S)| <= |V(S)| k3 and |chi(S)| < |E(S)| when E(S) > 0.
CountingReport verify_counting_bounds(const NormalSurface& s, std::int64_t cut_boundary, std::size_t k3);

// Surface text: one line per tetrahedron,
//   tet <i> tri <a b c d> quad <p q r> orient <t0 t1 t2 t3> <q0 q1 q2>
void write_surface(std::ostream& out, const NormalSurface& s);
NormalSurface parse_surface(std::istream& in, std::shared_ptr<const Ambient> ambient);

}  // namespace tricover
