#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tricover/perm.hpp"

namespace tricover {

/// Where face `face` of some tetrahedron is glued. `perm` maps the vertices of the source
/// tetrahedron to the vertices of `tet`; perm[face] is the target face.
struct FaceGluing {
  std::size_t tet = 0;
  Perm4 perm;

  int target_face(int face) const { return perm[face]; }
  bool operator==(const FaceGluing&) const = default;
};

/// Identifies a face of a specific tetrahedron.
struct TetFace {
  std::size_t tet = 0;
  int face = 0;
  bool operator==(const TetFace&) const = default;
  auto operator<=>(const TetFace&) const = default;
};

/// Tetrahedra with face gluings. Gluings are stored one-directionally so that malformed
/// input (missing or asymmetric entries) can be represented and reported by validate().
class Triangulation {
 public:
  Triangulation() = default;
  explicit Triangulation(std::size_t tet_count) : gluings_(tet_count) {}

  std::size_t size() const { return gluings_.size(); }

  const std::optional<FaceGluing>& gluing(std::size_t tet, int face) const { return gluings_.at(tet).at(face); }

  /// Sets one direction only.
  void set_gluing(std::size_t tet, int face, FaceGluing g) { gluings_.at(tet).at(face) = g; }
  void clear_gluing(std::size_t tet, int face) { gluings_.at(tet).at(face).reset(); }

  /// Glues `face` of `tet` to face perm[face] of `target` and records the inverse gluing.
  void glue(std::size_t tet, int face, std::size_t target, const Perm4& perm);

  bool operator==(const Triangulation&) const = default;

 private:
  std::vector<std::array<std::optional<FaceGluing>, 4>> gluings_;
};

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
  std::optional<TetFace> where;
};

struct ValidationReport {
  std::vector<Check> checks;

  bool ok() const;
  const Check* find(const std::string& name) const;
  bool passed(const std::string& name) const;
};

/// Checks closedness, the involution property, edge consistency, vertex links, orientability and
/// connectedness. Never throws on malformed gluing data.
ValidationReport validate(const Triangulation& t);

/// Returns per-tetrahedron orientations (+1/-1) making every gluing orientation-reversing,
/// or nullopt if none exist. Requires every face glued.
std::optional<std::vector<int>> orientation(const Triangulation& t);

class InvalidTriangulation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EdgeClass {
  std::size_t rep_tet = 0;
  int rep_edge = 0;  // local edge index; the class is oriented low -> high vertex of the rep
  std::size_t tail = 0;
  std::size_t head = 0;
  std::size_t valence = 0;
};

struct FaceClass {
  TetFace rep;
  std::array<std::size_t, 3> edges{};  // classes of edges v1v2, v0v2, v0v1 of the rep face
  std::array<int, 3> signs{};          // boundary coefficients: +[v1v2] - [v0v2] + [v0v1], times orientation
};

struct VertexClass {
  std::size_t rep_tet = 0;
  int rep_vertex = 0;
  std::size_t corners = 0;
};

/// Cell classes of a closed triangulation. Class ids are assigned in order of the lowest
/// representative (tetrahedron, local index).
struct Skeleton {
  std::vector<VertexClass> vertices;
  std::vector<EdgeClass> edges;
  std::vector<FaceClass> faces;
  std::size_t tet_count = 0;

  std::vector<std::array<std::size_t, 4>> vertex_of;
  std::vector<std::array<std::size_t, 6>> edge_of;
  std::vector<std::array<int, 6>> edge_sign;  // +1 if low->high agrees with the class orientation
  std::vector<std::array<std::size_t, 4>> face_of;
  std::vector<std::array<int, 4>> face_sign;  // +1 if the ascending vertex order matches the rep's

  long long euler_characteristic() const {
    return static_cast<long long>(vertices.size()) - static_cast<long long>(edges.size()) +
           static_cast<long long>(faces.size()) - static_cast<long long>(tet_count);
  }
};

/// Requires every face glued symmetrically and no edge identified with its reverse;
/// throws InvalidTriangulation otherwise.
Skeleton build_skeleton(const Triangulation& t);

/// Largest number of tetrahedron-edge incidences of any edge class.
std::size_t max_edge_valence(const Skeleton& s);

/// Relabels tetrahedra: tetrahedron i becomes relabel[i].
Triangulation relabel(const Triangulation& t, const std::vector<std::size_t>& relabel);

/// Disjoint union, second copy shifted after the first.
Triangulation disjoint_union(const Triangulation& a, const Triangulation& b);

}  // namespace tricover
