#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "tricover/group.hpp"
#include "tricover/triangulation.hpp"

namespace tricover {

/// Regular cover of a one-vertex triangulation determined by a finite quotient of its
/// edge-generated fundamental group. Lifted tetrahedron (t, g) has index t * degree + g;
/// crossing a face multiplies the label on the right, deck transformations multiply on the left.
struct CoverTriangulation {
  Triangulation base;
  FiniteQuotient quotient;
  Triangulation lifted;
  Skeleton lifted_skeleton;
  std::size_t base_edges = 0;

  /// Lifted vertex class -> group element and back.
  std::vector<std::size_t> vertex_element;
  std::vector<std::size_t> element_vertex;

  /// Lifted edge class -> (base edge class, group element at which the lift starts).
  /// The lift of base edge x starting at g ends at g * image(x).
  std::vector<std::size_t> edge_generator;
  std::vector<std::size_t> edge_start;
  /// +1 when the class orientation runs from the start element to the end, -1 otherwise. The lowest
  /// representative of a lifted class need not lie over the base representative.
  std::vector<int> edge_direction;

  std::size_t degree() const { return quotient.degree(); }
  std::size_t lift_index(std::size_t base_tet, std::size_t element) const { return base_tet * degree() + element; }
  std::size_t base_tet(std::size_t lifted_tet) const { return lifted_tet / degree(); }
  std::size_t element(std::size_t lifted_tet) const { return lifted_tet % degree(); }
};

class CoverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requires a valid, connected, one-vertex base and a valid quotient of its presentation.
CoverTriangulation build_cover(const Triangulation& base, const FiniteQuotient& q);

enum class CellKind { Tetrahedron, Face, Edge, Vertex };

struct Cell {
  CellKind kind = CellKind::Tetrahedron;
  std::size_t index = 0;
  bool operator==(const Cell&) const = default;
};

class UnknownElement : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Left multiplication by `g` on cells of the lifted triangulation (cell classes for
/// faces, edges, and vertices).
Cell deck_translate(const CoverTriangulation& c, std::size_t g, Cell cell);

/// Companion label file: one line `lift <tet'> = <base-tet> <element>` per lifted tetrahedron.
void write_lift_labels(std::ostream& out, const CoverTriangulation& c);

}  // namespace tricover
