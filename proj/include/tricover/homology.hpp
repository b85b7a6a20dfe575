#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tricover/smith.hpp"
#include "tricover/triangulation.hpp"

namespace tricover {

/// Finitely generated abelian group Z^rank + sum Z/torsion[i].
struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<std::int64_t> torsion;  // elementary divisors > 1, ascending divisibility chain
  bool operator==(const AbelianGroup&) const = default;
};

struct HomologyProfile {
  std::array<std::size_t, 4> betti{};
  std::array<std::vector<std::int64_t>, 4> torsion;

  std::size_t b(int k) const { return betti.at(k); }
};

/// Cokernel of the map Z^rows -> Z^cols whose image is spanned by the rows of `relations`.
AbelianGroup abelian_group_from_relations(const IntMatrix& relations);

/// Simplicial chain boundary d_k : C_k -> C_{k-1} on the cell classes of `s`,
/// as a (#(k-1)-cells) x (#k-cells) matrix; k in 1..3.
IntMatrix boundary_matrix(const Skeleton& s, int k);

/// Integral homology via Smith normal form. Requires a closed, connected triangulation.
HomologyProfile homology(const Triangulation& t);
HomologyProfile homology(const Skeleton& s);

}  // namespace tricover
