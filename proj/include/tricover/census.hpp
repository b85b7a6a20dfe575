#pragma once

#include <string>
#include <vector>

#include "tricover/triangulation.hpp"

namespace tricover::census {

// Closed orientable one-vertex triangulations used as fixtures and pipeline inputs.

Triangulation s3();               // 1 tetrahedron
Triangulation lens_4_1();         // 1 tetrahedron, H1 = Z/4
Triangulation lens_5_2();         // 1 tetrahedron, H1 = Z/5
Triangulation s2xs1();            // 2 tetrahedra, H1 = Z
Triangulation rp3();              // 2 tetrahedra, H1 = Z/2
Triangulation quaternionic();     // 2 tetrahedra, S^3/Q8, H1 = Z/2 + Z/2
Triangulation lens_3_1();         // 2 tetrahedra
Triangulation lens_3_1_alt();     // 2 tetrahedra, different gluing
Triangulation lens_z5();          // 2 tetrahedra, H1 = Z/5
Triangulation lens_z7();          // 2 tetrahedra, H1 = Z/7
Triangulation lens_z8();          // 2 tetrahedra, H1 = Z/8

/// Three-torus: the unit cube cut into the six tetrahedra around its main diagonal with
/// opposite faces identified by translation.
Triangulation t3();

struct Entry {
  std::string name;
  Triangulation (*make)();
};

/// Every named triangulation above, in a fixed order.
const std::vector<Entry>& all();

/// Looks up a name from all(); throws std::invalid_argument if unknown.
Triangulation by_name(const std::string& name);

}  // namespace tricover::census
