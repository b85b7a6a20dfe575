#include "tricover/census.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "tricover/io.hpp"

namespace tricover::census {

Triangulation s3() {
  return triangulation_from_string(
      "tets 1\n"
      "g 0 0 -> 0 1 012\ng 0 1 -> 0 0 012\ng 0 2 -> 0 3 120\ng 0 3 -> 0 2 201\n");
}

Triangulation lens_4_1() {
  return triangulation_from_string(
      "tets 1\n"
      "g 0 0 -> 0 1 120\ng 0 1 -> 0 0 201\ng 0 2 -> 0 3 120\ng 0 3 -> 0 2 201\n");
}

Triangulation lens_5_2() {
  return triangulation_from_string(
      "tets 1\n"
      "g 0 0 -> 0 1 120\ng 0 1 -> 0 0 201\ng 0 2 -> 0 3 201\ng 0 3 -> 0 2 120\n");
}

Triangulation s2xs1() {
  return triangulation_from_string(
      "tets 2\n"
      "g 0 0 -> 0 1 120\ng 0 1 -> 0 0 201\ng 0 2 -> 1 0 120\ng 0 3 -> 1 1 120\n"
      "g 1 0 -> 0 2 201\ng 1 1 -> 0 3 201\ng 1 2 -> 1 3 120\ng 1 3 -> 1 2 201\n");
}

Triangulation rp3() {
  return triangulation_from_string(
      "tets 2\n"
      "g 0 0 -> 0 1 012\ng 0 1 -> 0 0 012\ng 0 2 -> 1 0 012\ng 0 3 -> 1 1 201\n"
      "g 1 0 -> 0 2 012\ng 1 1 -> 0 3 120\ng 1 2 -> 1 3 201\ng 1 3 -> 1 2 120\n");
}

Triangulation quaternionic() {
  return triangulation_from_string(
      "tets 2\n"
      "g 0 0 -> 1 0 120\ng 0 1 -> 1 1 201\ng 0 2 -> 1 2 120\ng 0 3 -> 1 3 201\n"
      "g 1 0 -> 0 0 201\ng 1 1 -> 0 1 120\ng 1 2 -> 0 2 201\ng 1 3 -> 0 3 120\n");
}

Triangulation lens_3_1() {
  return triangulation_from_string(
      "tets 2\n"
      "g 0 0 -> 0 1 120\ng 0 1 -> 0 0 201\ng 0 2 -> 1 0 120\ng 0 3 -> 1 1 120\n"
      "g 1 0 -> 0 2 201\ng 1 1 -> 0 3 201\ng 1 2 -> 1 3 201\ng 1 3 -> 1 2 120\n");
}

Triangulation lens_3_1_alt() {
  return triangulation_from_string(
      "tets 2\n"
      "g 0 0 -> 0 1 012\ng 0 1 -> 0 0 012\ng 0 2 -> 1 0 120\ng 0 3 -> 1 1 120\n"
      "g 1 0 -> 0 2 201\ng 1 1 -> 0 3 201\ng 1 2 -> 1 3 120\ng 1 3 -> 1 2 201\n");
}

Triangulation lens_z5() {
  return triangulation_from_string(
      "tets 2\n"
      "g 0 0 -> 0 1 120\ng 0 1 -> 0 0 201\ng 0 2 -> 1 0 012\ng 0 3 -> 1 1 201\n"
      "g 1 0 -> 0 2 012\ng 1 1 -> 0 3 120\ng 1 2 -> 1 3 201\ng 1 3 -> 1 2 120\n");
}

Triangulation lens_z7() {
  return triangulation_from_string(
      "tets 2\n"
      "g 0 0 -> 0 1 120\ng 0 1 -> 0 0 201\ng 0 2 -> 1 0 012\ng 0 3 -> 1 1 201\n"
      "g 1 0 -> 0 2 012\ng 1 1 -> 0 3 120\ng 1 2 -> 1 3 120\ng 1 3 -> 1 2 201\n");
}

Triangulation lens_z8() {
  return triangulation_from_string(
      "tets 2\n"
      "g 0 0 -> 0 1 120\ng 0 1 -> 0 0 201\ng 0 2 -> 1 0 102\ng 0 3 -> 1 1 021\n"
      "g 1 0 -> 0 2 102\ng 1 1 -> 0 3 021\ng 1 2 -> 1 3 120\ng 1 3 -> 1 2 201\n");
}

Triangulation t3() {
  using Point = std::array<int, 3>;
  // tetrahedron k has corners 0, e_a, e_a + e_b, (1,1,1) for the k-th ordering (a, b, c) of the axes
  std::vector<std::array<Point, 4>> tets;
  std::array<int, 3> axes{0, 1, 2};
  do {
    std::array<Point, 4> corners{};
    for (int step = 1; step < 4; ++step) {
      corners[step] = corners[step - 1];
      corners[step][axes[step - 1]] += 1;
    }
    tets.push_back(corners);
  } while (std::next_permutation(axes.begin(), axes.end()));

  Triangulation t(tets.size());
  for (std::size_t i = 0; i < tets.size(); ++i) {
    for (int f = 0; f < 4; ++f) {
      bool matched = false;
      for (std::size_t j = 0; j < tets.size() && !matched; ++j) {
        for (int g = 0; g < 4 && !matched; ++g) {
          if (j == i && g == f) continue;
          // candidate translation: align the lowest corner of face f with each corner of face g
          for (int v : face_vertices(g)) {
            const int u0 = face_vertices(f)[0];
            Point shift{tets[j][v][0] - tets[i][u0][0], tets[j][v][1] - tets[i][u0][1],
                        tets[j][v][2] - tets[i][u0][2]};
            std::array<int, 4> image{};
            image[f] = g;
            bool ok = true;
            for (int u : face_vertices(f)) {
              const Point moved{tets[i][u][0] + shift[0], tets[i][u][1] + shift[1], tets[i][u][2] + shift[2]};
              int hit = -1;
              for (int w : face_vertices(g))
                if (tets[j][w] == moved) hit = w;
              if (hit < 0) {
                ok = false;
                break;
              }
              image[u] = hit;
            }
            if (ok) {
              t.set_gluing(i, f, FaceGluing{j, Perm4(image[0], image[1], image[2], image[3])});
              matched = true;
              break;
            }
          }
        }
      }
      if (!matched) throw std::logic_error("t3: unmatched face");
    }
  }
  return t;
}

const std::vector<Entry>& all() {
  static const std::vector<Entry> entries{
      {"s3", &s3},
      {"l41", &lens_4_1},
      {"l52", &lens_5_2},
      {"s2xs1", &s2xs1},
      {"rp3", &rp3},
      {"quaternionic", &quaternionic},
      {"l31", &lens_3_1},
      {"l31b", &lens_3_1_alt},
      {"lz5", &lens_z5},
      {"lz7", &lens_z7},
      {"lz8", &lens_z8},
      {"t3", &t3},
  };
  return entries;
}

Triangulation by_name(const std::string& name) {
  for (const auto& e : all())
    if (e.name == name) return e.make();
  throw std::invalid_argument("unknown census triangulation '" + name + "'");
}

}  // namespace tricover::census
