#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace tricover {

/// Permutation of the four vertex labels {0,1,2,3} of a tetrahedron.
class Perm4 {
 public:
  constexpr Perm4() : image_{0, 1, 2, 3} {}
  constexpr Perm4(int a, int b, int c, int d)
      : image_{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(c),
               static_cast<std::uint8_t>(d)} {}

  constexpr int operator[](int i) const { return image_[i]; }

  constexpr Perm4 inverse() const {
    Perm4 out;
    for (int i = 0; i < 4; ++i) out.image_[image_[i]] = static_cast<std::uint8_t>(i);
    return out;
  }

  /// (*this ∘ other)(i) = (*this)[other[i]].
  constexpr Perm4 compose(const Perm4& other) const {
    Perm4 out;
    for (int i = 0; i < 4; ++i) out.image_[i] = image_[other.image_[i]];
    return out;
  }

  constexpr int sign() const {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (image_[i] > image_[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
  }

  constexpr bool is_identity() const { return image_[0] == 0 && image_[1] == 1 && image_[2] == 2 && image_[3] == 3; }

  constexpr bool operator==(const Perm4&) const = default;

 private:
  std::array<std::uint8_t, 4> image_;
};

/// Vertices of face `face` (the face opposite vertex `face`), ascending.
constexpr std::array<int, 3> face_vertices(int face) {
  std::array<int, 3> out{};
  int k = 0;
  for (int v = 0; v < 4; ++v)
    if (v != face) out[k++] = v;
  return out;
}

/// Edge numbering inside a tetrahedron: 01, 02, 03, 12, 13, 23.
inline constexpr std::array<std::array<int, 2>, 6> kEdgeVertices{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

constexpr int edge_index(int a, int b) {
  if (a > b) std::swap(a, b);
  for (int e = 0; e < 6; ++e)
    if (kEdgeVertices[e][0] == a && kEdgeVertices[e][1] == b) return e;
  return -1;
}

/// Builds the vertex map of a face gluing from the positional 3-character code used in
/// triangulation files: position k of `face` goes to position code[k] of `target_face`.
/// Returns false if the code is not a permutation of "012".
bool perm_from_face_code(int face, int target_face, std::string_view code, Perm4& out);

/// Inverse of perm_from_face_code. `perm` must send `face` to some target face.
std::string face_code(int face, const Perm4& perm);

}  // namespace tricover
