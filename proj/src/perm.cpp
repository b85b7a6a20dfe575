#include "tricover/perm.hpp"

namespace tricover {

bool perm_from_face_code(int face, int target_face, std::string_view code, Perm4& out) {
  if (face < 0 || face > 3 || target_face < 0 || target_face > 3 || code.size() != 3) return false;
  std::array<bool, 3> seen{};
  std::array<int, 4> image{};
  const auto src = face_vertices(face);
  const auto dst = face_vertices(target_face);
  for (int k = 0; k < 3; ++k) {
    const int pos = code[k] - '0';
    if (pos < 0 || pos > 2 || seen[pos]) return false;
    seen[pos] = true;
    image[src[k]] = dst[pos];
  }
  image[face] = target_face;
  out = Perm4(image[0], image[1], image[2], image[3]);
  return true;
}

std::string face_code(int face, const Perm4& perm) {
  const auto src = face_vertices(face);
  const auto dst = face_vertices(perm[face]);
  std::string code(3, '0');
  for (int k = 0; k < 3; ++k) {
    for (int pos = 0; pos < 3; ++pos)
      if (dst[pos] == perm[src[k]]) code[k] = static_cast<char>('0' + pos);
  }
  return code;
}

}  // namespace tricover
