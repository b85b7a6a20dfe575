#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace tricover {

/// Non-negative reduced fraction with exact comparison.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Ratio() = default;
  Ratio(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (d <= 0) throw std::invalid_argument("Ratio: denominator must be positive");
    const std::int64_t g = std::gcd(n, d);
    if (g > 1) num /= g, den /= g;
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    const __int128 l = static_cast<__int128>(a.num) * b.den;
    const __int128 r = static_cast<__int128>(b.num) * a.den;
    return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend bool operator==(const Ratio& a, const Ratio& b) { return (a <=> b) == 0; }
  friend std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.str(); }
};

}  // namespace tricover
