#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tricover {

/// Euler characteristics of the surfaces F_1..F_n of a generalised Heegaard splitting, in stack
/// order, and of the Heegaard surface F they come from.
struct SplittingProfile {
  std::int64_t chi_F = 0;
  std::vector<std::int64_t> chis;

  bool operator==(const SplittingProfile&) const = default;
};

/// Parses `splitting chiF=<int> chis=<int,int,...>`; throws FormatError.
SplittingProfile parse_splitting(const std::string& line);
std::string format_splitting(const SplittingProfile& p);

struct LedgerCheck {
  std::string name;
  bool holds = true;
  std::string detail;
};

struct ExpansionReport {
  /// The n + 1 terms of the expansion of |chi(F)|, each stored doubled so odd values stay exact.
  std::vector<std::int64_t> doubled_terms;
  std::int64_t doubled_sum = 0;
  std::vector<LedgerCheck> checks;

  bool ok() const;
  /// Terms as text: integers, or halves written p/2.
  std::vector<std::string> term_strings() const;
};

/// |chi(F)| = -chi1/2 + (chi2 - chi1)/2 + (chi2 - chi3)/2 + ... - chin/2, with every term at least
/// one, n odd, no spheres, |chi_j| <= |chi(F)| and n + 1 <= |chi(F)|.
ExpansionReport verify_expansion(const SplittingProfile& p);

struct UnionBoundsReport {
  std::int64_t sum_abs_chi = 0;      // sum |chi(F_j)|
  std::int64_t n_abs_chi_F = 0;      // n |chi(F)|
  std::int64_t abs_chi_F_squared = 0;
  std::int64_t component_bound = 0;  // floor(3 |chi(F)| / 2)
  bool expansion_ok = false;
  std::vector<LedgerCheck> checks;

  bool ok() const;
};

/// sum |chi(F_j)| <= n |chi(F)| < |chi(F)|^2, plus the component-count bound for comparison.
UnionBoundsReport verify_union_bounds(const SplittingProfile& p);

/// chi(d-H) - chi(d+H) is even and non-negative; unless H is a 3-ball, solid torus or product,
/// the number of boundary components is at most 3/2 of that difference.
std::vector<LedgerCheck> check_compression_body(std::int64_t chi_minus, std::int64_t chi_plus,
                                                std::int64_t boundary_components, bool ball_torus_or_product);

/// C(m, 2) c^2 + m c d. Throws std::invalid_argument for m < 2 or negative sizes, and
/// std::overflow_error past 64 bits.
std::int64_t pigeonhole_bound(std::int64_t m, std::int64_t c_size, std::int64_t d_size);

}  // namespace tricover
