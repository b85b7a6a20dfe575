#include "tricover/splitting.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "tricover/io.hpp"

namespace tricover {

namespace {

std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

std::int64_t checked(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("value exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

bool all_hold(const std::vector<LedgerCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const LedgerCheck& c) { return c.holds; });
}

}  // namespace

SplittingProfile parse_splitting(const std::string& line) {
  const auto tok = detail::tokenize(line);
  if (tok.size() != 3 || tok[0] != "splitting" || tok[1].rfind("chiF=", 0) != 0 || tok[2].rfind("chis=", 0) != 0)
    throw FormatError(1, "expected 'splitting chiF=<int> chis=<int,int,...>'");
  SplittingProfile p;
  p.chi_F = detail::parse_integer(tok[1].substr(5), 1);
  std::stringstream list(tok[2].substr(5));
  std::string item;
  while (std::getline(list, item, ',')) {
    if (item.empty()) throw FormatError(1, "empty entry in chis");
    p.chis.push_back(detail::parse_integer(item, 1));
  }
  if (p.chis.empty()) throw FormatError(1, "chis must list at least one surface");
  return p;
}

std::string format_splitting(const SplittingProfile& p) {
  std::string out = "splitting chiF=" + std::to_string(p.chi_F) + " chis=";
  for (std::size_t i = 0; i < p.chis.size(); ++i) out += (i ? "," : "") + std::to_string(p.chis[i]);
  return out;
}

bool ExpansionReport::ok() const { return all_hold(checks); }

std::vector<std::string> ExpansionReport::term_strings() const {
  std::vector<std::string> out;
  for (std::int64_t t : doubled_terms)
    out.push_back(t % 2 == 0 ? std::to_string(t / 2) : std::to_string(t) + "/2");
  return out;
}

ExpansionReport verify_expansion(const SplittingProfile& p) {
  ExpansionReport r;
  const auto& x = p.chis;
  const auto n = static_cast<std::int64_t>(x.size());
  const std::int64_t target = abs64(p.chi_F);
  r.checks.push_back({"nonempty", n > 0, "n=" + std::to_string(n)});
  if (n == 0) return r;
  r.checks.push_back({"odd_count", n % 2 == 1, "n=" + std::to_string(n)});
  const bool spheres = std::any_of(x.begin(), x.end(), [](std::int64_t c) { return c == 2; });
  r.checks.push_back({"no_spheres", !spheres, spheres ? "a surface has chi=2" : ""});

  r.doubled_terms.push_back(-x.front());
  for (std::size_t j = 1; j < x.size(); ++j) {
    // (chi2 - chi1)/2, (chi2 - chi3)/2, (chi4 - chi3)/2, ...
    const std::int64_t diff = x[j] - x[j - 1];
    r.doubled_terms.push_back(j % 2 == 1 ? diff : -diff);
  }
  r.doubled_terms.push_back(-x.back());
  for (std::int64_t t : r.doubled_terms) r.doubled_sum += t;

  std::size_t low = r.doubled_terms.size();
  for (std::size_t j = 0; j < r.doubled_terms.size(); ++j)
    if (r.doubled_terms[j] < 2) {
      low = j;
      break;
    }
  r.checks.push_back({"terms_at_least_one", low == r.doubled_terms.size(),
                      low == r.doubled_terms.size() ? "" : "term " + std::to_string(low) + " is below one"});
  r.checks.push_back({"sum_equals_abs_chiF", r.doubled_sum == 2 * target,
                      "sum=" + (r.doubled_sum % 2 == 0 ? std::to_string(r.doubled_sum / 2)
                                                       : std::to_string(r.doubled_sum) + "/2") +
                          " |chiF|=" + std::to_string(target)});
  std::int64_t alt = 0;
  for (std::size_t j = 0; j < x.size(); ++j) alt += (j % 2 == 0 ? -x[j] : x[j]);  // (-1)^j with j from 1
  r.checks.push_back({"alternating_sum", alt == target, "sum=" + std::to_string(alt)});
  r.checks.push_back({"term_count_le_abs_chiF", n + 1 <= target,
                      "terms=" + std::to_string(n + 1) + " |chiF|=" + std::to_string(target)});
  const bool bounded = std::all_of(x.begin(), x.end(), [&](std::int64_t c) { return abs64(c) <= target; });
  r.checks.push_back({"surface_chi_le_abs_chiF", bounded, ""});
  return r;
}

bool UnionBoundsReport::ok() const { return expansion_ok && all_hold(checks); }

UnionBoundsReport verify_union_bounds(const SplittingProfile& p) {
  UnionBoundsReport r;
  r.expansion_ok = verify_expansion(p).ok();
  const std::int64_t a = abs64(p.chi_F);
  for (std::int64_t c : p.chis) r.sum_abs_chi = checked(static_cast<__int128>(r.sum_abs_chi) + abs64(c));
  r.n_abs_chi_F = checked(static_cast<__int128>(p.chis.size()) * a);
  r.abs_chi_F_squared = checked(static_cast<__int128>(a) * a);
  r.component_bound = (3 * a) / 2;
  r.checks.push_back({"sum_le_n_abs_chiF", r.sum_abs_chi <= r.n_abs_chi_F,
                      std::to_string(r.sum_abs_chi) + " <= " + std::to_string(r.n_abs_chi_F)});
  r.checks.push_back({"n_abs_chiF_lt_square", r.n_abs_chi_F < r.abs_chi_F_squared,
                      std::to_string(r.n_abs_chi_F) + " < " + std::to_string(r.abs_chi_F_squared)});
  return r;
}

std::vector<LedgerCheck> check_compression_body(std::int64_t chi_minus, std::int64_t chi_plus,
                                                std::int64_t boundary_components, bool ball_torus_or_product) {
  const std::int64_t diff = chi_minus - chi_plus;
  std::vector<LedgerCheck> out;
  out.push_back({"difference_even", diff % 2 == 0, "difference=" + std::to_string(diff)});
  out.push_back({"difference_nonnegative", diff >= 0, "difference=" + std::to_string(diff)});
  if (!ball_torus_or_product)
    out.push_back({"boundary_components_bound", 2 * boundary_components <= 3 * diff,
                   std::to_string(boundary_components) + " <= 3/2 * " + std::to_string(diff)});
  return out;
}

std::int64_t pigeonhole_bound(std::int64_t m, std::int64_t c_size, std::int64_t d_size) {
  if (m < 2) throw std::invalid_argument("pigeonhole_bound: m must be at least 2");
  if (c_size < 0 || d_size < 0) throw std::invalid_argument("pigeonhole_bound: sizes must be non-negative");
  const __int128 pairs = static_cast<__int128>(m) * (m - 1) / 2;
  const std::int64_t first = c_size == 0 ? 0 : checked(static_cast<__int128>(checked(static_cast<__int128>(checked(pairs)) * c_size)) * c_size);
  const std::int64_t second = checked(static_cast<__int128>(checked(static_cast<__int128>(m) * c_size)) * d_size);
  return checked(static_cast<__int128>(first) + second);
}

}  // namespace tricover
