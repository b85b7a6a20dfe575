#include <doctest.h>

#include "support.hpp"
#include "tricover/io.hpp"
#include "tricover/splitting.hpp"

using namespace tricover;

namespace {

bool check_holds(const std::vector<LedgerCheck>& checks, const std::string& name) {
  for (const auto& c : checks)
    if (c.name == name) return c.holds;
  FAIL("missing check " << name);
  return false;
}

}  // namespace

TEST_SUITE("splitting") {

TEST_CASE("single genus-one surface") {
  const ExpansionReport r = verify_expansion({-2, {-2}});
  CHECK(r.doubled_terms == std::vector<std::int64_t>{2, 2});
  CHECK(r.term_strings() == std::vector<std::string>{"1", "1"});
  CHECK(r.doubled_sum == 4);
  CHECK(r.ok());
}

TEST_CASE("three-surface profile") {
  const SplittingProfile p{-6, {-4, -2, -4}};
  const ExpansionReport r = verify_expansion(p);
  CHECK(r.term_strings() == std::vector<std::string>{"2", "1", "1", "2"});
  CHECK(r.doubled_sum == 12);
  CHECK(r.ok());
  const UnionBoundsReport u = verify_union_bounds(p);
  CHECK(u.sum_abs_chi == 10);
  CHECK(u.n_abs_chi_F == 18);
  CHECK(u.abs_chi_F_squared == 36);
  CHECK(u.component_bound == 9);
  CHECK(u.ok());
}

TEST_CASE("parallel adjacent surfaces give a zero term") {
  const ExpansionReport r = verify_expansion({-2, {-2, -2, -2}});
  CHECK_FALSE(r.ok());
  CHECK_FALSE(check_holds(r.checks, "terms_at_least_one"));
  CHECK(r.doubled_terms[1] == 0);
}

TEST_CASE("other expansion violations") {
  CHECK_FALSE(check_holds(verify_expansion({-4, {-2, -2}}).checks, "odd_count"));
  CHECK_FALSE(check_holds(verify_expansion({-2, {2}}).checks, "no_spheres"));
  CHECK_FALSE(check_holds(verify_expansion({-8, {-4, -2, -4}}).checks, "sum_equals_abs_chiF"));
  CHECK_FALSE(verify_expansion({0, {}}).ok());
}

TEST_CASE("union bounds at the edges of the model") {
  for (std::int64_t a = 2; a <= 10; a += 2) {
    const UnionBoundsReport u = verify_union_bounds({-a, {-a}});
    CHECK(u.sum_abs_chi == a);
    CHECK(u.ok());
  }
  const UnionBoundsReport one = verify_union_bounds({-1, {-1}});
  CHECK_FALSE(check_holds(one.checks, "n_abs_chiF_lt_square"));
  CHECK_FALSE(one.ok());
}

TEST_CASE("random admissible profiles pass every check") {
  oracle::Rng rng(1000);
  for (int trial = 0; trial < 1000; ++trial) {
    const oracle::Profile p = oracle::random_admissible_profile(rng);
    const SplittingProfile sp{p.chi_F, p.chis};
    const ExpansionReport e = verify_expansion(sp);
    CAPTURE(format_splitting(sp));
    CHECK(e.ok());
    CHECK(verify_union_bounds(sp).ok());
    CHECK(parse_splitting(format_splitting(sp)).chis == sp.chis);
  }
}

TEST_CASE("compression body bookkeeping") {
  const auto ok = check_compression_body(-2, -4, 1, false);
  for (const auto& c : ok) CHECK(c.holds);
  CHECK_FALSE(check_compression_body(-4, -2, 1, false)[1].holds);
  CHECK_FALSE(check_compression_body(-2, -3, 1, false)[0].holds);
  CHECK_FALSE(check_compression_body(-2, -4, 4, false)[2].holds);
  CHECK(check_compression_body(0, -2, 0, true).size() == 2);
}

TEST_CASE("pigeonhole bound") {
  CHECK(pigeonhole_bound(2, 1, 0) == 1);
  CHECK(pigeonhole_bound(9, 10, 100) == 12600);
  CHECK(pigeonhole_bound(2, 0, 7) == 0);
  for (std::int64_t m = 2; m <= 12; ++m)
    for (std::int64_t c = 0; c <= 6; ++c)
      for (std::int64_t d = 0; d <= 6; ++d) {
        const std::int64_t b = pigeonhole_bound(m, c, d);
        CHECK(b == m * (m - 1) / 2 * c * c + m * c * d);
        CHECK(pigeonhole_bound(m + 1, c, d) >= b);
        CHECK(pigeonhole_bound(m, c + 1, d) >= b);
        CHECK(pigeonhole_bound(m, c, d + 1) >= b);
      }
  CHECK_THROWS_AS(pigeonhole_bound(1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(pigeonhole_bound(2, -1, 1), std::invalid_argument);
  CHECK_THROWS_AS(pigeonhole_bound(3'000'000'000, 3'000'000'000, 0), std::overflow_error);
}

TEST_CASE("profile text") {
  const SplittingProfile p = parse_splitting("splitting chiF=-6 chis=-4,-2,-4");
  CHECK(p.chi_F == -6);
  CHECK(p.chis == std::vector<std::int64_t>{-4, -2, -4});
  CHECK(format_splitting(p) == "splitting chiF=-6 chis=-4,-2,-4");
  CHECK_THROWS_AS(parse_splitting("splitting chiF=-6"), FormatError);
  CHECK_THROWS_AS(parse_splitting("splitting chiF=x chis=1"), FormatError);
  CHECK_THROWS_AS(parse_splitting("splitting chiF=-6 chis=-4,,-4"), FormatError);
}

}  // TEST_SUITE
