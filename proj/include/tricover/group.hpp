#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tricover/homology.hpp"
#include "tricover/triangulation.hpp"

namespace tricover {

/// Finite group given by its multiplication table over elements 0..n-1, identity 0.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(std::vector<std::vector<std::size_t>>{{0}}) {}

  /// Throws std::invalid_argument unless the table is a group with identity 0.
  explicit FiniteGroup(std::vector<std::vector<std::size_t>> table);

  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);  // (x, y) -> x * |b| + y
  static FiniteGroup symmetric(std::size_t n);                           // permutations in lex order
  static FiniteGroup quaternion();                                       // Q8

  std::size_t order() const { return table_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  bool contains(std::size_t a) const { return a < order(); }
  bool is_abelian() const;

  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  /// Subgroup generated by `gens`, as a sorted element list.
  std::vector<std::size_t> generated_subgroup(const std::vector<std::size_t>& gens) const;

  /// Empty if the table satisfies the group axioms, otherwise the first failure.
  static std::string check_axioms(const std::vector<std::vector<std::size_t>>& table);

  bool operator==(const FiniteGroup& o) const { return table_ == o.table_; }

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
};

struct Letter {
  std::size_t generator = 0;
  int exponent = 1;  // +1 or -1
  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

/// Edge-generated presentation of the fundamental group of a one-vertex triangulation:
/// generator i is edge class i, relator j is the boundary word of face class j.
struct Presentation {
  std::size_t generator_count = 0;
  std::vector<Word> relators;

  /// Relator exponent-sum matrix: rows = relators, columns = generators.
  IntMatrix exponent_matrix() const;
};

class MultipleVertices : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Relator of a face class reads v0 -> v1 -> v2 -> v0 around the representative face.
/// Throws MultipleVertices unless the skeleton has exactly one vertex class.
Presentation presentation_from(const Triangulation& t, const Skeleton& s);

AbelianGroup abelianization(const Presentation& p);

/// A homomorphism from the presented group onto `group`, given by generator images.
struct FiniteQuotient {
  FiniteGroup group;
  std::vector<std::size_t> images;

  std::size_t degree() const { return group.order(); }
  std::size_t evaluate(const Word& w) const;
};

struct QuotientReport {
  bool relators_ok = true;
  std::optional<std::size_t> failing_relator;
  bool surjective = true;
  std::size_t image_order = 0;
  std::string problem;  // non-empty for structural errors (wrong image count, out-of-range element)

  bool ok() const { return problem.empty() && relators_ok && surjective; }
};

QuotientReport validate_quotient(const Presentation& p, const FiniteQuotient& q);

/// Surjections onto Z/n up to automorphisms of Z/n. Each is represented by the generator-image
/// vector that is lexicographically smallest among its unit multiples; results are sorted.
std::vector<FiniteQuotient> cyclic_quotients(const Presentation& p, std::size_t n);

// Quotient text:
//   group N
//   N lines of N integers (row = left factor)
//   images
//   gen <edge-class-id> -> <element>
FiniteQuotient parse_quotient(std::istream& in);
void write_quotient(std::ostream& out, const FiniteQuotient& q);
FiniteQuotient read_quotient_file(const std::string& path);

}  // namespace tricover
