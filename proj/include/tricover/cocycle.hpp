#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tricover/cheeger.hpp"
#include "tricover/cover.hpp"
#include "tricover/triangulation.hpp"

namespace tricover {

/// Integer 1-cochain on oriented edge classes; value[i] is read along tail -> head of class i.
struct Cocycle {
  std::vector<std::int64_t> values;

  std::vector<std::size_t> support() const;
  bool operator==(const Cocycle&) const = default;
};

class DomainMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SupportTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Throws DomainMismatch if the value count differs from the edge class count.
bool is_cocycle(const Skeleton& s, const Cocycle& c);
bool is_cocycle(const Triangulation& t, const Cocycle& c);

/// First face class whose signed boundary sum is nonzero.
std::optional<std::size_t> violated_face(const Skeleton& s, const Cocycle& c);

struct OrientedEdge {
  std::size_t edge = 0;
  int sign = 1;  // +1 traverses tail -> head
  bool operator==(const OrientedEdge&) const = default;
};

struct CoboundaryResult {
  bool coboundary = false;
  std::vector<std::int64_t> potential;  // when coboundary: c = delta(potential), 0 at each component's lowest vertex
  std::vector<OrientedEdge> witness;    // otherwise: closed edge walk
  std::int64_t witness_sum = 0;         // c summed along the witness, nonzero
};

/// Integrates c along a BFS spanning forest of the 1-skeleton; the potential is 0 at the lowest
/// vertex of each component. Throws PreconditionViolation unless c is a cocycle.
CoboundaryResult is_coboundary(const Skeleton& s, const Cocycle& c);
CoboundaryResult is_coboundary(const Triangulation& t, const Cocycle& c);

/// c(e) = potential(head) - potential(tail).
Cocycle coboundary_of(const Skeleton& s, const std::vector<std::int64_t>& potential);

/// Sum of c along an oriented walk.
std::int64_t evaluate(const Cocycle& c, const std::vector<OrientedEdge>& walk);

inline constexpr std::size_t kDefaultSupportCap = 40;

/// Lexicographically first {-1, 0, 1} cochain supported on `support` (ordered by edge class id,
/// values ordered -1 < 0 < 1) that is a cocycle and not a coboundary. Throws SupportTooLarge
/// if the support exceeds `cap`.
std::optional<Cocycle> search_certificate_on_support(const Skeleton& s, std::vector<std::size_t> support,
                                                     std::size_t cap = kDefaultSupportCap);

/// Lifted edge classes with exactly one endpoint in the cut.
std::vector<std::size_t> cut_edges(const CoverTriangulation& cover, const CutCertificate& cut);

struct SearchOptions {
  std::size_t cap = kDefaultSupportCap;
  bool force = false;  // run even when the cut ratio is not below the threshold
};

struct SearchResult {
  std::optional<Cocycle> certificate;
  std::vector<std::size_t> support;
  bool threshold_holds = false;
  std::vector<std::string> warnings;  // e.g. PreconditionOverridden
};

/// Throws PreconditionViolation if the cut does not match the cover's Cayley graph, or if the
/// threshold fails and `force` is off.
SearchResult search_certificate(const CoverTriangulation& cover, const CutCertificate& cut,
                                const SearchOptions& options = {});

enum class Verdict { Agree, Disagree, TheoremViolation };

std::string verdict_name(Verdict v);

struct VerificationReport {
  Ratio ratio;
  double threshold = 0;
  bool threshold_holds = false;
  bool cut_optimal = false;
  bool found = false;
  std::optional<Cocycle> certificate;
  std::size_t support_size = 0;
  std::int64_t b1 = 0;
  Verdict verdict = Verdict::Agree;
  std::vector<std::string> warnings;
};

/// End-to-end check. TheoremViolation: the cut is a minimizer below the threshold and no
/// certificate exists. Disagree: a certificate exists although b1 = 0.
VerificationReport verify_certificate_implication(const CoverTriangulation& cover, const CutCertificate& cut,
                                                  std::size_t cap = kDefaultSupportCap);

// Certificate text: "cocycle" then "edge <class-id> <value>" for each nonzero value.
void write_cocycle(std::ostream& out, const Cocycle& c);
Cocycle parse_cocycle(std::istream& in, std::size_t edge_count);

}  // namespace tricover
