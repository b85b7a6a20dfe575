#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "tricover/group.hpp"
#include "tricover/ratio.hpp"

namespace tricover {

struct GraphEdge {
  std::size_t u = 0;
  std::size_t v = 0;  // u <= v
  std::size_t multiplicity = 1;

  bool is_loop() const { return u == v; }
  bool operator==(const GraphEdge&) const = default;
};

/// Undirected multigraph. Parallel edges are merged into one entry carrying a multiplicity;
/// entries are sorted by (u, v).
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(std::size_t vertex_count, const std::vector<std::pair<std::size_t, std::size_t>>& edge_list);
  MultiGraph(std::size_t vertex_count, std::vector<GraphEdge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }

  /// Non-loop degree with multiplicity.
  std::size_t degree(std::size_t v) const;
  std::size_t max_degree() const;
  bool connected() const;
  bool has_loops() const;

  bool operator==(const MultiGraph&) const = default;

 private:
  void normalize();
  std::size_t vertex_count_ = 0;
  std::vector<GraphEdge> edges_;
};

/// One edge {g, g * image(x)} per element g and generator x.
MultiGraph cayley_graph(const FiniteQuotient& q);

struct CutCertificate {
  std::vector<std::size_t> subset;  // sorted
  std::int64_t boundary = 0;        // crossing edges with multiplicity
  Ratio ratio;                      // boundary / |subset|
  bool optimal = false;
};

/// Number of edges with exactly one endpoint in `subset`, with multiplicity.
std::int64_t boundary_size(const MultiGraph& g, const std::vector<std::size_t>& subset);

/// Builds a certificate for an explicit subset; throws std::invalid_argument unless
/// 0 < |subset| <= |V|/2 with distinct in-range vertices.
CutCertificate make_cut(const MultiGraph& g, std::vector<std::size_t> subset, bool optimal = false);

class TooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

class Disconnected : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultExactLimit = 24;

/// Exact Cheeger constant with a minimizing subset; ties go to the lexicographically smallest
/// sorted subset. Throws TooLarge if the graph has more than `limit` (at most 64) vertices.
CutCertificate cheeger_exact(const MultiGraph& g, std::size_t limit = kDefaultExactLimit);

/// Best prefix cut along the Fiedler vector ordering. Never marked optimal.
CutCertificate cheeger_sweep(const MultiGraph& g);

struct SpectralBrackets {
  double lambda2 = 0;
  std::size_t max_degree = 0;
  double lower = 0;  // lambda2 / 2
  double upper = 0;  // sqrt(2 * max_degree * lambda2)
};

SpectralBrackets spectral_brackets(const MultiGraph& g);

/// sqrt(2 / (3 |V|)), for display only.
double certificate_threshold(std::size_t vertex_count);

/// Exact test ratio < sqrt(2 / (3 |V|)), i.e. ratio^2 * 3 |V| < 2.
bool below_certificate_threshold(const Ratio& ratio, std::size_t vertex_count);

// Graph text: "graph N M" then M lines "e u v mult".
void write_graph(std::ostream& out, const MultiGraph& g);
MultiGraph parse_graph(std::istream& in);
// Cut text: "cut k", a line of k vertex indices, "boundary B ratio p/q".
void write_cut(std::ostream& out, const CutCertificate& c);
CutCertificate parse_cut(std::istream& in);

}  // namespace tricover
