#pragma once

// Independent oracles and generators shared by the unit and acceptance tests. Nothing here
// calls the routine it is used to check.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "tricover/cheeger.hpp"
#include "tricover/cocycle.hpp"
#include "tricover/group.hpp"
#include "tricover/smith.hpp"
#include "tricover/triangulation.hpp"

namespace oracle {

using Rng = std::mt19937_64;

/// Edge classes by union-find over (tet, local edge) pairs: class sizes in order of the lowest
/// representative. The size of a class is its valence.
std::vector<std::size_t> edge_class_sizes(const tricover::Triangulation& t);

/// Vertex classes by union-find over corners.
std::size_t vertex_class_count(const tricover::Triangulation& t);

/// Rank over Q by fraction-free Gaussian elimination in exact rationals.
std::size_t rational_rank(const tricover::IntMatrix& m);

/// Minimum ratio over every admissible subset, with the lexicographically smallest minimizer.
struct BruteCut {
  tricover::Ratio ratio;
  std::vector<std::size_t> subset;
};
BruteCut brute_cheeger(const tricover::MultiGraph& g);

/// Random connected multigraph with loops allowed.
tricover::MultiGraph random_multigraph(Rng& rng, std::size_t vertices, std::size_t extra_edges);

/// First {-1, 0, 1} assignment on `support` in lexicographic order (value order -1 < 0 < 1)
/// that is a cocycle and not a coboundary, decided by ranks of the cochain matrices.
std::optional<tricover::Cocycle> brute_certificate(const tricover::Skeleton& s, std::vector<std::size_t> support);

/// Cocycle and coboundary tests through the transposed boundary matrices.
bool rank_is_cocycle(const tricover::Skeleton& s, const tricover::Cocycle& c);
bool rank_is_coboundary(const tricover::Skeleton& s, const tricover::Cocycle& c);

/// Surjections onto Z/n by enumerating every image vector, canonicalized by unit multiples.
std::set<std::vector<std::size_t>> brute_cyclic_quotients(const tricover::Presentation& p, std::size_t n);

/// Random closed triangulation with `tets` tetrahedra whose skeleton can be built (no edge glued
/// to its reverse) and which is connected. Not necessarily a manifold.
tricover::Triangulation random_closed_triangulation(Rng& rng, std::size_t tets);

/// Random admissible splitting profile: odd length, no spheres, every expansion term >= 1.
struct Profile {
  std::int64_t chi_F = 0;
  std::vector<std::int64_t> chis;
};
Profile random_admissible_profile(Rng& rng);

}  // namespace oracle
