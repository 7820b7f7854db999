#ifndef RAINBOW_SPARSE_CYCLE_HPP
#define RAINBOW_SPARSE_CYCLE_HPP

#include <vector>

#include "rainbow/core.hpp"

namespace rainbow {

// Girth bound for an N-vertex graph with N+k edges (N >= 4, k >= 2):
//   (2(N+k) / 3k) * (log2 k + log2 log2 k + 4)
// Returned as a real; callers compare cycle length <= value directly.
double bs_bound(int n_vertices, int excess);

// A shortest cycle of the given edge set on vertices [0, n). Peels degree<=1
// vertices, then runs a BFS girth search from every surviving vertex. The
// returned cycle is canonical (see canonical_cycle) with color ids -1; use
// is_rainbow_cycle to recover the color certificate. Throws
// std::invalid_argument if the edge set is acyclic.
CycleResult find_short_cycle(int n, const std::vector<Edge> &edges);

}  // namespace rainbow

#endif
