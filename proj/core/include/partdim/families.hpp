#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "partdim/graph.hpp"

namespace partdim {

// Named graph families with fixed canonical labelings, so certificates and
// golden files are label-stable.

Graph path_graph(int n);               // 0-1-...-(n-1), n >= 2
Graph cycle_graph(int n);              // walk order plus edge (n-1,0), n >= 3
Graph complete_graph(int n);           // n >= 2
Graph complete_bipartite_graph(int r, int s); // sides {0..r-1} and {r..r+s-1}
Graph star_graph(int leaves);          // center 0, leaves 1..leaves
Graph wheel_graph(int rim);            // hub 0 joined to a cycle on 1..rim, rim >= 3
Graph fan_graph(int spine);            // hub 0 joined to a path on 1..spine, spine >= 3
Graph complete_minus_edge_graph(int n); // K_n without edge (0,1), n >= 3

/// Uniform random labelled tree, decoded from a seeded code sequence.
/// Reproducible across platforms: the i-th code entry is
/// mt19937_64(seed) output i reduced mod n.
Graph random_tree(int n, std::uint64_t seed);

/// Dispatcher over family names used by the CLI and sweeps:
/// path, cycle, complete, complete_bipartite, star, wheel, fan,
/// complete_minus_edge, random_tree (params = {n, seed}).
/// Throws UnknownFamily / InvalidParams.
Graph generate(const std::string& family, const std::vector<long long>& params);

} // namespace partdim
