#pragma once

#include <cstdint>

#include "treeopt/flownet.hpp"
#include "treeopt/spanning.hpp"
#include "treeopt/tree_core.hpp"
#include "treeopt/treebuild.hpp"

namespace treeopt {

// Seeded generators; identical seeds give identical outputs.

// Uniform labeled tree via Pruefer decoding, rooted at 1, unit weights.
RootedTree gen_tree(int n, std::uint64_t seed);

// Random DAG over a random topological order; all bounds <= bound_cap.
BoundedDigraph gen_bounded_dag(int n, std::uint64_t seed,
                               long long bound_cap = 2);

// Random connected graph: a random tree plus extra_edges additional edges,
// weights in [1, wmax].
WeightedGraph gen_weighted_graph(int n, int extra_edges, long long wmax,
                                 std::uint64_t seed);

LeafSeq gen_leaf_seq(int n, long long hmax, std::uint64_t seed);

}  // namespace treeopt
