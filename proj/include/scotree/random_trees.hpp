#pragma once

#include "scotree/rng.hpp"
#include "scotree/tree.hpp"

namespace scotree {

// Deterministic samplers used by the property and acceptance suites. All
// draw from an explicit splitmix64 stream, so a fixed seed reproduces the
// same tree on any platform.

// Complete tree: every node below the depth cap splits into n children with
// probability split_p, independently.
ContextTree random_complete_tree(SplitMix64& rng, const Alphabet& alphabet,
                                 std::size_t max_depth, double split_p = 0.5);

// Possibly incomplete nonempty tree: a random complete tree with a random
// sequence of maximal-node deletions applied to its node set.
ContextTree random_tree(SplitMix64& rng, const Alphabet& alphabet, std::size_t max_depth,
                        double split_p = 0.5, double remove_p = 0.3);

// Perfect-memory sample: the closure of a random complete tree.
ContextTree random_pm_tree(SplitMix64& rng, const Alphabet& alphabet, std::size_t max_depth,
                           double split_p = 0.5);

// Complete tree whose leaf depths all lie in {k, k+1}: the full depth-k tree
// with a random subset of its leaves split once more.
ContextTree random_near_uniform_tree(SplitMix64& rng, const Alphabet& alphabet, std::size_t k,
                                     double split_p = 0.5);

}  // namespace scotree
