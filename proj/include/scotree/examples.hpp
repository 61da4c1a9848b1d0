#pragma once

#include "scotree/tree.hpp"

namespace scotree::examples {

// Comb tree: a spine of a_1-labelled internal nodes with a full fan of leaves
// at every level. Perfect-memory with the minimal leaf density
// n(T) = (n-1)*depth + 1. Requires n >= 2, depth >= 1.
ContextTree comb(std::size_t n, std::size_t depth);

// A fixed binary tree of depth 6 with as many leaves as comb(2, 6) but
// without perfect memory; its closure has 13 leaves.
ContextTree sparse_example();

// Binary family whose perfect-memory closure contains the full tree of depth
// depth-1 at the root while the tree itself stays sparse:
//   n(T) = 3*2^(depth-3) + 1,   n(closure) = 5*2^(depth-3).
// Requires depth >= 3.
ContextTree minimal_full_mc(std::size_t depth);

// Family with a large closure growth ratio r2: a full fan of internal nodes
// at depth 1 is forced out of a single spine with pairwise-distinct labels.
// Spine label at level d is a_min(d, n); with n >= depth-2 the labels are all
// distinct and the closure leaf count is exactly
//   n^2 (depth-1) + n (2-depth) + (n-1)(depth-2)(depth-3)/2,
// which is not attainable for smaller alphabets. n(T) = n^2 + (depth-2)(n-1)
// always. Requires n >= 2, depth >= 4.
ContextTree wide_r2(std::size_t n, std::size_t depth);

}  // namespace scotree::examples
