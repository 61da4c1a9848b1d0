#pragma once

#include <vector>

#include "scotree/pm.hpp"
#include "scotree/scot.hpp"
#include "scotree/tree.hpp"

namespace fixtures {

using namespace scotree;

inline Alphabet binary() { return Alphabet::decimal(2); }

// Complete perfect-memory tree with contexts
// {00, 010, 110, 001, 0101, 1101, 11} (oldest symbol first).
inline ContextTree seven_leaf_pm_tree() {
  return from_contexts(binary(), {
                                     Word{0, 0},
                                     Word{0, 1, 0},
                                     Word{1, 1, 0},
                                     Word{0, 0, 1},
                                     Word{0, 1, 0, 1},
                                     Word{1, 1, 0, 1},
                                     Word{1, 1},
                                 });
}

// Complete tree without perfect memory: {00, 10, 001, 0101, 1101, 11}. Its
// closure is seven_leaf_pm_tree().
inline ContextTree six_leaf_gap_tree() {
  return from_contexts(binary(), {
                                     Word{0, 0},
                                     Word{1, 0},
                                     Word{0, 0, 1},
                                     Word{0, 1, 0, 1},
                                     Word{1, 1, 0, 1},
                                     Word{1, 1},
                                 });
}

// The complete depth-2 binary tree {00, 10, 01, 11}.
inline ContextTree square_tree() {
  return from_contexts(binary(), {Word{0, 0}, Word{1, 0}, Word{0, 1}, Word{1, 1}});
}

// Incomplete tree {00, 10, 01}: node 1 is missing its child 11.
inline ContextTree missing_leaf_tree() {
  return from_contexts(binary(), {Word{0, 0}, Word{1, 0}, Word{0, 1}});
}

inline ContextTree root_only_tree() { return from_contexts(binary(), {Word{}}); }

inline ContextTree depth_one_tree() { return from_contexts(binary(), {Word{0}, Word{1}}); }

// Perfect-memory tree {0, 01, 11} with next-symbol distributions
// P(1|0) = 1/2, P(1|01) = 1/4, P(1|11) = 3/4.
inline Scot three_leaf_scot() {
  ContextTree t = from_contexts(binary(), {Word{0}, Word{0, 1}, Word{1, 1}});
  // Canonical context order: 0, 01, 11.
  std::vector<std::vector<Rational>> dists = {
      {Rational(1, 2), Rational(1, 2)},
      {Rational(3, 4), Rational(1, 4)},
      {Rational(1, 4), Rational(3, 4)},
  };
  return Scot(std::move(t), std::move(dists), true);
}

inline std::vector<Word> sorted_words(std::vector<Word> ws) {
  std::sort(ws.begin(), ws.end(), canonical_less);
  return ws;
}

}  // namespace fixtures
