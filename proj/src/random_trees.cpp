#include "scotree/random_trees.hpp"

#include <algorithm>
#include <vector>

#include "scotree/pm.hpp"

namespace scotree {

ContextTree random_complete_tree(SplitMix64& rng, const Alphabet& alphabet,
                                 std::size_t max_depth, double split_p) {
  const std::size_t n = alphabet.size();
  std::unordered_set<Word, WordHash> internal;
  if (max_depth == 0 || rng.next_double() >= split_p) {
    return trusted_tree(alphabet, {Word{}});
  }
  std::vector<Word> frontier{Word{}};
  std::vector<Word> next;
  for (std::size_t d = 1; d < max_depth; ++d) {
    next.clear();
    for (const Word& w : frontier) {
      for (Symbol a = 0; a < n; ++a) {
        Word child = w.prepended(a);
        if (rng.next_double() < split_p) {
          internal.insert(child);
          next.push_back(std::move(child));
        }
      }
    }
    frontier = next;
    if (frontier.empty()) break;
  }
  return tree_from_internal_nodes(alphabet, internal, true);
}

ContextTree random_tree(SplitMix64& rng, const Alphabet& alphabet, std::size_t max_depth,
                        double split_p, double remove_p) {
  ContextTree t = random_complete_tree(rng, alphabet, max_depth, split_p);
  // Delete maximal nodes at random; the remaining node set stays
  // postfix-closed, so its leaves form a valid (usually incomplete) tree.
  std::unordered_map<Word, bool, WordHash> nodes = t.node_flags();
  const std::size_t n = alphabet.size();
  auto is_maximal = [&](const Word& w) {
    for (Symbol a = 0; a < n; ++a) {
      if (nodes.count(w.prepended(a))) return false;
    }
    return true;
  };
  std::size_t rounds = t.node_count() / 2;
  for (std::size_t r = 0; r < rounds; ++r) {
    if (nodes.empty()) break;
    std::vector<Word> maximal;
    for (const auto& [w, flag] : nodes) {
      if (is_maximal(w)) maximal.push_back(w);
    }
    if (maximal.empty()) break;
    std::sort(maximal.begin(), maximal.end(), canonical_less);
    bool removed = false;
    for (const Word& w : maximal) {
      if (rng.next_double() < remove_p) {
        nodes.erase(w);
        removed = true;
      }
    }
    if (!removed) break;
  }
  if (nodes.empty()) return trusted_tree(alphabet, {Word{}});
  std::vector<Word> contexts;
  for (const auto& [w, flag] : nodes) {
    if (is_maximal(w)) contexts.push_back(w);
  }
  return trusted_tree(alphabet, std::move(contexts));
}

ContextTree random_pm_tree(SplitMix64& rng, const Alphabet& alphabet, std::size_t max_depth,
                           double split_p) {
  return closure_trim(random_complete_tree(rng, alphabet, max_depth, split_p));
}

ContextTree random_near_uniform_tree(SplitMix64& rng, const Alphabet& alphabet, std::size_t k,
                                     double split_p) {
  const std::size_t n = alphabet.size();
  std::unordered_set<Word, WordHash> internal;
  if (k == 0) return trusted_tree(alphabet, {Word{}});
  std::vector<Word> level{Word{}};
  for (std::size_t d = 1; d < k; ++d) {
    std::vector<Word> next;
    for (const Word& w : level) {
      for (Symbol a = 0; a < n; ++a) {
        Word child = w.prepended(a);
        internal.insert(child);
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  // level now holds all words of length k-1; their children are the depth-k
  // leaves, each split once more with probability split_p.
  for (const Word& w : level) {
    for (Symbol a = 0; a < n; ++a) {
      if (rng.next_double() < split_p) internal.insert(w.prepended(a));
    }
  }
  return tree_from_internal_nodes(alphabet, internal, true);
}

}  // namespace scotree
