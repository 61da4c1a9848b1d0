#pragma once

#include <cstddef>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "scotree/alphabet.hpp"
#include "scotree/errors.hpp"
#include "scotree/word.hpp"

namespace scotree {

using BigInt = boost::multiprecision::cpp_int;

// A context tree: a postfix-free set of contexts over an alphabet, together
// with its derived node set (every postfix of a context is a node). Contexts
// are exactly the leaves of the node trie.
//
// Two degenerate values exist: the root-only tree (contexts == {ε}), which is
// complete and represents a memoryless source, and the empty tree (no
// contexts), which only occurs transiently (e.g. as a subtree result) and is
// rejected by operations that require nonemptiness.
//
// All values are immutable after construction; operations are pure functions.
class ContextTree {
 public:
  // The empty tree over the given alphabet.
  explicit ContextTree(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  const Alphabet& alphabet() const { return alphabet_; }
  bool empty() const { return contexts_.empty(); }
  bool root_only() const { return contexts_.size() == 1 && contexts_[0].empty(); }

  // Contexts in canonical order (length ascending, then newest-first lex).
  const std::vector<Word>& contexts() const { return contexts_; }

  std::size_t leaf_count() const { return contexts_.size(); }
  // Number of tree vertices excluding the root.
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t depth() const { return depth_; }

  // ε is a node of every nonempty tree.
  bool is_node(const Word& w) const {
    return w.empty() ? !empty() : nodes_.count(w) != 0;
  }
  bool is_context(const Word& w) const {
    if (w.empty()) return root_only();
    auto it = nodes_.find(w);
    return it != nodes_.end() && it->second;
  }
  // A node with at least one child. Nonempty non-context nodes always have
  // children, so for them this is just the node test.
  bool is_internal(const Word& w) const {
    if (w.empty()) return !empty() && !root_only();
    auto it = nodes_.find(w);
    return it != nodes_.end() && !it->second;
  }
  bool root_internal() const { return !empty() && !root_only(); }

  // word -> is_context, over all nonempty nodes.
  const std::unordered_map<Word, bool, WordHash>& node_flags() const { return nodes_; }

  friend bool operator==(const ContextTree& a, const ContextTree& b) {
    return a.alphabet_ == b.alphabet_ && a.contexts_ == b.contexts_;
  }

 private:
  ContextTree(Alphabet alphabet, std::vector<Word> contexts, bool trusted);

  friend ContextTree from_contexts(const Alphabet& alphabet, std::vector<Word> words);
  friend ContextTree trusted_tree(const Alphabet& alphabet, std::vector<Word> contexts);

  Alphabet alphabet_;
  std::vector<Word> contexts_;
  std::unordered_map<Word, bool, WordHash> nodes_;
  std::size_t depth_ = 0;
};

// Builds the tree with exactly the given context set. Throws InvalidSymbol if
// a symbol index is out of range and PostfixViolation (with the offending
// pair) if any word is a postfix of another or appears twice.
ContextTree from_contexts(const Alphabet& alphabet, std::vector<Word> words);

// Internal fast path: the caller guarantees postfix-freeness and symbol
// validity (used by algorithms that construct context sets structurally).
ContextTree trusted_tree(const Alphabet& alphabet, std::vector<Word> contexts);

// Builds the complete tree whose internal node set is exactly
// {ε if root_internal} ∪ internal. `internal` must be suffix-closed and must
// be empty when root_internal is false.
ContextTree tree_from_internal_nodes(const Alphabet& alphabet,
                                     const std::unordered_set<Word, WordHash>& internal,
                                     bool root_internal);

// True iff every internal node has all |A| children. The root-only tree is
// complete; the empty tree is not.
bool is_complete(const ContextTree& t);

// C(T): the minimal complete tree containing t at the root. New leaves are
// exactly the missing siblings along existing paths. Throws EmptyTree.
ContextTree complete_hull(const ContextTree& t);

// Removes all leaves of a complete tree. parent_tree and saturate form the
// bijection between complete trees and arbitrary trees:
//   saturate(parent_tree(t)) == t   for complete t,
//   parent_tree(saturate(p)) == p   for every p (including empty).
ContextTree parent_tree(const ContextTree& t);
ContextTree saturate(const ContextTree& p);

// The subtree rooted at the root's child a: contexts are the contexts of t
// that end with a, with that trailing symbol removed. Empty when a is itself
// a context or not a node at all.
ContextTree subtree(const ContextTree& t, Symbol a);

// All distinct nonempty trees reachable from t by iterated subtree, t itself
// included.
std::vector<ContextTree> all_subtrees(const ContextTree& t);

struct TreeCounts {
  std::size_t depth = 0;       // maximal context length
  std::size_t leaf_count = 0;  // number of contexts
  std::size_t node_count = 0;  // vertices excluding the root
};

// Throws EmptyTree on the empty tree.
TreeCounts counts(const ContextTree& t);

// Exact number of complete context trees of depth <= depth over an alphabet
// of size n: f(0) = 1, f(d) = 1 + f(d-1)^n.
BigInt count_complete_trees(std::size_t n, std::size_t depth);

// The |A| sibling leaves under one parent.
struct LeafSet {
  Word parent;
  std::vector<Word> leaves;
};

LeafSet make_leaf_set(const Alphabet& alphabet, const Word& parent);

}  // namespace scotree
