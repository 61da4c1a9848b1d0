#include "scotree/tree.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace scotree {

namespace {

std::string pretty(const Alphabet& alphabet, const Word& w) {
  return w.empty() ? std::string("<empty>") : alphabet.render(w);
}

}  // namespace

ContextTree::ContextTree(Alphabet alphabet, std::vector<Word> contexts, bool /*trusted*/)
    : alphabet_(std::move(alphabet)), contexts_(std::move(contexts)) {
  std::sort(contexts_.begin(), contexts_.end(), canonical_less);
  for (const Word& c : contexts_) {
    depth_ = std::max(depth_, c.size());
    if (!c.empty()) nodes_[c] = true;
  }
  // Close the node set under postfix: walk each context's trailing segments
  // until an already-present node is reached.
  for (const Word& c : contexts_) {
    for (std::size_t len = c.size(); len-- > 1;) {
      Word s = c.suffix(len);
      if (nodes_.count(s)) break;
      nodes_.emplace(std::move(s), false);
    }
  }
}

ContextTree from_contexts(const Alphabet& alphabet, std::vector<Word> words) {
  const std::size_t n = alphabet.size();
  for (const Word& w : words) {
    for (Symbol s : w.symbols()) {
      if (s >= n) throw InvalidSymbol(s, n);
    }
  }
  std::unordered_map<Word, bool, WordHash> seen;  // word -> is_context
  for (const Word& w : words) {
    auto [it, inserted] = seen.emplace(w, true);
    if (!inserted && it->second) {
      throw PostfixViolation(w, w, "duplicate context '" + pretty(alphabet, w) + "'");
    }
    it->second = true;
  }
  for (const Word& w : words) {
    for (std::size_t len = w.size(); len-- > 0;) {
      Word s = w.suffix(len);
      auto it = seen.find(s);
      if (it != seen.end()) {
        if (it->second) {
          throw PostfixViolation(s, w,
                                 "context '" + pretty(alphabet, s) + "' is a postfix of context '" +
                                     pretty(alphabet, w) + "'");
        }
      } else {
        seen.emplace(std::move(s), false);
      }
    }
    // ε as a proper postfix: a nonempty word coexisting with the ε context.
    if (!w.empty() && seen.count(Word{}) && seen[Word{}]) {
      throw PostfixViolation(Word{}, w,
                             "the empty context is a postfix of context '" + pretty(alphabet, w) + "'");
    }
  }
  return ContextTree(alphabet, std::move(words), true);
}

ContextTree trusted_tree(const Alphabet& alphabet, std::vector<Word> contexts) {
  return ContextTree(alphabet, std::move(contexts), true);
}

ContextTree tree_from_internal_nodes(const Alphabet& alphabet,
                                     const std::unordered_set<Word, WordHash>& internal,
                                     bool root_internal) {
  if (!root_internal) return trusted_tree(alphabet, {Word{}});
  const std::size_t n = alphabet.size();
  std::vector<Word> contexts;
  auto add_missing_children = [&](const Word& w) {
    for (Symbol a = 0; a < n; ++a) {
      Word child = w.prepended(a);
      if (!internal.count(child)) contexts.push_back(std::move(child));
    }
  };
  add_missing_children(Word{});
  for (const Word& w : internal) add_missing_children(w);
  return trusted_tree(alphabet, std::move(contexts));
}

bool is_complete(const ContextTree& t) {
  if (t.empty()) return false;
  if (t.root_only()) return true;
  const std::size_t n = t.alphabet().size();
  auto full_children = [&](const Word& w) {
    for (Symbol a = 0; a < n; ++a) {
      if (!t.is_node(w.prepended(a))) return false;
    }
    return true;
  };
  if (!full_children(Word{})) return false;
  for (const auto& [w, is_ctx] : t.node_flags()) {
    if (!is_ctx && !full_children(w)) return false;
  }
  return true;
}

ContextTree complete_hull(const ContextTree& t) {
  if (t.empty()) throw EmptyTree();
  if (t.root_only()) return t;
  const std::size_t n = t.alphabet().size();
  std::vector<Word> contexts = t.contexts();
  auto add_missing = [&](const Word& w) {
    for (Symbol a = 0; a < n; ++a) {
      Word child = w.prepended(a);
      if (!t.is_node(child)) contexts.push_back(std::move(child));
    }
  };
  add_missing(Word{});
  for (const auto& [w, is_ctx] : t.node_flags()) {
    if (!is_ctx) add_missing(w);
  }
  return trusted_tree(t.alphabet(), std::move(contexts));
}

ContextTree parent_tree(const ContextTree& t) {
  if (t.empty()) throw EmptyTree();
  if (!is_complete(t)) throw NotComplete("parent_tree requires a complete tree");
  if (t.root_only()) return ContextTree(t.alphabet());  // the empty tree
  const std::size_t n = t.alphabet().size();
  // Contexts of the parent tree are the internal nodes with no internal child.
  std::vector<Word> contexts;
  auto maximal = [&](const Word& w) {
    for (Symbol a = 0; a < n; ++a) {
      if (t.is_internal(w.prepended(a))) return false;
    }
    return true;
  };
  bool root_maximal = maximal(Word{});
  if (root_maximal) return trusted_tree(t.alphabet(), {Word{}});
  for (const auto& [w, is_ctx] : t.node_flags()) {
    if (!is_ctx && maximal(w)) contexts.push_back(w);
  }
  return trusted_tree(t.alphabet(), std::move(contexts));
}

ContextTree saturate(const ContextTree& p) {
  if (p.empty()) return trusted_tree(p.alphabet(), {Word{}});
  std::unordered_set<Word, WordHash> internal;
  internal.reserve(p.node_flags().size());
  for (const auto& [w, is_ctx] : p.node_flags()) internal.insert(w);
  return tree_from_internal_nodes(p.alphabet(), internal, true);
}

ContextTree subtree(const ContextTree& t, Symbol a) {
  if (a >= t.alphabet().size()) throw InvalidSymbol(a, t.alphabet().size());
  std::vector<Word> contexts;
  for (const Word& c : t.contexts()) {
    if (c.size() >= 2 && c.last() == a) contexts.push_back(c.dropped_last());
  }
  return trusted_tree(t.alphabet(), std::move(contexts));
}

std::vector<ContextTree> all_subtrees(const ContextTree& t) {
  auto key = [](const ContextTree& x) { return x.contexts(); };
  struct VecLess {
    bool operator()(const std::vector<Word>& a, const std::vector<Word>& b) const {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                          [](const Word& u, const Word& v) {
                                            return canonical_less(u, v);
                                          });
    }
  };
  std::map<std::vector<Word>, std::size_t, VecLess> seen;
  std::vector<ContextTree> out;
  std::deque<std::size_t> queue;
  seen.emplace(key(t), 0);
  out.push_back(t);
  queue.push_back(0);
  while (!queue.empty()) {
    std::size_t idx = queue.front();
    queue.pop_front();
    for (Symbol a = 0; a < t.alphabet().size(); ++a) {
      ContextTree s = subtree(out[idx], a);
      if (s.empty()) continue;
      auto [it, inserted] = seen.emplace(key(s), out.size());
      if (inserted) {
        out.push_back(std::move(s));
        queue.push_back(out.size() - 1);
      }
    }
  }
  return out;
}

TreeCounts counts(const ContextTree& t) {
  if (t.empty()) throw EmptyTree();
  return TreeCounts{t.depth(), t.leaf_count(), t.node_count()};
}

BigInt count_complete_trees(std::size_t n, std::size_t depth) {
  if (n < 1) throw BadParams("alphabet size must be at least 1");
  BigInt f = 1;
  for (std::size_t d = 0; d < depth; ++d) {
    BigInt p = 1;
    for (std::size_t i = 0; i < n; ++i) p *= f;
    f = 1 + p;
  }
  return f;
}

LeafSet make_leaf_set(const Alphabet& alphabet, const Word& parent) {
  LeafSet ls;
  ls.parent = parent;
  ls.leaves.reserve(alphabet.size());
  for (Symbol a = 0; a < alphabet.size(); ++a) ls.leaves.push_back(parent.prepended(a));
  return ls;
}

}  // namespace scotree
