#include "scotree/lattice.hpp"

namespace scotree {

namespace {

void require_pair(const ContextTree& a, const ContextTree& b) {
  if (a.empty() || b.empty()) throw EmptyTree();
  if (!(a.alphabet() == b.alphabet())) throw AlphabetMismatch();
}

void require_complete_pair(const ContextTree& a, const ContextTree& b) {
  require_pair(a, b);
  if (!is_complete(a) || !is_complete(b)) {
    throw NotComplete("union/intersection at the root require complete trees");
  }
}

// The internal-node set of a complete tree, ε excluded (tracked separately).
std::unordered_set<Word, WordHash> internal_words(const ContextTree& t) {
  std::unordered_set<Word, WordHash> out;
  out.reserve(t.node_flags().size());
  for (const auto& [w, is_ctx] : t.node_flags()) {
    if (!is_ctx) out.insert(w);
  }
  return out;
}

}  // namespace

bool contained_at_root(const ContextTree& a, const ContextTree& b, Word* witness) {
  require_pair(a, b);
  for (const Word& c : a.contexts()) {
    // c is a postfix of some context of b iff c is a node of b.
    if (!b.is_node(c)) {
      if (witness) *witness = c;
      return false;
    }
  }
  return true;
}

bool covers_at_root(const ContextTree& a, const ContextTree& b, Word* witness) {
  require_pair(a, b);
  for (const Word& c : b.contexts()) {
    bool found = false;
    for (std::size_t len = 0; len <= c.size(); ++len) {
      if (a.is_context(c.suffix(len))) {
        found = true;
        break;
      }
    }
    if (!found) {
      if (witness) *witness = c;
      return false;
    }
  }
  return true;
}

ContextTree union_at_root(const ContextTree& a, const ContextTree& b) {
  require_complete_pair(a, b);
  // For complete trees the internal nodes of the union node set are exactly
  // the union of the internal node sets.
  std::unordered_set<Word, WordHash> internal = internal_words(a);
  for (const auto& [w, is_ctx] : b.node_flags()) {
    if (!is_ctx) internal.insert(w);
  }
  return tree_from_internal_nodes(a.alphabet(), internal,
                                  a.root_internal() || b.root_internal());
}

ContextTree intersection_at_root(const ContextTree& a, const ContextTree& b) {
  require_complete_pair(a, b);
  std::unordered_set<Word, WordHash> internal;
  for (const auto& [w, is_ctx] : a.node_flags()) {
    if (!is_ctx && b.is_internal(w)) internal.insert(w);
  }
  return tree_from_internal_nodes(a.alphabet(), internal,
                                  a.root_internal() && b.root_internal());
}

}  // namespace scotree
