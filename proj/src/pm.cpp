#include "scotree/pm.hpp"

#include <algorithm>

namespace scotree {

namespace {

void require_nonempty(const ContextTree& t) {
  if (t.empty()) throw EmptyTree();
}

// First incompleteness witness in canonical order, if any.
std::optional<PmWitness> find_incompleteness(const ContextTree& t) {
  if (t.root_only()) return std::nullopt;
  const std::size_t n = t.alphabet().size();
  std::vector<Word> internal;
  internal.push_back(Word{});
  for (const auto& [w, is_ctx] : t.node_flags()) {
    if (!is_ctx) internal.push_back(w);
  }
  std::sort(internal.begin(), internal.end(), canonical_less);
  for (const Word& w : internal) {
    for (Symbol a = 0; a < n; ++a) {
      if (!t.is_node(w.prepended(a))) {
        return PmWitness{PmViolation::incomplete_node, w, a, std::nullopt};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool verify_witness(const ContextTree& t, const PmWitness& w) {
  switch (w.kind) {
    case PmViolation::missing_next_context: {
      if (!w.symbol || !t.is_context(w.word)) return false;
      Word next = w.word.appended(*w.symbol);
      for (std::size_t len = 0; len <= next.size(); ++len) {
        if (t.is_context(next.suffix(len))) return false;
      }
      return true;
    }
    case PmViolation::uncontained_subtree: {
      if (!w.symbol) return false;
      ContextTree sub = subtree(t, *w.symbol);
      return sub.is_context(w.word) && !t.is_node(w.word);
    }
    case PmViolation::prefix_not_node: {
      if (!w.source || !t.is_context(*w.source)) return false;
      const Word& u = w.word;
      const Word& c = *w.source;
      if (u.size() > c.size()) return false;
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] != c[i]) return false;  // must be a leading segment
      }
      return !t.is_node(u);
    }
    case PmViolation::incomplete_node: {
      if (!w.symbol || !t.is_internal(w.word)) return false;
      return !t.is_node(w.word.prepended(*w.symbol));
    }
  }
  return false;
}

PmResult is_pm_next_context(const ContextTree& t) {
  require_nonempty(t);
  const std::size_t n = t.alphabet().size();
  for (const Word& c : t.contexts()) {
    for (Symbol a = 0; a < n; ++a) {
      Word next = c.appended(a);
      bool found = false;
      for (std::size_t len = 0; len <= next.size(); ++len) {
        if (t.is_context(next.suffix(len))) {
          found = true;
          break;
        }
      }
      if (!found) {
        return {false, PmWitness{PmViolation::missing_next_context, c, a, std::nullopt}};
      }
    }
  }
  return {true, std::nullopt};
}

PmResult is_pm_subtrees(const ContextTree& t) {
  require_nonempty(t);
  if (auto w = find_incompleteness(t)) return {false, w};
  for (Symbol a = 0; a < t.alphabet().size(); ++a) {
    ContextTree sub = subtree(t, a);
    if (sub.empty()) continue;
    Word missing;
    if (!contained_at_root(sub, t, &missing)) {
      return {false, PmWitness{PmViolation::uncontained_subtree, missing, a, std::nullopt}};
    }
  }
  return {true, std::nullopt};
}

PmResult is_pm_shifted_contexts(const ContextTree& t) {
  require_nonempty(t);
  if (auto w = find_incompleteness(t)) return {false, w};
  for (const Word& c : t.contexts()) {
    if (c.empty()) continue;
    Word head = c.dropped_last();
    if (!t.is_node(head)) {
      return {false, PmWitness{PmViolation::prefix_not_node, head, std::nullopt, c}};
    }
  }
  return {true, std::nullopt};
}

PmResult is_pm_prefixes(const ContextTree& t) {
  require_nonempty(t);
  if (auto w = find_incompleteness(t)) return {false, w};
  for (const Word& c : t.contexts()) {
    for (std::size_t len = 1; len + 1 <= c.size(); ++len) {
      Word prefix(std::vector<Symbol>(c.symbols().begin(),
                                      c.symbols().begin() + static_cast<std::ptrdiff_t>(len)));
      if (!t.is_node(prefix)) {
        return {false, PmWitness{PmViolation::prefix_not_node, prefix, std::nullopt, c}};
      }
    }
  }
  return {true, std::nullopt};
}

ContextTree closure_oracle(const ContextTree& t) {
  require_nonempty(t);
  ContextTree hull = complete_hull(t);
  std::vector<ContextTree> subs = all_subtrees(hull);
  ContextTree acc = hull;
  for (const ContextTree& s : subs) {
    if (s == hull) continue;
    acc = union_at_root(acc, s);
  }
  return acc;
}

ContextTree closure_trim(const ContextTree& t, TrimStats* stats) {
  require_nonempty(t);
  if (!is_complete(t)) throw NotComplete("trimming closure requires a complete tree");
  TrimStats local;
  TrimStats& st = stats ? *stats : local;

  // Working node set: the internal nodes of the answer (ε kept implicitly).
  std::unordered_set<Word, WordHash> work;
  std::size_t max_len = 0;
  for (const auto& [w, is_ctx] : t.node_flags()) {
    if (!is_ctx) {
      max_len = std::max(max_len, w.size());
      work.insert(w);
    }
  }
  std::vector<std::vector<Word>> buckets(max_len + 1);
  for (const Word& w : work) {
    if (w.size() >= 2) buckets[w.size()].push_back(w);
  }

  auto insert_with_postfixes = [&](const Word& w) {
    // Inserts w and every missing trailing segment of it, scheduling each
    // inserted word of length >= 2. Shorter than the word being processed,
    // so the depth-decreasing order is preserved.
    for (std::size_t len = w.size(); len >= 1; --len) {
      Word s = w.suffix(len);
      st.symbol_ops += s.size();
      if (!work.insert(s).second) break;
      ++st.inserted;
      if (s.size() >= 2) buckets[s.size()].push_back(std::move(s));
    }
  };

  for (std::size_t len = max_len; len >= 2; --len) {
    // Tie-break inside a depth level: canonical order, for reproducibility.
    // Insertions only ever target strictly shorter buckets.
    std::sort(buckets[len].begin(), buckets[len].end(), canonical_less);
    for (std::size_t i = 0; i < buckets[len].size(); ++i) {
      Word w = buckets[len][i];
      ++st.processed;
      st.symbol_ops += w.size();
      Word shifted = w.dropped_last();
      if (!work.count(shifted)) {
        insert_with_postfixes(shifted);
      } else {
        st.symbol_ops += shifted.size();
      }
    }
  }

  ContextTree result = tree_from_internal_nodes(t.alphabet(), work, t.root_internal());
  for (const Word& c : result.contexts()) st.symbol_ops += c.size() + 1;
  return result;
}

ContextTree cut_deepest_leaf_set(const ContextTree& t, const ContextTree* avoid) {
  require_nonempty(t);
  if (t.root_only()) throw BadParams("no leaf set to cut from the root-only tree");
  const std::size_t n = t.alphabet().size();
  auto fringe = [&](const Word& w) {
    // Internal node all of whose children are leaves.
    for (Symbol a = 0; a < n; ++a) {
      if (t.is_internal(w.prepended(a))) return false;
    }
    return true;
  };
  bool found = false;
  Word best;
  bool best_is_root = false;
  auto consider = [&](const Word& w, bool is_root) {
    if (avoid && (is_root ? avoid->root_internal() : avoid->is_internal(w))) return;
    if (!fringe(w)) return;
    if (!found || w.size() > best.size() ||
        (w.size() == best.size() && canonical_less(w, best))) {
      found = true;
      best = w;
      best_is_root = is_root;
    }
  };
  consider(Word{}, true);
  for (const auto& [w, is_ctx] : t.node_flags()) {
    if (!is_ctx) consider(w, false);
  }
  if (!found) throw BadParams("no removable leaf set");
  std::unordered_set<Word, WordHash> internal;
  for (const auto& [w, is_ctx] : t.node_flags()) {
    if (!is_ctx && !(w == best)) internal.insert(w);
  }
  return tree_from_internal_nodes(t.alphabet(), internal,
                                  t.root_internal() && !best_is_root);
}

std::vector<ContextTree> pm_chain(const ContextTree& a, const ContextTree& b) {
  if (a.empty() || b.empty()) throw EmptyTree();
  if (!(a.alphabet() == b.alphabet())) throw AlphabetMismatch();
  if (!is_pm_next_context(a)) throw NotPerfectMemory("chain endpoints must be perfect-memory");
  if (!is_pm_next_context(b)) throw NotPerfectMemory("chain endpoints must be perfect-memory");
  if (a == b || !contained_at_root(b, a)) {
    throw NotContained("second tree must be strictly contained in the first at the root");
  }
  std::vector<ContextTree> chain;
  chain.push_back(a);
  while (!(chain.back() == b)) {
    chain.push_back(cut_deepest_leaf_set(chain.back(), &b));
  }
  return chain;
}

TreeMetrics metrics(const ContextTree& t) {
  require_nonempty(t);
  TreeMetrics m;
  ContextTree base = t;
  if (!is_complete(t)) {
    base = complete_hull(t);
    m.completed = true;
  }
  TreeCounts c = counts(base);
  m.depth = c.depth;
  m.leaf_count = c.leaf_count;
  m.node_count = c.node_count;
  BigInt denom = 1;
  for (std::size_t i = 0; i < m.depth; ++i) denom *= BigInt(base.alphabet().size());
  m.r1 = Rational(BigInt(m.leaf_count), denom);
  ContextTree closure = closure_trim(base);
  m.r2 = Rational(BigInt(closure.leaf_count()), BigInt(m.leaf_count));
  return m;
}

}  // namespace scotree
