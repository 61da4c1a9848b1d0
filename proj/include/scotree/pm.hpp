#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "scotree/lattice.hpp"
#include "scotree/tree.hpp"

namespace scotree {

using Rational = boost::multiprecision::cpp_rational;

// A machine-checkable counterexample carried by every negative perfect-memory
// verdict.
enum class PmViolation {
  // word appended with symbol has no context as a postfix.
  missing_next_context,
  // the subtree rooted at the root's child `symbol` has context `word` that
  // is a postfix of no context of the whole tree.
  uncontained_subtree,
  // `word` is a leading segment of context `source` but is a postfix of no
  // context (i.e. not a node).
  prefix_not_node,
  // internal node `word` is missing the child labelled `symbol`.
  incomplete_node,
};

struct PmWitness {
  PmViolation kind;
  Word word;
  std::optional<Symbol> symbol;
  std::optional<Word> source;
};

// Re-derives the witness's violation from scratch. Used by tests; every
// witness produced by the checks below must pass this.
bool verify_witness(const ContextTree& t, const PmWitness& w);

struct PmResult {
  bool pm = false;
  std::optional<PmWitness> witness;
  explicit operator bool() const { return pm; }
};

// The four equivalent perfect-memory checks. All throw EmptyTree on the empty
// tree. They agree on every complete tree; is_pm_next_context is meaningful
// on incomplete trees as well (and can only succeed on complete ones), while
// the other three report an incompleteness witness for incomplete input.
//
// For every context c and symbol a, some context is a postfix of c·a.
PmResult is_pm_next_context(const ContextTree& t);
// Completeness plus: every nonempty subtree of the root is contained in the
// whole tree at the root.
PmResult is_pm_subtrees(const ContextTree& t);
// Completeness plus: every context with its newest symbol dropped is still a
// node.
PmResult is_pm_shifted_contexts(const ContextTree& t);
// Completeness plus: every leading segment of every context is a node.
PmResult is_pm_prefixes(const ContextTree& t);

// Minimal perfect-memory tree containing t at the root, computed as the
// union at the root of all subtrees of the complete hull. Reference
// implementation; closure_trim is the fast path and must agree exactly.
ContextTree closure_oracle(const ContextTree& t);

// Work counters for the trimming closure; symbol_ops approximates the number
// of elementary word-symbol operations performed.
struct TrimStats {
  std::uint64_t processed = 0;
  std::uint64_t inserted = 0;
  std::uint64_t symbol_ops = 0;
};

// Trimming closure of a complete tree: maintains the internal-node set of the
// answer, visiting nodes in depth-decreasing order; whenever a node with its
// newest symbol dropped is missing, that word and all its postfixes are
// inserted and scheduled. Saturating the resulting node set yields the
// closure. Throws EmptyTree / NotComplete.
ContextTree closure_trim(const ContextTree& t, TrimStats* stats = nullptr);

// Removes the deepest complete leaf set whose parent is not internal in
// `avoid` (ties broken canonically); with no `avoid`, removes the deepest
// leaf set outright. The input must be perfect-memory and the result is
// perfect-memory. Throws BadParams when no cut is possible.
ContextTree cut_deepest_leaf_set(const ContextTree& t, const ContextTree* avoid = nullptr);

// Perfect-memory chain from a down to b (both returned as endpoints): each
// consecutive pair differs by exactly one complete leaf set and every
// intermediate is perfect-memory. Requires a, b perfect-memory with b
// strictly contained in a at the root. Throws NotPerfectMemory /
// NotContained / AlphabetMismatch.
std::vector<ContextTree> pm_chain(const ContextTree& a, const ContextTree& b);

struct TreeMetrics {
  std::size_t depth = 0;
  std::size_t leaf_count = 0;
  std::size_t node_count = 0;
  Rational r1;  // leaf density: n(T) / n^depth
  Rational r2;  // closure growth: n(closure(T)) / n(T)
  bool completed = false;  // input was incomplete and was completed first
};

// Exact sparsity metrics. Incomplete input is completed via complete_hull
// and flagged. Throws EmptyTree.
TreeMetrics metrics(const ContextTree& t);

}  // namespace scotree
