#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "scotree/pm.hpp"
#include "scotree/tree.hpp"

namespace scotree {

// The unique context that is a postfix of c·a. Existence is what perfect
// memory means; uniqueness follows from postfix-freeness. Throws
// UnknownContext if c is not a context and NotPerfectMemory if no context
// matches (impossible on validated perfect-memory trees, signalled
// defensively).
Word next_context(const ContextTree& t, const Word& c, Symbol a);

// A stochastic context tree: a complete perfect-memory tree plus a
// next-symbol distribution at each leaf. Probabilities are kept as exact
// rationals; `exact` records whether they were supplied as rationals (and so
// may be rendered and compared exactly) or as decimals.
class Scot {
 public:
  Scot(ContextTree tree, std::vector<std::vector<Rational>> dists, bool exact = true);

  const ContextTree& tree() const { return tree_; }
  // One distribution per context, in canonical context order.
  const std::vector<std::vector<Rational>>& dists() const { return dists_; }
  const std::vector<Rational>& dist_for(const Word& context) const;
  bool exact() const { return exact_; }

 private:
  ContextTree tree_;
  std::vector<std::vector<Rational>> dists_;
  bool exact_;
};

// First-order Markov chain over the leaf contexts of a perfect-memory SCOT.
struct MarkovChain {
  Alphabet alphabet;
  std::vector<Word> states;                    // canonical context order
  std::vector<std::vector<Rational>> matrix;   // row-stochastic
  bool exact = true;
};

// M[c][u] = sum of P(a | c) over symbols a with next_context(c, a) == u.
MarkovChain build_markov(const Scot& s);

struct StationaryResult {
  std::vector<double> pi;
  std::size_t iterations = 0;
  // True when the chain is strongly connected, which guarantees the
  // stationary distribution is unique.
  bool unique = false;
};

// Power iteration from `init` (uniform by default). After half the iteration
// budget without convergence the iteration switches to 0.5-damped averaging,
// which also handles period-2 chains. Throws NonConvergence when the budget
// is exhausted.
StationaryResult stationary(const MarkovChain& mc, double tol = 1e-12,
                            std::size_t max_iters = 1000000,
                            const std::vector<double>* init = nullptr,
                            bool allow_damping = true);

// Generates `steps` symbols: at each step a symbol is drawn from the current
// context's distribution, emitted, and the context advanced via next_context.
// Deterministic for a fixed seed (splitmix64). The initial context defaults
// to a sample from the stationary distribution of the reduced chain.
std::vector<Symbol> simulate(const Scot& s, std::size_t steps, std::uint64_t seed,
                             const std::optional<Word>& init = std::nullopt);

// SCOT on the full n-ary tree of the given order; `rows` holds one
// distribution per history of length `order`, in canonical (newest-first
// lexicographic) order of the histories. Throws IncompleteTable on a row
// count or row size mismatch.
Scot from_full_mc(const Alphabet& alphabet, std::size_t order,
                  std::vector<std::vector<Rational>> rows, bool exact = true);

}  // namespace scotree
