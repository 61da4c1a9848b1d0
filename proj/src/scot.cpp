#include "scotree/scot.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "scotree/rng.hpp"

namespace scotree {

namespace {

constexpr double kProbTolerance = 1e-9;

std::size_t state_index(const std::vector<Word>& states, const Word& c) {
  auto it = std::lower_bound(states.begin(), states.end(), c, canonical_less);
  if (it == states.end() || !(*it == c)) throw UnknownContext("unknown context");
  return static_cast<std::size_t>(it - states.begin());
}

// Forward and backward reachability from state 0 over positive entries.
bool strongly_connected(const std::vector<std::vector<Rational>>& m) {
  const std::size_t k = m.size();
  auto reach = [&](bool forward) {
    std::vector<bool> seen(k, false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < k; ++j) {
        bool edge = forward ? m[i][j] > 0 : m[j][i] > 0;
        if (edge && !seen[j]) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  return reach(true) && reach(false);
}

}  // namespace

Word next_context(const ContextTree& t, const Word& c, Symbol a) {
  if (t.empty()) throw EmptyTree();
  if (a >= t.alphabet().size()) throw InvalidSymbol(a, t.alphabet().size());
  if (!t.is_context(c)) throw UnknownContext("'" + t.alphabet().render(c) + "' is not a context");
  Word next = c.appended(a);
  for (std::size_t len = next.size() + 1; len-- > 0;) {
    Word u = next.suffix(len);
    if (t.is_context(u)) return u;
  }
  throw NotPerfectMemory("no context is a postfix of '" + t.alphabet().render(next) + "'");
}

Scot::Scot(ContextTree tree, std::vector<std::vector<Rational>> dists, bool exact)
    : tree_(std::move(tree)), dists_(std::move(dists)), exact_(exact) {
  if (tree_.empty()) throw EmptyTree();
  PmResult pm = is_pm_next_context(tree_);
  if (!pm) throw NotPerfectMemory("a SCOT requires a perfect-memory context tree");
  if (dists_.size() != tree_.leaf_count()) {
    throw InvalidDistribution("expected one distribution per context (" +
                              std::to_string(tree_.leaf_count()) + "), got " +
                              std::to_string(dists_.size()));
  }
  const std::size_t n = tree_.alphabet().size();
  for (const auto& d : dists_) {
    if (d.size() != n) throw InvalidDistribution("distribution arity must equal the alphabet size");
    Rational sum = 0;
    for (const Rational& p : d) {
      if (p < 0 || p > 1) throw InvalidDistribution("probabilities must lie in [0, 1]");
      sum += p;
    }
    Rational err = sum - 1;
    if (err < 0) err = -err;
    if (err > Rational(1, 1000000000)) {
      throw InvalidDistribution("distribution does not sum to 1");
    }
  }
}

const std::vector<Rational>& Scot::dist_for(const Word& context) const {
  return dists_[state_index(tree_.contexts(), context)];
}

MarkovChain build_markov(const Scot& s) {
  const ContextTree& t = s.tree();
  const std::size_t k = t.leaf_count();
  const std::size_t n = t.alphabet().size();
  MarkovChain mc{t.alphabet(), t.contexts(), {}, s.exact()};
  mc.matrix.assign(k, std::vector<Rational>(k, Rational(0)));
  for (std::size_t i = 0; i < k; ++i) {
    const Word& c = mc.states[i];
    for (Symbol a = 0; a < n; ++a) {
      Word u = next_context(t, c, a);
      mc.matrix[i][state_index(mc.states, u)] += s.dists()[i][a];
    }
  }
  return mc;
}

StationaryResult stationary(const MarkovChain& mc, double tol, std::size_t max_iters,
                            const std::vector<double>* init, bool allow_damping) {
  const std::size_t k = mc.states.size();
  if (k == 0) throw BadParams("empty chain");
  std::vector<std::vector<double>> m(k, std::vector<double>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = static_cast<double>(mc.matrix[i][j]);
  }
  std::vector<double> pi;
  if (init) {
    if (init->size() != k) throw BadParams("initial distribution arity mismatch");
    pi = *init;
  } else {
    pi.assign(k, 1.0 / static_cast<double>(k));
  }
  StationaryResult result;
  result.unique = strongly_connected(mc.matrix);
  std::vector<double> next(k);
  for (std::size_t it = 0; it < max_iters; ++it) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) next[j] += pi[i] * m[i][j];
    }
    double diff = 0;
    for (std::size_t j = 0; j < k; ++j) diff += std::abs(next[j] - pi[j]);
    if (diff <= tol) {
      result.pi = pi;
      result.iterations = it;
      return result;
    }
    if (allow_damping && it >= max_iters / 2) {
      for (std::size_t j = 0; j < k; ++j) pi[j] = 0.5 * (pi[j] + next[j]);
    } else {
      pi = next;
    }
  }
  throw NonConvergence("power iteration did not reach the tolerance");
}

std::vector<Symbol> simulate(const Scot& s, std::size_t steps, std::uint64_t seed,
                             const std::optional<Word>& init) {
  const ContextTree& t = s.tree();
  const std::size_t n = t.alphabet().size();
  const std::vector<Word>& states = t.contexts();
  // Per-leaf cumulative distributions in double precision.
  std::vector<std::vector<double>> cdf(states.size(), std::vector<double>(n));
  for (std::size_t i = 0; i < states.size(); ++i) {
    double acc = 0;
    for (std::size_t a = 0; a < n; ++a) {
      acc += static_cast<double>(s.dists()[i][a]);
      cdf[i][a] = acc;
    }
  }
  SplitMix64 rng(seed);
  std::size_t state;
  if (init) {
    state = state_index(states, *init);
  } else {
    StationaryResult st = stationary(build_markov(s));
    double u = rng.next_double();
    double acc = 0;
    state = states.size() - 1;
    for (std::size_t i = 0; i < st.pi.size(); ++i) {
      acc += st.pi[i];
      if (u < acc) {
        state = i;
        break;
      }
    }
  }
  std::vector<Symbol> out;
  out.reserve(steps);
  for (std::size_t step = 0; step < steps; ++step) {
    double u = rng.next_double();
    const std::vector<double>& c = cdf[state];
    Symbol a = static_cast<Symbol>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (u < c[i]) {
        a = static_cast<Symbol>(i);
        break;
      }
    }
    out.push_back(a);
    state = state_index(states, next_context(t, states[state], a));
  }
  return out;
}

Scot from_full_mc(const Alphabet& alphabet, std::size_t order,
                  std::vector<std::vector<Rational>> rows, bool exact) {
  const std::size_t n = alphabet.size();
  std::size_t expected = 1;
  for (std::size_t i = 0; i < order; ++i) {
    if (expected > 1000000 / n) throw BadParams("full chain table too large");
    expected *= n;
  }
  if (rows.size() != expected) {
    throw IncompleteTable("expected " + std::to_string(expected) + " histories, got " +
                          std::to_string(rows.size()));
  }
  std::unordered_set<Word, WordHash> internal;
  std::vector<Word> frontier{Word{}};
  for (std::size_t d = 1; d < order; ++d) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (Symbol a = 0; a < n; ++a) {
        Word child = w.prepended(a);
        internal.insert(child);
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  ContextTree tree = order == 0 ? trusted_tree(alphabet, {Word{}})
                                : tree_from_internal_nodes(alphabet, internal, true);
  return Scot(std::move(tree), std::move(rows), exact);
}

}  // namespace scotree
