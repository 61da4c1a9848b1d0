#include "scotree/examples.hpp"

namespace scotree::examples {

ContextTree comb(std::size_t n, std::size_t depth) {
  if (n < 2) throw BadParams("comb requires an alphabet of size at least 2");
  if (depth < 1) throw BadParams("comb requires depth at least 1");
  Alphabet alphabet = Alphabet::decimal(n);
  std::unordered_set<Word, WordHash> internal;
  Word spine;
  for (std::size_t d = 1; d + 1 <= depth; ++d) {
    spine = spine.prepended(0);
    internal.insert(spine);
  }
  return tree_from_internal_nodes(alphabet, internal, true);
}

ContextTree sparse_example() {
  Alphabet alphabet = Alphabet::decimal(2);
  // Leaf words read off the figure, oldest symbol first.
  std::vector<Word> contexts = {
      Word{1},
      Word{0, 0},
      Word{1, 1, 0},
      Word{1, 0, 1, 0},
      Word{0, 0, 0, 1, 0},
      Word{0, 1, 0, 0, 1, 0},
      Word{1, 1, 0, 0, 1, 0},
  };
  return from_contexts(alphabet, std::move(contexts));
}

ContextTree minimal_full_mc(std::size_t depth) {
  if (depth < 3) throw BadParams("minimal_full_mc requires depth at least 3");
  Alphabet alphabet = Alphabet::decimal(2);
  std::vector<Word> contexts;
  contexts.push_back(Word{1});
  // Every word of length `len`, extended by `tail`.
  auto add_family = [&contexts](std::size_t len, const std::vector<Symbol>& tail) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      std::vector<Symbol> syms;
      syms.reserve(len + tail.size());
      for (std::size_t i = 0; i < len; ++i) {
        syms.push_back(static_cast<Symbol>((bits >> (len - 1 - i)) & 1));
      }
      syms.insert(syms.end(), tail.begin(), tail.end());
      contexts.emplace_back(std::move(syms));
    }
  };
  add_family(depth - 3, {0, 0});
  add_family(depth - 2, {1, 0});
  return trusted_tree(alphabet, std::move(contexts));
}

ContextTree wide_r2(std::size_t n, std::size_t depth) {
  if (n < 2) throw BadParams("wide_r2 requires an alphabet of size at least 2");
  if (depth < 4) throw BadParams("wide_r2 requires depth at least 4");
  Alphabet alphabet = Alphabet::decimal(n);
  std::unordered_set<Word, WordHash> internal;
  // Spine: level d carries label a_min(d, n); deeper levels extend the word
  // into the past.
  Word spine;
  for (std::size_t d = 1; d + 2 <= depth; ++d) {
    Symbol label = static_cast<Symbol>(std::min(d, n) - 1);
    spine = spine.prepended(label);
    internal.insert(spine);
  }
  // Full fan of internal nodes below the spine tip.
  for (Symbol a = 0; a < n; ++a) internal.insert(spine.prepended(a));
  return tree_from_internal_nodes(alphabet, internal, true);
}

}  // namespace scotree::examples
