#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "scotree/lattice.hpp"
#include "scotree/pm.hpp"
#include "scotree/random_trees.hpp"

using namespace scotree;
using fixtures::binary;

namespace {

// Literal context-set constructions for union and intersection at the root,
// used as an independent route against the node-set implementation:
//   intersection keeps contexts that are postfixes of a context of the other
//   tree; union keeps contexts that extend a context of the other tree.
std::vector<Word> literal_intersection(const ContextTree& a, const ContextTree& b) {
  std::vector<Word> out;
  auto keep = [](const ContextTree& from, const ContextTree& other, std::vector<Word>& acc) {
    for (const Word& u : from.contexts()) {
      for (const Word& c : other.contexts()) {
        if (is_postfix(u, c)) {
          acc.push_back(u);
          break;
        }
      }
    }
  };
  keep(a, b, out);
  keep(b, a, out);
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Word> literal_union(const ContextTree& a, const ContextTree& b) {
  std::vector<Word> out;
  auto keep = [](const ContextTree& from, const ContextTree& other, std::vector<Word>& acc) {
    for (const Word& u : from.contexts()) {
      for (const Word& c : other.contexts()) {
        if (is_postfix(c, u)) {
          acc.push_back(u);
          break;
        }
      }
    }
  };
  keep(a, b, out);
  keep(b, a, out);
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Word> context_set_intersection(const ContextTree& a, const ContextTree& b) {
  std::vector<Word> out;
  for (const Word& u : a.contexts()) {
    if (b.is_context(u)) out.push_back(u);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Word> context_set_union(const ContextTree& a, const ContextTree& b) {
  std::vector<Word> out = a.contexts();
  for (const Word& u : b.contexts()) {
    if (!a.is_context(u)) out.push_back(u);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace

TEST_CASE("containment at the root on the reference pair") {
  ContextTree full = fixtures::square_tree();           // {00, 10, 01, 11}
  ContextTree missing = fixtures::missing_leaf_tree();  // {00, 10, 01}

  CHECK(contained_at_root(missing, full));

  Word witness;
  CHECK_FALSE(contained_at_root(full, missing, &witness));
  CHECK(witness == Word{1, 1});

  CHECK(contained_at_root(fixtures::root_only_tree(), fixtures::seven_leaf_pm_tree()));
  CHECK_THROWS_AS(contained_at_root(ContextTree(binary()), full), EmptyTree);
  CHECK_THROWS_AS(contained_at_root(full, from_contexts(Alphabet::decimal(3), {Word{}})),
                  AlphabetMismatch);
}

TEST_CASE("covers_at_root differs from containment on incomplete trees") {
  ContextTree full = fixtures::square_tree();
  ContextTree missing = fixtures::missing_leaf_tree();

  // Every context of the smaller tree has a postfix among the full tree's
  // contexts, yet the full tree is not contained in the smaller one...
  CHECK(covers_at_root(full, missing));
  CHECK_FALSE(contained_at_root(full, missing));
  // ...and the smaller tree is contained in the full one although 11 has no
  // postfix among its contexts.
  CHECK(contained_at_root(missing, full));
  Word witness;
  CHECK_FALSE(covers_at_root(missing, full, &witness));
  CHECK(witness == Word{1, 1});

  CHECK(covers_at_root(full, full));
  CHECK(covers_at_root(fixtures::depth_one_tree(), fixtures::seven_leaf_pm_tree()));
}

TEST_CASE("containment equals covering on complete pairs") {
  SplitMix64 rng(404);
  for (int i = 0; i < 600; ++i) {
    Alphabet a = Alphabet::decimal(2 + rng.next_below(3));
    ContextTree x = random_complete_tree(rng, a, 5);
    ContextTree y = random_complete_tree(rng, a, 5);
    CHECK(contained_at_root(x, y) == covers_at_root(x, y));
    CHECK(contained_at_root(y, x) == covers_at_root(y, x));
  }
}

TEST_CASE("union and intersection reproduce the literal context-set formulas") {
  SplitMix64 rng(8080);
  for (int i = 0; i < 400; ++i) {
    Alphabet a = Alphabet::decimal(2 + rng.next_below(3));
    ContextTree x = random_complete_tree(rng, a, 5);
    ContextTree y = random_complete_tree(rng, a, 5);
    ContextTree u = union_at_root(x, y);
    ContextTree n = intersection_at_root(x, y);
    CHECK(is_complete(u));
    CHECK(is_complete(n));
    CHECK(u.contexts() == literal_union(x, y));
    CHECK(n.contexts() == literal_intersection(x, y));
  }
}

TEST_CASE("union and intersection on the reference trees") {
  ContextTree seven = fixtures::seven_leaf_pm_tree();
  ContextTree six = fixtures::six_leaf_gap_tree();
  ContextTree root = fixtures::root_only_tree();

  CHECK(union_at_root(seven, root) == seven);
  CHECK(intersection_at_root(seven, root) == root);
  CHECK(union_at_root(seven, seven) == seven);

  // The six-leaf tree's node set is a subset of the seven-leaf tree's.
  CHECK(union_at_root(six, seven) == seven);
  CHECK(intersection_at_root(six, seven) == six);

  CHECK_THROWS_AS(union_at_root(seven, fixtures::missing_leaf_tree()), NotComplete);
  CHECK_THROWS_AS(intersection_at_root(seven, fixtures::missing_leaf_tree()), NotComplete);
}

TEST_CASE("lattice identities on random complete pairs") {
  SplitMix64 rng(777);
  for (int i = 0; i < 400; ++i) {
    Alphabet a = Alphabet::decimal(2 + rng.next_below(2));
    ContextTree x = random_complete_tree(rng, a, 5);
    ContextTree y = random_complete_tree(rng, a, 5);
    ContextTree u = union_at_root(x, y);
    ContextTree n = intersection_at_root(x, y);

    // Commutativity and idempotence.
    CHECK(union_at_root(y, x) == u);
    CHECK(intersection_at_root(y, x) == n);
    CHECK(union_at_root(x, x) == x);
    CHECK(intersection_at_root(x, x) == x);

    // Order: x ∩ y ⊆ x ⊆ x ∪ y.
    CHECK(contained_at_root(n, x));
    CHECK(contained_at_root(x, u));

    // Absorption.
    CHECK(union_at_root(x, n) == x);
    CHECK(intersection_at_root(x, u) == x);

    // As plain context sets: (x∩y)* ∩ (x∪y)* = x* ∩ y* and the union
    // counterpart.
    CHECK(context_set_intersection(n, u) == context_set_intersection(x, y));
    CHECK(context_set_union(n, u) == context_set_union(x, y));

    // Associativity with a third tree.
    ContextTree z = random_complete_tree(rng, a, 4);
    CHECK(union_at_root(union_at_root(x, y), z) == union_at_root(x, union_at_root(y, z)));
    CHECK(intersection_at_root(intersection_at_root(x, y), z) ==
          intersection_at_root(x, intersection_at_root(y, z)));
  }
}
