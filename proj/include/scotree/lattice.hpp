#pragma once

#include "scotree/tree.hpp"

namespace scotree {

// a is contained in b at the root: every context of a is a postfix of some
// context of b. Reflexive and transitive. If `witness` is non-null and the
// result is false, it receives the first offending context of a in canonical
// order. Throws EmptyTree / AlphabetMismatch.
bool contained_at_root(const ContextTree& a, const ContextTree& b, Word* witness = nullptr);

// Every context of b has a postfix that is a context of a. Equivalent to
// contained_at_root(a, b) when both trees are complete, but not in general.
bool covers_at_root(const ContextTree& a, const ContextTree& b, Word* witness = nullptr);

// Union and intersection at the root. Both inputs must be complete and
// nonempty over the same alphabet; the results are complete. Implemented on
// node sets: the union (resp. intersection) of the node sets with leaves
// re-extracted. Throws NotComplete / EmptyTree / AlphabetMismatch.
ContextTree union_at_root(const ContextTree& a, const ContextTree& b);
ContextTree intersection_at_root(const ContextTree& a, const ContextTree& b);

}  // namespace scotree
