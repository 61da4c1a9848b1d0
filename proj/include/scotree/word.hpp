#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace scotree {

using Symbol = std::uint32_t;

// A finite symbol sequence stored oldest symbol first: the last element is
// the most recent symbol, i.e. the letter adjacent to the root on a context
// path. "Postfix" therefore always means a trailing segment (the most recent
// part of the history).
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}

  bool empty() const { return symbols_.empty(); }
  std::size_t size() const { return symbols_.size(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol first() const { return symbols_.front(); }
  Symbol last() const { return symbols_.back(); }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  // One time step later: a becomes the newest symbol.
  Word appended(Symbol a) const {
    std::vector<Symbol> s(symbols_);
    s.push_back(a);
    return Word(std::move(s));
  }

  // One symbol further into the past.
  Word prepended(Symbol a) const {
    std::vector<Symbol> s;
    s.reserve(symbols_.size() + 1);
    s.push_back(a);
    s.insert(s.end(), symbols_.begin(), symbols_.end());
    return Word(std::move(s));
  }

  // Removes the newest (root-adjacent) symbol.
  Word dropped_last() const {
    return Word(std::vector<Symbol>(symbols_.begin(), symbols_.end() - 1));
  }

  // Removes the oldest symbol.
  Word dropped_first() const {
    return Word(std::vector<Symbol>(symbols_.begin() + 1, symbols_.end()));
  }

  // Trailing segment of the given length (the most recent `len` symbols).
  Word suffix(std::size_t len) const {
    return Word(std::vector<Symbol>(symbols_.end() - static_cast<std::ptrdiff_t>(len),
                                    symbols_.end()));
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> symbols_;
};

// v is a postfix of s iff s ends with v. The empty word is a postfix of
// every word, and every word is a postfix of itself.
inline bool is_postfix(const Word& v, const Word& s) {
  if (v.size() > s.size()) return false;
  const std::size_t off = s.size() - v.size();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != s[off + i]) return false;
  }
  return true;
}

// Canonical order: length ascending, then lexicographic reading the newest
// symbol first. This is root-to-leaf trie order and is used everywhere a
// deterministic ordering is required (serialization, witnesses, tie-breaks).
inline bool canonical_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
      h ^= x;
      h *= 1099511628211ull;
    };
    mix(w.size());
    for (Symbol s : w.symbols()) mix(s + 1);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace scotree
