#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "scotree/word.hpp"

namespace scotree {

// An ordered finite symbol set. Token order defines the symbol indices used
// by Word.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> tokens);

  // Alphabet with tokens "0", "1", ..., "n-1".
  static Alphabet decimal(std::size_t n);

  std::size_t size() const { return tokens_.size(); }
  const std::string& token(Symbol s) const { return tokens_[s]; }
  const std::vector<std::string>& tokens() const { return tokens_; }
  std::optional<Symbol> index_of(std::string_view token) const;

  // Tokens oldest first, joined by `sep`. The empty word renders as "".
  std::string render(const Word& w, std::string_view sep = " ") const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.tokens_ == b.tokens_;
  }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, Symbol> index_;
};

}  // namespace scotree
