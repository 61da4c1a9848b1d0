#include "scotree/alphabet.hpp"

#include "scotree/errors.hpp"

namespace scotree {

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty()) throw BadParams("alphabet must contain at least one token");
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (tokens_[i].empty()) throw BadParams("alphabet tokens must be non-empty");
    auto [it, inserted] = index_.emplace(tokens_[i], static_cast<Symbol>(i));
    if (!inserted) throw BadParams("duplicate alphabet token '" + tokens_[i] + "'");
  }
}

Alphabet Alphabet::decimal(std::size_t n) {
  std::vector<std::string> tokens;
  tokens.reserve(n);
  for (std::size_t i = 0; i < n; ++i) tokens.push_back(std::to_string(i));
  return Alphabet(std::move(tokens));
}

std::optional<Symbol> Alphabet::index_of(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string Alphabet::render(const Word& w, std::string_view sep) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += sep;
    out += tokens_[w[i]];
  }
  return out;
}

}  // namespace scotree
