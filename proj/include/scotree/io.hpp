#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "scotree/scot.hpp"
#include "scotree/tree.hpp"

namespace scotree::io {

// Line-based UTF-8 text format. `#` starts a comment and blank lines are
// ignored. Header `ctree v1` or `scot v1`, then
//   alphabet <tok> ... <tok>
//   context <tok> ... <tok>              (ctree: oldest symbol first)
//   context <tok> ... <tok> : <p> ... <p>  (scot: probabilities in alphabet
//                                            order, decimal or num/den)
// Canonical output renders contexts in canonical order and is byte-identical
// across runs.

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line(line) {}
  std::size_t line;
};

// Contexts longer than this are rejected at parse time.
inline constexpr std::size_t kMaxParseDepth = 32;

ContextTree parse_tree(std::string_view text);
Scot parse_scot(std::string_view text);
std::variant<ContextTree, Scot> parse_any(std::string_view text);

std::string render_tree(const ContextTree& t);
std::string render_scot(const Scot& s);

// CSV: header row `state,<ctx>,...` followed by one row per source state.
// Contexts are rendered oldest-first with symbols joined by `.`; entries are
// rationals in exact mode and 17-significant-digit decimals otherwise.
std::string render_markov_csv(const MarkovChain& mc);

// Formatting helpers shared with the CLI.
std::string format_probability(const Rational& p, bool exact);

}  // namespace scotree::io
