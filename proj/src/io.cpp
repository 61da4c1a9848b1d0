#include "scotree/io.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>
#include <unordered_map>

namespace scotree::io {

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(pos, end - pos);
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<std::string> tokens = split_tokens(line);
    if (!tokens.empty()) out.push_back({number, std::move(tokens)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Decimal digit accumulation; BigInt's string constructor would treat a
// leading zero as an octal prefix.
BigInt digits_to_int(std::string_view s) {
  BigInt v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

// num/den rational or decimal (optional exponent). Decimals become exact
// decimal fractions. Returns the value and whether rational syntax was used.
std::pair<Rational, bool> parse_probability(const std::string& tok, std::size_t line) {
  if (std::size_t slash = tok.find('/'); slash != std::string::npos) {
    std::string num = tok.substr(0, slash);
    std::string den = tok.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError(line, "malformed rational '" + tok + "'");
    }
    BigInt d = digits_to_int(den);
    if (d == 0) throw ParseError(line, "zero denominator in '" + tok + "'");
    return {Rational(digits_to_int(num), d), true};
  }
  std::size_t i = 0;
  std::string digits;
  long long scale = 0;
  bool any = false;
  while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) {
    digits += tok[i++];
    any = true;
  }
  if (i < tok.size() && tok[i] == '.') {
    ++i;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) {
      digits += tok[i++];
      --scale;
      any = true;
    }
  }
  if (i < tok.size() && (tok[i] == 'e' || tok[i] == 'E')) {
    ++i;
    bool neg = false;
    if (i < tok.size() && (tok[i] == '+' || tok[i] == '-')) neg = tok[i++] == '-';
    std::string exp;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) exp += tok[i++];
    if (exp.empty()) throw ParseError(line, "malformed probability '" + tok + "'");
    scale += (neg ? -1 : 1) * std::stoll(exp);
  }
  if (!any || i != tok.size()) throw ParseError(line, "malformed probability '" + tok + "'");
  Rational value(digits_to_int(digits), 1);
  BigInt pow10 = 1;
  for (long long j = 0; j < (scale < 0 ? -scale : scale); ++j) pow10 *= 10;
  if (scale < 0) {
    value /= Rational(pow10);
  } else {
    value *= Rational(pow10);
  }
  return {value, false};
}

struct ParsedHeader {
  bool is_scot;
  Alphabet alphabet;
  std::size_t next_index;
  std::vector<Line> lines;
};

ParsedHeader parse_header(std::string_view text) {
  std::vector<Line> lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header (expected 'ctree v1' or 'scot v1')");
  const Line& h = lines[0];
  bool is_scot;
  if (h.tokens.size() == 2 && h.tokens[0] == "ctree" && h.tokens[1] == "v1") {
    is_scot = false;
  } else if (h.tokens.size() == 2 && h.tokens[0] == "scot" && h.tokens[1] == "v1") {
    is_scot = true;
  } else {
    throw ParseError(h.number, "unrecognized header (expected 'ctree v1' or 'scot v1')");
  }
  if (lines.size() < 2 || lines[1].tokens[0] != "alphabet") {
    throw ParseError(lines.size() < 2 ? h.number : lines[1].number,
                     "expected an 'alphabet' line after the header");
  }
  const Line& a = lines[1];
  if (a.tokens.size() < 2) throw ParseError(a.number, "alphabet needs at least one token");
  std::vector<std::string> tokens(a.tokens.begin() + 1, a.tokens.end());
  for (const std::string& t : tokens) {
    if (t == ":") throw ParseError(a.number, "':' is not a valid alphabet token");
  }
  Alphabet alphabet = [&] {
    try {
      return Alphabet(std::move(tokens));
    } catch (const Error& e) {
      throw ParseError(a.number, e.what());
    }
  }();
  return ParsedHeader{is_scot, std::move(alphabet), 2, std::move(lines)};
}

// Incremental postfix-freeness bookkeeping so violations carry line numbers.
class ContextAccumulator {
 public:
  explicit ContextAccumulator(const Alphabet& alphabet) : alphabet_(alphabet) {}

  Word add(const std::vector<std::string>& tokens, std::size_t begin, std::size_t end,
           std::size_t line) {
    std::vector<Symbol> syms;
    syms.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
      auto idx = alphabet_.index_of(tokens[i]);
      if (!idx) throw ParseError(line, "unknown symbol '" + tokens[i] + "'");
      syms.push_back(*idx);
    }
    if (syms.size() > kMaxParseDepth) {
      throw ParseError(line, "context deeper than " + std::to_string(kMaxParseDepth));
    }
    Word w(std::move(syms));
    auto it = nodes_.find(w);
    if (it != nodes_.end()) {
      throw ParseError(line, it->second
                                 ? "duplicate context '" + alphabet_.render(w) + "'"
                                 : "context '" + alphabet_.render(w) +
                                       "' is a postfix of an earlier context");
    }
    if (w.empty() && !nodes_.empty()) {
      throw ParseError(line, "the empty context cannot coexist with other contexts");
    }
    if (saw_empty_ && !w.empty()) {
      throw ParseError(line, "the empty context cannot coexist with other contexts");
    }
    for (std::size_t len = w.size(); len-- > 0;) {
      Word s = w.suffix(len);
      auto sit = nodes_.find(s);
      if (sit != nodes_.end() && sit->second) {
        throw ParseError(line, "earlier context '" + alphabet_.render(s) +
                                   "' is a postfix of context '" + alphabet_.render(w) + "'");
      }
    }
    if (w.empty()) saw_empty_ = true;
    for (std::size_t len = w.size(); len-- > 0;) {
      Word s = w.suffix(len);
      if (!nodes_.count(s)) nodes_.emplace(std::move(s), false);
    }
    nodes_[w] = true;
    contexts_.push_back(w);
    return w;
  }

  std::vector<Word> take() { return std::move(contexts_); }

 private:
  const Alphabet& alphabet_;
  std::unordered_map<Word, bool, WordHash> nodes_;
  std::vector<Word> contexts_;
  bool saw_empty_ = false;
};

std::string format_decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string format_probability(const Rational& p, bool exact) {
  if (exact) {
    std::ostringstream os;
    os << p;
    return os.str();
  }
  return format_decimal(static_cast<double>(p));
}

ContextTree parse_tree(std::string_view text) {
  ParsedHeader h = parse_header(text);
  if (h.is_scot) throw ParseError(h.lines[0].number, "expected a 'ctree v1' file");
  ContextAccumulator acc(h.alphabet);
  for (std::size_t i = h.next_index; i < h.lines.size(); ++i) {
    const Line& line = h.lines[i];
    if (line.tokens[0] != "context") {
      throw ParseError(line.number, "expected a 'context' line");
    }
    acc.add(line.tokens, 1, line.tokens.size(), line.number);
  }
  std::vector<Word> contexts = acc.take();
  if (contexts.empty()) throw ParseError(h.lines.back().number, "file defines no contexts");
  return from_contexts(h.alphabet, std::move(contexts));
}

Scot parse_scot(std::string_view text) {
  ParsedHeader h = parse_header(text);
  if (!h.is_scot) throw ParseError(h.lines[0].number, "expected a 'scot v1' file");
  ContextAccumulator acc(h.alphabet);
  const std::size_t n = h.alphabet.size();
  std::vector<std::pair<Word, std::vector<Rational>>> rows;
  bool exact = true;
  for (std::size_t i = h.next_index; i < h.lines.size(); ++i) {
    const Line& line = h.lines[i];
    if (line.tokens[0] != "context") {
      throw ParseError(line.number, "expected a 'context' line");
    }
    std::size_t colon = 0;
    for (colon = 1; colon < line.tokens.size(); ++colon) {
      if (line.tokens[colon] == ":") break;
    }
    if (colon == line.tokens.size()) {
      throw ParseError(line.number, "scot context lines need ': <probabilities>'");
    }
    Word w = acc.add(line.tokens, 1, colon, line.number);
    if (line.tokens.size() - colon - 1 != n) {
      throw ParseError(line.number, "expected " + std::to_string(n) + " probabilities");
    }
    std::vector<Rational> dist;
    Rational sum = 0;
    for (std::size_t j = colon + 1; j < line.tokens.size(); ++j) {
      auto [p, rational_syntax] = parse_probability(line.tokens[j], line.number);
      if (p < 0 || p > 1) throw ParseError(line.number, "probability out of range");
      exact = exact && rational_syntax;
      sum += p;
      dist.push_back(std::move(p));
    }
    Rational err = sum - 1;
    if (err < 0) err = -err;
    if (err > Rational(1, 1000000000)) {
      throw ParseError(line.number, "probabilities do not sum to 1");
    }
    rows.emplace_back(std::move(w), std::move(dist));
  }
  if (rows.empty()) throw ParseError(h.lines.back().number, "file defines no contexts");
  std::vector<Word> contexts;
  contexts.reserve(rows.size());
  for (const auto& [w, d] : rows) contexts.push_back(w);
  ContextTree tree = from_contexts(h.alphabet, std::move(contexts));
  // Reorder the distributions to canonical context order.
  std::unordered_map<Word, std::size_t, WordHash> pos;
  for (std::size_t i = 0; i < rows.size(); ++i) pos.emplace(rows[i].first, i);
  std::vector<std::vector<Rational>> dists;
  dists.reserve(rows.size());
  for (const Word& c : tree.contexts()) dists.push_back(std::move(rows[pos.at(c)].second));
  return Scot(std::move(tree), std::move(dists), exact);
}

std::variant<ContextTree, Scot> parse_any(std::string_view text) {
  ParsedHeader h = parse_header(text);
  if (h.is_scot) return parse_scot(text);
  return parse_tree(text);
}

std::string render_tree(const ContextTree& t) {
  std::string out = "ctree v1\nalphabet";
  for (const std::string& tok : t.alphabet().tokens()) out += " " + tok;
  out += "\n";
  for (const Word& c : t.contexts()) {
    out += "context";
    for (std::size_t i = 0; i < c.size(); ++i) out += " " + t.alphabet().token(c[i]);
    out += "\n";
  }
  return out;
}

std::string render_scot(const Scot& s) {
  std::string out = "scot v1\nalphabet";
  const ContextTree& t = s.tree();
  for (const std::string& tok : t.alphabet().tokens()) out += " " + tok;
  out += "\n";
  for (std::size_t i = 0; i < t.contexts().size(); ++i) {
    const Word& c = t.contexts()[i];
    out += "context";
    for (std::size_t j = 0; j < c.size(); ++j) out += " " + t.alphabet().token(c[j]);
    out += " :";
    for (const Rational& p : s.dists()[i]) out += " " + format_probability(p, s.exact());
    out += "\n";
  }
  return out;
}

std::string render_markov_csv(const MarkovChain& mc) {
  auto state_name = [&](const Word& w) { return mc.alphabet.render(w, "."); };
  std::string out = "state";
  for (const Word& s : mc.states) out += "," + state_name(s);
  out += "\n";
  for (std::size_t i = 0; i < mc.states.size(); ++i) {
    out += state_name(mc.states[i]);
    for (const Rational& p : mc.matrix[i]) out += "," + format_probability(p, mc.exact);
    out += "\n";
  }
  return out;
}

}  // namespace scotree::io
