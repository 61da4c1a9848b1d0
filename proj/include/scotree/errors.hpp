#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "scotree/word.hpp"

namespace scotree {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyTree : public Error {
 public:
  EmptyTree() : Error("operation requires a nonempty tree") {}
  using Error::Error;
};

class NotComplete : public Error {
 public:
  using Error::Error;
};

class AlphabetMismatch : public Error {
 public:
  AlphabetMismatch() : Error("trees are over different alphabets") {}
  using Error::Error;
};

class InvalidSymbol : public Error {
 public:
  InvalidSymbol(Symbol symbol, std::size_t alphabet_size)
      : Error("symbol index " + std::to_string(symbol) + " out of range (alphabet size " +
              std::to_string(alphabet_size) + ")"),
        symbol(symbol) {}
  Symbol symbol;
};

// A word that is a (possibly improper) postfix of another word in the same
// context set; `inner` is the postfix of `outer`.
class PostfixViolation : public Error {
 public:
  PostfixViolation(Word inner, Word outer, const std::string& what)
      : Error(what), inner(std::move(inner)), outer(std::move(outer)) {}
  Word inner;
  Word outer;
};

class NotPerfectMemory : public Error {
 public:
  using Error::Error;
};

class NotContained : public Error {
 public:
  using Error::Error;
};

class UnknownContext : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

class IncompleteTable : public Error {
 public:
  using Error::Error;
};

class InvalidDistribution : public Error {
 public:
  using Error::Error;
};

class BadParams : public Error {
 public:
  using Error::Error;
};

}  // namespace scotree
