#pragma once

#include <stdexcept>
#include <string>

namespace ede {

// Base of everything the library throws on bad input or exhausted limits.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands from different fields or with different variable counts.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A value outside its admissible range (digit, index, word length, overflow).
class RangeError : public Error {
 public:
  using Error::Error;
};

// A letter that does not belong to the automaton's alphabet.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

// A configured limit (alphabet size, state count, oracle work) was exceeded.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::size_t discovered)
      : Error(what), discovered_(discovered) {}
  std::size_t discovered() const { return discovered_; }

 private:
  std::size_t discovered_;
};

// Malformed text: polynomial strings, tuples, words, spec files, DOT/JSON.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Mathematically unusable input, e.g. a companion matrix whose conjugator is
// singular because the minimal polynomial is not separable.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace ede
