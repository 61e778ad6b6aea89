#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ede/digits.hpp"

namespace ede {

inline constexpr std::size_t kDefaultStateCap = 200000;

// Complete deterministic automaton over the digit alphabet of all p^t tuples.
//
// Transitions are a dense table: delta[state * |alphabet| + letter_index].
// Every state carries a free-form label recording where it came from (the
// fingerprint of a large type, or a pair of product components).
class Automaton {
 public:
  using State = std::uint32_t;

  Automaton(Alphabet alphabet, std::vector<State> transitions, std::vector<bool> finals,
            std::vector<std::string> labels, State initial);

  // Languages {} and Sigma* as one-state machines.
  static Automaton empty_language(const Alphabet& alphabet);
  static Automaton all_words(const Alphabet& alphabet);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t num_states() const { return finals_.size(); }
  State initial() const { return initial_; }
  bool is_final(State s) const { return finals_[s]; }
  const std::string& label(State s) const { return labels_[s]; }
  State next(State s, std::size_t letter) const { return delta_[s * alphabet_.size() + letter]; }
  State run(const DigitWord& u) const;

  friend bool operator==(const Automaton&, const Automaton&) = default;

 private:
  Alphabet alphabet_;
  std::vector<State> delta_;
  std::vector<bool> finals_;
  std::vector<std::string> labels_;
  State initial_;
};

// Throws AlphabetError if u contains a letter outside the alphabet.
bool accepts(const Automaton& a, const DigitWord& u);

// Reachable product constructions. Both throw AlphabetError on mismatched
// alphabets and CapacityError beyond state_cap states.
Automaton intersect(const Automaton& a, const Automaton& b, std::size_t state_cap = kDefaultStateCap);
Automaton unite(const Automaton& a, const Automaton& b, std::size_t state_cap = kDefaultStateCap);

// Accepts exactly { x u : a accepts u }; x becomes the least-significant letter.
Automaton prepend_letter(const Automaton& a, const DigitLetter& x);

// Same language except that the empty word is accepted iff `accept`.
Automaton with_empty_word(const Automaton& a, bool accept);

Automaton complement(const Automaton& a);

// Restriction to states reachable from the initial state, renumbered in
// breadth-first order over letter indices.
Automaton trim_unreachable(const Automaton& a);

// Moore partition refinement followed by renumbering; language-preserving.
Automaton minimize(const Automaton& a);

bool is_empty(const Automaton& a);

// Every accepted word of length <= max_len, ordered by length and then
// lexicographically by letter index from the first stored letter.
std::vector<DigitWord> enumerate(const Automaton& a, std::size_t max_len);

// Language equality on all words up to max_len.
bool same_language_up_to(const Automaton& a, const Automaton& b, std::size_t max_len);

std::string to_dot(const Automaton& a);
std::string to_json(const Automaton& a);
Automaton from_dot(std::string_view text);
Automaton from_json(std::string_view text);

}  // namespace ede
