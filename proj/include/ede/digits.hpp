#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ede {

// One letter of a digit alphabet: a fixed-width tuple of base-p digits.
struct DigitLetter {
  std::vector<std::uint32_t> digits;

  std::size_t width() const { return digits.size(); }
  bool is_zero() const;

  friend auto operator<=>(const DigitLetter&, const DigitLetter&) = default;
  friend bool operator==(const DigitLetter&, const DigitLetter&) = default;
};

// A word over a digit alphabet, stored least-significant letter first.
struct DigitWord {
  std::vector<DigitLetter> letters;

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  friend auto operator<=>(const DigitWord&, const DigitWord&) = default;
  friend bool operator==(const DigitWord&, const DigitWord&) = default;
};

inline constexpr std::size_t kDefaultMaxAlphabet = 4096;

// The alphabet of all p^width digit tuples. Letters are indexed so that index
// order is lexicographic tuple order: index = d_1 p^{w-1} + ... + d_w.
class Alphabet {
 public:
  Alphabet(std::uint32_t p, std::size_t width, std::size_t max_size = kDefaultMaxAlphabet);

  std::uint32_t p() const { return p_; }
  std::size_t width() const { return width_; }
  std::size_t size() const { return size_; }

  DigitLetter letter(std::size_t index) const;
  bool contains(const DigitLetter& x) const;
  // Throws AlphabetError for foreign letters.
  std::size_t index_of(const DigitLetter& x) const;
  DigitLetter zero_letter() const { return DigitLetter{std::vector<std::uint32_t>(width_, 0)}; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::uint32_t p_;
  std::size_t width_;
  std::size_t size_;
};

// phi / psi: component i is sum_j digit_i(letter_j) p^j. The empty word
// decodes to the all-zero tuple of the given width.
std::vector<std::uint64_t> decode(const DigitWord& u, std::uint32_t p, std::size_t width);

// Inverse of decode with exactly `len` letters, zero-padded at the
// most-significant end. Throws RangeError when len is too small.
DigitWord encode(std::span<const std::uint64_t> values, std::uint32_t p, std::size_t len);

// Number of base-p digits of the largest component (0 for the zero tuple).
std::size_t min_length(std::span<const std::uint64_t> values, std::uint32_t p);

// A Sigma_2 letter read as an exponent vector.
std::vector<std::uint32_t> psi_exponent(const DigitLetter& y);

std::vector<DigitLetter> all_letters(std::uint32_t p, std::size_t width,
                                     std::size_t max_size = kDefaultMaxAlphabet);

// Text forms: tuples "3,5"; words "1,2;2,0" (letters separated by ';', LSD
// first); the empty word is the empty string.
std::vector<std::uint64_t> parse_tuple(std::string_view text);
std::string format_tuple(std::span<const std::uint64_t> values);
DigitLetter parse_letter(std::string_view text);
std::string format_letter(const DigitLetter& x);
DigitWord parse_word(std::string_view text);
std::string format_word(const DigitWord& u);

}  // namespace ede
