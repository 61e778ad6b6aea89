#include "ede/digits.hpp"

#include <algorithm>
#include <charconv>

#include "ede/errors.hpp"
#include "text_util.hpp"

namespace ede {

bool DigitLetter::is_zero() const {
  return std::all_of(digits.begin(), digits.end(), [](std::uint32_t d) { return d == 0; });
}

Alphabet::Alphabet(std::uint32_t p, std::size_t width, std::size_t max_size)
    : p_(p), width_(width), size_(1) {
  if (p < 2) throw RangeError("alphabet radix must be at least 2");
  for (std::size_t k = 0; k < width; ++k) {
    if (size_ > max_size / p) {
      throw CapacityError("alphabet of " + std::to_string(p) + "^" + std::to_string(width) +
                              " letters exceeds the limit of " + std::to_string(max_size),
                          size_);
    }
    size_ *= p;
  }
  if (size_ > max_size) {
    throw CapacityError("alphabet exceeds the limit of " + std::to_string(max_size), size_);
  }
}

DigitLetter Alphabet::letter(std::size_t index) const {
  if (index >= size_) throw RangeError("letter index out of range");
  DigitLetter x{std::vector<std::uint32_t>(width_, 0)};
  for (std::size_t k = width_; k-- > 0;) {
    x.digits[k] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return x;
}

bool Alphabet::contains(const DigitLetter& x) const {
  return x.width() == width_ &&
         std::all_of(x.digits.begin(), x.digits.end(), [&](std::uint32_t d) { return d < p_; });
}

std::size_t Alphabet::index_of(const DigitLetter& x) const {
  if (!contains(x)) {
    throw AlphabetError("letter (" + format_letter(x) + ") is not in the alphabet of width " +
                        std::to_string(width_) + " over base " + std::to_string(p_));
  }
  std::size_t index = 0;
  for (auto d : x.digits) index = index * p_ + d;
  return index;
}

std::vector<std::uint64_t> decode(const DigitWord& u, std::uint32_t p, std::size_t width) {
  std::vector<std::uint64_t> out(width, 0);
  // Horner from the most-significant letter down.
  for (std::size_t j = u.length(); j-- > 0;) {
    const auto& x = u.letters[j];
    if (x.width() != width) throw AlphabetError("letter width mismatch in word");
    for (std::size_t k = 0; k < width; ++k) {
      if (x.digits[k] >= p) throw RangeError("digit out of range for base " + std::to_string(p));
      if (__builtin_mul_overflow(out[k], std::uint64_t{p}, &out[k]) ||
          __builtin_add_overflow(out[k], std::uint64_t{x.digits[k]}, &out[k])) {
        throw RangeError("decoded value overflows 64 bits");
      }
    }
  }
  return out;
}

std::size_t min_length(std::span<const std::uint64_t> values, std::uint32_t p) {
  std::uint64_t m = 0;
  for (auto v : values) m = std::max(m, v);
  std::size_t len = 0;
  while (m > 0) {
    m /= p;
    ++len;
  }
  return len;
}

DigitWord encode(std::span<const std::uint64_t> values, std::uint32_t p, std::size_t len) {
  if (min_length(values, p) > len) {
    throw RangeError("word length " + std::to_string(len) + " too small for tuple (" +
                     format_tuple(values) + ")");
  }
  DigitWord u;
  std::vector<std::uint64_t> rest(values.begin(), values.end());
  u.letters.reserve(len);
  for (std::size_t j = 0; j < len; ++j) {
    DigitLetter x{std::vector<std::uint32_t>(values.size(), 0)};
    for (std::size_t k = 0; k < values.size(); ++k) {
      x.digits[k] = static_cast<std::uint32_t>(rest[k] % p);
      rest[k] /= p;
    }
    u.letters.push_back(std::move(x));
  }
  return u;
}

std::vector<std::uint32_t> psi_exponent(const DigitLetter& y) { return y.digits; }

std::vector<DigitLetter> all_letters(std::uint32_t p, std::size_t width, std::size_t max_size) {
  Alphabet sigma(p, width, max_size);
  std::vector<DigitLetter> out;
  out.reserve(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) out.push_back(sigma.letter(i));
  return out;
}

std::vector<std::uint64_t> parse_tuple(std::string_view text) {
  std::vector<std::uint64_t> out;
  const auto trimmed = detail::trim(text);
  if (trimmed.empty()) throw ParseError("empty tuple");
  for (auto part : detail::split(trimmed, ',')) {
    out.push_back(detail::parse_unsigned(part, "tuple component"));
  }
  return out;
}

std::string format_tuple(std::span<const std::uint64_t> values) {
  std::string s;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(values[k]);
  }
  return s;
}

DigitLetter parse_letter(std::string_view text) {
  DigitLetter x;
  for (auto part : detail::split(detail::trim(text), ',')) {
    const auto v = detail::parse_unsigned(part, "digit");
    if (v > UINT32_MAX) throw ParseError("digit too large");
    x.digits.push_back(static_cast<std::uint32_t>(v));
  }
  return x;
}

std::string format_letter(const DigitLetter& x) {
  std::string s;
  for (std::size_t k = 0; k < x.digits.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(x.digits[k]);
  }
  return s;
}

DigitWord parse_word(std::string_view text) {
  DigitWord u;
  const auto trimmed = detail::trim(text);
  if (trimmed.empty()) return u;
  for (auto part : detail::split(trimmed, ';')) {
    u.letters.push_back(parse_letter(part));
    if (u.letters.back().width() != u.letters.front().width()) {
      throw ParseError("letters of a word must share one width");
    }
  }
  return u;
}

std::string format_word(const DigitWord& u) {
  std::string s;
  for (std::size_t j = 0; j < u.letters.size(); ++j) {
    if (j) s += ';';
    s += format_letter(u.letters[j]);
  }
  return s;
}

}  // namespace ede
