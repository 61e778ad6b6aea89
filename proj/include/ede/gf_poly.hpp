#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ede/digits.hpp"

namespace ede {

// The prime field F_p. Elements are plain uint32_t values kept in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  std::uint32_t reduce(std::int64_t v) const;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t inv(std::uint32_t a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

// Total degree of the zero polynomial. Compares below every real degree so
// that "deg f <= N" holds vacuously for f = 0.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

using Exponents = std::vector<std::uint32_t>;

// Sparse multivariate polynomial over F_p in a fixed number of variables.
//
// Terms are kept sorted by ascending lexicographic exponent vector with no
// zero coefficients, so structural equality is polynomial equality. Exponent
// vectors are stored flattened: term i occupies exps_[i*r .. i*r + r).
class Polynomial {
 public:
  Polynomial(PrimeField field, std::size_t num_vars);

  static Polynomial zero(PrimeField field, std::size_t num_vars);
  static Polynomial constant(PrimeField field, std::size_t num_vars, std::int64_t c);
  static Polynomial variable(PrimeField field, std::size_t num_vars, std::size_t k);
  static Polynomial monomial(PrimeField field, std::span<const std::uint32_t> exps,
                             std::int64_t c = 1);

  // Builds a canonical polynomial from arbitrary (possibly repeated,
  // unreduced) terms.
  static Polynomial from_terms(PrimeField field, std::size_t num_vars,
                               std::vector<std::pair<Exponents, std::int64_t>> terms);

  const PrimeField& field() const { return field_; }
  std::size_t num_vars() const { return num_vars_; }
  std::size_t num_terms() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const;

  std::span<const std::uint32_t> exponents(std::size_t term) const {
    return {exps_.data() + term * num_vars_, num_vars_};
  }
  std::uint32_t coefficient(std::size_t term) const { return coeffs_[term]; }
  std::uint32_t coefficient_of(std::span<const std::uint32_t> exps) const;

  int total_degree() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial& operator*=(const Polynomial& g);
  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);

  Polynomial scaled(std::uint32_t c) const;
  Polynomial pow(std::uint64_t e) const;

  // f(x1^p, ..., xr^p).
  Polynomial frobenius_substitute() const;

  // Component f_y of the unique decomposition f = sum_y f_y(x^p) * x^y, where
  // y ranges over residue vectors in [0,p)^r.
  Polynomial weed(std::span<const std::uint32_t> residue) const;
  Polynomial weed(const DigitLetter& y) const { return weed(std::span(y.digits)); }

  // All p^r weedings at once; entry k belongs to the residue vector whose
  // digits, read most-significant first, spell k in base p.
  std::vector<Polynomial> weed_all() const;

  // Exact quotient f / g if g divides f, otherwise empty.
  std::optional<Polynomial> divide_exact(const Polynomial& g) const;

  std::size_t hash() const;

  // "c:e1,...,er + c:e1,...,er", terms in descending exponent order; "0" for
  // the zero polynomial.
  std::string to_string() const;
  static Polynomial parse(PrimeField field, std::size_t num_vars, std::string_view text);

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  // Arbitrary but fixed total order, used only for canonical set layouts.
  friend bool operator<(const Polynomial& a, const Polynomial& b);

 private:
  void check_compatible(const Polynomial& g) const;

  PrimeField field_;
  std::size_t num_vars_;
  std::vector<std::uint32_t> exps_;
  std::vector<std::uint32_t> coeffs_;
};

// Free-function spellings of the core operations.
Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial mul(const Polynomial& f, const Polynomial& g);
int total_degree(const Polynomial& f);
Polynomial frobenius_substitute(const Polynomial& f);
Polynomial weed(const Polynomial& f, const DigitLetter& y);

// Applies weeding letter by letter, least-significant (first stored) letter
// first; the empty word leaves f unchanged.
Polynomial weed_word(const Polynomial& f, const DigitWord& v);

struct PolynomialHash {
  std::size_t operator()(const Polynomial& f) const { return f.hash(); }
};

}  // namespace ede
