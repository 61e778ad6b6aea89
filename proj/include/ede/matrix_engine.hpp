#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ede/digits.hpp"
#include "ede/fsa.hpp"
#include "ede/gf_poly.hpp"
#include "ede/scalar_engine.hpp"
#include "ede/types.hpp"

namespace ede {

// Square matrix over F_p[x_1..x_r], equivalently a polynomial in x with
// matrix coefficients. Entries are stored row-major.
class MatrixPolynomial {
 public:
  MatrixPolynomial(PrimeField field, std::size_t num_vars, std::size_t n);

  static MatrixPolynomial zero(PrimeField field, std::size_t num_vars, std::size_t n);
  static MatrixPolynomial identity(PrimeField field, std::size_t num_vars, std::size_t n);
  static MatrixPolynomial scalar(const Polynomial& c, std::size_t n);
  static MatrixPolynomial from_rows(const std::vector<std::vector<Polynomial>>& rows);

  std::size_t order() const { return n_; }
  const PrimeField& field() const { return field_; }
  std::size_t num_vars() const { return num_vars_; }

  const Polynomial& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Polynomial& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  bool is_zero() const;
  // Largest entry degree; kZeroDegree for the zero matrix.
  int degree() const;

  MatrixPolynomial& operator+=(const MatrixPolynomial& g);
  friend MatrixPolynomial operator+(MatrixPolynomial f, const MatrixPolynomial& g) {
    return f += g;
  }
  friend MatrixPolynomial operator*(const MatrixPolynomial& f, const MatrixPolynomial& g);
  MatrixPolynomial scaled(const Polynomial& c) const;
  MatrixPolynomial pow(std::uint64_t e) const;

  // Entrywise x -> x^p.
  MatrixPolynomial frobenius_substitute() const;
  // Entrywise weeding; x is central so the scalar decomposition applies per entry.
  MatrixPolynomial weed(const DigitLetter& y) const;
  std::vector<MatrixPolynomial> weed_all() const;

  // Laplace expansion; intended for the small orders used here.
  Polynomial determinant() const;

  std::size_t hash() const;
  std::string to_string() const;

  friend bool operator==(const MatrixPolynomial&, const MatrixPolynomial&) = default;
  friend bool operator<(const MatrixPolynomial& a, const MatrixPolynomial& b);

 private:
  void check_compatible(const MatrixPolynomial& g) const;

  PrimeField field_;
  std::size_t num_vars_;
  std::size_t n_;
  std::vector<Polynomial> entries_;
};

struct MatrixPolynomialHash {
  std::size_t operator()(const MatrixPolynomial& f) const { return f.hash(); }
};

// Polynomial in one indeterminate xi over F_p[x]: coefficient k multiplies xi^k.
using XiPolynomial = std::vector<Polynomial>;

XiPolynomial xi_constant(const Polynomial& c);
XiPolynomial xi_multiply(const XiPolynomial& a, const XiPolynomial& b);
XiPolynomial xi_pow(const XiPolynomial& a, std::uint64_t e);
XiPolynomial xi_scaled(const XiPolynomial& a, const Polynomial& c);
XiPolynomial xi_trimmed(XiPolynomial a);

// The entire standard form: rho on the subdiagonal, numerators in the last
// column. Its rational form has minimal polynomial xi^n - sum (num_i/rho) xi^i,
// which the caller asserts irreducible and separable.
struct CompanionSpec {
  std::size_t n;
  Polynomial rho;
  std::vector<Polynomial> numerators;

  void validate() const;
};

MatrixPolynomial companion_matrix(const CompanionSpec& spec);

// Horner evaluation of g at the companion matrix.
MatrixPolynomial eval_at_companion(const XiPolynomial& g, const CompanionSpec& spec);

// C' with companion^p * C' = C' * companion(x^p), together with the power of
// rho that was needed to clear the denominators of the rational conjugator.
struct Conjugator {
  MatrixPolynomial matrix;
  Polynomial clearing;
};

// Throws InputError when the conjugator is singular, which happens exactly
// when xi^p fails to generate the extension (e.g. an inseparable minimal
// polynomial).
Conjugator compute_conjugator(const CompanionSpec& spec);

MatrixPolynomial matrix_weed(const MatrixPolynomial& f, const DigitLetter& y);

// sum_i Q_i(B) * prod_k P_ik(B)^{n_k} = 0 with B the companion matrix.
struct MatrixEde {
  PrimeField field;
  std::size_t r;
  std::size_t t;
  CompanionSpec base;
  std::vector<XiPolynomial> q;
  std::vector<std::vector<XiPolynomial>> bases;

  std::size_t s() const { return q.size(); }
  void validate() const;
};

using MatrixSmallType = BasicSmallType<MatrixPolynomial>;
using MatrixLargeType = BasicLargeType<MatrixPolynomial>;

struct MatrixBuildTrace {
  Automaton automaton;
  std::vector<MatrixPolynomial> reachable_matrices;
  std::size_t num_small_types;
};

// Precomputes the companion matrix, the conjugator and the evaluated
// constants and bases of one equation.
class MatrixEngine {
 public:
  explicit MatrixEngine(MatrixEde ede);

  const MatrixEde& ede() const { return ede_; }
  const MatrixPolynomial& companion() const { return companion_; }
  const Conjugator& conjugator() const { return conjugator_; }
  const MatrixPolynomial& constant(std::size_t i) const { return q_.at(i); }
  const MatrixPolynomial& base(std::size_t i, std::size_t k) const { return bases_.at(i).at(k); }

  // prod_k P_ik(B)^{x_k} * C'.
  MatrixPolynomial factor(std::size_t i, const DigitLetter& x) const;
  MatrixPolynomial special_op(std::size_t i, const DigitLetter& x, const DigitLetter& y,
                              const MatrixPolynomial& f) const;
  DegreeBound degree_bound() const;

  MatrixSmallType initial_small_type() const { return MatrixSmallType{q_}; }
  MatrixLargeType initial_large_type() const;
  MatrixSmallType extend_small(const MatrixSmallType& tau, const DigitLetter& x,
                               const DigitLetter& y) const;
  MatrixLargeType extend_large(const MatrixLargeType& big, const DigitLetter& x) const;
  MatrixLargeType large_type_of_word(const DigitWord& u) const;

  MatrixBuildTrace build_traced(const BuildOptions& options = {}) const;
  Automaton build(const BuildOptions& options = {}) const { return build_traced(options).automaton; }

 private:
  void check_summand(std::size_t i) const;

  MatrixEde ede_;
  MatrixPolynomial companion_;
  Conjugator conjugator_;
  std::vector<MatrixPolynomial> q_;
  std::vector<std::vector<MatrixPolynomial>> bases_;
};

MatrixPolynomial matrix_special_op(const MatrixEde& ede, std::size_t i, const DigitLetter& x,
                                   const DigitLetter& y, const MatrixPolynomial& f);

// n0 = ceil((p r M + deg C') / (p-1)) with M the largest degree of an
// evaluated base; bound = max(n0, max deg Q_i(B)).
DegreeBound matrix_degree_bound(const MatrixEde& ede);

Automaton build_automaton_matrix(const MatrixEde& ede, const BuildOptions& options = {});

}  // namespace ede
