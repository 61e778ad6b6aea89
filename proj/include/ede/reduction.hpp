#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ede/digits.hpp"
#include "ede/fsa.hpp"
#include "ede/gf_poly.hpp"
#include "ede/matrix_engine.hpp"
#include "ede/scalar_engine.hpp"

namespace ede {

// poly_coeff(n) * Q * prod_k P_k^{n_k}. poly_coeff is a polynomial over F_p in
// the t unknowns; absent means 1. Q and the bases are xi-polynomials, which
// for the scalar ring have at most one coefficient.
struct Summand {
  std::optional<Polynomial> poly_coeff;
  XiPolynomial q;
  std::vector<XiPolynomial> bases;
};

struct Equation {
  std::vector<Summand> summands;

  bool has_poly_coeffs() const;
};

// A system of equations sharing p, r, t and the ring. Without a companion
// spec the ring is F_p[x_1..x_r]; with one it is F_p[x][B].
struct SystemSpec {
  PrimeField field;
  std::size_t r;
  std::size_t t;
  std::optional<CompanionSpec> companion;
  std::vector<Equation> equations;

  bool is_matrix() const { return companion.has_value(); }
  // Throws StructuralError on inconsistent shapes or rings.
  void validate() const;
};

// Conversions for polynomial-free equations. Both throw StructuralError if a
// summand still carries a poly_coeff or the ring does not match.
ScalarEde to_scalar_ede(const SystemSpec& sys, const Equation& eq);
MatrixEde to_matrix_ede(const SystemSpec& sys, const Equation& eq);

// One last-digit tuple n0 together with the polynomial-free equation that
// n' must solve for n = n0 + p n' to solve the original.
struct PeeledEquation {
  DigitLetter prefix;
  Equation equation;
};

// All p^t peelings of one equation, in Sigma_1 letter-index order.
std::vector<PeeledEquation> peel_last_digits(const SystemSpec& sys, const Equation& eq);

// The same for every equation of the system: entry e belongs to equation e.
std::vector<std::vector<PeeledEquation>> peel_last_digits(const SystemSpec& sys);

// Automaton of a polynomial-free equation, via the scalar or matrix engine.
Automaton build_equation(const SystemSpec& sys, const Equation& eq,
                         const BuildOptions& options = {});

// Solutions of one equation. Equations with polynomial coefficients are
// peeled; the empty word is patched by direct evaluation at n = 0.
Automaton solve_equation(const SystemSpec& sys, const Equation& eq,
                         const BuildOptions& options = {});

// Intersection over all equations. A lone polynomial-free equation yields
// the engine's type automaton unchanged; anything composed is minimized.
Automaton solve_system(const SystemSpec& sys, const BuildOptions& options = {});

}  // namespace ede
