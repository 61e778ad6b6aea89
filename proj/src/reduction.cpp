#include "ede/reduction.hpp"

#include <algorithm>

#include "ede/errors.hpp"
#include "ede/oracle.hpp"

namespace ede {

bool Equation::has_poly_coeffs() const {
  return std::any_of(summands.begin(), summands.end(),
                     [](const Summand& s) { return s.poly_coeff.has_value(); });
}

namespace {

void check_ring(const SystemSpec& sys, const Polynomial& f, std::size_t num_vars,
                const char* what) {
  if (!(f.field() == sys.field) || f.num_vars() != num_vars) {
    throw StructuralError(std::string(what) + " must live in F_" + std::to_string(sys.field.p()) +
                          " with " + std::to_string(num_vars) + " variables");
  }
}

void check_xi(const SystemSpec& sys, const XiPolynomial& g, const char* what) {
  if (!sys.is_matrix() && g.size() > 1) {
    throw StructuralError(std::string(what) + " has xi-terms but the ring is scalar");
  }
  for (const auto& c : g) check_ring(sys, c, sys.r, what);
}

Polynomial scalar_of(const SystemSpec& sys, const XiPolynomial& g) {
  return g.empty() ? Polynomial::zero(sys.field, sys.r) : g.front();
}

}  // namespace

void SystemSpec::validate() const {
  if (t == 0) throw StructuralError("a system needs at least one unknown");
  if (equations.empty()) throw StructuralError("a system needs at least one equation");
  if (companion) {
    companion->validate();
    check_ring(*this, companion->rho, r, "companion rho");
  }
  for (std::size_t e = 0; e < equations.size(); ++e) {
    const auto& eq = equations[e];
    if (eq.summands.empty()) {
      throw StructuralError("equation " + std::to_string(e) + " has no summands");
    }
    for (const auto& s : eq.summands) {
      if (s.poly_coeff) check_ring(*this, *s.poly_coeff, t, "poly_coeff");
      check_xi(*this, s.q, "Q");
      if (s.bases.size() != t) {
        throw StructuralError("summand in equation " + std::to_string(e) + " has " +
                              std::to_string(s.bases.size()) + " bases, expected " +
                              std::to_string(t));
      }
      for (const auto& b : s.bases) check_xi(*this, b, "P");
    }
  }
}

ScalarEde to_scalar_ede(const SystemSpec& sys, const Equation& eq) {
  if (sys.is_matrix()) throw StructuralError("companion system used as scalar");
  ScalarEde ede{sys.field, sys.r, sys.t, {}, {}};
  for (const auto& s : eq.summands) {
    if (s.poly_coeff) throw StructuralError("summand still carries a polynomial coefficient");
    ede.q.push_back(scalar_of(sys, s.q));
    std::vector<Polynomial> row;
    for (const auto& b : s.bases) row.push_back(scalar_of(sys, b));
    ede.bases.push_back(std::move(row));
  }
  ede.validate();
  return ede;
}

MatrixEde to_matrix_ede(const SystemSpec& sys, const Equation& eq) {
  if (!sys.is_matrix()) throw StructuralError("scalar system used as companion system");
  MatrixEde ede{sys.field, sys.r, sys.t, *sys.companion, {}, {}};
  for (const auto& s : eq.summands) {
    if (s.poly_coeff) throw StructuralError("summand still carries a polynomial coefficient");
    ede.q.push_back(s.q);
    ede.bases.push_back(s.bases);
  }
  ede.validate();
  return ede;
}

std::vector<PeeledEquation> peel_last_digits(const SystemSpec& sys, const Equation& eq) {
  const Alphabet sigma1(sys.field.p(), sys.t);
  const auto p = sys.field.p();
  std::vector<PeeledEquation> out;
  for (std::size_t idx = 0; idx < sigma1.size(); ++idx) {
    const auto prefix = sigma1.letter(idx);
    Equation peeled;
    for (const auto& s : eq.summands) {
      // Poly has F_p coefficients, so its value only depends on n mod p.
      std::uint32_t c = 1;
      if (s.poly_coeff) {
        c = 0;
        const auto& f = *s.poly_coeff;
        for (std::size_t term = 0; term < f.num_terms(); ++term) {
          std::uint32_t v = f.coefficient(term);
          const auto exps = f.exponents(term);
          for (std::size_t k = 0; k < sys.t; ++k) {
            v = sys.field.mul(v, sys.field.pow(prefix.digits[k], exps[k]));
          }
          c = sys.field.add(c, v);
        }
      }
      Summand next;
      XiPolynomial q = xi_scaled(s.q, Polynomial::constant(sys.field, sys.r, c));
      for (std::size_t k = 0; k < sys.t; ++k) {
        if (prefix.digits[k] != 0) q = xi_multiply(q, xi_pow(s.bases[k], prefix.digits[k]));
        next.bases.push_back(xi_pow(s.bases[k], p));
      }
      next.q = std::move(q);
      peeled.summands.push_back(std::move(next));
    }
    out.push_back({prefix, std::move(peeled)});
  }
  return out;
}

std::vector<std::vector<PeeledEquation>> peel_last_digits(const SystemSpec& sys) {
  std::vector<std::vector<PeeledEquation>> out;
  for (const auto& eq : sys.equations) out.push_back(peel_last_digits(sys, eq));
  return out;
}

Automaton build_equation(const SystemSpec& sys, const Equation& eq, const BuildOptions& options) {
  if (sys.is_matrix()) return build_automaton_matrix(to_matrix_ede(sys, eq), options);
  return build_automaton(to_scalar_ede(sys, eq), options);
}

Automaton solve_equation(const SystemSpec& sys, const Equation& eq, const BuildOptions& options) {
  if (!eq.has_poly_coeffs()) return build_equation(sys, eq, options);
  const Alphabet sigma1(sys.field.p(), sys.t);
  auto result = Automaton::empty_language(sigma1);
  for (const auto& branch : peel_last_digits(sys, eq)) {
    const auto sub = minimize(build_equation(sys, branch.equation, options));
    result = minimize(unite(result, prepend_letter(sub, branch.prefix), options.state_cap));
  }
  SystemSpec single{sys.field, sys.r, sys.t, sys.companion, {eq}};
  const std::vector<std::uint64_t> zero(sys.t, 0);
  return with_empty_word(result, oracle::is_solution(single, zero));
}

Automaton solve_system(const SystemSpec& sys, const BuildOptions& options) {
  sys.validate();
  if (sys.equations.size() == 1) return solve_equation(sys, sys.equations.front(), options);
  std::optional<Automaton> result;
  for (const auto& eq : sys.equations) {
    auto a = minimize(solve_equation(sys, eq, options));
    result = result ? minimize(intersect(*result, a, options.state_cap)) : std::move(a);
  }
  return *result;
}

}  // namespace ede
