#pragma once

#include <cstddef>
#include <vector>

#include "ede/digits.hpp"
#include "ede/fsa.hpp"
#include "ede/gf_poly.hpp"
#include "ede/types.hpp"

namespace ede {

// sum_i Q_i * prod_k P_ik^{n_k} = 0 over F_p[x_1..x_r], unknowns n_1..n_t.
struct ScalarEde {
  PrimeField field;
  std::size_t r;
  std::size_t t;
  std::vector<Polynomial> q;                   // s constants
  std::vector<std::vector<Polynomial>> bases;  // s rows of t exponent bases

  std::size_t s() const { return q.size(); }
  // Throws StructuralError unless s, t >= 1 and all polynomials share field and r.
  void validate() const;
};

using SmallType = BasicSmallType<Polynomial>;
using LargeType = BasicLargeType<Polynomial>;

// n0 is the stable degree threshold ceil(p r M / (p-1)), M the largest base
// degree; bound = max(n0, max deg Q_i) caps every small-type component.
struct DegreeBound {
  int n0;
  int bound;
};

DegreeBound degree_bound(const ScalarEde& ede);

// prod_k P_ik^{x_k} for the digits of x. Summand indices are 0-based.
Polynomial monomial_power(const ScalarEde& ede, std::size_t i, const DigitLetter& x);

// weed(f * monomial_power(i, x), y): one digit of the transition kernel.
Polynomial special_op(const ScalarEde& ede, std::size_t i, const DigitLetter& x,
                      const DigitLetter& y, const Polynomial& f);

SmallType initial_small_type(const ScalarEde& ede);
LargeType initial_large_type(const ScalarEde& ede);
SmallType extend_small(const ScalarEde& ede, const SmallType& tau, const DigitLetter& x,
                       const DigitLetter& y);
LargeType extend_large(const ScalarEde& ede, const LargeType& big, const DigitLetter& x);

// Large type of a word: extend_large folded over its letters, LSD first.
LargeType large_type_of_word(const ScalarEde& ede, const DigitWord& u);

inline bool is_good(const SmallType& tau) { return tau.is_good(); }
inline bool is_good(const LargeType& big) { return big.is_good(); }

struct BuildOptions {
  std::size_t state_cap = kDefaultStateCap;
};

// The reachable type automaton: states are large types, the start state is
// {(Q_1, ..., Q_s)}, finals are the good large types. Throws CapacityError
// past options.state_cap states.
Automaton build_automaton(const ScalarEde& ede, const BuildOptions& options = {});

struct ScalarBuildTrace {
  Automaton automaton;
  std::vector<Polynomial> reachable_polynomials;
  std::size_t num_small_types;
};

ScalarBuildTrace build_automaton_traced(const ScalarEde& ede, const BuildOptions& options = {});

}  // namespace ede
