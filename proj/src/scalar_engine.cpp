#include "ede/scalar_engine.hpp"

#include <algorithm>

#include "ede/errors.hpp"
#include "type_closure.hpp"

namespace ede {

void ScalarEde::validate() const {
  if (q.empty()) throw StructuralError("equation needs at least one summand");
  if (t == 0) throw StructuralError("equation needs at least one unknown");
  if (bases.size() != q.size()) throw StructuralError("one row of bases per summand required");
  auto check = [&](const Polynomial& f) {
    if (!(f.field() == field) || f.num_vars() != r) {
      throw StructuralError("polynomial does not live in F_" + std::to_string(field.p()) + "[" +
                            std::to_string(r) + " variables]");
    }
  };
  for (std::size_t i = 0; i < q.size(); ++i) {
    check(q[i]);
    if (bases[i].size() != t) {
      throw StructuralError("summand " + std::to_string(i) + " has " +
                            std::to_string(bases[i].size()) + " bases, expected " +
                            std::to_string(t));
    }
    for (const auto& b : bases[i]) check(b);
  }
}

DegreeBound degree_bound(const ScalarEde& ede) {
  const int p = static_cast<int>(ede.field.p());
  int m = 0;
  for (const auto& row : ede.bases) {
    for (const auto& b : row) m = std::max(m, b.total_degree());
  }
  const long num = static_cast<long>(p) * static_cast<long>(ede.r) * m;
  const int n0 = static_cast<int>((num + p - 2) / (p - 1));
  int bound = n0;
  for (const auto& q : ede.q) bound = std::max(bound, q.total_degree());
  return {n0, bound};
}

namespace {

void check_summand(const ScalarEde& ede, std::size_t i) {
  if (i >= ede.s()) {
    throw RangeError("summand index " + std::to_string(i) + " out of range (s=" +
                     std::to_string(ede.s()) + ")");
  }
}

}  // namespace

Polynomial monomial_power(const ScalarEde& ede, std::size_t i, const DigitLetter& x) {
  check_summand(ede, i);
  Alphabet(ede.field.p(), ede.t).index_of(x);
  auto out = Polynomial::constant(ede.field, ede.r, 1);
  for (std::size_t k = 0; k < ede.t; ++k) {
    if (x.digits[k] != 0) out *= ede.bases[i][k].pow(x.digits[k]);
  }
  return out;
}

Polynomial special_op(const ScalarEde& ede, std::size_t i, const DigitLetter& x,
                      const DigitLetter& y, const Polynomial& f) {
  return (f * monomial_power(ede, i, x)).weed(y);
}

SmallType initial_small_type(const ScalarEde& ede) { return SmallType{ede.q}; }

LargeType initial_large_type(const ScalarEde& ede) {
  return LargeType::from({initial_small_type(ede)});
}

SmallType extend_small(const ScalarEde& ede, const SmallType& tau, const DigitLetter& x,
                       const DigitLetter& y) {
  SmallType out;
  for (std::size_t i = 0; i < tau.polys.size(); ++i) {
    out.polys.push_back(special_op(ede, i, x, y, tau.polys[i]));
  }
  return out;
}

LargeType extend_large(const ScalarEde& ede, const LargeType& big, const DigitLetter& x) {
  const auto sigma2 = all_letters(ede.field.p(), ede.r);
  std::vector<SmallType> items;
  for (const auto& tau : big.members) {
    for (const auto& y : sigma2) items.push_back(extend_small(ede, tau, x, y));
  }
  return LargeType::from(std::move(items));
}

LargeType large_type_of_word(const ScalarEde& ede, const DigitWord& u) {
  auto big = initial_large_type(ede);
  for (const auto& x : u.letters) big = extend_large(ede, big, x);
  return big;
}

ScalarBuildTrace build_automaton_traced(const ScalarEde& ede, const BuildOptions& options) {
  ede.validate();
  const Alphabet sigma1(ede.field.p(), ede.t);
  const Alphabet sigma2(ede.field.p(), ede.r);
  // Digit-selected factors, one per (summand, letter).
  std::vector<std::vector<Polynomial>> factors(ede.s());
  for (std::size_t i = 0; i < ede.s(); ++i) {
    for (std::size_t x = 0; x < sigma1.size(); ++x) {
      factors[i].push_back(monomial_power(ede, i, sigma1.letter(x)));
    }
  }
  auto step = [&](std::size_t i, std::size_t x, const Polynomial& f) {
    return (f * factors[i][x]).weed_all();
  };
  auto result = detail::build_type_closure<Polynomial, PolynomialHash>(
      ede.q, sigma1, sigma2.size(), step, options.state_cap);
  return {std::move(result.automaton), std::move(result.elements), result.num_small_types};
}

Automaton build_automaton(const ScalarEde& ede, const BuildOptions& options) {
  return build_automaton_traced(ede, options).automaton;
}

}  // namespace ede
