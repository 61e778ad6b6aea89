#include "ede/oracle.hpp"

#include <map>

#include <json.hpp>

#include "ede/errors.hpp"

namespace ede::oracle {

namespace {

// Plain square-and-multiply; T only needs operator* and a unit.
template <class T>
T power(const T& base, std::uint64_t e, T unit) {
  T result = std::move(unit);
  T b = base;
  while (e) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

void check_arity(std::size_t t, std::span<const std::uint64_t> n) {
  if (n.size() != t) {
    throw RangeError("tuple has " + std::to_string(n.size()) + " components, expected " +
                     std::to_string(t));
  }
}

MatrixPolynomial unit_matrix(const PrimeField& field, std::size_t r, std::size_t n) {
  MatrixPolynomial m(field, r, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Polynomial::constant(field, r, 1);
  return m;
}

MatrixPolynomial scalar_matrix(const Polynomial& c, std::size_t n) {
  MatrixPolynomial m(c.field(), c.num_vars(), n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

// The entire standard form, written out again so the oracle does not lean on
// the engine's own construction.
MatrixPolynomial own_companion(const PrimeField& field, std::size_t r, const CompanionSpec& spec) {
  MatrixPolynomial b(field, r, spec.n);
  for (std::size_t i = 0; i + 1 < spec.n; ++i) b.at(i + 1, i) = spec.rho;
  for (std::size_t i = 0; i < spec.n; ++i) b.at(i, spec.n - 1) = spec.numerators.at(i);
  return b;
}

// sum_k g_k B^k by accumulating powers of B.
MatrixPolynomial eval_xi(const XiPolynomial& g, const MatrixPolynomial& b) {
  const auto n = b.order();
  MatrixPolynomial sum(b.field(), b.num_vars(), n);
  auto power_of_b = unit_matrix(b.field(), b.num_vars(), n);
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (k) power_of_b = power_of_b * b;
    sum += scalar_matrix(g[k], n) * power_of_b;
  }
  return sum;
}

std::uint32_t eval_poly_coeff(const PrimeField& field, const Polynomial& f,
                              std::span<const std::uint64_t> n) {
  std::uint32_t total = 0;
  for (std::size_t term = 0; term < f.num_terms(); ++term) {
    std::uint32_t v = f.coefficient(term);
    const auto exps = f.exponents(term);
    for (std::size_t k = 0; k < n.size(); ++k) {
      v = field.mul(v, field.pow(static_cast<std::uint32_t>(n[k] % field.p()), exps[k]));
    }
    total = field.add(total, v);
  }
  return total;
}

}  // namespace

Polynomial evaluate(const ScalarEde& ede, std::span<const std::uint64_t> n) {
  check_arity(ede.t, n);
  auto sum = Polynomial::zero(ede.field, ede.r);
  const auto one = Polynomial::constant(ede.field, ede.r, 1);
  for (std::size_t i = 0; i < ede.s(); ++i) {
    auto term = ede.q[i];
    for (std::size_t k = 0; k < ede.t && !term.is_zero(); ++k) {
      term = term * power(ede.bases[i][k], n[k], one);
    }
    sum += term;
  }
  return sum;
}

MatrixPolynomial evaluate(const MatrixEde& ede, std::span<const std::uint64_t> n) {
  check_arity(ede.t, n);
  const auto b = own_companion(ede.field, ede.r, ede.base);
  const auto unit = unit_matrix(ede.field, ede.r, ede.base.n);
  MatrixPolynomial sum(ede.field, ede.r, ede.base.n);
  for (std::size_t i = 0; i < ede.s(); ++i) {
    auto term = eval_xi(ede.q[i], b);
    for (std::size_t k = 0; k < ede.t && !term.is_zero(); ++k) {
      term = term * power(eval_xi(ede.bases[i][k], b), n[k], unit);
    }
    sum += term;
  }
  return sum;
}

std::vector<MatrixPolynomial> evaluate(const SystemSpec& sys, std::span<const std::uint64_t> n) {
  check_arity(sys.t, n);
  const std::size_t order = sys.companion ? sys.companion->n : 1;
  const auto b = sys.companion ? own_companion(sys.field, sys.r, *sys.companion)
                               : MatrixPolynomial(sys.field, sys.r, 1);
  auto lift = [&](const XiPolynomial& g) {
    if (sys.companion) return eval_xi(g, b);
    return scalar_matrix(g.empty() ? Polynomial::zero(sys.field, sys.r) : g.front(), 1);
  };
  const auto unit = unit_matrix(sys.field, sys.r, order);
  std::vector<MatrixPolynomial> out;
  for (const auto& eq : sys.equations) {
    MatrixPolynomial sum(sys.field, sys.r, order);
    for (const auto& s : eq.summands) {
      const std::uint32_t c = s.poly_coeff ? eval_poly_coeff(sys.field, *s.poly_coeff, n) : 1;
      if (c == 0) continue;
      auto term = lift(s.q).scaled(Polynomial::constant(sys.field, sys.r, c));
      for (std::size_t k = 0; k < sys.t && !term.is_zero(); ++k) {
        term = term * power(lift(s.bases[k]), n[k], unit);
      }
      sum += term;
    }
    out.push_back(std::move(sum));
  }
  return out;
}

bool is_solution(const ScalarEde& ede, std::span<const std::uint64_t> n) {
  return evaluate(ede, n).is_zero();
}

bool is_solution(const MatrixEde& ede, std::span<const std::uint64_t> n) {
  return evaluate(ede, n).is_zero();
}

bool is_solution(const SystemSpec& sys, std::span<const std::uint64_t> n) {
  for (const auto& lhs : evaluate(sys, n)) {
    if (!lhs.is_zero()) return false;
  }
  return true;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["checked"] = checked;
  auto list = nlohmann::ordered_json::array();
  for (const auto& m : mismatches) {
    nlohmann::ordered_json item;
    item["word"] = format_word(m.word);
    item["tuple"] = format_tuple(m.tuple);
    item["oracle"] = m.oracle;
    item["automaton"] = m.automaton;
    list.push_back(std::move(item));
  }
  doc["mismatches"] = std::move(list);
  doc["max_len"] = max_len;
  return doc.dump(1);
}

namespace {

template <class Solves>
VerificationReport compare_words(const Automaton& a, std::uint32_t p, std::size_t width,
                                 std::size_t max_len, std::size_t work_cap, const Solves& solves) {
  const auto& sigma = a.alphabet();
  if (sigma.p() != p) {
    throw AlphabetError("automaton reads base-" + std::to_string(sigma.p()) +
                        " digits but the equation lives over F_" + std::to_string(p));
  }
  if (sigma.width() != width) {
    throw AlphabetError("automaton reads " + std::to_string(sigma.width()) +
                        "-digit letters but the equation has " + std::to_string(width) +
                        " unknowns");
  }
  std::size_t total = 0;
  std::size_t layer = 1;
  for (std::size_t len = 0; len <= max_len; ++len) {
    total += layer;
    if (total > work_cap) {
      throw CapacityError("oracle comparison would check more than " + std::to_string(work_cap) +
                              " words",
                          total);
    }
    if (len < max_len && __builtin_mul_overflow(layer, sigma.size(), &layer)) {
      throw CapacityError("oracle comparison word count overflows", total);
    }
  }

  VerificationReport report;
  report.max_len = max_len;
  std::map<Tuple, bool> cache;
  std::vector<std::size_t> idx;
  for (std::size_t len = 0; len <= max_len; ++len) {
    idx.assign(len, 0);
    while (true) {
      DigitWord u;
      for (auto i : idx) u.letters.push_back(sigma.letter(i));
      const auto n = decode(u, sigma.p(), width);
      auto it = cache.find(n);
      if (it == cache.end()) it = cache.emplace(n, solves(n)).first;
      const bool by_automaton = accepts(a, u);
      ++report.checked;
      if (by_automaton != it->second) report.mismatches.push_back({u, n, it->second, by_automaton});
      // Odometer over letter indices, first stored letter fastest.
      std::size_t pos = 0;
      while (pos < len && ++idx[pos] == sigma.size()) idx[pos++] = 0;
      if (pos == len) break;
    }
  }
  return report;
}

}  // namespace

VerificationReport compare(const ScalarEde& ede, const Automaton& a, std::size_t max_len,
                           std::size_t work_cap) {
  return compare_words(a, ede.field.p(), ede.t, max_len, work_cap,
                       [&](const Tuple& n) { return is_solution(ede, n); });
}

VerificationReport compare(const MatrixEde& ede, const Automaton& a, std::size_t max_len,
                           std::size_t work_cap) {
  return compare_words(a, ede.field.p(), ede.t, max_len, work_cap,
                       [&](const Tuple& n) { return is_solution(ede, n); });
}

VerificationReport compare(const SystemSpec& sys, const Automaton& a, std::size_t max_len,
                           std::size_t work_cap) {
  return compare_words(a, sys.field.p(), sys.t, max_len, work_cap,
                       [&](const Tuple& n) { return is_solution(sys, n); });
}

}  // namespace ede::oracle
