// Acceptance gate: one PASS/FAIL line per criterion. All limits are pinned
// below and every random suite uses a fixed seed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ede/ede.h"
#include "ede/errors.hpp"
#include "ede/fsa.hpp"
#include "ede/matrix_engine.hpp"
#include "ede/oracle.hpp"
#include "ede/reduction.hpp"
#include "ede/scalar_engine.hpp"
#include "support/test_support.hpp"

using namespace ede;
using ede::testing::Rng;
using ede::testing::poly;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr std::size_t kScalarRandomCount = 20;
constexpr std::size_t kScalarMaxLen = 4;
constexpr double kScalarSeconds = 60.0;
constexpr std::size_t kMatrixRandomCount = 10;
constexpr std::size_t kMatrixMaxLen = 3;
constexpr double kMatrixSeconds = 120.0;
constexpr std::size_t kConjugatorSpecs = 10;
constexpr std::size_t kPaddingSamples = 1000;
constexpr std::size_t kPaddingMaxLen = 8;
constexpr std::size_t kDegenerationCount = 10;
constexpr std::size_t kDegenerationMaxLen = 4;
constexpr std::size_t kSystemMaxLen = 4;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string timing(double secs, double limit) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s (limit %.0f s)", secs, limit);
  return buf;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int report(int id, const std::string& name, const std::function<Outcome()>& body) {
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  std::printf("criterion %d %s %s: %s\n", id, out.pass ? "PASS" : "FAIL", name.c_str(),
              out.detail.c_str());
  std::fflush(stdout);
  return out.pass ? 0 : 1;
}

XiPolynomial xi(std::uint32_t p, std::size_t r, const std::vector<std::string>& coeffs) {
  XiPolynomial g;
  for (const auto& c : coeffs) g.push_back(poly(p, r, c));
  return xi_trimmed(std::move(g));
}

// One suite instance: an equation, its automaton and the pieces needed to
// recheck it.
struct Instance {
  std::string name;
  std::function<oracle::VerificationReport(const Automaton&, std::size_t)> compare;
  std::function<Automaton()> build;
  std::function<bool()> degrees_stable;
  Automaton automaton;
  std::size_t max_len;
};

std::vector<ScalarEde> scalar_suite() {
  const PrimeField f2(2);
  std::vector<ScalarEde> out;
  out.push_back({f2, 1, 1, {Polynomial::zero(f2, 1)}, {{poly(2, 1, "1:0")}}});
  out.push_back({f2, 1, 1, {poly(2, 1, "1:0")}, {{poly(2, 1, "1:0")}}});
  out.push_back({f2, 1, 1, {poly(2, 1, "1:0"), poly(2, 1, "1:1")}, {{poly(2, 1, "1:1")}, {poly(2, 1, "1:0")}}});
  Rng rng(kSeed);
  for (std::size_t k = 0; k < kScalarRandomCount; ++k) {
    out.push_back(ede::testing::random_scalar_ede(rng, ede::testing::random_shape(rng)));
  }
  return out;
}

std::vector<MatrixEde> matrix_suite() {
  const PrimeField f2(2);
  std::vector<MatrixEde> out;
  // B^n + B = 0.
  out.push_back({f2, 1, 1, ede::testing::f2_quadratic(),
                 {xi(2, 1, {"1:0"}), xi(2, 1, {"0", "1:0"})},
                 {{xi(2, 1, {"0", "1:0"})}, {xi(2, 1, {"1:0"})}}});
  Rng rng(kSeed + 1);
  for (std::size_t k = 0; k < kMatrixRandomCount; ++k) {
    const std::size_t t = 1 + (k % 2);
    out.push_back(ede::testing::random_matrix_ede(rng, ede::testing::f2_quadratic(), t, 1 + rng.below(2)));
  }
  // Order three: B^n + B^2 = 0.
  out.push_back({f2, 1, 1, ede::testing::f2_cubic(),
                 {xi(2, 1, {"1:0"}), xi(2, 1, {"0", "0", "1:0"})},
                 {{xi(2, 1, {"0", "1:0"})}, {xi(2, 1, {"1:0"})}}});
  out.push_back(ede::testing::random_matrix_ede(rng, ede::testing::f2_cubic(), 1, 2));
  return out;
}

std::string describe(const ScalarEde& e) {
  return "p=" + std::to_string(e.field.p()) + " r=" + std::to_string(e.r) + " t=" + std::to_string(e.t) +
         " s=" + std::to_string(e.s());
}

}  // namespace

int main() {
  int failures = 0;
  std::vector<Instance> instances;

  failures += report(1, "scalar oracle equivalence", [&] {
    const auto start = Clock::now();
    std::size_t mismatches = 0, words = 0, states = 0, solvable = 0;
    std::string bad;
    const auto suite = scalar_suite();
    for (std::size_t k = 0; k < suite.size(); ++k) {
      const auto& e = suite[k];
      const auto trace = build_automaton_traced(e);
      const auto rep = oracle::compare(e, trace.automaton, kScalarMaxLen);
      mismatches += rep.mismatches.size();
      words += rep.checked;
      states += trace.automaton.num_states();
      solvable += is_empty(trace.automaton) ? 0 : 1;
      if (!rep.ok()) bad += " #" + std::to_string(k) + "(" + describe(e) + ")";
      instances.push_back({"scalar #" + std::to_string(k),
                           [e](const Automaton& a, std::size_t l) { return oracle::compare(e, a, l); },
                           [e] { return build_automaton(e); },
                           [e] {
                             const auto tr = build_automaton_traced(e);
                             const int bound = degree_bound(e).bound;
                             for (const auto& f : tr.reachable_polynomials) {
                               if (f.total_degree() > bound) return false;
                             }
                             return true;
                           },
                           trace.automaton, kScalarMaxLen});
    }
    const double secs = seconds_since(start);
    Outcome out{mismatches == 0 && secs < kScalarSeconds && suite.size() >= 23,
                std::to_string(suite.size()) + " equations, " + std::to_string(words) +
                    " words, " + std::to_string(states) + " states, " + std::to_string(mismatches) +
                    " mismatches, " + std::to_string(solvable) + " solvable, " + timing(secs, kScalarSeconds) + bad};
    return out;
  });

  failures += report(2, "matrix oracle equivalence", [&] {
    const auto start = Clock::now();
    std::size_t mismatches = 0, words = 0, cubic = 0, solvable = 0;
    std::string bad;
    const auto suite = matrix_suite();
    for (std::size_t k = 0; k < suite.size(); ++k) {
      const auto& e = suite[k];
      const MatrixEngine engine(e);
      const auto trace = engine.build_traced();
      const auto rep = oracle::compare(e, trace.automaton, kMatrixMaxLen);
      mismatches += rep.mismatches.size();
      words += rep.checked;
      if (e.base.n == 3) ++cubic;
      solvable += is_empty(trace.automaton) ? 0 : 1;
      if (!rep.ok()) bad += " #" + std::to_string(k);
      instances.push_back({"matrix #" + std::to_string(k),
                           [e](const Automaton& a, std::size_t l) { return oracle::compare(e, a, l); },
                           [e] { return build_automaton_matrix(e); },
                           [e] {
                             const MatrixEngine eng(e);
                             const auto tr = eng.build_traced();
                             const int bound = eng.degree_bound().bound;
                             for (const auto& m : tr.reachable_matrices) {
                               if (m.degree() > bound) return false;
                             }
                             return true;
                           },
                           trace.automaton, kMatrixMaxLen});
    }
    const double secs = seconds_since(start);
    return Outcome{mismatches == 0 && secs < kMatrixSeconds && suite.size() - cubic >= 10 && cubic >= 1,
                   std::to_string(suite.size() - cubic) + " order-2 and " + std::to_string(cubic) +
                       " order-3 equations, " + std::to_string(words) + " words, " +
                       std::to_string(mismatches) + " mismatches, " + std::to_string(solvable) + " solvable, " +
                       timing(secs, kMatrixSeconds) + bad};
  });

  failures += report(3, "conjugation identity", [&] {
    Rng rng(kSeed + 2);
    std::size_t checked = 0, skipped = 0, broken = 0;
    while (checked < kConjugatorSpecs * 2 && checked + skipped < 400) {
      const PrimeField f(rng.coin() ? 3 : 2);
      const std::size_t n = 1 + rng.below(3);
      CompanionSpec spec{n, ede::testing::random_nonzero(rng, f, 1, 1, 2), {}};
      for (std::size_t i = 0; i < n; ++i) spec.numerators.push_back(ede::testing::random_polynomial(rng, f, 1, 2, 2));
      Conjugator c{MatrixPolynomial(f, 1, 1), Polynomial::zero(f, 1)};
      try {
        c = compute_conjugator(spec);
      } catch (const InputError&) {
        ++skipped;
        continue;
      }
      const auto b = companion_matrix(spec);
      if (!(b.pow(f.p()) * c.matrix == c.matrix * b.frobenius_substitute())) ++broken;
      ++checked;
    }
    return Outcome{broken == 0 && checked >= kConjugatorSpecs,
                   std::to_string(checked) + " specs (n<=3, F_2 and F_3), " + std::to_string(skipped) +
                       " singular skipped, " + std::to_string(broken) + " violations"};
  });

  failures += report(4, "structural properties", [&] {
    Rng rng(kSeed + 3);
    std::size_t violations = 0, cases = 0;
    // Weeding reconstruction, linearity, factoring and degree drop.
    for (int trial = 0; trial < 200; ++trial) {
      const PrimeField f(trial % 2 ? 3 : 2);
      const std::size_t r = 1 + rng.below(2);
      const auto a = ede::testing::random_polynomial(rng, f, r, 7, 6);
      const auto g = ede::testing::random_polynomial(rng, f, r, 3, 4);
      auto rebuilt = Polynomial::zero(f, r);
      for (const auto& y : all_letters(f.p(), r)) {
        rebuilt += weed(a, y).frobenius_substitute() * Polynomial::monomial(f, psi_exponent(y));
        violations += weed(a + g, y) == weed(a, y) + weed(g, y) ? 0 : 1;
        violations += weed(a * g.frobenius_substitute(), y) == weed(a, y) * g ? 0 : 1;
        const auto w = weed(a, y);
        if (!w.is_zero() && w.total_degree() > a.total_degree() / static_cast<int>(f.p())) ++violations;
        cases += 3;
      }
      violations += rebuilt == a ? 0 : 1;
      ++cases;
    }
    // Composition on length-2 words: folding letters equals the direct set.
    std::size_t fold_checks = 0;
    for (const auto& e : scalar_suite()) {
      const Alphabet s1(e.field.p(), e.t), s2(e.field.p(), e.r);
      for (const auto& u : ede::testing::words_of_length(s1, 2)) {
        const auto n = decode(u, e.field.p(), e.t);
        std::vector<SmallType> direct;
        for (const auto& w : ede::testing::words_of_length(s2, 2)) {
          SmallType tau;
          for (std::size_t i = 0; i < e.s(); ++i) {
            auto g = e.q[i];
            for (std::size_t k = 0; k < e.t; ++k) g = g * e.bases[i][k].pow(n[k]);
            tau.polys.push_back(weed_word(g, w));
          }
          direct.push_back(std::move(tau));
        }
        violations += large_type_of_word(e, u) == LargeType::from(std::move(direct)) ? 0 : 1;
        ++fold_checks;
      }
    }
    for (const auto& e : matrix_suite()) {
      const MatrixEngine engine(e);
      const Alphabet s1(2, e.t), s2(2, e.r);
      for (const auto& u : ede::testing::words_of_length(s1, 2)) {
        std::vector<MatrixSmallType> direct;
        for (const auto& w : ede::testing::words_of_length(s2, 2)) {
          MatrixSmallType tau;
          for (std::size_t i = 0; i < e.s(); ++i) {
            auto g = engine.constant(i);
            for (std::size_t j = 0; j < 2; ++j) {
              auto factor = engine.factor(i, u.letters[j]);
              for (std::size_t k = 0; k < j; ++k) factor = factor.frobenius_substitute();
              g = g * factor;
            }
            for (const auto& y : w.letters) g = g.weed(y);
            tau.polys.push_back(std::move(g));
          }
          direct.push_back(std::move(tau));
        }
        violations += engine.large_type_of_word(u) == MatrixLargeType::from(std::move(direct)) ? 0 : 1;
        ++fold_checks;
      }
    }
    // Degree stability on every reachable state of every suite instance.
    std::size_t unstable = 0;
    for (const auto& inst : instances) unstable += inst.degrees_stable() ? 0 : 1;
    return Outcome{violations == 0 && unstable == 0,
                   std::to_string(cases) + " weeding checks, " + std::to_string(fold_checks) +
                       " length-2 fold checks, " + std::to_string(instances.size()) +
                       " instances degree-checked, " + std::to_string(violations + unstable) +
                       " violations"};
  });

  failures += report(5, "reduction", [&] {
    std::string detail;
    bool pass = true;
    ede_system* sys = nullptr;
    ede_automaton* a = nullptr;
    if (ede_system_load(EDE_SPEC_DIR "/even_n.json", &sys) != EDE_OK || ede_build(sys, 0, &a) != EDE_OK) {
      return Outcome{false, std::string("even_n.json: ") + ede_last_error()};
    }
    std::uint64_t* rows = nullptr;
    std::size_t count = 0;
    ede_enumerate_solutions(a, 4, &rows, &count);
    std::vector<std::uint64_t> got(rows, rows + count);
    ede_tuples_free(rows);
    ede_automaton_free(a);
    ede_system_free(sys);
    const std::vector<std::uint64_t> evens{0, 2, 4, 6, 8, 10, 12, 14};
    pass = got == evens;
    detail = "even-n enum gives " + std::to_string(got.size()) + " values" + (pass ? " (0..14 even)" : " (wrong)");

    // Two-equation systems: language = intersection of the equations' languages.
    Rng rng(kSeed + 4);
    std::size_t systems = 0, disagreements = 0;
    std::vector<SystemSpec> cases;
    {
      const PrimeField f2(2);
      const auto c = [](const std::string& s) { return xi_constant(poly(2, 1, s)); };
      SystemSpec bundled{f2, 1, 2, std::nullopt, {}};
      bundled.equations.push_back(Equation{{Summand{std::nullopt, c("1:0"), {c("1:1"), c("1:0")}},
                                            Summand{std::nullopt, c("1:0"), {c("1:0"), c("1:1")}}}});
      bundled.equations.push_back(Equation{{Summand{poly(2, 2, "1:1,0"), c("1:0"), {c("1:0"), c("1:0")}}}});
      cases.push_back(bundled);
    }
    for (int k = 0; k < 5; ++k) {
      const PrimeField f(rng.coin() ? 3 : 2);
      const std::size_t t = f.p() == 3 ? 1 : 1 + rng.below(2);
      SystemSpec s{f, 1, t, std::nullopt, {}};
      for (int e = 0; e < 2; ++e) {
        Equation eq;
        const std::size_t terms = 1 + rng.below(3);
        for (std::size_t i = 0; i < terms; ++i) {
          Summand sm;
          if (rng.coin()) sm.poly_coeff = ede::testing::random_polynomial(rng, f, t, 2, 2);
          sm.q = xi_constant(ede::testing::random_polynomial(rng, f, 1, 2, 2));
          for (std::size_t j = 0; j < t; ++j) sm.bases.push_back(xi_constant(ede::testing::random_nonzero(rng, f, 1, 1, 2)));
          eq.summands.push_back(std::move(sm));
        }
        s.equations.push_back(std::move(eq));
      }
      cases.push_back(std::move(s));
    }
    for (const auto& s : cases) {
      const auto whole = solve_system(s);
      std::vector<Automaton> parts;
      for (const auto& eq : s.equations) parts.push_back(solve_equation(s, eq));
      for (const auto& u : ede::testing::words_up_to(whole.alphabet(), kSystemMaxLen)) {
        bool meet = true;
        for (const auto& part : parts) meet = meet && accepts(part, u);
        disagreements += accepts(whole, u) == meet ? 0 : 1;
      }
      disagreements += oracle::compare(s, whole, kSystemMaxLen).mismatches.size();
      ++systems;
    }
    pass = pass && disagreements == 0;
    detail += "; " + std::to_string(systems) + " two-equation systems, " + std::to_string(disagreements) +
              " disagreements with the intersection or the oracle";
    return Outcome{pass, detail};
  });

  failures += report(6, "zero-padding closure", [&] {
    Rng rng(kSeed + 5);
    std::size_t violations = 0, pairs = 0;
    for (const auto& inst : instances) {
      const auto& sigma = inst.automaton.alphabet();
      for (std::size_t k = 0; k < kPaddingSamples; ++k) {
        DigitWord u;
        const auto len = rng.below(kPaddingMaxLen + 1);
        for (std::size_t j = 0; j < len; ++j) u.letters.push_back(sigma.letter(rng.below(sigma.size())));
        auto padded = u;
        padded.letters.push_back(sigma.zero_letter());
        violations += accepts(inst.automaton, u) == accepts(inst.automaton, padded) ? 0 : 1;
        ++pairs;
      }
    }
    return Outcome{violations == 0, std::to_string(pairs) + " sampled pairs over " +
                                        std::to_string(instances.size()) + " instances, " +
                                        std::to_string(violations) + " violations"};
  });

  failures += report(7, "determinism", [&] {
    std::size_t differing = 0;
    for (const auto& inst : instances) {
      differing += to_json(inst.build()) == to_json(inst.build()) ? 0 : 1;
      differing += to_json(inst.build()) == to_json(inst.automaton) ? 0 : 1;
    }
    return Outcome{differing == 0, std::to_string(instances.size()) + " instances rebuilt, " +
                                       std::to_string(differing) + " JSON differences"};
  });

  failures += report(8, "order-one degeneration", [&] {
    Rng rng(kSeed + 6);
    std::size_t differing = 0, built = 0;
    for (std::size_t k = 0; k < kDegenerationCount; ++k) {
      const PrimeField f(k % 3 == 2 ? 3 : 2);
      const std::size_t t = 1 + (k % 2);
      const std::size_t r = f.p() == 3 && t == 2 ? 1 : 1 + rng.below(2);
      const CompanionSpec base{1, Polynomial::constant(f, r, 1), {ede::testing::random_polynomial(rng, f, r, 1, 2)}};
      MatrixEde m{f, r, t, base, {}, {}};
      ScalarEde s{f, r, t, {}, {}};
      const auto lower = [&](const XiPolynomial& g) {
        // g evaluated at the 1x1 companion [[f0]].
        auto v = Polynomial::zero(f, r);
        auto power = Polynomial::constant(f, r, 1);
        for (const auto& c : g) {
          v += c * power;
          power = power * base.numerators[0];
        }
        return v;
      };
      const std::size_t summands = 1 + rng.below(3);
      for (std::size_t i = 0; i < summands; ++i) {
        m.q.push_back(ede::testing::random_xi(rng, f, r, 2, 1));
        s.q.push_back(lower(m.q.back()));
        std::vector<XiPolynomial> row;
        std::vector<Polynomial> srow;
        for (std::size_t j = 0; j < t; ++j) {
          auto g = ede::testing::random_xi(rng, f, r, 2, 1);
          if (lower(g).is_zero()) g = xi_constant(Polynomial::constant(f, r, 1));
          srow.push_back(lower(g));
          row.push_back(std::move(g));
        }
        m.bases.push_back(std::move(row));
        s.bases.push_back(std::move(srow));
      }
      const auto am = build_automaton_matrix(m);
      const auto as = build_automaton(s);
      differing += same_language_up_to(am, as, kDegenerationMaxLen) ? 0 : 1;
      ++built;
    }
    return Outcome{differing == 0 && built >= kDegenerationCount,
                   std::to_string(built) + " order-one equations, " + std::to_string(differing) +
                       " language differences on words <= " + std::to_string(kDegenerationMaxLen)};
  });

  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
