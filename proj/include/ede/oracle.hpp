#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ede/digits.hpp"
#include "ede/fsa.hpp"
#include "ede/matrix_engine.hpp"
#include "ede/reduction.hpp"
#include "ede/scalar_engine.hpp"

// Brute-force reference: substitutes concrete exponents into the equation and
// multiplies everything out. Deliberately shares no code path with weeding,
// special operators or Frobenius substitution.
namespace ede::oracle {

using Tuple = std::vector<std::uint64_t>;

Polynomial evaluate(const ScalarEde& ede, std::span<const std::uint64_t> n);
MatrixPolynomial evaluate(const MatrixEde& ede, std::span<const std::uint64_t> n);
// One left-hand side per equation; scalar systems give 1x1 matrices.
std::vector<MatrixPolynomial> evaluate(const SystemSpec& sys, std::span<const std::uint64_t> n);

bool is_solution(const ScalarEde& ede, std::span<const std::uint64_t> n);
bool is_solution(const MatrixEde& ede, std::span<const std::uint64_t> n);
bool is_solution(const SystemSpec& sys, std::span<const std::uint64_t> n);

struct Mismatch {
  DigitWord word;
  Tuple tuple;
  bool oracle;
  bool automaton;
};

struct VerificationReport {
  std::size_t checked = 0;
  std::vector<Mismatch> mismatches;
  std::size_t max_len = 0;

  bool ok() const { return mismatches.empty(); }
  // {"checked", "mismatches": [{"word", "tuple", "oracle", "automaton"}], "max_len"}
  std::string to_json() const;
};

inline constexpr std::size_t kScalarMaxLen = 4;
inline constexpr std::size_t kMatrixMaxLen = 3;
inline constexpr std::size_t kDefaultWorkCap = 2'000'000;

// Checks every word of length <= max_len, the empty word included. Throws
// CapacityError if that would exceed work_cap words.
VerificationReport compare(const ScalarEde& ede, const Automaton& a, std::size_t max_len,
                           std::size_t work_cap = kDefaultWorkCap);
VerificationReport compare(const MatrixEde& ede, const Automaton& a, std::size_t max_len,
                           std::size_t work_cap = kDefaultWorkCap);
VerificationReport compare(const SystemSpec& sys, const Automaton& a, std::size_t max_len,
                           std::size_t work_cap = kDefaultWorkCap);

}  // namespace ede::oracle
