#pragma once

// Shared test fixtures: a seeded generator, random equation builders and a
// deliberately naive polynomial model used as an independent reference.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ede/digits.hpp"
#include "ede/gf_poly.hpp"
#include "ede/matrix_engine.hpp"
#include "ede/scalar_engine.hpp"

namespace ede::testing {

// Raw 64-bit draws reduced by modulo so sequences are identical across
// standard libraries (distribution objects are not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n) { return n ? engine_() % n : 0; }
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

inline Polynomial poly(std::uint32_t p, std::size_t r, const std::string& text) {
  return Polynomial::parse(PrimeField(p), r, text);
}

inline Polynomial random_polynomial(Rng& rng, PrimeField f, std::size_t r, int max_deg,
                                    std::size_t max_terms) {
  std::vector<std::pair<Exponents, std::int64_t>> terms;
  const auto n = rng.below(max_terms + 1);
  for (std::size_t k = 0; k < n; ++k) {
    Exponents e(r, 0);
    int budget = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg) + 1));
    for (std::size_t v = 0; v < r && budget > 0; ++v) {
      const auto d = static_cast<int>(rng.below(static_cast<std::uint64_t>(budget) + 1));
      e[v] = static_cast<std::uint32_t>(d);
      budget -= d;
    }
    terms.emplace_back(std::move(e), static_cast<std::int64_t>(1 + rng.below(f.p() - 1)));
  }
  return Polynomial::from_terms(f, r, std::move(terms));
}

inline Polynomial random_nonzero(Rng& rng, PrimeField f, std::size_t r, int max_deg,
                                 std::size_t max_terms) {
  while (true) {
    auto g = random_polynomial(rng, f, r, max_deg, max_terms);
    if (!g.is_zero()) return g;
  }
}

struct ScalarShape {
  std::uint32_t p;
  std::size_t r;
  std::size_t t;
  std::size_t s;
  int max_deg;
};

inline ScalarShape random_shape(Rng& rng) {
  ScalarShape shape{rng.coin() ? 3u : 2u, 1 + rng.below(2), 1 + rng.below(2), 1 + rng.below(3),
                    static_cast<int>(1 + rng.below(2))};
  return shape;
}

inline ScalarEde random_scalar_ede(Rng& rng, const ScalarShape& shape) {
  const PrimeField f(shape.p);
  ScalarEde ede{f, shape.r, shape.t, {}, {}};
  for (std::size_t i = 0; i < shape.s; ++i) {
    ede.q.push_back(random_polynomial(rng, f, shape.r, shape.max_deg, 3));
    std::vector<Polynomial> row;
    for (std::size_t k = 0; k < shape.t; ++k) {
      row.push_back(random_nonzero(rng, f, shape.r, shape.max_deg, 2));
    }
    ede.bases.push_back(std::move(row));
  }
  return ede;
}

// The companion of xi^2 + xi + x over F_2: B = [[0, x], [1, 1]].
inline CompanionSpec f2_quadratic() {
  const PrimeField f(2);
  return {2, Polynomial::constant(f, 1, 1), {poly(2, 1, "1:1"), poly(2, 1, "1:0")}};
}

// xi^3 + xi + x over F_2 (Eisenstein at x, hence irreducible; separable
// since its derivative xi^2 + 1 is coprime to it).
inline CompanionSpec f2_cubic() {
  const PrimeField f(2);
  return {3, Polynomial::constant(f, 1, 1),
          {poly(2, 1, "1:1"), poly(2, 1, "1:0"), Polynomial::zero(f, 1)}};
}

inline XiPolynomial random_xi(Rng& rng, PrimeField f, std::size_t r, std::size_t max_len,
                              int max_deg) {
  XiPolynomial g;
  const auto len = rng.below(max_len + 1);
  for (std::size_t k = 0; k < len; ++k) g.push_back(random_polynomial(rng, f, r, max_deg, 2));
  return xi_trimmed(std::move(g));
}

inline MatrixEde random_matrix_ede(Rng& rng, const CompanionSpec& base, std::size_t t,
                                   std::size_t s) {
  const auto f = base.rho.field();
  const auto r = base.rho.num_vars();
  MatrixEde ede{f, r, t, base, {}, {}};
  for (std::size_t i = 0; i < s; ++i) {
    ede.q.push_back(random_xi(rng, f, r, base.n, 1));
    std::vector<XiPolynomial> row;
    for (std::size_t k = 0; k < t; ++k) {
      auto g = random_xi(rng, f, r, base.n, 1);
      if (g.empty()) g = xi_constant(Polynomial::constant(f, r, 1));
      row.push_back(std::move(g));
    }
    ede.bases.push_back(std::move(row));
  }
  return ede;
}

// Every word of exactly `len` letters, first stored letter varying fastest.
inline std::vector<DigitWord> words_of_length(const Alphabet& sigma, std::size_t len) {
  std::vector<DigitWord> out;
  std::vector<std::size_t> idx(len, 0);
  while (true) {
    DigitWord u;
    for (auto i : idx) u.letters.push_back(sigma.letter(i));
    out.push_back(std::move(u));
    std::size_t pos = 0;
    while (pos < len && ++idx[pos] == sigma.size()) idx[pos++] = 0;
    if (pos == len) return out;
  }
}

inline std::vector<DigitWord> words_up_to(const Alphabet& sigma, std::size_t max_len) {
  std::vector<DigitWord> out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    auto layer = words_of_length(sigma, len);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

// A dictionary-of-terms polynomial with schoolbook operations. It shares no
// code with the library's sparse representation.
namespace naive {

struct Poly {
  std::uint32_t p;
  std::size_t r;
  std::map<std::vector<std::uint32_t>, std::uint32_t> terms;

  static Poly from(const Polynomial& f) {
    Poly out{f.field().p(), f.num_vars(), {}};
    for (std::size_t i = 0; i < f.num_terms(); ++i) {
      const auto e = f.exponents(i);
      out.terms[std::vector<std::uint32_t>(e.begin(), e.end())] = f.coefficient(i);
    }
    return out;
  }

  void add_term(const std::vector<std::uint32_t>& e, std::uint64_t c) {
    const auto v = static_cast<std::uint32_t>((terms[e] + c) % p);
    if (v == 0) {
      terms.erase(e);
    } else {
      terms[e] = v;
    }
  }

  Poly operator+(const Poly& g) const {
    Poly out = *this;
    for (const auto& [e, c] : g.terms) out.add_term(e, c);
    return out;
  }

  Poly operator*(const Poly& g) const {
    Poly out{p, r, {}};
    for (const auto& [ea, ca] : terms) {
      for (const auto& [eb, cb] : g.terms) {
        std::vector<std::uint32_t> e(r);
        for (std::size_t k = 0; k < r; ++k) e[k] = ea[k] + eb[k];
        out.add_term(e, static_cast<std::uint64_t>(ca) * cb);
      }
    }
    return out;
  }

  Poly weed(const std::vector<std::uint32_t>& y) const {
    Poly out{p, r, {}};
    for (const auto& [e, c] : terms) {
      bool match = true;
      std::vector<std::uint32_t> q(r);
      for (std::size_t k = 0; k < r; ++k) {
        if (e[k] % p != y[k]) match = false;
        q[k] = e[k] / p;
      }
      if (match) out.add_term(q, c);
    }
    return out;
  }

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms == b.terms; }
};

}  // namespace naive

}  // namespace ede::testing
