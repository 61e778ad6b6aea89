#include <doctest.h>

#include "ede/errors.hpp"
#include "ede/gf_poly.hpp"
#include "support/test_support.hpp"

using namespace ede;
using ede::testing::Rng;
using ede::testing::poly;
namespace naive = ede::testing::naive;

TEST_CASE("prime field arithmetic") {
  PrimeField f(7);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.pow(3, 6) == 1);
  CHECK(f.pow(0, 0) == 1);
  CHECK(f.reduce(-1) == 6);
  CHECK_THROWS_AS(PrimeField(4), RangeError);
  CHECK_THROWS_AS(PrimeField(1), RangeError);
  CHECK_THROWS_AS(f.inv(0), RangeError);
}

TEST_CASE("add") {
  CHECK((poly(2, 1, "1:1 + 1:0") + poly(2, 1, "1:1 + 1:0")).is_zero());
  const auto f = poly(3, 2, "2:1,1 + 1:0,2");
  CHECK(f + Polynomial::zero(PrimeField(3), 2) == f);
  CHECK(poly(3, 2, "1:1,0") + poly(3, 2, "1:0,1") == poly(3, 2, "1:1,0 + 1:0,1"));
  CHECK_THROWS_AS(poly(3, 2, "1:1,0") + poly(3, 1, "1:1"), StructuralError);
  CHECK_THROWS_AS(poly(3, 1, "1:1") + poly(2, 1, "1:1"), StructuralError);
}

TEST_CASE("mul") {
  CHECK(poly(2, 1, "1:1 + 1:0") * poly(2, 1, "1:1 + 1:0") == poly(2, 1, "1:2 + 1:0"));
  const auto f = poly(3, 2, "2:1,1 + 1:0,2");
  CHECK(f * Polynomial::constant(PrimeField(3), 2, 1) == f);
  const auto s = poly(2, 2, "1:1,0 + 1:0,1");
  CHECK(s * s == poly(2, 2, "1:2,0 + 1:0,2"));
  CHECK_THROWS_AS(mul(poly(3, 2, "1:1,0"), poly(3, 1, "1:1")), StructuralError);
}

TEST_CASE("total degree") {
  CHECK(total_degree(poly(2, 2, "1:2,1")) == 3);
  CHECK(total_degree(Polynomial::zero(PrimeField(2), 1)) == kZeroDegree);
  CHECK(kZeroDegree < -1000000);
  CHECK(total_degree(Polynomial::constant(PrimeField(3), 1, 2)) == 0);
}

TEST_CASE("frobenius substitution") {
  const auto f = poly(2, 1, "1:1 + 1:0");
  CHECK(frobenius_substitute(f) == poly(2, 1, "1:2 + 1:0"));
  CHECK(frobenius_substitute(f) == f * f);
  const auto c = Polynomial::constant(PrimeField(3), 2, 2);
  CHECK(frobenius_substitute(c) == c);
  CHECK(frobenius_substitute(poly(3, 2, "1:1,1")) == poly(3, 2, "1:3,3"));
}

TEST_CASE("weed") {
  const DigitLetter one{{1}}, zero{{0}};
  CHECK(weed(poly(2, 1, "1:1"), one) == poly(2, 1, "1:0"));
  CHECK(weed(poly(2, 1, "1:1"), zero).is_zero());
  CHECK(weed(poly(2, 1, "1:2"), zero) == poly(2, 1, "1:1"));
  CHECK(weed(poly(3, 1, "1:3"), zero) == poly(3, 1, "1:1"));

  // Cross-checked against the naive dictionary model.
  const auto f = poly(2, 2, "1:2,1 + 1:0,0");
  const auto ref = naive::Poly::from(f);
  CHECK(naive::Poly::from(weed(f, DigitLetter{{0, 1}})) == ref.weed({0, 1}));
  CHECK(naive::Poly::from(weed(f, DigitLetter{{0, 0}})) == ref.weed({0, 0}));
  CHECK(weed(f, DigitLetter{{0, 1}}) == poly(2, 2, "1:1,0"));
  CHECK(weed(f, DigitLetter{{0, 0}}) == poly(2, 2, "1:0,0"));
}

TEST_CASE("weed_all is indexed by letter index") {
  const auto f = poly(3, 2, "1:4,2 + 2:1,0 + 1:0,5 + 2:3,3");
  const Alphabet sigma(3, 2);
  const auto all = f.weed_all();
  REQUIRE(all.size() == sigma.size());
  for (std::size_t k = 0; k < sigma.size(); ++k) CHECK(all[k] == weed(f, sigma.letter(k)));
}

TEST_CASE("weed_word") {
  const auto f = poly(3, 1, "1:5 + 2:1");
  CHECK(weed_word(f, DigitWord{}) == f);
  const auto cube = poly(2, 1, "1:3");
  const auto two_peels = naive::Poly::from(cube).weed({1}).weed({1});
  CHECK(naive::Poly::from(weed_word(cube, parse_word("1;1"))) == two_peels);
  CHECK(weed_word(cube, parse_word("1;1")) == poly(2, 1, "1:0"));
  CHECK(weed_word(Polynomial::zero(PrimeField(2), 1), parse_word("0;1;1")).is_zero());
}

TEST_CASE("text round trip") {
  const auto f = poly(3, 2, "1:2,0 + 2:0,1");
  CHECK(f.to_string() == "1:2,0 + 2:0,1");
  CHECK(Polynomial::parse(PrimeField(3), 2, f.to_string()) == f);
  CHECK(Polynomial::zero(PrimeField(2), 1).to_string() == "0");
  CHECK(poly(2, 1, "0").is_zero());
  CHECK(poly(3, 1, "-1:1") == poly(3, 1, "2:1"));
  CHECK(poly(3, 2, "4") == Polynomial::constant(PrimeField(3), 2, 1));
  CHECK_THROWS_AS(poly(2, 2, "1:1"), ParseError);
  CHECK_THROWS_AS(poly(2, 1, "1:x"), ParseError);
  CHECK_THROWS_AS(poly(2, 1, "1:1 +"), ParseError);
  CHECK_THROWS_AS(poly(2, 1, ""), ParseError);

  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const PrimeField field(trial % 2 ? 3 : 5);
    const auto g = ede::testing::random_polynomial(rng, field, 1 + trial % 3, 6, 5);
    CHECK(Polynomial::parse(field, g.num_vars(), g.to_string()) == g);
  }
}

TEST_CASE("exact division") {
  const auto a = poly(3, 2, "1:1,0 + 2:0,1");
  const auto b = poly(3, 2, "1:2,1 + 1:0,0");
  CHECK(*(a * b).divide_exact(b) == a);
  CHECK_FALSE((a * b + Polynomial::constant(PrimeField(3), 2, 1)).divide_exact(b).has_value());
  CHECK(Polynomial::zero(PrimeField(3), 2).divide_exact(b)->is_zero());
}

TEST_CASE("property: arithmetic agrees with the naive model") {
  Rng rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const PrimeField field(trial % 3 == 0 ? 5 : (trial % 3 == 1 ? 2 : 3));
    const std::size_t r = 1 + rng.below(3);
    const auto f = ede::testing::random_polynomial(rng, field, r, 5, 6);
    const auto g = ede::testing::random_polynomial(rng, field, r, 5, 6);
    CHECK(naive::Poly::from(f + g) == naive::Poly::from(f) + naive::Poly::from(g));
    CHECK(naive::Poly::from(f * g) == naive::Poly::from(f) * naive::Poly::from(g));
  }
}

TEST_CASE("property: weeding identities") {
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const PrimeField field(trial % 2 ? 3 : 2);
    const std::size_t r = 1 + rng.below(2);
    const auto p = field.p();
    const auto f = ede::testing::random_polynomial(rng, field, r, 7, 6);
    const auto g = ede::testing::random_polynomial(rng, field, r, 3, 4);
    const auto letters = all_letters(p, r);

    // f = sum_y frob(weed(f, y)) * x^y.
    auto rebuilt = Polynomial::zero(field, r);
    for (const auto& y : letters) {
      rebuilt += frobenius_substitute(weed(f, y)) * Polynomial::monomial(field, psi_exponent(y));
    }
    CHECK(rebuilt == f);

    for (const auto& y : letters) {
      CHECK(weed(f + g, y) == weed(f, y) + weed(g, y));
      CHECK(weed(f * frobenius_substitute(g), y) == weed(f, y) * g);
      if (!f.is_zero()) {
        const auto w = weed(f, y);
        if (!w.is_zero()) CHECK(w.total_degree() <= f.total_degree() / static_cast<int>(p));
      }
    }

    Polynomial power = Polynomial::constant(field, r, 1);
    for (std::uint32_t k = 0; k < p; ++k) power *= f;
    CHECK(frobenius_substitute(f) == power);
  }
}

TEST_CASE("property: f vanishes iff all weedings by words of a fixed length vanish") {
  Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const PrimeField field(trial % 2 ? 3 : 2);
    const std::size_t r = 1 + rng.below(2);
    const auto f = trial % 5 == 0 ? Polynomial::zero(field, r)
                                  : ede::testing::random_polynomial(rng, field, r, 6, 5);
    const Alphabet sigma2(field.p(), r);
    for (std::size_t c = 1; c <= 2; ++c) {
      bool all_zero = true;
      for (const auto& v : ede::testing::words_of_length(sigma2, c)) {
        all_zero = all_zero && weed_word(f, v).is_zero();
      }
      CHECK(all_zero == f.is_zero());
    }
  }
}
