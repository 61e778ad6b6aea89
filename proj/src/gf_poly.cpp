#include "ede/gf_poly.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "ede/errors.hpp"
#include "text_util.hpp"

namespace ede {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw RangeError("field modulus " + std::to_string(p) + " is not prime");
}

std::uint32_t PrimeField::reduce(std::int64_t v) const {
  auto m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return static_cast<std::uint32_t>(m);
}

std::uint32_t PrimeField::add(std::uint32_t a, std::uint32_t b) const {
  return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p_);
}

std::uint32_t PrimeField::sub(std::uint32_t a, std::uint32_t b) const {
  return static_cast<std::uint32_t>((std::uint64_t{a} + p_ - b) % p_);
}

std::uint32_t PrimeField::neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

std::uint32_t PrimeField::mul(std::uint32_t a, std::uint32_t b) const {
  return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a % p_;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw RangeError("zero has no inverse");
  return pow(a, p_ - 2);
}

namespace {

bool lex_less(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

Polynomial::Polynomial(PrimeField field, std::size_t num_vars)
    : field_(field), num_vars_(num_vars) {}

Polynomial Polynomial::zero(PrimeField field, std::size_t num_vars) {
  return Polynomial(field, num_vars);
}

Polynomial Polynomial::constant(PrimeField field, std::size_t num_vars, std::int64_t c) {
  Polynomial f(field, num_vars);
  const auto v = field.reduce(c);
  if (v != 0) {
    f.exps_.assign(num_vars, 0);
    f.coeffs_.push_back(v);
  }
  return f;
}

Polynomial Polynomial::variable(PrimeField field, std::size_t num_vars, std::size_t k) {
  if (k >= num_vars) throw RangeError("variable index out of range");
  Exponents e(num_vars, 0);
  e[k] = 1;
  return monomial(field, e);
}

Polynomial Polynomial::monomial(PrimeField field, std::span<const std::uint32_t> exps,
                                std::int64_t c) {
  Polynomial f(field, exps.size());
  const auto v = field.reduce(c);
  if (v != 0) {
    f.exps_.assign(exps.begin(), exps.end());
    f.coeffs_.push_back(v);
  }
  return f;
}

Polynomial Polynomial::from_terms(PrimeField field, std::size_t num_vars,
                                  std::vector<std::pair<Exponents, std::int64_t>> terms) {
  for (const auto& [e, c] : terms) {
    if (e.size() != num_vars) throw StructuralError("exponent vector has wrong length");
  }
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Polynomial f(field, num_vars);
  for (std::size_t i = 0; i < terms.size();) {
    std::uint32_t acc = 0;
    std::size_t j = i;
    for (; j < terms.size() && terms[j].first == terms[i].first; ++j) {
      acc = field.add(acc, field.reduce(terms[j].second));
    }
    if (acc != 0) {
      f.exps_.insert(f.exps_.end(), terms[i].first.begin(), terms[i].first.end());
      f.coeffs_.push_back(acc);
    }
    i = j;
  }
  return f;
}

bool Polynomial::is_constant() const {
  return is_zero() || (num_terms() == 1 && total_degree() == 0);
}

std::uint32_t Polynomial::coefficient_of(std::span<const std::uint32_t> exps) const {
  if (exps.size() != num_vars_) throw StructuralError("exponent vector has wrong length");
  std::size_t lo = 0, hi = num_terms();
  while (lo < hi) {
    const auto mid = (lo + hi) / 2;
    if (lex_less(exponents(mid), exps)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < num_terms() && std::equal(exps.begin(), exps.end(), exponents(lo).begin())) {
    return coeffs_[lo];
  }
  return 0;
}

int Polynomial::total_degree() const {
  int best = kZeroDegree;
  for (std::size_t i = 0; i < num_terms(); ++i) {
    const auto e = exponents(i);
    const int d = static_cast<int>(std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
    best = std::max(best, d);
  }
  return best;
}

void Polynomial::check_compatible(const Polynomial& g) const {
  if (!(field_ == g.field_)) {
    throw StructuralError("polynomials over different fields (p=" + std::to_string(field_.p()) +
                          " vs p=" + std::to_string(g.field_.p()) + ")");
  }
  if (num_vars_ != g.num_vars_) {
    throw StructuralError("polynomials in different numbers of variables (" +
                          std::to_string(num_vars_) + " vs " + std::to_string(g.num_vars_) + ")");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial f = *this;
  for (auto& c : f.coeffs_) c = field_.neg(c);
  return f;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  check_compatible(g);
  if (g.is_zero()) return *this;
  std::vector<std::uint32_t> exps;
  std::vector<std::uint32_t> coeffs;
  exps.reserve(exps_.size() + g.exps_.size());
  coeffs.reserve(coeffs_.size() + g.coeffs_.size());
  std::size_t i = 0, j = 0;
  auto emit = [&](std::span<const std::uint32_t> e, std::uint32_t c) {
    if (c == 0) return;
    exps.insert(exps.end(), e.begin(), e.end());
    coeffs.push_back(c);
  };
  while (i < num_terms() || j < g.num_terms()) {
    if (j == g.num_terms() || (i < num_terms() && lex_less(exponents(i), g.exponents(j)))) {
      emit(exponents(i), coeffs_[i]);
      ++i;
    } else if (i == num_terms() || lex_less(g.exponents(j), exponents(i))) {
      emit(g.exponents(j), g.coeffs_[j]);
      ++j;
    } else {
      emit(exponents(i), field_.add(coeffs_[i], g.coeffs_[j]));
      ++i;
      ++j;
    }
  }
  exps_ = std::move(exps);
  coeffs_ = std::move(coeffs);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) { return *this += -g; }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  f.check_compatible(g);
  Polynomial out(f.field_, f.num_vars_);
  if (f.is_zero() || g.is_zero()) return out;
  const auto r = f.num_vars_;
  const auto n = f.num_terms() * g.num_terms();
  std::vector<std::uint32_t> exps(n * r);
  std::vector<std::uint32_t> coeffs(n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < f.num_terms(); ++i) {
    const auto a = f.exponents(i);
    for (std::size_t j = 0; j < g.num_terms(); ++j, ++k) {
      const auto b = g.exponents(j);
      for (std::size_t v = 0; v < r; ++v) exps[k * r + v] = a[v] + b[v];
      coeffs[k] = f.field_.mul(f.coeffs_[i], g.coeffs_[j]);
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto row = [&](std::size_t t) { return std::span<const std::uint32_t>(exps.data() + t * r, r); };
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return lex_less(row(a), row(b)); });
  out.exps_.reserve(n * r);
  out.coeffs_.reserve(n);
  for (std::size_t i = 0; i < n;) {
    std::uint32_t acc = 0;
    std::size_t j = i;
    for (; j < n && std::equal(row(order[i]).begin(), row(order[i]).end(), row(order[j]).begin());
         ++j) {
      acc = f.field_.add(acc, coeffs[order[j]]);
    }
    if (acc != 0) {
      const auto e = row(order[i]);
      out.exps_.insert(out.exps_.end(), e.begin(), e.end());
      out.coeffs_.push_back(acc);
    }
    i = j;
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& g) {
  *this = *this * g;
  return *this;
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
  c %= field_.p();
  if (c == 0) return zero(field_, num_vars_);
  Polynomial f = *this;
  for (auto& v : f.coeffs_) v = field_.mul(v, c);
  return f;
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial result = constant(field_, num_vars_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::frobenius_substitute() const {
  Polynomial f = *this;
  const auto p = field_.p();
  for (auto& e : f.exps_) {
    if (e > UINT32_MAX / p) throw RangeError("exponent overflow in Frobenius substitution");
    e *= p;
  }
  return f;
}

Polynomial Polynomial::weed(std::span<const std::uint32_t> residue) const {
  if (residue.size() != num_vars_) {
    throw StructuralError("weeding letter has " + std::to_string(residue.size()) +
                          " digits, expected " + std::to_string(num_vars_));
  }
  const auto p = field_.p();
  for (auto d : residue) {
    if (d >= p) throw RangeError("weeding digit out of range");
  }
  Polynomial out(field_, num_vars_);
  for (std::size_t i = 0; i < num_terms(); ++i) {
    const auto e = exponents(i);
    bool match = true;
    for (std::size_t v = 0; v < num_vars_ && match; ++v) match = e[v] % p == residue[v];
    if (!match) continue;
    // Shifting and dividing preserves lexicographic order among matching terms.
    for (std::size_t v = 0; v < num_vars_; ++v) out.exps_.push_back((e[v] - residue[v]) / p);
    out.coeffs_.push_back(coeffs_[i]);
  }
  return out;
}

std::vector<Polynomial> Polynomial::weed_all() const {
  const auto p = field_.p();
  std::size_t count = 1;
  for (std::size_t v = 0; v < num_vars_; ++v) count *= p;
  std::vector<Polynomial> out(count, Polynomial(field_, num_vars_));
  for (std::size_t i = 0; i < num_terms(); ++i) {
    const auto e = exponents(i);
    std::size_t index = 0;
    for (std::size_t v = 0; v < num_vars_; ++v) index = index * p + e[v] % p;
    auto& target = out[index];
    for (std::size_t v = 0; v < num_vars_; ++v) target.exps_.push_back(e[v] / p);
    target.coeffs_.push_back(coeffs_[i]);
  }
  return out;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& g) const {
  check_compatible(g);
  if (g.is_zero()) throw RangeError("division by the zero polynomial");
  const auto r = num_vars_;
  const auto lead_g = g.exponents(g.num_terms() - 1);
  const auto inv_lead = field_.inv(g.coeffs_.back());
  Polynomial rest = *this;
  std::vector<std::pair<Exponents, std::int64_t>> quotient;
  while (!rest.is_zero()) {
    const auto lead = rest.exponents(rest.num_terms() - 1);
    Exponents e(r);
    for (std::size_t v = 0; v < r; ++v) {
      if (lead[v] < lead_g[v]) return std::nullopt;
      e[v] = lead[v] - lead_g[v];
    }
    const auto c = field_.mul(rest.coeffs_.back(), inv_lead);
    rest -= monomial(field_, e, c) * g;
    quotient.emplace_back(std::move(e), c);
  }
  return from_terms(field_, r, std::move(quotient));
}

std::size_t Polynomial::hash() const {
  std::size_t h = 1469598103934665603ull ^ (field_.p() * 31 + num_vars_);
  auto mix = [&h](std::size_t v) { h = (h ^ v) * 1099511628211ull; };
  for (auto e : exps_) mix(e);
  for (auto c : coeffs_) mix(c + 0x9e3779b9u);
  return h;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = num_terms(); i-- > 0;) {
    if (!s.empty()) s += " + ";
    s += std::to_string(coeffs_[i]);
    s += ':';
    const auto e = exponents(i);
    for (std::size_t v = 0; v < num_vars_; ++v) {
      if (v) s += ',';
      s += std::to_string(e[v]);
    }
  }
  return s;
}

Polynomial Polynomial::parse(PrimeField field, std::size_t num_vars, std::string_view text) {
  const auto body = detail::trim(text);
  if (body.empty()) throw ParseError("empty polynomial text");
  std::vector<std::pair<Exponents, std::int64_t>> terms;
  for (auto part : detail::split(body, '+')) {
    if (part.empty()) throw ParseError("empty term in polynomial '" + std::string(text) + "'");
    const auto colon = part.find(':');
    if (colon == std::string_view::npos) {
      // A bare integer is a constant term.
      terms.emplace_back(Exponents(num_vars, 0), detail::parse_signed(part, "coefficient"));
      continue;
    }
    const auto c = detail::parse_signed(part.substr(0, colon), "coefficient");
    Exponents e;
    for (auto piece : detail::split(part.substr(colon + 1), ',')) {
      const auto v = detail::parse_unsigned(piece, "exponent");
      if (v > UINT32_MAX) throw ParseError("exponent too large");
      e.push_back(static_cast<std::uint32_t>(v));
    }
    if (e.size() != num_vars) {
      throw ParseError("term '" + std::string(part) + "' has " + std::to_string(e.size()) +
                       " exponents, expected " + std::to_string(num_vars));
    }
    terms.emplace_back(std::move(e), c);
  }
  return from_terms(field, num_vars, std::move(terms));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field_ == b.field_ && a.num_vars_ == b.num_vars_ && a.coeffs_ == b.coeffs_ &&
         a.exps_ == b.exps_;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  return std::tie(a.num_vars_, a.exps_, a.coeffs_) < std::tie(b.num_vars_, b.exps_, b.coeffs_);
}

Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial mul(const Polynomial& f, const Polynomial& g) { return f * g; }
int total_degree(const Polynomial& f) { return f.total_degree(); }
Polynomial frobenius_substitute(const Polynomial& f) { return f.frobenius_substitute(); }
Polynomial weed(const Polynomial& f, const DigitLetter& y) { return f.weed(y); }

Polynomial weed_word(const Polynomial& f, const DigitWord& v) {
  Polynomial g = f;
  for (const auto& y : v.letters) g = g.weed(y);
  return g;
}

}  // namespace ede
