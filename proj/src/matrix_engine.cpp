#include "ede/matrix_engine.hpp"

#include <algorithm>

#include "ede/errors.hpp"
#include "type_closure.hpp"

namespace ede {

MatrixPolynomial::MatrixPolynomial(PrimeField field, std::size_t num_vars, std::size_t n)
    : field_(field), num_vars_(num_vars), n_(n), entries_(n * n, Polynomial(field, num_vars)) {
  if (n == 0) throw RangeError("matrix order must be positive");
}

MatrixPolynomial MatrixPolynomial::zero(PrimeField field, std::size_t num_vars, std::size_t n) {
  return MatrixPolynomial(field, num_vars, n);
}

MatrixPolynomial MatrixPolynomial::identity(PrimeField field, std::size_t num_vars,
                                            std::size_t n) {
  return scalar(Polynomial::constant(field, num_vars, 1), n);
}

MatrixPolynomial MatrixPolynomial::scalar(const Polynomial& c, std::size_t n) {
  MatrixPolynomial m(c.field(), c.num_vars(), n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

MatrixPolynomial MatrixPolynomial::from_rows(const std::vector<std::vector<Polynomial>>& rows) {
  if (rows.empty() || rows.front().empty()) throw RangeError("empty matrix");
  const auto& first = rows.front().front();
  MatrixPolynomial m(first.field(), first.num_vars(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw StructuralError("matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (!(rows[i][j].field() == m.field_) || rows[i][j].num_vars() != m.num_vars_) {
        throw StructuralError("matrix entries from different rings");
      }
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

bool MatrixPolynomial::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& e) { return e.is_zero(); });
}

int MatrixPolynomial::degree() const {
  int d = kZeroDegree;
  for (const auto& e : entries_) d = std::max(d, e.total_degree());
  return d;
}

void MatrixPolynomial::check_compatible(const MatrixPolynomial& g) const {
  if (!(field_ == g.field_) || num_vars_ != g.num_vars_ || n_ != g.n_) {
    throw StructuralError("matrices of different order or over different rings");
  }
}

MatrixPolynomial& MatrixPolynomial::operator+=(const MatrixPolynomial& g) {
  check_compatible(g);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += g.entries_[k];
  return *this;
}

MatrixPolynomial operator*(const MatrixPolynomial& f, const MatrixPolynomial& g) {
  f.check_compatible(g);
  const auto n = f.n_;
  MatrixPolynomial out(f.field_, f.num_vars_, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto& a = f.at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const auto& b = g.at(k, j);
        if (!b.is_zero()) out.at(i, j) += a * b;
      }
    }
  }
  return out;
}

MatrixPolynomial MatrixPolynomial::scaled(const Polynomial& c) const {
  MatrixPolynomial out = *this;
  for (auto& e : out.entries_) e *= c;
  return out;
}

MatrixPolynomial MatrixPolynomial::pow(std::uint64_t e) const {
  auto result = identity(field_, num_vars_, n_);
  auto base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MatrixPolynomial MatrixPolynomial::frobenius_substitute() const {
  MatrixPolynomial out = *this;
  for (auto& e : out.entries_) e = e.frobenius_substitute();
  return out;
}

MatrixPolynomial MatrixPolynomial::weed(const DigitLetter& y) const {
  MatrixPolynomial out = *this;
  for (auto& e : out.entries_) e = e.weed(y);
  return out;
}

std::vector<MatrixPolynomial> MatrixPolynomial::weed_all() const {
  std::vector<MatrixPolynomial> out;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    auto parts = entries_[k].weed_all();
    if (out.empty()) out.assign(parts.size(), MatrixPolynomial(field_, num_vars_, n_));
    for (std::size_t y = 0; y < parts.size(); ++y) out[y].entries_[k] = std::move(parts[y]);
  }
  return out;
}

namespace {

Polynomial laplace_determinant(const std::vector<std::vector<Polynomial>>& m) {
  const auto n = m.size();
  if (n == 1) return m[0][0];
  auto det = Polynomial::zero(m[0][0].field(), m[0][0].num_vars());
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != col) row.push_back(m[i][j]);
      }
      minor.push_back(std::move(row));
    }
    auto term = m[0][col] * laplace_determinant(minor);
    det += col % 2 == 0 ? term : -term;
  }
  return det;
}

}  // namespace

Polynomial MatrixPolynomial::determinant() const {
  std::vector<std::vector<Polynomial>> rows(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) rows[i].push_back(at(i, j));
  }
  return laplace_determinant(rows);
}

std::size_t MatrixPolynomial::hash() const {
  std::size_t h = n_;
  for (const auto& e : entries_) h = h * 1000003u ^ e.hash();
  return h;
}

std::string MatrixPolynomial::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) s += " / ";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) s += " ; ";
      s += at(i, j).to_string();
    }
  }
  return s + ">";
}

bool operator<(const MatrixPolynomial& a, const MatrixPolynomial& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                      b.entries_.end());
}

XiPolynomial xi_constant(const Polynomial& c) { return xi_trimmed({c}); }

XiPolynomial xi_trimmed(XiPolynomial a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  return a;
}

XiPolynomial xi_multiply(const XiPolynomial& a, const XiPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  XiPolynomial out(a.size() + b.size() - 1, Polynomial::zero(a[0].field(), a[0].num_vars()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return xi_trimmed(std::move(out));
}

XiPolynomial xi_pow(const XiPolynomial& a, std::uint64_t e) {
  if (a.empty()) return e == 0 ? throw RangeError("0^0 of an empty xi-polynomial has no ring") : XiPolynomial{};
  XiPolynomial result{Polynomial::constant(a[0].field(), a[0].num_vars(), 1)};
  XiPolynomial base = a;
  while (e) {
    if (e & 1) result = xi_multiply(result, base);
    e >>= 1;
    if (e) base = xi_multiply(base, base);
  }
  return result;
}

XiPolynomial xi_scaled(const XiPolynomial& a, const Polynomial& c) {
  XiPolynomial out;
  for (const auto& coef : a) out.push_back(coef * c);
  return xi_trimmed(std::move(out));
}

void CompanionSpec::validate() const {
  if (n == 0) throw StructuralError("companion order must be positive");
  if (numerators.size() != n) {
    throw StructuralError("companion spec needs " + std::to_string(n) + " numerators, got " +
                          std::to_string(numerators.size()));
  }
  if (rho.is_zero()) throw InputError("companion scaling rho must be nonzero");
  for (const auto& f : numerators) {
    if (!(f.field() == rho.field()) || f.num_vars() != rho.num_vars()) {
      throw StructuralError("companion numerators and rho live in different rings");
    }
  }
}

MatrixPolynomial companion_matrix(const CompanionSpec& spec) {
  spec.validate();
  MatrixPolynomial b(spec.rho.field(), spec.rho.num_vars(), spec.n);
  for (std::size_t i = 1; i < spec.n; ++i) b.at(i, i - 1) = spec.rho;
  for (std::size_t i = 0; i < spec.n; ++i) b.at(i, spec.n - 1) = spec.numerators[i];
  return b;
}

MatrixPolynomial eval_at_companion(const XiPolynomial& g, const CompanionSpec& spec) {
  const auto b = companion_matrix(spec);
  auto out = MatrixPolynomial::zero(b.field(), b.num_vars(), spec.n);
  for (std::size_t k = g.size(); k-- > 0;) {
    out = out * b + MatrixPolynomial::scalar(g[k], spec.n);
  }
  return out;
}

Conjugator compute_conjugator(const CompanionSpec& spec) {
  const auto b = companion_matrix(spec);
  const auto field = b.field();
  const auto r = b.num_vars();
  const auto n = spec.n;
  const auto p = field.p();
  const auto frob = b.pow(p);
  // Column j of the rational conjugator is (B/rho)^{pj} e_0 = B^{pj} e_0 / rho^{pj};
  // scaling column j by rho^{p(n-1)} leaves rho^{p(n-1-j)} B^{pj} e_0.
  MatrixPolynomial c(field, r, n);
  std::vector<Polynomial> column(n, Polynomial::zero(field, r));
  column[0] = Polynomial::constant(field, r, 1);
  const std::size_t top = static_cast<std::size_t>(p) * (n - 1);
  for (std::size_t j = 0; j < n; ++j) {
    if (j > 0) {
      std::vector<Polynomial> next(n, Polynomial::zero(field, r));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) next[i] += frob.at(i, k) * column[k];
      }
      column = std::move(next);
    }
    const auto scale = spec.rho.pow(top - static_cast<std::size_t>(p) * j);
    for (std::size_t i = 0; i < n; ++i) c.at(i, j) = column[i] * scale;
  }
  // Strip common factors of rho to reach the least power that still clears.
  std::size_t stripped = 0;
  while (stripped < top) {
    MatrixPolynomial reduced(field, r, n);
    bool divisible = true;
    for (std::size_t i = 0; i < n && divisible; ++i) {
      for (std::size_t j = 0; j < n && divisible; ++j) {
        auto q = c.at(i, j).divide_exact(spec.rho);
        if (q) {
          reduced.at(i, j) = std::move(*q);
        } else {
          divisible = false;
        }
      }
    }
    if (!divisible) break;
    c = std::move(reduced);
    ++stripped;
  }
  if (c.determinant().is_zero()) {
    throw InputError(
        "conjugator is singular: the companion polynomial is not separable (or xi^p does not "
        "generate the extension)");
  }
  return {std::move(c), spec.rho.pow(top - stripped)};
}

MatrixPolynomial matrix_weed(const MatrixPolynomial& f, const DigitLetter& y) { return f.weed(y); }

void MatrixEde::validate() const {
  base.validate();
  if (q.empty()) throw StructuralError("equation needs at least one summand");
  if (t == 0) throw StructuralError("equation needs at least one unknown");
  if (bases.size() != q.size()) throw StructuralError("one row of bases per summand required");
  if (!(base.rho.field() == field) || base.rho.num_vars() != r) {
    throw StructuralError("companion spec does not live in the equation's ring");
  }
  auto check = [&](const XiPolynomial& g) {
    for (const auto& c : g) {
      if (!(c.field() == field) || c.num_vars() != r) {
        throw StructuralError("xi-coefficient does not live in F_" + std::to_string(field.p()) +
                              "[" + std::to_string(r) + " variables]");
      }
    }
  };
  for (std::size_t i = 0; i < q.size(); ++i) {
    check(q[i]);
    if (bases[i].size() != t) throw StructuralError("summand has the wrong number of bases");
    for (const auto& g : bases[i]) check(g);
  }
}

MatrixEngine::MatrixEngine(MatrixEde ede)
    : ede_(std::move(ede)),
      companion_(companion_matrix(ede_.base)),
      conjugator_(compute_conjugator(ede_.base)) {
  ede_.validate();
  for (std::size_t i = 0; i < ede_.s(); ++i) {
    q_.push_back(eval_at_companion(ede_.q[i], ede_.base));
    std::vector<MatrixPolynomial> row;
    for (const auto& g : ede_.bases[i]) row.push_back(eval_at_companion(g, ede_.base));
    bases_.push_back(std::move(row));
  }
}

void MatrixEngine::check_summand(std::size_t i) const {
  if (i >= ede_.s()) {
    throw RangeError("summand index " + std::to_string(i) + " out of range (s=" +
                     std::to_string(ede_.s()) + ")");
  }
}

MatrixPolynomial MatrixEngine::factor(std::size_t i, const DigitLetter& x) const {
  check_summand(i);
  Alphabet(ede_.field.p(), ede_.t).index_of(x);
  auto out = MatrixPolynomial::identity(ede_.field, ede_.r, ede_.base.n);
  for (std::size_t k = 0; k < ede_.t; ++k) {
    if (x.digits[k] != 0) out = out * bases_[i][k].pow(x.digits[k]);
  }
  return out * conjugator_.matrix;
}

MatrixPolynomial MatrixEngine::special_op(std::size_t i, const DigitLetter& x,
                                          const DigitLetter& y, const MatrixPolynomial& f) const {
  return (f * factor(i, x)).weed(y);
}

DegreeBound MatrixEngine::degree_bound() const {
  const long p = ede_.field.p();
  long m = 0;
  for (const auto& row : bases_) {
    for (const auto& b : row) m = std::max<long>(m, b.degree());
  }
  const long deg_c = std::max(0, conjugator_.matrix.degree());
  const long num = p * static_cast<long>(ede_.r) * m + deg_c;
  const int n0 = static_cast<int>((num + p - 2) / (p - 1));
  int bound = n0;
  for (const auto& q : q_) bound = std::max(bound, q.degree());
  return {n0, bound};
}

MatrixLargeType MatrixEngine::initial_large_type() const {
  return MatrixLargeType::from({initial_small_type()});
}

MatrixSmallType MatrixEngine::extend_small(const MatrixSmallType& tau, const DigitLetter& x,
                                           const DigitLetter& y) const {
  MatrixSmallType out;
  for (std::size_t i = 0; i < tau.polys.size(); ++i) {
    out.polys.push_back(special_op(i, x, y, tau.polys[i]));
  }
  return out;
}

MatrixLargeType MatrixEngine::extend_large(const MatrixLargeType& big, const DigitLetter& x) const {
  const auto sigma2 = all_letters(ede_.field.p(), ede_.r);
  std::vector<MatrixSmallType> items;
  for (const auto& tau : big.members) {
    for (const auto& y : sigma2) items.push_back(extend_small(tau, x, y));
  }
  return MatrixLargeType::from(std::move(items));
}

MatrixLargeType MatrixEngine::large_type_of_word(const DigitWord& u) const {
  auto big = initial_large_type();
  for (const auto& x : u.letters) big = extend_large(big, x);
  return big;
}

MatrixBuildTrace MatrixEngine::build_traced(const BuildOptions& options) const {
  const Alphabet sigma1(ede_.field.p(), ede_.t);
  const Alphabet sigma2(ede_.field.p(), ede_.r);
  std::vector<std::vector<MatrixPolynomial>> factors(ede_.s());
  for (std::size_t i = 0; i < ede_.s(); ++i) {
    for (std::size_t x = 0; x < sigma1.size(); ++x) factors[i].push_back(factor(i, sigma1.letter(x)));
  }
  auto step = [&](std::size_t i, std::size_t x, const MatrixPolynomial& f) {
    return (f * factors[i][x]).weed_all();
  };
  auto result = detail::build_type_closure<MatrixPolynomial, MatrixPolynomialHash>(
      q_, sigma1, sigma2.size(), step, options.state_cap);
  return {std::move(result.automaton), std::move(result.elements), result.num_small_types};
}

MatrixPolynomial matrix_special_op(const MatrixEde& ede, std::size_t i, const DigitLetter& x,
                                   const DigitLetter& y, const MatrixPolynomial& f) {
  return MatrixEngine(ede).special_op(i, x, y, f);
}

DegreeBound matrix_degree_bound(const MatrixEde& ede) { return MatrixEngine(ede).degree_bound(); }

Automaton build_automaton_matrix(const MatrixEde& ede, const BuildOptions& options) {
  return MatrixEngine(ede).build(options);
}

}  // namespace ede
