#include "ede/spec_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ede/errors.hpp"

namespace ede {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& why) {
  throw ParseError(path + ": " + why);
}

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

const json& field(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

std::uint64_t unsigned_field(const json& obj, const char* key, const std::string& path) {
  const auto& v = field(obj, key, path);
  if (!v.is_number_unsigned()) fail(path + "." + key, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

Polynomial polynomial(const json& v, const PrimeField& f, std::size_t num_vars,
                      const std::string& path) {
  if (v.is_number_integer()) return Polynomial::constant(f, num_vars, v.get<std::int64_t>());
  if (!v.is_string()) fail(path, "expected a polynomial string");
  try {
    return Polynomial::parse(f, num_vars, v.get<std::string>());
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

XiPolynomial xi_polynomial(const json& v, const PrimeField& f, std::size_t r, bool companion,
                           const std::string& path) {
  if (!v.is_array()) return xi_constant(polynomial(v, f, r, path));
  if (!companion) fail(path, "xi-coefficient lists need a companion ring");
  XiPolynomial out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.push_back(polynomial(v[k], f, r, path + "[" + std::to_string(k) + "]"));
  }
  return xi_trimmed(std::move(out));
}

CompanionSpec companion(const json& v, const PrimeField& f, std::size_t r,
                        const std::string& path) {
  if (!v.is_object()) fail(path, "expected an object");
  CompanionSpec spec{unsigned_field(v, "n", path), polynomial(field(v, "rho", path), f, r, path + ".rho"), {}};
  if (spec.n == 0) fail(path + ".n", "order must be positive");
  const auto& nums = field(v, "minpoly_numerators", path);
  if (!nums.is_array() || nums.size() != spec.n) {
    fail(path + ".minpoly_numerators", "expected a list of " + std::to_string(spec.n) + " polynomials");
  }
  for (std::size_t i = 0; i < nums.size(); ++i) {
    spec.numerators.push_back(
        polynomial(nums[i], f, r, path + ".minpoly_numerators[" + std::to_string(i) + "]"));
  }
  if (spec.rho.is_zero()) fail(path + ".rho", "must be nonzero");
  return spec;
}

}  // namespace

SystemSpec parse_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("JSON syntax error at " + line_col(text, e.byte == 0 ? 0 : e.byte - 1) +
                     ": " + e.what());
  }
  if (!doc.is_object()) fail("$", "expected an object");

  const auto p = unsigned_field(doc, "p", "$");
  if (p > UINT32_MAX || !is_prime(static_cast<std::uint32_t>(p))) fail("$.p", "must be a prime");
  const PrimeField f(static_cast<std::uint32_t>(p));
  const auto r = unsigned_field(doc, "r", "$");
  const auto t = unsigned_field(doc, "t", "$");
  if (t == 0) fail("$.t", "need at least one unknown");

  SystemSpec sys{f, r, t, std::nullopt, {}};
  if (auto it = doc.find("ring"); it != doc.end()) {
    if (it->is_string()) {
      if (it->get<std::string>() != "scalar") fail("$.ring", "expected \"scalar\" or {\"companion\": ...}");
    } else if (it->is_object() && it->contains("companion")) {
      sys.companion = companion((*it)["companion"], f, r, "$.ring.companion");
    } else {
      fail("$.ring", "expected \"scalar\" or {\"companion\": ...}");
    }
  }

  const auto& eqs = field(doc, "equations", "$");
  if (!eqs.is_array() || eqs.empty()) fail("$.equations", "expected a non-empty list");
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    const std::string epath = "$.equations[" + std::to_string(e) + "]";
    if (!eqs[e].is_object()) fail(epath, "expected an object");
    const auto& sums = field(eqs[e], "summands", epath);
    if (!sums.is_array() || sums.empty()) fail(epath + ".summands", "expected a non-empty list");
    Equation eq;
    for (std::size_t i = 0; i < sums.size(); ++i) {
      const std::string spath = epath + ".summands[" + std::to_string(i) + "]";
      const auto& sm = sums[i];
      if (!sm.is_object()) fail(spath, "expected an object");
      Summand s;
      if (auto it = sm.find("poly_coeff"); it != sm.end()) {
        s.poly_coeff = polynomial(*it, f, t, spath + ".poly_coeff");
      }
      s.q = xi_polynomial(field(sm, "Q", spath), f, r, sys.is_matrix(), spath + ".Q");
      const auto& ps = field(sm, "P", spath);
      if (!ps.is_array() || ps.size() != t) {
        fail(spath + ".P", "expected a list of " + std::to_string(t) + " bases");
      }
      for (std::size_t k = 0; k < t; ++k) {
        s.bases.push_back(xi_polynomial(ps[k], f, r, sys.is_matrix(),
                                        spath + ".P[" + std::to_string(k) + "]"));
      }
      eq.summands.push_back(std::move(s));
    }
    sys.equations.push_back(std::move(eq));
  }
  try {
    sys.validate();
  } catch (const StructuralError& e) {
    fail("$", e.what());
  }
  return sys;
}

SystemSpec load_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_spec(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace ede
