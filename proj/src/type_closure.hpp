#pragma once

// Breadth-first closure of large types under the per-letter extension map.
// Shared by the scalar and matrix engines; Elem is Polynomial or
// MatrixPolynomial.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ede/errors.hpp"
#include "ede/fsa.hpp"
#include "ede/types.hpp"

namespace ede::detail {

struct IdVectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = 1469598103934665603ull ^ v.size();
    for (auto x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

template <class Elem, class ElemHash>
struct ClosureResult {
  Automaton automaton;
  // Every ring element occurring in a small type of a reachable large type.
  std::vector<Elem> elements;
  std::size_t num_small_types;
};

// `step(i, x, f)` returns, for summand i and Sigma_1 letter index x, the
// sigma2_size weedings of the product f * (digit-selected factor), indexed by
// Sigma_2 letter.
template <class Elem, class ElemHash>
ClosureResult<Elem, ElemHash> build_type_closure(
    const std::vector<Elem>& initial, const Alphabet& sigma1, std::size_t sigma2_size,
    const std::function<std::vector<Elem>(std::size_t, std::size_t, const Elem&)>& step,
    std::size_t state_cap) {
  using Ids = std::vector<std::uint32_t>;
  const std::size_t s = initial.size();
  const std::size_t k = sigma1.size();

  std::vector<Elem> elements;
  std::unordered_map<Elem, std::uint32_t, ElemHash> element_ids;
  auto intern_element = [&](const Elem& f) {
    const auto [it, fresh] = element_ids.emplace(f, static_cast<std::uint32_t>(elements.size()));
    if (fresh) elements.push_back(f);
    return it->second;
  };

  std::vector<Ids> smalls;
  std::unordered_map<Ids, std::uint32_t, IdVectorHash> small_ids;
  auto intern_small = [&](Ids ids) {
    const auto [it, fresh] = small_ids.emplace(ids, static_cast<std::uint32_t>(smalls.size()));
    if (fresh) smalls.push_back(std::move(ids));
    return it->second;
  };

  // (element, summand, letter) -> weedings, as element ids.
  std::unordered_map<std::uint64_t, Ids> step_memo;
  auto element_step = [&](std::uint32_t e, std::size_t i, std::size_t x) -> const Ids& {
    const std::uint64_t key = (std::uint64_t{e} * s + i) * k + x;
    auto it = step_memo.find(key);
    if (it != step_memo.end()) return it->second;
    const auto images = step(i, x, elements[e]);
    Ids ids;
    ids.reserve(images.size());
    for (const auto& g : images) ids.push_back(intern_element(g));
    return step_memo.emplace(key, std::move(ids)).first->second;
  };

  // (small type, letter) -> sorted distinct successor small types.
  std::unordered_map<std::uint64_t, Ids> small_memo;
  auto small_step = [&](std::uint32_t tau, std::size_t x) -> const Ids& {
    const std::uint64_t key = std::uint64_t{tau} * k + x;
    auto it = small_memo.find(key);
    if (it != small_memo.end()) return it->second;
    std::vector<Ids> per_summand(s);
    for (std::size_t i = 0; i < s; ++i) per_summand[i] = element_step(smalls[tau][i], i, x);
    Ids out;
    out.reserve(sigma2_size);
    for (std::size_t y = 0; y < sigma2_size; ++y) {
      Ids comp(s);
      for (std::size_t i = 0; i < s; ++i) comp[i] = per_summand[i][y];
      out.push_back(intern_small(std::move(comp)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return small_memo.emplace(key, std::move(out)).first->second;
  };

  std::vector<Ids> larges;
  std::unordered_map<Ids, std::uint32_t, IdVectorHash> large_ids;
  auto intern_large = [&](Ids ids) {
    const auto [it, fresh] = large_ids.emplace(ids, static_cast<std::uint32_t>(larges.size()));
    if (fresh) {
      if (larges.size() >= state_cap) {
        throw CapacityError("type automaton exceeds state cap " + std::to_string(state_cap) +
                                " (" + std::to_string(larges.size()) + " states discovered)",
                            larges.size());
      }
      larges.push_back(std::move(ids));
    }
    return it->second;
  };

  Ids start;
  for (const auto& q : initial) start.push_back(intern_element(q));
  intern_large(Ids{intern_small(std::move(start))});

  std::vector<Automaton::State> delta;
  for (std::size_t state = 0; state < larges.size(); ++state) {
    for (std::size_t x = 0; x < k; ++x) {
      Ids next;
      for (auto tau : larges[state]) {
        const auto& succ = small_step(tau, x);
        next.insert(next.end(), succ.begin(), succ.end());
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      delta.push_back(intern_large(std::move(next)));
    }
  }

  std::vector<bool> small_good(smalls.size());
  std::vector<std::string> small_text(smalls.size());
  for (std::size_t t = 0; t < smalls.size(); ++t) {
    BasicSmallType<Elem> tau;
    for (auto e : smalls[t]) tau.polys.push_back(elements[e]);
    small_good[t] = tau.is_good();
    small_text[t] = tau.to_string();
  }
  std::vector<bool> finals;
  std::vector<std::string> labels;
  for (const auto& members : larges) {
    finals.push_back(std::all_of(members.begin(), members.end(),
                                 [&](std::uint32_t t) { return small_good[t]; }));
    std::vector<std::string> parts;
    for (auto t : members) parts.push_back(small_text[t]);
    std::sort(parts.begin(), parts.end());
    std::string label = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) label += "; ";
      label += parts[i];
    }
    labels.push_back(label + "}");
  }
  const auto num_small = smalls.size();
  return {Automaton(sigma1, std::move(delta), std::move(finals), std::move(labels), 0),
          std::move(elements), num_small};
}

}  // namespace ede::detail
