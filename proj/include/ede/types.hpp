#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace ede {

// An s-tuple of ring elements, one per summand: the residue each summand has
// left after a digit prefix has been consumed and a weeding word applied.
template <class Elem>
struct BasicSmallType {
  std::vector<Elem> polys;

  // Good iff the components sum to zero.
  bool is_good() const {
    if (polys.empty()) return true;
    Elem sum = polys.front();
    for (std::size_t i = 1; i < polys.size(); ++i) sum += polys[i];
    return sum.is_zero();
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < polys.size(); ++i) {
      if (i) s += " | ";
      s += polys[i].to_string();
    }
    return s + "]";
  }

  friend bool operator==(const BasicSmallType&, const BasicSmallType&) = default;
  friend bool operator<(const BasicSmallType& a, const BasicSmallType& b) {
    return std::lexicographical_compare(a.polys.begin(), a.polys.end(), b.polys.begin(),
                                        b.polys.end());
  }
};

// A finite set of small types, kept sorted and deduplicated.
template <class Elem>
struct BasicLargeType {
  std::vector<BasicSmallType<Elem>> members;

  static BasicLargeType from(std::vector<BasicSmallType<Elem>> items) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    return BasicLargeType{std::move(items)};
  }

  std::size_t size() const { return members.size(); }

  // Vacuously good when empty.
  bool is_good() const {
    return std::all_of(members.begin(), members.end(), [](const auto& m) { return m.is_good(); });
  }

  // Sorted member serializations; equal sets give equal fingerprints.
  std::string fingerprint() const {
    std::vector<std::string> parts;
    for (const auto& m : members) parts.push_back(m.to_string());
    std::sort(parts.begin(), parts.end());
    std::string s = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += "; ";
      s += parts[i];
    }
    return s + "}";
  }

  friend bool operator==(const BasicLargeType&, const BasicLargeType&) = default;
};

}  // namespace ede
