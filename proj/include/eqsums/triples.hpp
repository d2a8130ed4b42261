// Canonical (sorted) triples with permutation weights: the stream the
// meet-in-the-middle engine consumes. One canonical triple stands for all
// ordered arrangements of its multiset, so a full pass costs O(B^3/6).
#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>

namespace eqsums {

struct CanonicalTriple {
  std::uint32_t x0 = 0, x1 = 0, x2 = 0;  // x0 <= x1 <= x2

  auto operator<=>(const CanonicalTriple&) const = default;

  // Number of distinct ordered arrangements of the multiset {x0,x1,x2}.
  std::uint32_t weight() const {
    if (x0 == x2) return 1;
    if (x0 == x1 || x1 == x2) return 3;
    return 6;
  }
};

// C(B+2,3): total stream length.
inline std::uint64_t canonical_triple_count(std::uint64_t B) {
  if (B == 0) throw std::invalid_argument("canonical_triple_count: B >= 1");
  if (B > 2'000'000) throw std::invalid_argument("canonical_triple_count: B too large");
  return B * (B + 1) * (B + 2) / 6;
}

// Yields every sorted triple with entries in [1,B] exactly once, in
// lexicographic ascending order. f(x0, x1, x2, weight).
template <class F>
void for_each_canonical_triple(std::uint32_t B, F&& f) {
  if (B == 0) throw std::invalid_argument("for_each_canonical_triple: B >= 1");
  for (std::uint32_t x0 = 1; x0 <= B; ++x0)
    for (std::uint32_t x1 = x0; x1 <= B; ++x1) {
      for (std::uint32_t x2 = x1; x2 <= B; ++x2) {
        std::uint32_t w;
        if (x0 == x2) w = 1;
        else if (x0 == x1 || x1 == x2) w = 3;
        else w = 6;
        f(x0, x1, x2, w);
      }
    }
}

}  // namespace eqsums
