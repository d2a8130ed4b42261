// Constructive plane geometry on Fermat hypersurfaces.
//
// A standard plane on F_k : x0^k + ... + x5^k = 0 comes from a perfect
// matching of the six coordinates into three pairs {i,j}, each pair carrying
// a point (x_i, x_j) = (1, zeta) with zeta^k = -1; the plane is the span of
// the three pair vectors. There are 15 matchings and k admissible roots per
// pair, hence 15*k^3 standard planes.
//
// The signed form G_k : x0^k+x1^k+x2^k-x3^k-x4^k-x5^k = 0 reuses the same
// generator with a sign vector: a pair with sign product +1 still needs
// zeta^k = -1, a mixed pair needs zeta^k = +1.
#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "eqsums/arith.hpp"
#include "eqsums/exponents.hpp"
#include "eqsums/nat.hpp"
#include "eqsums/roots.hpp"

namespace eqsums {

struct IndexPair {
  std::uint8_t lo = 0, hi = 0;
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

struct StandardPlane {
  std::uint32_t degree = 1;                // k
  std::array<IndexPair, 3> pairing{};      // matching, canonical order (see below)
  std::array<RootOfUnity, 3> roots{};      // root on the hi coordinate, lo = 1
  std::array<std::int8_t, 6> signs{1, 1, 1, 1, 1, 1};

  friend auto operator<=>(const StandardPlane&, const StandardPlane&) = default;
};

// All perfect matchings of {0,...,n-1} (n even), each in canonical form:
// pairs as (lo,hi) with lo < hi, sorted by lo; lo of the first pair is the
// smallest unmatched index at every step, so the list itself is canonical.
inline std::vector<std::vector<IndexPair>> perfect_matchings(std::size_t n) {
  if (n % 2 != 0) throw std::invalid_argument("perfect_matchings: n must be even");
  std::vector<std::vector<IndexPair>> out;
  std::vector<IndexPair> current;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self) -> void {
    std::size_t first = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!used[i]) { first = i; break; }
    if (first == n) {
      out.push_back(current);
      return;
    }
    used[first] = true;
    for (std::size_t j = first + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      current.push_back({std::uint8_t(first), std::uint8_t(j)});
      self(self);
      current.pop_back();
      used[j] = false;
    }
    used[first] = false;
  };
  rec(rec);
  return out;
}

// All 15*k^3 standard planes of F_k, canonical and duplicate-free.
inline std::vector<StandardPlane> standard_planes(std::uint32_t k) {
  if (k == 0) throw std::invalid_argument("standard_planes: k >= 1");
  const auto matchings = perfect_matchings(6);
  std::vector<StandardPlane> out;
  out.reserve(15 * std::size_t(k) * k * k);
  for (const auto& m : matchings) {
    // roots of -1 are the odd numerators in the 2k-th root group
    std::array<std::uint32_t, 3> num{};
    for (num[0] = 1; num[0] < 2 * k; num[0] += 2)
      for (num[1] = 1; num[1] < 2 * k; num[1] += 2)
        for (num[2] = 1; num[2] < 2 * k; num[2] += 2) {
          StandardPlane p;
          p.degree = k;
          p.pairing = {m[0], m[1], m[2]};
          p.roots = {RootOfUnity(num[0], k), RootOfUnity(num[1], k),
                     RootOfUnity(num[2], k)};
          out.push_back(p);
        }
  }
  return out;
}

// True iff substituting the parametrization into the (signed) degree-k form
// gives the zero form: each pair {i,j} contributes lambda^k (s_i + s_j zeta^k),
// so the check is zeta^k = -(s_i * s_j) in exponent arithmetic.
inline bool verify_plane_containment(const StandardPlane& p) {
  std::array<bool, 6> seen{};
  for (const auto& pr : p.pairing) {
    if (pr.lo >= pr.hi || pr.hi > 5) return false;
    if (seen[pr.lo] || seen[pr.hi]) return false;
    seen[pr.lo] = seen[pr.hi] = true;
  }
  for (int a = 0; a < 3; ++a) {
    const auto& pr = p.pairing[a];
    int sign_product = int(p.signs[pr.lo]) * int(p.signs[pr.hi]);
    if (sign_product > 0) {
      if (!p.roots[a].kth_power_is_minus_one(p.degree)) return false;
    } else {
      if (!p.roots[a].kth_power_is_one(p.degree)) return false;
    }
  }
  return true;
}

struct PlaneCensus {
  ExponentPair exponents;
  std::uint64_t total_on_x = 0;               // planes contained in G_c and G_d
  std::uint64_t total_rational_positive = 0;  // of those, planes with a rational
                                              // all-positive point
  std::vector<StandardPlane> planes;          // the rational-positive planes
};

// Census of planes on X_{c,d} = G_c cap G_d for d >= 4, where every plane of
// G_d is standard. A pair root zeta = exp(i*pi*n/d) lies in G_c's kernel too
// iff n*c == d (mod 2d) for a same-sign pair, n*c == 0 (mod 2d) for a mixed
// pair. A plane carries an all-positive rational point iff every pair ratio
// is +1, which forces an all-mixed pairing: the six trivial planes.
inline PlaneCensus planes_on_X(const ExponentPair& e) {
  if (e.d < 4)
    throw std::invalid_argument("planes_on_X: requires d >= 4 (plane classification)");
  const std::uint32_t c = e.c, d = e.d;
  const std::array<std::int8_t, 6> signs{1, 1, 1, -1, -1, -1};

  PlaneCensus census{e, 0, 0, {}};
  for (const auto& m : perfect_matchings(6)) {
    // admissible root numerators per pair
    std::array<std::vector<std::uint32_t>, 3> choices;
    for (int a = 0; a < 3; ++a) {
      int sign_product = int(signs[m[a].lo]) * int(signs[m[a].hi]);
      for (std::uint32_t n = 0; n < 2 * d; ++n) {
        bool on_gd = sign_product > 0 ? (n % 2 == 1) : (n % 2 == 0);
        if (!on_gd) continue;
        std::uint64_t nc = std::uint64_t(n) * c % (2 * d);
        bool on_gc = sign_product > 0 ? (nc == d) : (nc == 0);
        if (on_gc) choices[a].push_back(n);
      }
    }
    for (std::uint32_t n0 : choices[0])
      for (std::uint32_t n1 : choices[1])
        for (std::uint32_t n2 : choices[2]) {
          census.total_on_x += 1;
          if (n0 == 0 && n1 == 0 && n2 == 0) {
            StandardPlane p;
            p.degree = d;
            p.pairing = {m[0], m[1], m[2]};
            p.roots = {RootOfUnity(0, d), RootOfUnity(0, d), RootOfUnity(0, d)};
            p.signs = signs;
            census.planes.push_back(p);
            census.total_rational_positive += 1;
          }
        }
  }
  return census;
}

struct LinearSpaceFamily {
  std::uint32_t m = 1;  // dimension of the linear spaces
  std::uint32_t k = 1;  // degree of the Fermat hypersurface in P^{2m+1}
  Nat count;            // (2m+1)!! * k^(m+1)
};

// Generalized pairing construction in P^{2m+1}: matchings of 2m+2 indices,
// one k-th root of -1 per pair. Encoded as (pair indices, root numerators).
inline std::vector<std::vector<std::uint32_t>> generate_linear_spaces(std::uint32_t m,
                                                                      std::uint32_t k) {
  if (m == 0 || k == 0) throw std::invalid_argument("generate_linear_spaces: m, k >= 1");
  const std::size_t n = 2 * std::size_t(m) + 2;
  std::vector<std::vector<std::uint32_t>> spaces;
  for (const auto& match : perfect_matchings(n)) {
    std::vector<std::uint32_t> roots(match.size(), 1);  // odd numerators
    for (;;) {
      std::vector<std::uint32_t> enc;
      enc.reserve(3 * match.size());
      for (std::size_t a = 0; a < match.size(); ++a) {
        enc.push_back(match[a].lo);
        enc.push_back(match[a].hi);
        enc.push_back(roots[a]);
      }
      spaces.push_back(std::move(enc));
      // odometer over odd numerators < 2k
      std::size_t pos = 0;
      while (pos < roots.size()) {
        roots[pos] += 2;
        if (roots[pos] < 2 * k) break;
        roots[pos] = 1;
        ++pos;
      }
      if (pos == roots.size()) break;
    }
  }
  return spaces;
}

// Count by explicit generation (deduplicated), verified against the closed
// form (2m+1)!! * k^(m+1).
inline LinearSpaceFamily linear_space_count(std::uint32_t m, std::uint32_t k) {
  auto spaces = generate_linear_spaces(m, k);
  std::set<std::vector<std::uint32_t>> dedup(spaces.begin(), spaces.end());
  Nat expected = double_factorial_odd(m) * pow_nat(Nat(k), m + 1);
  if (Nat(dedup.size()) != expected)
    throw std::logic_error("linear_space_count: generation disagrees with closed form");
  return LinearSpaceFamily{m, k, expected};
}

}  // namespace eqsums
