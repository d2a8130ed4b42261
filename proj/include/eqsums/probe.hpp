// Falsification probe for the plane classification on F_k, k in {4,5}:
// exhaustively enumerate planes over F_p in the normal form
//
//   span{ [1,0,0,a3,a4,a5], [0,1,0,b3,b4,b5], [0,0,1,g3,g4,g5] },
//
// i.e. rowspace [I3 | M], and report whether every plane found is standard
// mod p (M a monomial matrix whose entries are k-th roots of -1). This is a
// consistency check against reduction mod p, not a proof.
//
// Containment means u0^k + u1^k + u2^k + L3^k + L4^k + L5^k vanishes
// identically, L_{3+i} = a_i u0 + b_i u1 + g_i u2. Since p > k the multinomial
// coefficients are units, so the conditions are the power-sum coefficient
// equations. Enumeration: meet-in-the-middle on the (a,b) coefficient vectors
// (the u2-free conditions), then the g's from the linear (gamma = 1)
// conditions' null space, checked against the remaining ones.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace eqsums {

struct ProbePlane {
  // rows of M: coefficients (on u0,u1,u2) of L3, L4, L5
  std::array<std::array<std::uint32_t, 3>, 3> forms{};
  bool standard = false;
  friend auto operator<=>(const ProbePlane&, const ProbePlane&) = default;
};

struct ProbeReport {
  std::uint32_t k = 0;
  std::uint32_t p = 0;
  std::uint64_t seed = 0;
  std::uint64_t ab_partial_solutions = 0;  // (a,b) systems before g-extension
  std::uint64_t planes_found = 0;
  std::uint64_t standard_count = 0;
  bool all_standard = false;
  std::vector<ProbePlane> nonstandard_examples;  // at most 5
};

namespace detail {

inline std::uint32_t fp_pow(std::uint32_t x, std::uint32_t e, std::uint32_t p) {
  std::uint64_t acc = 1, b = x % p;
  while (e) {
    if (e & 1u) acc = acc * b % p;
    b = b * b % p;
    e >>= 1u;
  }
  return std::uint32_t(acc);
}

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

// Basis of the kernel of a (rows x 3) system over F_p.
inline std::vector<std::array<std::uint32_t, 3>> fp_null_space(
    std::vector<std::array<std::uint32_t, 3>> m, std::uint32_t p) {
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int col = 0; col < 3 && r < m.size(); ++col) {
    std::size_t sel = m.size();
    for (std::size_t i = r; i < m.size(); ++i)
      if (m[i][col] % p != 0) { sel = i; break; }
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);
    std::uint64_t inv = fp_pow(m[r][col], p - 2, p);
    for (auto& v : m[r]) v = std::uint32_t(v * inv % p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][col] == 0) continue;
      std::uint64_t f = m[i][col];
      for (int j = 0; j < 3; ++j)
        m[i][j] = std::uint32_t((m[i][j] + (p - f % p) * m[r][j]) % p);
    }
    pivot_col.push_back(col);
    ++r;
  }
  std::vector<std::array<std::uint32_t, 3>> basis;
  for (int col = 0; col < 3; ++col) {
    if (std::find(pivot_col.begin(), pivot_col.end(), col) != pivot_col.end()) continue;
    std::array<std::uint32_t, 3> v{0, 0, 0};
    v[col] = 1;
    for (std::size_t ri = 0; ri < pivot_col.size(); ++ri)
      v[pivot_col[ri]] = (p - m[ri][col] % p) % p;
    basis.push_back(v);
  }
  return basis;
}

}  // namespace detail

inline ProbeReport nonstandard_plane_probe(std::uint32_t k, std::uint32_t p,
                                           std::uint64_t seed = 0) {
  if (k != 4 && k != 5)
    throw std::invalid_argument("nonstandard_plane_probe: k must be 4 or 5");
  if (!detail::is_prime_u32(p) || p > 31)
    throw std::invalid_argument("nonstandard_plane_probe: p must be a prime <= 31");
  if (p % (2 * k) != 1)
    throw std::invalid_argument("nonstandard_plane_probe: need p == 1 (mod " +
                                std::to_string(2 * k) + ") so F_p has k-th roots of -1");

  // x^j tables
  std::vector<std::array<std::uint32_t, 8>> pw(p);
  for (std::uint32_t x = 0; x < p; ++x)
    for (std::uint32_t j = 0; j <= k; ++j) pw[x][j] = detail::fp_pow(x, j, p);

  // v(a,b) = (a^k, a^{k-1} b, ..., b^k), packed 5 bits per component
  auto vec_of = [&](std::uint32_t a, std::uint32_t b) {
    std::uint64_t packed = 0;
    for (std::uint32_t j = 0; j <= k; ++j)
      packed |= std::uint64_t(pw[a][k - j] * pw[b][j] % p) << (5 * j);
    return packed;
  };

  std::vector<std::pair<std::uint32_t, std::uint32_t>> forms;
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b) forms.emplace_back(a, b);
  // seed controls only the traversal order; the report is canonical
  std::mt19937_64 rng(seed);
  std::shuffle(forms.begin(), forms.end(), rng);

  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> by_vec;
  for (std::uint32_t i = 0; i < forms.size(); ++i)
    by_vec[vec_of(forms[i].first, forms[i].second)].push_back(i);

  std::uint64_t target = 0;
  target |= std::uint64_t(p - 1);            // coefficient of u0^k: 1 + sum a^k = 0
  target |= std::uint64_t(p - 1) << (5 * k); // coefficient of u1^k
  auto sub_mod = [&](std::uint64_t t, std::uint64_t v) {
    std::uint64_t out = 0;
    for (std::uint32_t j = 0; j <= k; ++j) {
      std::uint64_t tj = (t >> (5 * j)) & 31u, vj = (v >> (5 * j)) & 31u;
      out |= ((tj + p - vj) % p) << (5 * j);
    }
    return out;
  };
  auto add_mod = [&](std::uint64_t x, std::uint64_t y) {
    std::uint64_t out = 0;
    for (std::uint32_t j = 0; j <= k; ++j) {
      std::uint64_t a = (x >> (5 * j)) & 31u, b = (y >> (5 * j)) & 31u;
      out |= ((a + b) % p) << (5 * j);
    }
    return out;
  };

  ProbeReport report;
  report.k = k;
  report.p = p;
  report.seed = seed;

  std::vector<ProbePlane> found;
  for (std::uint32_t i3 = 0; i3 < forms.size(); ++i3) {
    std::uint64_t v3 = vec_of(forms[i3].first, forms[i3].second);
    for (std::uint32_t i4 = 0; i4 < forms.size(); ++i4) {
      std::uint64_t v34 = add_mod(v3, vec_of(forms[i4].first, forms[i4].second));
      auto it = by_vec.find(sub_mod(target, v34));
      if (it == by_vec.end()) continue;
      for (std::uint32_t i5 : it->second) {
        report.ab_partial_solutions += 1;
        const std::array<std::uint32_t, 3> A{forms[i3].first, forms[i4].first,
                                             forms[i5].first};
        const std::array<std::uint32_t, 3> Bc{forms[i3].second, forms[i4].second,
                                              forms[i5].second};
        // gamma = 1 conditions: sum_i a_i^alpha b_i^beta g_i = 0, alpha+beta = k-1
        std::vector<std::array<std::uint32_t, 3>> rows;
        for (std::uint32_t alpha = 0; alpha < k; ++alpha) {
          std::uint32_t beta = k - 1 - alpha;
          rows.push_back({pw[A[0]][alpha] * pw[Bc[0]][beta] % p,
                          pw[A[1]][alpha] * pw[Bc[1]][beta] % p,
                          pw[A[2]][alpha] * pw[Bc[2]][beta] % p});
        }
        auto basis = detail::fp_null_space(rows, p);
        std::uint64_t combos = 1;
        for (std::size_t t = 0; t < basis.size(); ++t) combos *= p;
        for (std::uint64_t idx = 0; idx < combos; ++idx) {
          std::array<std::uint32_t, 3> g{0, 0, 0};
          std::uint64_t rem = idx;
          for (const auto& bv : basis) {
            std::uint64_t cf = rem % p;
            rem /= p;
            for (int t = 0; t < 3; ++t)
              g[t] = std::uint32_t((g[t] + cf * bv[t]) % p);
          }
          // remaining (gamma >= 2) conditions, including 1 + sum g^k = 0
          bool ok = true;
          for (std::uint32_t alpha = 0; alpha <= k && ok; ++alpha)
            for (std::uint32_t beta = 0; alpha + beta <= k && ok; ++beta) {
              std::uint32_t gamma = k - alpha - beta;
              if (gamma < 2) continue;
              std::uint64_t s = 0;
              for (int t = 0; t < 3; ++t)
                s += std::uint64_t(pw[A[t]][alpha]) * pw[Bc[t]][beta] % p * pw[g[t]][gamma] % p;
              if (alpha == 0 && beta == 0) s += 1;
              if (s % p != 0) ok = false;
            }
          if (!ok) continue;
          ProbePlane plane;
          plane.forms = {std::array<std::uint32_t, 3>{A[0], Bc[0], g[0]},
                         std::array<std::uint32_t, 3>{A[1], Bc[1], g[1]},
                         std::array<std::uint32_t, 3>{A[2], Bc[2], g[2]}};
          // standard <=> monomial matrix with entries mu, mu^k = -1
          bool standard = true;
          std::array<bool, 3> col_used{false, false, false};
          for (const auto& row : plane.forms) {
            int nz = -1;
            for (int t = 0; t < 3; ++t)
              if (row[t] != 0) nz = (nz == -1) ? t : -2;
            if (nz < 0 || col_used[nz] ||
                detail::fp_pow(row[nz], k, p) != p - 1) {
              standard = false;
              break;
            }
            col_used[nz] = true;
          }
          plane.standard = standard;
          found.push_back(plane);
        }
      }
    }
  }

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  report.planes_found = found.size();
  for (const auto& pl : found) {
    if (pl.standard) {
      report.standard_count += 1;
    } else if (report.nonstandard_examples.size() < 5) {
      report.nonstandard_examples.push_back(pl);
    }
  }
  report.all_standard = report.standard_count == report.planes_found;
  return report;
}

}  // namespace eqsums
