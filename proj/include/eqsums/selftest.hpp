// Built-in consistency suites for the `selftest` subcommand: the engine
// against the O(B^6) oracle, closed forms, Moebius round trips, and the
// geometry censuses, at sizes that finish in seconds.
#pragma once

#include <functional>
#include <iostream>
#include <string>

#include "eqsums/bounds.hpp"
#include "eqsums/counting.hpp"
#include "eqsums/planes.hpp"
#include "eqsums/scaling.hpp"

namespace eqsums {

inline bool run_selftest(std::ostream& os, const EnumeratorOptions& opts = {}) {
  bool all_ok = true;
  auto check = [&](const std::string& name, const std::function<bool()>& fn) {
    bool ok = false;
    std::string detail;
    try {
      ok = fn();
    } catch (const std::exception& ex) {
      detail = std::string(" (") + ex.what() + ")";
    }
    os << (ok ? "[ok]   " : "[FAIL] ") << name << detail << "\n";
    all_ok = all_ok && ok;
  };

  CountingEngine engine(opts);

  check("oracle equivalence, five exponent pairs, B <= 6", [&] {
    for (auto [c, d] : {std::pair{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}) {
      ExponentPair e(c, d);
      for (std::uint32_t B = 1; B <= 6; ++B)
        if (!(engine.count_report(e, B) == brute_force_oracle(e, B))) return false;
    }
    return true;
  });

  check("trivial count matches closed form, B <= 60", [&] {
    ExponentPair e(1, 2);
    for (std::uint32_t B = 1; B <= 60; ++B)
      if (engine.count_report(e, B, false).trivial_ordered != trivial_count_closed_form(B))
        return false;
    return true;
  });

  check("Moebius round trip, (1,2), B <= 30", [&] {
    ExponentPair e(1, 2);
    for (std::uint32_t B = 1; B <= 30; ++B) {
      Nat lhs = 0;
      for (std::uint32_t m = 1; m <= B; ++m)
        lhs += engine.primitive_nontrivial(e, B / m);
      if (lhs != engine.count_report(e, B, false).nontrivial_ordered) return false;
    }
    return true;
  });

  check("standard plane count is 15 k^3, k <= 4", [&] {
    for (std::uint32_t k = 1; k <= 4; ++k) {
      auto planes = standard_planes(k);
      if (planes.size() != 15ull * k * k * k) return false;
      for (const auto& p : planes)
        if (!verify_plane_containment(p)) return false;
    }
    return true;
  });

  check("six rational-positive planes on X, 4 <= d <= 6", [&] {
    for (std::uint32_t d = 4; d <= 6; ++d)
      for (std::uint32_t c = 1; c < d; ++c)
        if (planes_on_X(ExponentPair(c, d)).total_rational_positive != 6) return false;
    return true;
  });

  check("linear space counts by generation, m <= 2, k <= 3", [&] {
    for (std::uint32_t m = 1; m <= 2; ++m)
      for (std::uint32_t k = 1; k <= 3; ++k) {
        auto fam = linear_space_count(m, k);
        if (fam.count != double_factorial_odd(m) * pow_nat(Nat(k), m + 1)) return false;
      }
    return true;
  });

  check("bound catalog spot values", [&] {
    auto b15 = bound_catalog(ExponentPair(1, 5));
    if (!b15.theorem || !(*b15.theorem == Frac(17, 6))) return false;
    auto b23 = bound_catalog(ExponentPair(2, 3));
    if (b23.theorem || !b23.wooley_23 || !(*b23.wooley_23 == Frac(7, 3))) return false;
    return true;
  });

  os << (all_ok ? "selftest: all checks passed\n" : "selftest: FAILURES above\n");
  return all_ok;
}

}  // namespace eqsums
