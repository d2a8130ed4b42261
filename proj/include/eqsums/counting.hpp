// Counting layer: turns collision aggregates into the solution counts of
//
//   x0^c + x1^c + x2^c = x3^c + x4^c + x5^c
//   x0^d + x1^d + x2^d = x3^d + x4^d + x5^d,     1 <= xi <= B,
//
// all counts over ORDERED sextuples, all arithmetic exact. For each power-sum
// key with ordered-triple multiplicity n the key contributes n^2 ordered
// solutions, of which sum(w^2) over its canonical triples are trivial
// (right side a permutation of the left). Primitive counts come from Moebius
// inversion of N over the gcd scaling m -> m*x.
#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "eqsums/aggregates.hpp"
#include "eqsums/arith.hpp"
#include "eqsums/exponents.hpp"
#include "eqsums/nat.hpp"
#include "eqsums/triples.hpp"

namespace eqsums {

struct CountReport {
  std::uint32_t B = 0;
  ExponentPair exponents;
  Nat total_ordered;
  Nat trivial_ordered;
  Nat nontrivial_ordered;
  std::optional<Nat> primitive_nontrivial;

  friend bool operator==(const CountReport&, const CountReport&) = default;
};

// One non-trivial coincidence: two distinct multisets sharing a power key.
struct SolutionPair {
  CanonicalTriple left;   // lexicographically smaller triple
  CanonicalTriple right;
  PowerKey key;           // exact (S_c, S_d), re-verified from scratch
  std::uint64_t height = 0;  // max of the six coordinates
  std::uint64_t gcd = 0;     // gcd of the six coordinates
};

// Exact count of ordered trivial sextuples: 6B^3 - 9B^2 + 4B.
// (36*C(B,3) generic + 9*B(B-1) two-equal + B all-equal.)
inline Nat trivial_count_closed_form(std::uint64_t B) {
  if (B == 0) throw std::invalid_argument("trivial_count_closed_form: B >= 1");
  Nat b = B;
  return 6 * b * b * b - 9 * b * b + 4 * b;
}

namespace detail {

struct CountTotals {
  u128 sum_w = 0;    // = B^3 over all keys
  u128 sum_w_sq = 0; // total ordered solutions
  u128 sum_w2 = 0;   // trivial ordered solutions
  std::uint64_t keys = 0;
};

template <class SumInt>
CountTotals accumulate_totals(std::uint32_t B, const ExponentPair& e,
                              const EnumeratorOptions& opts) {
  CountTotals t;
  for_each_shard_aggregates<SumInt>(
      B, e, opts, [&](std::uint32_t, std::vector<KeyAggregate<SumInt>> aggs) {
        for (const auto& a : aggs) {
          t.sum_w += a.sum_w;
          t.sum_w_sq += u128(a.sum_w) * a.sum_w;
          t.sum_w2 += a.sum_w2;
          t.keys += 1;
        }
      });
  return t;
}

inline CountTotals run_lane(std::uint32_t B, const ExponentPair& e,
                            const EnumeratorOptions& opts) {
  Nat lim = 3 * pow_nat(Nat(B), e.d);
  if (fits_u64(lim)) return accumulate_totals<u64>(B, e, opts);
  if (fits_u128(lim)) return accumulate_totals<u128>(B, e, opts);
  return accumulate_totals<Nat>(B, e, opts);
}

}  // namespace detail

// Counting engine with a per-(c,d,B) memo so the Moebius ladder and scaling
// schedules reuse base counts. Not thread-safe across calls; the parallelism
// lives inside the enumerator.
class CountingEngine {
 public:
  explicit CountingEngine(EnumeratorOptions opts = {}) : opts_(opts) {}

  const EnumeratorOptions& options() const { return opts_; }

  CountReport count_report(const ExponentPair& e, std::uint32_t B,
                           bool with_primitive = true) {
    CountReport r = base_report(e, B);
    if (with_primitive) r.primitive_nontrivial = primitive_nontrivial(e, B);
    return r;
  }

  // Sum over m of mu(m) * N(floor(B/m)): the exact inversion of
  // N(B) = sum over m of N_prim(floor(B/m)).
  Nat primitive_nontrivial(const ExponentPair& e, std::uint32_t B) {
    if (B == 0) throw std::invalid_argument("primitive_nontrivial: B >= 1");
    MobiusSieve sieve(B);
    Nat acc = 0;
    for (std::uint32_t m = 1; m <= B; ++m) {
      int mu = sieve(m);
      if (mu == 0) continue;
      const Nat& n = base_report(e, B / m).nontrivial_ordered;
      if (mu > 0) acc += n; else acc -= n;
    }
    return acc;
  }

  // Up to cap exactly-verified solution pairs, sorted by (height, left,
  // right); exhaustive when the true number of pairs is <= cap.
  std::vector<SolutionPair> list_nontrivial(const ExponentPair& e, std::uint32_t B,
                                            std::uint64_t cap) {
    std::vector<SolutionPair> out;
    if (B == 0) throw std::invalid_argument("list_nontrivial: B >= 1");
    Nat lim = 3 * pow_nat(Nat(B), e.d);
    if (fits_u64(lim)) collect_pairs<u64>(e, B, out);
    else if (fits_u128(lim)) collect_pairs<u128>(e, B, out);
    else collect_pairs<Nat>(e, B, out);
    std::sort(out.begin(), out.end(), [](const SolutionPair& a, const SolutionPair& b) {
      return std::tie(a.height, a.left, a.right) < std::tie(b.height, b.left, b.right);
    });
    if (out.size() > cap) out.resize(cap);
    return out;
  }

 private:
  const CountReport& base_report(const ExponentPair& e, std::uint32_t B) {
    auto cache_key = std::make_tuple(e.c, e.d, B);
    auto it = cache_.find(cache_key);
    if (it != cache_.end()) return it->second;

    if (B == 0) throw std::invalid_argument("count_report: B >= 1");
    if (B > 2'000'000) throw std::invalid_argument("count_report: B too large");
    auto t = detail::run_lane(B, e, opts_);
    if (t.sum_w != u128(B) * B * B)
      throw std::logic_error("count_report: ordered-triple mass mismatch");
    CountReport r{B, e, nat_from_u128(t.sum_w_sq), nat_from_u128(t.sum_w2),
                  nat_from_u128(t.sum_w_sq - t.sum_w2), std::nullopt};
    return cache_.emplace(cache_key, std::move(r)).first->second;
  }

  template <class SumInt>
  void collect_pairs(const ExponentPair& e, std::uint32_t B,
                     std::vector<SolutionPair>& out) {
    // pass 1: keys with >= 2 canonical triples
    std::vector<PowerKeyT<SumInt>> colliding;
    for_each_shard_aggregates<SumInt>(
        B, e, opts_, [&](std::uint32_t, std::vector<KeyAggregate<SumInt>> aggs) {
          for (auto& a : aggs)
            if (a.triples >= 2) colliding.push_back(std::move(a.key));
        });
    if (colliding.empty()) return;
    auto key_less = [](const PowerKeyT<SumInt>& a, const PowerKeyT<SumInt>& b) {
      if (a.sc != b.sc) return a.sc < b.sc;
      return a.sd < b.sd;
    };
    std::sort(colliding.begin(), colliding.end(), key_less);

    // pass 2: re-stream, keep triples mapping into a colliding key
    const auto pc = detail::power_table<SumInt>(B, e.c);
    const auto pd = detail::power_table<SumInt>(B, e.d);
    std::vector<std::vector<CanonicalTriple>> buckets(colliding.size());
    for_each_canonical_triple(B, [&](std::uint32_t x0, std::uint32_t x1,
                                     std::uint32_t x2, std::uint32_t) {
      PowerKeyT<SumInt> k{SumInt(pc[x0] + pc[x1] + pc[x2]),
                          SumInt(pd[x0] + pd[x1] + pd[x2])};
      auto it = std::lower_bound(colliding.begin(), colliding.end(), k, key_less);
      if (it != colliding.end() && *it == k)
        buckets[std::size_t(it - colliding.begin())].push_back({x0, x1, x2});
    });

    for (const auto& bucket : buckets)
      for (std::size_t i = 0; i < bucket.size(); ++i)
        for (std::size_t j = i + 1; j < bucket.size(); ++j)
          out.push_back(make_pair_checked(e, bucket[i], bucket[j]));
  }

  // Builds the pair and re-verifies the key with arbitrary-precision
  // arithmetic; a mismatch means the fixed-width lane lied and is fatal.
  SolutionPair make_pair_checked(const ExponentPair& e, CanonicalTriple a,
                                 CanonicalTriple b) {
    auto sums = [&](const CanonicalTriple& t) {
      return PowerKey{pow_nat(Nat(t.x0), e.c) + pow_nat(Nat(t.x1), e.c) + pow_nat(Nat(t.x2), e.c),
                      pow_nat(Nat(t.x0), e.d) + pow_nat(Nat(t.x1), e.d) + pow_nat(Nat(t.x2), e.d)};
    };
    PowerKey ka = sums(a), kb = sums(b);
    if (!(ka == kb)) throw std::logic_error("solution pair failed exact re-verification");
    SolutionPair p;
    p.left = std::min(a, b);
    p.right = std::max(a, b);
    p.key = ka;
    p.height = std::max(a.x2, b.x2);
    p.gcd = gcd6(std::array<std::uint64_t, 6>{a.x0, a.x1, a.x2, b.x0, b.x1, b.x2});
    return p;
  }

  EnumeratorOptions opts_;
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, CountReport> cache_;
};

// Direct O(B^6) reference count over all ordered sextuples. Deliberately
// naive: this is the independent oracle the engine is judged against.
inline CountReport brute_force_oracle(const ExponentPair& e, std::uint32_t B) {
  if (B == 0) throw std::invalid_argument("brute_force_oracle: B >= 1");
  if (B > 12)
    throw std::invalid_argument(
        "brute_force_oracle: refusing B > 12 (O(B^6) loop); use the main engine");

  std::vector<Nat> pc(B + 1), pd(B + 1);
  for (std::uint32_t x = 1; x <= B; ++x) {
    pc[x] = pow_nat(Nat(x), e.c);
    pd[x] = pow_nat(Nat(x), e.d);
  }

  Nat total = 0, trivial = 0, nontrivial = 0, primitive = 0;
  std::array<std::uint32_t, 3> l{}, r{};
  for (l[0] = 1; l[0] <= B; ++l[0])
    for (l[1] = 1; l[1] <= B; ++l[1])
      for (l[2] = 1; l[2] <= B; ++l[2]) {
        Nat sc = pc[l[0]] + pc[l[1]] + pc[l[2]];
        Nat sd = pd[l[0]] + pd[l[1]] + pd[l[2]];
        auto lsort = l;
        std::sort(lsort.begin(), lsort.end());
        for (r[0] = 1; r[0] <= B; ++r[0])
          for (r[1] = 1; r[1] <= B; ++r[1])
            for (r[2] = 1; r[2] <= B; ++r[2]) {
              if (pc[r[0]] + pc[r[1]] + pc[r[2]] != sc) continue;
              if (pd[r[0]] + pd[r[1]] + pd[r[2]] != sd) continue;
              total += 1;
              auto rsort = r;
              std::sort(rsort.begin(), rsort.end());
              if (rsort == lsort) {
                trivial += 1;
              } else {
                nontrivial += 1;
                if (gcd6(std::array<std::uint64_t, 6>{l[0], l[1], l[2], r[0], r[1], r[2]}) == 1)
                  primitive += 1;
              }
            }
      }

  CountReport rep{B, e, total, trivial, nontrivial, primitive};
  return rep;
}

}  // namespace eqsums
