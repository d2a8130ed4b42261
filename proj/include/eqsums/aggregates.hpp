// Meet-in-the-middle core: stream canonical triples, key each by its exact
// power-sum pair (S_c, S_d), and aggregate per-key weight sums. Sharding is
// recompute-per-shard: every shard replays the full stream and keeps only
// keys hashing into it, so shards are independent and memory scales down.
//
// Keys are exact in every lane (no lossy digest): uint64 / uint128 pairs in
// the fixed-width lanes, arbitrary-precision pairs beyond. The lane is chosen
// once per run from 3*B^d (see counting.hpp).
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "eqsums/arith.hpp"
#include "eqsums/exponents.hpp"
#include "eqsums/nat.hpp"
#include "eqsums/triples.hpp"

namespace eqsums {

struct ShardDesc {
  std::uint32_t index = 0;
  std::uint32_t count = 1;
};

struct EnumeratorOptions {
  std::uint32_t shard_count = 1;
  std::uint32_t workers = 1;
  std::uint64_t memory_budget_bytes = std::uint64_t(1) << 30;  // 1 GiB
  bool keep_witnesses = false;
  std::uint32_t witness_cap = 64;  // per key, when witnesses are kept
};

// Raised when a shard's working set would exceed its memory budget slice.
// No partial results: the caller should rerun with a larger shard_count.
class MemoryBudgetExceeded : public std::runtime_error {
 public:
  MemoryBudgetExceeded(std::uint64_t budget, std::uint32_t shard_count)
      : std::runtime_error(
            "memory budget of " + std::to_string(budget) +
            " bytes exceeded; increase shard_count (currently " +
            std::to_string(shard_count) + ", try " +
            std::to_string(shard_count * 4) + ") or raise the budget"),
        suggested_shard_count(shard_count * 4) {}
  std::uint32_t suggested_shard_count;
};

template <class SumInt>
struct PowerKeyT {
  SumInt sc{};  // x0^c + x1^c + x2^c
  SumInt sd{};  // x0^d + x1^d + x2^d
  friend bool operator==(const PowerKeyT&, const PowerKeyT&) = default;
};

using PowerKey = PowerKeyT<Nat>;

template <class SumInt>
struct KeyAggregate {
  PowerKeyT<SumInt> key;
  std::uint64_t sum_w = 0;    // sum of weights of triples sharing the key
  std::uint64_t sum_w2 = 0;   // sum of squared weights
  std::uint64_t triples = 0;  // number of canonical triples with this key
  std::vector<CanonicalTriple> witnesses;  // bounded; empty unless requested
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t shard_hash(u64 sc, u64 sd) {
  return mix64(mix64(sc) ^ (sd + 0x9e3779b97f4a7c15ULL));
}
inline std::uint64_t shard_hash(u128 sc, u128 sd) {
  return mix64(shard_hash(u64(sc), u64(sd)) ^ shard_hash(u64(sc >> 64), u64(sd >> 64)));
}
inline std::uint64_t shard_hash(const Nat& sc, const Nat& sd) {
  auto low = [](const Nat& n) {
    return (n & Nat(std::numeric_limits<u64>::max())).convert_to<u64>();
  };
  return mix64(shard_hash(low(sc), low(sd)) ^
               shard_hash(low(Nat(sc >> 64)), low(Nat(sd >> 64))));
}

template <class SumInt>
std::vector<SumInt> power_table(std::uint32_t B, unsigned k) {
  std::vector<SumInt> t(std::size_t(B) + 1);
  if constexpr (std::is_same_v<SumInt, Nat>) {
    for (std::uint32_t x = 1; x <= B; ++x) t[x] = pow_nat(Nat(x), k);
  } else {
    for (std::uint32_t x = 1; x <= B; ++x) {
      auto p = pow_u128_checked(u128(x), k);
      if (!p || (std::is_same_v<SumInt, u64> && *p > std::numeric_limits<u64>::max()))
        throw std::overflow_error("power table overflow: wrong lane selected");
      t[x] = SumInt(*p);
    }
  }
  return t;
}

}  // namespace detail

// All key aggregates whose shard-hash lands in `shard`, over the complete
// triple stream for bound B. Sorted by key; the union over all shards covers
// every key exactly once and is independent of shard.count.
template <class SumInt>
std::vector<KeyAggregate<SumInt>> build_aggregates(std::uint32_t B,
                                                   const ExponentPair& e,
                                                   ShardDesc shard,
                                                   const EnumeratorOptions& opts = {}) {
  if (B == 0) throw std::invalid_argument("build_aggregates: B >= 1");
  if (shard.count == 0 || shard.index >= shard.count)
    throw std::invalid_argument("build_aggregates: bad shard descriptor");
  if constexpr (!std::is_same_v<SumInt, Nat>) {
    Nat lim = 3 * pow_nat(Nat(B), e.d);
    bool ok = std::is_same_v<SumInt, u64> ? fits_u64(lim) : fits_u128(lim);
    if (!ok) throw std::overflow_error("build_aggregates: power sums exceed the fixed-width lane");
  }

  struct Entry {
    SumInt sc, sd;
    std::uint32_t x0, x1, x2;
  };
  const std::uint32_t active = std::max<std::uint32_t>(
      1, std::min(opts.workers == 0 ? 1 : opts.workers, shard.count));
  const std::uint64_t max_entries =
      std::max<std::uint64_t>(1024, opts.memory_budget_bytes / active / sizeof(Entry));

  const auto pc = detail::power_table<SumInt>(B, e.c);
  const auto pd = detail::power_table<SumInt>(B, e.d);

  std::vector<Entry> entries;
  const bool sharded = shard.count > 1;
  for_each_canonical_triple(B, [&](std::uint32_t x0, std::uint32_t x1,
                                   std::uint32_t x2, std::uint32_t) {
    SumInt sc = SumInt(pc[x0] + pc[x1] + pc[x2]);
    SumInt sd = SumInt(pd[x0] + pd[x1] + pd[x2]);
    if (sharded && detail::shard_hash(sc, sd) % shard.count != shard.index) return;
    if (entries.size() >= max_entries)
      throw MemoryBudgetExceeded(opts.memory_budget_bytes, shard.count);
    entries.push_back(Entry{std::move(sc), std::move(sd), x0, x1, x2});
  });

  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.sc != b.sc) return a.sc < b.sc;
    if (a.sd != b.sd) return a.sd < b.sd;
    return std::tie(a.x0, a.x1, a.x2) < std::tie(b.x0, b.x1, b.x2);
  });

  std::vector<KeyAggregate<SumInt>> out;
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i;
    KeyAggregate<SumInt> agg;
    agg.key = {entries[i].sc, entries[i].sd};
    while (j < entries.size() && entries[j].sc == agg.key.sc && entries[j].sd == agg.key.sd) {
      CanonicalTriple t{entries[j].x0, entries[j].x1, entries[j].x2};
      std::uint64_t w = t.weight();
      agg.sum_w += w;
      agg.sum_w2 += w * w;
      agg.triples += 1;
      if (opts.keep_witnesses && agg.witnesses.size() < opts.witness_cap)
        agg.witnesses.push_back(t);
      ++j;
    }
    out.push_back(std::move(agg));
    i = j;
  }
  return out;
}

// Drives every shard, on up to opts.workers threads. `consume` runs under a
// lock and may see shards out of order; counting reductions are commutative
// sums, so any consumption order yields the same totals. Order-sensitive
// callers collect and sort afterwards.
template <class SumInt, class Consume>
void for_each_shard_aggregates(std::uint32_t B, const ExponentPair& e,
                               const EnumeratorOptions& opts, Consume&& consume) {
  const std::uint32_t shards = std::max<std::uint32_t>(1, opts.shard_count);
  const std::uint32_t workers =
      std::max<std::uint32_t>(1, std::min(opts.workers == 0 ? 1 : opts.workers, shards));

  if (workers == 1) {
    for (std::uint32_t s = 0; s < shards; ++s)
      consume(s, build_aggregates<SumInt>(B, e, ShardDesc{s, shards}, opts));
    return;
  }

  std::mutex sink_mutex;
  std::atomic<std::uint32_t> next{0};
  std::vector<std::exception_ptr> errors(shards);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::uint32_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::uint32_t s = next.fetch_add(1);
        if (s >= shards) return;
        try {
          auto aggs = build_aggregates<SumInt>(B, e, ShardDesc{s, shards}, opts);
          std::lock_guard<std::mutex> lock(sink_mutex);
          consume(s, std::move(aggs));
        } catch (...) {
          errors[s] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

}  // namespace eqsums
