#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

#include "tpl/error.hpp"

namespace tpl {

using Label = std::int64_t;

inline Label gcd_set(std::span<const Label> values) {
  if (values.empty()) throw Error(Errc::EmptyInput, "gcd of an empty set");
  Label g = 0;
  for (Label v : values) {
    if (v < 1) throw Error(Errc::InvalidParameter, "gcd_set expects positive integers");
    g = std::gcd(g, v);
  }
  return g;
}

inline Label gcd_set(std::initializer_list<Label> values) {
  return gcd_set(std::span<const Label>(values.begin(), values.size()));
}

/// Sieve of Eratosthenes that grows on demand by doubling.
///
/// Reads take a shared lock and extension takes an exclusive one, so a single
/// table may be queried from several threads. Growth past `cap()` raises
/// SieveLimitExceeded.
class PrimeTable {
 public:
  static constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 32;

  explicit PrimeTable(std::uint64_t initial_limit = 1 << 12, std::uint64_t cap = kDefaultCap)
      : cap_(cap) {
    std::unique_lock lock(mutex_);
    sieve_locked(std::min<std::uint64_t>(std::max<std::uint64_t>(initial_limit, 16), cap_));
  }

  std::uint64_t limit() const {
    std::shared_lock lock(mutex_);
    return limit_;
  }

  std::uint64_t cap() const {
    std::shared_lock lock(mutex_);
    return cap_;
  }

  void set_cap(std::uint64_t cap) {
    std::unique_lock lock(mutex_);
    cap_ = cap;
  }

  bool is_prime(std::uint64_t x) {
    ensure_limit(x);
    std::shared_lock lock(mutex_);
    return x < is_prime_.size() && is_prime_[x] != 0;
  }

  /// The i-th prime, 1-based: nth_prime(1) == 2.
  std::uint64_t nth_prime(std::size_t i) {
    if (i == 0) throw Error(Errc::InvalidParameter, "prime index is 1-based");
    for (;;) {
      {
        std::shared_lock lock(mutex_);
        if (primes_.size() >= i) return primes_[i - 1];
      }
      // Rosser's upper bound p_i < i (ln i + ln ln i) for i >= 6.
      double want = 15.0;
      if (i >= 6) {
        const double li = std::log(static_cast<double>(i));
        want = static_cast<double>(i) * (li + std::log(li)) + 1.0;
      }
      std::uint64_t target = static_cast<std::uint64_t>(want);
      ensure_limit(std::max(target, limit() + 1));
    }
  }

  std::uint64_t largest_prime_leq(std::uint64_t x) {
    if (x < 2) throw Error(Errc::NoPrime, "no prime <= " + std::to_string(x));
    ensure_limit(x);
    std::shared_lock lock(mutex_);
    auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
    return *std::prev(it);
  }

  /// pi(x), the number of primes <= x.
  std::uint64_t prime_count(double x) {
    if (!(x >= 2.0)) return 0;
    const auto floor_x = static_cast<std::uint64_t>(std::floor(x));
    ensure_limit(floor_x);
    std::shared_lock lock(mutex_);
    return static_cast<std::uint64_t>(
        std::upper_bound(primes_.begin(), primes_.end(), floor_x) - primes_.begin());
  }

  void ensure_limit(std::uint64_t x) {
    {
      std::shared_lock lock(mutex_);
      if (x <= limit_) return;
    }
    std::unique_lock lock(mutex_);
    if (x <= limit_) return;
    if (x > cap_) {
      throw Error(Errc::SieveLimitExceeded,
                  "prime table capped at " + std::to_string(cap_) + ", need " + std::to_string(x));
    }
    std::uint64_t next = limit_;
    while (next < x) next = next > cap_ / 2 ? cap_ : next * 2;
    sieve_locked(next);
  }

 private:
  void sieve_locked(std::uint64_t limit) {
    std::vector<std::uint8_t> flags(limit + 1, 1);
    flags[0] = 0;
    if (limit >= 1) flags[1] = 0;
    for (std::uint64_t p = 2; p * p <= limit; ++p) {
      if (!flags[p]) continue;
      for (std::uint64_t q = p * p; q <= limit; q += p) flags[q] = 0;
    }
    std::vector<std::uint64_t> primes;
    for (std::uint64_t v = 2; v <= limit; ++v)
      if (flags[v]) primes.push_back(v);
    is_prime_ = std::move(flags);
    primes_ = std::move(primes);
    limit_ = limit;
  }

  mutable std::shared_mutex mutex_;
  std::uint64_t cap_;
  std::uint64_t limit_ = 0;
  std::vector<std::uint8_t> is_prime_;
  std::vector<std::uint64_t> primes_;
};

inline PrimeTable& default_prime_table() {
  static PrimeTable table;
  return table;
}

inline bool is_prime(std::uint64_t x) { return default_prime_table().is_prime(x); }
inline std::uint64_t nth_prime(std::size_t i) { return default_prime_table().nth_prime(i); }
inline std::uint64_t largest_prime_leq(std::uint64_t x) {
  return default_prime_table().largest_prime_leq(x);
}
inline std::uint64_t prime_count(double x) { return default_prime_table().prime_count(x); }

struct CapacityReport {
  bool holds = true;
  std::uint64_t checked_up_to = 0;
  std::optional<std::uint64_t> counterexample;  // smallest failing n
  std::string failed_bound;                      // which inequality failed
};

/// Checks, for 4 <= n <= n_max, the two label-capacity inequalities used by the
/// complete-graph and two-copy windmill constructions:
///   p_{n-1} <= (n^2 - n - 2) / 2   and   p_{2n-3} < n^2 - n.
inline CapacityReport check_label_capacity_bounds(std::uint64_t n_max) {
  if (n_max < 4) throw Error(Errc::InvalidParameter, "n_max must be >= 4");
  CapacityReport report;
  auto& table = default_prime_table();
  for (std::uint64_t n = 4; n <= n_max; ++n) {
    if (table.nth_prime(n - 1) > (n * n - n - 2) / 2) {
      report.holds = false;
      report.counterexample = n;
      report.failed_bound = "p_{n-1} <= (n^2-n-2)/2";
      return report;
    }
    if (table.nth_prime(2 * n - 3) >= n * n - n) {
      report.holds = false;
      report.counterexample = n;
      report.failed_bound = "p_{2n-3} < n^2-n";
      return report;
    }
    report.checked_up_to = n;
  }
  return report;
}

/// First integer x in [lo, hi] with pi(x) <= x / ln x, if any.
inline std::optional<std::uint64_t> first_prime_count_bound_violation(std::uint64_t lo,
                                                                      std::uint64_t hi) {
  auto& table = default_prime_table();
  table.ensure_limit(hi);
  std::uint64_t count = table.prime_count(static_cast<double>(lo));
  for (std::uint64_t x = lo; x <= hi; ++x) {
    if (x > lo && table.is_prime(x)) ++count;
    const double xd = static_cast<double>(x);
    if (!(static_cast<double>(count) > xd / std::log(xd))) return x;
  }
  return std::nullopt;
}

/// First integer x in [lo, hi] whose largest prime <= x is not > x/2.
inline std::optional<std::uint64_t> first_bertrand_violation(std::uint64_t lo, std::uint64_t hi) {
  auto& table = default_prime_table();
  table.ensure_limit(hi);
  for (std::uint64_t x = std::max<std::uint64_t>(lo, 2); x <= hi; ++x) {
    if (2 * table.largest_prime_leq(x) <= x) return x;
  }
  return std::nullopt;
}

}  // namespace tpl
