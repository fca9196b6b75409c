#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace cpl {

// Trial division is plenty at desk scale (orders <= 32768).
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Nondecreasing prime factors with multiplicity.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

inline int distinct_prime_factor_count(std::uint64_t n) {
  auto f = prime_factors(n);
  int count = 0;
  std::uint64_t last = 0;
  for (auto p : f)
    if (p != last) {
      ++count;
      last = p;
    }
  return count;
}

struct PrimePower {
  std::uint64_t prime;
  int exponent;
};

// n = p^k with k >= 1; nullopt otherwise. Note 1 is not a prime power here.
inline std::optional<PrimePower> as_prime_power(std::uint64_t n) {
  auto f = prime_factors(n);
  if (f.empty()) return std::nullopt;
  for (auto p : f)
    if (p != f.front()) return std::nullopt;
  return PrimePower{f.front(), static_cast<int>(f.size())};
}

}  // namespace cpl
