#include "chromzeta/primes.hpp"

#include <string>

#include "chromzeta/errors.hpp"

namespace chromzeta {

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit, std::uint64_t cap) {
  if (limit < 2) throw UsageError("primes_up_to: limit must be >= 2, got " + std::to_string(limit));
  if (limit > cap) {
    throw BudgetError("primes_up_to: limit " + std::to_string(limit) + " exceeds the prime cap " +
                      std::to_string(cap));
  }
  // composite[i] describes the odd number 2i + 1.
  const std::uint64_t half = (limit - 1) / 2 + 1;
  std::vector<bool> composite(half, false);
  composite[0] = true;
  for (std::uint64_t i = 1;; ++i) {
    const std::uint64_t p = 2 * i + 1;
    if (p * p > limit) break;
    if (composite[i]) continue;
    for (std::uint64_t j = p * p / 2; j < half; j += p) composite[j] = true;
  }

  std::vector<std::uint64_t> primes;
  primes.reserve(limit > 100 ? static_cast<std::size_t>(1.3 * limit / 4.6) : 32);
  primes.push_back(2);
  for (std::uint64_t i = 1; i < half; ++i) {
    if (!composite[i]) primes.push_back(2 * i + 1);
  }
  return primes;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

int moebius(std::uint64_t n) {
  if (n == 0) return 0;
  int sign = 1;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

}  // namespace chromzeta
