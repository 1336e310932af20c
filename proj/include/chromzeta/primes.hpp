#pragma once

#include <cstdint>
#include <vector>

namespace chromzeta {

inline constexpr std::uint64_t kDefaultPrimeCap = 100'000'000;

// All primes in [2, limit], ascending (odd-only sieve of Eratosthenes).
// Throws UsageError for limit < 2 and BudgetError for limit > cap.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit, std::uint64_t cap = kDefaultPrimeCap);

// Deterministic trial division; intended for validating small arguments.
bool is_prime(std::uint64_t n);

// Moebius function by trial division.
int moebius(std::uint64_t n);

}  // namespace chromzeta
