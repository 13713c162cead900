#pragma once

#include <cstdint>
#include <optional>

namespace ap2 {

// p^e without overflow surprises; caller guarantees the result fits.
long long ipow(long long base, int exp);

bool is_prime(long long n);

// Returns e with p^e == n, or nullopt if n is not a power of p.
std::optional<int> power_exponent(long long n, long long p);

// Smallest prime p with n == p^k (k >= 1), or nullopt (n == 1 or not a prime power).
std::optional<long long> prime_power_base(long long n);

}  // namespace ap2
