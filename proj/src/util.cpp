#include "ap2/util.hpp"

namespace ap2 {

long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<int> power_exponent(long long n, long long p) {
  if (n < 1 || p < 2) return std::nullopt;
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) return std::nullopt;
  return e;
}

std::optional<long long> prime_power_base(long long n) {
  if (n < 2) return std::nullopt;
  long long m = n;
  long long p = 2;
  while (p * p <= m) {
    if (m % p == 0) break;
    ++p;
  }
  if (p * p > m) p = m;  // n itself prime
  return power_exponent(n, p) ? std::optional<long long>(p) : std::nullopt;
}

}  // namespace ap2
