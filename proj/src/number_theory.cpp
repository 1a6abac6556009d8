#include "galcert/number_theory.hpp"

#include <stdexcept>
#include <string>

namespace galcert {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t step = a / gcd(a, b);
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(step, b, &out)) {
    throw std::overflow_error("lcm overflows 64 bits");
  }
  return out;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t residue(std::int64_t a, std::uint64_t m) {
  if (a >= 0) return static_cast<std::uint64_t>(a) % m;
  // -(a + 1) avoids overflow on INT64_MIN
  const std::uint64_t neg = (static_cast<std::uint64_t>(-(a + 1)) + 1) % m;
  return neg == 0 ? 0 : m - neg;
}

std::vector<std::pair<std::uint64_t, int>> factor_integer(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factor_integer: zero has no factorization");
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int legendre(std::int64_t a, std::uint64_t p) {
  if (p == 2 || !is_prime(p)) {
    throw std::invalid_argument("legendre: modulus must be an odd prime, got " + std::to_string(p));
  }
  const std::uint64_t r = residue(a, p);
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace galcert
