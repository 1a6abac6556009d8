#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace galcert {

// Small-integer helpers. Everything here works on 64-bit values; products are
// formed in 128-bit before reduction.

bool is_prime(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

// Throws std::overflow_error when the result does not fit in 64 bits.
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Reduces a signed value into [0, m).
std::uint64_t residue(std::int64_t a, std::uint64_t m);

// Trial-division factorization, primes ascending.
std::vector<std::pair<std::uint64_t, int>> factor_integer(std::uint64_t n);

// Quadratic-residue symbol of a modulo the odd prime p, via Euler's criterion.
int legendre(std::int64_t a, std::uint64_t p);

}  // namespace galcert
