#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace jmotive {

using BigInt = boost::multiprecision::cpp_int;

bool is_prime(std::int64_t n);

// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

std::vector<std::int64_t> prime_divisors(std::int64_t n);

// Exponent of p in n (n > 0).
int p_adic_valuation(std::int64_t n, std::int64_t p);

// Checked integer power; throws Overflow.
std::int64_t ipow(std::int64_t base, int exp);

// floor(log2(num / den)) for positive num, den; -1 when num < den.
int floor_log2_ratio(std::int64_t num, std::int64_t den);

std::int64_t mod_floor(std::int64_t a, std::int64_t m);

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);

// Inverse of a modulo m, or 0 when gcd(a, m) != 1.
std::int64_t inv_mod(std::int64_t a, std::int64_t m);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace jmotive
