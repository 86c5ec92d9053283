#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace lfsrcyc {

// Largest trial divisor tried when factoring integers such as q^n - 1.
inline constexpr std::uint64_t kDefaultFactorCap = 10'000'000;

// Checked 64-bit arithmetic. Overflow raises ResourceError.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b);

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

using IntFactorization = std::vector<std::pair<std::uint64_t, unsigned>>;

// Trial division by every d <= cap. A leftover cofactor is accepted as prime
// only when it is below (cap+1)^2; otherwise ResourceError.
IntFactorization factor_trial(std::uint64_t n, std::uint64_t cap = kDefaultFactorCap);

std::uint64_t euler_phi(std::uint64_t n, std::uint64_t cap = kDefaultFactorCap);

// Smallest c >= 0 with p^c >= r.
unsigned ceil_log(std::uint64_t p, std::uint64_t r);

// True iff r = p^d for some d >= 0.
bool is_power_of(std::uint64_t r, std::uint64_t p);

}  // namespace lfsrcyc
