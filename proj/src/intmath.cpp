#include "lfsrcyc/intmath.hpp"

#include <numeric>
#include <string>

#include "lfsrcyc/errors.hpp"

namespace lfsrcyc {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceError("integer overflow in addition");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("integer overflow in multiplication");
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are sufficient for all n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

IntFactorization factor_trial(std::uint64_t n, std::uint64_t cap) {
  if (n == 0) throw DomainError("cannot factor zero");
  IntFactorization out;
  std::uint64_t d = 2;
  for (; d <= cap && d <= n / d; d += (d == 2 ? 1 : 2)) {
    if (n % d) continue;
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    out.emplace_back(d, k);
  }
  if (n > 1) {
    // Every prime factor <= min(cap, sqrt(n)) has been removed, so n is prime
    // when either the loop reached sqrt(n) or n < (cap+1)^2.
    const bool exhausted = d > n / d;
    const u128 bound = static_cast<u128>(cap + 1) * (cap + 1);
    if (!exhausted && static_cast<u128>(n) >= bound) {
      throw ResourceError("trial-division cap " + std::to_string(cap) +
                          " too small to factor cofactor " + std::to_string(n));
    }
    out.emplace_back(n, 1);
  }
  return out;
}

std::uint64_t euler_phi(std::uint64_t n, std::uint64_t cap) {
  std::uint64_t phi = n;
  for (auto [prime, k] : factor_trial(n, cap)) {
    (void)k;
    phi = phi / prime * (prime - 1);
  }
  return phi;
}

unsigned ceil_log(std::uint64_t p, std::uint64_t r) {
  unsigned c = 0;
  u128 power = 1;
  while (power < r) {
    power *= p;
    ++c;
  }
  return c;
}

bool is_power_of(std::uint64_t r, std::uint64_t p) {
  if (r == 0) return false;
  while (r % p == 0) r /= p;
  return r == 1;
}

}  // namespace lfsrcyc
