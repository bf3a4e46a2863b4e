// Copyright 2026 The frobcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace frobcode {

/// Integer helpers used by length classification and the density sweep.
namespace nt {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Distinct prime factors in increasing order.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (auto r : prime_factors(n)) phi = phi / r * (r - 1);
  return phi;
}

/// Multiplicative order of a modulo n, computed by stripping prime factors
/// from phi(n). Requires gcd(a, n) = 1.
inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("multiplicative_order: modulus is zero");
  if (n == 1) return 1;
  if (std::gcd(a % n, n) != 1) {
    throw std::invalid_argument("multiplicative_order: base not coprime to modulus");
  }
  std::uint64_t order = euler_phi(n);
  for (auto r : prime_factors(order)) {
    while (order % r == 0 && powmod(a, order / r, n) == 1) order /= r;
  }
  return order;
}

/// Exponent of 2 in x (x > 0).
inline unsigned two_adic_valuation(std::uint64_t x) {
  unsigned v = 0;
  while (x % 2 == 0) {
    x /= 2;
    ++v;
  }
  return v;
}

/// Least t >= 1 with p^t = -1 (mod n), found by scanning t up to ord_n(p).
inline std::optional<std::uint64_t> least_minus_one_exponent(std::uint64_t p, std::uint64_t n) {
  if (n < 2) return std::nullopt;
  const std::uint64_t order = multiplicative_order(p, n);
  std::uint64_t x = p % n;
  for (std::uint64_t t = 1; t <= order; ++t) {
    if (x == n - 1) return t;
    x = mulmod(x, p, n);
  }
  return std::nullopt;
}

/// Same answer via the order: -1 is a power of p iff ord is even and
/// p^(ord/2) = -1, in which case ord/2 is the least such exponent.
inline std::optional<std::uint64_t> minus_one_exponent_by_order(std::uint64_t p, std::uint64_t n) {
  if (n < 2) return std::nullopt;
  const std::uint64_t order = multiplicative_order(p, n);
  if (order % 2 != 0) return std::nullopt;
  if (powmod(p, order / 2, n) != n - 1) return std::nullopt;
  return order / 2;
}

inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t n) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(n), new_r = static_cast<std::int64_t>(a % n);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: not invertible");
  if (t < 0) t += static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(t);
}

}  // namespace nt
}  // namespace frobcode
