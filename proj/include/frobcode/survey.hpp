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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "frobcode/detail/parallel.hpp"
#include "frobcode/numtheory.hpp"

namespace frobcode {

struct DensityCheckpoint {
  std::uint64_t x;
  std::uint64_t total;
  std::uint64_t even;
  std::uint64_t odd;
};

struct DensityReport {
  std::uint32_t p = 2;
  std::uint64_t x_max = 0;
  std::vector<DensityCheckpoint> checkpoints;
  /// t_min per n (index n), 0 where n is not counted; kept on request.
  std::vector<std::uint64_t> t_min;
};

/// t_min for n when n counts towards f_p, else 0. Lengths sharing a factor
/// with p and lengths dividing p + 1 (t_min = 1, only degenerate codes)
/// are left out.
inline std::uint64_t counted_t_min(std::uint32_t p, std::uint64_t n) {
  if (n < 2 || std::gcd(n, std::uint64_t{p}) != 1) return 0;
  const auto t = nt::minus_one_exponent_by_order(p, n);
  if (!t || *t == 1) return 0;
  return *t;
}

/// f_p, f_p^even and f_p^odd at each checkpoint (x_max is always added).
inline DensityReport density(std::uint32_t p, std::uint64_t x_max, std::vector<std::uint64_t> checkpoints = {},
                             bool keep_detail = false) {
  if (x_max < 2) throw std::invalid_argument("density: x must be at least 2");
  if (!nt::is_prime(p)) throw std::invalid_argument("density: p must be prime");
  checkpoints.push_back(x_max);
  std::sort(checkpoints.begin(), checkpoints.end());
  checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
  checkpoints.erase(std::remove_if(checkpoints.begin(), checkpoints.end(), [&](auto x) { return x > x_max || x < 1; }),
                    checkpoints.end());

  std::vector<std::uint64_t> tm(x_max + 1, 0);
  constexpr std::uint64_t kChunk = 4096;
  detail::parallel_for(0, (x_max + kChunk) / kChunk, [&](std::uint64_t c) {
    const std::uint64_t lo = c * kChunk, hi = std::min(x_max + 1, lo + kChunk);
    for (std::uint64_t n = lo; n < hi; ++n) tm[n] = counted_t_min(p, n);
  });

  DensityReport rep;
  rep.p = p;
  rep.x_max = x_max;
  std::uint64_t even = 0, odd = 0;
  std::size_t next = 0;
  for (std::uint64_t n = 1; n <= x_max && next < checkpoints.size(); ++n) {
    if (tm[n] != 0) (tm[n] % 2 == 0 ? even : odd) += 1;
    while (next < checkpoints.size() && checkpoints[next] == n) {
      rep.checkpoints.push_back({n, even + odd, even, odd});
      ++next;
    }
  }
  if (keep_detail) rep.t_min = std::move(tm);
  return rep;
}

struct QrCheck {
  std::uint64_t primes_checked = 0;
  /// Primes in the progression with no t at all.
  std::vector<std::uint64_t> not_good;
  /// Good primes in the progression that density() does not count.
  std::vector<std::uint64_t> not_counted;
  bool ok() const noexcept { return not_good.empty() && not_counted.empty(); }
};

/// Whether prime n lies in the progression used for the lower bound: for
/// p = 2, n = 3 or 5 mod 8; for odd p, n = 1 mod 4 and n mod p a quadratic
/// non-residue. Both make p a non-residue mod n.
inline bool in_qr_progression(std::uint32_t p, std::uint64_t n) {
  if (p == 2) return n % 8 == 3 || n % 8 == 5;
  if (n % 4 != 1 || n % p == 0) return false;
  return nt::powmod(n % p, (p - 1) / 2, p) == p - 1;
}

/// Every prime n <= x in the progression has some t with p^t = -1 mod n,
/// and is counted by density() unless n divides p + 1.
inline QrCheck qr_lower_bound_check(std::uint32_t p, std::uint64_t x) {
  if (!nt::is_prime(p)) throw std::invalid_argument("qr_lower_bound_check: p must be prime");
  QrCheck out;
  for (std::uint64_t n = 3; n <= x; ++n) {
    if (n == p || !nt::is_prime(n) || !in_qr_progression(p, n)) continue;
    ++out.primes_checked;
    const auto t = nt::least_minus_one_exponent(p, n);
    if (!t) {
      out.not_good.push_back(n);
      continue;
    }
    if ((p + 1) % n != 0 && counted_t_min(p, n) == 0) out.not_counted.push_back(n);
  }
  return out;
}

}  // namespace frobcode
