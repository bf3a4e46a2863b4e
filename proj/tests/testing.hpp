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


// Small independent helpers shared by the tests. Nothing here calls into the
// library's arithmetic.

#pragma once

#include <cstdint>
#include <set>
#include <vector>

namespace frobtest {

/// Carry-less product of a and b reduced modulo the binary polynomial m
/// (bit i = coefficient of X^i).
inline std::uint64_t gf2_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  int dm = 63;
  while (!((m >> dm) & 1)) --dm;
  std::uint64_t r = 0;
  for (int i = 0; i < 32; ++i) {
    if ((b >> i) & 1) r ^= a << i;
  }
  for (int i = 63; i >= dm; --i) {
    if ((r >> i) & 1) r ^= m << (i - dm);
  }
  return r;
}

/// Orbit closure of k under multiplication by q modulo n.
inline std::set<unsigned> orbit(unsigned k, unsigned q, unsigned n) {
  std::set<unsigned> out;
  unsigned x = k % n;
  while (out.insert(x).second) x = static_cast<unsigned>(std::uint64_t{x} * q % n);
  return out;
}

/// a^e mod n by repeated multiplication.
inline std::uint64_t slow_pow(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  for (std::uint64_t i = 0; i < e; ++i) r = r * a % n;
  return r;
}

/// Least t >= 1 with p^t = -1 mod n by scanning, 0 when none.
inline unsigned scan_t_min(std::uint64_t p, std::uint64_t n) {
  std::uint64_t x = 1;
  for (unsigned t = 1; t <= 2 * n; ++t) {
    x = x * p % n;
    if (x == n - 1) return t;
  }
  return 0;
}

/// Dense binary vectors: index-reversal u'_i = u_{-i mod n}.
inline std::vector<std::uint32_t> reverse_indices(const std::vector<std::uint32_t>& u) {
  const std::size_t n = u.size();
  std::vector<std::uint32_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[(n - i) % n] = u[i];
  return out;
}

}  // namespace frobtest
