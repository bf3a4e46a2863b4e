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

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "frobcode/errors.hpp"
#include "frobcode/numtheory.hpp"

namespace frobcode {

using BigInt = boost::multiprecision::cpp_int;

namespace detail::fp {

// Dense polynomials over F_p, lowest degree first, trailing zeros trimmed.
using Vec = std::vector<std::uint64_t>;

inline void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const Vec& a) { return static_cast<int>(a.size()) - 1; }

inline Vec sub(Vec a, const Vec& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline Vec mul(const Vec& a, const Vec& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Vec out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  trim(out);
  return out;
}

// Quotient and remainder of a by nonzero m.
inline std::pair<Vec, Vec> divmod(Vec a, const Vec& m, std::uint64_t p) {
  trim(a);
  if (m.empty()) throw std::invalid_argument("fp::divmod: division by zero polynomial");
  const std::uint64_t lead_inv = nt::mod_inverse(m.back(), p);
  if (a.size() < m.size()) return {Vec{}, a};
  Vec q(a.size() - m.size() + 1, 0);
  for (int i = deg(a); i >= deg(m); --i) {
    const std::uint64_t c = a[static_cast<std::size_t>(i)] * lead_inv % p;
    if (c == 0) continue;
    const std::size_t shift = static_cast<std::size_t>(i - deg(m));
    q[shift] = c;
    for (std::size_t j = 0; j < m.size(); ++j) {
      a[shift + j] = (a[shift + j] + p - c * m[j] % p) % p;
    }
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline Vec mod(Vec a, const Vec& m, std::uint64_t p) { return divmod(std::move(a), m, p).second; }

inline Vec monic(Vec a, std::uint64_t p) {
  if (a.empty()) return a;
  const std::uint64_t inv = nt::mod_inverse(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

inline Vec gcd(Vec a, Vec b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Vec r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

// Inverse of a modulo m by the extended Euclidean algorithm.
inline Vec inverse(const Vec& a, const Vec& m, std::uint64_t p) {
  Vec r0 = m, r1 = mod(a, m, p);
  Vec s0{}, s1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    Vec s = sub(s0, mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw std::invalid_argument("fp::inverse: not invertible");
  const std::uint64_t inv = nt::mod_inverse(r0[0], p);
  for (auto& c : s0) c = c * inv % p;
  return mod(s0, m, p);
}

inline Vec powmod_x(std::uint64_t exponent_base, const Vec& x, const Vec& m, std::uint64_t p) {
  Vec result{1}, base = mod(x, m, p);
  std::uint64_t e = exponent_base;
  while (e > 0) {
    if (e & 1U) result = mod(mul(result, base, p), m, p);
    base = mod(mul(base, base, p), m, p);
    e >>= 1U;
  }
  return result;
}

// Ben-Or: f of degree k is irreducible iff gcd(X^{p^i} - X, f) = 1 for
// every i <= k/2.
inline bool is_irreducible(const Vec& f, std::uint64_t p) {
  const int k = deg(f);
  if (k < 1) return false;
  if (k == 1) return true;
  const Vec x{0, 1};
  Vec xp = x;
  for (int i = 1; i <= k / 2; ++i) {
    xp = powmod_x(p, xp, f, p);
    if (deg(gcd(sub(xp, x, p), f, p)) > 0) return false;
  }
  return true;
}

}  // namespace detail::fp

/// A finite field F_{p^k} = F_p[X]/(modulus). Instances are interned and
/// live for the whole program, so elements refer to them by pointer.
class FieldSpec {
 public:
  FieldSpec(const FieldSpec&) = delete;
  FieldSpec& operator=(const FieldSpec&) = delete;

  /// F_{p^k} with the least monic irreducible modulus of degree k, where
  /// candidates are ordered by reading c_{k-1} ... c_0 as a base-p number.
  static const FieldSpec& get(std::uint32_t p, unsigned k);

  /// F_p[X]/(modulus); modulus is lowest-degree-first and must be monic and
  /// irreducible.
  static const FieldSpec& with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  bool is_prime_field() const noexcept { return k_ == 1; }
  BigInt size() const { return boost::multiprecision::pow(BigInt(p_), k_); }

  std::string name() const {
    if (k_ == 1) return "F_" + std::to_string(p_);
    return "F_" + std::to_string(p_) + "^" + std::to_string(k_);
  }

  // Packed modulus for the characteristic-2 multiply kernel (k <= 128).
  const std::array<std::uint64_t, 3>& packed_modulus() const noexcept { return packed_modulus_; }

 private:
  FieldSpec(std::uint32_t p, std::vector<std::uint32_t> modulus)
      : p_(p), k_(static_cast<unsigned>(modulus.size() - 1)), modulus_(std::move(modulus)) {
    packed_modulus_.fill(0);
    if (p_ == 2 && k_ <= 128) {
      for (unsigned i = 0; i <= k_; ++i) {
        if (modulus_[i] != 0) packed_modulus_[i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
  }

  struct Registry {
    std::mutex mutex;
    std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::unique_ptr<FieldSpec>> by_modulus;
    std::map<std::pair<std::uint32_t, unsigned>, const FieldSpec*> least;
  };

  static Registry& registry() {
    static Registry r;
    return r;
  }

  static void check_prime(std::uint32_t p) {
    if (!nt::is_prime(p) || p >= (1U << 31)) {
      throw std::invalid_argument("FieldSpec: characteristic " + std::to_string(p) + " is not a supported prime");
    }
  }

  static const FieldSpec& intern(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    auto& reg = registry();
    std::lock_guard lock(reg.mutex);
    auto key = std::make_pair(p, modulus);
    auto it = reg.by_modulus.find(key);
    if (it != reg.by_modulus.end()) return *it->second;
    auto spec = std::unique_ptr<FieldSpec>(new FieldSpec(p, std::move(modulus)));
    const FieldSpec& ref = *spec;
    reg.by_modulus.emplace(std::move(key), std::move(spec));
    return ref;
  }

  std::uint32_t p_;
  unsigned k_;
  std::vector<std::uint32_t> modulus_;
  std::array<std::uint64_t, 3> packed_modulus_{};
};

inline const FieldSpec& FieldSpec::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  check_prime(p);
  if (modulus.size() < 2 || modulus.back() != 1) {
    throw std::invalid_argument("FieldSpec: modulus must be monic of degree >= 1");
  }
  detail::fp::Vec f(modulus.begin(), modulus.end());
  for (auto c : f) {
    if (c >= p) throw std::invalid_argument("FieldSpec: modulus coefficient out of range");
  }
  if (!detail::fp::is_irreducible(f, p)) {
    throw std::invalid_argument("FieldSpec: modulus is reducible over F_" + std::to_string(p));
  }
  return intern(p, std::move(modulus));
}

inline const FieldSpec& FieldSpec::get(std::uint32_t p, unsigned k) {
  check_prime(p);
  if (k == 0) throw std::invalid_argument("FieldSpec: extension degree must be >= 1");
  {
    auto& reg = registry();
    std::lock_guard lock(reg.mutex);
    auto it = reg.least.find({p, k});
    if (it != reg.least.end()) return *it->second;
  }
  std::vector<std::uint32_t> modulus(k + 1, 0);
  modulus[k] = 1;
  if (k == 1) {
    modulus[0] = 0;  // placeholder X; every element is a constant
  } else {
    // Odometer over (c_0, ..., c_{k-1}) with c_0 least significant.
    bool found = false;
    while (!found) {
      unsigned i = 0;
      while (i < k && ++modulus[i] == p) modulus[i++] = 0;
      if (i == k) throw InternalError("FieldSpec: no irreducible polynomial found");
      if (modulus[0] == 0) continue;
      detail::fp::Vec f(modulus.begin(), modulus.end());
      found = detail::fp::is_irreducible(f, p);
    }
  }
  const FieldSpec& spec = intern(p, std::move(modulus));
  auto& reg = registry();
  std::lock_guard lock(reg.mutex);
  reg.least.emplace(std::make_pair(p, k), &spec);
  return spec;
}

/// An element of a FieldSpec, stored as its coefficient vector over F_p in
/// the power basis 1, eta, ..., eta^{k-1} where eta = X mod modulus.
class FieldElem {
 public:
  using Coeffs = boost::container::small_vector<std::uint32_t, 8>;

  explicit FieldElem(const FieldSpec& spec) : spec_(&spec), c_(spec.degree(), 0) {}

  FieldElem(const FieldSpec& spec, std::span<const std::uint32_t> coeffs) : spec_(&spec), c_(spec.degree(), 0) {
    if (coeffs.size() > spec.degree()) throw std::invalid_argument("FieldElem: too many coefficients");
    for (std::size_t i = 0; i < coeffs.size(); ++i) c_[i] = coeffs[i] % spec.characteristic();
  }

  static FieldElem zero(const FieldSpec& spec) { return FieldElem(spec); }

  static FieldElem scalar(const FieldSpec& spec, std::int64_t value) {
    FieldElem e(spec);
    const auto p = static_cast<std::int64_t>(spec.characteristic());
    e.c_[0] = static_cast<std::uint32_t>(((value % p) + p) % p);
    return e;
  }

  static FieldElem one(const FieldSpec& spec) { return scalar(spec, 1); }

  /// eta, the class of X; undefined for prime fields.
  static FieldElem generator(const FieldSpec& spec) {
    if (spec.degree() < 2) throw std::invalid_argument("FieldElem::generator: prime field has no generator eta");
    FieldElem e(spec);
    e.c_[1] = 1;
    return e;
  }

  /// Element whose coefficients are the base-p digits of index (c_0 least
  /// significant). Enumerates the field deterministically.
  static FieldElem from_index(const FieldSpec& spec, BigInt index) {
    FieldElem e(spec);
    const BigInt p = spec.characteristic();
    for (unsigned i = 0; i < spec.degree() && index > 0; ++i) {
      e.c_[i] = static_cast<std::uint32_t>(index % p);
      index /= p;
    }
    if (index > 0) throw std::invalid_argument("FieldElem::from_index: index exceeds field size");
    return e;
  }

  const FieldSpec& spec() const noexcept { return *spec_; }
  std::span<const std::uint32_t> coeffs() const noexcept { return {c_.data(), c_.size()}; }
  std::uint32_t coeff(unsigned i) const { return c_.at(i); }

  bool is_zero() const noexcept {
    for (auto c : c_) {
      if (c != 0) return false;
    }
    return true;
  }

  bool in_prime_field() const noexcept {
    for (std::size_t i = 1; i < c_.size(); ++i) {
      if (c_[i] != 0) return false;
    }
    return true;
  }

  bool is_one() const noexcept { return c_[0] == 1 && in_prime_field(); }

  /// The F_p value of an element of the prime subfield.
  std::uint32_t prime_value() const {
    if (!in_prime_field()) throw std::invalid_argument("FieldElem: element is not in the prime subfield");
    return c_[0];
  }

  BigInt index() const {
    BigInt out = 0;
    for (std::size_t i = c_.size(); i-- > 0;) out = out * spec_->characteristic() + c_[i];
    return out;
  }

  FieldElem& operator+=(const FieldElem& o) {
    check_same(o);
    const auto p = spec_->characteristic();
    for (std::size_t i = 0; i < c_.size(); ++i) {
      const std::uint32_t s = c_[i] + o.c_[i];
      c_[i] = s >= p ? s - p : s;
    }
    return *this;
  }

  FieldElem& operator-=(const FieldElem& o) {
    check_same(o);
    const auto p = spec_->characteristic();
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + p - o.c_[i];
    return *this;
  }

  FieldElem operator-() const {
    FieldElem out(*spec_);
    const auto p = spec_->characteristic();
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] == 0 ? 0 : p - c_[i];
    return out;
  }

  FieldElem& operator*=(const FieldElem& o) { return *this = multiply(*this, o); }

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) { return multiply(a, b); }

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.spec_ == b.spec_ && std::equal(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
  }

  /// Multiplication by an F_p scalar.
  FieldElem scaled(std::uint64_t s) const {
    FieldElem out(*spec_);
    const std::uint64_t p = spec_->characteristic();
    s %= p;
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = static_cast<std::uint32_t>(c_[i] * s % p);
    return out;
  }

  /// Total order by index, used to pick canonical representatives.
  friend bool index_less(const FieldElem& a, const FieldElem& b) {
    for (std::size_t i = a.c_.size(); i-- > 0;) {
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    }
    return false;
  }

 private:
  void check_same(const FieldElem& o) const {
    if (spec_ != o.spec_) throw std::invalid_argument("field mismatch: " + spec_->name() + " vs " + o.spec_->name());
  }

  static FieldElem multiply(const FieldElem& a, const FieldElem& b);
  static FieldElem multiply_char2(const FieldElem& a, const FieldElem& b);

  const FieldSpec* spec_;
  Coeffs c_;
};

inline FieldElem FieldElem::multiply_char2(const FieldElem& a, const FieldElem& b) {
  const unsigned k = a.spec_->degree();
  std::array<std::uint64_t, 2> x{}, y{};
  for (unsigned i = 0; i < k; ++i) {
    x[i / 64] |= std::uint64_t{a.c_[i]} << (i % 64);
    y[i / 64] |= std::uint64_t{b.c_[i]} << (i % 64);
  }
  // Carry-less product, up to 2k-1 <= 255 bits.
  std::array<std::uint64_t, 4> prod{};
  for (unsigned i = 0; i < k; ++i) {
    if (((x[i / 64] >> (i % 64)) & 1U) == 0) continue;
    const unsigned w = i / 64, s = i % 64;
    for (unsigned j = 0; j < 2; ++j) {
      prod[w + j] ^= y[j] << s;
      if (s != 0) prod[w + j + 1] ^= y[j] >> (64 - s);
    }
  }
  const auto& m = a.spec_->packed_modulus();
  for (int pos = 2 * static_cast<int>(k) - 2; pos >= static_cast<int>(k); --pos) {
    if (((prod[static_cast<unsigned>(pos) / 64] >> (static_cast<unsigned>(pos) % 64)) & 1U) == 0) continue;
    const unsigned shift = static_cast<unsigned>(pos) - k;
    const unsigned w = shift / 64, s = shift % 64;
    for (unsigned j = 0; j < 3 && w + j < 4; ++j) {
      prod[w + j] ^= m[j] << s;
      if (s != 0 && w + j + 1 < 4) prod[w + j + 1] ^= m[j] >> (64 - s);
    }
  }
  FieldElem out(*a.spec_);
  for (unsigned i = 0; i < k; ++i) out.c_[i] = static_cast<std::uint32_t>((prod[i / 64] >> (i % 64)) & 1U);
  return out;
}

inline FieldElem FieldElem::multiply(const FieldElem& a, const FieldElem& b) {
  a.check_same(b);
  const FieldSpec& spec = *a.spec_;
  const unsigned k = spec.degree();
  const std::uint64_t p = spec.characteristic();
  if (k == 1) {
    FieldElem out(spec);
    out.c_[0] = static_cast<std::uint32_t>(std::uint64_t{a.c_[0]} * b.c_[0] % p);
    return out;
  }
  if (p == 2 && k <= 128) return multiply_char2(a, b);

  boost::container::small_vector<std::uint64_t, 32> prod(2 * k - 1, 0);
  for (unsigned i = 0; i < k; ++i) {
    if (a.c_[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % p;
    }
  }
  const auto& m = spec.modulus();
  for (unsigned d = 2 * k - 2; d >= k; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    for (unsigned j = 0; j <= k; ++j) {
      prod[d - k + j] = (prod[d - k + j] + (p - c) * m[j]) % p;
    }
  }
  FieldElem out(spec);
  for (unsigned i = 0; i < k; ++i) out.c_[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

inline FieldElem field_mul(const FieldElem& a, const FieldElem& b) { return a * b; }

inline FieldElem pow(FieldElem base, BigInt exponent) {
  if (exponent < 0) throw std::invalid_argument("pow: negative exponent");
  FieldElem result = FieldElem::one(base.spec());
  while (exponent > 0) {
    if ((exponent & 1) != 0) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

inline FieldElem pow(const FieldElem& base, std::uint64_t exponent) { return pow(base, BigInt(exponent)); }

/// Multiplicative inverse via the extended Euclidean algorithm on the
/// coefficient polynomial and the modulus.
inline FieldElem field_inv(const FieldElem& a) {
  if (a.is_zero()) throw std::invalid_argument("field_inv: zero has no inverse");
  const FieldSpec& spec = a.spec();
  const std::uint64_t p = spec.characteristic();
  if (spec.degree() == 1) {
    return FieldElem::scalar(spec, static_cast<std::int64_t>(nt::mod_inverse(a.coeff(0), p)));
  }
  detail::fp::Vec x(a.coeffs().begin(), a.coeffs().end());
  detail::fp::trim(x);
  detail::fp::Vec m(spec.modulus().begin(), spec.modulus().end());
  const detail::fp::Vec inv = detail::fp::inverse(x, m, p);
  std::vector<std::uint32_t> c(inv.begin(), inv.end());
  return FieldElem(spec, c);
}

inline FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * field_inv(b); }

/// sigma^i(a) = a^(p^i); sigma has order k on F_{p^k}.
inline FieldElem frobenius(FieldElem a, std::uint64_t i) {
  const FieldSpec& spec = a.spec();
  i %= spec.degree();
  for (std::uint64_t step = 0; step < i; ++step) a = pow(a, std::uint64_t{spec.characteristic()});
  return a;
}

/// Multiplicative order of a nonzero element, given a multiple of it.
inline std::uint64_t element_order(const FieldElem& a, std::uint64_t multiple) {
  if (a.is_zero()) throw std::invalid_argument("element_order: zero element");
  std::uint64_t order = multiple;
  for (auto r : nt::prime_factors(multiple)) {
    while (order % r == 0 && pow(a, order / r).is_one()) order /= r;
  }
  if (!pow(a, order).is_one()) throw std::invalid_argument("element_order: order does not divide the given multiple");
  return order;
}

/// A primitive n-th root of unity in a splitting field.
struct RootOfUnity {
  const FieldSpec* field;
  FieldElem beta;
  unsigned n;
};

/// Splitting field F_{q^m} of X^n - 1 over F_q, q = p^k, with m = ord_n(q),
/// and the first element (in index order) of the form x^((q^m - 1)/n) whose
/// order is exactly n.
inline RootOfUnity primitive_nth_root(unsigned n, std::uint32_t p, unsigned k = 1) {
  if (n == 0) throw std::invalid_argument("primitive_nth_root: n must be positive");
  if (n % p == 0) throw std::invalid_argument("primitive_nth_root: n is not coprime to the field order");
  const std::uint64_t q_mod_n = nt::powmod(p, k, n);
  const unsigned m = n == 1 ? 1 : static_cast<unsigned>(nt::multiplicative_order(q_mod_n, n));
  const FieldSpec& big = FieldSpec::get(p, k * m);
  if (n == 1) return {&big, FieldElem::one(big), 1};
  const BigInt exponent = (big.size() - 1) / n;
  const auto primes = nt::prime_factors(n);
  for (BigInt idx = 1; idx < big.size(); ++idx) {
    const FieldElem y = pow(FieldElem::from_index(big, idx), exponent);
    bool exact = true;
    for (auto r : primes) {
      if (pow(y, std::uint64_t{n / r}).is_one()) {
        exact = false;
        break;
      }
    }
    if (exact) return {&big, y, n};
  }
  throw InternalError("primitive_nth_root: no element of order n found");
}

}  // namespace frobcode
