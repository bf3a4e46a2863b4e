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
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "frobcode/galois.hpp"

namespace frobcode {

/// Dense polynomial over a FieldSpec, lowest degree first, trimmed.
class Poly {
 public:
  /// Degree of the zero polynomial.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  explicit Poly(const FieldSpec& spec) : spec_(&spec) {}

  Poly(const FieldSpec& spec, std::vector<FieldElem> coeffs) : spec_(&spec), c_(std::move(coeffs)) {
    for (const auto& c : c_) {
      if (&c.spec() != spec_) throw std::invalid_argument("Poly: coefficient field mismatch");
    }
    trim();
  }

  /// Polynomial with F_p coefficients given as integers, embedded as scalars.
  static Poly from_ints(const FieldSpec& spec, std::span<const std::int64_t> values) {
    std::vector<FieldElem> c;
    c.reserve(values.size());
    for (auto v : values) c.push_back(FieldElem::scalar(spec, v));
    return Poly(spec, std::move(c));
  }

  static Poly from_ints(const FieldSpec& spec, std::initializer_list<std::int64_t> values) {
    return from_ints(spec, std::span<const std::int64_t>(values.begin(), values.size()));
  }

  static Poly from_prime_coeffs(const FieldSpec& spec, std::span<const std::uint32_t> values) {
    std::vector<FieldElem> c;
    c.reserve(values.size());
    for (auto v : values) c.push_back(FieldElem::scalar(spec, v));
    return Poly(spec, std::move(c));
  }

  static Poly constant(const FieldElem& c) { return Poly(c.spec(), {c}); }

  static Poly monomial(const FieldElem& c, std::size_t deg) {
    std::vector<FieldElem> v(deg + 1, FieldElem::zero(c.spec()));
    v[deg] = c;
    return Poly(c.spec(), std::move(v));
  }

  static Poly x(const FieldSpec& spec) { return monomial(FieldElem::one(spec), 1); }
  static Poly one(const FieldSpec& spec) { return constant(FieldElem::one(spec)); }

  const FieldSpec& spec() const noexcept { return *spec_; }
  const std::vector<FieldElem>& coeffs() const noexcept { return c_; }
  std::size_t size() const noexcept { return c_.size(); }
  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }

  FieldElem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : FieldElem::zero(*spec_); }

  const FieldElem& leading() const {
    if (c_.empty()) throw std::invalid_argument("Poly::leading: zero polynomial");
    return c_.back();
  }

  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

  bool in_prime_field() const {
    return std::all_of(c_.begin(), c_.end(), [](const FieldElem& c) { return c.in_prime_field(); });
  }

  /// Coefficients as F_p values; throws unless every coefficient lies in F_p.
  std::vector<std::uint32_t> prime_coeffs() const {
    std::vector<std::uint32_t> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.prime_value());
    return out;
  }

  Poly monic() const {
    if (c_.empty()) return *this;
    return scaled(field_inv(leading()));
  }

  Poly scaled(const FieldElem& s) const {
    check_elem(s);
    std::vector<FieldElem> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c * s);
    return Poly(*spec_, std::move(out));
  }

  Poly& operator+=(const Poly& o) {
    check_same(o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), FieldElem::zero(*spec_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    check_same(o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), FieldElem::zero(*spec_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  Poly operator-() const {
    Poly out(*spec_);
    out.c_.reserve(c_.size());
    for (const auto& c : c_) out.c_.push_back(-c);
    return out;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_same(b);
    if (a.is_zero() || b.is_zero()) return Poly(*a.spec_);
    std::vector<FieldElem> out(a.c_.size() + b.c_.size() - 1, FieldElem::zero(*a.spec_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(*a.spec_, std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.spec_ == b.spec_ && a.c_ == b.c_; }

  std::string to_string() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  void check_same(const Poly& o) const {
    if (spec_ != o.spec_) throw std::invalid_argument("Poly: field mismatch " + spec_->name() + " vs " + o.spec_->name());
  }
  void check_elem(const FieldElem& e) const {
    if (&e.spec() != spec_) throw std::invalid_argument("Poly: scalar field mismatch");
  }

  const FieldSpec* spec_;
  std::vector<FieldElem> c_;
};

inline std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    std::string coef;
    if (c_[i].in_prime_field()) {
      coef = std::to_string(c_[i].prime_value());
    } else {
      coef = "(";
      bool first = true;
      for (std::size_t j = c_[i].coeffs().size(); j-- > 0;) {
        const auto v = c_[i].coeffs()[j];
        if (v == 0) continue;
        if (!first) coef += "+";
        first = false;
        if (j == 0 || v != 1) coef += std::to_string(v);
        if (j > 0) coef += j == 1 ? "e" : "e^" + std::to_string(j);
      }
      coef += ")";
    }
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += coef;
    } else {
      if (coef != "1") out += coef + "*";
      out += i == 1 ? "X" : "X^" + std::to_string(i);
    }
  }
  return out;
}

/// Quotient and remainder; throws on division by zero.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& m) {
  if (&a.spec() != &m.spec()) throw std::invalid_argument("divmod: field mismatch");
  if (m.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
  const FieldSpec& spec = a.spec();
  if (a.degree() < m.degree()) return {Poly(spec), a};
  std::vector<FieldElem> r = a.coeffs();
  const auto& mc = m.coeffs();
  const std::size_t dm = mc.size() - 1;
  std::vector<FieldElem> q(r.size() - dm, FieldElem::zero(spec));
  const FieldElem lead_inv = field_inv(m.leading());
  const bool monic = m.leading().is_one();
  for (std::size_t i = r.size(); i-- > dm;) {
    if (r[i].is_zero()) continue;
    const FieldElem c = monic ? r[i] : r[i] * lead_inv;
    q[i - dm] = c;
    for (std::size_t j = 0; j <= dm; ++j) {
      if (!mc[j].is_zero()) r[i - dm + j] -= c * mc[j];
    }
  }
  r.resize(dm, FieldElem::zero(spec));
  return {Poly(spec, std::move(q)), Poly(spec, std::move(r))};
}

inline Poly operator%(const Poly& a, const Poly& m) { return divmod(a, m).second; }
inline Poly operator/(const Poly& a, const Poly& m) { return divmod(a, m).first; }

inline Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

inline Poly pow_mod(Poly base, std::uint64_t e, const Poly& m) {
  Poly result = Poly::one(base.spec()) % m;
  base = base % m;
  while (e > 0) {
    if (e & 1U) result = poly_mul_mod(result, base, m);
    e >>= 1U;
    if (e > 0) base = poly_mul_mod(base, base, m);
  }
  return result;
}

inline Poly pow_mod(Poly base, BigInt e, const Poly& m) {
  Poly result = Poly::one(base.spec()) % m;
  base = base % m;
  while (e > 0) {
    if ((e & 1) != 0) result = poly_mul_mod(result, base, m);
    e >>= 1;
    if (e > 0) base = poly_mul_mod(base, base, m);
  }
  return result;
}

/// Monic gcd; gcd(0, 0) is 0.
inline Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// (g, s, t) with s*a + t*b = g and g monic.
inline std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b) {
  const FieldSpec& spec = a.spec();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::one(spec), s1(spec);
  Poly t0(spec), t1 = Poly::one(spec);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s = s0 - q * s1;
    Poly t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const FieldElem inv = field_inv(r0.leading());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// Inverse of a modulo m. A unit modulus gives the zero ring, where the
/// answer is 0.
inline Poly inverse_mod(const Poly& a, const Poly& m) {
  if (m.is_zero()) throw std::invalid_argument("inverse_mod: zero modulus");
  if (m.degree() == 0) return Poly(m.spec());
  auto [g, s, t] = ext_gcd(a % m, m);
  if (!g.is_one()) throw std::invalid_argument("inverse_mod: arguments are not coprime");
  return s % m;
}

/// The unique x mod prod(moduli) with x = residues[i] mod moduli[i].
inline Poly crt_combine(std::span<const Poly> residues, std::span<const Poly> moduli) {
  if (residues.size() != moduli.size() || moduli.empty()) {
    throw std::invalid_argument("crt_combine: need equally many residues and moduli");
  }
  Poly x = residues[0] % moduli[0];
  Poly modulus = moduli[0];
  for (std::size_t i = 1; i < moduli.size(); ++i) {
    Poly inv(modulus.spec());
    try {
      inv = inverse_mod(modulus, moduli[i]);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("crt_combine: moduli are not pairwise coprime");
    }
    const Poly lift = poly_mul_mod(residues[i] - x, inv, moduli[i]);
    x = x + modulus * lift;
    modulus = modulus * moduli[i];
  }
  return x;
}

inline Poly xn_minus_1(const FieldSpec& spec, std::size_t n) {
  std::vector<FieldElem> c(n + 1, FieldElem::zero(spec));
  c[0] = FieldElem::scalar(spec, -1);
  c[n] = FieldElem::one(spec);
  return Poly(spec, std::move(c));
}

/// Product reduced modulo X^n - 1 by folding exponents.
inline Poly cyclic_mul(const Poly& a, const Poly& b, std::size_t n) {
  if (&a.spec() != &b.spec()) throw std::invalid_argument("cyclic_mul: field mismatch");
  const FieldSpec& spec = a.spec();
  std::vector<FieldElem> out(n, FieldElem::zero(spec));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[(i + j) % n] += a.coeffs()[i] * b.coeffs()[j];
  }
  return Poly(spec, std::move(out));
}

/// u(X^{-1}) mod X^n - 1, i.e. (u_0, u_{n-1}, ..., u_1).
inline Poly reciprocal_transform(const Poly& u, std::size_t n) {
  if (u.degree() >= static_cast<int>(n)) throw std::invalid_argument("reciprocal_transform: degree must be below n");
  if (u.is_zero()) return u;
  std::vector<FieldElem> out(n, FieldElem::zero(u.spec()));
  for (std::size_t i = 0; i < u.size(); ++i) out[(n - i) % n] = u.coeffs()[i];
  return Poly(u.spec(), std::move(out));
}

inline Poly frobenius_poly(const Poly& a, std::uint64_t i) {
  std::vector<FieldElem> out;
  out.reserve(a.size());
  for (const auto& c : a.coeffs()) out.push_back(frobenius(c, i));
  return Poly(a.spec(), std::move(out));
}

/// Reinterprets an F_p-coefficient polynomial over another field of the
/// same characteristic.
inline Poly lift(const Poly& a, const FieldSpec& target) {
  if (a.spec().characteristic() != target.characteristic()) {
    throw std::invalid_argument("lift: characteristic mismatch");
  }
  std::vector<FieldElem> out;
  out.reserve(a.size());
  for (const auto& c : a.coeffs()) out.push_back(FieldElem::scalar(target, c.prime_value()));
  return Poly(target, std::move(out));
}

/// Horner evaluation; x must live in the coefficient field.
inline FieldElem evaluate(const Poly& a, const FieldElem& x) {
  if (&x.spec() != &a.spec()) throw std::invalid_argument("evaluate: field mismatch");
  FieldElem acc = FieldElem::zero(a.spec());
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + a.coeffs()[i];
  return acc;
}

/// Orbits of Z/n under multiplication by q, each sorted, listed by minimum.
inline std::vector<std::vector<unsigned>> cyclotomic_cosets(unsigned n, std::uint64_t q) {
  if (n == 0) throw std::invalid_argument("cyclotomic_cosets: n must be positive");
  if (std::gcd(q, std::uint64_t{n}) != 1) throw std::invalid_argument("cyclotomic_cosets: gcd(n, q) != 1");
  std::vector<std::vector<unsigned>> out;
  std::vector<bool> seen(n, false);
  for (unsigned k = 0; k < n; ++k) {
    if (seen[k]) continue;
    std::vector<unsigned> coset;
    std::uint64_t x = k;
    while (!seen[x]) {
      seen[x] = true;
      coset.push_back(static_cast<unsigned>(x));
      x = nt::mulmod(x, q, n);
    }
    std::sort(coset.begin(), coset.end());
    out.push_back(std::move(coset));
  }
  return out;
}

}  // namespace frobcode
