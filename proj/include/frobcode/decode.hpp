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
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "frobcode/codegen.hpp"
#include "frobcode/galois.hpp"
#include "frobcode/polyring.hpp"
#include "frobcode/stab.hpp"

namespace frobcode {

using ErrorPair = SympPair;

/// e' reduced to e = e' g^{-1} mod h over F_{p^d}.
struct Syndrome {
  Poly e_reduced;
  const FrobeniusCode* code;
};

/// The 2n shifted inner products f^T N^k u - g^T N^k v for k = 0..n-1, with
/// (N b)_i = b_{i-1}. Read as coefficients, this is
/// f(X) u(X^{-1}) - g(X) v(X^{-1}) mod X^n - 1 where f = a g.
inline Poly syndrome_oracle(const ErrorPair& err, const FrobeniusCode& code) {
  const unsigned n = code.n;
  if (err.n() != n || err.p != code.p) throw std::invalid_argument("syndrome_oracle: error length differs from n");
  const auto f = to_vector(code.f, n);
  const auto g = to_vector(code.g() % code.ctx().xn1(), n);
  const std::uint64_t p = code.p;
  std::vector<std::uint32_t> out(n, 0);
  for (unsigned k = 0; k < n; ++k) {
    std::uint64_t acc = 0;
    for (unsigned i = 0; i < n; ++i) {
      const unsigned src = (i + n - k) % n;
      acc += std::uint64_t{f[i]} * err.u[src] % p;
      acc += (p - std::uint64_t{g[i]} * err.v[src] % p);
    }
    out[k] = static_cast<std::uint32_t>(acc % p);
  }
  return Poly::from_prime_coeffs(code.ctx().base(), out);
}

/// Multiplies by g^{-1} modulo (X^n - 1)/g and reduces modulo h.
inline Syndrome reduce_syndrome(const Poly& e_prime, const FrobeniusCode& code) {
  const FieldSpec& mid = code.ctx().mid();
  if (code.h().degree() <= 0) return {Poly(mid), &code};
  const Poly t = poly_mul_mod(e_prime, code.g_inv, code.f_tilde);
  return {lift(t, mid) % code.h(), &code};
}

/// E(X) = alpha eta u(X^{-1}) - v(X^{-1}) over F_{p^d}; its weight is the
/// joint weight of (u, v).
inline Poly error_polynomial(const ErrorPair& err, const FrobeniusCode& code) {
  const unsigned n = code.n;
  const FieldSpec& mid = code.ctx().mid();
  const FieldElem ae = FieldElem::scalar(mid, code.alpha.prime_value()) * FieldElem::generator(mid);
  std::vector<FieldElem> c(n, FieldElem::zero(mid));
  for (unsigned i = 0; i < n; ++i) {
    const unsigned j = (n - i) % n;
    c[j] = ae.scaled(err.u[i]) - FieldElem::scalar(mid, err.v[i]);
  }
  return Poly(mid, std::move(c));
}

enum class DecodeStatus { Corrected, Failure };

struct DecodeResult {
  DecodeStatus status = DecodeStatus::Failure;
  std::optional<Poly> error_poly;
  std::optional<ErrorPair> error;
  std::string reason;

  bool ok() const noexcept { return status == DecodeStatus::Corrected; }
};

namespace detail {

inline DecodeResult fail(std::string why) {
  DecodeResult r;
  r.status = DecodeStatus::Failure;
  r.reason = std::move(why);
  return r;
}

/// Connection polynomial of the shortest LFSR generating s.
inline std::vector<FieldElem> berlekamp_massey(const std::vector<FieldElem>& s) {
  const FieldSpec& F = s.front().spec();
  std::vector<FieldElem> c{FieldElem::one(F)}, b{FieldElem::one(F)};
  std::size_t len = 0, m = 1;
  FieldElem bd = FieldElem::one(F);
  for (std::size_t i = 0; i < s.size(); ++i) {
    FieldElem disc = s[i];
    for (std::size_t j = 1; j <= len && j < c.size(); ++j) disc += c[j] * s[i - j];
    if (disc.is_zero()) {
      ++m;
      continue;
    }
    const FieldElem coef = disc / bd;
    auto t = c;
    if (c.size() < b.size() + m) c.resize(b.size() + m, FieldElem::zero(F));
    for (std::size_t j = 0; j < b.size(); ++j) c[j + m] -= coef * b[j];
    if (2 * len <= i) {
      len = i + 1 - len;
      b = std::move(t);
      bd = disc;
      m = 1;
    } else {
      ++m;
    }
  }
  c.resize(len + 1, FieldElem::zero(F));
  return c;
}

/// Solves A y = rhs over a field by Gauss-Jordan; nothing if singular.
inline std::optional<std::vector<FieldElem>> solve(std::vector<std::vector<FieldElem>> a, std::vector<FieldElem> rhs) {
  const std::size_t m = rhs.size();
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pr = col;
    while (pr < m && a[pr][col].is_zero()) ++pr;
    if (pr == m) return std::nullopt;
    std::swap(a[pr], a[col]);
    std::swap(rhs[pr], rhs[col]);
    const FieldElem inv = field_inv(a[col][col]);
    for (auto& x : a[col]) x *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const FieldElem f = a[r][col];
      for (std::size_t j = 0; j < m; ++j) a[r][j] -= f * a[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace detail

/// Finds the unique E over F_{p^d} of weight <= tau with E = e mod h, using
/// the syndromes S_j = e(beta^{ell + j s}), j < 2 tau, on the code's BCH
/// window. Anything inconsistent is reported as a failure.
inline DecodeResult bch_decode(const Syndrome& syn, unsigned tau) {
  const FrobeniusCode& code = *syn.code;
  const auto& ctx = code.ctx();
  const unsigned n = code.n;
  const FieldSpec& mid = ctx.mid();
  if (2 * tau > code.bch.run) throw std::invalid_argument("bch_decode: tau exceeds the BCH radius");
  DecodeResult res;
  if (syn.e_reduced.is_zero()) {
    res.status = DecodeStatus::Corrected;
    res.error_poly = Poly(mid);
    return res;
  }
  if (tau == 0) return detail::fail("nonzero syndrome with correction radius 0");

  const Poly eb = ctx.embedding().embed(syn.e_reduced);
  const unsigned s = code.bch.s, ell = code.bch.ell;
  std::vector<FieldElem> synd;
  for (unsigned j = 0; j < 2 * tau; ++j) synd.push_back(evaluate(eb, ctx.beta_pow(static_cast<unsigned>((ell + std::uint64_t{j} * s) % n))));
  if (std::all_of(synd.begin(), synd.end(), [](const FieldElem& x) { return x.is_zero(); })) {
    return detail::fail("syndrome window vanishes on a nonzero residue");
  }

  const auto lambda = detail::berlekamp_massey(synd);
  const std::size_t nu = lambda.size() - 1;
  if (nu == 0 || nu > tau || lambda.back().is_zero()) return detail::fail("error locator degree out of range");

  // Chien search: position i is in error iff Lambda(beta^{-s i}) = 0.
  std::vector<unsigned> positions;
  for (unsigned i = 0; i < n; ++i) {
    const FieldElem z = ctx.beta_pow(static_cast<unsigned>((n - (std::uint64_t{s} * i) % n) % n));
    FieldElem acc = FieldElem::zero(ctx.big());
    for (std::size_t j = lambda.size(); j-- > 0;) acc = acc * z + lambda[j];
    if (acc.is_zero()) positions.push_back(i);
  }
  if (positions.size() != nu) return detail::fail("locator roots do not match its degree");

  std::vector<std::vector<FieldElem>> a(nu, std::vector<FieldElem>(nu, FieldElem::zero(ctx.big())));
  std::vector<FieldElem> rhs(synd.begin(), synd.begin() + static_cast<std::ptrdiff_t>(nu));
  for (std::size_t j = 0; j < nu; ++j) {
    for (std::size_t m = 0; m < nu; ++m) {
      a[j][m] = ctx.beta_pow(static_cast<unsigned>(std::uint64_t{positions[m]} * ((ell + j * s) % n) % n));
    }
  }
  auto ys = detail::solve(std::move(a), std::move(rhs));
  if (!ys) return detail::fail("singular magnitude system");

  std::vector<FieldElem> ec(n, FieldElem::zero(mid));
  for (std::size_t m = 0; m < nu; ++m) {
    auto y = ctx.embedding().restrict((*ys)[m]);
    if (!y || y->is_zero()) return detail::fail("error magnitude outside F_{p^d}");
    ec[positions[m]] = *y;
  }
  Poly e_hat(mid, std::move(ec));
  if (!(e_hat % code.h() == syn.e_reduced)) return detail::fail("re-check rejected: E mod h differs from the syndrome");
  res.status = DecodeStatus::Corrected;
  res.error_poly = std::move(e_hat);
  return res;
}

/// Splits E_i = alpha eta u'_i - v'_i coordinatewise and undoes the
/// reversal; nothing when some E_i leaves span{1, eta}.
inline std::optional<ErrorPair> split_error(const Poly& e, const FrobeniusCode& code) {
  const unsigned n = code.n;
  const std::uint32_t p = code.p;
  if (e.degree() >= static_cast<int>(n)) return std::nullopt;
  const std::uint64_t alpha_inv = nt::mod_inverse(code.alpha.prime_value(), p);
  std::vector<std::uint32_t> u(n, 0), v(n, 0);
  for (unsigned i = 0; i < e.size(); ++i) {
    const auto c = e.coeffs()[i].coeffs();
    for (std::size_t r = 2; r < c.size(); ++r) {
      if (c[r] != 0) return std::nullopt;
    }
    const unsigned j = (n - i) % n;
    u[j] = static_cast<std::uint32_t>(c[1] * alpha_inv % p);
    v[j] = c[0] == 0 ? 0 : p - c[0];
  }
  return ErrorPair(p, std::move(u), std::move(v));
}

/// Oracle, reduction, BCH decoding and splitting. Only the oracle sees the
/// hidden error.
inline DecodeResult correct(const ErrorPair& hidden, const FrobeniusCode& code) {
  const Poly ep = syndrome_oracle(hidden, code);
  const Syndrome syn = reduce_syndrome(ep, code);
  DecodeResult r = bch_decode(syn, code.tau());
  if (!r.ok()) return r;
  auto err = split_error(*r.error_poly, code);
  if (!err) return detail::fail("error value outside span{1, eta}");
  if (joint_weight(*err) > code.tau()) return detail::fail("decoded weight exceeds tau");
  r.error = std::move(err);
  return r;
}

enum class TrialOutcome { Exact, Miscorrected, Failure };

inline TrialOutcome classify_trial(const ErrorPair& hidden, const DecodeResult& r) {
  if (!r.ok()) return TrialOutcome::Failure;
  return *r.error == hidden ? TrialOutcome::Exact : TrialOutcome::Miscorrected;
}

/// Uniform error of the given joint weight: distinct positions, each with a
/// nonzero (u_i, v_i).
template <class Rng>
ErrorPair random_error(unsigned n, std::uint32_t p, unsigned weight, Rng& rng) {
  if (weight > n) throw std::invalid_argument("random_error: weight exceeds n");
  std::vector<unsigned> pos(n);
  std::iota(pos.begin(), pos.end(), 0U);
  for (unsigned i = 0; i < weight; ++i) {
    std::uniform_int_distribution<unsigned> pick(i, n - 1);
    std::swap(pos[i], pos[pick(rng)]);
  }
  ErrorPair e = ErrorPair::zero(p, n);
  std::uniform_int_distribution<std::uint64_t> val(1, std::uint64_t{p} * p - 1);
  for (unsigned i = 0; i < weight; ++i) {
    const std::uint64_t x = val(rng);
    e.u[pos[i]] = static_cast<std::uint32_t>(x % p);
    e.v[pos[i]] = static_cast<std::uint32_t>(x / p);
  }
  return e;
}

/// Calls visit on every error of joint weight exactly w.
template <class Visit>
void for_each_error_of_weight(unsigned n, std::uint32_t p, unsigned w, Visit&& visit) {
  std::vector<unsigned> pos(w);
  std::iota(pos.begin(), pos.end(), 0U);
  const std::uint64_t patterns = std::uint64_t{p} * p - 1;
  for (;;) {
    std::vector<std::uint64_t> val(w, 1);
    for (;;) {
      ErrorPair e = ErrorPair::zero(p, n);
      for (unsigned i = 0; i < w; ++i) {
        e.u[pos[i]] = static_cast<std::uint32_t>(val[i] % p);
        e.v[pos[i]] = static_cast<std::uint32_t>(val[i] / p);
      }
      visit(e);
      unsigned i = 0;
      while (i < w && ++val[i] > patterns) val[i++] = 1;
      if (i == w) break;
    }
    // Next w-subset of {0..n-1} in lexicographic order.
    int i = static_cast<int>(w) - 1;
    while (i >= 0 && pos[static_cast<unsigned>(i)] == n - w + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++pos[static_cast<unsigned>(i)];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < w; ++j) pos[j] = pos[j - 1] + 1;
  }
}

}  // namespace frobcode
