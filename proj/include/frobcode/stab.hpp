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
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "frobcode/codegen.hpp"
#include "frobcode/errors.hpp"
#include "frobcode/galois.hpp"
#include "frobcode/polyring.hpp"

namespace frobcode {

/// A pair (u, v) in F_p^n x F_p^n.
struct SympPair {
  std::uint32_t p = 2;
  std::vector<std::uint32_t> u;
  std::vector<std::uint32_t> v;

  SympPair() = default;
  SympPair(std::uint32_t p_, std::vector<std::uint32_t> u_, std::vector<std::uint32_t> v_)
      : p(p_), u(std::move(u_)), v(std::move(v_)) {
    if (u.size() != v.size()) throw std::invalid_argument("SympPair: components differ in length");
    for (auto& x : u) x %= p;
    for (auto& x : v) x %= p;
  }

  static SympPair zero(std::uint32_t p, std::size_t n) { return SympPair(p, std::vector<std::uint32_t>(n, 0), std::vector<std::uint32_t>(n, 0)); }

  std::size_t n() const noexcept { return u.size(); }
  bool is_zero() const {
    return std::all_of(u.begin(), u.end(), [](auto x) { return x == 0; }) &&
           std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
  }

  friend bool operator==(const SympPair&, const SympPair&) = default;
  friend auto operator<=>(const SympPair&, const SympPair&) = default;

  SympPair& operator+=(const SympPair& o) {
    if (o.n() != n() || o.p != p) throw std::invalid_argument("SympPair: shape mismatch");
    for (std::size_t i = 0; i < n(); ++i) {
      u[i] = (u[i] + o.u[i]) % p;
      v[i] = (v[i] + o.v[i]) % p;
    }
    return *this;
  }
  friend SympPair operator+(SympPair a, const SympPair& b) { return a += b; }
};

/// a^T d - b^T c for x = (a, b), y = (c, d), as an F_p value.
inline std::uint32_t symp_inner_value(const SympPair& x, const SympPair& y) {
  if (x.n() != y.n() || x.p != y.p) throw std::invalid_argument("symp_inner: length mismatch");
  const std::uint64_t p = x.p;
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < x.n(); ++i) {
    acc = (acc + std::uint64_t{x.u[i]} * y.v[i]) % p;
    acc = (acc + (p - std::uint64_t{x.v[i]} * y.u[i] % p)) % p;
  }
  return static_cast<std::uint32_t>(acc);
}

inline FieldElem symp_inner(const SympPair& x, const SympPair& y) {
  return FieldElem::scalar(FieldSpec::get(x.p, 1), symp_inner_value(x, y));
}

inline unsigned joint_weight(const SympPair& x) {
  unsigned w = 0;
  for (std::size_t i = 0; i < x.n(); ++i) w += (x.u[i] != 0 || x.v[i] != 0) ? 1U : 0U;
  return w;
}

/// Simultaneous right shift (u_1, ..., u_n) -> (u_n, u_1, ..., u_{n-1}).
inline SympPair right_shift(const SympPair& x) {
  SympPair out = x;
  const std::size_t n = x.n();
  for (std::size_t i = 0; i < n; ++i) {
    out.u[(i + 1) % n] = x.u[i];
    out.v[(i + 1) % n] = x.v[i];
  }
  return out;
}

/// Coefficient vector of length n of a polynomial over F_p of degree < n.
inline std::vector<std::uint32_t> to_vector(const Poly& a, std::size_t n) {
  if (a.degree() >= static_cast<int>(n)) throw std::invalid_argument("to_vector: degree must be below n");
  std::vector<std::uint32_t> out(n, 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a.coeffs()[i].prime_value();
  return out;
}

inline Poly to_poly(const FieldSpec& base, const std::vector<std::uint32_t>& v) { return Poly::from_prime_coeffs(base, v); }

/// The shift-closed set {(w g, w f) mod X^n - 1 : w in F_p[X]/(X^n - 1)}.
class IsotropicSpace {
 public:
  IsotropicSpace(unsigned n, const Poly& g, const Poly& f) : n_(n), xn1_(xn_minus_1(g.spec(), n)), g_(g), f_(f % xn1_) {
    if (!g.spec().is_prime_field() || &f.spec() != &g.spec()) throw std::invalid_argument("IsotropicSpace: need F_p polynomials");
    if (g.is_zero()) throw std::invalid_argument("IsotropicSpace: g must be nonzero");
    if (!(xn1_ % g).is_zero()) throw std::invalid_argument("IsotropicSpace: g must divide X^n - 1");
    f_tilde_ = xn1_ / g;
    // f = a g forces g | f; a is then determined modulo (X^n-1)/g.
    if ((f_ % g).is_zero()) a_ = (f_ / g) % (f_tilde_.degree() > 0 ? f_tilde_ : xn1_);
  }

  static IsotropicSpace from_code(const FrobeniusCode& code) { return IsotropicSpace(code.n, code.g(), code.f); }

  unsigned n() const noexcept { return n_; }
  std::uint32_t p() const noexcept { return g_.spec().characteristic(); }
  const FieldSpec& field() const noexcept { return g_.spec(); }
  const Poly& g() const noexcept { return g_; }
  const Poly& f() const noexcept { return f_; }
  const Poly& f_tilde() const noexcept { return f_tilde_; }
  const std::optional<Poly>& a() const noexcept { return a_; }
  /// k = deg g; S has p^{n-k} elements.
  unsigned k() const noexcept { return static_cast<unsigned>(g_.degree()); }

  /// (w g, w f) for w of degree below n - k, in index order of w.
  template <class Visit>
  void for_each_element(Visit&& visit) const {
    const unsigned m = n_ - k();
    const std::uint32_t p = this->p();
    std::vector<std::uint32_t> w(m, 0);
    for (;;) {
      const Poly wp = to_poly(field(), w);
      visit(SympPair(p, to_vector(cyclic_mul(wp, g_ % xn1_, n_), n_), to_vector(cyclic_mul(wp, f_, n_), n_)));
      std::size_t i = 0;
      while (i < m && ++w[i] == p) w[i++] = 0;
      if (i == m) break;
    }
  }

  std::vector<SympPair> elements() const {
    std::vector<SympPair> out;
    for_each_element([&](SympPair e) { out.push_back(std::move(e)); });
    return out;
  }

  /// Membership by division: g | x and y = a x (or y = 0 when x = 0 and
  /// g = X^n - 1).
  bool contains(const SympPair& e) const {
    const Poly x = to_poly(field(), e.u), y = to_poly(field(), e.v);
    if (!(x % g_).is_zero()) return false;
    const Poly w = (x / g_) % (f_tilde_.degree() > 0 ? f_tilde_ : xn1_);
    return cyclic_mul(w, f_, n_) == y;
  }

 private:
  unsigned n_;
  Poly xn1_;
  Poly g_;
  Poly f_;
  Poly f_tilde_{g_.spec()};
  std::optional<Poly> a_;
};

/// g(X) f(X^{-1}) = g(X^{-1}) f(X) mod X^n - 1.
inline bool isotropy_identity(const IsotropicSpace& s) { return isotropy_identity(s.g(), s.f(), s.n()); }

struct IsotropyReport {
  bool identity = false;
  /// Whether the exhaustive pairwise sweep ran, and its verdict.
  bool exhaustive_checked = false;
  bool exhaustive = false;
  bool ok() const noexcept { return identity && (!exhaustive_checked || exhaustive); }
};

namespace detail {

inline std::uint64_t rotl(std::uint64_t x, unsigned s, unsigned n) {
  s %= n;
  if (s == 0) return x;
  const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return ((x << s) | (x >> (n - s))) & mask;
}

inline std::uint64_t pack(const Poly& a, unsigned n) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coeffs()[i].prime_value() != 0) out |= std::uint64_t{1} << (i % n);
  }
  return out;
}

/// x * y mod X^n - 1 over F_2, as bit masks.
inline std::uint64_t cyc_mul2(std::uint64_t x, std::uint64_t y, unsigned n) {
  std::uint64_t out = 0;
  while (y != 0) {
    const unsigned i = static_cast<unsigned>(std::countr_zero(y));
    out ^= rotl(x, i, n);
    y &= y - 1;
  }
  return out;
}

}  // namespace detail

/// Polynomial identity plus, for n <= 12, an exhaustive pairwise check of
/// the symplectic product over all elements of S (over a basis of S when
/// the element count exceeds 4096, which suffices by bilinearity).
inline IsotropyReport check_isotropy(const IsotropicSpace& s) {
  IsotropyReport r;
  r.identity = isotropy_identity(s);
  if (s.n() > 12) return r;
  r.exhaustive_checked = true;
  const unsigned n = s.n();
  if (s.p() == 2) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> el;
    const std::uint64_t g = detail::pack(s.g() % xn_minus_1(s.field(), n), n), f = detail::pack(s.f(), n);
    const unsigned m = n - s.k();
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << m); ++w) el.emplace_back(detail::cyc_mul2(g, w, n), detail::cyc_mul2(f, w, n));
    r.exhaustive = true;
    for (std::size_t i = 0; i < el.size() && r.exhaustive; ++i) {
      for (std::size_t j = i + 1; j < el.size(); ++j) {
        const int ip = std::popcount(el[i].first & el[j].second) + std::popcount(el[i].second & el[j].first);
        if (ip % 2 != 0) {
          r.exhaustive = false;
          break;
        }
      }
    }
    return r;
  }
  BigInt count = boost::multiprecision::pow(BigInt(s.p()), n - s.k());
  std::vector<SympPair> el;
  if (count <= 4096) {
    el = s.elements();
  } else {
    const FieldSpec& base = s.field();
    const Poly xn1 = xn_minus_1(base, n);
    for (unsigned i = 0; i < n - s.k(); ++i) {
      const Poly w = Poly::monomial(FieldElem::one(base), i);
      el.emplace_back(s.p(), to_vector(cyclic_mul(w, s.g() % xn1, n), n), to_vector(cyclic_mul(w, s.f(), n), n));
    }
  }
  r.exhaustive = true;
  for (std::size_t i = 0; i < el.size() && r.exhaustive; ++i) {
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      if (symp_inner_value(el[i], el[j]) != 0) {
        r.exhaustive = false;
        break;
      }
    }
  }
  return r;
}

inline bool is_isotropic(const IsotropicSpace& s) { return check_isotropy(s).ok(); }

/// Shift-closure of an explicit element set.
inline bool is_simultaneously_cyclic(const std::vector<SympPair>& elements) {
  const std::set<SympPair> set(elements.begin(), elements.end());
  return std::all_of(elements.begin(), elements.end(), [&](const SympPair& e) { return set.count(right_shift(e)) != 0; });
}

/// No element (0, b) with b != 0.
inline bool is_uniquely_cyclic(const std::vector<SympPair>& elements) {
  for (const auto& e : elements) {
    const bool u_zero = std::all_of(e.u.begin(), e.u.end(), [](auto x) { return x == 0; });
    if (u_zero && !e.is_zero()) return false;
  }
  return true;
}

/// Generator form: always shift-closed.
inline bool is_simultaneously_cyclic(const IsotropicSpace&) { return true; }

/// (w g, w f) with w g = 0 means (X^n-1)/g divides w, so w f = 0 iff g | f.
inline bool is_uniquely_cyclic(const IsotropicSpace& s) { return s.a().has_value(); }

/// Statistics of a centraliser sweep over the parameterisation
/// (u, a u + v (X^n-1)/g), u of degree < n, v of degree < deg g.
struct CentraliserStats {
  BigInt size = 0;
  /// Minimum joint weight over C(S) \ S and over C(S) \ {0}.
  unsigned min_weight_outside_s = 0;
  unsigned min_weight_nonzero = 0;
};

namespace detail {

inline BigInt centraliser_count(const IsotropicSpace& s) {
  return boost::multiprecision::pow(BigInt(s.p()), s.n() + s.k());
}

inline void check_cap(const IsotropicSpace& s, const BigInt& cap) {
  if (!s.a()) throw std::invalid_argument("centraliser: space is not of the form (g, a g)");
  if (centraliser_count(s) > cap) {
    throw CapExceeded("centraliser: p^(n+deg g) exceeds the cap of " + cap.str());
  }
}

inline CentraliserStats centraliser_sweep_p2(const IsotropicSpace& s) {
  const unsigned n = s.n(), k = s.k();
  const std::uint64_t a = pack(*s.a(), n), ft = pack(s.f_tilde(), n);
  CentraliserStats st;
  st.size = centraliser_count(s);
  unsigned best_out = n + 1, best_nz = n + 1;
  std::uint64_t v = 0, vf = 0;
  for (std::uint64_t vi = 0; vi < (std::uint64_t{1} << k); ++vi) {
    if (vi != 0) {
      const unsigned bit = static_cast<unsigned>(std::countr_zero(vi));
      v ^= std::uint64_t{1} << bit;
      vf ^= rotl(ft, bit, n);
    }
    std::uint64_t u = 0, au = 0, uf = 0;
    for (std::uint64_t ui = 0; ui < (std::uint64_t{1} << n); ++ui) {
      if (ui != 0) {
        const unsigned bit = static_cast<unsigned>(std::countr_zero(ui));
        u ^= std::uint64_t{1} << bit;
        au ^= rotl(a, bit, n);
        uf ^= rotl(ft, bit, n);
      }
      const std::uint64_t y = au ^ vf;
      const unsigned w = static_cast<unsigned>(std::popcount(u | y));
      if (u == 0 && v == 0) continue;
      best_nz = std::min(best_nz, w);
      const bool in_s = v == 0 && uf == 0;
      if (!in_s) best_out = std::min(best_out, w);
    }
  }
  st.min_weight_outside_s = best_out;
  st.min_weight_nonzero = best_nz;
  return st;
}

inline CentraliserStats centraliser_sweep_generic(const IsotropicSpace& s) {
  const unsigned n = s.n(), k = s.k();
  const std::uint32_t p = s.p();
  const FieldSpec& base = s.field();
  const auto a = to_vector(*s.a(), n);
  const auto ft = to_vector(s.f_tilde() % xn_minus_1(base, n), n);
  // Rows a X^i and f~ X^i for incremental updates.
  CentraliserStats st;
  st.size = centraliser_count(s);
  unsigned best_out = n + 1, best_nz = n + 1;
  std::vector<std::uint32_t> u(n, 0), v(k, 0);
  std::vector<std::uint32_t> y(n), uf(n);
  for (;;) {
    std::vector<std::uint32_t> vf(n, 0);
    for (unsigned j = 0; j < k; ++j) {
      if (v[j] == 0) continue;
      for (unsigned i = 0; i < n; ++i) vf[(i + j) % n] = (vf[(i + j) % n] + v[j] * ft[i]) % p;
    }
    std::fill(u.begin(), u.end(), 0);
    for (;;) {
      std::fill(y.begin(), y.end(), 0);
      std::fill(uf.begin(), uf.end(), 0);
      bool u_zero = true;
      for (unsigned j = 0; j < n; ++j) {
        if (u[j] == 0) continue;
        u_zero = false;
        for (unsigned i = 0; i < n; ++i) {
          y[(i + j) % n] = (y[(i + j) % n] + u[j] * a[i]) % p;
          uf[(i + j) % n] = (uf[(i + j) % n] + u[j] * ft[i]) % p;
        }
      }
      const bool v_zero = std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
      unsigned w = 0;
      for (unsigned i = 0; i < n; ++i) w += (u[i] != 0 || (y[i] + vf[i]) % p != 0) ? 1U : 0U;
      if (!(u_zero && v_zero)) {
        best_nz = std::min(best_nz, w);
        const bool in_s = v_zero && std::all_of(uf.begin(), uf.end(), [](auto x) { return x == 0; });
        if (!in_s) best_out = std::min(best_out, w);
      }
      std::size_t i = 0;
      while (i < n && ++u[i] == p) u[i++] = 0;
      if (i == n) break;
    }
    std::size_t j = 0;
    while (j < k && ++v[j] == p) v[j++] = 0;
    if (j == k) break;
  }
  st.min_weight_outside_s = best_out;
  st.min_weight_nonzero = best_nz;
  return st;
}

}  // namespace detail

inline constexpr std::uint64_t kDefaultCentraliserCap = std::uint64_t{1} << 26;

/// Exhaustive sweep of C(S); refuses with CapExceeded above the cap.
inline CentraliserStats centraliser_stats(const IsotropicSpace& s, std::uint64_t cap = kDefaultCentraliserCap) {
  detail::check_cap(s, cap);
  if (s.p() == 2 && s.n() <= 63) return detail::centraliser_sweep_p2(s);
  return detail::centraliser_sweep_generic(s);
}

/// Minimum joint weight over C(S) \ S, i.e. the exact distance.
inline unsigned centraliser_min_weight(const IsotropicSpace& s, std::uint64_t cap = kDefaultCentraliserCap) {
  if (s.k() == 0) throw std::invalid_argument("centraliser_min_weight: C(S) = S when deg g = 0");
  return centraliser_stats(s, cap).min_weight_outside_s;
}

/// Every centraliser element from the parameterisation, for small sweeps.
inline std::vector<SympPair> centraliser_elements(const IsotropicSpace& s, std::uint64_t cap = 1U << 16) {
  detail::check_cap(s, cap);
  const unsigned n = s.n(), k = s.k();
  const FieldSpec& base = s.field();
  const Poly xn1 = xn_minus_1(base, n);
  std::vector<SympPair> out;
  std::vector<std::uint32_t> u(n, 0), v(k, 0);
  for (;;) {
    for (;;) {
      const Poly up = to_poly(base, u), vp = to_poly(base, v);
      const Poly y = (cyclic_mul(*s.a(), up, n) + cyclic_mul(vp, s.f_tilde() % xn1, n)) % xn1;
      out.emplace_back(s.p(), u, to_vector(y, n));
      std::size_t i = 0;
      while (i < n && ++u[i] == s.p()) u[i++] = 0;
      if (i == n) break;
    }
    std::size_t j = 0;
    while (j < k && ++v[j] == s.p()) v[j++] = 0;
    if (j == k) break;
  }
  return out;
}

/// Random centraliser elements outside S; the minimum weight seen is an
/// upper bound on the distance, not the distance.
struct SampledBound {
  unsigned upper_bound;
  std::uint64_t samples;
};

inline SampledBound centraliser_sample_upper_bound(const IsotropicSpace& s, std::uint64_t samples, std::uint64_t seed) {
  if (!s.a()) throw std::invalid_argument("centraliser: space is not of the form (g, a g)");
  std::mt19937_64 rng(seed);
  const unsigned n = s.n(), k = s.k();
  const FieldSpec& base = s.field();
  const Poly xn1 = xn_minus_1(base, n);
  unsigned best = n + 1;
  for (std::uint64_t t = 0; t < samples; ++t) {
    std::vector<std::uint32_t> u(n), v(k);
    for (auto& x : u) x = static_cast<std::uint32_t>(rng() % s.p());
    for (auto& x : v) x = static_cast<std::uint32_t>(rng() % s.p());
    const Poly up = to_poly(base, u), vp = to_poly(base, v);
    const Poly y = (cyclic_mul(*s.a(), up, n) + cyclic_mul(vp, s.f_tilde() % xn1, n)) % xn1;
    const SympPair e(s.p(), u, to_vector(y, n));
    if (e.is_zero() || s.contains(e)) continue;
    best = std::min(best, joint_weight(e));
  }
  return {best, samples};
}

}  // namespace frobcode
