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
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "frobcode/cyclotomic.hpp"
#include "frobcode/embedding.hpp"
#include "frobcode/errors.hpp"
#include "frobcode/galois.hpp"
#include "frobcode/numtheory.hpp"
#include "frobcode/polyring.hpp"

namespace frobcode {

enum class Parity { Even, Odd };

inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

/// Which exponents t give n | p^t + 1. Every such t is an odd multiple of
/// t_min.
struct LengthClass {
  unsigned n = 0;
  std::uint32_t p = 0;
  std::optional<unsigned> t_min;
  Parity parity = Parity::Odd;
  /// Extension degrees d >= 2 dividing t_min.
  std::vector<unsigned> d_options;

  bool good() const noexcept { return t_min.has_value(); }

  /// d divides some valid t iff the 2-part of d divides t_min.
  bool compatible(unsigned d) const {
    return t_min && d >= 1 && nt::two_adic_valuation(d) <= nt::two_adic_valuation(*t_min);
  }

  /// The least valid t divisible by d.
  unsigned least_t(unsigned d) const {
    if (!compatible(d)) throw std::invalid_argument("LengthClass::least_t: incompatible degree");
    return std::lcm(*t_min, d);
  }
};

inline LengthClass classify_length(unsigned n, std::uint32_t p) {
  if (n <= 1) throw std::invalid_argument("classify_length: n must exceed 1");
  if (std::gcd(std::uint64_t{n}, std::uint64_t{p}) != 1) {
    throw std::invalid_argument("classify_length: n=" + std::to_string(n) + " is not coprime to p=" + std::to_string(p));
  }
  LengthClass lc;
  lc.n = n;
  lc.p = p;
  if (auto t = nt::least_minus_one_exponent(p, n)) {
    lc.t_min = static_cast<unsigned>(*t);
    lc.parity = *t % 2 == 0 ? Parity::Even : Parity::Odd;
    for (unsigned d = 2; d <= *lc.t_min; ++d) {
      if (*lc.t_min % d == 0) lc.d_options.push_back(d);
    }
  }
  return lc;
}

inline bool linear_exists(unsigned n, std::uint32_t p) {
  const LengthClass lc = classify_length(n, p);
  return lc.good() && lc.parity == Parity::Even;
}

/// Everything about X^n - 1 that depends only on (n, p, d): the tower
/// F_p < F_{p^d} < F_{p^D}, a fixed primitive n-th root beta in the top
/// field, both factorisations and the primitive idempotents over F_{p^d}.
class CyclotomicContext {
 public:
  static std::shared_ptr<const CyclotomicContext> get(unsigned n, std::uint32_t p, unsigned d) {
    static std::mutex mutex;
    static std::map<std::tuple<unsigned, std::uint32_t, unsigned>, std::shared_ptr<const CyclotomicContext>> cache;
    {
      std::lock_guard lock(mutex);
      auto it = cache.find({n, p, d});
      if (it != cache.end()) return it->second;
    }
    auto ctx = std::shared_ptr<const CyclotomicContext>(new CyclotomicContext(n, p, d));
    std::lock_guard lock(mutex);
    return cache.emplace(std::make_tuple(n, p, d), std::move(ctx)).first->second;
  }

  unsigned n() const noexcept { return n_; }
  std::uint32_t p() const noexcept { return p_; }
  unsigned d() const noexcept { return d_; }
  const FieldSpec& base() const noexcept { return *base_; }
  const FieldSpec& mid() const noexcept { return *mid_; }
  const FieldSpec& big() const noexcept { return *root_.field; }
  const RootOfUnity& root() const noexcept { return root_; }
  const SubfieldEmbedding& embedding() const noexcept { return *emb_; }
  const CycFactorisation& base_factors() const noexcept { return base_fact_; }
  const CycFactorisation& mid_factors() const noexcept { return mid_fact_; }
  const Poly& idempotent(std::size_t mid_index) const { return idempotents_.at(mid_index); }
  const Poly& xn1() const noexcept { return xn1_; }

  /// beta^j in the top field.
  const FieldElem& beta_pow(unsigned j) const { return beta_pow_[j % n_]; }

  /// Base factor indices whose degree is not a multiple of d.
  const std::vector<std::size_t>& mandatory() const noexcept { return mandatory_; }

  /// One entry per base factor that splits into a full sigma-orbit over
  /// F_{p^d}: the base factor index and its d conjugates, starting at the
  /// conjugate holding the base label and following sigma.
  struct Orbit {
    std::size_t base_index;
    std::vector<std::size_t> conjugates;
  };
  const std::vector<Orbit>& orbits() const noexcept { return orbits_; }

 private:
  CyclotomicContext(unsigned n, std::uint32_t p, unsigned d)
      : n_(n),
        p_(p),
        d_(d),
        base_(&FieldSpec::get(p, 1)),
        mid_(&FieldSpec::get(p, d)),
        root_(check_and_root(n, p, d)),
        emb_(std::make_unique<SubfieldEmbedding>(*mid_, *root_.field)),
        base_fact_(factorize_xn_minus_1(n, *base_, root_, prime_restrictor(*base_))),
        mid_fact_(factorize_xn_minus_1(n, *mid_, root_,
                                       [this](const FieldElem& y) { return emb_->restrict(y); })),
        xn1_(xn_minus_1(*base_, n)) {
    beta_pow_.push_back(FieldElem::one(big()));
    for (unsigned j = 1; j < n; ++j) beta_pow_.push_back(beta_pow_.back() * root_.beta);

    const Poly xn1_mid = xn_minus_1(*mid_, n);
    for (const auto& f : mid_fact_.factors) {
      const Poly m = xn1_mid / f.poly;
      idempotents_.push_back(m * inverse_mod(m, f.poly) % xn1_mid);
    }

    for (std::size_t b = 0; b < base_fact_.factors.size(); ++b) {
      const auto& bf = base_fact_.factors[b];
      if (bf.coset.size() % d != 0) {
        mandatory_.push_back(b);
        continue;
      }
      const std::size_t first = mid_fact_.index_of_label(bf.label);
      auto it = std::find_if(mid_fact_.orbits.begin(), mid_fact_.orbits.end(),
                             [&](const auto& o) { return o.front() == first; });
      if (it == mid_fact_.orbits.end() || it->size() != d) {
        throw InternalError("CyclotomicContext: base factor does not split into a full sigma-orbit");
      }
      orbits_.push_back({b, *it});
    }
  }

  static RootOfUnity check_and_root(unsigned n, std::uint32_t p, unsigned d) {
    if (n <= 1) throw std::invalid_argument("CyclotomicContext: n must exceed 1");
    if (d < 2) throw std::invalid_argument("CyclotomicContext: extension degree must be >= 2");
    if (n % p == 0) throw std::invalid_argument("CyclotomicContext: n is not coprime to p");
    return primitive_nth_root(n, p, d);
  }

  unsigned n_;
  std::uint32_t p_;
  unsigned d_;
  const FieldSpec* base_;
  const FieldSpec* mid_;
  RootOfUnity root_;
  std::unique_ptr<SubfieldEmbedding> emb_;
  CycFactorisation base_fact_;
  CycFactorisation mid_fact_;
  Poly xn1_;
  std::vector<FieldElem> beta_pow_;
  std::vector<Poly> idempotents_;
  std::vector<std::size_t> mandatory_;
  std::vector<Orbit> orbits_;
};

using ContextPtr = std::shared_ptr<const CyclotomicContext>;

/// X^n - 1 = g * prod_i sigma^i(h). orbit_choice[j] in [0, d) picks the
/// conjugate sigma^c of orbit j for h; the value d moves the whole orbit
/// into g.
struct CanonicalFactorisation {
  ContextPtr ctx;
  std::vector<unsigned> orbit_choice;
  Poly g;
  Poly h;
  /// Base factor indices in g: mandatory ones, then absorbed orbits.
  std::vector<std::size_t> g_factors;
  /// Mid factor indices in h, in orbit order.
  std::vector<std::size_t> h_factors;

  std::vector<unsigned> g_labels() const {
    std::vector<unsigned> out;
    for (auto i : g_factors) out.push_back(ctx->base_factors().factors[i].label);
    return out;
  }

  std::vector<unsigned> h_labels() const {
    std::vector<unsigned> out;
    for (auto i : h_factors) out.push_back(ctx->mid_factors().factors[i].label);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// h labels written as p^c * k mod n for the conjugate sigma^c of the
  /// orbit of g_k. Not always the least member of the coset.
  std::vector<unsigned> h_conjugate_labels() const {
    std::vector<unsigned> out;
    const auto& orbits = ctx->orbits();
    const unsigned n = ctx->n();
    for (std::size_t j = 0; j < orbits.size(); ++j) {
      const unsigned c = orbit_choice[j];
      if (c == ctx->d()) continue;
      std::uint64_t l = ctx->base_factors().factors[orbits[j].base_index].label;
      for (unsigned i = 0; i < c; ++i) l = l * ctx->p() % n;
      out.push_back(static_cast<unsigned>(l));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Sorted exponents j with g(beta^j) = 0.
  std::vector<unsigned> g_exponents() const {
    std::vector<unsigned> out;
    for (auto i : g_factors) {
      const auto& c = ctx->base_factors().factors[i].coset;
      out.insert(out.end(), c.begin(), c.end());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Sorted exponents j with h(beta^j) = 0.
  std::vector<unsigned> h_exponents() const {
    std::vector<unsigned> out;
    for (auto i : h_factors) {
      const auto& c = ctx->mid_factors().factors[i].coset;
      out.insert(out.end(), c.begin(), c.end());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool degenerate() const noexcept { return h_factors.empty(); }
};

inline CanonicalFactorisation make_canonical(const ContextPtr& ctx, std::vector<unsigned> choice) {
  const auto& orbits = ctx->orbits();
  if (choice.size() != orbits.size()) throw std::invalid_argument("make_canonical: one choice per orbit required");
  CanonicalFactorisation cf{ctx, std::move(choice), Poly::one(ctx->base()), Poly::one(ctx->mid()), {}, {}};
  cf.g_factors = ctx->mandatory();
  for (std::size_t j = 0; j < orbits.size(); ++j) {
    const unsigned c = cf.orbit_choice[j];
    if (c > ctx->d()) throw std::invalid_argument("make_canonical: choice out of range");
    if (c == ctx->d()) {
      cf.g_factors.push_back(orbits[j].base_index);
    } else {
      cf.h_factors.push_back(orbits[j].conjugates[c]);
    }
  }
  for (auto i : cf.g_factors) cf.g = cf.g * ctx->base_factors().factors[i].poly;
  for (auto i : cf.h_factors) cf.h = cf.h * ctx->mid_factors().factors[i].poly;
  return cf;
}

/// Locates the canonical factorisation with the given g_k / h_k labels.
/// A label may be any exponent in the factor's coset. Throws when the
/// labels do not describe one.
inline CanonicalFactorisation canonical_from_labels(const ContextPtr& ctx, const std::vector<unsigned>& g_labels,
                                                    const std::vector<unsigned>& h_labels) {
  const auto& base = ctx->base_factors();
  const auto& mid = ctx->mid_factors();
  std::vector<std::size_t> g_idx, h_idx;
  for (auto l : g_labels) g_idx.push_back(base.index_of_exponent(l % ctx->n()));
  for (auto l : h_labels) h_idx.push_back(mid.index_of_exponent(l % ctx->n()));
  std::sort(g_idx.begin(), g_idx.end());
  std::sort(h_idx.begin(), h_idx.end());
  if (std::adjacent_find(g_idx.begin(), g_idx.end()) != g_idx.end() ||
      std::adjacent_find(h_idx.begin(), h_idx.end()) != h_idx.end()) {
    throw std::invalid_argument("canonical_from_labels: repeated factor");
  }
  for (auto b : ctx->mandatory()) {
    if (!std::binary_search(g_idx.begin(), g_idx.end(), b)) {
      throw std::invalid_argument("canonical_from_labels: g must contain g_" + std::to_string(base.factors[b].label));
    }
  }
  std::vector<unsigned> choice;
  std::size_t g_used = ctx->mandatory().size(), h_used = 0;
  for (const auto& orbit : ctx->orbits()) {
    const unsigned bl = base.factors[orbit.base_index].label;
    std::optional<unsigned> pick;
    if (std::binary_search(g_idx.begin(), g_idx.end(), orbit.base_index)) {
      pick = ctx->d();
      ++g_used;
    }
    for (unsigned c = 0; c < orbit.conjugates.size(); ++c) {
      if (std::binary_search(h_idx.begin(), h_idx.end(), orbit.conjugates[c])) {
        if (pick) throw std::invalid_argument("canonical_from_labels: orbit of g_" + std::to_string(bl) + " chosen twice");
        pick = c;
        ++h_used;
      }
    }
    if (!pick) throw std::invalid_argument("canonical_from_labels: orbit of g_" + std::to_string(bl) + " not covered");
    choice.push_back(*pick);
  }
  if (g_used != g_idx.size() || h_used != h_idx.size()) {
    throw std::invalid_argument("canonical_from_labels: unknown or ineligible labels");
  }
  return make_canonical(ctx, std::move(choice));
}

struct EnumerateOptions {
  bool include_degenerate = true;
};

/// Calls visit on every choice vector in lexicographic order (first orbit
/// most significant, conjugates before absorption), without checking that
/// d is compatible with n.
inline void for_each_raw_candidate(const ContextPtr& ctx, const std::function<void(const CanonicalFactorisation&)>& visit,
                                   EnumerateOptions opts = {}) {
  const std::size_t m = ctx->orbits().size();
  const unsigned radix = ctx->d() + 1;
  std::vector<unsigned> choice(m, 0);
  for (;;) {
    const bool degenerate = std::all_of(choice.begin(), choice.end(), [&](unsigned c) { return c == ctx->d(); });
    if (opts.include_degenerate || !degenerate) visit(make_canonical(ctx, choice));
    std::size_t i = m;
    while (i > 0 && ++choice[i - 1] == radix) choice[--i] = 0;
    if (i == 0) break;
  }
}

inline void check_compatible(unsigned n, std::uint32_t p, unsigned d) {
  const LengthClass lc = classify_length(n, p);
  if (!lc.good()) {
    throw std::invalid_argument("n=" + std::to_string(n) + " is not a Frobenius length: no t with " + std::to_string(p) +
                                "^t = -1 mod n");
  }
  if (d < 2) throw std::invalid_argument("extension degree d must be >= 2");
  if (!lc.compatible(d)) {
    if (d % 2 == 0 && lc.parity == Parity::Odd) {
      throw std::invalid_argument("no even exponent: n | " + std::to_string(p) + "^t+1 only for odd t");
    }
    throw std::invalid_argument("d=" + std::to_string(d) + " divides no t with n | " + std::to_string(p) + "^t+1");
  }
}

inline void for_each_canonical(unsigned n, std::uint32_t p, unsigned d,
                               const std::function<void(const CanonicalFactorisation&)>& visit, EnumerateOptions opts = {}) {
  check_compatible(n, p, d);
  for_each_raw_candidate(CyclotomicContext::get(n, p, d), visit, opts);
}

inline std::vector<CanonicalFactorisation> enumerate_canonical(unsigned n, std::uint32_t p, unsigned d,
                                                               EnumerateOptions opts = {}) {
  std::vector<CanonicalFactorisation> out;
  for_each_canonical(n, p, d, [&](const CanonicalFactorisation& cf) { out.push_back(cf); }, opts);
  return out;
}

/// alpha = -c0^{-1} for d = 2 (c0 the constant term of the F_{p^2}
/// modulus), 1 otherwise.
inline FieldElem default_alpha(std::uint32_t p, unsigned d) {
  const FieldSpec& base = FieldSpec::get(p, 1);
  if (d != 2) return FieldElem::one(base);
  const FieldElem c0 = FieldElem::scalar(base, FieldSpec::get(p, 2).modulus()[0]);
  return -field_inv(c0);
}

/// The CRT solution a = 1 mod g, a = sigma^i(alpha eta) mod sigma^i(h),
/// over F_{p^d}, assembled from primitive idempotents. No checks.
inline Poly crt_a_mid(const CanonicalFactorisation& cf, const FieldElem& alpha) {
  const auto& ctx = *cf.ctx;
  const FieldSpec& mid = ctx.mid();
  if (&alpha.spec() != &ctx.base() || alpha.is_zero()) throw std::invalid_argument("build_a: alpha must be nonzero in F_p");
  const FieldElem alpha_eta = FieldElem::scalar(mid, alpha.prime_value()) * FieldElem::generator(mid);
  std::vector<FieldElem> residue(ctx.mid_factors().factors.size(), FieldElem::one(mid));
  for (std::size_t j = 0; j < ctx.orbits().size(); ++j) {
    const unsigned c = cf.orbit_choice[j];
    if (c == ctx.d()) continue;
    const auto& conj = ctx.orbits()[j].conjugates;
    for (unsigned pos = 0; pos < conj.size(); ++pos) {
      residue[conj[pos]] = frobenius(alpha_eta, (pos + ctx.d() - c) % ctx.d());
    }
  }
  std::vector<FieldElem> acc(ctx.n(), FieldElem::zero(mid));
  for (std::size_t i = 0; i < residue.size(); ++i) {
    const auto& e = ctx.idempotent(i).coeffs();
    for (std::size_t j = 0; j < e.size(); ++j) acc[j] += residue[i] * e[j];
  }
  return Poly(mid, std::move(acc));
}

/// crt_a_mid restricted to F_p; nothing if a coefficient leaves F_p.
inline std::optional<Poly> crt_a(const CanonicalFactorisation& cf, const FieldElem& alpha) {
  const Poly am = crt_a_mid(cf, alpha);
  if (!am.in_prime_field()) return std::nullopt;
  return Poly::from_prime_coeffs(cf.ctx->base(), am.prime_coeffs());
}

/// a(X) with the defining congruences, verified to lie in F_p[X], to be 1
/// mod g and to satisfy a(X^{-1}) = a(X) mod (X^n-1)/g.
inline Poly build_a(const CanonicalFactorisation& cf, const FieldElem& alpha) {
  auto a = crt_a(cf, alpha);
  if (!a) throw InternalError("build_a: CRT solution has coefficients outside F_p");
  const unsigned n = cf.ctx->n();
  if (!((*a - Poly::one(cf.ctx->base())) % cf.g).is_zero()) throw InternalError("build_a: a != 1 mod g");
  const Poly ft = cf.ctx->xn1() / cf.g;
  if (!((reciprocal_transform(*a, n) - *a) % ft).is_zero()) {
    throw InternalError("build_a: a(X^-1) != a(X) mod (X^n-1)/g");
  }
  return *a;
}

/// g(X) f(X^{-1}) = g(X^{-1}) f(X) mod X^n - 1.
inline bool isotropy_identity(const Poly& g, const Poly& f, unsigned n) {
  const Poly xn1 = xn_minus_1(g.spec(), n);
  const Poly gr = g % xn1, fr = f % xn1;
  return cyclic_mul(gr, reciprocal_transform(fr, n), n) == cyclic_mul(reciprocal_transform(gr, n), fr, n);
}

/// A run {ell, ell+s, ..., ell+(run-1)s} of root exponents of h.
struct BchWindow {
  unsigned delta = 1;
  unsigned s = 1;
  unsigned ell = 0;
  unsigned run = 0;
};

/// Longest run with step s inside the exponent set E. Among equally long
/// runs the first (or last, with prefer_last) start in the order of
/// ell * s^{-1} is returned.
inline BchWindow bch_window(const std::vector<unsigned>& exps, unsigned n, unsigned s, bool prefer_last = false) {
  if (n == 0 || std::gcd(s, n) != 1) throw std::invalid_argument("bch_window: step must be coprime to n");
  std::vector<char> in(n, 0);
  for (auto e : exps) in[e % n] = 1;
  std::vector<char> t(n, 0);
  for (unsigned x = 0; x < n; ++x) t[x] = in[static_cast<std::size_t>(std::uint64_t{s} * x % n)];
  BchWindow best{1, s, 0, 0};
  if (std::all_of(t.begin(), t.end(), [](char c) { return c != 0; })) return {n + 1, s, 0, n};
  for (unsigned x = 0; x < n; ++x) {
    if (!t[x] || t[(x + n - 1) % n]) continue;
    unsigned len = 0;
    while (t[(x + len) % n]) ++len;
    if (len > best.run || (prefer_last && len == best.run)) {
      best = {len + 1, s, static_cast<unsigned>(std::uint64_t{s} * x % n), len};
    }
  }
  return best;
}

/// Maximum over all steps s coprime to n; ties keep the smallest s.
inline BchWindow best_bch_window(const std::vector<unsigned>& exps, unsigned n, bool prefer_last = false) {
  BchWindow best = bch_window(exps, n, 1, prefer_last);
  for (unsigned s = 2; s < n; ++s) {
    if (std::gcd(s, n) != 1) continue;
    const BchWindow w = bch_window(exps, n, s, prefer_last);
    if (w.run > best.run) best = w;
  }
  return best;
}

inline unsigned bch_distance(const std::vector<unsigned>& exps, unsigned n) { return best_bch_window(exps, n).delta; }

/// BCH distance of a factor h of X^n - 1 over F_{p^k}, found by locating
/// its roots among the powers of a primitive n-th root.
inline unsigned bch_distance(const Poly& h, unsigned n) {
  if (h.is_zero()) throw std::invalid_argument("bch_distance: zero polynomial");
  const FieldSpec& spec = h.spec();
  const RootOfUnity root = primitive_nth_root(n, spec.characteristic(), spec.degree());
  const SubfieldEmbedding emb(spec, *root.field);
  const Poly hb = emb.embed(h);
  std::vector<unsigned> exps;
  FieldElem x = FieldElem::one(*root.field);
  for (unsigned j = 0; j < n; ++j, x *= root.beta) {
    if (evaluate(hb, x).is_zero()) exps.push_back(j);
  }
  if (static_cast<int>(exps.size()) != h.degree()) throw std::invalid_argument("bch_distance: h does not divide X^n - 1");
  return bch_distance(exps, n);
}

/// Fixed-beta tables read the first maximal run for even d and the last
/// for odd d.
inline bool window_prefers_last(unsigned d) { return d % 2 == 1; }

struct FrobeniusCode {
  unsigned n;
  std::uint32_t p;
  unsigned d;
  unsigned t;
  FieldElem alpha;
  CanonicalFactorisation cf;
  Poly a;
  /// a * g mod X^n - 1; S is generated by (g, f).
  Poly f;
  unsigned k;
  /// Best window over all rescalings of beta; defines delta and drives
  /// decoding.
  BchWindow bch;
  /// Window for the fixed beta (step 1), as printed in tables.
  BchWindow beta_window;
  bool linear;
  bool degenerate;
  bool isotropy_verified;
  /// (X^n - 1) / g and the inverse of g modulo it.
  Poly f_tilde;
  Poly g_inv;

  const CyclotomicContext& ctx() const { return *cf.ctx; }
  unsigned delta() const noexcept { return bch.delta; }
  unsigned tau() const noexcept { return (bch.delta - 1) / 2; }
  const Poly& g() const noexcept { return cf.g; }
  const Poly& h() const noexcept { return cf.h; }
};

inline FrobeniusCode construct_code(const CanonicalFactorisation& cf, const FieldElem& alpha) {
  const auto& ctx = *cf.ctx;
  const unsigned n = ctx.n();
  const LengthClass lc = classify_length(n, ctx.p());
  const unsigned t = lc.compatible(ctx.d()) ? lc.least_t(ctx.d()) : 0;
  Poly a = build_a(cf, alpha);
  Poly f = cyclic_mul(a, cf.g, n);
  if (!isotropy_identity(cf.g, f, n)) throw InternalError("construct_code: isotropy identity fails");
  const auto exps = cf.h_exponents();
  const unsigned k = static_cast<unsigned>(cf.g.degree());
  if (k + ctx.d() * static_cast<unsigned>(std::max(cf.h.degree(), 0)) != n) {
    throw InternalError("construct_code: deg g + d deg h != n");
  }
  Poly ft = ctx.xn1() / cf.g;
  Poly ginv = inverse_mod(cf.g, ft);
  const BchWindow best = best_bch_window(exps, n, window_prefers_last(ctx.d()));
  const BchWindow fixed = bch_window(exps, n, 1, window_prefers_last(ctx.d()));
  return FrobeniusCode{n,
                       ctx.p(),
                       ctx.d(),
                       t,
                       alpha,
                       cf,
                       std::move(a),
                       std::move(f),
                       k,
                       best,
                       fixed,
                       ctx.d() == 2,
                       cf.degenerate(),
                       true,
                       std::move(ft),
                       std::move(ginv)};
}

inline FrobeniusCode construct_code(const CanonicalFactorisation& cf) {
  return construct_code(cf, default_alpha(cf.ctx->p(), cf.ctx->d()));
}

inline FrobeniusCode construct_code(unsigned n, std::uint32_t p, unsigned d, const CanonicalFactorisation& cf,
                                    const FieldElem& alpha) {
  if (cf.ctx->n() != n || cf.ctx->p() != p || cf.ctx->d() != d) {
    throw std::invalid_argument("construct_code: factorisation belongs to different (n, p, d)");
  }
  check_compatible(n, p, d);
  return construct_code(cf, alpha);
}

inline std::tuple<unsigned, unsigned, unsigned> code_params(const FrobeniusCode& code) {
  return {code.n, code.k, code.bch.delta};
}

/// g * h over F_{p^2}, checked against gcd(X^n - 1, g (1 + eta' a)) with
/// eta' = sigma(eta).
inline Poly linear_generator(const FrobeniusCode& code) {
  if (code.d != 2) throw std::invalid_argument("linear_generator: requires d = 2");
  const FieldSpec& mid = code.ctx().mid();
  if (!(code.alpha == default_alpha(code.p, 2))) {
    throw std::invalid_argument("linear_generator: requires alpha = -c0^{-1}");
  }
  const Poly gen = (lift(code.g(), mid) * code.h()).monic();
  const FieldElem eta_conj = frobenius(FieldElem::generator(mid), 1);
  const Poly probe = lift(code.g(), mid) * (Poly::one(mid) + lift(code.a, mid).scaled(eta_conj));
  const Poly check = poly_gcd(xn_minus_1(mid, code.n), probe);
  if (!(check == gen)) throw InternalError("linear_generator: gcd(X^n - 1, g(1 + eta' a)) != g h");
  return gen;
}

}  // namespace frobcode
