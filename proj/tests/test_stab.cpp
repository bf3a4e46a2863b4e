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


#include <gtest/gtest.h>

#include <random>
#include <set>

#include "frobcode/stab.hpp"
#include "testing.hpp"

namespace frobcode {
namespace {

SympPair random_pair(std::mt19937_64& rng, std::uint32_t p, std::size_t n) {
  SympPair x = SympPair::zero(p, n);
  for (std::size_t i = 0; i < n; ++i) {
    x.u[i] = static_cast<std::uint32_t>(rng() % p);
    x.v[i] = static_cast<std::uint32_t>(rng() % p);
  }
  return x;
}

FrobeniusCode make(unsigned n, std::uint32_t p, unsigned d, std::vector<unsigned> g, std::vector<unsigned> h) {
  return construct_code(canonical_from_labels(CyclotomicContext::get(n, p, d), g, h));
}

std::vector<std::uint32_t> coeff_vector(const Poly& a, unsigned n) {
  std::vector<std::uint32_t> out(n, 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i % n] = (out[i % n] + a.coeffs()[i].prime_value()) % a.spec().characteristic();
  return out;
}

// Centraliser by brute force over all p^{2n} pairs: a pair is kept when it
// is orthogonal to every shift of the generator (g, f).
struct Brute {
  std::uint64_t size = 0;
  unsigned min_nonzero = 0;
  unsigned min_outside = 0;
  std::set<SympPair> elements;
};

Brute brute_centraliser(const FrobeniusCode& code) {
  const unsigned n = code.n;
  const std::uint32_t p = code.p;
  const auto g = coeff_vector(code.g(), n), f = coeff_vector(code.f, n);
  std::vector<SympPair> gens;
  for (unsigned s = 0; s < n; ++s) {
    SympPair e = SympPair::zero(p, n);
    for (unsigned i = 0; i < n; ++i) {
      e.u[(i + s) % n] = g[i];
      e.v[(i + s) % n] = f[i];
    }
    gens.push_back(e);
  }
  // S as the span of the generator shifts.
  std::set<SympPair> span{SympPair::zero(p, n)};
  for (const auto& b : gens) {
    std::set<SympPair> next = span;
    for (const auto& x : span) {
      SympPair y = x;
      for (std::uint32_t c = 1; c < p; ++c) {
        y += b;
        next.insert(y);
      }
    }
    span.swap(next);
  }
  Brute out;
  out.min_nonzero = out.min_outside = n + 1;
  std::vector<std::uint32_t> digits(2 * n, 0);
  for (;;) {
    SympPair x(p, std::vector<std::uint32_t>(digits.begin(), digits.begin() + n),
               std::vector<std::uint32_t>(digits.begin() + n, digits.end()));
    bool ok = true;
    for (const auto& b : gens) {
      std::uint64_t acc = 0;
      for (unsigned i = 0; i < n; ++i) acc += std::uint64_t{x.u[i]} * b.v[i] + std::uint64_t{p - x.v[i]} * b.u[i];
      if (acc % p != 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      ++out.size;
      unsigned w = 0;
      for (unsigned i = 0; i < n; ++i) w += (x.u[i] || x.v[i]) ? 1 : 0;
      if (w > 0) out.min_nonzero = std::min(out.min_nonzero, w);
      if (!span.count(x)) out.min_outside = std::min(out.min_outside, w);
      out.elements.insert(x);
    }
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return out;
}

TEST(SympInner, Examples) {
  std::mt19937_64 rng(1);
  const SympPair x = random_pair(rng, 2, 5);
  EXPECT_EQ(symp_inner_value(x, x), 0U);
  EXPECT_EQ(symp_inner_value(SympPair(2, {1}, {0}), SympPair(2, {0}, {1})), 1U);
  EXPECT_THROW(symp_inner_value(SympPair::zero(2, 3), SympPair::zero(2, 4)), std::invalid_argument);
}

TEST(SympInner, AntisymmetricAndBilinear) {
  std::mt19937_64 rng(2);
  for (std::uint32_t p : {2U, 3U, 5U}) {
    for (int trial = 0; trial < 200; ++trial) {
      const SympPair x = random_pair(rng, p, 5), y = random_pair(rng, p, 5), z = random_pair(rng, p, 5);
      EXPECT_EQ((symp_inner_value(x, y) + symp_inner_value(y, x)) % p, 0U);
      EXPECT_EQ(symp_inner_value(x + y, z), (symp_inner_value(x, z) + symp_inner_value(y, z)) % p);
      EXPECT_EQ(symp_inner_value(x, x), 0U);
    }
  }
}

TEST(JointWeight, Examples) {
  EXPECT_EQ(joint_weight(SympPair::zero(2, 4)), 0U);
  EXPECT_EQ(joint_weight(SympPair(2, {1, 0, 1}, {0, 0, 1})), 2U);
}

TEST(RightShift, Convention) {
  const SympPair x(2, {1, 0, 0, 1}, {0, 1, 0, 0});
  const SympPair y = right_shift(x);
  EXPECT_EQ(y.u, (std::vector<std::uint32_t>{1, 1, 0, 0}));
  EXPECT_EQ(y.v, (std::vector<std::uint32_t>{0, 0, 1, 0}));
}

// The coefficient of X^k in a(X) b(X^{-1}) is sum_i a_{i+k} b_i.
TEST(ShiftCompatibility, PolynomialMatchesShiftedInnerProduct) {
  std::mt19937_64 rng(3);
  const FieldSpec& f2 = FieldSpec::get(2, 1);
  for (unsigned n : {5U, 9U, 13U}) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::uint32_t> a(n), b(n);
      for (auto& x : a) x = rng() % 2;
      for (auto& x : b) x = rng() % 2;
      const Poly prod = cyclic_mul(to_poly(f2, a), to_poly(f2, frobtest::reverse_indices(b)), n);
      const auto c = coeff_vector(prod, n);
      for (unsigned k = 0; k < n; ++k) {
        unsigned dot = 0;
        for (unsigned i = 0; i < n; ++i) dot += a[(i + k) % n] * b[i];
        EXPECT_EQ(c[k], dot % 2) << "n=" << n << " k=" << k;
      }
    }
  }
}

TEST(Isotropy, ConstructedCodesAreIsotropic) {
  for (unsigned n : {5U, 13U, 17U}) {
    for (const auto& cf : enumerate_canonical(n, 2, 2)) {
      const auto s = IsotropicSpace::from_code(construct_code(cf));
      const IsotropyReport r = check_isotropy(s);
      EXPECT_TRUE(r.identity);
      EXPECT_EQ(r.exhaustive_checked, n <= 12);
      EXPECT_TRUE(r.ok());
    }
  }
  for (const auto& cf : enumerate_canonical(9, 2, 3)) EXPECT_TRUE(is_isotropic(IsotropicSpace::from_code(construct_code(cf))));
  for (const auto& cf : enumerate_canonical(5, 3, 2)) EXPECT_TRUE(is_isotropic(IsotropicSpace::from_code(construct_code(cf))));
}

TEST(Isotropy, GeneratorOneXFails) {
  const FieldSpec& f2 = FieldSpec::get(2, 1);
  const IsotropicSpace s(5, Poly::one(f2), Poly::x(f2));
  EXPECT_FALSE(isotropy_identity(s));
  EXPECT_FALSE(is_isotropic(s));
  // (1, X) against its shift (X, X^2).
  const SympPair a(2, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0});
  EXPECT_NE(symp_inner_value(a, right_shift(a)), 0U);
}

TEST(Isotropy, ZeroSpace) {
  const FieldSpec& f2 = FieldSpec::get(2, 1);
  const Poly xn1 = xn_minus_1(f2, 5);
  const IsotropicSpace s(5, xn1, Poly(f2));
  EXPECT_EQ(s.elements().size(), 1U);
  EXPECT_TRUE(is_isotropic(s));
}

TEST(Cyclicity, Examples) {
  const auto code = make(5, 2, 2, {0}, {1});
  const auto s = IsotropicSpace::from_code(code);
  const auto el = s.elements();
  EXPECT_EQ(el.size(), 16U);
  EXPECT_TRUE(is_simultaneously_cyclic(el));
  EXPECT_TRUE(is_uniquely_cyclic(el));
  EXPECT_TRUE(is_uniquely_cyclic(s));

  EXPECT_FALSE(is_uniquely_cyclic({SympPair::zero(2, 3), SympPair(2, {0, 0, 0}, {1, 1, 1})}));
  EXPECT_FALSE(is_simultaneously_cyclic({SympPair::zero(2, 2), SympPair(2, {0, 0}, {1, 0})}));

  // C1 x C2 with C1 the repetition code and C2 its dual-free part {0, 111}.
  std::vector<SympPair> css;
  for (const auto& u : {std::vector<std::uint32_t>{0, 0, 0}, {1, 1, 1}}) {
    for (const auto& v : {std::vector<std::uint32_t>{0, 0, 0}, {1, 1, 1}}) css.emplace_back(2, u, v);
  }
  EXPECT_TRUE(is_simultaneously_cyclic(css));
  EXPECT_FALSE(is_uniquely_cyclic(css));
}

TEST(Membership, ContainsExactlyTheElements) {
  const auto code = make(9, 2, 3, {0, 3}, {4});
  const auto s = IsotropicSpace::from_code(code);
  const auto el = s.elements();
  const std::set<SympPair> set(el.begin(), el.end());
  EXPECT_EQ(set.size(), std::size_t{1} << (9 - code.k));
  std::mt19937_64 rng(4);
  for (int i = 0; i < 2000; ++i) {
    const SympPair x = random_pair(rng, 2, 9);
    EXPECT_EQ(s.contains(x), set.count(x) != 0);
  }
  for (const auto& x : el) EXPECT_TRUE(s.contains(x));
}

TEST(Centraliser, LengthFive) {
  const auto s = IsotropicSpace::from_code(make(5, 2, 2, {0}, {1}));
  const CentraliserStats st = centraliser_stats(s);
  EXPECT_EQ(st.size, 64);
  EXPECT_EQ(st.min_weight_outside_s, 3U);
  EXPECT_EQ(centraliser_min_weight(s), 3U);
}

TEST(Centraliser, LengthNine) {
  const auto code = make(9, 2, 3, {0, 3}, {4});
  EXPECT_EQ(code_params(code), std::make_tuple(9U, 3U, 3U));
  EXPECT_GE(centraliser_min_weight(IsotropicSpace::from_code(code)), 3U);
}

// Every constructed code at small length, checked against the brute force.
TEST(Centraliser, MatchesBruteForce) {
  struct Case {
    unsigned n;
    std::uint32_t p;
    unsigned d;
  };
  int checked = 0;
  for (const Case c : {Case{3, 2, 3}, Case{5, 2, 2}, Case{9, 2, 3}, Case{5, 3, 2}, Case{7, 3, 3}}) {
    for (const auto& cf : enumerate_canonical(c.n, c.p, c.d)) {
      const FrobeniusCode code = construct_code(cf);
      const auto s = IsotropicSpace::from_code(code);
      if (std::pow(double(c.p), 2.0 * c.n) > 3e6) continue;
      const Brute b = brute_centraliser(code);
      const CentraliserStats st = centraliser_stats(s);
      SCOPED_TRACE("n=" + std::to_string(c.n) + " p=" + std::to_string(c.p) + " k=" + std::to_string(code.k));
      EXPECT_EQ(BigInt(b.size), st.size);
      EXPECT_EQ(b.min_nonzero, st.min_weight_nonzero);
      EXPECT_EQ(b.min_outside, st.min_weight_outside_s);
      const auto par = centraliser_elements(s, 1U << 22);
      const std::set<SympPair> ps(par.begin(), par.end());
      EXPECT_EQ(ps.size(), par.size());
      EXPECT_EQ(ps, b.elements);
      if (code.k > 0) {
        EXPECT_GE(b.min_nonzero, code.delta());
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 5);
}

TEST(Centraliser, PurityAboveBch) {
  for (unsigned n : {13U, 17U}) {
    for (const auto& cf : enumerate_canonical(n, 2, 2)) {
      const FrobeniusCode code = construct_code(cf);
      const auto s = IsotropicSpace::from_code(code);
      if (code.k == 0 || code.n + code.k > 26) continue;
      EXPECT_GE(centraliser_stats(s).min_weight_nonzero, code.delta()) << "n=" << n << " k=" << code.k;
    }
  }
}

TEST(Centraliser, CapAndSampler) {
  const auto code = make(17, 2, 2, {0, 1}, {6});
  const auto s = IsotropicSpace::from_code(code);
  EXPECT_THROW(centraliser_stats(s, 1U << 20), CapExceeded);
  EXPECT_THROW(centraliser_elements(s), CapExceeded);
  const auto small = IsotropicSpace::from_code(make(13, 2, 2, {0}, {2}));
  const unsigned exact = centraliser_min_weight(small);
  EXPECT_EQ(exact, 5U);
  const SampledBound sb = centraliser_sample_upper_bound(small, 20000, 7);
  EXPECT_GE(sb.upper_bound, exact);
  EXPECT_THROW(centraliser_min_weight(IsotropicSpace(5, Poly::one(FieldSpec::get(2, 1)), Poly(FieldSpec::get(2, 1)))),
               std::invalid_argument);
}

}  // namespace
}  // namespace frobcode
