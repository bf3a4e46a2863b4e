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

#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "frobcode/galois.hpp"
#include "frobcode/polyring.hpp"

namespace frobcode {

/// Field embedding F_{p^d} -> F_{p^D} (d | D) sending eta to a fixed root
/// theta of the small modulus. Among the d conjugate roots the one with the
/// least index is used.
class SubfieldEmbedding {
 public:
  SubfieldEmbedding(const FieldSpec& small, const FieldSpec& big) : small_(&small), big_(&big) {
    if (small.characteristic() != big.characteristic() || big.degree() % small.degree() != 0) {
      throw std::invalid_argument("SubfieldEmbedding: " + small.name() + " is not a subfield of " + big.name());
    }
    theta_ = small.degree() == 1 ? FieldElem::one(big) : find_root();
    build_restriction();
  }

  const FieldSpec& small() const noexcept { return *small_; }
  const FieldSpec& big() const noexcept { return *big_; }
  const FieldElem& theta() const noexcept { return theta_; }

  FieldElem embed(const FieldElem& x) const {
    if (&x.spec() != small_) throw std::invalid_argument("SubfieldEmbedding::embed: element is not in " + small_->name());
    FieldElem acc = FieldElem::zero(*big_);
    for (std::size_t i = powers_.size(); i-- > 0;) {
      if (x.coeffs()[i] != 0) acc += powers_[i].scaled(x.coeffs()[i]);
    }
    return acc;
  }

  Poly embed(const Poly& a) const {
    std::vector<FieldElem> out;
    out.reserve(a.size());
    for (const auto& c : a.coeffs()) out.push_back(embed(c));
    return Poly(*big_, std::move(out));
  }

  /// Preimage of y, or nothing when y lies outside the subfield.
  std::optional<FieldElem> restrict(const FieldElem& y) const {
    if (&y.spec() != big_) throw std::invalid_argument("SubfieldEmbedding::restrict: element is not in " + big_->name());
    const unsigned d = small_->degree();
    const std::uint64_t p = small_->characteristic();
    std::vector<std::uint32_t> c(d, 0);
    for (unsigned i = 0; i < d; ++i) {
      std::uint64_t acc = 0;
      for (unsigned j = 0; j < d; ++j) acc = (acc + inverse_[i][j] * y.coeffs()[pivots_[j]]) % p;
      c[i] = static_cast<std::uint32_t>(acc);
    }
    FieldElem x(*small_, c);
    if (!(embed(x) == y)) return std::nullopt;
    return x;
  }

  std::optional<Poly> restrict(const Poly& a) const {
    std::vector<FieldElem> out;
    out.reserve(a.size());
    for (const auto& c : a.coeffs()) {
      auto r = restrict(c);
      if (!r) return std::nullopt;
      out.push_back(*r);
    }
    return Poly(*small_, std::move(out));
  }

 private:
  // Splits the small modulus, which has all its roots in the big field,
  // down to a linear factor by equal-degree splitting.
  FieldElem find_root() const {
    const FieldSpec& big = *big_;
    const std::uint32_t p = big.characteristic();
    std::vector<FieldElem> mc;
    for (auto c : small_->modulus()) mc.push_back(FieldElem::scalar(big, c));
    Poly f(big, mc);
    std::vector<Poly> pending{f};
    std::vector<FieldElem> roots;
    const Poly y = Poly::x(big);
    // Fixed-seed probes; low-index elements can all have trace zero.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    const BigInt half = (big.size() - 1) / 2;
    while (!pending.empty()) {
      Poly c = pending.back();
      pending.pop_back();
      if (c.degree() == 1) {
        roots.push_back(-c.coeffs()[0]);
        continue;
      }
      for (int attempt = 0;; ++attempt) {
        if (attempt > 10000) throw InternalError("SubfieldEmbedding: root splitting did not terminate");
        std::vector<std::uint32_t> rc(big.degree());
        for (auto& v : rc) v = static_cast<std::uint32_t>(rng() % p);
        const FieldElem r(big, rc);
        Poly probe(big);
        if (p == 2) {
          // Absolute trace of r*Y modulo c.
          Poly term = Poly::constant(r) * y % c;
          probe = term;
          for (unsigned i = 1; i < big.degree(); ++i) {
            term = poly_mul_mod(term, term, c);
            probe += term;
          }
        } else {
          probe = pow_mod(y + Poly::constant(r), half, c) - Poly::one(big);
        }
        Poly split = poly_gcd(c, probe);
        if (split.degree() > 0 && split.degree() < c.degree()) {
          pending.push_back(c / split);
          pending.push_back(split);
          break;
        }
      }
    }
    FieldElem best = roots.front();
    for (const auto& r : roots) {
      if (index_less(r, best)) best = r;
    }
    return best;
  }

  // Picks d coordinates of the big field on which theta^0..theta^{d-1} are
  // independent and inverts that d x d block over F_p.
  void build_restriction() {
    const unsigned d = small_->degree();
    const unsigned D = big_->degree();
    const std::uint64_t p = small_->characteristic();
    powers_.clear();
    FieldElem pw = FieldElem::one(*big_);
    for (unsigned i = 0; i < d; ++i) {
      powers_.push_back(pw);
      pw *= theta_;
    }
    // Row-reduce the D x d matrix M[r][i] = coord r of theta^i, recording
    // pivot rows.
    std::vector<std::vector<std::uint64_t>> m(D, std::vector<std::uint64_t>(d));
    for (unsigned r = 0; r < D; ++r) {
      for (unsigned i = 0; i < d; ++i) m[r][i] = powers_[i].coeffs()[r];
    }
    pivots_.clear();
    {
      auto work = m;
      std::vector<unsigned> rows(D);
      std::iota(rows.begin(), rows.end(), 0U);
      unsigned col = 0;
      std::vector<bool> used(D, false);
      for (col = 0; col < d; ++col) {
        unsigned pr = D;
        for (unsigned r = 0; r < D; ++r) {
          if (!used[r] && work[r][col] != 0) {
            pr = r;
            break;
          }
        }
        if (pr == D) throw InternalError("SubfieldEmbedding: powers of theta are dependent");
        used[pr] = true;
        pivots_.push_back(pr);
        const std::uint64_t inv = nt::mod_inverse(work[pr][col], p);
        for (unsigned r = 0; r < D; ++r) {
          if (r == pr || work[r][col] == 0) continue;
          const std::uint64_t f = work[r][col] * inv % p;
          for (unsigned j = 0; j < d; ++j) work[r][j] = (work[r][j] + (p - f) * work[pr][j]) % p;
        }
      }
    }
    // Invert the pivot block A[j][i] = M[pivots_[j]][i]; restrict solves
    // A c = y_pivots.
    std::vector<std::vector<std::uint64_t>> a(d, std::vector<std::uint64_t>(2 * d, 0));
    for (unsigned j = 0; j < d; ++j) {
      for (unsigned i = 0; i < d; ++i) a[j][i] = m[pivots_[j]][i];
      a[j][d + j] = 1;
    }
    for (unsigned col = 0; col < d; ++col) {
      unsigned pr = col;
      while (pr < d && a[pr][col] == 0) ++pr;
      if (pr == d) throw InternalError("SubfieldEmbedding: singular pivot block");
      std::swap(a[pr], a[col]);
      const std::uint64_t inv = nt::mod_inverse(a[col][col], p);
      for (auto& v : a[col]) v = v * inv % p;
      for (unsigned r = 0; r < d; ++r) {
        if (r == col || a[r][col] == 0) continue;
        const std::uint64_t f = a[r][col];
        for (unsigned j = 0; j < 2 * d; ++j) a[r][j] = (a[r][j] + (p - f) * a[col][j]) % p;
      }
    }
    inverse_.assign(d, std::vector<std::uint64_t>(d));
    for (unsigned i = 0; i < d; ++i) {
      for (unsigned j = 0; j < d; ++j) inverse_[i][j] = a[i][d + j];
    }
  }

  const FieldSpec* small_;
  const FieldSpec* big_;
  FieldElem theta_{FieldSpec::get(2, 1)};
  std::vector<FieldElem> powers_;
  std::vector<unsigned> pivots_;
  std::vector<std::vector<std::uint64_t>> inverse_;
};

}  // namespace frobcode
