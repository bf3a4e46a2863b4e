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
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "frobcode/embedding.hpp"
#include "frobcode/errors.hpp"
#include "frobcode/galois.hpp"
#include "frobcode/polyring.hpp"

namespace frobcode {

/// The irreducible factor f_{q,label} = prod_{j in coset} (X - beta^j).
struct CycFactor {
  Poly poly;
  std::vector<unsigned> coset;
  unsigned label;
};

/// X^n - 1 over F_q split into irreducibles, with the orbits of sigma
/// (coefficientwise x -> x^p) on the factors. Each orbit lists factor
/// indices starting at its least label and following sigma.
struct CycFactorisation {
  unsigned n = 0;
  const FieldSpec* field = nullptr;
  std::vector<CycFactor> factors;
  std::vector<std::vector<std::size_t>> orbits;

  std::size_t index_of_label(unsigned label) const {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].label == label) return i;
    }
    throw std::invalid_argument("CycFactorisation: no factor labelled " + std::to_string(label));
  }

  /// Index of the factor vanishing at beta^j.
  std::size_t index_of_exponent(unsigned j) const {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (std::binary_search(factors[i].coset.begin(), factors[i].coset.end(), j % n)) return i;
    }
    throw InternalError("CycFactorisation: exponent not covered");
  }

  Poly product() const {
    Poly out = Poly::one(*field);
    for (const auto& f : factors) out = out * f.poly;
    return out;
  }
};

using Restrictor = std::function<std::optional<FieldElem>(const FieldElem&)>;

/// Builds each factor from its roots in the splitting field and maps the
/// coefficients back through restrict; a coefficient outside the target
/// field is an internal error.
inline CycFactorisation factorize_xn_minus_1(unsigned n, const FieldSpec& spec, const RootOfUnity& root,
                                             const Restrictor& restrict) {
  if (n == 0) throw std::invalid_argument("factorize_xn_minus_1: n must be positive");
  const std::uint32_t p = spec.characteristic();
  if (n % p == 0) throw std::invalid_argument("factorize_xn_minus_1: n is not coprime to p");
  if (root.n != n) throw std::invalid_argument("factorize_xn_minus_1: root has the wrong order");
  const FieldSpec& big = *root.field;
  const std::uint64_t q = nt::powmod(p, spec.degree(), n);

  std::vector<FieldElem> beta_pow{FieldElem::one(big)};
  for (unsigned j = 1; j < n; ++j) beta_pow.push_back(beta_pow.back() * root.beta);

  CycFactorisation out;
  out.n = n;
  out.field = &spec;
  for (auto& coset : cyclotomic_cosets(n, q)) {
    Poly prod = Poly::one(big);
    for (unsigned j : coset) {
      prod = prod * Poly(big, {-beta_pow[j], FieldElem::one(big)});
    }
    std::vector<FieldElem> c;
    for (const auto& coef : prod.coeffs()) {
      auto r = restrict(coef);
      if (!r) throw InternalError("factorize_xn_minus_1: coefficient outside " + spec.name());
      c.push_back(*r);
    }
    const unsigned label = coset.front();
    out.factors.push_back({Poly(spec, std::move(c)), std::move(coset), label});
  }

  // sigma maps the factor with roots beta^C to the one with roots beta^{pC}.
  std::vector<std::size_t> image(out.factors.size());
  for (std::size_t i = 0; i < out.factors.size(); ++i) {
    const Poly s = frobenius_poly(out.factors[i].poly, 1);
    auto it = std::find_if(out.factors.begin(), out.factors.end(), [&](const CycFactor& f) { return f.poly == s; });
    if (it == out.factors.end()) throw InternalError("factorize_xn_minus_1: sigma image is not a factor");
    image[i] = static_cast<std::size_t>(it - out.factors.begin());
    const unsigned expected = static_cast<unsigned>(nt::mulmod(out.factors[i].coset.front(), p, n));
    if (!std::binary_search(it->coset.begin(), it->coset.end(), expected)) {
      throw InternalError("factorize_xn_minus_1: sigma orbit disagrees with coset multiplication");
    }
  }
  std::vector<bool> seen(out.factors.size(), false);
  for (std::size_t i = 0; i < out.factors.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t j = i; !seen[j]; j = image[j]) {
      seen[j] = true;
      orbit.push_back(j);
    }
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

/// Restrictor for the prime field: the element must be a scalar.
inline Restrictor prime_restrictor(const FieldSpec& prime) {
  return [&prime](const FieldElem& y) -> std::optional<FieldElem> {
    if (!y.in_prime_field()) return std::nullopt;
    return FieldElem::scalar(prime, y.prime_value());
  };
}

/// Self-contained form: picks the splitting field and root itself.
inline CycFactorisation factorize_xn_minus_1(unsigned n, const FieldSpec& spec) {
  if (n == 0 || n % spec.characteristic() == 0) {
    throw std::invalid_argument("factorize_xn_minus_1: n must be positive and coprime to p");
  }
  const RootOfUnity root = primitive_nth_root(n, spec.characteristic(), spec.degree());
  if (spec.degree() == 1) return factorize_xn_minus_1(n, spec, root, prime_restrictor(spec));
  auto emb = std::make_shared<SubfieldEmbedding>(spec, *root.field);
  return factorize_xn_minus_1(n, spec, root, [emb](const FieldElem& y) { return emb->restrict(y); });
}

}  // namespace frobcode
