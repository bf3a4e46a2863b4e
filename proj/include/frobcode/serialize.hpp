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

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "frobcode/codegen.hpp"

namespace frobcode {

using Json = nlohmann::ordered_json;

/// A descriptor that does not describe the code it claims to.
struct DescriptorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Json elem_coeffs(const FieldElem& x) { return Json(std::vector<std::uint32_t>(x.coeffs().begin(), x.coeffs().end())); }

inline Json window_json(const BchWindow& w) {
  return Json{{"delta", w.delta}, {"step", w.s}, {"start", w.ell}, {"run", w.run}};
}

template <class T>
void expect_equal(const Json& j, const char* key, const T& want) {
  if (!j.contains(key)) throw DescriptorError(std::string("descriptor: missing field '") + key + "'");
  if (j.at(key) != Json(want)) {
    throw DescriptorError(std::string("descriptor: field '") + key + "' is " + j.at(key).dump() + ", recomputed " +
                          Json(want).dump());
  }
}

}  // namespace detail

/// JSON descriptor of a code. Polynomials appear as labelled coset sets plus
/// coefficient arrays (lowest degree first; h coefficients are length-d
/// vectors over F_p in the basis 1, eta, ..., eta^{d-1}).
inline Json to_json(const FrobeniusCode& code) {
  const auto& ctx = code.ctx();
  Json g{{"labels", code.cf.g_labels()}, {"cosets", Json::array()}, {"coeffs", code.g().prime_coeffs()}};
  for (auto i : code.cf.g_factors) g["cosets"].push_back(ctx.base_factors().factors[i].coset);
  std::vector<unsigned> h_labels;
  Json h_cosets = Json::array();
  for (auto i : code.cf.h_factors) {
    h_labels.push_back(ctx.mid_factors().factors[i].label);
    h_cosets.push_back(ctx.mid_factors().factors[i].coset);
  }
  Json h_coeffs = Json::array();
  for (const auto& c : code.h().coeffs()) h_coeffs.push_back(detail::elem_coeffs(c));
  return Json{
      {"p", code.p},
      {"d", code.d},
      {"n", code.n},
      {"t", code.t},
      {"alpha", code.alpha.prime_value()},
      {"g", g},
      {"h", {{"labels", h_labels}, {"cosets", h_cosets}, {"coeffs", h_coeffs}, {"field_modulus", ctx.mid().modulus()}}},
      {"orbit_choice", code.cf.orbit_choice},
      {"a", code.a.prime_coeffs()},
      {"params", {code.n, code.k, code.delta()}},
      {"bch", detail::window_json(code.bch)},
      {"beta_window", detail::window_json(code.beta_window)},
      {"flags", {{"linear", code.linear}, {"degenerate", code.degenerate}, {"isotropy_verified", code.isotropy_verified}}},
  };
}

/// Rebuilds the code from (p, d, n, alpha, g and h labels) and checks every
/// other field against the reconstruction.
inline FrobeniusCode code_from_json(const Json& j) {
  FrobeniusCode code = [&] {
    try {
      const auto p = j.at("p").get<std::uint32_t>();
      const auto d = j.at("d").get<unsigned>();
      const auto n = j.at("n").get<unsigned>();
      const auto alpha_value = j.at("alpha").get<std::uint32_t>();
      if (alpha_value == 0 || alpha_value >= p) throw DescriptorError("descriptor: alpha must be a nonzero element of F_p");
      check_compatible(n, p, d);
      const auto ctx = CyclotomicContext::get(n, p, d);
      const auto cf = canonical_from_labels(ctx, j.at("g").at("labels").get<std::vector<unsigned>>(),
                                            j.at("h").at("labels").get<std::vector<unsigned>>());
      return construct_code(cf, FieldElem::scalar(ctx->base(), alpha_value));
    } catch (const nlohmann::json::exception& e) {
      throw DescriptorError(std::string("descriptor: malformed: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw DescriptorError(std::string("descriptor: ") + e.what());
    }
  }();
  const Json want = to_json(code);
  for (const auto& [key, value] : want.items()) {
    if (key == "g" || key == "h" || key == "flags") {
      if (!j.contains(key)) throw DescriptorError("descriptor: missing field '" + key + "'");
      for (const auto& [sub, v] : value.items()) {
        detail::expect_equal(j.at(key), sub.c_str(), v);
      }
    } else {
      detail::expect_equal(j, key.c_str(), value);
    }
  }
  return code;
}

}  // namespace frobcode
