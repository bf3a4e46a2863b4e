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

#include "frobcode/serialize.hpp"

namespace frobcode {
namespace {

FrobeniusCode make(unsigned n, unsigned d, std::vector<unsigned> g, std::vector<unsigned> h) {
  return construct_code(canonical_from_labels(CyclotomicContext::get(n, 2, d), g, h));
}

void expect_same(const FrobeniusCode& a, const FrobeniusCode& b) {
  EXPECT_EQ(a.n, b.n);
  EXPECT_EQ(a.d, b.d);
  EXPECT_EQ(a.g(), b.g());
  EXPECT_EQ(a.h(), b.h());
  EXPECT_EQ(a.a, b.a);
  EXPECT_EQ(a.f, b.f);
  EXPECT_EQ(code_params(a), code_params(b));
}

TEST(Descriptor, Fields) {
  const Json j = to_json(make(17, 2, {0}, {2, 6}));
  EXPECT_EQ(j["p"], 2);
  EXPECT_EQ(j["n"], 17);
  EXPECT_EQ(j["t"], 4);
  EXPECT_EQ(j["params"], Json::parse("[17,1,7]"));
  EXPECT_EQ(j["g"]["labels"], Json::parse("[0]"));
  EXPECT_EQ(j["h"]["labels"], Json::parse("[2,6]"));
  EXPECT_EQ(j["h"]["coeffs"].size(), 9U);
  EXPECT_EQ(j["h"]["coeffs"][0].size(), 2U);
  EXPECT_EQ(j["bch"]["delta"], 7);
  EXPECT_EQ(j["flags"]["linear"], true);
  EXPECT_EQ(j["flags"]["isotropy_verified"], true);
}

// Text round trip for every nondegenerate code over F_2 at n < 100, thinned
// above n = 45 to keep the run short.
TEST(Descriptor, RoundTrip) {
  std::size_t count = 0;
  for (unsigned n = 3; n < 100; n += 2) {
    const LengthClass lc = classify_length(n, 2);
    if (!lc.good()) continue;
    for (unsigned d : {2U, 3U}) {
      if (!lc.compatible(d) || (d == 2 && lc.parity == Parity::Odd)) continue;
      std::size_t i = 0;
      for_each_canonical(n, 2, d, [&](const CanonicalFactorisation& cf) {
        if (n > 45 && i++ % 7 != 0) return;
        const FrobeniusCode code = construct_code(cf);
        const std::string text = to_json(code).dump();
        const FrobeniusCode back = code_from_json(Json::parse(text));
        expect_same(code, back);
        EXPECT_EQ(to_json(back).dump(), text);
        ++count;
      });
    }
  }
  EXPECT_GT(count, 300U);
}

TEST(Descriptor, OddCharacteristic) {
  for (const auto& cf : enumerate_canonical(41, 3, 2)) {
    const FrobeniusCode code = construct_code(cf);
    expect_same(code, code_from_json(to_json(code)));
  }
}

TEST(Descriptor, TamperingRejected) {
  const Json good = to_json(make(13, 2, {0}, {2}));
  for (const char* key : {"a", "params", "t", "orbit_choice", "bch"}) {
    Json j = good;
    if (j[key].is_array()) {
      j[key][0] = j[key][0].is_number() ? Json(j[key][0].get<int>() + 1) : Json(0);
    } else if (j[key].is_object()) {
      j[key]["delta"] = 99;
    } else {
      j[key] = j[key].get<int>() + 2;
    }
    EXPECT_THROW(code_from_json(j), DescriptorError) << key;
  }
  Json j = good;
  j["g"]["coeffs"][0] = 0;
  EXPECT_THROW(code_from_json(j), DescriptorError);
  j = good;
  j["flags"]["linear"] = false;
  EXPECT_THROW(code_from_json(j), DescriptorError);
  j = good;
  j["h"]["labels"] = Json::parse("[1]");
  EXPECT_THROW(code_from_json(j), DescriptorError);
}

TEST(Descriptor, MalformedRejected) {
  const Json good = to_json(make(5, 2, {0}, {1}));
  Json j = good;
  j.erase("a");
  EXPECT_THROW(code_from_json(j), DescriptorError);
  j = good;
  j["n"] = "five";
  EXPECT_THROW(code_from_json(j), DescriptorError);
  j = good;
  j["n"] = 7;
  EXPECT_THROW(code_from_json(j), DescriptorError);
  j = good;
  j["alpha"] = 0;
  EXPECT_THROW(code_from_json(j), DescriptorError);
  j = good;
  j["g"]["labels"] = Json::parse("[]");
  EXPECT_THROW(code_from_json(j), DescriptorError);
  EXPECT_THROW(code_from_json(Json::array()), DescriptorError);
}

}  // namespace
}  // namespace frobcode
