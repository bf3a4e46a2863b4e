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

#include <fstream>
#include <iterator>
#include <set>

#include "frobcode/tables.hpp"

namespace frobcode {
namespace {

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(FROBCODE_GOLDEN_DIR) + "/" + name);
  EXPECT_TRUE(in.good()) << name;
  return std::string(std::istreambuf_iterator<char>(in), {});
}

TEST(Tables, MatchGoldenBytes) {
  EXPECT_EQ(tables::render("II"), read_golden("table2.txt"));
  EXPECT_EQ(tables::render("III"), read_golden("table3.txt"));
  EXPECT_EQ(tables::render("I"), read_golden("table1.txt"));
  EXPECT_THROW(tables::render("IV"), std::invalid_argument);
}

TEST(Tables, EveryPublishedRowIsEnumerated) {
  for (unsigned d : {2U, 3U}) {
    for (const auto& row : d == 2 ? tables::linear_rows() : tables::nonlinear_rows()) {
      const auto ctx = CyclotomicContext::get(row.n, 2, d);
      const auto want = canonical_from_labels(ctx, row.g, row.h);
      bool found = false;
      for_each_canonical(row.n, 2, d, [&](const CanonicalFactorisation& cf) {
        if (cf.g == want.g && cf.h == want.h) found = true;
      });
      EXPECT_TRUE(found) << "n=" << row.n;
      const FrobeniusCode code = construct_code(want);
      EXPECT_EQ(code.k, row.k);
      EXPECT_EQ(code.beta_window.delta, row.delta) << "n=" << row.n;
      EXPECT_EQ(code.beta_window.ell, row.window_lo);
      EXPECT_EQ((code.beta_window.ell + code.beta_window.run - 1) % row.n, row.window_hi);
      if (row.n == 65 && row.k == 13) {
        EXPECT_EQ(code.delta(), 9U);
      } else {
        EXPECT_EQ(code.delta(), row.delta) << "n=" << row.n << " k=" << row.k;
      }
    }
  }
}

TEST(Tables, OnlyLength41MIsOff) {
  for (unsigned d : {2U, 3U}) {
    for (const auto& row : d == 2 ? tables::linear_rows() : tables::nonlinear_rows()) {
      const tables::ComputedRow c = tables::compute_row(row, d);
      if (row.n == 41) {
        EXPECT_EQ(c.m, 5U);
        EXPECT_EQ(row.m, 2U);
      } else {
        EXPECT_EQ(c.m, row.m) << "n=" << row.n;
      }
    }
  }
}

TEST(Tables, PrintedLabelsAreThePublishedOnes) {
  for (unsigned d : {2U, 3U}) {
    for (const auto& row : d == 2 ? tables::linear_rows() : tables::nonlinear_rows()) {
      const tables::ComputedRow c = tables::compute_row(row, d);
      EXPECT_EQ(c.g_labels, row.g) << "n=" << row.n;
      EXPECT_EQ(c.h_labels, row.h) << "n=" << row.n;
    }
  }
}

}  // namespace
}  // namespace frobcode
