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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "frobcode/frobcode.hpp"

using namespace frobcode;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const char* name) { return read_file(std::string(FROBCODE_GOLDEN_DIR) + "/" + name); }

FrobeniusCode make(unsigned n, unsigned d, std::vector<unsigned> g, std::vector<unsigned> h) {
  return construct_code(canonical_from_labels(CyclotomicContext::get(n, 2, d), g, h));
}

// Every code over F_2 with n < 100, all usable extension degrees.
template <class Visit>
void for_each_code_below_100(Visit&& visit) {
  for (unsigned n = 3; n < 100; n += 2) {
    const LengthClass lc = classify_length(n, 2);
    if (!lc.good()) continue;
    for (unsigned d : lc.d_options) {
      for_each_canonical(n, 2, d, [&](const CanonicalFactorisation& cf) { visit(construct_code(cf)); });
    }
  }
}

std::string name(const FrobeniusCode& c) { return tables::params(c.n, c.k, c.delta()); }

std::string first_line_with(const std::string& text, const std::string& needle) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l.find(needle) != std::string::npos) return l;
  }
  return {};
}

Outcome table_match(const char* which, const char* file, const char* first, const char* last) {
  const std::string got = tables::render(which), want = golden(file);
  if (want.empty()) return {false, std::string("golden ") + file + " missing"};
  if (got != want) return {false, "differs from the golden encoding"};
  const bool ends = !first_line_with(got, first).empty() && !first_line_with(got, last).empty();
  std::size_t rows = 0;
  for (char c : got) rows += c == '\n';
  return {ends, "byte-identical, " + std::to_string(rows) + " lines, " + first + " .. " + last};
}

Outcome criterion1() { return table_match("II", "table2.txt", "[[5,1,3]]", "[[97,49,5]]"); }

Outcome criterion2() {
  Outcome o = table_match("III", "table3.txt", "[[9,3,3]]", "[[99,69,3]]");
  const std::string summary = tables::render("I");
  const bool summary_ok = summary == golden("table1.txt");
  const bool listed = summary.find("deviations:") != std::string::npos &&
                      tables::render("III").find("not in the published summary") != std::string::npos;
  o.pass = o.pass && summary_ok && listed;
  o.detail += summary_ok ? "; Table I matches" : "; Table I differs";
  o.detail += listed ? ", discrepancies listed" : ", discrepancies not listed";
  return o;
}

Outcome criterion3() {
  const std::vector<unsigned> list = {9, 11, 19, 27, 33, 43, 57, 59, 67, 81, 83, 99};
  std::size_t candidates = 0;
  for (unsigned n : list) {
    if (linear_exists(n, 2)) return {false, "linear_exists(" + std::to_string(n) + ") is true"};
    bool refused = false;
    try {
      enumerate_canonical(n, 2, 2);
    } catch (const std::invalid_argument&) {
      refused = true;
    }
    if (!refused) return {false, "d=2 enumeration accepted n=" + std::to_string(n)};
    // Constructively: no raw F_4 candidate yields an isotropic space.
    bool any = false;
    for_each_raw_candidate(CyclotomicContext::get(n, 2, 2), [&](const CanonicalFactorisation& cf) {
      if (cf.degenerate()) return;
      ++candidates;
      const auto a = crt_a(cf, FieldElem::one(FieldSpec::get(2, 1)));
      if (a && isotropy_identity(cf.g, cyclic_mul(*a, cf.g, n), n)) any = true;
    });
    if (any) return {false, "isotropic d=2 candidate at n=" + std::to_string(n)};
  }
  return {true, "12 lengths, " + std::to_string(candidates) + " raw d=2 candidates, none isotropic"};
}

Outcome criterion4() {
  const DensityReport r = density(2, 100000, {10, 100, 1000, 10000});
  const std::vector<std::array<std::uint64_t, 4>> want = {
      {10, 2, 1, 1}, {100, 23, 11, 12}, {1000, 189, 101, 88}, {10000, 1521, 790, 731}, {100000, 12741, 6641, 6100}};
  if (r.checkpoints.size() != want.size()) return {false, "wrong checkpoint count"};
  std::string detail;
  bool ok = true;
  for (std::size_t i = 0; i < want.size(); ++i) {
    const auto& c = r.checkpoints[i];
    ok = ok && std::array<std::uint64_t, 4>{c.x, c.total, c.even, c.odd} == want[i];
    detail += (i ? " " : "") + std::to_string(c.x) + ":" + std::to_string(c.total) + "(" + std::to_string(c.even) + "/" +
              std::to_string(c.odd) + ")";
  }
  return {ok, detail};
}

Outcome criterion5() {
  std::size_t codes = 0, exhaustive = 0, bad = 0;
  for_each_code_below_100([&](const FrobeniusCode& c) {
    ++codes;
    const auto s = IsotropicSpace::from_code(c);
    if (c.n <= 12) {
      const IsotropyReport r = check_isotropy(s);
      exhaustive += r.exhaustive_checked ? 1 : 0;
      if (!r.ok() || !r.exhaustive_checked) ++bad;
    } else if (!isotropy_identity(s)) {
      ++bad;
    }
  });
  return {bad == 0 && codes > 0, std::to_string(codes) + " codes, " + std::to_string(exhaustive) +
                                     " checked pairwise (n <= 12), " + std::to_string(bad) + " failures"};
}

Outcome criterion6() {
  const auto code = make(5, 2, {0}, {2});
  const CentraliserStats st = centraliser_stats(IsotropicSpace::from_code(code));
  const bool ok = st.size == 64 && st.min_weight_outside_s == 3 && code.k == 1;
  return {ok, "|C(S)| = " + st.size.str() + ", min weight outside S = " + std::to_string(st.min_weight_outside_s)};
}

struct Tally {
  std::uint64_t trials = 0, exact = 0, failures = 0, wrong = 0, inconsistent = 0;
};

void record(Tally& t, const ErrorPair& e, const FrobeniusCode& code) {
  const DecodeResult r = correct(e, code);
  ++t.trials;
  switch (classify_trial(e, r)) {
    case TrialOutcome::Exact: ++t.exact; break;
    case TrialOutcome::Failure: ++t.failures; break;
    case TrialOutcome::Miscorrected:
      ++t.wrong;
      if (!(syndrome_oracle(*r.error, code) == syndrome_oracle(e, code)) || joint_weight(*r.error) > code.tau()) {
        ++t.inconsistent;
      }
      break;
  }
}

Outcome criterion7() {
  std::string detail;
  bool ok = true;
  const auto c5 = make(5, 2, {0}, {2});
  const auto c13 = make(13, 2, {0}, {2});
  const auto c17 = make(17, 2, {0}, {2, 6});
  const auto c65 = make(65, 2, {0, 7, 11, 13}, {2, 6, 10});

  auto exhaustive = [&](const FrobeniusCode& code, unsigned max_w) {
    Tally t;
    for (unsigned w = 1; w <= max_w; ++w) {
      for_each_error_of_weight(code.n, 2, w, [&](const ErrorPair& e) { record(t, e, code); });
    }
    ok = ok && t.exact == t.trials;
    detail += name(code) + " exhaustive w<=" + std::to_string(max_w) + ": " + std::to_string(t.exact) + "/" +
              std::to_string(t.trials) + "; ";
  };
  auto sampled = [&](const FrobeniusCode& code, std::uint64_t seed) {
    Tally t;
    for (std::uint64_t i = 0; i < 10000; ++i) {
      std::seed_seq ss{seed, i};
      std::mt19937_64 rng(ss);
      const unsigned w = 1 + static_cast<unsigned>(rng() % code.tau());
      record(t, random_error(code.n, 2, w, rng), code);
    }
    ok = ok && t.exact == t.trials;
    detail += name(code) + " random w<=" + std::to_string(code.tau()) + ": " + std::to_string(t.exact) + "/" +
              std::to_string(t.trials) + "; ";
  };
  exhaustive(c5, 1);
  exhaustive(c13, 2);
  sampled(c17, 17);
  sampled(c65, 65);

  // Weight tau + 1: failures and syndrome-consistent miscorrections only.
  Tally neg;
  for_each_error_of_weight(5, 2, 2, [&](const ErrorPair& e) { record(neg, e, c5); });
  for (const auto* code : {&c13, &c17, &c65}) {
    for (std::uint64_t i = 0; i < 1000; ++i) {
      std::seed_seq ss{std::uint64_t{code->n}, i, std::uint64_t{99}};
      std::mt19937_64 rng(ss);
      record(neg, random_error(code->n, 2, code->tau() + 1, rng), *code);
    }
  }
  ok = ok && neg.inconsistent == 0 && neg.exact == 0;
  detail += "w=tau+1: " + std::to_string(neg.trials) + " trials, " + std::to_string(neg.failures) + " failures, " +
            std::to_string(neg.wrong) + " syndrome-consistent miscorrections, " + std::to_string(neg.inconsistent) +
            " inconsistent";
  return {ok, detail};
}

Outcome criterion8() {
  std::size_t codes = 0, bad = 0;
  for_each_code_below_100([&](const FrobeniusCode& c) {
    ++codes;
    const unsigned n = c.n;
    const Poly am = crt_a_mid(c.cf, c.alpha);
    const bool sigma = frobenius_poly(am, 1) == am && am == lift(c.a, c.ctx().mid());
    const bool one_mod_g = ((c.a - Poly::one(c.ctx().base())) % c.g()).is_zero();
    const bool degree = c.k + c.d * static_cast<unsigned>(std::max(c.h().degree(), 0)) == n;
    const bool recip = ((reciprocal_transform(c.a, n) - c.a) % c.f_tilde).is_zero();
    if (!(sigma && one_mod_g && degree && recip)) ++bad;
  });
  return {bad == 0, std::to_string(codes) + " codes, " + std::to_string(bad) + " violations"};
}

Outcome criterion9() {
  std::size_t codes = 0, bad = 0;
  unsigned largest = 0;
  auto check = [&](const FrobeniusCode& c) {
    const BigInt size = boost::multiprecision::pow(BigInt(c.p), c.n + c.k);
    if (size > (BigInt(1) << 20)) return;
    ++codes;
    largest = std::max(largest, c.n + c.k);
    const CentraliserStats st = centraliser_stats(IsotropicSpace::from_code(c), std::uint64_t{1} << 20);
    if (st.min_weight_nonzero < c.delta()) ++bad;
  };
  // g always contains X - 1, so n + 1 bounds the exponent from below.
  for (std::uint32_t p : {2U, 3U}) {
    const unsigned max_exp = p == 2 ? 20 : 12;
    for (unsigned n = 3; n + 1 <= max_exp; ++n) {
      if (n % p == 0) continue;
      const LengthClass lc = classify_length(n, p);
      if (!lc.good()) continue;
      for (unsigned d : lc.d_options) {
        for_each_canonical(n, p, d, [&](const CanonicalFactorisation& cf) {
          if (cf.g.degree() + static_cast<int>(n) <= static_cast<int>(max_exp)) check(construct_code(cf));
        });
      }
    }
  }
  return {bad == 0 && codes > 0, std::to_string(codes) + " codes (p = 2, 3), " + std::to_string(bad) +
                                     " with a nonzero centraliser element below delta"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all = {
      {1, "Table II reproduction", 10, criterion1},
      {2, "Table III reproduction", 30, criterion2},
      {3, "odd-parity impossibility", 1, criterion3},
      {4, "density table", 60, criterion4},
      {5, "isotropy suite", 60, criterion5},
      {6, "exact distance of [[5,1,3]]", 1, criterion6},
      {7, "decoding round-trip", 300, criterion7},
      {8, "construction invariants", 30, criterion8},
      {9, "delta-purity spot check", 300, criterion9},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.limit_s;
    const bool pass = o.pass && in_time;
    failed += pass ? 0 : 1;
    std::printf("criterion %d: %s  %s (%.2f s, limit %.0f s%s)  %s\n", c.id, pass ? "PASS" : "FAIL", c.name, secs, c.limit_s,
                in_time ? "" : ", over time", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
