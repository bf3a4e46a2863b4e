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
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "frobcode/codegen.hpp"

namespace frobcode::tables {

/// One row of the published code tables over F_2, as printed.
struct PublishedRow {
  unsigned m;
  unsigned n;
  std::vector<unsigned> g;
  std::vector<unsigned> h;
  unsigned window_lo;
  unsigned window_hi;
  unsigned k;
  unsigned delta;
};

// d = 2.
inline const std::vector<PublishedRow>& linear_rows() {
  static const std::vector<PublishedRow> rows = {
      {1, 5, {0}, {2}, 2, 3, 1, 3},
      {3, 13, {0}, {2}, 5, 8, 1, 5},
      {2, 17, {0}, {2, 6}, 6, 11, 1, 7},
      {2, 17, {0, 1}, {6}, 6, 7, 9, 3},
      {5, 25, {0}, {1, 5}, 4, 6, 1, 4},
      {5, 25, {0, 5}, {2}, 2, 3, 5, 3},
      {7, 29, {0}, {1}, 4, 7, 1, 5},
      {9, 37, {0}, {1}, 9, 12, 1, 5},
      {2, 41, {0}, {1, 6}, 14, 19, 1, 7},
      {2, 41, {0, 1}, {3}, 11, 13, 21, 4},
      {13, 53, {0}, {2}, 18, 23, 1, 7},
      {15, 61, {0}, {2}, 28, 33, 1, 7},
      {3, 65, {0, 1}, {6, 7, 10, 22, 26}, 22, 28, 13, 8},
      {3, 65, {0, 11, 13}, {2, 6, 9, 10}, 29, 36, 17, 9},
      {3, 65, {0, 7, 11, 13}, {2, 6, 10}, 30, 35, 29, 7},
      {3, 65, {0, 5, 7, 11, 13}, {2, 6}, 31, 34, 41, 5},
      {3, 65, {0, 1, 3, 5, 7, 13}, {22}, 22, 23, 53, 3},
      {12, 97, {0}, {1, 7}, 33, 40, 1, 9},
      {12, 97, {0, 1}, {7}, 37, 40, 49, 5},
  };
  return rows;
}

// d = 3.
inline const std::vector<PublishedRow>& nonlinear_rows() {
  static const std::vector<PublishedRow> rows = {
      {1, 9, {0, 3}, {4}, 4, 5, 3, 3},
      {2, 13, {0}, {4}, 6, 7, 1, 3},
      {3, 19, {0}, {4}, 9, 10, 1, 3},
      {3, 27, {0, 9}, {4, 12}, 12, 15, 3, 5},
      {3, 27, {0, 9, 1}, {12}, 15, 15, 21, 2},
      {3, 27, {0, 9, 3}, {4}, 22, 23, 9, 3},
      {6, 37, {0}, {4}, 32, 34, 1, 4},
      {3, 57, {0, 19}, {4, 12, 20}, 25, 32, 3, 9},
      {3, 57, {0, 19, 5}, {4, 12}, 27, 30, 21, 5},
      {3, 57, {0, 19, 3, 5}, {4}, 28, 29, 39, 3},
      {10, 61, {0}, {4}, 29, 32, 1, 5},
      {2, 65, {0, 13}, {4, 12, 20, 28, 44}, 27, 38, 5, 13},
      {2, 65, {0, 13, 11}, {4, 12, 20, 28}, 28, 37, 17, 11},
      {2, 65, {0, 13, 1, 3, 5, 11}, {28}, 36, 37, 53, 3},
      {2, 65, {0, 13, 7, 11}, {4, 12, 20}, 30, 35, 29, 7},
      {2, 65, {0, 13, 5, 7, 11}, {4, 12}, 31, 34, 41, 5},
      {2, 65, {0, 13, 3, 5, 7, 11}, {4}, 32, 33, 53, 3},
      {11, 67, {0}, {4}, 31, 36, 1, 7},
      {9, 81, {0, 27, 3}, {1, 36}, 44, 46, 21, 4},
      {9, 81, {0, 27, 1, 3}, {36}, 45, 45, 75, 2},
      {9, 81, {0, 27, 9}, {4, 12}, 66, 69, 9, 5},
      {9, 81, {0, 27, 3, 9}, {4}, 76, 77, 27, 3},
      {8, 97, {0}, {2, 20}, 51, 55, 1, 6},
      {8, 97, {0, 1}, {20}, 77, 78, 49, 3},
      {8, 97, {0, 5}, {4}, 48, 49, 49, 3},
      {5, 99, {0, 3, 9, 15, 33, 1, 5}, {44}, 55, 55, 93, 2},
      {5, 99, {0, 3, 9, 15, 33, 1, 11}, {5}, 85, 86, 69, 3},
      {5, 99, {0, 3, 9, 15, 33, 5, 11}, {4}, 67, 68, 69, 3},
  };
  return rows;
}

/// Summary entry: parameters plus mark ('+' linear and nonlinear, '*'
/// nonlinear only, ' ' linear only).
struct SummaryEntry {
  unsigned n;
  unsigned k;
  unsigned delta;
  char mark;
};

inline const std::vector<SummaryEntry>& published_summary() {
  static const std::vector<SummaryEntry> rows = {
      {5, 1, 3, ' '},   {9, 3, 3, '*'},   {13, 1, 5, ' '},  {17, 1, 7, ' '},  {17, 9, 3, ' '},  {19, 1, 3, '*'},
      {25, 1, 4, ' '},  {25, 5, 3, ' '},  {27, 21, 2, '*'}, {27, 9, 3, '*'},  {29, 1, 5, ' '},  {37, 1, 5, ' '},
      {41, 1, 7, ' '},  {41, 21, 4, ' '}, {53, 1, 7, ' '},  {57, 21, 5, '*'}, {57, 39, 3, '*'}, {61, 1, 7, ' '},
      {65, 5, 13, '*'}, {65, 13, 8, ' '}, {65, 17, 9, ' '}, {65, 17, 11, '*'}, {65, 29, 7, '+'}, {65, 41, 5, '+'},
      {65, 53, 3, '+'}, {67, 1, 7, '*'},  {81, 21, 4, '*'}, {81, 75, 2, '*'}, {97, 1, 9, ' '},  {97, 49, 5, ' '},
      {99, 69, 3, '*'},
  };
  return rows;
}

/// A table row recomputed from its labels.
struct ComputedRow {
  unsigned m;
  unsigned n;
  unsigned d;
  std::vector<unsigned> g_labels;
  std::vector<unsigned> h_labels;
  BchWindow fixed;
  BchWindow best;
  unsigned k;
};

inline ComputedRow compute_row(const PublishedRow& row, unsigned d) {
  const auto ctx = CyclotomicContext::get(row.n, 2, d);
  const FrobeniusCode code = construct_code(canonical_from_labels(ctx, row.g, row.h));
  const LengthClass lc = classify_length(row.n, 2);
  // Table II names h factors by their least root exponent, Table III by
  // conjugate index.
  auto h = d == 2 ? code.cf.h_labels() : code.cf.h_conjugate_labels();
  return {lc.least_t(d) / d, row.n, d, code.cf.g_labels(), std::move(h), code.beta_window, code.bch, code.k};
}

inline std::string params(unsigned n, unsigned k, unsigned delta) {
  return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(delta) + "]]";
}

inline std::string labels(char prefix, const std::vector<unsigned>& ls) {
  std::string out;
  for (auto l : ls) out += std::string(1, prefix) + "_" + std::to_string(l);
  return out;
}

inline std::string render_code_table(unsigned d) {
  if (d != 2 && d != 3) throw std::invalid_argument("render_code_table: tables exist for d = 2 and d = 3");
  const auto& rows = d == 2 ? linear_rows() : nonlinear_rows();
  std::ostringstream out;
  std::vector<std::string> notes;
  out << (d == 2 ? "Table II: linear codes over F_2, length dividing 4^m+1\n"
                 : "Table III: nonlinear codes over F_2, length dividing 8^m+1\n");
  out << "m | g | h | roots of h | code\n";
  for (const auto& row : rows) {
    const ComputedRow c = compute_row(row, d);
    const unsigned n = c.n;
    const unsigned lo = c.fixed.ell, hi = (c.fixed.ell + c.fixed.run + n - 1) % n;
    const std::string code = params(n, c.k, c.fixed.delta);
    const std::string factors = labels('g', c.g_labels) + " | " + labels('h', c.h_labels);
    out << c.m << " | " << factors << " | beta^" << lo << "..beta^" << hi << " | " << code << "\n";
    if (c.m != row.m) {
      notes.push_back(code + " " + factors + ": m = " + std::to_string(c.m) + " since 2^" + std::to_string(c.m * d) +
                      " = -1 mod " + std::to_string(n) + "; published m = " + std::to_string(row.m));
    }
    if (lo != row.window_lo || hi != row.window_hi || c.k != row.k || c.fixed.delta != row.delta) {
      notes.push_back(code + " " + factors + ": published beta^" + std::to_string(row.window_lo) + "..beta^" +
                      std::to_string(row.window_hi) + " " + params(row.n, row.k, row.delta));
    }
    if (c.best.delta != c.fixed.delta) {
      notes.push_back(code + " " + factors + ": BCH distance " + std::to_string(c.best.delta) +
                      " for another primitive root, roots beta^(" + std::to_string(c.best.ell) + "+" +
                      std::to_string(c.best.s) + "j) for j = 0.." + std::to_string(c.best.run - 1));
    }
  }
  if (d == 3) {
    std::set<std::tuple<unsigned, unsigned, unsigned>> summary, seen;
    for (const auto& e : published_summary()) summary.insert({e.n, e.k, e.delta});
    for (const auto& row : rows) {
      const auto key = std::make_tuple(row.n, row.k, row.delta);
      if (summary.count(key) == 0 && seen.insert(key).second) {
        notes.push_back(params(row.n, row.k, row.delta) + ": not in the published summary table");
      }
    }
  }
  if (!notes.empty()) {
    out << "notes:\n";
    for (const auto& n : notes) out << "- " << n << "\n";
  }
  return out.str();
}

/// Parameters per length from Tables II and III with the published marks
/// ('+' in both, '*' only d = 3), then the differences from the published
/// summary.
inline std::string render_summary_table() {
  std::map<unsigned, std::map<std::pair<unsigned, unsigned>, unsigned>> found;  // bit 1: d=2, bit 2: d=3
  for (unsigned d : {2U, 3U}) {
    for (const auto& row : d == 2 ? linear_rows() : nonlinear_rows()) {
      const ComputedRow c = compute_row(row, d);
      found[c.n][{c.k, c.fixed.delta}] |= d == 2 ? 1U : 2U;
    }
  }
  auto mark_of = [](unsigned bits) { return bits == 3 ? '+' : bits == 2 ? '*' : ' '; };
  std::ostringstream out;
  out << "Table I: codes over F_2 from Tables II and III (+ linear and nonlinear, * nonlinear only)\n";
  out << "length | parameters\n";
  std::set<std::tuple<unsigned, unsigned, unsigned, char>> derived;
  for (const auto& [n, entries] : found) {
    out << n << " |";
    bool first = true;
    for (const auto& [kd, bits] : entries) {
      out << (first ? " " : ", ") << params(n, kd.first, kd.second);
      if (mark_of(bits) != ' ') out << mark_of(bits);
      first = false;
      derived.insert({n, kd.first, kd.second, mark_of(bits)});
    }
    out << "\n";
  }
  std::set<std::tuple<unsigned, unsigned, unsigned, char>> published;
  for (const auto& e : published_summary()) published.insert({e.n, e.k, e.delta, e.mark});
  std::vector<std::string> dev;
  auto describe = [](const std::tuple<unsigned, unsigned, unsigned, char>& e) {
    auto s = params(std::get<0>(e), std::get<1>(e), std::get<2>(e));
    if (std::get<3>(e) != ' ') s += std::get<3>(e);
    return s;
  };
  for (const auto& e : derived) {
    if (published.count(e) == 0) dev.push_back(describe(e) + ": missing from the published summary");
  }
  for (const auto& e : published) {
    if (derived.count(e) == 0) dev.push_back(describe(e) + ": published but not derived");
  }
  if (!dev.empty()) {
    out << "deviations:\n";
    for (const auto& d : dev) out << "- " << d << "\n";
  }
  return out.str();
}

/// "I", "II" or "III".
inline std::string render(const std::string& which) {
  if (which == "I") return render_summary_table();
  if (which == "II") return render_code_table(2);
  if (which == "III") return render_code_table(3);
  throw std::invalid_argument("unknown table '" + which + "' (expected I, II or III)");
}

}  // namespace frobcode::tables
