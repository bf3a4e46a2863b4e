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

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "frobcode/frobcode.hpp"

namespace {

using namespace frobcode;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw Usage("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

FrobeniusCode load_code(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_all(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Usage(std::string("descriptor is not JSON: ") + e.what());
  }
  return code_from_json(j);
}

std::string labels(char prefix, const std::vector<unsigned>& ls) {
  std::string out;
  for (auto l : ls) out += std::string(1, prefix) + "_" + std::to_string(l);
  return out.empty() ? "1" : out;
}

std::string summary_line(const FrobeniusCode& c) {
  std::ostringstream out;
  out << tables::params(c.n, c.k, c.delta()) << " d=" << c.d << " " << labels('g', c.cf.g_labels()) << " | "
      << labels('h', c.cf.h_labels());
  if (c.beta_window.delta != c.delta()) out << " beta-delta=" << c.beta_window.delta;
  if (c.linear) out << " linear";
  if (c.degenerate) out << " degenerate";
  return out.str();
}

void print_json(const Json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; }

void print_text(const Json& j) {
  for (const auto& [k, v] : j.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

// enumerate

struct EnumerateArgs {
  std::uint32_t p = 2;
  unsigned n = 0;
  unsigned d = 0;
  bool degenerate = false;
  std::uint32_t alpha = 0;
};

int cmd_enumerate(const EnumerateArgs& a, const std::string& format) {
  const LengthClass lc = classify_length(a.n, a.p);
  std::vector<unsigned> ds;
  if (a.d != 0) {
    check_compatible(a.n, a.p, a.d);
    ds.push_back(a.d);
  } else {
    if (!lc.good()) check_compatible(a.n, a.p, 2);
    ds = lc.d_options;
  }
  for (unsigned d : ds) {
    const auto ctx = CyclotomicContext::get(a.n, a.p, d);
    const FieldElem alpha = a.alpha == 0 ? default_alpha(a.p, d) : FieldElem::scalar(ctx->base(), a.alpha);
    for_each_canonical(
        a.n, a.p, d,
        [&](const CanonicalFactorisation& cf) {
          const FrobeniusCode code = construct_code(cf, alpha);
          if (format == "json") {
            print_json(to_json(code), false);
          } else {
            std::cout << summary_line(code) << "\n";
          }
        },
        EnumerateOptions{a.degenerate});
  }
  return kExitPass;
}

// construct

struct ConstructArgs {
  std::uint32_t p = 2;
  unsigned n = 0;
  unsigned d = 2;
  std::vector<unsigned> g;
  std::vector<unsigned> h;
  std::uint32_t alpha = 0;
};

int cmd_construct(const ConstructArgs& a, const std::string& format) {
  check_compatible(a.n, a.p, a.d);
  const auto ctx = CyclotomicContext::get(a.n, a.p, a.d);
  const auto cf = canonical_from_labels(ctx, a.g, a.h);
  const FieldElem alpha = a.alpha == 0 ? default_alpha(a.p, a.d) : FieldElem::scalar(ctx->base(), a.alpha);
  const FrobeniusCode code = construct_code(a.n, a.p, a.d, cf, alpha);
  if (format == "json") {
    print_json(to_json(code), true);
  } else {
    std::cout << summary_line(code) << "\n";
    std::cout << "a = " << code.a.to_string() << "\n";
    std::cout << "h = " << code.h().to_string() << "\n";
  }
  return kExitPass;
}

// verify

struct VerifyArgs {
  std::string code = "-";
  std::uint64_t cap = kDefaultCentraliserCap;
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
};

int cmd_verify(const VerifyArgs& a, const std::string& format) {
  const FrobeniusCode code = load_code(a.code);
  const IsotropicSpace s = IsotropicSpace::from_code(code);
  const IsotropyReport iso = check_isotropy(s);
  Json rep;
  rep["params"] = {code.n, code.k, code.delta()};
  rep["isotropy"] = iso.ok();
  rep["isotropy_identity"] = iso.identity;
  if (iso.exhaustive_checked) rep["exhaustive_pairwise"] = iso.exhaustive;
  rep["uniquely_cyclic"] = is_uniquely_cyclic(s);
  bool ok = iso.ok();
  try {
    const CentraliserStats st = centraliser_stats(s, a.cap);
    rep["centraliser_size"] = st.size.str();
    rep["purity_checked_up_to"] = st.min_weight_nonzero - 1;
    rep["exact_distance"] = st.min_weight_outside_s;
    rep["delta_pure"] = st.min_weight_nonzero >= code.delta();
    ok = ok && st.min_weight_nonzero >= code.delta();
  } catch (const CapExceeded& e) {
    rep["purity_checked_up_to"] = nullptr;
    rep["centraliser"] = std::string("not swept: ") + e.what();
  }
  if (a.samples > 0) {
    const SampledBound b = centraliser_sample_upper_bound(s, a.samples, a.seed);
    rep["sampled_distance_upper_bound"] = {{"bound", b.upper_bound}, {"samples", b.samples}, {"seed", a.seed}};
  }
  if (format == "json") {
    print_json(rep, true);
  } else {
    print_text(rep);
  }
  return ok ? kExitPass : kExitFail;
}

// decode-sim

struct DecodeArgs {
  std::string code = "-";
  std::uint64_t trials = 1000;
  int weight = -1;
  std::uint64_t seed = 1;
  bool timing = true;
};

int cmd_decode_sim(const DecodeArgs& a, const std::string& format) {
  const FrobeniusCode code = load_code(a.code);
  const unsigned w = a.weight < 0 ? code.tau() : static_cast<unsigned>(a.weight);
  if (w > code.n) throw Usage("weight exceeds n");
  std::atomic<std::uint64_t> exact{0}, failures{0}, wrong{0}, consistent{0}, nanos{0};
  detail::parallel_for(0, a.trials, [&](std::uint64_t i) {
    // One stream per trial keeps the output independent of thread count.
    std::seed_seq seq{static_cast<std::uint32_t>(a.seed), static_cast<std::uint32_t>(a.seed >> 32),
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
    std::mt19937_64 rng(seq);
    const ErrorPair e = random_error(code.n, code.p, w, rng);
    const auto t0 = std::chrono::steady_clock::now();
    const DecodeResult r = correct(e, code);
    nanos += static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0).count());
    switch (classify_trial(e, r)) {
      case TrialOutcome::Exact:
        ++exact;
        break;
      case TrialOutcome::Failure:
        ++failures;
        break;
      case TrialOutcome::Miscorrected: {
        ++wrong;
        // Consistent: the returned error differs from the true one by a
        // centraliser element, so it reproduces the syndrome.
        ErrorPair diff = e;
        for (unsigned j = 0; j < code.n; ++j) {
          diff.u[j] = (e.u[j] + code.p - r.error->u[j]) % code.p;
          diff.v[j] = (e.v[j] + code.p - r.error->v[j]) % code.p;
        }
        if (syndrome_oracle(diff, code).is_zero()) ++consistent;
        break;
      }
    }
  });
  Json rep;
  rep["params"] = {code.n, code.k, code.delta()};
  rep["tau"] = code.tau();
  rep["weight"] = w;
  rep["seed"] = a.seed;
  rep["trials"] = a.trials;
  rep["successes"] = exact.load();
  rep["failures"] = failures.load();
  rep["miscorrections"] = wrong.load();
  rep["miscorrections_syndrome_consistent"] = consistent.load();
  if (a.timing) rep["mean_time_us"] = a.trials == 0 ? 0.0 : static_cast<double>(nanos.load()) / 1000.0 / a.trials;
  if (format == "json") {
    print_json(rep, true);
  } else {
    print_text(rep);
  }
  // Within the radius every trial must be exact; beyond it, a returned
  // error must at least reproduce the syndrome.
  if (w <= code.tau()) return exact.load() == a.trials ? kExitPass : kExitFail;
  return consistent.load() == wrong.load() ? kExitPass : kExitFail;
}

// density

struct DensityArgs {
  std::uint32_t p = 2;
  std::uint64_t max = 100000;
  std::vector<std::uint64_t> checkpoints;
  bool qr = false;
};

int cmd_density(const DensityArgs& a, const std::string& format) {
  std::vector<std::uint64_t> cps = a.checkpoints;
  if (cps.empty()) {
    for (std::uint64_t x = 10; x <= a.max; x *= 10) cps.push_back(x);
  }
  const DensityReport rep = density(a.p, a.max, cps);
  if (format == "json") {
    Json j{{"p", a.p}, {"max", a.max}, {"checkpoints", Json::array()}};
    for (const auto& c : rep.checkpoints) j["checkpoints"].push_back({{"x", c.x}, {"total", c.total}, {"even", c.even}, {"odd", c.odd}});
    print_json(j, true);
  } else {
    std::cout << "x,total,even,odd\n";
    for (const auto& c : rep.checkpoints) std::cout << c.x << "," << c.total << "," << c.even << "," << c.odd << "\n";
  }
  if (a.qr) {
    const QrCheck q = qr_lower_bound_check(a.p, a.max);
    std::cerr << "non-residue primes checked: " << q.primes_checked << ", " << (q.ok() ? "all counted" : "MISSING") << "\n";
    if (!q.ok()) return kExitFail;
  }
  return kExitPass;
}

// tables

struct TablesArgs {
  std::string which;
  std::string golden;
};

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

int cmd_tables(const TablesArgs& a) {
  const std::string text = tables::render(a.which);
  std::cout << text;
  if (a.golden.empty()) return kExitPass;
  const std::string file = a.golden + "/table" + (a.which == "I" ? "1" : a.which == "II" ? "2" : "3") + ".txt";
  const auto want = split_lines(read_all(file));
  const auto got = split_lines(text);
  int bad = 0;
  for (std::size_t i = 0; i < std::max(want.size(), got.size()); ++i) {
    const std::string w = i < want.size() ? want[i] : "<missing>";
    const std::string g = i < got.size() ? got[i] : "<missing>";
    if (w != g) {
      std::cerr << "row " << i + 1 << ":\n  golden:   " << w << "\n  computed: " << g << "\n";
      ++bad;
    }
  }
  std::cerr << (bad == 0 ? "matches " + file : std::to_string(bad) + " rows differ from " + file) << "\n";
  return bad == 0 ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic quantum stabiliser codes of length dividing p^t+1"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "List every code of length n, one per line");
  en->add_option("--p", ea.p, "Characteristic")->capture_default_str();
  en->add_option("--n", ea.n, "Length")->required();
  en->add_option("--d", ea.d, "Extension degree (default: all usable)");
  en->add_flag("--degenerate", ea.degenerate, "Include h = 1");
  en->add_option("--alpha", ea.alpha, "Nonzero alpha in F_p (default per d)");

  ConstructArgs ca;
  auto* co = app.add_subcommand("construct", "Build one code from its g and h labels");
  co->set_help_flag("--help", "Print this help message and exit");
  co->add_option("--p", ca.p, "Characteristic")->capture_default_str();
  co->add_option("--n", ca.n, "Length")->required();
  co->add_option("--d", ca.d, "Extension degree")->capture_default_str();
  co->add_option("--g", ca.g, "g labels, e.g. 0,1")->delimiter(',')->required();
  co->add_option("--h", ca.h, "h labels, e.g. 6")->delimiter(',');
  co->add_option("--alpha", ca.alpha, "Nonzero alpha in F_p (default per d)");

  VerifyArgs va;
  auto* ve = app.add_subcommand("verify", "Check isotropy and sweep the centraliser");
  ve->add_option("--code", va.code, "Descriptor file, - for stdin")->capture_default_str();
  ve->add_option("--cap", va.cap, "Largest centraliser to sweep")->capture_default_str();
  ve->add_option("--samples", va.samples, "Random centraliser samples for an upper bound");
  ve->add_option("--seed", va.seed, "Sampler seed")->capture_default_str();

  DecodeArgs da;
  bool no_timing = false;
  auto* de = app.add_subcommand("decode-sim", "Decode random errors of fixed joint weight");
  de->add_option("--code", da.code, "Descriptor file, - for stdin")->capture_default_str();
  de->add_option("--trials", da.trials, "Number of trials")->capture_default_str();
  de->add_option("--weight", da.weight, "Joint weight (default tau)");
  de->add_option("--seed", da.seed, "PRNG seed")->capture_default_str();
  de->add_flag("--no-timing", no_timing, "Omit mean_time_us for byte-stable output");

  DensityArgs ya;
  auto* dn = app.add_subcommand("density", "Count good lengths up to max as CSV");
  dn->add_option("--p", ya.p, "Characteristic")->capture_default_str();
  dn->add_option("--max", ya.max, "Largest length")->capture_default_str();
  dn->add_option("--checkpoints", ya.checkpoints, "Lengths to report (default powers of 10)")->delimiter(',');
  dn->add_flag("--qr-check", ya.qr, "Also check every non-residue prime is counted");

  TablesArgs ta;
  auto* tb = app.add_subcommand("tables", "Regenerate table I, II or III");
  tb->add_option("which", ta.which, "I, II or III")->required()->check(CLI::IsMember({"I", "II", "III"}));
  tb->add_option("--golden", ta.golden, "Directory holding table{1,2,3}.txt to diff against");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }
  da.timing = !no_timing;

  try {
    if (*en) return cmd_enumerate(ea, format);
    if (*co) return cmd_construct(ca, format);
    if (*ve) return cmd_verify(va, format);
    if (*de) return cmd_decode_sim(da, format);
    if (*dn) return cmd_density(ya, format);
    if (*tb) return cmd_tables(ta);
  } catch (const DescriptorError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
