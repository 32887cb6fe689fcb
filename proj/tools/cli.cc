// Copyright 2026 The demipath Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "demipath/distance_matrix.h"
#include "demipath/generators.h"
#include "demipath/instance_io.h"
#include "demipath/matrix_checks.h"
#include "demipath/oracle.h"
#include "demipath/path_solver.h"
#include "demipath/pyramidal_tables.h"
#include "demipath/rng.h"
#include "demipath/schematic.h"

namespace demipath {

namespace {

// Raised for bad arguments that CLI11 cannot see (ranges, s == t, ...).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double ToleranceFromEnvironment() {
  const char* raw = std::getenv("DEMIDENKO_TOLERANCE");
  if (raw == nullptr || *raw == '\0') return kDefaultTolerance;
  char* end = nullptr;
  const double value = std::strtod(raw, &end);
  if (*end != '\0' || !(value >= 0.0) || !std::isfinite(value)) {
    throw UsageError(std::string("DEMIDENKO_TOLERANCE is not a non-negative "
                                 "number: ") + raw);
  }
  return value;
}

// A file path, or a fixture name when no such file exists.
Instance LoadInstance(const std::string& source) {
  if (!std::filesystem::exists(source)) {
    if (auto points = FixturePoints(source)) {
      return {EuclideanFromPoints(*points), std::move(points)};
    }
  }
  return ReadInstanceFile(source);
}

std::string JoinPath(const CityPath& path) {
  std::string s;
  for (City c : path.cities) s += " " + std::to_string(c);
  return s;
}

void WritePlot(const std::string& file, const CityPath& path,
               const std::string& title) {
  std::ofstream svg(file);
  if (!svg) throw UsageError("cannot write plot file " + file);
  WriteSchematicSvg(svg, path, title);
}

std::string DescribeCheck(const CheckReport& report) {
  if (report.holds) return "yes";
  std::ostringstream s;
  s << "no witness " << report.WitnessString() << " inequality "
    << InequalityName(report.violated) << " slack "
    << FormatNumber(report.slack);
  return s.str();
}

// "A..B" or "a,b,c".
std::vector<int> ParseSizes(const std::string& text) {
  std::vector<int> sizes;
  try {
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
      const int lo = std::stoi(text.substr(0, dots));
      const int hi = std::stoi(text.substr(dots + 2));
      for (int n = lo; n <= hi; ++n) sizes.push_back(n);
    } else {
      std::stringstream in(text);
      std::string item;
      while (std::getline(in, item, ',')) sizes.push_back(std::stoi(item));
    }
  } catch (const std::exception&) {
    throw UsageError("cannot parse sizes '" + text + "'");
  }
  if (sizes.empty()) throw UsageError("empty size list '" + text + "'");
  return sizes;
}

std::vector<Family> ParseFamilies(const std::string& text) {
  if (text == "all") {
    return {Family::kBanded, Family::kConvexPolygon, Family::kTreeKalmanson,
            Family::kPerturbed};
  }
  const auto family = ParseFamily(text);
  if (!family) throw UsageError("unknown family '" + text + "'");
  return {*family};
}

std::uint64_t InstanceSeed(std::uint64_t seed, int n, int index) {
  return SplitMix64(seed ^ (static_cast<std::uint64_t>(n) << 40) ^
                    static_cast<std::uint64_t>(index))
      .Next();
}

void CheckEndpoints(int n, City s, City t) {
  if (s < 1 || s > n || t < 1 || t > n) {
    throw UsageError("endpoints must lie in 1.." + std::to_string(n));
  }
  if (s == t) throw UsageError("--start and --end must differ");
}

struct SolveArgs {
  std::string instance;
  int start = 0;
  int end = 0;
  bool require_demidenko = false;
  bool cross_check = false;
  std::string plot;
};

int RunSolve(const SolveArgs& a, double tolerance, std::ostream& out,
             std::ostream& err) {
  const Instance instance = LoadInstance(a.instance);
  const DistanceMatrix& m = instance.matrix;
  Validate(m, tolerance);
  CheckEndpoints(m.size(), a.start, a.end);
  const CheckReport demidenko = IsDemidenko(m, tolerance);
  if (!demidenko.holds) {
    if (a.require_demidenko) {
      err << "error: not a Demidenko matrix, " << DescribeCheck(demidenko)
          << '\n';
      return kExitClassCheck;
    }
    err << "warning: not a Demidenko matrix; the path may not be optimal\n";
  }
  SolveOptions options;
  options.tolerance = tolerance;
  options.check_class = false;
  options.cross_check_junctions = a.cross_check;
  const SolveResult r = Solve(m, a.start, a.end, options);
  out << "length " << FormatNumber(r.length) << '\n';
  out << "path" << JoinPath(r.path) << '\n';
  if (!a.plot.empty()) {
    WritePlot(a.plot, r.path,
              "(" + std::to_string(a.start) + "," + std::to_string(a.end) +
                  ")-path, length " + FormatNumber(r.length));
  }
  return kExitOk;
}

int RunTour(const std::string& source, const std::string& plot,
            double tolerance, std::ostream& out) {
  const Instance instance = LoadInstance(source);
  Validate(instance.matrix, tolerance);
  const SolveResult r = PyramidalTspTour(instance.matrix);
  out << "length " << FormatNumber(r.length) << '\n';
  out << "tour" << JoinPath(r.path) << '\n';
  if (!IsDemidenko(instance.matrix, tolerance).holds) {
    out << "note: not a Demidenko matrix; the shortest pyramidal tour may "
           "not be an optimal tour\n";
  }
  if (!plot.empty()) {
    WritePlot(plot, r.path, "pyramidal tour, length " + FormatNumber(r.length));
  }
  return kExitOk;
}

int RunCheck(const std::string& source, double tolerance, std::ostream& out) {
  const Instance instance = LoadInstance(source);
  Validate(instance.matrix, tolerance);
  out << "demidenko: " << DescribeCheck(IsDemidenko(instance.matrix, tolerance))
      << '\n';
  out << "kalmanson: " << DescribeCheck(IsKalmanson(instance.matrix, tolerance))
      << '\n';
  return kExitOk;
}

struct BruteArgs {
  std::string instance;
  int start = 0;
  int end = 0;
  std::string mode = "permutation";
  bool tour = false;
};

int RunBrute(const BruteArgs& a, double tolerance, std::ostream& out) {
  const Instance instance = LoadInstance(a.instance);
  const DistanceMatrix& m = instance.matrix;
  Validate(m, tolerance);
  SolveResult r;
  if (a.tour) {
    if (a.mode != "subset") throw UsageError("--tour needs --mode subset");
    r = HeldKarpTour(m);
    out << "length " << FormatNumber(r.length) << '\n';
    out << "tour" << JoinPath(r.path) << '\n';
    return kExitOk;
  }
  CheckEndpoints(m.size(), a.start, a.end);
  r = a.mode == "subset" ? HeldKarpPath(m, a.start, a.end)
                         : BruteForcePath(m, a.start, a.end);
  out << "length " << FormatNumber(r.length) << '\n';
  out << "path" << JoinPath(r.path) << '\n';
  return kExitOk;
}

struct GenerateArgs {
  std::string family;
  int n = 0;
  std::optional<std::uint64_t> seed;
  int magnitude = 3;
  std::string output;
};

int RunGenerate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  std::ostringstream text;
  if (auto points = FixturePoints(a.family)) {
    WritePoints(text, *points);
  } else {
    const auto family = ParseFamily(a.family);
    if (!family) throw UsageError("unknown family '" + a.family + "'");
    if (!a.seed) throw UsageError("--seed is required for random families");
    if (a.n <= 0) throw UsageError("--n is required for random families");
    switch (*family) {
      case Family::kConvexPolygon:
        WritePoints(text, ConvexPolygonPoints(a.n, *a.seed));
        break;
      case Family::kPerturbed: {
        const PerturbedInstance p =
            GenPerturbedDemidenko(a.n, *a.seed, a.magnitude);
        err << "perturbed: accepted " << p.accepted << " of " << p.attempts
            << " attempts, kalmanson: " << (p.kalmanson ? "yes" : "no")
            << '\n';
        WriteMatrix(text, p.matrix);
        break;
      }
      default:
        WriteMatrix(text, Generate(*family, a.n, *a.seed));
    }
  }
  if (a.output.empty()) {
    out << text.str();
  } else {
    std::ofstream file(a.output);
    if (!file) throw UsageError("cannot write " + a.output);
    file << text.str();
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string sizes = "4..9";
  int count = 25;
  std::uint64_t seed = 0;
  std::string family = "banded";
  bool corrupt = false;
};

int RunVerify(const VerifyArgs& a, double tolerance, std::ostream& out) {
  const std::vector<int> sizes = ParseSizes(a.sizes);
  for (int n : sizes) {
    if (n < 2 || n > kMaxHeldKarpCities) {
      throw UsageError("verify sizes must lie in 2.." +
                       std::to_string(kMaxHeldKarpCities));
    }
  }
  if (a.count < 1) throw UsageError("--count must be positive");
  int instances = 0;
  long pairs = 0;
  int mismatches = 0;
  SolveOptions options;
  options.tolerance = tolerance;
  options.check_class = false;
  for (Family family : ParseFamilies(a.family)) {
    // Euclidean distances are irrational; everything else is integral.
    const bool exact = family != Family::kConvexPolygon;
    for (int n : sizes) {
      for (int i = 0; i < a.count; ++i) {
        const std::uint64_t seed = InstanceSeed(a.seed, n, i);
        const DistanceMatrix m = Generate(family, n, seed);
        ++instances;
        if (!IsDemidenko(m, tolerance).holds) {
          out << "class-failure family " << FamilyName(family) << " n " << n
              << " seed " << seed << '\n';
          ++mismatches;
          continue;
        }
        for (City s = 1; s <= n; ++s) {
          for (City t = 1; t <= n; ++t) {
            if (s == t) continue;
            ++pairs;
            double solver = Solve(m, s, t, options).length;
            if (a.corrupt && i == 0) solver += 1.0;
            const double oracle = HeldKarpPath(m, s, t).length;
            const bool same =
                exact ? solver == oracle
                      : std::abs(solver - oracle) <=
                            1e-6 * std::max(1.0, std::abs(oracle));
            if (!same) {
              ++mismatches;
              out << "mismatch family " << FamilyName(family) << " n " << n
                  << " seed " << seed << " s " << s << " t " << t
                  << " solver " << FormatNumber(solver) << " oracle "
                  << FormatNumber(oracle) << '\n';
            }
          }
        }
      }
    }
  }
  out << "verified " << instances << " instances, " << pairs
      << " endpoint pairs, " << mismatches << " mismatches\n";
  return mismatches == 0 ? kExitOk : kExitMismatch;
}

struct BenchArgs {
  std::string sizes = "20,40,60,80";
  std::uint64_t seed = 0;
  std::string family = "banded";
  double start_fraction = 0.3;
  double end_fraction = 0.7;
};

int RunBench(const BenchArgs& a, double tolerance, std::ostream& out) {
  const std::vector<int> sizes = ParseSizes(a.sizes);
  const std::vector<Family> families = ParseFamilies(a.family);
  if (families.size() != 1) throw UsageError("bench takes a single family");
  SolveOptions options;
  options.tolerance = tolerance;
  options.check_class = false;
  out << std::setw(6) << "n" << std::setw(6) << "s" << std::setw(6) << "t"
      << std::setw(14) << "seconds" << std::setw(10) << "exponent" << '\n';
  std::vector<double> log_n;
  std::vector<double> log_sec;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    const int n = sizes[k];
    if (n < 4) throw UsageError("bench sizes must be at least 4");
    const DistanceMatrix m = Generate(families[0], n, a.seed);
    const City s = std::clamp(static_cast<int>(std::lround(a.start_fraction * n)), 1, n);
    City t = std::clamp(static_cast<int>(std::lround(a.end_fraction * n)), 1, n);
    if (t == s) t = s < n ? s + 1 : s - 1;
    const auto begin = std::chrono::steady_clock::now();
    Solve(m, s, t, options);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - begin)
            .count();
    out << std::setw(6) << n << std::setw(6) << s << std::setw(6) << t
        << std::setw(14) << std::fixed << std::setprecision(6) << seconds;
    if (k > 0 && seconds > 0 && log_sec.size() == k) {
      const double local = (std::log(seconds) - log_sec.back()) /
                           (std::log(n) - log_n.back());
      out << std::setw(10) << std::setprecision(2) << local;
    } else {
      out << std::setw(10) << "-";
    }
    out << '\n' << std::defaultfloat;
    if (seconds > 0 && log_sec.size() == k) {
      log_n.push_back(std::log(n));
      log_sec.push_back(std::log(seconds));
    }
  }
  if (log_n.size() >= 2) {
    // Least-squares slope of log(seconds) against log(n).
    const double mx = std::accumulate(log_n.begin(), log_n.end(), 0.0) / log_n.size();
    const double my = std::accumulate(log_sec.begin(), log_sec.end(), 0.0) / log_sec.size();
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t k = 0; k < log_n.size(); ++k) {
      sxy += (log_n[k] - mx) * (log_sec[k] - my);
      sxx += (log_n[k] - mx) * (log_n[k] - mx);
    }
    out << "fitted exponent " << std::fixed << std::setprecision(2)
        << sxy / sxx << '\n' << std::defaultfloat;
  }
  return kExitOk;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadEndpoint:
      return kExitUsage;
    case ErrorCode::kCorruptTags:
    case ErrorCode::kNoFeasibleJunction:
    case ErrorCode::kJunctionMismatch:
      return kExitMismatch;
    default:
      return kExitBadInstance;
  }
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Shortest Hamiltonian paths on Demidenko distance matrices"};
  app.require_subcommand(1);

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Shortest (s,t)-path");
  solve_cmd->add_option("instance", solve.instance, "Instance file or fixture")
      ->required();
  solve_cmd->add_option("-s,--start", solve.start, "First city")->required();
  solve_cmd->add_option("-t,--end", solve.end, "Last city")->required();
  solve_cmd->add_flag("--require-demidenko", solve.require_demidenko,
                      "Exit 3 unless the matrix is Demidenko");
  solve_cmd->add_flag("--cross-check", solve.cross_check,
                      "Recompute every junction separately");
  solve_cmd->add_option("--plot", solve.plot, "Write a grid schematic (SVG)");

  std::string tour_instance;
  std::string tour_plot;
  CLI::App* tour_cmd = app.add_subcommand("tour", "Shortest pyramidal tour");
  tour_cmd->add_option("instance", tour_instance, "Instance file or fixture")
      ->required();
  tour_cmd->add_option("--plot", tour_plot, "Write a grid schematic (SVG)");

  std::string check_instance;
  CLI::App* check_cmd =
      app.add_subcommand("check", "Demidenko and Kalmanson membership");
  check_cmd->add_option("instance", check_instance, "Instance file or fixture")
      ->required();

  BruteArgs brute;
  CLI::App* brute_cmd = app.add_subcommand("brute", "Exact exponential oracle");
  brute_cmd->add_option("instance", brute.instance, "Instance file or fixture")
      ->required();
  brute_cmd->add_option("-s,--start", brute.start, "First city");
  brute_cmd->add_option("-t,--end", brute.end, "Last city");
  brute_cmd->add_option("--mode", brute.mode, "permutation or subset")
      ->check(CLI::IsMember({"permutation", "subset"}))
      ->capture_default_str();
  brute_cmd->add_flag("--tour", brute.tour, "Optimal tour instead of a path");

  GenerateArgs generate;
  std::uint64_t generate_seed = 0;
  CLI::App* generate_cmd =
      app.add_subcommand("generate", "Write a generated instance or fixture");
  generate_cmd
      ->add_option("-f,--family", generate.family,
                   "banded, convex-polygon, tree-kalmanson, perturbed, fig1, "
                   "fig3")
      ->required();
  generate_cmd->add_option("-n,--n", generate.n, "Number of cities");
  CLI::Option* seed_opt =
      generate_cmd->add_option("--seed", generate_seed, "Random seed");
  generate_cmd->add_option("--magnitude", generate.magnitude,
                           "Perturbation size")
      ->capture_default_str();
  generate_cmd->add_option("-o,--output", generate.output,
                           "Output file (default stdout)");

  VerifyArgs verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Compare the solver with the oracle");
  verify_cmd->add_option("--sizes", verify.sizes, "A..B or a,b,c")
      ->capture_default_str();
  verify_cmd->add_option("--count", verify.count, "Instances per size")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Random seed")->required();
  verify_cmd->add_option("--family", verify.family, "Family or 'all'")
      ->capture_default_str();
  // Test hook: inflates solver lengths on the first instance of each size.
  verify_cmd->add_flag("--corrupt-for-test", verify.corrupt)->group("");

  BenchArgs bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Time the solver");
  bench_cmd->add_option("--sizes", bench.sizes, "A..B or a,b,c")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Random seed")->required();
  bench_cmd->add_option("--family", bench.family, "Instance family")
      ->capture_default_str();
  bench_cmd->add_option("--start-fraction", bench.start_fraction,
                        "s = round(fraction * n)")
      ->capture_default_str();
  bench_cmd->add_option("--end-fraction", bench.end_fraction,
                        "t = round(fraction * n)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* active = app.get_subcommands().front();
  try {
    const double tolerance = ToleranceFromEnvironment();
    if (active == solve_cmd) return RunSolve(solve, tolerance, out, err);
    if (active == tour_cmd) return RunTour(tour_instance, tour_plot, tolerance, out);
    if (active == check_cmd) return RunCheck(check_instance, tolerance, out);
    if (active == brute_cmd) return RunBrute(brute, tolerance, out);
    if (active == generate_cmd) {
      if (seed_opt->count() > 0) generate.seed = generate_seed;
      return RunGenerate(generate, out, err);
    }
    if (active == verify_cmd) return RunVerify(verify, tolerance, out);
    if (active == bench_cmd) return RunBench(bench, tolerance, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << active->help();
    return kExitUsage;
  } catch (const DemipathError& e) {
    err << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << '\n';
    return ExitCodeFor(e.code());
  }
  return kExitUsage;
}

}  // namespace demipath
