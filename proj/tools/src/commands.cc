// Copyright 2026 The subknap Authors.
//
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

#include "subknap_tools/commands.h"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>

#include "subknap/bounds.h"
#include "subknap/checks.h"
#include "subknap/errors.h"
#include "subknap/exact_eval.h"
#include "subknap/format.h"
#include "subknap/greedy.h"
#include "subknap/instance_io.h"
#include "subknap/report_io.h"
#include "subknap/robust_policy.h"

namespace subknap::tools {
namespace {

// Maps library errors onto exit code 2 with a one-line message.
template <typename Fn>
int guarded(Streams io, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

void emit(const std::string& out_path, const std::string& text, Streams io) {
  if (out_path.empty()) {
    io.out << text;
  } else {
    write_text_file(out_path, text);
  }
}

// Rejects tables that fail validation and drops zero-valued items.
Instance load_for_algorithms(const std::string& path, Streams io) {
  Instance instance = read_instance_file(path);
  if (!instance.oracle_valid()) {
    throw ValidationError("objective in '" + path + "' is not monotone submodular");
  }
  if (!instance.normalized()) {
    Instance normalized = normalize_instance(instance);
    io.err << "note: dropped " << instance.size() - normalized.size()
           << " zero-valued item(s)\n";
    return normalized;
  }
  return instance;
}

double parse_number(std::string_view text, std::string_view spec) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw ConfigurationError("malformed grid '" + std::string(spec) + "'");
  }
  return v;
}

}  // namespace

std::vector<double> parse_grid(std::string_view spec) {
  const auto first = spec.find(':');
  const auto second = first == std::string_view::npos ? first : spec.find(':', first + 1);
  if (second == std::string_view::npos || spec.find(':', second + 1) != std::string_view::npos) {
    throw ConfigurationError("grid must look like start:end:step, got '" + std::string(spec) +
                             "'");
  }
  const double start = parse_number(spec.substr(0, first), spec);
  const double end = parse_number(spec.substr(first + 1, second - first - 1), spec);
  const double step = parse_number(spec.substr(second + 1), spec);
  if (start < 0.0 || end > 1.0 || start > end) {
    throw ConfigurationError("grid endpoints must satisfy 0 <= start <= end <= 1");
  }
  if (step <= 0.0) throw ConfigurationError("grid step must be positive");

  const auto count = static_cast<std::int64_t>(std::floor((end - start) / step + 1e-9)) + 1;
  if (count > 10'000'000) throw ConfigurationError("grid has too many points");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    const double v = std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12;
    grid.push_back(std::min(v, end));
  }
  return grid;
}

int cmd_gen(const GeneratorSpec& spec, const std::string& out_path, Streams io) {
  return guarded(io, [&] {
    emit(out_path, generate_instance(spec).json, io);
    return kExitOk;
  });
}

int cmd_eval(const std::string& instance_path, std::int64_t gamma, const std::string& alg,
             bool json, Streams io) {
  return guarded(io, [&] {
    if (gamma < 1) throw UsageError("gamma must be >= 1");
    const Instance instance = load_for_algorithms(instance_path, io);

    std::optional<PolicyTrace> trace;
    Solution solution;
    if (alg == "opt") {
      solution = brute_force_opt(instance, gamma);
    } else if (alg == "mgreedy") {
      solution = mgreedy(instance, gamma);
    } else if (alg == "agreedy") {
      solution = agreedy(instance, gamma);
    } else if (alg == "policy") {
      CapacityFitOracle oracle = make_fit_oracle(gamma);
      trace = execute_policy(instance, oracle);
      solution = trace->packed;
    } else {
      throw UsageError("unknown algorithm '" + alg + "'");
    }

    if (json && trace) {
      io.out << policy_trace_json(instance, *trace);
      return kExitOk;
    }
    if (json) {
      io.out << solution_json(instance, alg, gamma, solution);
      return kExitOk;
    }

    io.out << "algorithm: " << alg << "\n"
           << "gamma: " << gamma << "\n"
           << "items: " << instance.describe(solution.items) << "\n"
           << "value: " << format_double(solution.value) << "\n"
           << "total_size: " << solution.total_size << "\n";
    if (trace) {
      io.out << "attempts:\n";
      for (const auto& a : trace->attempts) {
        io.out << "  " << instance.id(a.item) << " " << (a.fitted ? "fit" : "miss") << " ["
               << to_string(a.phase) << "] load " << a.queried_total << "\n";
      }
      io.out << "fit_queries: " << trace->query_count << "\n";
    }
    return kExitOk;
  });
}

int cmd_sweep(const std::string& instance_path, const std::string& out_path, bool parallel,
              Streams io) {
  return guarded(io, [&] {
    const Instance instance = load_for_algorithms(instance_path, io);
    emit(out_path, sweep_csv(robustness_sweep(instance, {.parallel = parallel})), io);
    return kExitOk;
  });
}

int cmd_bound(const std::string& grid, const std::string& out_path, Streams io) {
  return guarded(io, [&] {
    const std::vector<double> points = parse_grid(grid);
    emit(out_path, bound_csv(bound_table(points)), io);
    return kExitOk;
  });
}

int cmd_verify(const std::string& instance_path, std::int64_t trials, std::uint64_t seed,
               bool json, Streams io) {
  return guarded(io, [&] {
    if (trials < 1) throw UsageError("trials must be >= 1");
    const Instance instance = read_instance_file(instance_path);
    require_exhaustive_size(instance, "verify");
    const VerificationReport report =
        verify_instance(instance, {.trials = trials, .seed = seed});
    io.out << (json ? verification_report_json(instance, report)
                    : verification_report_text(instance, report));
    return report.passed() ? kExitOk : kExitCheckFailed;
  });
}

int run_cli(int argc, const char* const* argv, Streams io) {
  CLI::App app{"Submodular knapsack maximization under known and unknown capacities"};
  app.require_subcommand(1);

  GeneratorSpec spec;
  std::string kind = "modular";
  std::string in_path, out_path, alg = "agreedy", grid = "0:1:0.1";
  std::int64_t gamma = 0, trials = 10000;
  std::uint64_t seed = 0;
  bool parallel = false, json = false;

  auto* gen = app.add_subcommand("gen", "Write a seeded synthetic instance");
  gen->add_option("--kind", kind, "modular, coverage, concave_modular or planted")
      ->capture_default_str();
  gen->add_option("-n", spec.n, "Item count")->capture_default_str();
  gen->add_option("--size-max", spec.size_max, "Largest item size")->capture_default_str();
  gen->add_option("--seed", spec.seed, "Generator seed")->capture_default_str();
  gen->add_option("--elements", spec.elements, "Ground elements (coverage, planted)");
  gen->add_option("--density", spec.density, "Cover probability (coverage, planted)")
      ->capture_default_str();
  gen->add_option("--exponent", spec.exponent, "Exponent (concave_modular)")
      ->capture_default_str();
  gen->add_option("-o,--output", out_path, "Output file (default stdout)");

  auto* eval = app.add_subcommand("eval", "Run one algorithm at one capacity");
  eval->add_option("-i,--input", in_path, "Instance file")->required();
  eval->add_option("--gamma", gamma, "Capacity")->required();
  eval->add_option("--alg", alg, "opt, mgreedy, agreedy or policy")->capture_default_str();
  eval->add_flag("--json", json, "Print JSON (the full trace for policy)");

  auto* sweep = app.add_subcommand("sweep", "Evaluate every breakpoint capacity");
  sweep->add_option("-i,--input", in_path, "Instance file")->required();
  sweep->add_option("-o,--output", out_path, "CSV file (default stdout)");
  sweep->add_flag("--parallel", parallel, "Evaluate rows on several threads");

  auto* bound = app.add_subcommand("bound", "Tabulate the curvature bound");
  bound->add_option("--grid", grid, "start:end:step over curvature")->capture_default_str();
  bound->add_option("-o,--output", out_path, "CSV file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check every inequality exhaustively");
  verify->add_option("-i,--input", in_path, "Instance file")->required();
  verify->add_option("--trials", trials, "Random trials when sampling")->capture_default_str();
  verify->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  verify->add_flag("--json", json, "Print the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (gen->parsed()) {
    const auto parsed = parse_generator_kind(kind);
    if (!parsed) {
      io.err << "error: unknown generator kind '" << kind << "'\n";
      return kExitUsage;
    }
    spec.kind = *parsed;
    return cmd_gen(spec, out_path, io);
  }
  if (eval->parsed()) return cmd_eval(in_path, gamma, alg, json, io);
  if (sweep->parsed()) return cmd_sweep(in_path, out_path, parallel, io);
  if (bound->parsed()) return cmd_bound(grid, out_path, io);
  return cmd_verify(in_path, trials, seed, json, io);
}

}  // namespace subknap::tools
