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

#include "subknap/exact_eval.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "subknap/bounds.h"
#include "subknap/errors.h"
#include "subknap/format.h"
#include "subknap/instance_io.h"
#include "subknap/robust_policy.h"

namespace subknap {

void require_exhaustive_size(const Instance& instance, std::string_view caller) {
  if (instance.size() > kMaxExhaustiveItems) {
    throw ResourceGuardError(std::string(caller) + ": " + std::to_string(instance.size()) +
                             " items exceed the exhaustive limit of " +
                             std::to_string(kMaxExhaustiveItems));
  }
}

SubsetTable::SubsetTable(const Instance& instance) : item_count_(instance.size()) {
  require_exhaustive_size(instance, "SubsetTable");
  const std::uint64_t count = std::uint64_t{1} << item_count_;
  values_.resize(count);
  sizes_.resize(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const ItemSet set = ItemSet::from_mask(mask);
    values_[mask] = instance.value(set);
    sizes_[mask] = instance.total_size(set);
  }
}

ItemSet SubsetTable::best_feasible(Size capacity) const {
  std::uint64_t best = 0;
  for (std::uint64_t mask = 1; mask < values_.size(); ++mask) {
    if (sizes_[mask] > capacity) continue;
    const double v = values_[mask];
    const double b = values_[best];
    if (definitely_greater(v, b) ||
        (approx_equal(v, b) && ItemSet::from_mask(mask) < ItemSet::from_mask(best))) {
      best = mask;
    }
  }
  return ItemSet::from_mask(best);
}

Solution brute_force_opt(const Instance& instance, Size capacity) {
  const SubsetTable table(instance);
  return make_solution(instance, table.best_feasible(capacity));
}

BreakpointSet breakpoints(const Instance& instance) {
  require_exhaustive_size(instance, "breakpoints");
  std::set<Size> sums{0};
  for (const auto& item : instance.items()) {
    std::vector<Size> shifted;
    shifted.reserve(sums.size());
    for (Size s : sums) shifted.push_back(s + item.size);
    sums.insert(shifted.begin(), shifted.end());
  }
  sums.erase(0);
  return BreakpointSet{std::vector<Size>(sums.begin(), sums.end())};
}

namespace {

double ratio(double value, double opt) { return opt == 0.0 ? 1.0 : value / opt; }

SweepRow sweep_row(const Instance& instance, const SubsetTable& table,
                   const RobustPolicy& policy, Size gamma) {
  SweepRow row;
  row.gamma = gamma;
  const Solution opt = make_solution(instance, table.best_feasible(gamma));
  const GreedyRun run = greedy_sequence(instance, gamma);
  const Solution mg = mgreedy(instance, run);
  const Solution ag = agreedy(instance, run);
  CapacityFitOracle fit(gamma);
  const PolicyTrace trace = policy.execute(fit);

  row.opt_value = opt.value;
  row.mg_value = mg.value;
  row.ag_value = ag.value;
  row.policy_value = trace.packed.value;
  row.ratio_mg = ratio(mg.value, opt.value);
  row.ratio_ag = ratio(ag.value, opt.value);
  row.ratio_policy = ratio(trace.packed.value, opt.value);
  row.opt_size = opt.total_size;
  row.mg_size = mg.total_size;
  row.ag_size = ag.total_size;
  row.policy_size = trace.packed.total_size;
  return row;
}

}  // namespace

SweepReport robustness_sweep(const Instance& instance, const SweepOptions& options) {
  require_exhaustive_size(instance, "robustness_sweep");
  instance.require_algorithm_ready("robustness_sweep");

  SweepReport report;
  report.curvature = instance.empty() ? 0.0 : curvature(instance);
  report.alpha_bound = alpha(report.curvature);
  report.instance_digest = instance_digest(instance);

  const SubsetTable table(instance);
  const RobustPolicy policy(instance);
  const std::vector<Size> caps = breakpoints(instance).capacities;
  report.rows.resize(caps.size());

  if (options.parallel && caps.size() > 1) {
    unsigned threads = options.threads != 0 ? options.threads
                                            : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(caps.size()));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
      std::vector<std::jthread> workers;
      for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&] {
          for (std::size_t r = next++; r < caps.size(); r = next++) {
            try {
              report.rows[r] = sweep_row(instance, table, policy, caps[r]);
            } catch (...) {
              std::lock_guard lock(error_mutex);
              if (!error) error = std::current_exception();
            }
          }
        });
      }
    }
    if (error) std::rethrow_exception(error);
  } else {
    for (std::size_t r = 0; r < caps.size(); ++r) {
      report.rows[r] = sweep_row(instance, table, policy, caps[r]);
    }
  }

  for (const auto& row : report.rows) {
    report.empirical_robustness = std::min(report.empirical_robustness, row.ratio_policy);
  }
  return report;
}

std::string sweep_csv(const SweepReport& report) {
  std::string out =
      "gamma,opt_value,mg_value,ag_value,policy_value,ratio_mg,ratio_ag,ratio_policy\n";
  for (const auto& r : report.rows) {
    out += std::to_string(r.gamma);
    for (double v : {r.opt_value, r.mg_value, r.ag_value, r.policy_value, r.ratio_mg,
                     r.ratio_ag, r.ratio_policy}) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  out += "# curvature=" + format_double(report.curvature) + "\n";
  out += "# alpha_bound=" + format_double(report.alpha_bound) + "\n";
  out += "# empirical_robustness=" + format_double(report.empirical_robustness) + "\n";
  out += "# instance_digest=" + report.instance_digest + "\n";
  return out;
}

std::string instance_digest(const Instance& instance) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : instance_to_json(instance)) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace subknap
