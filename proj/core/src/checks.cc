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

#include "subknap/checks.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "subknap/bounds.h"
#include "subknap/errors.h"
#include "subknap/format.h"
#include "subknap/random.h"
#include "subknap/robust_policy.h"

namespace subknap {

void CheckReport::record(std::string_view sub_check, double lhs, double rhs,
                         const std::function<std::string()>& witness) {
  ++trials;
  ++counts[std::string(sub_check)];
  const double slack = scaled_margin(lhs, rhs);
  worst_slack = any_trial_ ? std::min(worst_slack, slack) : slack;
  any_trial_ = true;
  if (slack < -kTolerance) {
    ++failure_count;
    if (failures.size() < kMaxWitnesses) {
      failures.push_back({std::string(sub_check) + ": " + witness(), slack});
    }
  }
}

void CheckReport::merge(const CheckReport& other) {
  trials += other.trials;
  failure_count += other.failure_count;
  for (const auto& f : other.failures) {
    if (failures.size() < kMaxWitnesses) failures.push_back(f);
  }
  if (other.any_trial_) {
    worst_slack = any_trial_ ? std::min(worst_slack, other.worst_slack) : other.worst_slack;
    any_trial_ = true;
  }
  for (const auto& [k, v] : other.counts) counts[k] += v;
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

ExactContext::ExactContext(const Instance& instance)
    : instance_(instance),
      table_(instance),
      curvature_(instance.empty() ? 0.0 : subknap::curvature(instance)) {}

Solution ExactContext::optimum(Size capacity) const {
  return make_solution(instance_, table_.best_feasible(capacity));
}

namespace {

std::string num(double v) { return format_double(v); }

CheckReport named_report(std::string name) {
  CheckReport report;
  report.name = std::move(name);
  return report;
}

}  // namespace

CheckReport check_prefix_bound(const Instance& instance, Size gamma) {
  return check_prefix_bound(ExactContext(instance), gamma);
}

CheckReport check_prefix_bound(const ExactContext& ctx, Size gamma) {
  CheckReport report;
  report.name = "prefix_bound";
  const Instance& inst = ctx.instance();
  const GreedyRun run = greedy_sequence(inst, gamma);
  const Solution opt = ctx.optimum(gamma);
  const double c = ctx.curvature();
  const double g = static_cast<double>(gamma);
  for (std::size_t j = 1; j <= run.k; ++j) {
    const double z = static_cast<double>(run.prefix_size(j)) / g;
    const double factor = c <= kZeroCurvature ? z : -std::expm1(-c * z) / c;
    const double lhs = run.prefix_value(j);
    const double rhs = factor * opt.value;
    report.record("prefix", lhs, rhs, [&] {
      return "gamma=" + std::to_string(gamma) + " j=" + std::to_string(j) + " f(G_j)=" +
             num(lhs) + " < " + num(rhs);
    });
  }
  return report;
}

CheckReport check_marginal_bounds(const Instance& instance, Size gamma) {
  return check_marginal_bounds(ExactContext(instance), gamma);
}

CheckReport check_marginal_bounds(const ExactContext& ctx, Size gamma) {
  CheckReport report;
  report.name = "marginal_bounds";
  const Instance& inst = ctx.instance();
  const GreedyRun run = greedy_sequence(inst, gamma);
  const Solution opt = ctx.optimum(gamma);
  report.optimum = inst.describe(opt.items);

  if (run.prefix(run.k) == opt.items) {
    report.notes.push_back("gamma=" + std::to_string(gamma) +
                           ": greedy prefix is the optimum, skipped");
    return report;
  }

  const double c = ctx.curvature();
  const double g = static_cast<double>(gamma);
  const double f_opt = opt.value;
  const std::size_t last = run.k + (run.overflow_item ? 1 : 0);

  double chi_delta = 0.0;  // sum_{m<j} chi_m delta_m
  Size opt_prefix = 0;     // s*_{j-1}
  for (std::size_t j = 1; j <= last; ++j) {
    const ItemIndex item = run.order[j - 1];
    const double s_j = static_cast<double>(inst.item_size(item));
    const double delta = run.marginals[j - 1];
    const double before = run.prefix_value(j - 1);
    const auto where = [&] { return "gamma=" + std::to_string(gamma) + " j=" + std::to_string(j); };

    const double denom_i = g - static_cast<double>(opt_prefix);
    if (denom_i > 0.0) {
      const double rhs = (c * s_j / g) * (f_opt - before) +
                         ((1.0 - c) * s_j / denom_i) * (f_opt - chi_delta);
      report.record("i", delta, rhs,
                    [&] { return where() + " delta=" + num(delta) + " < " + num(rhs); });
    } else {
      report.notes.push_back(where() + ": optimum inside the prefix fills gamma, (i) skipped");
    }

    const double denom_ii = g - (1.0 - c) * static_cast<double>(run.prefix_size(j - 1));
    if (denom_ii > 0.0) {
      const double rhs = s_j / denom_ii * (f_opt - before);
      report.record("ii", delta, rhs,
                    [&] { return where() + " delta=" + num(delta) + " < " + num(rhs); });
    } else {
      report.notes.push_back(where() + ": zero denominator, (ii) skipped");
    }

    const int chi = opt.items.contains(item) ? 1 : 0;
    report.opt_indicator.push_back(chi);
    if (chi) {
      chi_delta += delta;
      opt_prefix += inst.item_size(item);
    }
    report.opt_prefix_sizes.push_back(opt_prefix);
  }
  return report;
}

namespace {

struct CurvatureInequalities {
  const Instance& inst;
  double c;
  CheckReport& report;

  void marginal(const ItemSet& a, ItemIndex j, double f_a, double f_aj) {
    const double lhs = f_aj - f_a;
    const double rhs = (1.0 - c) * inst.singleton_value(j);
    report.record("curvature_marginal", lhs, rhs, [&] {
      return "A=" + inst.describe(a) + " j=" + inst.id(j) + ": " + num(lhs) + " < " + num(rhs);
    });
  }

  void disjoint(const ItemSet& a, const ItemSet& b, double f_a, double f_ab) {
    double singles = 0.0;
    for (ItemIndex i : b) singles += inst.singleton_value(i);
    const double rhs = f_a + (1.0 - c) * singles;
    report.record("curvature_union", f_ab, rhs, [&] {
      return "A=" + inst.describe(a) + " B=" + inst.describe(b) + ": " + num(f_ab) + " < " +
             num(rhs);
    });
  }

  template <typename Eval>
  void nested(const ItemSet& a, const ItemSet& b, double f_a, double f_b, Eval&& eval) {
    double bound = f_a;
    for (ItemIndex u : set_difference(b, a)) bound += eval(a.with(u)) - f_a;
    report.record("marginal_sum", bound, f_b, [&] {
      return "A=" + inst.describe(a) + " B=" + inst.describe(b) + ": f(B)=" + num(f_b) +
             " > " + num(bound);
    });
  }
};

}  // namespace

CheckReport check_curvature_lemma(const Instance& instance,
                                  const CurvatureLemmaOptions& options) {
  CheckReport report;
  report.name = "curvature_lemma";
  if (instance.empty()) return report;
  double c = 1.0;
  try {
    c = curvature(instance);
  } catch (const ValidationError& e) {
    // Not submodular; c = 1 leaves the c-free inequality to catch it.
    report.notes.push_back(std::string(e.what()) + "; using c = 1");
  }
  CurvatureInequalities check{instance, c, report};
  const std::size_t n = instance.size();

  if (n <= kMaxExhaustiveLemmaItems && !options.force_random) {
    report.notes.push_back("exhaustive");
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<double> f(count);
    for (std::uint64_t m = 0; m < count; ++m) f[m] = instance.value(ItemSet::from_mask(m));
    auto eval = [&](const ItemSet& s) { return f[s.mask()]; };
    for (std::uint64_t a = 0; a < count; ++a) {
      for (ItemIndex j = 0; j < n; ++j) {
        const std::uint64_t bit = std::uint64_t{1} << j;
        if (!(a & bit)) check.marginal(ItemSet::from_mask(a), j, f[a], f[a | bit]);
      }
      // Every b disjoint from a, and every b containing a.
      const std::uint64_t rest = (count - 1) & ~a;
      for (std::uint64_t b = rest;; b = (b - 1) & rest) {
        check.disjoint(ItemSet::from_mask(a), ItemSet::from_mask(b), f[a], f[a | b]);
        check.nested(ItemSet::from_mask(a), ItemSet::from_mask(a | b), f[a], f[a | b], eval);
        if (b == 0) break;
      }
    }
    return report;
  }

  report.notes.push_back("random");
  Rng rng(options.seed);
  auto eval = [&](const ItemSet& s) { return instance.value(s); };
  for (std::int64_t t = 0; t < options.trials; ++t) {
    {
      const ItemIndex j = rng.below(n);
      ItemSet a;
      for (ItemIndex i = 0; i < n; ++i) {
        if (i != j && rng.chance(0.5)) a.insert(i);
      }
      check.marginal(a, j, instance.value(a), instance.value(a.with(j)));
    }
    {
      ItemSet a, b;
      for (ItemIndex i = 0; i < n; ++i) {
        switch (rng.below(3)) {
          case 0: a.insert(i); break;
          case 1: b.insert(i); break;
          default: break;
        }
      }
      check.disjoint(a, b, instance.value(a), instance.value(set_union(a, b)));
    }
    {
      ItemSet a, b;
      for (ItemIndex i = 0; i < n; ++i) {
        switch (rng.below(3)) {
          case 0: a.insert(i); b.insert(i); break;
          case 1: b.insert(i); break;
          default: break;
        }
      }
      check.nested(a, b, instance.value(a), instance.value(b), eval);
    }
  }
  return report;
}

CheckReport check_indispensable_properties(const Instance& instance) {
  return check_indispensable_properties(ExactContext(instance));
}

CheckReport check_indispensable_properties(const ExactContext& ctx) {
  CheckReport report;
  report.name = "indispensable_items";
  const Instance& inst = ctx.instance();
  const std::vector<Size> caps = breakpoints(inst).capacities;

  std::map<Size, GreedyRun> runs;
  auto run_at = [&](Size gamma) -> const GreedyRun& {
    auto it = runs.find(gamma);
    if (it == runs.end()) it = runs.emplace(gamma, greedy_sequence(inst, gamma)).first;
    return it->second;
  };
  // Item AGreedy returns alone at this capacity, if any.
  auto override_at = [&](Size gamma) -> std::optional<ItemIndex> {
    const GreedyRun& run = run_at(gamma);
    if (agreedy_pick(run) == GreedyPick::kOverflowItem) return run.overflow_item;
    return std::nullopt;
  };
  auto truth = [](bool ok) { return ok ? 0.0 : -1.0; };

  std::vector<std::optional<IndispensabilityInterval>> intervals(inst.size());
  for (ItemIndex i = 0; i < inst.size(); ++i) {
    const IndispensabilityResult r = is_indispensable(inst, i);
    if (!r.indispensable) continue;
    Size prefix_size = 0;
    for (ItemIndex p : r.greedy_prefix) prefix_size += inst.item_size(p);
    report.record("prefix_smaller", static_cast<double>(inst.item_size(i)),
                  static_cast<double>(prefix_size) + 1.0, [&] {
                    return inst.id(i) + ": size " + std::to_string(inst.item_size(i)) +
                           " <= prefix size " + std::to_string(prefix_size);
                  });
    report.record("prefix_nonempty", truth(!r.greedy_prefix.empty()), 0.0,
                  [&] { return inst.id(i) + ": empty prefix"; });

    const auto interval = indispensability_interval(inst, i);
    intervals[i] = interval;
    report.notes.push_back(inst.id(i) + " indispensable on [" + std::to_string(interval->gamma1) +
                           ", " + std::to_string(interval->gamma2) + ")");

    std::set<Size> probes(caps.begin(), caps.end());
    for (Size g : {interval->gamma1 - 1, interval->gamma1, interval->gamma2 - 1,
                   interval->gamma2}) {
      if (g >= 1) probes.insert(g);
    }
    for (Size g : probes) {
      const bool returned = override_at(g) == i;
      report.record("interval", truth(returned == interval->contains(g)), 0.0, [&] {
        return inst.id(i) + " at gamma=" + std::to_string(g) + ": AGreedy " +
               (returned ? "returns" : "does not return") + " it alone, interval [" +
               std::to_string(interval->gamma1) + ", " + std::to_string(interval->gamma2) +
               ")";
      });
    }

    // First capacity above gamma1 that changes the leading k+1 entries.
    std::vector<ItemIndex> head = r.greedy_prefix;
    head.push_back(i);
    for (Size g : caps) {
      if (g <= interval->gamma1) continue;
      const GreedyRun& run = run_at(g);
      if (std::equal(head.begin(), head.end(), run.order.begin())) continue;
      std::optional<std::size_t> pos;
      for (std::size_t p = 0; p < run.order.size(); ++p) {
        if (inst.item_size(run.order[p]) > inst.item_size(i)) {
          pos = p;
          break;
        }
      }
      const bool ok = pos && (*pos == 0 || override_at(g) == run.order[*pos]);
      report.record("reorder_successor", truth(ok), 0.0, [&] {
        return inst.id(i) + ": at gamma=" + std::to_string(g) +
               " the first larger item is neither first nor returned alone";
      });
      break;
    }
  }

  for (Size g : caps) {
    const auto item = override_at(g);
    if (!item) continue;
    const bool ok = intervals[*item] && intervals[*item]->contains(g);
    report.record("override_flagged", truth(ok), 0.0, [&] {
      return "AGreedy returns " + inst.id(*item) + " alone at gamma=" + std::to_string(g) +
             " outside its indispensability interval";
    });
  }
  return report;
}

std::vector<CheckReport> check_sweep(const ExactContext& ctx, const SweepReport& sweep) {
  const Instance& inst = ctx.instance();
  CheckReport opt_dom = named_report("opt_dominates");
  CheckReport mg_vs_ag = named_report("mgreedy_ge_agreedy");
  CheckReport policy = named_report("policy_ge_agreedy");
  CheckReport bound = named_report("agreedy_curvature_bound");
  CheckReport feasible = named_report("feasibility");
  CheckReport robust = named_report("robustness_bound");
  CheckReport constancy = named_report("interval_constancy");

  const double a = alpha(ctx.curvature());
  for (const SweepRow& row : sweep.rows) {
    const std::string at = "gamma=" + std::to_string(row.gamma);
    auto cmp = [&](CheckReport& rep, const char* sub, double lhs, double rhs) {
      rep.record(sub, lhs, rhs, [&] { return at + ": " + num(lhs) + " < " + num(rhs); });
    };
    cmp(opt_dom, "opt_ge_mg", row.opt_value, row.mg_value);
    cmp(opt_dom, "opt_ge_ag", row.opt_value, row.ag_value);
    cmp(opt_dom, "opt_ge_policy", row.opt_value, row.policy_value);
    cmp(mg_vs_ag, "mg_ge_ag", row.mg_value, row.ag_value);
    cmp(policy, "policy_ge_ag", row.policy_value, row.ag_value);
    cmp(bound, "ag_ge_alpha_opt", row.ag_value, a * row.opt_value);
    const double g = static_cast<double>(row.gamma);
    for (auto [name, size] : {std::pair{"opt", row.opt_size}, std::pair{"mg", row.mg_size},
                              std::pair{"ag", row.ag_size},
                              std::pair{"policy", row.policy_size}}) {
      cmp(feasible, name, g, static_cast<double>(size));
    }
    if (definitely_greater(row.mg_value, row.ag_value)) {
      mg_vs_ag.notes.push_back("strict MG > AG at " + at + " (MG " + num(row.mg_value) +
                                  ", AG " + num(row.ag_value) + ", policy " +
                                  num(row.policy_value) + ")");
    }
  }
  robust.record("empirical_ge_alpha", sweep.empirical_robustness, sweep.alpha_bound, [&] {
    return "empirical robustness " + num(sweep.empirical_robustness) + " < alpha " +
           num(sweep.alpha_bound);
  });

  // Every algorithm must behave identically at both ends of a regime.
  const RobustPolicy robust_policy(inst);
  auto outcome = [&](Size g) {
    const GreedyRun run = greedy_sequence(inst, g);
    CapacityFitOracle fit(g);
    return std::vector<ItemSet>{ctx.table().best_feasible(g), mgreedy(inst, run).items,
                                agreedy(inst, run).items, robust_policy.execute(fit).packed.items};
  };
  for (std::size_t t = 0; t + 1 < sweep.rows.size(); ++t) {
    const Size lo = sweep.rows[t].gamma;
    const Size hi = sweep.rows[t + 1].gamma - 1;
    if (hi <= lo) continue;
    const bool same = outcome(lo) == outcome(hi);
    constancy.record("regime", same ? 0.0 : -1.0, 0.0, [&] {
      return "solutions differ between gamma=" + std::to_string(lo) + " and gamma=" +
             std::to_string(hi);
    });
  }
  return {opt_dom, mg_vs_ag, policy, bound, feasible, robust, constancy};
}

bool VerificationReport::passed() const {
  if (!validation.ok()) return false;
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckReport& c) { return c.passed(); });
}

VerificationReport verify_instance(const Instance& input, const CurvatureLemmaOptions& options) {
  VerificationReport out;
  out.validation = validate_oracle(input, ValidationOptions{.seed = options.seed});
  if (!out.validation.ok()) return out;

  const Instance instance = normalize_instance(input);
  if (instance.size() != input.size()) {
    out.notes.push_back("removed " + std::to_string(input.size() - instance.size()) +
                        " zero-valued items");
  }
  const ExactContext ctx(instance);
  out.checks.push_back(check_curvature_lemma(instance, options));

  CheckReport prefix = named_report("prefix_bound");
  CheckReport marginal = named_report("marginal_bounds");
  const std::vector<Size> caps = breakpoints(instance).capacities;
  for (Size g : caps) {
    prefix.merge(check_prefix_bound(ctx, g));
    marginal.merge(check_marginal_bounds(ctx, g));
  }
  out.checks.push_back(std::move(prefix));
  out.checks.push_back(std::move(marginal));
  out.checks.push_back(check_indispensable_properties(ctx));

  const SweepReport sweep = robustness_sweep(instance);
  for (auto& rep : check_sweep(ctx, sweep)) out.checks.push_back(std::move(rep));
  out.notes.push_back("curvature=" + num(sweep.curvature) + " alpha_bound=" +
                      num(sweep.alpha_bound) + " empirical_robustness=" +
                      num(sweep.empirical_robustness));
  return out;
}

}  // namespace subknap
