#include "acuc/branch_and_bound.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <queue>

#include "acuc/network.hpp"

namespace acuc {

double MipResult::relative_gap() const {
  if (!has_incumbent) return std::numeric_limits<double>::infinity();
  return (incumbent_obj - best_bound) / std::max(std::abs(incumbent_obj), 1e-10);
}

namespace {

struct Node {
  double bound;
  int id;
  std::vector<std::pair<int, int>> fixings;  // (binary var index, value)

  bool operator>(const Node& other) const {
    if (bound != other.bound) return bound > other.bound;
    return id > other.id;
  }
};

// branching priority: commitment first, then startup/shutdown
int kind_rank(VarKind kind) {
  switch (kind) {
    case VarKind::Commit: return 0;
    case VarKind::Startup: return 1;
    case VarKind::Shutdown: return 2;
    default: return 3;
  }
}

int pick_branching(const ModelIR& model, const std::vector<int>& binaries,
                   const std::vector<double>& primal, double tol) {
  int best = -1;
  int best_rank = 3;
  double best_dist = 0.0;
  int best_entity = 0, best_period = 0;
  for (int var : binaries) {
    const double value = primal[var];
    const double dist = std::min(std::abs(value), std::abs(1.0 - value));
    if (dist <= tol) continue;
    const VariableRef& ref = model.variables[var];
    const int rank = kind_rank(ref.kind);
    bool better = false;
    if (best < 0 || rank < best_rank) {
      better = true;
    } else if (rank == best_rank) {
      if (dist > best_dist + 1e-12)
        better = true;
      else if (std::abs(dist - best_dist) <= 1e-12 &&
               (ref.entity < best_entity ||
                (ref.entity == best_entity && ref.period < best_period)))
        better = true;
    }
    if (better) {
      best = var;
      best_rank = rank;
      best_dist = dist;
      best_entity = ref.entity;
      best_period = ref.period;
    }
  }
  return best;
}

CommitmentSchedule extract_schedule(const ModelIR& model, const UcInstance& inst,
                                    const std::vector<double>& primal) {
  CommitmentSchedule sched;
  const std::size_t ng = inst.n_gens();
  const int T = inst.horizon;
  sched.u.assign(ng, std::vector<int>(T, 0));
  sched.v.assign(ng, std::vector<int>(T, 0));
  sched.w.assign(ng, std::vector<int>(T, 0));
  for (std::size_t g = 0; g < ng; ++g) {
    for (int t = 0; t < T; ++t) {
      const int u = model.find_variable(VarKind::Commit, g, t);
      const int v = model.find_variable(VarKind::Startup, g, t);
      const int w = model.find_variable(VarKind::Shutdown, g, t);
      if (u < 0 || v < 0 || w < 0) return {};
      sched.u[g][t] = primal[u] > 0.5;
      sched.v[g][t] = primal[v] > 0.5;
      sched.w[g][t] = primal[w] > 0.5;
    }
  }
  return sched;
}

}  // namespace

MipResult solve_misocp(const ModelIR& model, const UcInstance& inst,
                       const MipOptions& opts, const std::vector<LinearRow>& extra_cuts) {
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  };

  ModelIR work = model;
  for (const LinearRow& cut : extra_cuts) work.linear.push_back(cut);
  const std::vector<int> binaries = work.binary_indices();

  RelaxationSolver solver(work, opts.node_solver);
  MipResult result;
  result.best_bound = -std::numeric_limits<double>::infinity();
  double incumbent = std::numeric_limits<double>::infinity();

  std::priority_queue<Node, std::vector<Node>, std::greater<Node>> open;
  open.push({-std::numeric_limits<double>::infinity(), 0, {}});
  int next_id = 1;
  bool stopped_on_gap = false;

  auto gap_of = [&](double bound) {
    return (incumbent - bound) / std::max(std::abs(incumbent), 1e-10);
  };
  auto log_line = [&](std::size_t open_count) {
    if (!opts.log) return;
    (*opts.log) << "node " << result.node_count << ", open " << open_count
                << ", bound " << result.best_bound << ", incumbent "
                << (result.has_incumbent ? std::to_string(incumbent) : "-") << ", gap "
                << result.relative_gap() << ", time " << elapsed() << "\n";
  };
  auto apply_fixings = [&](const std::vector<std::pair<int, int>>& fixings) {
    solver.reset_variable_bounds();
    for (const auto& [var, value] : fixings)
      solver.set_variable_bounds(var, value, value);
  };

  while (!open.empty()) {
    if (elapsed() > opts.time_limit_s) {
      result.status = MipStatus::TimeLimit;
      result.wall_time_s = elapsed();
      return result;
    }
    Node node = open.top();
    open.pop();
    // every remaining subtree has bound >= node.bound under best-bound order
    if (std::isfinite(node.bound))
      result.best_bound =
          std::max(result.best_bound, std::min(node.bound, incumbent));
    if (result.has_incumbent && std::isfinite(node.bound) &&
        gap_of(result.best_bound) <= opts.rel_gap_target) {
      stopped_on_gap = true;
      break;
    }

    ++result.node_count;
    apply_fixings(node.fixings);
    ConicSolution relax = solver.solve();

    if (relax.status == SolveStatus::Infeasible) {
      if (result.node_count == 1) {
        result.status = MipStatus::Infeasible;
        result.wall_time_s = elapsed();
        return result;
      }
      log_line(open.size());
      continue;
    }
    if (relax.status != SolveStatus::Optimal) {
      if (result.node_count == 1)
        throw ValidationError("root relaxation failed numerically");
      log_line(open.size());
      continue;  // conservative prune of a numerically failed node
    }

    const double node_bound = std::max(node.bound, relax.objective);
    if (result.has_incumbent && gap_of(node_bound) <= opts.rel_gap_target) {
      log_line(open.size());
      continue;  // cannot improve the incumbent beyond the target
    }

    const int branch_var =
        pick_branching(work, binaries, relax.primal, opts.integrality_tol);
    if (branch_var < 0) {
      // integral point: round, validate the logical system, re-solve pinned
      CommitmentSchedule sched = extract_schedule(work, inst, relax.primal);
      const bool logical =
          sched.u.empty() ? binaries.empty() : schedule_is_logical(sched, inst);
      if (logical || binaries.empty()) {
        std::vector<std::pair<int, int>> full;
        full.reserve(binaries.size());
        for (int var : binaries)
          full.emplace_back(var, relax.primal[var] > 0.5 ? 1 : 0);
        apply_fixings(full);
        ConicSolution fixed = solver.solve();
        const bool use_fixed = fixed.status == SolveStatus::Optimal;
        const double value = use_fixed ? fixed.objective : relax.objective;
        if (value < incumbent - 1e-12) {
          incumbent = value;
          result.has_incumbent = true;
          result.incumbent_obj = incumbent;
          result.schedule = std::move(sched);
          result.incumbent_solution = use_fixed ? std::move(fixed) : std::move(relax);
        }
      }
      log_line(open.size());
      continue;
    }

    for (int value : {0, 1}) {
      Node child;
      child.bound = node_bound;
      child.id = next_id++;
      child.fixings = node.fixings;
      child.fixings.emplace_back(branch_var, value);
      open.push(std::move(child));
    }
    log_line(open.size());
  }

  if (!result.has_incumbent) {
    result.status = open.empty() ? MipStatus::Infeasible : MipStatus::TimeLimit;
    result.wall_time_s = elapsed();
    return result;
  }
  if (!stopped_on_gap && open.empty()) result.best_bound = incumbent;
  result.best_bound = std::min(result.best_bound, incumbent);
  result.status = MipStatus::OptimalWithinGap;
  result.wall_time_s = elapsed();
  return result;
}

namespace {

void check_consistent(
    const std::map<std::tuple<int, int>, std::map<VarKind, int>>& by_gt) {
  for (const auto& [key, vals] : by_gt) {
    (void)key;
    const auto u = vals.find(VarKind::Commit);
    const auto v = vals.find(VarKind::Startup);
    const auto w = vals.find(VarKind::Shutdown);
    if (u != vals.end() && v != vals.end() && v->second > u->second)
      throw ValidationError("fixing has a startup on an uncommitted period");
    if (u != vals.end() && w != vals.end() && w->second + u->second > 1)
      throw ValidationError("fixing has a shutdown on a committed period");
    if (v != vals.end() && w != vals.end() && v->second == 1 && w->second == 1)
      throw ValidationError("fixing starts and stops a generator at once");
  }
}

}  // namespace

ModelIR fix_binaries(const ModelIR& model, const std::vector<BinaryFixing>& fixings) {
  std::map<std::tuple<int, int>, std::map<VarKind, int>> by_gt;
  for (const BinaryFixing& fix : fixings) {
    if (fix.value != 0 && fix.value != 1)
      throw ValidationError("binary fixing value must be 0 or 1");
    auto& cell = by_gt[{fix.gen, fix.period}];
    const auto [it, fresh] = cell.emplace(fix.kind, fix.value);
    if (!fresh && it->second != fix.value)
      throw ValidationError("conflicting fixings for one variable");
  }
  check_consistent(by_gt);

  ModelIR out = model;
  for (const BinaryFixing& fix : fixings) {
    const int var = out.require_variable(fix.kind, fix.gen, fix.period);
    if (!out.variables[var].is_binary)
      throw ValidationError("fixing targets a continuous variable");
    out.variables[var].lo = fix.value;
    out.variables[var].hi = fix.value;
  }
  return out;
}

ModelIR fix_binaries(const ModelIR& model, const UcInstance& inst,
                     const CommitmentSchedule& schedule) {
  std::string reason;
  if (!schedule_is_logical(schedule, inst, &reason))
    throw ValidationError("schedule fails the logical system: " + reason);
  std::vector<BinaryFixing> fixings;
  for (std::size_t g = 0; g < inst.n_gens(); ++g) {
    for (int t = 0; t < inst.horizon; ++t) {
      fixings.push_back({VarKind::Commit, static_cast<int>(g), t, schedule.u[g][t]});
      fixings.push_back({VarKind::Startup, static_cast<int>(g), t, schedule.v[g][t]});
      fixings.push_back({VarKind::Shutdown, static_cast<int>(g), t, schedule.w[g][t]});
    }
  }
  return fix_binaries(model, fixings);
}

}  // namespace acuc
