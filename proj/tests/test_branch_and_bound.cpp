#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "acuc/branch_and_bound.hpp"
#include "acuc/formulation.hpp"
#include "test_support.hpp"

using namespace acuc;

namespace {

// exhaustive optimum over all logically feasible commitment patterns,
// dispatching each one through the continuous relaxation
double enumeration_oracle(const UcInstance& inst, const ModelIR& misocp) {
  const int T = inst.horizon;
  const std::size_t ng = inst.n_gens();
  const int total = 1 << (ng * T);
  double best = std::numeric_limits<double>::infinity();
  for (int mask = 0; mask < total; ++mask) {
    std::vector<std::vector<int>> u(ng, std::vector<int>(T, 0));
    for (std::size_t g = 0; g < ng; ++g)
      for (int t = 0; t < T; ++t) u[g][t] = (mask >> (g * T + t)) & 1;
    const CommitmentSchedule sched = schedule_from_commitment(inst, u);
    if (!schedule_is_logical(sched, inst)) continue;
    const ModelIR fixed = fix_binaries(misocp, inst, sched);
    const ConicSolution sol = solve_conic(fixed);
    if (sol.status == SolveStatus::Optimal) best = std::min(best, sol.objective);
  }
  return best;
}

UcInstance two_gen_desk(unsigned variant) {
  const double load = 0.55 + 0.05 * (variant % 3);
  Network net = test::make_network(
      {test::bus(1, BusType::Ref, load, 0.1),
       test::bus(2, BusType::PQ, 0.35, 0.05)},
      {test::line(1, 2, 0.02, 0.15, 0.02, 1.2)},
      {test::gen(1, 0.1, 0.9, -0.6, 0.6, 30.0 + variant, 400.0),
       test::gen(2, 0.1, 0.7, -0.6, 0.6, 20.0, 650.0 + 10.0 * variant)});
  UcInstance inst = test::desk_instance(net, 4, {1.0, 0.55, 0.45, 0.8});
  for (auto& params : inst.gen_params) {
    params.min_up = 2;
    params.min_down = 2;
    params.fixed_cost = 120.0 + 3.0 * variant;
    params.startup_cost = 260.0;
  }
  return inst;
}

}  // namespace

TEST_CASE("forced commitment is found at the root") {
  const Network net = test::make_network(
      {test::bus(1, BusType::Ref, 0.8, 0.1)}, {},
      {test::gen(1, 0.1, 0.8, -0.5, 0.5, 0.0, 500.0)});
  const UcInstance inst = test::desk_instance(net, 2);
  const ModelIR model = build_misocp(inst);
  MipOptions opts;
  const MipResult result = solve_misocp(model, inst, opts);
  REQUIRE(result.status == MipStatus::OptimalWithinGap);
  REQUIRE(result.has_incumbent);
  CHECK(result.node_count == 1);
  for (int t = 0; t < 2; ++t) {
    CHECK(result.schedule.u[0][t] == 1);
    CHECK(result.schedule.v[0][t] == 0);
    CHECK(result.schedule.w[0][t] == 0);
  }
  CHECK(result.best_bound <= result.incumbent_obj + 1e-9);
}

TEST_CASE("tree search matches the enumeration oracle") {
  for (unsigned variant : {0u, 1u, 2u}) {
    const UcInstance inst = two_gen_desk(variant);
    const ModelIR model = build_misocp(inst);
    const double oracle = enumeration_oracle(inst, model);
    REQUIRE(std::isfinite(oracle));

    MipOptions opts;
    opts.rel_gap_target = 1e-7;
    const MipResult result = solve_misocp(model, inst, opts);
    REQUIRE(result.status == MipStatus::OptimalWithinGap);
    REQUIRE(result.has_incumbent);
    CHECK(result.incumbent_obj ==
          doctest::Approx(oracle).epsilon(1e-6));
    CHECK(result.best_bound <= result.incumbent_obj + 1e-9);
    CHECK(schedule_is_logical(result.schedule, inst));
  }
}

TEST_CASE("infeasible demand is detected") {
  const Network net = test::make_network(
      {test::bus(1, BusType::Ref, 2.0, 0.0)}, {},
      {test::gen(1, 0.1, 0.8, -0.5, 0.5, 0.0, 500.0)});
  const UcInstance inst = test::desk_instance(net, 2);
  const MipResult result = solve_misocp(build_misocp(inst), inst);
  CHECK(result.status == MipStatus::Infeasible);
}

TEST_CASE("contradictory fixings are rejected") {
  const UcInstance inst = two_gen_desk(0);
  const ModelIR model = build_misocp(inst);
  CHECK_THROWS_AS(fix_binaries(model, {{VarKind::Commit, 0, 1, 0},
                                       {VarKind::Startup, 0, 1, 1}}),
                  ValidationError);
  CHECK_THROWS_AS(fix_binaries(model, {{VarKind::Commit, 0, 1, 1},
                                       {VarKind::Commit, 0, 1, 0}}),
                  ValidationError);
  CHECK_THROWS_AS(fix_binaries(model, {{VarKind::Startup, 0, 1, 1},
                                       {VarKind::Shutdown, 0, 1, 1}}),
                  ValidationError);
}

TEST_CASE("partial fixing keeps other periods binary") {
  const UcInstance inst = two_gen_desk(0);
  const ModelIR model = build_misocp(inst);
  const ModelIR fixed = fix_binaries(model, {{VarKind::Commit, 0, 2, 1},
                                             {VarKind::Commit, 0, 3, 1}});
  int pinned = 0, free_binaries = 0;
  for (const VariableRef& var : fixed.variables) {
    if (!var.is_binary) continue;
    if (var.lo == var.hi)
      ++pinned;
    else
      ++free_binaries;
  }
  CHECK(pinned == 2);
  CHECK(free_binaries == static_cast<int>(fixed.binary_indices().size()) - 2);
}

TEST_CASE("a generator fixed off produces nothing") {
  UcInstance inst = two_gen_desk(1);
  // keep the instance servable by the first generator alone
  for (auto& series : inst.pd)
    for (double& value : series) value *= 0.75;
  for (auto& series : inst.qd)
    for (double& value : series) value *= 0.75;
  const ModelIR model = build_misocp(inst);
  std::vector<BinaryFixing> off;
  for (int t = 0; t < inst.horizon; ++t) {
    off.push_back({VarKind::Commit, 1, t, 0});
    off.push_back({VarKind::Startup, 1, t, 0});
    off.push_back({VarKind::Shutdown, 1, t, 0});
  }
  const ModelIR fixed = fix_binaries(model, off);
  MipOptions opts;
  opts.rel_gap_target = 1e-7;
  const MipResult result = solve_misocp(fixed, inst, opts);
  REQUIRE(result.status == MipStatus::OptimalWithinGap);
  for (int t = 0; t < inst.horizon; ++t) {
    const int p = fixed.require_variable(VarKind::PGen, 1, t);
    const int q = fixed.require_variable(VarKind::QGen, 1, t);
    CHECK(std::abs(result.incumbent_solution.primal[p]) <= 1e-7);
    CHECK(std::abs(result.incumbent_solution.primal[q]) <= 1e-7);
  }
}

TEST_CASE("fully fixed model reduces to a single continuous solve") {
  const UcInstance inst = two_gen_desk(2);
  const ModelIR model = build_misocp(inst);
  const CommitmentSchedule sched = all_on_schedule(inst);
  const ModelIR fixed = fix_binaries(model, inst, sched);
  MipOptions opts;
  opts.rel_gap_target = 1e-7;
  const MipResult result = solve_misocp(fixed, inst, opts);
  REQUIRE(result.status == MipStatus::OptimalWithinGap);
  CHECK(result.node_count == 1);
  const ConicSolution direct = solve_conic(fixed);
  REQUIRE(direct.status == SolveStatus::Optimal);
  CHECK(result.incumbent_obj == doctest::Approx(direct.objective).epsilon(1e-7));
}
