#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "acuc/conic_solver.hpp"
#include "acuc/model_ir.hpp"
#include "acuc/schedule.hpp"

namespace acuc {

struct MipOptions {
  double rel_gap_target = 0.001;
  double time_limit_s = 3600.0;
  double integrality_tol = 1e-6;
  SolverOptions node_solver;
  std::ostream* log = nullptr;  // progress lines: node, open, bound, incumbent, gap, time
};

enum class MipStatus { OptimalWithinGap, Infeasible, TimeLimit };

struct MipResult {
  MipStatus status = MipStatus::Infeasible;
  bool has_incumbent = false;
  double incumbent_obj = 0.0;
  double best_bound = 0.0;
  CommitmentSchedule schedule;       // valid when has_incumbent
  ConicSolution incumbent_solution;  // continuous part at the incumbent
  int node_count = 0;
  double wall_time_s = 0.0;

  double relative_gap() const;
};

/// Relaxation-based best-bound tree search over the binary variables of a
/// conic model. Branches on the most fractional commitment variable first
/// (startup/shutdown only once all commitments are integral), ties broken by
/// lowest (generator, period). Extra cuts are appended to every node
/// relaxation. Incumbents are rounded, checked against the cyclic logical
/// system of `inst`, and re-solved with all binaries fixed.
MipResult solve_misocp(const ModelIR& model, const UcInstance& inst,
                       const MipOptions& opts = {},
                       const std::vector<LinearRow>& extra_cuts = {});

struct BinaryFixing {
  VarKind kind;  // Commit, Startup or Shutdown
  int gen;
  int period;
  int value;
};

/// Copy of the model with the listed binaries pinned through equal bounds.
/// Throws ValidationError on locally contradictory fixings.
ModelIR fix_binaries(const ModelIR& model, const std::vector<BinaryFixing>& fixings);

/// Pins every commitment, startup and shutdown variable to the schedule.
ModelIR fix_binaries(const ModelIR& model, const UcInstance& inst,
                     const CommitmentSchedule& schedule);

}  // namespace acuc
