#pragma once

#include <limits>
#include <memory>
#include <vector>

#include "acuc/model_ir.hpp"

namespace acuc {

enum class SolveStatus {
  Optimal,
  Infeasible,
  Unbounded,
  NumericalFailure,
  TimeLimit,
};

const char* solve_status_name(SolveStatus status);

struct SolverOptions {
  double tol_feas = 1e-8;
  double tol_gap = 1e-8;
  int max_iters = 200;
  double time_limit_s = std::numeric_limits<double>::infinity();
};

/// Solution of a continuous conic program.
///
/// Dual sign convention (fixed; the decomposition bound relies on it):
/// duals_linear[r] >= 0 for inequality rows of either sense and free for
/// equalities. The Lagrangian reads
///   obj + sum_r dual_r * sgn_r * (lhs_r - rhs_r)
/// with sgn_r = +1 for <= and == rows and -1 for >= rows, so a dual is the
/// rate of change of the optimum as its row tightens.
struct ConicSolution {
  SolveStatus status = SolveStatus::NumericalFailure;
  std::vector<double> primal;        // per ModelIR variable
  std::vector<double> duals_linear;  // per ModelIR linear row
  double objective = 0.0;
  double dual_objective = 0.0;
  double primal_infeas = 0.0;
  double dual_infeas = 0.0;
  double gap = 0.0;
  int iterations = 0;
};

/// Reusable solver for one model shape: the lowering and the symbolic
/// factorization are built once, and later solves may tighten variable bounds
/// in place (how the tree search fixes binaries). Not thread-safe; use one
/// instance per thread.
class RelaxationSolver {
 public:
  RelaxationSolver(const ModelIR& model, const SolverOptions& opts = {});
  ~RelaxationSolver();
  RelaxationSolver(RelaxationSolver&&) noexcept;
  RelaxationSolver& operator=(RelaxationSolver&&) noexcept;

  /// Requires the variable to have finite bounds in the lowered model.
  void set_variable_bounds(int var, double lo, double hi);
  void reset_variable_bounds();

  ConicSolution solve();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// One-shot solve of the continuous relaxation (binaries, if any, are treated
/// as continuous within their bounds).
ConicSolution solve_conic(const ModelIR& model, const SolverOptions& opts = {});

}  // namespace acuc
