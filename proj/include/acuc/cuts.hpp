#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acuc/conic_solver.hpp"
#include "acuc/instance.hpp"
#include "acuc/model_ir.hpp"

namespace acuc {

/// Fundamental cycles of a breadth-first spanning tree rooted at the
/// reference bus. cycles[k] lists bus indices; branches[k][i] is the branch
/// joining cycles[k][i] to the next bus around the cycle.
struct CycleBasis {
  std::vector<std::vector<int>> cycles;
  std::vector<std::vector<int>> branches;
};

CycleBasis cycle_basis(const Network& net);

enum class CutOrigin { ArctanSector, ArctanTangent, SdpSeparation };

const char* cut_origin_name(CutOrigin origin);

struct CutTerm {
  VarKind kind;
  int entity;
  int period;
  double coeff;
};

/// A valid inequality sum(terms) <= rhs over one period's voltage variables.
struct LinearCut {
  std::vector<CutTerm> terms;
  double rhs = 0.0;
  CutOrigin origin = CutOrigin::SdpSeparation;
  int period = 0;
  double violation_at_generation = 0.0;
};

/// Envelope family for one line at one period: two sector cuts bounding the
/// (c, s) ratio by the angle spread, and 2K tangent planes tying the angle
/// difference to (c, s), with right-hand sides maximized exactly over the
/// angle box and the magnitude interval so the cuts hold for every voltage
/// profile within bounds. Returns nothing when the spread reaches pi/2.
std::vector<LinearCut> arctangent_envelopes(const Network& net, int line, int anchors,
                                            int period);

/// Angle variables with the reference pinned, plus per-line angle-difference
/// bounds. Required before envelope cuts can be appended.
void add_angle_variables(ModelIR& model, const UcInstance& inst);

/// Envelopes for every line and period, appended to the model and returned.
std::vector<LinearCut> add_arctangent_envelopes(ModelIR& model, const UcInstance& inst,
                                                int anchors);

struct CycleCandidate {
  std::vector<double> c_diag;  // per cycle bus
  std::vector<double> c_off;   // per cycle branch
  std::vector<double> s_off;
};

/// Projection-based separation over one cycle: builds the partial Hermitian
/// matrix of the candidate, projects it onto the completable set, and turns a
/// large-enough residual into a supporting-hyperplane cut. The returned cut
/// is certified by an eigenvalue shift, so it is valid for every point with a
/// semidefinite completion.
std::optional<LinearCut> separate_cycle(const Network& net,
                                        const std::vector<int>& cycle_buses,
                                        const std::vector<int>& cycle_branches,
                                        const CycleCandidate& candidate, int period,
                                        double eps_cut);

CycleCandidate extract_candidate(const ModelIR& model, const std::vector<double>& primal,
                                 const std::vector<int>& cycle_buses,
                                 const std::vector<int>& cycle_branches, int period);

struct CutLoopOptions {
  int rounds = 5;
  double eps_cut = 1e-5;
  SolverOptions relaxation;
  int workers = 2;
};

struct CutLoopResult {
  std::vector<LinearCut> cuts;    // all separation cuts found, in adding order
  std::vector<double> lb_trace;   // relaxation objective after each solve
  bool aborted = false;
};

/// Rounds of solve-separate-add over all cycles and periods; cuts are
/// appended to the model in place. Stops early when a round separates
/// nothing.
CutLoopResult cut_loop(ModelIR& model, const UcInstance& inst, const CycleBasis& basis,
                       const CutLoopOptions& opts = {});

LinearRow cut_to_row(const ModelIR& model, const LinearCut& cut);
void append_cut(ModelIR& model, const LinearCut& cut);

/// One line per cut: origin, period, sparse row, rhs.
std::string dump_cuts(const std::vector<LinearCut>& cuts);

}  // namespace acuc
