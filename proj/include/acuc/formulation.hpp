#pragma once

#include <vector>

#include "acuc/instance.hpp"
#include "acuc/model_ir.hpp"
#include "acuc/schedule.hpp"

namespace acuc {

enum class Formulation {
  Mopf,      // multiperiod AC dispatch, nonlinear consistency rows
  Socp,      // conic relaxation of Mopf
  DcMopf,    // lossless linear approximation
  UcMinlp,   // commitment + AC rows
  Misocp,    // conic relaxation of UcMinlp
  DcUc,      // commitment + lossless linear rows
};

/// Multiperiod AC dispatch under a fixed commitment (all-on when omitted).
/// Native quadratic objective; generation limits are gated by the schedule.
NlpModel build_mopf(const UcInstance& inst, const CommitmentSchedule* schedule = nullptr);

/// Conic relaxation of build_mopf: the voltage-product equality becomes a
/// rotated cone, the angle rows and theta variables are dropped, and any
/// quadratic cost moves to an epigraph variable.
ModelIR build_socp(const UcInstance& inst, const CommitmentSchedule* schedule = nullptr);

ModelIR build_dc_mopf(const UcInstance& inst);

NlpModel build_uc_minlp(const UcInstance& inst);
ModelIR build_misocp(const UcInstance& inst);
ModelIR build_dc_uc(const UcInstance& inst);

/// Row tags each builder must emit, for mechanical completeness checks.
std::vector<RowTag> expected_tags(Formulation kind, const UcInstance& inst);

/// Objective value of the commitment part: fixed, startup and shutdown costs.
double schedule_fixed_cost(const UcInstance& inst, const CommitmentSchedule& sched);

}  // namespace acuc
