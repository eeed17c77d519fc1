#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace acuc {

enum class VarKind : std::uint8_t {
  CDiag,     // c_ii = |V_i|^2
  COff,      // c_ij, per oriented line
  SOff,      // s_ij, per oriented line
  Theta,     // bus voltage angle
  PGen,
  QGen,
  PFlowFwd,
  PFlowBwd,
  QFlowFwd,
  QFlowBwd,
  Commit,    // u
  Startup,   // v
  Shutdown,  // w
  DcFlow,
  Aux,
};

enum class RowTag : std::uint8_t {
  PBalance,
  QBalance,
  GenQLimit,
  GenPLimit,
  RampUp,
  RampDown,
  FlowPFwd,
  FlowPBwd,
  FlowQFwd,
  FlowQBwd,
  ThermalFwd,
  ThermalBwd,
  VoltageProduct,       // nonlinear equality |c|^2+|s|^2 = c_ii*c_jj
  AngleLink,            // nonlinear angle consistency
  VoltageProductRelax,  // rotated cone c^2+s^2 <= c_ii*c_jj
  DcBalance,
  DcFlowDef,
  DcThermal,
  LogicTransition,
  StartupImpliesOn,
  ShutdownImpliesOff,
  MinUptime,
  MinDowntime,
  GenPGating,
  GenQGating,
  CostEpigraph,
  RefAngle,
  AngleDiffBound,
  CutArctanSector,
  CutArctanTangent,
  CutSdp,
};

const char* row_tag_name(RowTag tag);

struct VariableRef {
  VarKind kind;
  int entity;   // bus, line or generator index (model-defined meaning per kind)
  int period;   // 0-based
  double lo;
  double hi;
  bool is_binary = false;
};

struct Term {
  int var;
  double coeff;
};

enum class Sense : std::uint8_t { LE, GE, EQ };

using Affine = std::vector<Term>;  // implicit + constant stored separately

struct LinearRow {
  Affine terms;
  Sense sense = Sense::LE;
  double rhs = 0.0;
  RowTag tag;
  int entity = -1;
  int period = -1;
};

/// ||vec|| <= rhs where every component is affine.
struct SocRow {
  std::vector<Affine> vec_terms;
  std::vector<double> vec_const;
  Affine rhs_terms;
  double rhs_const = 0.0;
  RowTag tag;
  int entity = -1;
  int period = -1;
};

/// ||vec||^2 <= u*w with u, w affine and nonnegative on the feasible set.
struct RotatedSocRow {
  std::vector<Affine> vec_terms;
  std::vector<double> vec_const;
  Affine u_terms;
  double u_const = 0.0;
  Affine w_terms;
  double w_const = 0.0;
  RowTag tag;
  int entity = -1;
  int period = -1;
};

/// Solver-agnostic conic model: bounded variables (some binary), linear rows,
/// second-order cones and an affine objective.
struct ModelIR {
  std::vector<VariableRef> variables;
  std::vector<LinearRow> linear;
  std::vector<SocRow> soc;
  std::vector<RotatedSocRow> rsoc;
  Affine objective;
  double objective_constant = 0.0;

  int add_variable(VarKind kind, int entity, int period, double lo, double hi,
                   bool is_binary = false);
  /// Index of a declared variable; -1 when absent.
  int find_variable(VarKind kind, int entity, int period) const;
  int require_variable(VarKind kind, int entity, int period) const;

  bool has_binaries() const;
  std::vector<int> binary_indices() const;

  /// Distinct row tags present across linear/soc/rsoc rows.
  std::vector<RowTag> emitted_tags() const;

 private:
  std::map<std::tuple<VarKind, int, int>, int> index_;
};

/// Nonlinear consistency rows tying (c, s) to voltage magnitudes and angles.
struct NonlinearRow {
  RowTag tag;    // VoltageProduct or AngleLink
  int line;
  int period;
};

/// A conic core plus nonlinear rows and a native quadratic objective
/// (coeff * var^2 terms added on top of the affine objective).
struct NlpModel {
  ModelIR ir;
  std::vector<NonlinearRow> nonlinear;
  Affine quadratic_objective;
};

/// Plain-text interchange dump (sections: variables, cones, rows, objective).
std::string export_model_text(const ModelIR& model);

}  // namespace acuc
