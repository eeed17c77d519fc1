#include "acuc/model_ir.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace acuc {

const char* row_tag_name(RowTag tag) {
  switch (tag) {
    case RowTag::PBalance: return "p_balance";
    case RowTag::QBalance: return "q_balance";
    case RowTag::GenQLimit: return "gen_q_limit";
    case RowTag::GenPLimit: return "gen_p_limit";
    case RowTag::RampUp: return "ramp_up";
    case RowTag::RampDown: return "ramp_down";
    case RowTag::FlowPFwd: return "flow_p_fwd";
    case RowTag::FlowPBwd: return "flow_p_bwd";
    case RowTag::FlowQFwd: return "flow_q_fwd";
    case RowTag::FlowQBwd: return "flow_q_bwd";
    case RowTag::ThermalFwd: return "thermal_fwd";
    case RowTag::ThermalBwd: return "thermal_bwd";
    case RowTag::VoltageProduct: return "voltage_product";
    case RowTag::AngleLink: return "angle_link";
    case RowTag::VoltageProductRelax: return "voltage_product_relax";
    case RowTag::DcBalance: return "dc_balance";
    case RowTag::DcFlowDef: return "dc_flow_def";
    case RowTag::DcThermal: return "dc_thermal";
    case RowTag::LogicTransition: return "logic_transition";
    case RowTag::StartupImpliesOn: return "startup_implies_on";
    case RowTag::ShutdownImpliesOff: return "shutdown_implies_off";
    case RowTag::MinUptime: return "min_uptime";
    case RowTag::MinDowntime: return "min_downtime";
    case RowTag::GenPGating: return "gen_p_gating";
    case RowTag::GenQGating: return "gen_q_gating";
    case RowTag::CostEpigraph: return "cost_epigraph";
    case RowTag::RefAngle: return "ref_angle";
    case RowTag::AngleDiffBound: return "angle_diff_bound";
    case RowTag::CutArctanSector: return "cut_arctan_sector";
    case RowTag::CutArctanTangent: return "cut_arctan_tangent";
    case RowTag::CutSdp: return "cut_sdp";
  }
  return "unknown";
}

namespace {

const char* var_kind_name(VarKind kind) {
  switch (kind) {
    case VarKind::CDiag: return "c_diag";
    case VarKind::COff: return "c_off";
    case VarKind::SOff: return "s_off";
    case VarKind::Theta: return "theta";
    case VarKind::PGen: return "p_gen";
    case VarKind::QGen: return "q_gen";
    case VarKind::PFlowFwd: return "p_fwd";
    case VarKind::PFlowBwd: return "p_bwd";
    case VarKind::QFlowFwd: return "q_fwd";
    case VarKind::QFlowBwd: return "q_bwd";
    case VarKind::Commit: return "u";
    case VarKind::Startup: return "v";
    case VarKind::Shutdown: return "w";
    case VarKind::DcFlow: return "f_dc";
    case VarKind::Aux: return "aux";
  }
  return "?";
}

void print_affine(std::ostream& os, const Affine& terms, double constant) {
  bool first = true;
  for (const Term& t : terms) {
    os << (first ? "" : " + ") << t.coeff << "*x" << t.var;
    first = false;
  }
  if (constant != 0.0 || first) os << (first ? "" : " + ") << constant;
}

}  // namespace

int ModelIR::add_variable(VarKind kind, int entity, int period, double lo, double hi,
                          bool is_binary) {
  const int idx = static_cast<int>(variables.size());
  variables.push_back({kind, entity, period, lo, hi, is_binary});
  index_[{kind, entity, period}] = idx;
  return idx;
}

int ModelIR::find_variable(VarKind kind, int entity, int period) const {
  auto it = index_.find({kind, entity, period});
  return it == index_.end() ? -1 : it->second;
}

int ModelIR::require_variable(VarKind kind, int entity, int period) const {
  const int idx = find_variable(kind, entity, period);
  if (idx < 0)
    throw std::logic_error(std::string("model lacks variable ") + var_kind_name(kind) +
                           "[" + std::to_string(entity) + "," + std::to_string(period) +
                           "]");
  return idx;
}

bool ModelIR::has_binaries() const {
  return std::any_of(variables.begin(), variables.end(),
                     [](const VariableRef& v) { return v.is_binary; });
}

std::vector<int> ModelIR::binary_indices() const {
  std::vector<int> idx;
  for (int i = 0; i < static_cast<int>(variables.size()); ++i)
    if (variables[i].is_binary) idx.push_back(i);
  return idx;
}

std::vector<RowTag> ModelIR::emitted_tags() const {
  std::set<RowTag> tags;
  for (const auto& row : linear) tags.insert(row.tag);
  for (const auto& row : soc) tags.insert(row.tag);
  for (const auto& row : rsoc) tags.insert(row.tag);
  return {tags.begin(), tags.end()};
}

std::string export_model_text(const ModelIR& model) {
  std::ostringstream os;
  os << "variables " << model.variables.size() << "\n";
  for (std::size_t i = 0; i < model.variables.size(); ++i) {
    const VariableRef& v = model.variables[i];
    os << "  x" << i << " " << var_kind_name(v.kind) << "[" << v.entity << ","
       << v.period << "] in [" << v.lo << ", " << v.hi << "]"
       << (v.is_binary ? " binary" : "") << "\n";
  }
  os << "cones " << (model.soc.size() + model.rsoc.size()) << "\n";
  for (const auto& cone : model.soc) {
    os << "  soc " << row_tag_name(cone.tag) << ": ||(";
    for (std::size_t k = 0; k < cone.vec_terms.size(); ++k) {
      if (k) os << "; ";
      print_affine(os, cone.vec_terms[k], cone.vec_const[k]);
    }
    os << ")|| <= ";
    print_affine(os, cone.rhs_terms, cone.rhs_const);
    os << "\n";
  }
  for (const auto& cone : model.rsoc) {
    os << "  rsoc " << row_tag_name(cone.tag) << ": ||(";
    for (std::size_t k = 0; k < cone.vec_terms.size(); ++k) {
      if (k) os << "; ";
      print_affine(os, cone.vec_terms[k], cone.vec_const[k]);
    }
    os << ")||^2 <= (";
    print_affine(os, cone.u_terms, cone.u_const);
    os << ") * (";
    print_affine(os, cone.w_terms, cone.w_const);
    os << ")\n";
  }
  os << "rows " << model.linear.size() << "\n";
  for (const auto& row : model.linear) {
    os << "  " << row_tag_name(row.tag) << ": ";
    print_affine(os, row.terms, 0.0);
    os << (row.sense == Sense::LE ? " <= " : row.sense == Sense::GE ? " >= " : " == ")
       << row.rhs << "\n";
  }
  os << "objective ";
  print_affine(os, model.objective, model.objective_constant);
  os << "\n";
  return os.str();
}

}  // namespace acuc
