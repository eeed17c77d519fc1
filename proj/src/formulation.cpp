#include "acuc/formulation.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace acuc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kHalfPi = 1.57079632679489661923;

struct BuildMode {
  bool with_theta = false;      // declare angle variables and fix the reference
  bool conic_voltage = false;   // rotated cone instead of the nonlinear equality
  bool uc_binaries = false;     // u/v/w variables and the logical system
  bool epigraph_cost = false;   // quadratic cost as epigraph cones
};

class Builder {
 public:
  Builder(const UcInstance& inst, const BuildMode& mode, const CommitmentSchedule* sched)
      : inst_(inst), net_(inst.network), mode_(mode), schedule_(sched) {}

  void declare_variables() {
    const int T = inst_.horizon;
    for (int t = 0; t < T; ++t) {
      for (int i = 0; i < static_cast<int>(net_.buses.size()); ++i) {
        const BusRecord& bus = net_.buses[i];
        ir_.add_variable(VarKind::CDiag, i, t, bus.vmin * bus.vmin, bus.vmax * bus.vmax);
      }
      for (int l = 0; l < static_cast<int>(net_.branches.size()); ++l) {
        const BranchRecord& br = net_.branches[l];
        const double vmax_prod = net_.buses[net_.index_of(br.from)].vmax *
                                 net_.buses[net_.index_of(br.to)].vmax;
        const bool narrow = br.angle_min > -kHalfPi && br.angle_max < kHalfPi;
        ir_.add_variable(VarKind::COff, l, t, narrow ? 0.0 : -vmax_prod, vmax_prod);
        ir_.add_variable(VarKind::SOff, l, t, -vmax_prod, vmax_prod);
      }
      if (mode_.with_theta)
        for (int i = 0; i < static_cast<int>(net_.buses.size()); ++i)
          ir_.add_variable(VarKind::Theta, i, t, -kInf, kInf);
      for (int g = 0; g < static_cast<int>(net_.generators.size()); ++g) {
        // generation limits live in rows (gated or scheduled); duplicating
        // them as box bounds would create coincident inequalities
        ir_.add_variable(VarKind::PGen, g, t, -kInf, kInf);
        ir_.add_variable(VarKind::QGen, g, t, -kInf, kInf);
      }
      for (int l = 0; l < static_cast<int>(net_.branches.size()); ++l) {
        ir_.add_variable(VarKind::PFlowFwd, l, t, -kInf, kInf);
        ir_.add_variable(VarKind::PFlowBwd, l, t, -kInf, kInf);
        ir_.add_variable(VarKind::QFlowFwd, l, t, -kInf, kInf);
        ir_.add_variable(VarKind::QFlowBwd, l, t, -kInf, kInf);
      }
      if (mode_.uc_binaries) {
        for (int g = 0; g < static_cast<int>(net_.generators.size()); ++g) {
          ir_.add_variable(VarKind::Commit, g, t, 0.0, 1.0, true);
          ir_.add_variable(VarKind::Startup, g, t, 0.0, 1.0, true);
          ir_.add_variable(VarKind::Shutdown, g, t, 0.0, 1.0, true);
        }
      }
    }
  }

  void add_balance_rows() {
    const int T = inst_.horizon;
    for (int t = 0; t < T; ++t) {
      for (int i = 0; i < static_cast<int>(net_.buses.size()); ++i) {
        const BusRecord& bus = net_.buses[i];
        LinearRow p_row{{}, Sense::EQ, inst_.pd[i][t], RowTag::PBalance, i, t};
        LinearRow q_row{{}, Sense::EQ, inst_.qd[i][t], RowTag::QBalance, i, t};
        for (std::size_t g : net_.gens_at_bus[i]) {
          p_row.terms.push_back({ir_.require_variable(VarKind::PGen, g, t), 1.0});
          q_row.terms.push_back({ir_.require_variable(VarKind::QGen, g, t), 1.0});
        }
        for (std::size_t l : net_.adjacency[i]) {
          const bool at_from = net_.index_of(net_.branches[l].from) == (std::size_t)i;
          p_row.terms.push_back(
              {ir_.require_variable(at_from ? VarKind::PFlowFwd : VarKind::PFlowBwd, l, t),
               -1.0});
          q_row.terms.push_back(
              {ir_.require_variable(at_from ? VarKind::QFlowFwd : VarKind::QFlowBwd, l, t),
               -1.0});
        }
        if (bus.gs_shunt != 0.0)
          p_row.terms.push_back(
              {ir_.require_variable(VarKind::CDiag, i, t), -bus.gs_shunt});
        if (bus.bs_shunt != 0.0)
          q_row.terms.push_back({ir_.require_variable(VarKind::CDiag, i, t), bus.bs_shunt});
        ir_.linear.push_back(std::move(p_row));
        ir_.linear.push_back(std::move(q_row));
      }
    }
  }

  void add_flow_rows() {
    const int T = inst_.horizon;
    for (int t = 0; t < T; ++t) {
      for (int l = 0; l < static_cast<int>(net_.branches.size()); ++l) {
        const BranchRecord& br = net_.branches[l];
        const AdmittanceBlocks& y = br.y;
        const int ci = ir_.require_variable(VarKind::CDiag, net_.index_of(br.from), t);
        const int cj = ir_.require_variable(VarKind::CDiag, net_.index_of(br.to), t);
        const int cij = ir_.require_variable(VarKind::COff, l, t);
        const int sij = ir_.require_variable(VarKind::SOff, l, t);
        const int pf = ir_.require_variable(VarKind::PFlowFwd, l, t);
        const int pb = ir_.require_variable(VarKind::PFlowBwd, l, t);
        const int qf = ir_.require_variable(VarKind::QFlowFwd, l, t);
        const int qb = ir_.require_variable(VarKind::QFlowBwd, l, t);

        ir_.linear.push_back({{{pf, 1.0}, {ci, -y.gff}, {cij, -y.gft}, {sij, y.bft}},
                              Sense::EQ, 0.0, RowTag::FlowPFwd, l, t});
        ir_.linear.push_back({{{pb, 1.0}, {cj, -y.gtt}, {cij, -y.gtf}, {sij, -y.btf}},
                              Sense::EQ, 0.0, RowTag::FlowPBwd, l, t});
        ir_.linear.push_back({{{qf, 1.0}, {ci, y.bff}, {cij, y.bft}, {sij, y.gft}},
                              Sense::EQ, 0.0, RowTag::FlowQFwd, l, t});
        ir_.linear.push_back({{{qb, 1.0}, {cj, y.btt}, {cij, y.btf}, {sij, -y.gtf}},
                              Sense::EQ, 0.0, RowTag::FlowQBwd, l, t});

        SocRow fwd{{{{pf, 1.0}}, {{qf, 1.0}}}, {0.0, 0.0}, {}, br.s_max,
                   RowTag::ThermalFwd, l, t};
        SocRow bwd{{{{pb, 1.0}}, {{qb, 1.0}}}, {0.0, 0.0}, {}, br.s_max,
                   RowTag::ThermalBwd, l, t};
        ir_.soc.push_back(std::move(fwd));
        ir_.soc.push_back(std::move(bwd));

        if (mode_.conic_voltage) {
          RotatedSocRow cone{{{{cij, 1.0}}, {{sij, 1.0}}},
                             {0.0, 0.0},
                             {{ci, 1.0}},
                             0.0,
                             {{cj, 1.0}},
                             0.0,
                             RowTag::VoltageProductRelax,
                             l,
                             t};
          ir_.rsoc.push_back(std::move(cone));
        } else {
          nonlinear_.push_back({RowTag::VoltageProduct, l, t});
          nonlinear_.push_back({RowTag::AngleLink, l, t});
        }
      }
    }
  }

  void add_generation_limit_rows() {
    const int T = inst_.horizon;
    for (int t = 0; t < T; ++t) {
      for (int g = 0; g < static_cast<int>(net_.generators.size()); ++g) {
        const GeneratorRecord& gen = net_.generators[g];
        const int p = ir_.require_variable(VarKind::PGen, g, t);
        const int q = ir_.require_variable(VarKind::QGen, g, t);
        if (mode_.uc_binaries) {
          const int u = ir_.require_variable(VarKind::Commit, g, t);
          ir_.linear.push_back({{{p, 1.0}, {u, -gen.pmax}}, Sense::LE, 0.0,
                                RowTag::GenPGating, g, t});
          ir_.linear.push_back({{{p, -1.0}, {u, gen.pmin}}, Sense::LE, 0.0,
                                RowTag::GenPGating, g, t});
          ir_.linear.push_back({{{q, 1.0}, {u, -gen.qmax}}, Sense::LE, 0.0,
                                RowTag::GenQGating, g, t});
          ir_.linear.push_back({{{q, -1.0}, {u, gen.qmin}}, Sense::LE, 0.0,
                                RowTag::GenQGating, g, t});
        } else {
          const double u = committed(g, t);
          ir_.linear.push_back({{{p, 1.0}}, Sense::LE, gen.pmax * u,
                                RowTag::GenPLimit, g, t});
          ir_.linear.push_back({{{p, 1.0}}, Sense::GE, gen.pmin * u,
                                RowTag::GenPLimit, g, t});
          ir_.linear.push_back({{{q, 1.0}}, Sense::LE, gen.qmax * u,
                                RowTag::GenQLimit, g, t});
          ir_.linear.push_back({{{q, 1.0}}, Sense::GE, gen.qmin * u,
                                RowTag::GenQLimit, g, t});
        }
      }
    }
  }

  void add_ramp_rows() {
    const int T = inst_.horizon;
    for (int t = 1; t <= T; ++t) {
      const int prev = wrap_prev(t, T);
      for (int g = 0; g < static_cast<int>(net_.generators.size()); ++g) {
        const UcGeneratorParams& params = inst_.gen_params[g];
        const int p_now = ir_.require_variable(VarKind::PGen, g, t - 1);
        const int p_prev = ir_.require_variable(VarKind::PGen, g, prev - 1);
        if (p_now == p_prev) continue;  // single-period horizon
        ir_.linear.push_back({{{p_now, 1.0}, {p_prev, -1.0}}, Sense::LE, params.ramp_up,
                              RowTag::RampUp, g, t - 1});
        ir_.linear.push_back({{{p_prev, 1.0}, {p_now, -1.0}}, Sense::LE, params.ramp_down,
                              RowTag::RampDown, g, t - 1});
      }
    }
  }

  void add_logic_rows() {
    const int T = inst_.horizon;
    for (int t = 1; t <= T; ++t) {
      const int prev = wrap_prev(t, T);
      for (int g = 0; g < static_cast<int>(net_.generators.size()); ++g) {
        const UcGeneratorParams& params = inst_.gen_params[g];
        const int u = ir_.require_variable(VarKind::Commit, g, t - 1);
        const int up = ir_.require_variable(VarKind::Commit, g, prev - 1);
        const int v = ir_.require_variable(VarKind::Startup, g, t - 1);
        const int w = ir_.require_variable(VarKind::Shutdown, g, t - 1);
        if (u != up)
          ir_.linear.push_back({{{u, 1.0}, {up, -1.0}, {v, -1.0}, {w, 1.0}}, Sense::EQ,
                                0.0, RowTag::LogicTransition, g, t - 1});
        else
          ir_.linear.push_back({{{v, 1.0}, {w, -1.0}}, Sense::EQ, 0.0,
                                RowTag::LogicTransition, g, t - 1});
        ir_.linear.push_back({{{v, 1.0}, {u, -1.0}}, Sense::LE, 0.0,
                              RowTag::StartupImpliesOn, g, t - 1});
        ir_.linear.push_back({{{w, 1.0}, {u, 1.0}}, Sense::LE, 1.0,
                              RowTag::ShutdownImpliesOff, g, t - 1});
        LinearRow up_row{{{u, -1.0}}, Sense::LE, 0.0, RowTag::MinUptime, g, t - 1};
        for (int tau : uptime_window(params.min_up, t, T))
          up_row.terms.push_back(
              {ir_.require_variable(VarKind::Startup, g, tau - 1), 1.0});
        ir_.linear.push_back(std::move(up_row));
        LinearRow dw_row{{{u, 1.0}}, Sense::LE, 1.0, RowTag::MinDowntime, g, t - 1};
        for (int tau : downtime_window(params.min_down, t, T))
          dw_row.terms.push_back(
              {ir_.require_variable(VarKind::Shutdown, g, tau - 1), 1.0});
        ir_.linear.push_back(std::move(dw_row));
      }
    }
  }

  void add_reference_angle_rows() {
    const int ref = static_cast<int>(net_.ref_bus());
    for (int t = 0; t < inst_.horizon; ++t)
      ir_.linear.push_back({{{ir_.require_variable(VarKind::Theta, ref, t), 1.0}},
                            Sense::EQ, 0.0, RowTag::RefAngle, ref, t});
  }

  // Operational cost per generator-period plus, under binaries, the
  // commitment cost terms. The constant part of the quadratic cost is gated
  // by the commitment so offline generators cost nothing.
  void add_objective() {
    const int T = inst_.horizon;
    for (int t = 0; t < T; ++t) {
      for (int g = 0; g < static_cast<int>(net_.generators.size()); ++g) {
        const GeneratorRecord& gen = net_.generators[g];
        const UcGeneratorParams& params = inst_.gen_params[g];
        const int p = ir_.require_variable(VarKind::PGen, g, t);
        if (gen.cost_linear != 0.0) ir_.objective.push_back({p, gen.cost_linear});
        if (mode_.uc_binaries) {
          const int u = ir_.require_variable(VarKind::Commit, g, t);
          const int v = ir_.require_variable(VarKind::Startup, g, t);
          const int w = ir_.require_variable(VarKind::Shutdown, g, t);
          const double on_cost = params.fixed_cost + gen.cost_constant;
          if (on_cost != 0.0) ir_.objective.push_back({u, on_cost});
          if (params.startup_cost != 0.0) ir_.objective.push_back({v, params.startup_cost});
          ir_.objective.push_back({w, params.shutdown_cost});
        } else {
          ir_.objective_constant += gen.cost_constant * committed(g, t);
        }
        if (gen.cost_quadratic > 0.0) {
          if (mode_.epigraph_cost) {
            const int y = ir_.add_variable(VarKind::Aux, g, t, 0.0, kInf);
            RotatedSocRow cone{{{{p, std::sqrt(gen.cost_quadratic)}}},
                               {0.0},
                               {{y, 1.0}},
                               0.0,
                               {},
                               1.0,
                               RowTag::CostEpigraph,
                               g,
                               t};
            ir_.rsoc.push_back(std::move(cone));
            ir_.objective.push_back({y, 1.0});
          } else {
            quad_objective_.push_back({p, gen.cost_quadratic});
          }
        }
      }
    }
  }

  double committed(int g, int t) const {
    return schedule_ ? static_cast<double>(schedule_->u[g][t]) : 1.0;
  }

  ModelIR&& take_ir() { return std::move(ir_); }
  std::vector<NonlinearRow>&& take_nonlinear() { return std::move(nonlinear_); }
  Affine&& take_quad() { return std::move(quad_objective_); }

 private:
  const UcInstance& inst_;
  const Network& net_;
  BuildMode mode_;
  const CommitmentSchedule* schedule_;
  ModelIR ir_;
  std::vector<NonlinearRow> nonlinear_;
  Affine quad_objective_;
};

NlpModel build_ac_nlp(const UcInstance& inst, const CommitmentSchedule* schedule,
                      bool uc_binaries) {
  BuildMode mode;
  mode.with_theta = true;
  mode.conic_voltage = false;
  mode.uc_binaries = uc_binaries;
  mode.epigraph_cost = false;
  Builder builder(inst, mode, schedule);
  builder.declare_variables();
  builder.add_balance_rows();
  builder.add_generation_limit_rows();
  builder.add_ramp_rows();
  builder.add_flow_rows();
  if (uc_binaries) builder.add_logic_rows();
  builder.add_reference_angle_rows();
  builder.add_objective();
  NlpModel model;
  model.nonlinear = builder.take_nonlinear();
  model.quadratic_objective = builder.take_quad();
  model.ir = builder.take_ir();
  return model;
}

ModelIR build_ac_conic(const UcInstance& inst, const CommitmentSchedule* schedule,
                       bool uc_binaries) {
  BuildMode mode;
  mode.with_theta = false;
  mode.conic_voltage = true;
  mode.uc_binaries = uc_binaries;
  mode.epigraph_cost = true;
  Builder builder(inst, mode, schedule);
  builder.declare_variables();
  builder.add_balance_rows();
  builder.add_generation_limit_rows();
  builder.add_ramp_rows();
  builder.add_flow_rows();
  if (uc_binaries) builder.add_logic_rows();
  builder.add_objective();
  return builder.take_ir();
}

ModelIR build_dc(const UcInstance& inst, bool uc_binaries) {
  const Network& net = inst.network;
  const int T = inst.horizon;
  ModelIR ir;
  for (int t = 0; t < T; ++t) {
    for (int i = 0; i < static_cast<int>(net.buses.size()); ++i)
      ir.add_variable(VarKind::Theta, i, t, -kInf, kInf);
    for (int g = 0; g < static_cast<int>(net.generators.size()); ++g)
      ir.add_variable(VarKind::PGen, g, t, -kInf, kInf);
    for (int l = 0; l < static_cast<int>(net.branches.size()); ++l)
      ir.add_variable(VarKind::DcFlow, l, t, -kInf, kInf);
    if (uc_binaries) {
      for (int g = 0; g < static_cast<int>(net.generators.size()); ++g) {
        ir.add_variable(VarKind::Commit, g, t, 0.0, 1.0, true);
        ir.add_variable(VarKind::Startup, g, t, 0.0, 1.0, true);
        ir.add_variable(VarKind::Shutdown, g, t, 0.0, 1.0, true);
      }
    }
  }

  for (int t = 0; t < T; ++t) {
    for (int i = 0; i < static_cast<int>(net.buses.size()); ++i) {
      LinearRow row{{}, Sense::EQ, inst.pd[i][t], RowTag::DcBalance, i, t};
      for (std::size_t g : net.gens_at_bus[i])
        row.terms.push_back({ir.require_variable(VarKind::PGen, g, t), 1.0});
      for (std::size_t l : net.adjacency[i]) {
        const bool at_from = net.index_of(net.branches[l].from) == (std::size_t)i;
        row.terms.push_back(
            {ir.require_variable(VarKind::DcFlow, l, t), at_from ? -1.0 : 1.0});
      }
      ir.linear.push_back(std::move(row));
    }
    for (int l = 0; l < static_cast<int>(net.branches.size()); ++l) {
      const BranchRecord& br = net.branches[l];
      const double susceptance = 1.0 / (br.x * br.tap);
      const int f = ir.require_variable(VarKind::DcFlow, l, t);
      const int ti = ir.require_variable(VarKind::Theta, net.index_of(br.from), t);
      const int tj = ir.require_variable(VarKind::Theta, net.index_of(br.to), t);
      ir.linear.push_back({{{f, 1.0}, {ti, -susceptance}, {tj, susceptance}},
                           Sense::EQ, -susceptance * br.shift, RowTag::DcFlowDef, l, t});
      ir.linear.push_back({{{f, 1.0}}, Sense::LE, br.s_max, RowTag::DcThermal, l, t});
      ir.linear.push_back({{{f, -1.0}}, Sense::LE, br.s_max, RowTag::DcThermal, l, t});
    }
  }

  for (int t = 1; t <= T; ++t) {
    const int prev = wrap_prev(t, T);
    for (int g = 0; g < static_cast<int>(net.generators.size()); ++g) {
      const UcGeneratorParams& params = inst.gen_params[g];
      const int p_now = ir.require_variable(VarKind::PGen, g, t - 1);
      const int p_prev = ir.require_variable(VarKind::PGen, g, prev - 1);
      if (p_now == p_prev) continue;
      ir.linear.push_back({{{p_now, 1.0}, {p_prev, -1.0}}, Sense::LE, params.ramp_up,
                           RowTag::RampUp, g, t - 1});
      ir.linear.push_back({{{p_prev, 1.0}, {p_now, -1.0}}, Sense::LE, params.ramp_down,
                           RowTag::RampDown, g, t - 1});
    }
  }

  const int ref = static_cast<int>(net.ref_bus());
  for (int t = 0; t < T; ++t)
    ir.linear.push_back({{{ir.require_variable(VarKind::Theta, ref, t), 1.0}}, Sense::EQ,
                         0.0, RowTag::RefAngle, ref, t});

  for (int t = 0; t < T; ++t) {
    for (int g = 0; g < static_cast<int>(net.generators.size()); ++g) {
      const GeneratorRecord& gen = net.generators[g];
      const UcGeneratorParams& params = inst.gen_params[g];
      const int p = ir.require_variable(VarKind::PGen, g, t);
      if (gen.cost_linear != 0.0) ir.objective.push_back({p, gen.cost_linear});
      if (uc_binaries) {
        const int u = ir.require_variable(VarKind::Commit, g, t);
        const int v = ir.require_variable(VarKind::Startup, g, t);
        const int w = ir.require_variable(VarKind::Shutdown, g, t);
        const int up = ir.require_variable(VarKind::Commit, g, wrap_prev(t + 1, T) - 1);
        const double on_cost = params.fixed_cost + gen.cost_constant;
        if (on_cost != 0.0) ir.objective.push_back({u, on_cost});
        if (params.startup_cost != 0.0) ir.objective.push_back({v, params.startup_cost});
        ir.objective.push_back({w, params.shutdown_cost});
        if (u != up)
          ir.linear.push_back({{{u, 1.0}, {up, -1.0}, {v, -1.0}, {w, 1.0}}, Sense::EQ,
                               0.0, RowTag::LogicTransition, g, t});
        else
          ir.linear.push_back({{{v, 1.0}, {w, -1.0}}, Sense::EQ, 0.0,
                               RowTag::LogicTransition, g, t});
        ir.linear.push_back({{{v, 1.0}, {u, -1.0}}, Sense::LE, 0.0,
                             RowTag::StartupImpliesOn, g, t});
        ir.linear.push_back({{{w, 1.0}, {u, 1.0}}, Sense::LE, 1.0,
                             RowTag::ShutdownImpliesOff, g, t});
        LinearRow up_row{{{u, -1.0}}, Sense::LE, 0.0, RowTag::MinUptime, g, t};
        for (int tau : uptime_window(params.min_up, t + 1, T))
          up_row.terms.push_back({ir.require_variable(VarKind::Startup, g, tau - 1), 1.0});
        ir.linear.push_back(std::move(up_row));
        LinearRow dw_row{{{u, 1.0}}, Sense::LE, 1.0, RowTag::MinDowntime, g, t};
        for (int tau : downtime_window(params.min_down, t + 1, T))
          dw_row.terms.push_back(
              {ir.require_variable(VarKind::Shutdown, g, tau - 1), 1.0});
        ir.linear.push_back(std::move(dw_row));
        ir.linear.push_back({{{p, 1.0}, {u, -gen.pmax}}, Sense::LE, 0.0,
                             RowTag::GenPGating, g, t});
        ir.linear.push_back({{{p, -1.0}, {u, gen.pmin}}, Sense::LE, 0.0,
                             RowTag::GenPGating, g, t});
      } else {
        ir.linear.push_back({{{p, 1.0}}, Sense::LE, gen.pmax, RowTag::GenPLimit, g, t});
        ir.linear.push_back({{{p, 1.0}}, Sense::GE, gen.pmin, RowTag::GenPLimit, g, t});
      }
      if (gen.cost_quadratic > 0.0) {
        const int y = ir.add_variable(VarKind::Aux, g, t, 0.0, kInf);
        RotatedSocRow cone{{{{p, std::sqrt(gen.cost_quadratic)}}},
                           {0.0},
                           {{y, 1.0}},
                           0.0,
                           {},
                           1.0,
                           RowTag::CostEpigraph,
                           g,
                           t};
        ir.rsoc.push_back(std::move(cone));
        ir.objective.push_back({y, 1.0});
      }
      if (!uc_binaries) ir.objective_constant += gen.cost_constant;
    }
  }
  return ir;
}

}  // namespace

NlpModel build_mopf(const UcInstance& inst, const CommitmentSchedule* schedule) {
  return build_ac_nlp(inst, schedule, false);
}

ModelIR build_socp(const UcInstance& inst, const CommitmentSchedule* schedule) {
  return build_ac_conic(inst, schedule, false);
}

ModelIR build_dc_mopf(const UcInstance& inst) { return build_dc(inst, false); }

NlpModel build_uc_minlp(const UcInstance& inst) { return build_ac_nlp(inst, nullptr, true); }

ModelIR build_misocp(const UcInstance& inst) { return build_ac_conic(inst, nullptr, true); }

ModelIR build_dc_uc(const UcInstance& inst) { return build_dc(inst, true); }

std::vector<RowTag> expected_tags(Formulation kind, const UcInstance& inst) {
  const bool has_quad = std::any_of(
      inst.network.generators.begin(), inst.network.generators.end(),
      [](const GeneratorRecord& g) { return g.cost_quadratic > 0.0; });
  const bool has_ramp_rows = inst.horizon > 1;
  std::set<RowTag> tags;
  auto add_ac = [&] {
    tags.insert({RowTag::PBalance, RowTag::QBalance, RowTag::FlowPFwd, RowTag::FlowPBwd,
                 RowTag::FlowQFwd, RowTag::FlowQBwd, RowTag::ThermalFwd,
                 RowTag::ThermalBwd});
  };
  auto add_logic = [&] {
    tags.insert({RowTag::LogicTransition, RowTag::StartupImpliesOn,
                 RowTag::ShutdownImpliesOff, RowTag::MinUptime, RowTag::MinDowntime,
                 RowTag::GenPGating});
  };
  auto add_ramp = [&] {
    if (has_ramp_rows) tags.insert({RowTag::RampUp, RowTag::RampDown});
  };
  switch (kind) {
    case Formulation::Mopf:
      add_ac();
      add_ramp();
      tags.insert({RowTag::GenPLimit, RowTag::GenQLimit, RowTag::VoltageProduct,
                   RowTag::AngleLink, RowTag::RefAngle});
      break;
    case Formulation::Socp:
      add_ac();
      add_ramp();
      tags.insert({RowTag::GenPLimit, RowTag::GenQLimit, RowTag::VoltageProductRelax});
      if (has_quad) tags.insert(RowTag::CostEpigraph);
      break;
    case Formulation::DcMopf:
      add_ramp();
      tags.insert({RowTag::DcBalance, RowTag::DcFlowDef, RowTag::DcThermal,
                   RowTag::GenPLimit, RowTag::RefAngle});
      if (has_quad) tags.insert(RowTag::CostEpigraph);
      break;
    case Formulation::UcMinlp:
      add_ac();
      add_ramp();
      add_logic();
      tags.insert({RowTag::GenQGating, RowTag::VoltageProduct, RowTag::AngleLink,
                   RowTag::RefAngle});
      break;
    case Formulation::Misocp:
      add_ac();
      add_ramp();
      add_logic();
      tags.insert({RowTag::GenQGating, RowTag::VoltageProductRelax});
      if (has_quad) tags.insert(RowTag::CostEpigraph);
      break;
    case Formulation::DcUc:
      add_ramp();
      add_logic();
      tags.insert({RowTag::DcBalance, RowTag::DcFlowDef, RowTag::DcThermal,
                   RowTag::RefAngle});
      if (has_quad) tags.insert(RowTag::CostEpigraph);
      break;
  }
  return {tags.begin(), tags.end()};
}

double schedule_fixed_cost(const UcInstance& inst, const CommitmentSchedule& sched) {
  double cost = 0.0;
  for (std::size_t g = 0; g < inst.n_gens(); ++g) {
    const UcGeneratorParams& params = inst.gen_params[g];
    for (int t = 0; t < inst.horizon; ++t) {
      cost += params.fixed_cost * sched.u[g][t] + params.startup_cost * sched.v[g][t] +
              params.shutdown_cost * sched.w[g][t];
    }
  }
  return cost;
}

}  // namespace acuc
