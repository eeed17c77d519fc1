#pragma once

// Shared helpers for building small networks and instances in tests.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "acuc/instance.hpp"
#include "acuc/network.hpp"

namespace acuc::test {

inline Network make_network(std::vector<BusRecord> buses,
                            std::vector<BranchRecord> branches,
                            std::vector<GeneratorRecord> gens) {
  Network net;
  net.name = "test";
  net.base_mva = 100.0;
  net.buses = std::move(buses);
  for (BranchRecord& br : branches)
    br.y = branch_admittance(br.r, br.x, br.b_charge, br.tap, br.shift);
  net.branches = std::move(branches);
  net.generators = std::move(gens);
  net.finalize();
  return net;
}

inline BusRecord bus(int id, BusType type, double pd, double qd, double vmin = 0.9,
                     double vmax = 1.1) {
  BusRecord b;
  b.id = id;
  b.type = type;
  b.pd = pd;
  b.qd = qd;
  b.vmin = vmin;
  b.vmax = vmax;
  return b;
}

inline BranchRecord line(int from, int to, double r, double x, double b = 0.0,
                         double s_max = 10.0, double angle = 0.5235987755982988) {
  BranchRecord br;
  br.from = from;
  br.to = to;
  br.r = r;
  br.x = x;
  br.b_charge = b;
  br.tap = 1.0;
  br.shift = 0.0;
  br.s_max = s_max;
  br.angle_min = -angle;
  br.angle_max = angle;
  return br;
}

inline GeneratorRecord gen(int bus, double pmin, double pmax, double qmin, double qmax,
                           double c2, double c1, double c0 = 0.0) {
  GeneratorRecord g;
  g.bus = bus;
  g.pmin = pmin;
  g.pmax = pmax;
  g.qmin = qmin;
  g.qmax = qmax;
  g.cost_quadratic = c2;
  g.cost_linear = c1;
  g.cost_constant = c0;
  return g;
}

/// Instance with constant demand over a short horizon; ramp rates generous.
inline UcInstance desk_instance(const Network& net, int horizon,
                                std::vector<double> pd_scale = {},
                                std::vector<double> qd_scale = {}) {
  UcInstance inst;
  inst.name = "desk";
  inst.network = net;
  inst.horizon = horizon;
  inst.pd.assign(net.buses.size(), std::vector<double>(horizon, 0.0));
  inst.qd.assign(net.buses.size(), std::vector<double>(horizon, 0.0));
  for (std::size_t i = 0; i < net.buses.size(); ++i) {
    for (int t = 0; t < horizon; ++t) {
      const double ps = pd_scale.empty() ? 1.0 : pd_scale[t % pd_scale.size()];
      const double qs = qd_scale.empty()
                            ? (pd_scale.empty() ? 1.0 : pd_scale[t % pd_scale.size()])
                            : qd_scale[t % qd_scale.size()];
      inst.pd[i][t] = net.buses[i].pd * ps;
      inst.qd[i][t] = net.buses[i].qd * qs;
    }
  }
  for (const GeneratorRecord& g : net.generators) {
    UcGeneratorParams p;
    p.type = 1;
    p.ramp_up = std::max(g.pmin, g.pmax / 2.0);
    p.ramp_down = p.ramp_up;
    p.min_up = 2;
    p.min_down = 2;
    p.fixed_cost = 5.0 * g.cost_linear;
    p.startup_cost = 100.0 * g.cost_linear;
    p.shutdown_cost = 0.0;
    inst.gen_params.push_back(p);
  }
  return inst;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string data_path(const std::string& name) {
  return std::string(ACUC_DATA_DIR) + "/" + name;
}

}  // namespace acuc::test
