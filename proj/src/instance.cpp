#include "acuc/instance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "acuc/case_io.hpp"

namespace acuc {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

const std::vector<DemandProfile>& builtin_profiles() {
  static const std::vector<DemandProfile> profiles = {
      {ProfileName::Real1,
       {0.68, 0.64, 0.61, 0.60, 0.60, 0.62, 0.67, 0.74, 0.80, 0.84, 0.89, 0.92,
        0.94, 0.95, 0.97, 0.99, 1.00, 0.96, 0.96, 0.92, 0.92, 0.88, 0.78, 0.76}},
      {ProfileName::Real2,
       {0.57, 0.64, 0.68, 0.71, 0.75, 0.78, 0.82, 0.85, 0.88, 0.92, 0.97, 1.00,
        0.92, 0.88, 0.85, 0.78, 0.71, 0.78, 0.85, 0.92, 0.85, 0.78, 0.71, 0.64}},
      {ProfileName::Real3,
       {0.67, 0.63, 0.60, 0.59, 0.59, 0.60, 0.74, 0.86, 0.95, 0.96, 0.96, 0.95,
        0.95, 0.95, 0.93, 0.94, 0.99, 1.00, 1.00, 0.96, 0.91, 0.83, 0.73, 0.63}},
      {ProfileName::MaxReal,
       {0.68, 0.64, 0.68, 0.71, 0.75, 0.78, 0.82, 0.86, 0.95, 0.96, 0.97, 1.00,
        0.95, 0.95, 0.97, 0.99, 1.00, 1.00, 1.00, 0.96, 0.92, 0.88, 0.78, 0.76}},
      {ProfileName::Reactive,
       {0.68, 0.65, 0.62, 0.60, 0.61, 0.63, 0.68, 0.69, 0.73, 0.81, 0.89, 0.92,
        0.95, 0.95, 0.97, 1.00, 1.00, 0.96, 0.96, 0.93, 0.93, 0.91, 0.77, 0.76}}};
  return profiles;
}

int wrap_prev(int t, int horizon) {
  if (t < 1 || t > horizon) throw std::out_of_range("period out of range");
  return t == 1 ? horizon : t - 1;
}

int wrap_next(int t, int horizon) {
  if (t < 1 || t > horizon) throw std::out_of_range("period out of range");
  return t == horizon ? 1 : t + 1;
}

std::vector<int> uptime_window(int min_up, int t, int horizon) {
  std::vector<int> window;
  window.reserve(min_up);
  for (int j = 0; j <= min_up - 1; ++j) {
    int x = (t - min_up + j) % horizon;
    if (x < 0) x += horizon;
    window.push_back(x + 1);
  }
  return window;
}

std::vector<int> downtime_window(int min_down, int t, int horizon) {
  return uptime_window(min_down, t, horizon);
}

namespace {

// Independent draw per (seed, stream, index); keeps assignments stable when
// other entities change.
std::uint64_t draw(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::uint64_t state = seed ^ (stream * 0xd1342543de82ef95ULL) ^
                        (index * 0xaf251af3b0f025b5ULL);
  return splitmix64(state);
}

UcGeneratorParams params_for_type(int type, const GeneratorRecord& gen, double li) {
  UcGeneratorParams p;
  p.type = type;
  double share = 0.0;
  switch (type) {
    case 1: share = gen.pmax / 2.0; p.min_up = 2; break;
    case 2: share = gen.pmax / 3.0; p.min_up = 3; break;
    case 3: share = gen.pmax / 5.0; p.min_up = 4; break;
    default: throw std::invalid_argument("generator type must be 1, 2 or 3");
  }
  p.min_down = p.min_up;
  p.ramp_up = std::max(gen.pmin, share);
  p.ramp_down = p.ramp_up;
  p.fixed_cost = 5.0 * li;
  p.startup_cost = 100.0 * li;
  p.shutdown_cost = 0.0;
  return p;
}

}  // namespace

UcInstance generate_instance(const Network& network, std::uint64_t seed,
                             const GenerateOptions& opts) {
  UcInstance inst;
  inst.name = network.name;
  inst.network = network;
  inst.horizon = 24;
  inst.seed = seed;

  const auto& profiles = builtin_profiles();
  const DemandProfile& reactive = profiles[4];
  const int pool = opts.include_max_real ? 4 : 3;

  inst.pd.assign(network.buses.size(), std::vector<double>(24, 0.0));
  inst.qd.assign(network.buses.size(), std::vector<double>(24, 0.0));
  for (std::size_t i = 0; i < network.buses.size(); ++i) {
    const BusRecord& bus = network.buses[i];
    const int pick = static_cast<int>(draw(seed, 1, bus.id) % pool);
    const DemandProfile& shape = profiles[pick];
    for (int t = 0; t < 24; ++t) {
      if (bus.pd != 0.0) inst.pd[i][t] = shape.values[t] * bus.pd;
      if (bus.qd != 0.0) inst.qd[i][t] = reactive.values[t] * bus.qd;
    }
  }

  inst.gen_params.reserve(network.generators.size());
  for (std::size_t g = 0; g < network.generators.size(); ++g) {
    const GeneratorRecord& gen = network.generators[g];
    const int type = 1 + static_cast<int>(draw(seed, 2, g) % 3);
    inst.gen_params.push_back(params_for_type(type, gen, gen.cost_linear));
  }
  return inst;
}

std::string serialize_instance(const UcInstance& inst) {
  nlohmann::json j;
  j["name"] = inst.name;
  j["type_tag"] = inst.type_tag;
  j["horizon"] = inst.horizon;
  j["seed"] = inst.seed;
  j["network"] = nlohmann::json::parse(serialize_network(inst.network));
  j["pd"] = inst.pd;
  j["qd"] = inst.qd;
  for (const auto& p : inst.gen_params) {
    j["gen_params"].push_back({{"type", p.type},
                               {"ramp_up", p.ramp_up},
                               {"ramp_down", p.ramp_down},
                               {"min_up", p.min_up},
                               {"min_down", p.min_down},
                               {"fixed_cost", p.fixed_cost},
                               {"startup_cost", p.startup_cost},
                               {"shutdown_cost", p.shutdown_cost}});
  }
  return j.dump(2);
}

UcInstance parse_instance_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  UcInstance inst;
  inst.name = j.value("name", "");
  inst.type_tag = j.value("type_tag", "TYP");
  inst.horizon = j.at("horizon").get<int>();
  inst.seed = j.at("seed").get<std::uint64_t>();
  inst.network = parse_network_json(j.at("network").dump());
  inst.pd = j.at("pd").get<std::vector<std::vector<double>>>();
  inst.qd = j.at("qd").get<std::vector<std::vector<double>>>();
  for (const auto& jp : j.at("gen_params")) {
    UcGeneratorParams p;
    p.type = jp.at("type").get<int>();
    p.ramp_up = jp.at("ramp_up").get<double>();
    p.ramp_down = jp.at("ramp_down").get<double>();
    p.min_up = jp.at("min_up").get<int>();
    p.min_down = jp.at("min_down").get<int>();
    p.fixed_cost = jp.at("fixed_cost").get<double>();
    p.startup_cost = jp.at("startup_cost").get<double>();
    p.shutdown_cost = jp.at("shutdown_cost").get<double>();
    inst.gen_params.push_back(p);
  }
  if (inst.pd.size() != inst.network.buses.size() ||
      inst.qd.size() != inst.network.buses.size())
    throw ValidationError("instance demand arrays do not match bus count");
  if (inst.gen_params.size() != inst.network.generators.size())
    throw ValidationError("instance generator parameters do not match generator count");
  return inst;
}

}  // namespace acuc
