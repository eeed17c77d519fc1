#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "acuc/network.hpp"

namespace acuc {

enum class ProfileName { Real1, Real2, Real3, MaxReal, Reactive };

struct DemandProfile {
  ProfileName name;
  std::array<double, 24> values;  // each in (0,1], max exactly 1.00
};

/// The five built-in 24-hour demand shapes.
const std::vector<DemandProfile>& builtin_profiles();

struct UcGeneratorParams {
  int type = 1;               // 1, 2 or 3
  double ramp_up = 0.0;       // p.u. per period, equals ramp_down
  double ramp_down = 0.0;
  int min_up = 2;             // periods, equals min_down
  int min_down = 2;
  double fixed_cost = 0.0;    // $/period while committed
  double startup_cost = 0.0;  // $
  double shutdown_cost = 0.0; // always 0
};

/// A 24-period unit-commitment instance over a network, with cyclic demand.
struct UcInstance {
  std::string name;
  std::string type_tag = "TYP";
  Network network;
  int horizon = 24;
  std::uint64_t seed = 0;
  // pd[bus_index][t], qd[bus_index][t], t in 0..horizon-1
  std::vector<std::vector<double>> pd;
  std::vector<std::vector<double>> qd;
  std::vector<UcGeneratorParams> gen_params;

  std::size_t n_buses() const { return network.buses.size(); }
  std::size_t n_lines() const { return network.branches.size(); }
  std::size_t n_gens() const { return network.generators.size(); }
};

struct GenerateOptions {
  bool include_max_real = false;  // let the MaxReal shape join the random pool
};

/// Builds a UcInstance from a network: each demand bus draws one of the real
/// shapes uniformly, demand is normalized so its peak equals the case value,
/// reactive demand follows the reactive shape, and each generator draws a
/// type in {1,2,3} with the derived ramp/min-up/cost parameters.
/// Deterministic in (network, seed); the random source is SplitMix64 keyed by
/// seed and entity index.
UcInstance generate_instance(const Network& network, std::uint64_t seed,
                             const GenerateOptions& opts = {});

/// Cyclic previous/next period, 1-based: wrap_prev(1, T) = T, wrap_next(T, T) = 1.
int wrap_prev(int t, int horizon);
int wrap_next(int t, int horizon);

/// Periods {((t - min_up + j) mod T) + 1 : j = 0..min_up-1}; contiguous under
/// the cyclic order and ending at t.
std::vector<int> uptime_window(int min_up, int t, int horizon);
std::vector<int> downtime_window(int min_down, int t, int horizon);

std::string serialize_instance(const UcInstance& inst);
UcInstance parse_instance_json(const std::string& text);

/// SplitMix64 step; the documented random source behind generate_instance.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace acuc
