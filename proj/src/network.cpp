#include "acuc/network.hpp"

#include <cmath>
#include <complex>
#include <queue>

namespace acuc {

AdmittanceBlocks branch_admittance(double r, double x, double b_charge, double tap,
                                   double shift) {
  if (r == 0.0 && x == 0.0) throw ValidationError("branch with zero series impedance");
  if (tap <= 0.0) throw ValidationError("branch with non-positive tap ratio");

  const std::complex<double> ys = 1.0 / std::complex<double>(r, x);
  const std::complex<double> ysh(0.0, b_charge / 2.0);
  const std::complex<double> t = std::polar(tap, shift);

  const std::complex<double> yff = (ys + ysh) / (tap * tap);
  const std::complex<double> yft = -ys / std::conj(t);
  const std::complex<double> ytf = -ys / t;
  const std::complex<double> ytt = ys + ysh;

  AdmittanceBlocks blocks;
  blocks.gff = yff.real();
  blocks.bff = yff.imag();
  blocks.gft = yft.real();
  blocks.bft = yft.imag();
  blocks.gtf = ytf.real();
  blocks.btf = ytf.imag();
  blocks.gtt = ytt.real();
  blocks.btt = ytt.imag();
  return blocks;
}

std::size_t Network::index_of(int bus_id) const {
  auto it = bus_index.find(bus_id);
  if (it == bus_index.end())
    throw ValidationError("unknown bus id " + std::to_string(bus_id));
  return it->second;
}

std::size_t Network::ref_bus() const {
  for (std::size_t i = 0; i < buses.size(); ++i)
    if (buses[i].type == BusType::Ref) return i;
  return 0;
}

void Network::finalize() {
  bus_index.clear();
  for (std::size_t i = 0; i < buses.size(); ++i) {
    const BusRecord& bus = buses[i];
    if (!(bus.vmin > 0.0 && bus.vmin <= bus.vmax))
      throw ValidationError("bus " + std::to_string(bus.id) + ": needs 0 < vmin <= vmax");
    if (!bus_index.emplace(bus.id, i).second)
      throw ValidationError("duplicate bus id " + std::to_string(bus.id));
  }

  adjacency.assign(buses.size(), {});
  for (std::size_t l = 0; l < branches.size(); ++l) {
    const BranchRecord& br = branches[l];
    if (br.x == 0.0 && br.r == 0.0)
      throw ValidationError("branch " + std::to_string(l) + ": zero impedance");
    if (br.x == 0.0)
      throw ValidationError("branch " + std::to_string(l) + ": zero reactance");
    if (!(br.s_max > 0.0))
      throw ValidationError("branch " + std::to_string(l) + ": s_max must be positive");
    adjacency[index_of(br.from)].push_back(l);
    adjacency[index_of(br.to)].push_back(l);
  }

  gens_at_bus.assign(buses.size(), {});
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const GeneratorRecord& gen = generators[g];
    if (gen.pmin > gen.pmax || gen.qmin > gen.qmax)
      throw ValidationError("generator " + std::to_string(g) + ": inverted limits");
    if (gen.cost_quadratic < 0.0)
      throw ValidationError("generator " + std::to_string(g) + ": negative quadratic cost");
    gens_at_bus[index_of(gen.bus)].push_back(g);
  }

  // connectivity
  if (buses.empty()) throw ValidationError("network has no buses");
  std::vector<bool> seen(buses.size(), false);
  std::queue<std::size_t> queue;
  queue.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop();
    for (std::size_t l : adjacency[i]) {
      const BranchRecord& br = branches[l];
      const std::size_t j =
          index_of(br.from) == i ? index_of(br.to) : index_of(br.from);
      if (!seen[j]) {
        seen[j] = true;
        ++reached;
        queue.push(j);
      }
    }
  }
  if (reached != buses.size()) throw ValidationError("network graph is disconnected");
}

}  // namespace acuc
