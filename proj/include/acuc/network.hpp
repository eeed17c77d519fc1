#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace acuc {

/// Raised when case-file text cannot be parsed; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("parse error at line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

enum class BusType { PQ, PV, Ref };

struct BusRecord {
  int id = 0;
  BusType type = BusType::PQ;
  double pd = 0.0;        // active demand, p.u.
  double qd = 0.0;        // reactive demand, p.u.
  double gs_shunt = 0.0;  // shunt conductance g_ii, p.u.
  double bs_shunt = 0.0;  // shunt susceptance b_ii, p.u.
  double vmin = 0.9;
  double vmax = 1.1;
};

/// 2x2 branch admittance split into real/imaginary blocks, p.u.
struct AdmittanceBlocks {
  double gff = 0.0, bff = 0.0;
  double gft = 0.0, bft = 0.0;
  double gtf = 0.0, btf = 0.0;
  double gtt = 0.0, btt = 0.0;
};

struct BranchRecord {
  int from = 0;
  int to = 0;
  double r = 0.0;
  double x = 0.0;
  double b_charge = 0.0;  // total line charging susceptance, p.u.
  double tap = 1.0;       // off-nominal turns ratio
  double shift = 0.0;     // phase shift, radians
  double s_max = 0.0;     // apparent-power limit, p.u.
  double angle_min = 0.0; // radians
  double angle_max = 0.0; // radians
  AdmittanceBlocks y;
};

struct GeneratorRecord {
  int bus = 0;
  double pmin = 0.0, pmax = 0.0;  // p.u.
  double qmin = 0.0, qmax = 0.0;  // p.u.
  // Operational cost C(p) = cost_quadratic*p^2 + cost_linear*p + cost_constant,
  // with p in p.u. and cost in $/h.
  double cost_quadratic = 0.0;
  double cost_linear = 0.0;
  double cost_constant = 0.0;
};

/// Validated per-unit network with precomputed branch admittance blocks.
struct Network {
  std::string name;
  double base_mva = 100.0;
  std::vector<BusRecord> buses;
  std::vector<BranchRecord> branches;
  std::vector<GeneratorRecord> generators;

  // bus id -> index into buses
  std::map<int, std::size_t> bus_index;
  // adjacency[i] = branch indices incident to bus index i (either end)
  std::vector<std::vector<std::size_t>> adjacency;
  // generators attached to bus index i
  std::vector<std::vector<std::size_t>> gens_at_bus;

  std::size_t ref_bus() const;  // index of the reference bus
  std::size_t index_of(int bus_id) const;

  /// Rebuilds bus_index/adjacency/gens_at_bus and checks structural invariants.
  void finalize();
};

/// Real/imaginary parts of the 2x2 admittance matrix of a branch under the
/// standard two-port pi model with off-nominal tap ratio and phase shift.
AdmittanceBlocks branch_admittance(double r, double x, double b_charge, double tap,
                                   double shift);

}  // namespace acuc
