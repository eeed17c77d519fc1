#include "acuc/cuts.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <queue>
#include <sstream>
#include <thread>

#include "acuc/psd_completion.hpp"

namespace acuc {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = kPi / 2.0;

// max over d in [-spread, spread], r in [rmin, rmax] of
//   alpha*d + r*(beta*cos(d) - gamma*sin(d))
double support_max(double alpha, double beta, double gamma, double spread, double rmin,
                   double rmax) {
  auto value = [&](double d) {
    const double phi = beta * std::cos(d) - gamma * std::sin(d);
    return alpha * d + (phi > 0.0 ? rmax : rmin) * phi;
  };
  const int grid = 8192;
  double best = -std::numeric_limits<double>::infinity();
  double best_d = -spread;
  for (int i = 0; i <= grid; ++i) {
    const double d = -spread + 2.0 * spread * i / grid;
    const double v = value(d);
    if (v > best) {
      best = v;
      best_d = d;
    }
  }
  const double h = 2.0 * spread / grid;
  double lo = std::max(-spread, best_d - h);
  double hi = std::min(spread, best_d + h);
  for (int iter = 0; iter < 80; ++iter) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (value(m1) < value(m2))
      lo = m1;
    else
      hi = m2;
  }
  return std::max(best, value(0.5 * (lo + hi)));
}

}  // namespace

const char* cut_origin_name(CutOrigin origin) {
  switch (origin) {
    case CutOrigin::ArctanSector: return "arctan_sector";
    case CutOrigin::ArctanTangent: return "arctan_tangent";
    case CutOrigin::SdpSeparation: return "sdp_separation";
  }
  return "?";
}

CycleBasis cycle_basis(const Network& net) {
  const std::size_t n = net.buses.size();
  std::vector<int> parent(n, -1), parent_branch(n, -1), depth(n, 0);
  std::vector<bool> seen(n, false), in_tree(net.branches.size(), false);
  std::queue<std::size_t> queue;
  const std::size_t root = net.ref_bus();
  queue.push(root);
  seen[root] = true;
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop();
    for (std::size_t l : net.adjacency[i]) {
      const BranchRecord& br = net.branches[l];
      const std::size_t j =
          net.index_of(br.from) == i ? net.index_of(br.to) : net.index_of(br.from);
      if (seen[j]) continue;
      seen[j] = true;
      parent[j] = static_cast<int>(i);
      parent_branch[j] = static_cast<int>(l);
      depth[j] = depth[i] + 1;
      in_tree[l] = true;
      queue.push(j);
    }
  }

  CycleBasis basis;
  for (std::size_t l = 0; l < net.branches.size(); ++l) {
    if (in_tree[l]) continue;
    int a = static_cast<int>(net.index_of(net.branches[l].from));
    int b = static_cast<int>(net.index_of(net.branches[l].to));
    std::vector<int> a_nodes{a}, b_nodes{b};
    std::vector<int> a_edges, b_edges;
    while (depth[a] > depth[b]) {
      a_edges.push_back(parent_branch[a]);
      a = parent[a];
      a_nodes.push_back(a);
    }
    while (depth[b] > depth[a]) {
      b_edges.push_back(parent_branch[b]);
      b = parent[b];
      b_nodes.push_back(b);
    }
    while (a != b) {
      a_edges.push_back(parent_branch[a]);
      a = parent[a];
      a_nodes.push_back(a);
      b_edges.push_back(parent_branch[b]);
      b = parent[b];
      b_nodes.push_back(b);
    }
    // from-side up to the meeting bus, down the to-side, closed by branch l
    std::vector<int> buses = a_nodes;
    std::vector<int> branches = a_edges;
    for (std::size_t k = b_nodes.size() - 1; k-- > 0;) {
      buses.push_back(b_nodes[k]);
      branches.push_back(b_edges[k]);
    }
    branches.push_back(static_cast<int>(l));
    basis.cycles.push_back(std::move(buses));
    basis.branches.push_back(std::move(branches));
  }
  return basis;
}

std::vector<LinearCut> arctangent_envelopes(const Network& net, int line, int anchors,
                                            int period) {
  const BranchRecord& br = net.branches[line];
  const double spread = std::max(std::abs(br.angle_min), br.angle_max);
  if (spread >= kHalfPi || spread <= 0.0) return {};
  const BusRecord& bf = net.buses[net.index_of(br.from)];
  const BusRecord& bt = net.buses[net.index_of(br.to)];
  const double rmin = bf.vmin * bt.vmin;
  const double rmax = bf.vmax * bt.vmax;
  const double r0 = 0.5 * (rmin + rmax);
  const int fi = static_cast<int>(net.index_of(br.from));
  const int ti = static_cast<int>(net.index_of(br.to));

  std::vector<LinearCut> cuts;
  const double slope = std::tan(spread);
  for (double sign : {1.0, -1.0}) {
    LinearCut cut;
    cut.origin = CutOrigin::ArctanSector;
    cut.period = period;
    cut.rhs = 0.0;
    cut.terms = {{VarKind::SOff, line, period, sign},
                 {VarKind::COff, line, period, -slope}};
    cuts.push_back(std::move(cut));
  }

  // Upper plane at anchor a:  d + beta*c + gamma*s <= rhs, where d is the
  // from-minus-to angle. The pair (beta, gamma) makes the plane stationary at
  // the anchor on the reference-magnitude curve and supporting the far
  // endpoint; the right-hand side is then maximized exactly over the angle
  // box and both magnitude extremes, so validity never rests on the
  // construction. The lower plane at a is the mirror image of the upper
  // plane at -a.
  auto upper_plane = [&](double a) {
    const double det = -r0 * r0 * (1.0 - std::cos(a - spread));
    const double beta =
        (-r0 * (std::sin(a) - std::sin(spread)) - r0 * std::cos(a) * (spread - a)) /
        det;
    const double gamma =
        (r0 * std::sin(a) * (spread - a) - r0 * (std::cos(a) - std::cos(spread))) / det;
    const double rhs = support_max(1.0, beta, gamma, spread, rmin, rmax) + 1e-9;
    return std::array<double, 3>{beta, gamma, rhs};
  };
  for (int k = 0; k < anchors; ++k) {
    const double anchor = spread * (2.0 * (k + 1) / (anchors + 1) - 1.0);
    for (double sign : {1.0, -1.0}) {
      const auto [beta, gamma, rhs] = upper_plane(sign * anchor);
      LinearCut cut;
      cut.origin = CutOrigin::ArctanTangent;
      cut.period = period;
      cut.rhs = rhs;
      cut.terms = {{VarKind::Theta, fi, period, sign},
                   {VarKind::Theta, ti, period, -sign},
                   {VarKind::COff, line, period, beta},
                   {VarKind::SOff, line, period, sign * gamma}};
      cuts.push_back(std::move(cut));
    }
  }
  return cuts;
}

void add_angle_variables(ModelIR& model, const UcInstance& inst) {
  const Network& net = inst.network;
  const int ref = static_cast<int>(net.ref_bus());
  for (int t = 0; t < inst.horizon; ++t) {
    for (int i = 0; i < static_cast<int>(net.buses.size()); ++i) {
      if (model.find_variable(VarKind::Theta, i, t) < 0)
        model.add_variable(VarKind::Theta, i, t,
                           -std::numeric_limits<double>::infinity(),
                           std::numeric_limits<double>::infinity());
    }
    model.linear.push_back({{{model.require_variable(VarKind::Theta, ref, t), 1.0}},
                            Sense::EQ, 0.0, RowTag::RefAngle, ref, t});
    for (int l = 0; l < static_cast<int>(net.branches.size()); ++l) {
      const BranchRecord& br = net.branches[l];
      if (std::max(std::abs(br.angle_min), br.angle_max) >= kPi) continue;
      const int ti = model.require_variable(VarKind::Theta, net.index_of(br.from), t);
      const int tj = model.require_variable(VarKind::Theta, net.index_of(br.to), t);
      model.linear.push_back({{{ti, 1.0}, {tj, -1.0}}, Sense::LE, br.angle_max,
                              RowTag::AngleDiffBound, l, t});
      model.linear.push_back({{{ti, -1.0}, {tj, 1.0}}, Sense::LE, -br.angle_min,
                              RowTag::AngleDiffBound, l, t});
    }
  }
}

std::vector<LinearCut> add_arctangent_envelopes(ModelIR& model, const UcInstance& inst,
                                                int anchors) {
  std::vector<LinearCut> all;
  for (int l = 0; l < static_cast<int>(inst.network.branches.size()); ++l) {
    const std::vector<LinearCut> family =
        arctangent_envelopes(inst.network, l, anchors, 0);
    for (int t = 0; t < inst.horizon; ++t) {
      for (LinearCut cut : family) {
        cut.period = t;
        for (CutTerm& term : cut.terms) term.period = t;
        append_cut(model, cut);
        all.push_back(std::move(cut));
      }
    }
  }
  return all;
}

CycleCandidate extract_candidate(const ModelIR& model, const std::vector<double>& primal,
                                 const std::vector<int>& cycle_buses,
                                 const std::vector<int>& cycle_branches, int period) {
  CycleCandidate cand;
  for (int bus : cycle_buses)
    cand.c_diag.push_back(primal[model.require_variable(VarKind::CDiag, bus, period)]);
  for (int l : cycle_branches) {
    cand.c_off.push_back(primal[model.require_variable(VarKind::COff, l, period)]);
    cand.s_off.push_back(primal[model.require_variable(VarKind::SOff, l, period)]);
  }
  return cand;
}

std::optional<LinearCut> separate_cycle(const Network& net,
                                        const std::vector<int>& cycle_buses,
                                        const std::vector<int>& cycle_branches,
                                        const CycleCandidate& candidate, int period,
                                        double eps_cut) {
  const int dim = static_cast<int>(cycle_buses.size());
  if (dim < 3) return std::nullopt;  // a two-bus loop carries no new information

  std::vector<int> pos_of(net.buses.size(), -1);
  for (int k = 0; k < dim; ++k) pos_of[cycle_buses[k]] = k;

  PartialHermitian pattern;
  pattern.dim = dim;
  pattern.diag = candidate.c_diag;
  struct EdgeRef {
    int branch;
    bool flipped;  // pattern row is the branch to-bus
  };
  std::vector<EdgeRef> edges;
  for (std::size_t e = 0; e < cycle_branches.size(); ++e) {
    const BranchRecord& br = net.branches[cycle_branches[e]];
    const int pf = pos_of[net.index_of(br.from)];
    const int pt = pos_of[net.index_of(br.to)];
    PartialHermitian::OffDiag entry;
    entry.row = std::min(pf, pt);
    entry.col = std::max(pf, pt);
    const bool flipped = pf > pt;
    entry.re = candidate.c_off[e];
    entry.im = flipped ? -candidate.s_off[e] : candidate.s_off[e];
    pattern.entries.push_back(entry);
    edges.push_back({cycle_branches[e], flipped});
  }

  PsdProjectOptions proj_opts;
  proj_opts.max_iters = 20000;
  proj_opts.stop_below = 0.25 * std::sqrt(eps_cut);
  const PsdProjection proj = project_to_psd_completable(pattern, proj_opts);
  if (proj.distance * proj.distance < eps_cut) return std::nullopt;

  PartialHermitian normal = proj.normal;
  // eigenvalue shift: the embedded outward normal must be negative
  // semidefinite for the cut to hold over the whole completable cone
  PartialHermitian negated = normal;
  for (auto& d : negated.diag) d = -d;
  for (auto& e : negated.entries) {
    e.re = -e.re;
    e.im = -e.im;
  }
  const double min_eig = embedded_min_eigenvalue(negated);
  if (min_eig < 0.0)
    for (auto& d : normal.diag) d += min_eig;

  const double violation = pattern_dot(normal, pattern);
  if (violation < eps_cut) return std::nullopt;

  LinearCut cut;
  cut.origin = CutOrigin::SdpSeparation;
  cut.period = period;
  cut.rhs = 0.0;
  cut.violation_at_generation = violation;
  for (int k = 0; k < dim; ++k)
    cut.terms.push_back({VarKind::CDiag, cycle_buses[k], period, normal.diag[k]});
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& entry = normal.entries[e];
    cut.terms.push_back({VarKind::COff, edges[e].branch, period, 2.0 * entry.re});
    cut.terms.push_back({VarKind::SOff, edges[e].branch, period,
                         edges[e].flipped ? -2.0 * entry.im : 2.0 * entry.im});
  }
  return cut;
}

LinearRow cut_to_row(const ModelIR& model, const LinearCut& cut) {
  LinearRow row;
  row.sense = Sense::LE;
  row.rhs = cut.rhs;
  row.entity = -1;
  row.period = cut.period;
  switch (cut.origin) {
    case CutOrigin::ArctanSector: row.tag = RowTag::CutArctanSector; break;
    case CutOrigin::ArctanTangent: row.tag = RowTag::CutArctanTangent; break;
    case CutOrigin::SdpSeparation: row.tag = RowTag::CutSdp; break;
  }
  for (const CutTerm& term : cut.terms)
    row.terms.push_back(
        {model.require_variable(term.kind, term.entity, term.period), term.coeff});
  return row;
}

void append_cut(ModelIR& model, const LinearCut& cut) {
  model.linear.push_back(cut_to_row(model, cut));
}

CutLoopResult cut_loop(ModelIR& model, const UcInstance& inst, const CycleBasis& basis,
                       const CutLoopOptions& opts) {
  CutLoopResult result;
  for (int round = 0; round < opts.rounds; ++round) {
    ConicSolution relax;
    try {
      relax = solve_conic(model, opts.relaxation);
    } catch (const ValidationError&) {
      result.aborted = true;
      return result;
    }
    if (relax.status != SolveStatus::Optimal) {
      result.aborted = true;
      return result;
    }
    result.lb_trace.push_back(relax.objective);

    struct Task {
      int cycle;
      int period;
    };
    std::vector<Task> tasks;
    for (int t = 0; t < inst.horizon; ++t)
      for (std::size_t k = 0; k < basis.cycles.size(); ++k)
        tasks.push_back({static_cast<int>(k), t});

    std::vector<std::optional<LinearCut>> found(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
        const Task& task = tasks[i];
        const CycleCandidate cand =
            extract_candidate(model, relax.primal, basis.cycles[task.cycle],
                              basis.branches[task.cycle], task.period);
        found[i] = separate_cycle(inst.network, basis.cycles[task.cycle],
                                  basis.branches[task.cycle], cand, task.period,
                                  opts.eps_cut);
      }
    };
    std::vector<std::thread> pool;
    const int workers = std::max(1, opts.workers);
    for (int w = 0; w < workers - 1; ++w) pool.emplace_back(worker);
    worker();
    for (auto& thread : pool) thread.join();

    int added = 0;
    for (const auto& cut : found) {
      if (!cut) continue;
      append_cut(model, *cut);
      result.cuts.push_back(*cut);
      ++added;
    }
    if (added == 0) break;
  }
  return result;
}

std::string dump_cuts(const std::vector<LinearCut>& cuts) {
  std::ostringstream os;
  os.precision(17);
  for (const LinearCut& cut : cuts) {
    os << cut_origin_name(cut.origin) << " t=" << cut.period + 1 << " |";
    for (const CutTerm& term : cut.terms) {
      const char* kind = term.kind == VarKind::CDiag   ? "c"
                         : term.kind == VarKind::COff  ? "cij"
                         : term.kind == VarKind::SOff  ? "sij"
                         : term.kind == VarKind::Theta ? "th"
                                                       : "x";
      os << " " << term.coeff << "*" << kind << "[" << term.entity << "]";
    }
    os << " <= " << cut.rhs << "\n";
  }
  return os.str();
}

}  // namespace acuc
