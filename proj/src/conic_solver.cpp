#include "acuc/conic_solver.hpp"

#include <Eigen/SparseCholesky>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cmath>

#include "acuc/network.hpp"
#include "conic_internal.hpp"

namespace acuc {

using internal::ConeLayout;
using internal::Lowered;
using internal::SpMat;
using internal::Vec;

const char* solve_status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unbounded: return "unbounded";
    case SolveStatus::NumericalFailure: return "numerical_failure";
    case SolveStatus::TimeLimit: return "time_limit";
  }
  return "?";
}

namespace {

constexpr double kReg = 1e-8;        // static KKT regularization
constexpr double kStepFrac = 0.99;   // fraction of the step to the boundary

// Nesterov-Todd scaling of the symmetric cone R+^l x SOC x ... and the
// associated Jordan-algebra operations on scaled points.
class Scaling {
 public:
  explicit Scaling(const ConeLayout& cone) : cone_(cone) {}

  bool compute(const Vec& s, const Vec& z) {
    const int l = cone_.l;
    w_lp_sq_ = Vec(l);
    lambda = Vec(s.size());
    for (int i = 0; i < l; ++i) {
      if (s[i] <= 0.0 || z[i] <= 0.0) return false;
      w_lp_sq_[i] = s[i] / z[i];
      lambda[i] = std::sqrt(s[i] * z[i]);
    }
    soc_.clear();
    int off = l;
    for (int dim : cone_.soc_dims) {
      SocScale blk;
      const auto sb = s.segment(off, dim);
      const auto zb = z.segment(off, dim);
      const double sres = sb[0] * sb[0] - sb.tail(dim - 1).squaredNorm();
      const double zres = zb[0] * zb[0] - zb.tail(dim - 1).squaredNorm();
      if (sres <= 0.0 || zres <= 0.0 || sb[0] <= 0.0 || zb[0] <= 0.0) return false;
      const Vec sbar = sb / std::sqrt(sres);
      Vec zbar = zb / std::sqrt(zres);
      const double gamma = std::sqrt((1.0 + sbar.dot(zbar)) / 2.0);
      Vec jz = zbar;
      jz.tail(dim - 1) *= -1.0;
      Vec wbar = (sbar + jz) / (2.0 * gamma);
      blk.eta = std::pow(sres / zres, 0.25);
      blk.wbar = wbar;
      const double w0 = wbar[0];
      const Vec w1 = wbar.tail(dim - 1);
      blk.W = Eigen::MatrixXd(dim, dim);
      blk.W(0, 0) = w0;
      blk.W.block(0, 1, 1, dim - 1) = w1.transpose();
      blk.W.block(1, 0, dim - 1, 1) = w1;
      blk.W.block(1, 1, dim - 1, dim - 1) =
          Eigen::MatrixXd::Identity(dim - 1, dim - 1) + w1 * w1.transpose() / (1.0 + w0);
      blk.Winv = blk.W;
      blk.Winv.block(0, 1, 1, dim - 1) *= -1.0;
      blk.Winv.block(1, 0, dim - 1, 1) *= -1.0;
      blk.W *= blk.eta;
      blk.Winv /= blk.eta;
      blk.W2 = Eigen::MatrixXd(dim, dim);
      blk.W2(0, 0) = 2.0 * w0 * w0 - 1.0;
      blk.W2.block(0, 1, 1, dim - 1) = 2.0 * w0 * w1.transpose();
      blk.W2.block(1, 0, dim - 1, 1) = 2.0 * w0 * w1;
      blk.W2.block(1, 1, dim - 1, dim - 1) =
          Eigen::MatrixXd::Identity(dim - 1, dim - 1) + 2.0 * w1 * w1.transpose();
      blk.W2 *= blk.eta * blk.eta;
      lambda.segment(off, dim) = blk.W * zb;
      soc_.push_back(std::move(blk));
      off += dim;
    }
    return true;
  }

  Vec mult_w(const Vec& v) const {
    Vec out(v.size());
    out.head(cone_.l) = w_lp_sq_.array().sqrt() * v.head(cone_.l).array();
    int off = cone_.l;
    for (std::size_t k = 0; k < soc_.size(); ++k) {
      const int dim = cone_.soc_dims[k];
      out.segment(off, dim) = soc_[k].W * v.segment(off, dim);
      off += dim;
    }
    return out;
  }

  Vec mult_winv(const Vec& v) const {
    Vec out(v.size());
    out.head(cone_.l) = v.head(cone_.l).array() / w_lp_sq_.array().sqrt();
    int off = cone_.l;
    for (std::size_t k = 0; k < soc_.size(); ++k) {
      const int dim = cone_.soc_dims[k];
      out.segment(off, dim) = soc_[k].Winv * v.segment(off, dim);
      off += dim;
    }
    return out;
  }

  const Eigen::MatrixXd& soc_w2(std::size_t k) const { return soc_[k].W2; }
  double lp_w2(int i) const { return w_lp_sq_[i]; }

  // Jordan product u o v.
  Vec jordan(const Vec& u, const Vec& v) const {
    Vec out(u.size());
    out.head(cone_.l) = u.head(cone_.l).array() * v.head(cone_.l).array();
    int off = cone_.l;
    for (int dim : cone_.soc_dims) {
      const auto ub = u.segment(off, dim);
      const auto vb = v.segment(off, dim);
      out[off] = ub.dot(vb);
      out.segment(off + 1, dim - 1) =
          ub[0] * vb.tail(dim - 1) + vb[0] * ub.tail(dim - 1);
      off += dim;
    }
    return out;
  }

  // Solves lambda o u = v for u.
  Vec jordan_div_lambda(const Vec& v) const {
    Vec out(v.size());
    out.head(cone_.l) = v.head(cone_.l).array() / lambda.head(cone_.l).array();
    int off = cone_.l;
    for (int dim : cone_.soc_dims) {
      const auto lb = lambda.segment(off, dim);
      const auto vb = v.segment(off, dim);
      const double det = lb[0] * lb[0] - lb.tail(dim - 1).squaredNorm();
      const double u0 = (lb[0] * vb[0] - lb.tail(dim - 1).dot(vb.tail(dim - 1))) / det;
      out[off] = u0;
      out.segment(off + 1, dim - 1) = (vb.tail(dim - 1) - u0 * lb.tail(dim - 1)) / lb[0];
      off += dim;
    }
    return out;
  }

  Vec identity() const {
    Vec e = Vec::Zero(cone_.m);
    e.head(cone_.l).setOnes();
    int off = cone_.l;
    for (int dim : cone_.soc_dims) {
      e[off] = 1.0;
      off += dim;
    }
    return e;
  }

  // Largest step alpha with point + alpha * dir staying in the cone.
  double step_to_boundary(const Vec& point, const Vec& dir) const {
    double alpha = std::numeric_limits<double>::infinity();
    for (int i = 0; i < cone_.l; ++i)
      if (dir[i] < 0.0) alpha = std::min(alpha, -point[i] / dir[i]);
    int off = cone_.l;
    for (int dim : cone_.soc_dims) {
      const auto pb = point.segment(off, dim);
      const auto db = dir.segment(off, dim);
      const double a = db[0] * db[0] - db.tail(dim - 1).squaredNorm();
      const double b = pb[0] * db[0] - pb.tail(dim - 1).dot(db.tail(dim - 1));
      const double c = pb[0] * pb[0] - pb.tail(dim - 1).squaredNorm();
      double root = std::numeric_limits<double>::infinity();
      const double disc = b * b - a * c;
      if (a < 0.0) {
        root = (-b - std::sqrt(std::max(0.0, disc))) / a;
      } else if (disc >= 0.0) {
        const double sd = std::sqrt(disc);
        if (-b - sd > 0.0 && a > 0.0)
          root = (-b - sd) / a;
        else if (a == 0.0 && b < 0.0)
          root = -c / (2.0 * b);
      }
      if (db[0] < 0.0) root = std::min(root, -pb[0] / db[0]);
      if (root > 0.0) alpha = std::min(alpha, root);
      off += dim;
    }
    return alpha;
  }

  Vec lambda;

 private:
  struct SocScale {
    double eta = 1.0;
    Vec wbar;
    Eigen::MatrixXd W, Winv, W2;
  };
  ConeLayout cone_;
  Vec w_lp_sq_;
  std::vector<SocScale> soc_;
};

struct KktSolver {
  const Lowered& low;
  int n, p, m, total;
  SpMat kkt;
  Eigen::SimplicialLDLT<SpMat> ldlt;
  bool analyzed = false;
  std::vector<Eigen::Triplet<double>> triplets;

  explicit KktSolver(const Lowered& lowered)
      : low(lowered),
        n(lowered.n),
        p(static_cast<int>(lowered.b.size())),
        m(lowered.cone.m),
        total(n + p + m) {}

  bool factor(const Scaling& scaling) {
    triplets.clear();
    for (int i = 0; i < n; ++i) triplets.emplace_back(i, i, kReg);
    for (int k = 0; k < low.A.outerSize(); ++k)
      for (SpMat::InnerIterator it(low.A, k); it; ++it)
        triplets.emplace_back(n + static_cast<int>(it.row()),
                              static_cast<int>(it.col()), it.value());
    for (int r = 0; r < p; ++r) triplets.emplace_back(n + r, n + r, -kReg);
    for (int k = 0; k < low.G.outerSize(); ++k)
      for (SpMat::InnerIterator it(low.G, k); it; ++it)
        triplets.emplace_back(n + p + static_cast<int>(it.row()),
                              static_cast<int>(it.col()), it.value());
    for (int i = 0; i < low.cone.l; ++i)
      triplets.emplace_back(n + p + i, n + p + i, -scaling.lp_w2(i) - kReg);
    int off = low.cone.l;
    for (std::size_t k = 0; k < low.cone.soc_dims.size(); ++k) {
      const int dim = low.cone.soc_dims[k];
      const Eigen::MatrixXd& w2 = scaling.soc_w2(k);
      for (int a = 0; a < dim; ++a)
        for (int b = 0; b <= a; ++b)
          triplets.emplace_back(n + p + off + a, n + p + off + b,
                                -w2(a, b) - (a == b ? kReg : 0.0));
      off += dim;
    }
    kkt.resize(total, total);
    kkt.setFromTriplets(triplets.begin(), triplets.end());
    if (!analyzed) {
      ldlt.analyzePattern(kkt);
      analyzed = true;
    }
    ldlt.factorize(kkt);
    return ldlt.info() == Eigen::Success;
  }

  // Applies the exact (unregularized) KKT operator using the lower triangle.
  Vec apply(const Vec& v) const {
    Vec out = kkt.selfadjointView<Eigen::Lower>() * v;
    out.head(n) -= kReg * v.head(n);
    out.tail(p + m) += kReg * v.tail(p + m);
    return out;
  }

  Vec solve(const Vec& rhs) const {
    Vec sol = ldlt.solve(rhs);
    for (int round = 0; round < 3; ++round) {
      Vec residue = rhs - apply(sol);
      sol += ldlt.solve(residue);
    }
    return sol;
  }
};

struct HsdeState {
  Vec x, y, z, s;
  double tau = 1.0, kappa = 1.0;
};

struct ExitInfo {
  SolveStatus status = SolveStatus::NumericalFailure;
  double pres = 0.0, dres = 0.0, relgap = 0.0;
  double pobj = 0.0;
  int iterations = 0;
};

class HsdeIpm {
 public:
  HsdeIpm(const Lowered& low, const SolverOptions& opts, KktSolver& kkt)
      : low_(low), opts_(opts), kkt_(kkt), scaling_(low.cone) {}

  // loose certificate check used when the iteration stalls short of the
  // requested tolerances
  SolveStatus classify_stall(const HsdeState& st) const {
    const double by = p() > 0 ? low_.b.dot(st.y) : 0.0;
    const double hz = low_.h.dot(st.z);
    const double cx = low_.c.dot(st.x);
    const double rhs_norm =
        std::max({1.0, p() > 0 ? low_.b.lpNorm<Eigen::Infinity>() : 0.0,
                  low_.h.lpNorm<Eigen::Infinity>()});
    if (by + hz < -1e-10) {
      const double cert = (low_.A.transpose() * st.y + low_.G.transpose() * st.z)
                              .lpNorm<Eigen::Infinity>() /
                          (-(by + hz));
      if (cert <= 1e-5 * rhs_norm) return SolveStatus::Infeasible;
    }
    if (cx < -1e-10) {
      const double cert =
          std::max(p() > 0 ? (low_.A * st.x).lpNorm<Eigen::Infinity>() : 0.0,
                   (low_.G * st.x + st.s).lpNorm<Eigen::Infinity>()) /
          (-cx);
      if (cert <= 1e-5) return SolveStatus::Unbounded;
    }
    return SolveStatus::NumericalFailure;
  }

  ExitInfo run(HsdeState& st) {
    const auto start = std::chrono::steady_clock::now();
    ExitInfo exit;
    if (!initialize(st)) return exit;
    const int order = low_.cone.order() + 1;
    double alpha_prev = 1.0;
    for (int iter = 0; iter < opts_.max_iters; ++iter) {
      exit.iterations = iter;
      const Vec r1 = low_.A.transpose() * st.y + low_.G.transpose() * st.z +
                     low_.c * st.tau;
      const Vec r2 = low_.A * st.x - low_.b * st.tau;
      const Vec r3 = low_.G * st.x + st.s - low_.h * st.tau;
      const double cx = low_.c.dot(st.x);
      const double by = p() > 0 ? low_.b.dot(st.y) : 0.0;
      const double hz = low_.h.dot(st.z);
      const double r4 = st.kappa + cx + by + hz;

      exit.pobj = cx / st.tau;
      const double rhs_norm = std::max({1.0, low_.b.size() > 0
                                                 ? low_.b.lpNorm<Eigen::Infinity>()
                                                 : 0.0,
                                        low_.h.lpNorm<Eigen::Infinity>()});
      exit.pres = std::max(p() > 0 ? r2.lpNorm<Eigen::Infinity>() : 0.0,
                           r3.lpNorm<Eigen::Infinity>()) /
                  (st.tau * rhs_norm);
      exit.dres = r1.lpNorm<Eigen::Infinity>() /
                  (st.tau * std::max(1.0, low_.c.lpNorm<Eigen::Infinity>()));
      const double gap_abs = st.s.dot(st.z) / (st.tau * st.tau);
      exit.relgap = gap_abs / std::max(1.0, std::abs(exit.pobj));

      if (std::getenv("ACUC_IPM_TRACE"))
        std::fprintf(stderr, "it %3d pres %.2e dres %.2e gap %.2e tau %.2e kappa %.2e\n",
                     iter, exit.pres, exit.dres, exit.relgap, st.tau, st.kappa);
      if (exit.pres <= opts_.tol_feas && exit.dres <= opts_.tol_feas &&
          exit.relgap <= opts_.tol_gap) {
        exit.status = SolveStatus::Optimal;
        return exit;
      }
      // infeasibility certificates
      if (by + hz < -1e-12) {
        const double cert = (low_.A.transpose() * st.y + low_.G.transpose() * st.z)
                                .lpNorm<Eigen::Infinity>() /
                            (-(by + hz));
        if (cert <= opts_.tol_feas * 0.5 * rhs_norm) {
          exit.status = SolveStatus::Infeasible;
          return exit;
        }
      }
      if (cx < -1e-12) {
        const double cert =
            std::max(p() > 0 ? (low_.A * st.x).lpNorm<Eigen::Infinity>() : 0.0,
                     (low_.G * st.x + st.s).lpNorm<Eigen::Infinity>()) /
            (-cx);
        if (cert <= opts_.tol_feas * 0.5) {
          exit.status = SolveStatus::Unbounded;
          return exit;
        }
      }
      const double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
              .count();
      if (elapsed > opts_.time_limit_s) {
        exit.status = SolveStatus::TimeLimit;
        return exit;
      }

      if (!scaling_.compute(st.s, st.z)) return exit;
      if (!kkt_.factor(scaling_)) return exit;

      Vec rhs1(total());
      rhs1.head(n()) = -low_.c;
      rhs1.segment(n(), p()) = low_.b;
      rhs1.tail(m()) = low_.h;
      const Vec u1 = kkt_.solve(rhs1);
      const double q1 = low_.c.dot(u1.head(n())) +
                        (p() > 0 ? low_.b.dot(u1.segment(n(), p())) : 0.0) +
                        low_.h.dot(u1.tail(m()));

      const double mu = (st.s.dot(st.z) + st.tau * st.kappa) / order;
      const Vec lam_sq = scaling_.jordan(scaling_.lambda, scaling_.lambda);

      // affine direction
      Direction aff = direction(st, r1, r2, r3, r4, u1, q1, -lam_sq,
                                -st.tau * st.kappa, 1.0);
      const double alpha_aff = max_step(st, aff);
      const double sigma =
          std::min(0.999, std::pow(1.0 - std::min(1.0, alpha_aff), 3.0));

      // combined direction with correction
      const Vec corr =
          scaling_.jordan(scaling_.mult_winv(aff.ds), scaling_.mult_w(aff.dz));
      Vec dlam = -lam_sq + sigma * mu * scaling_.identity() - corr;
      const double dtk = -st.tau * st.kappa + sigma * mu - aff.dtau * aff.dkappa;
      Direction dir =
          direction(st, r1, r2, r3, r4, u1, q1, dlam, dtk, 1.0 - sigma);
      const double alpha = std::min(1.0, kStepFrac * max_step(st, dir));
      if (!std::isfinite(alpha) || alpha < 1e-11) {
        if (alpha_prev < 1e-11) {  // stalled twice
          exit.status = classify_stall(st);
          return exit;
        }
        alpha_prev = alpha;
        continue;
      }
      alpha_prev = alpha;

      st.x += alpha * dir.dx;
      st.y += alpha * dir.dy;
      st.z += alpha * dir.dz;
      st.s += alpha * dir.ds;
      st.tau += alpha * dir.dtau;
      st.kappa += alpha * dir.dkappa;
      // the embedding is homogeneous: renormalizing keeps residual ratios
      // well-scaled when tau drifts
      if (st.tau < 0.5 || st.tau > 2.0) {
        const double inv = 1.0 / st.tau;
        st.x *= inv;
        st.y *= inv;
        st.z *= inv;
        st.s *= inv;
        st.kappa *= inv;
        st.tau = 1.0;
      }
    }
    exit.iterations = opts_.max_iters;
    exit.status = classify_stall(st);
    return exit;
  }

 private:
  struct Direction {
    Vec dx, dy, dz, ds;
    double dtau = 0.0, dkappa = 0.0;
  };

  int n() const { return low_.n; }
  int p() const { return static_cast<int>(low_.b.size()); }
  int m() const { return low_.cone.m; }
  int total() const { return n() + p() + m(); }

  bool initialize(HsdeState& st) {
    Scaling unit(low_.cone);
    const Vec e = unit.identity();
    if (!unit.compute(e, e)) return false;  // W = I
    if (!kkt_.factor(unit)) return false;
    Vec rhs1 = Vec::Zero(total());
    rhs1.segment(n(), p()) = low_.b;
    rhs1.tail(m()) = low_.h;
    const Vec sol1 = kkt_.solve(rhs1);
    Vec rhs2 = Vec::Zero(total());
    rhs2.head(n()) = -low_.c;
    const Vec sol2 = kkt_.solve(rhs2);

    st.x = sol1.head(n());
    st.s = -sol1.tail(m());
    st.y = sol2.segment(n(), p());
    st.z = sol2.tail(m());
    st.tau = 1.0;
    st.kappa = 1.0;
    shift_into_cone(st.s);
    shift_into_cone(st.z);
    return true;
  }

  void shift_into_cone(Vec& v) const {
    double margin = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < low_.cone.l; ++i) margin = std::max(margin, -v[i]);
    int off = low_.cone.l;
    for (int dim : low_.cone.soc_dims) {
      margin =
          std::max(margin, v.segment(off + 1, dim - 1).norm() - v[off]);
      off += dim;
    }
    if (margin >= -1e-10) {
      const double bump = 1.0 + margin;
      for (int i = 0; i < low_.cone.l; ++i) v[i] += bump;
      off = low_.cone.l;
      for (int dim : low_.cone.soc_dims) {
        v[off] += bump;
        off += dim;
      }
    }
  }

  Direction direction(const HsdeState& st, const Vec& r1, const Vec& r2, const Vec& r3,
                      double r4, const Vec& u1, double q1, const Vec& dlam,
                      double dtk, double res_factor) {
    const Vec dsb = scaling_.jordan_div_lambda(dlam);
    Vec rhs(total());
    rhs.head(n()) = -res_factor * r1;
    rhs.segment(n(), p()) = -res_factor * r2;
    rhs.tail(m()) = -res_factor * r3 - scaling_.mult_w(dsb);
    const Vec u2 = kkt_.solve(rhs);
    const double q2 = low_.c.dot(u2.head(n())) +
                      (p() > 0 ? low_.b.dot(u2.segment(n(), p())) : 0.0) +
                      low_.h.dot(u2.tail(m()));
    Direction dir;
    dir.dtau = (-res_factor * r4 - dtk / st.tau - q2) / (q1 - st.kappa / st.tau);
    dir.dx = u2.head(n()) + dir.dtau * u1.head(n());
    dir.dy = u2.segment(n(), p()) + dir.dtau * u1.segment(n(), p());
    dir.dz = u2.tail(m()) + dir.dtau * u1.tail(m());
    dir.ds = scaling_.mult_w(dsb - scaling_.mult_w(dir.dz));
    dir.dkappa = (dtk - st.kappa * dir.dtau) / st.tau;
    return dir;
  }

  double max_step(const HsdeState& st, const Direction& dir) {
    double alpha = scaling_.step_to_boundary(scaling_.lambda, scaling_.mult_winv(dir.ds));
    alpha = std::min(alpha,
                     scaling_.step_to_boundary(scaling_.lambda, scaling_.mult_w(dir.dz)));
    if (dir.dtau < 0.0) alpha = std::min(alpha, -st.tau / dir.dtau);
    if (dir.dkappa < 0.0) alpha = std::min(alpha, -st.kappa / dir.dkappa);
    return alpha;
  }

  const Lowered& low_;
  const SolverOptions& opts_;
  KktSolver& kkt_;
  Scaling scaling_;
};

}  // namespace

struct RelaxationSolver::Impl {
  Lowered low;
  SolverOptions opts;
  KktSolver kkt;
  const ModelIR* model;

  Impl(const ModelIR& m, const SolverOptions& o)
      : low(internal::lower_model(m)), opts(o), kkt(low), model(&m) {}
};

RelaxationSolver::RelaxationSolver(const ModelIR& model, const SolverOptions& opts)
    : impl_(std::make_unique<Impl>(model, opts)) {
  if (impl_->low.cone.m == 0)
    throw ValidationError("model has no inequality rows or cones");
}

RelaxationSolver::~RelaxationSolver() = default;
RelaxationSolver::RelaxationSolver(RelaxationSolver&&) noexcept = default;
RelaxationSolver& RelaxationSolver::operator=(RelaxationSolver&&) noexcept = default;

void RelaxationSolver::set_variable_bounds(int var, double lo, double hi) {
  internal::update_bound_rows(impl_->low, var, lo, hi);
}

void RelaxationSolver::reset_variable_bounds() {
  const ModelIR& model = *impl_->model;
  for (int v = 0; v < static_cast<int>(model.variables.size()); ++v) {
    const VariableRef& var = model.variables[v];
    if (impl_->low.lo_row_of_var[v] >= 0 && impl_->low.hi_row_of_var[v] >= 0)
      internal::update_bound_rows(impl_->low, v, var.lo, var.hi);
  }
}

ConicSolution RelaxationSolver::solve() {
  Lowered& low = impl_->low;
  const ModelIR& model = *impl_->model;
  HsdeState st;
  HsdeIpm ipm(low, impl_->opts, impl_->kkt);
  const ExitInfo exit = ipm.run(st);

  ConicSolution sol;
  sol.status = exit.status;
  sol.iterations = exit.iterations;
  sol.primal_infeas = exit.pres;
  sol.dual_infeas = exit.dres;
  sol.gap = exit.relgap;
  if ((exit.status == SolveStatus::Optimal || exit.status == SolveStatus::TimeLimit) &&
      st.tau > 1e-12) {
    sol.primal.resize(model.variables.size());
    for (int v = 0; v < low.n; ++v)
      sol.primal[v] = low.col_scale[v] * st.x[v] / st.tau;
    sol.objective = low.c.dot(st.x) / st.tau / low.cost_scale + low.obj_constant;
    const double by = low.b.size() > 0 ? low.b.dot(st.y) : 0.0;
    sol.dual_objective =
        -(by + low.h.dot(st.z)) / st.tau / low.cost_scale + low.obj_constant;
    sol.duals_linear.assign(model.linear.size(), 0.0);
    for (std::size_t r = 0; r < model.linear.size(); ++r) {
      const int ar = low.eq_row_of_linear[r];
      const int gr = low.ineq_row_of_linear[r];
      if (ar >= 0)
        sol.duals_linear[r] =
            low.row_scale_a[ar] * st.y[ar] / st.tau / low.cost_scale;
      else if (gr >= 0)
        sol.duals_linear[r] =
            low.row_scale_g[gr] * st.z[gr] / st.tau / low.cost_scale;
    }
  }
  return sol;
}

ConicSolution solve_conic(const ModelIR& model, const SolverOptions& opts) {
  RelaxationSolver solver(model, opts);
  return solver.solve();
}

}  // namespace acuc
