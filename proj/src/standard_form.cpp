#include <algorithm>
#include <cmath>

#include "acuc/network.hpp"
#include "conic_internal.hpp"

namespace acuc::internal {
namespace {

struct Triplets {
  std::vector<Eigen::Triplet<double>> entries;
  void add(int row, int col, double value) {
    if (value != 0.0) entries.emplace_back(row, col, value);
  }
};

bool finite(double v) { return std::isfinite(v); }

}  // namespace

Lowered lower_model(const ModelIR& model) {
  Lowered low;
  low.n = static_cast<int>(model.variables.size());
  low.obj_constant = model.objective_constant;

  low.c = Vec::Zero(low.n);
  for (const Term& t : model.objective) low.c[t.var] += t.coeff;

  // equality rows
  Triplets ta;
  std::vector<double> b_entries;
  low.eq_row_of_linear.assign(model.linear.size(), -1);
  low.ineq_row_of_linear.assign(model.linear.size(), -1);
  low.ineq_sign.assign(model.linear.size(), 0.0);
  for (std::size_t r = 0; r < model.linear.size(); ++r) {
    const LinearRow& row = model.linear[r];
    if (row.sense != Sense::EQ) continue;
    const int ar = static_cast<int>(b_entries.size());
    low.eq_row_of_linear[r] = ar;
    for (const Term& t : row.terms) ta.add(ar, t.var, t.coeff);
    b_entries.push_back(row.rhs);
  }

  // cone rows: nonnegative block first
  Triplets tg;
  std::vector<double> h_entries;
  auto push_g_row = [&](double rhs) {
    h_entries.push_back(rhs);
    return static_cast<int>(h_entries.size()) - 1;
  };

  for (std::size_t r = 0; r < model.linear.size(); ++r) {
    const LinearRow& row = model.linear[r];
    if (row.sense == Sense::EQ) continue;
    const double sign = row.sense == Sense::LE ? 1.0 : -1.0;
    const int gr = push_g_row(sign * row.rhs);
    low.ineq_row_of_linear[r] = gr;
    low.ineq_sign[r] = sign;
    for (const Term& t : row.terms) tg.add(gr, t.var, sign * t.coeff);
  }

  low.lo_row_of_var.assign(low.n, -1);
  low.hi_row_of_var.assign(low.n, -1);
  for (int v = 0; v < low.n; ++v) {
    const VariableRef& var = model.variables[v];
    if (finite(var.hi)) {
      const int gr = push_g_row(var.hi);
      low.hi_row_of_var[v] = gr;
      tg.add(gr, v, 1.0);
    }
    if (finite(var.lo)) {
      const int gr = push_g_row(-var.lo);
      low.lo_row_of_var[v] = gr;
      tg.add(gr, v, -1.0);
    }
  }
  low.cone.l = static_cast<int>(h_entries.size());

  auto push_affine_row = [&](const Affine& terms, double constant, double sign) {
    // encodes s_row = constant + sign * (terms . x)  via G row = -sign*terms
    const int gr = push_g_row(constant);
    for (const Term& t : terms) tg.add(gr, t.var, -sign * t.coeff);
    return gr;
  };

  for (const SocRow& cone : model.soc) {
    if (cone.vec_terms.size() != cone.vec_const.size() || cone.vec_terms.empty())
      throw ValidationError("second-order cone with inconsistent dimensions");
    push_affine_row(cone.rhs_terms, cone.rhs_const, 1.0);
    for (std::size_t k = 0; k < cone.vec_terms.size(); ++k)
      push_affine_row(cone.vec_terms[k], cone.vec_const[k], 1.0);
    low.cone.soc_dims.push_back(static_cast<int>(cone.vec_terms.size()) + 1);
  }
  for (const RotatedSocRow& cone : model.rsoc) {
    if (cone.vec_terms.size() != cone.vec_const.size() || cone.vec_terms.empty())
      throw ValidationError("rotated cone with inconsistent dimensions");
    // ||vec||^2 <= u*w  <=>  ||(2 vec; u - w)|| <= u + w
    Affine top = cone.u_terms;
    for (const Term& t : cone.w_terms) top.push_back(t);
    push_affine_row(top, cone.u_const + cone.w_const, 1.0);
    for (std::size_t k = 0; k < cone.vec_terms.size(); ++k) {
      Affine doubled = cone.vec_terms[k];
      for (Term& t : doubled) t.coeff *= 2.0;
      push_affine_row(doubled, 2.0 * cone.vec_const[k], 1.0);
    }
    Affine diff = cone.u_terms;
    for (const Term& t : cone.w_terms) diff.push_back({t.var, -t.coeff});
    push_affine_row(diff, cone.u_const - cone.w_const, 1.0);
    low.cone.soc_dims.push_back(static_cast<int>(cone.vec_terms.size()) + 2);
  }
  low.cone.m = static_cast<int>(h_entries.size());

  const int p = static_cast<int>(b_entries.size());
  low.A.resize(p, low.n);
  low.A.setFromTriplets(ta.entries.begin(), ta.entries.end());
  low.b = Eigen::Map<Vec>(b_entries.data(), p);
  low.G.resize(low.cone.m, low.n);
  low.G.setFromTriplets(tg.entries.begin(), tg.entries.end());
  low.h = Eigen::Map<Vec>(h_entries.data(), low.cone.m);

  // Ruiz equilibration; SOC blocks share a single row factor.
  low.col_scale = Vec::Ones(low.n);
  low.row_scale_a = Vec::Ones(p);
  low.row_scale_g = Vec::Ones(low.cone.m);
  for (int pass = 0; pass < 6; ++pass) {
    Vec col_max = Vec::Zero(low.n);
    Vec row_max_a = Vec::Zero(p);
    Vec row_max_g = Vec::Zero(low.cone.m);
    for (int k = 0; k < low.A.outerSize(); ++k)
      for (SpMat::InnerIterator it(low.A, k); it; ++it) {
        const double a = std::abs(it.value());
        col_max[it.col()] = std::max(col_max[it.col()], a);
        row_max_a[it.row()] = std::max(row_max_a[it.row()], a);
      }
    for (int k = 0; k < low.G.outerSize(); ++k)
      for (SpMat::InnerIterator it(low.G, k); it; ++it) {
        const double a = std::abs(it.value());
        col_max[it.col()] = std::max(col_max[it.col()], a);
        row_max_g[it.row()] = std::max(row_max_g[it.row()], a);
      }
    // uniform factor inside each SOC block
    int offset = low.cone.l;
    for (int dim : low.cone.soc_dims) {
      const double blk = row_max_g.segment(offset, dim).maxCoeff();
      row_max_g.segment(offset, dim).setConstant(blk);
      offset += dim;
    }
    auto factor = [](double v) { return v > 0.0 ? 1.0 / std::sqrt(v) : 1.0; };
    Vec dc = col_max.unaryExpr(factor);
    Vec da = row_max_a.unaryExpr(factor);
    Vec dg = row_max_g.unaryExpr(factor);
    low.A = da.asDiagonal() * low.A * dc.asDiagonal();
    low.G = dg.asDiagonal() * low.G * dc.asDiagonal();
    low.col_scale.array() *= dc.array();
    low.row_scale_a.array() *= da.array();
    low.row_scale_g.array() *= dg.array();
  }
  low.b.array() *= low.row_scale_a.array();
  low.h.array() *= low.row_scale_g.array();
  low.c.array() *= low.col_scale.array();
  const double cnorm = low.c.lpNorm<Eigen::Infinity>();
  low.cost_scale = cnorm > 1.0 ? 1.0 / cnorm : 1.0;
  low.c *= low.cost_scale;
  return low;
}

void update_bound_rows(Lowered& low, int var, double lo, double hi) {
  const int hi_row = low.hi_row_of_var[var];
  const int lo_row = low.lo_row_of_var[var];
  if (hi_row < 0 || lo_row < 0)
    throw ValidationError("variable has no bound rows to tighten");
  low.h[hi_row] = hi * low.row_scale_g[hi_row];
  low.h[lo_row] = -lo * low.row_scale_g[lo_row];
}

}  // namespace acuc::internal
