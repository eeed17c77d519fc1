#pragma once

// Internal lowering of ModelIR to the standard conic form
//   min c'x  s.t.  A x = b,  G x + s = h,  s in K
// with K = R+^l x SOC(q_1) x ... x SOC(q_N). Ruiz-style equilibration is
// applied (uniform per SOC block so cones are preserved) and undone when
// solutions are mapped back.

#include <Eigen/Sparse>
#include <vector>

#include "acuc/model_ir.hpp"

namespace acuc::internal {

using SpMat = Eigen::SparseMatrix<double>;
using Vec = Eigen::VectorXd;

struct ConeLayout {
  int l = 0;                  // leading nonnegative rows of G
  std::vector<int> soc_dims;  // then one block per cone
  int m = 0;                  // total rows of G
  int order() const { return l + static_cast<int>(soc_dims.size()); }
};

struct Lowered {
  int n = 0;  // variables
  Vec c;
  double obj_constant = 0.0;
  SpMat A;  // equalities
  Vec b;
  SpMat G;  // cone rows
  Vec h;
  ConeLayout cone;

  // scaling actually applied: original = col_scale .* x_solver, etc.
  Vec col_scale;   // size n
  Vec row_scale_a; // size rows(A)
  Vec row_scale_g; // size m
  double cost_scale = 1.0;

  // bookkeeping for mapping back and for bound updates
  std::vector<int> eq_row_of_linear;    // ModelIR linear row -> A row (or -1)
  std::vector<int> ineq_row_of_linear;  // ModelIR linear row -> G row (or -1)
  std::vector<double> ineq_sign;        // +1 for <=, -1 for >=
  std::vector<int> lo_row_of_var;       // G row of lower-bound row (or -1)
  std::vector<int> hi_row_of_var;       // G row of upper-bound row (or -1)
};

/// Lowers a ModelIR; throws ValidationError on malformed cones.
Lowered lower_model(const ModelIR& model);

/// Overwrites the right-hand side of a variable's bound rows (scaled space).
void update_bound_rows(Lowered& low, int var, double lo, double hi);

}  // namespace acuc::internal
