#pragma once

#include <vector>

namespace acuc {

/// Partial Hermitian matrix over a small index set: every diagonal entry is
/// specified, off-diagonal entries only on the listed positions (row < col).
struct PartialHermitian {
  struct OffDiag {
    int row, col;
    double re, im;
  };
  int dim = 0;
  std::vector<double> diag;
  std::vector<OffDiag> entries;
};

struct PsdProjectOptions {
  int max_iters = 4000;
  double tol = 1e-12;         // stop when iterates stall
  double stop_below = 0.0;    // early exit once the distance bound drops under this
};

/// Euclidean projection of a partial Hermitian matrix onto the set of
/// partial matrices that admit a positive semidefinite completion, by
/// alternating projections between the semidefinite cone and the affine set
/// of matrices matching the specified entries. The inner product doubles
/// off-diagonal terms, matching the Frobenius product of the completions.
struct PsdProjection {
  bool converged = false;
  PartialHermitian projected;  // nearest completable partial matrix
  PartialHermitian normal;     // input minus projection
  double distance = 0.0;       // in the weighted pattern metric
};

PsdProjection project_to_psd_completable(const PartialHermitian& input,
                                         const PsdProjectOptions& opts = {});

/// Weighted pattern inner product <a, b> = sum diag + 2 * sum Re(conj(a) b).
double pattern_dot(const PartialHermitian& a, const PartialHermitian& b);

/// Smallest eigenvalue of the zero-filled Hermitian embedding of a pattern.
double embedded_min_eigenvalue(const PartialHermitian& pattern);

}  // namespace acuc
