#include "acuc/psd_completion.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace acuc {
namespace {

using Cmat = Eigen::MatrixXcd;

Cmat embed(const PartialHermitian& p) {
  Cmat m = Cmat::Zero(p.dim, p.dim);
  for (int k = 0; k < p.dim; ++k) m(k, k) = p.diag[k];
  for (const auto& e : p.entries) {
    m(e.row, e.col) = std::complex<double>(e.re, e.im);
    m(e.col, e.row) = std::complex<double>(e.re, -e.im);
  }
  return m;
}

PartialHermitian extract(const PartialHermitian& shape, const Cmat& m) {
  PartialHermitian out = shape;
  for (int k = 0; k < out.dim; ++k) out.diag[k] = m(k, k).real();
  for (auto& e : out.entries) {
    e.re = m(e.row, e.col).real();
    e.im = m(e.row, e.col).imag();
  }
  return out;
}

Cmat project_psd(const Cmat& m) {
  Eigen::SelfAdjointEigenSolver<Cmat> eig(m);
  Eigen::VectorXd values = eig.eigenvalues().cwiseMax(0.0);
  return eig.eigenvectors() * values.asDiagonal() * eig.eigenvectors().adjoint();
}

}  // namespace

double pattern_dot(const PartialHermitian& a, const PartialHermitian& b) {
  double dot = 0.0;
  for (int k = 0; k < a.dim; ++k) dot += a.diag[k] * b.diag[k];
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    dot += 2.0 * (a.entries[i].re * b.entries[i].re + a.entries[i].im * b.entries[i].im);
  return dot;
}

double embedded_min_eigenvalue(const PartialHermitian& pattern) {
  Eigen::SelfAdjointEigenSolver<Cmat> eig(embed(pattern));
  return eig.eigenvalues().minCoeff();
}

PsdProjection project_to_psd_completable(const PartialHermitian& input,
                                         const PsdProjectOptions& opts) {
  if (input.dim <= 0 || static_cast<int>(input.diag.size()) != input.dim)
    throw std::invalid_argument("partial matrix dimensions inconsistent");
  for (const auto& e : input.entries)
    if (e.row < 0 || e.col >= input.dim || e.row >= e.col)
      throw std::invalid_argument("pattern entries must satisfy 0 <= row < col < dim");

  Cmat iterate = embed(input);
  PartialHermitian previous = input;
  PsdProjection result;
  for (int iter = 0; iter < opts.max_iters; ++iter) {
    const Cmat psd = project_psd(iterate);
    PartialHermitian candidate = extract(input, psd);

    PartialHermitian diff = candidate;
    for (int k = 0; k < diff.dim; ++k) diff.diag[k] -= input.diag[k];
    for (std::size_t i = 0; i < diff.entries.size(); ++i) {
      diff.entries[i].re -= input.entries[i].re;
      diff.entries[i].im -= input.entries[i].im;
    }
    result.distance = std::sqrt(std::max(0.0, pattern_dot(diff, diff)));

    PartialHermitian step = candidate;
    for (int k = 0; k < step.dim; ++k) step.diag[k] -= previous.diag[k];
    for (std::size_t i = 0; i < step.entries.size(); ++i) {
      step.entries[i].re -= previous.entries[i].re;
      step.entries[i].im -= previous.entries[i].im;
    }
    const double movement = std::sqrt(std::max(0.0, pattern_dot(step, step)));
    previous = candidate;

    if ((iter >= 20 && result.distance < opts.stop_below) ||
        movement <= opts.tol * (1.0 + result.distance)) {
      result.converged = true;
      result.projected = candidate;
      break;
    }
    // restore the specified entries, keep the free fill-in
    iterate = psd;
    for (int k = 0; k < input.dim; ++k) iterate(k, k) = input.diag[k];
    for (const auto& e : input.entries) {
      iterate(e.row, e.col) = std::complex<double>(e.re, e.im);
      iterate(e.col, e.row) = std::complex<double>(e.re, -e.im);
    }
  }
  if (!result.converged) result.projected = previous;

  result.normal = input;
  for (int k = 0; k < input.dim; ++k)
    result.normal.diag[k] = input.diag[k] - result.projected.diag[k];
  for (std::size_t i = 0; i < input.entries.size(); ++i) {
    result.normal.entries[i].re = input.entries[i].re - result.projected.entries[i].re;
    result.normal.entries[i].im = input.entries[i].im - result.projected.entries[i].im;
  }
  return result;
}

}  // namespace acuc
