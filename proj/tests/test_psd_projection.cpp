#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "acuc/psd_completion.hpp"

using namespace acuc;

namespace {

// partial matrix on a cycle 0-1-...-(n-1)-0 from complex node voltages
PartialHermitian cycle_pattern_from_voltages(const std::vector<double>& mag,
                                             const std::vector<double>& angle) {
  const int n = static_cast<int>(mag.size());
  PartialHermitian p;
  p.dim = n;
  p.diag.resize(n);
  for (int k = 0; k < n; ++k) p.diag[k] = mag[k] * mag[k];
  for (int k = 0; k < n; ++k) {
    const int l = (k + 1) % n;
    const int row = std::min(k, l), col = std::max(k, l);
    const int a = row, b = col;
    PartialHermitian::OffDiag e;
    e.row = row;
    e.col = col;
    // entry (a,b) of conj(V V^H): |Va||Vb| (cos(ta-tb) - i sin(ta-tb)) conjugated
    e.re = mag[a] * mag[b] * std::cos(angle[a] - angle[b]);
    e.im = -mag[a] * mag[b] * std::sin(angle[a] - angle[b]);
    p.entries.push_back(e);
  }
  return p;
}

double norm_of(const PartialHermitian& p) { return std::sqrt(pattern_dot(p, p)); }

}  // namespace

TEST_CASE("completable input projects to itself") {
  const PartialHermitian input =
      cycle_pattern_from_voltages({1.0, 1.05, 0.97}, {0.0, 0.2, -0.1});
  const PsdProjection proj = project_to_psd_completable(input);
  CHECK(proj.converged);
  CHECK(proj.distance <= 1e-9);
  CHECK(norm_of(proj.normal) <= 1e-9);
}

TEST_CASE("two-by-two indefinite matrix projects by eigenvalue clipping") {
  PartialHermitian input;
  input.dim = 2;
  input.diag = {1.0, 1.0};
  input.entries = {{0, 1, 1.5, 0.0}};
  const PsdProjection proj = project_to_psd_completable(input);
  CHECK(proj.converged);
  CHECK(proj.projected.diag[0] == doctest::Approx(1.25).epsilon(1e-9));
  CHECK(proj.projected.diag[1] == doctest::Approx(1.25).epsilon(1e-9));
  CHECK(proj.projected.entries[0].re == doctest::Approx(1.25).epsilon(1e-9));
  CHECK(proj.normal.diag[0] == doctest::Approx(-0.25).epsilon(1e-9));
  CHECK(proj.normal.entries[0].re == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("cone invariance: scaled completable points stay inside") {
  PartialHermitian input = cycle_pattern_from_voltages({1.0, 1.0, 1.0}, {0.1, 0.0, -0.2});
  for (auto& d : input.diag) d *= 2.0;
  for (auto& e : input.entries) {
    e.re *= 2.0;
    e.im *= 2.0;
  }
  const PsdProjection proj = project_to_psd_completable(input);
  CHECK(norm_of(proj.normal) <= 1e-9);
}

TEST_CASE("angle-inconsistent cycle is separated") {
  // pairwise angles of pi/3 around a triangle cannot close the loop
  PartialHermitian input;
  input.dim = 3;
  input.diag = {1.0, 1.0, 1.0};
  const double a = 3.14159265358979323846 / 3.0;
  input.entries = {{0, 1, std::cos(a), -std::sin(a)},
                   {1, 2, std::cos(a), -std::sin(a)},
                   {0, 2, std::cos(a), std::sin(a)}};
  const PsdProjection proj = project_to_psd_completable(input);
  CHECK(proj.distance >= 1e-3);
  CHECK(norm_of(proj.normal) >= 1e-3);

  // the projection itself is (nearly) completable: re-separating it finds nothing
  const PsdProjection again = project_to_psd_completable(proj.projected);
  CHECK(again.distance <= 1e-6);
}

TEST_CASE("variational inequality against sampled completable points") {
  PartialHermitian input;
  input.dim = 4;
  input.diag = {1.1, 0.9, 1.0, 1.2};
  const double a = 0.9;
  input.entries = {{0, 1, std::cos(a), -std::sin(a)},
                   {1, 2, std::cos(a), -std::sin(a)},
                   {2, 3, std::cos(a), -std::sin(a)},
                   {0, 3, std::cos(a), std::sin(a)}};
  PsdProjectOptions opts;
  opts.max_iters = 20000;
  const PsdProjection proj = project_to_psd_completable(input, opts);
  REQUIRE(proj.distance > 1e-4);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> umag(0.9, 1.1);
  std::uniform_real_distribution<double> uang(-0.6, 0.6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> mag(4), ang(4);
    for (int k = 0; k < 4; ++k) {
      mag[k] = umag(rng);
      ang[k] = uang(rng);
    }
    PartialHermitian y;
    y.dim = 4;
    y.diag.resize(4);
    for (int k = 0; k < 4; ++k) y.diag[k] = mag[k] * mag[k];
    for (const auto& e : input.entries) {
      PartialHermitian::OffDiag f = e;
      f.re = mag[e.row] * mag[e.col] * std::cos(ang[e.row] - ang[e.col]);
      f.im = -mag[e.row] * mag[e.col] * std::sin(ang[e.row] - ang[e.col]);
      y.entries.push_back(f);
    }
    PartialHermitian diff = y;
    for (int k = 0; k < 4; ++k) diff.diag[k] -= proj.projected.diag[k];
    for (std::size_t i = 0; i < diff.entries.size(); ++i) {
      diff.entries[i].re -= proj.projected.entries[i].re;
      diff.entries[i].im -= proj.projected.entries[i].im;
    }
    CHECK(pattern_dot(proj.normal, diff) <= 1e-7);
  }
}

TEST_CASE("embedded eigenvalue certificate for the separating direction") {
  PartialHermitian input;
  input.dim = 3;
  input.diag = {1.0, 1.0, 1.0};
  const double a = 3.14159265358979323846 / 3.0;
  input.entries = {{0, 1, std::cos(a), -std::sin(a)},
                   {1, 2, std::cos(a), -std::sin(a)},
                   {0, 2, std::cos(a), std::sin(a)}};
  PsdProjectOptions opts;
  opts.max_iters = 20000;
  const PsdProjection proj = project_to_psd_completable(input, opts);
  PartialHermitian neg = proj.normal;
  for (auto& d : neg.diag) d = -d;
  for (auto& e : neg.entries) {
    e.re = -e.re;
    e.im = -e.im;
  }
  // the outward normal embeds to a negative semidefinite matrix
  CHECK(embedded_min_eigenvalue(neg) >= -1e-6);
}
