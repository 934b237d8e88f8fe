// Copyright 2026 The witness-lab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wlab/hunt.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "wlab/rng.hpp"

namespace wlab {

namespace {

// B(xi)_{rs} = sum_{i,j} conj(xi_i) xi_j W[(i,r),(j,s)]
CMatrix contract_first(const CMatrix& w, const CVector& xi, int n) {
  CMatrix b = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const cplx coeff = std::conj(xi(i)) * xi(j);
      if (coeff == cplx(0, 0)) continue;
      b += coeff * w.block(i * n, j * n, n, n);
    }
  return b;
}

// C(eta)_{ij} = sum_{r,s} conj(eta_r) eta_s W[(i,r),(j,s)]
CMatrix contract_second(const CMatrix& w, const CVector& eta, int n) {
  CMatrix c = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cplx acc = 0.0;
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
          acc += std::conj(eta(r)) * eta(s) * w(i * n + r, j * n + s);
      c(i, j) = acc;
    }
  return c;
}

struct MinEig {
  double value;
  CVector vector;
};

MinEig bottom_eigenpair(const CMatrix& m) {
  const HermEig eig = eig_hermitian(m);
  return {eig.eigenvalues(0), eig.eigenvectors.col(0)};
}

CMatrix clip_psd(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver((m + m.adjoint()) / 2.0);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("detect_pptes: eigensolver failed during projection");
  Eigen::VectorXd ev = solver.eigenvalues().cwiseMax(0.0);
  const CMatrix result =
      solver.eigenvectors() * ev.asDiagonal() * solver.eigenvectors().adjoint();
  return (result + result.adjoint()) / 2.0;
}

}  // namespace

ProductMinResult min_product_expectation(const CMatrix& w, int n, int restarts,
                                         int max_iters, double tol, std::uint64_t seed,
                                         const CVector* start_xi, const CVector* start_eta) {
  if (w.rows() != static_cast<Eigen::Index>(n) * n || w.rows() != w.cols())
    throw std::invalid_argument("min_product_expectation: matrix must be (n*n)x(n*n)");
  if (restarts < 1) throw std::invalid_argument("min_product_expectation: restarts must be >= 1");
  if (tol <= 0.0) throw std::invalid_argument("min_product_expectation: tol must be > 0");

  const double slack = 1e-10 * (1.0 + frobenius(w));
  ProductMinResult best;
  best.best_value = std::numeric_limits<double>::infinity();
  best.restarts_used = restarts;

  for (int r = 0; r < restarts; ++r) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(r)));
    CVector xi = (r == 0 && start_xi) ? start_xi->normalized() : rng.unit_complex_vector(n);
    CVector eta = (r == 0 && start_eta) ? start_eta->normalized() : rng.unit_complex_vector(n);

    double value = quad_form(w, kron_vec(xi, eta)).real();
    int iterations = 0;
    for (int it = 1; it <= max_iters; ++it) {
      const double previous = value;

      const MinEig first = bottom_eigenpair(contract_first(w, xi, n));
      if (first.value > previous + slack)
        throw std::logic_error("min_product_expectation: objective increased");
      eta = first.vector;

      const MinEig second = bottom_eigenpair(contract_second(w, eta, n));
      if (second.value > first.value + slack)
        throw std::logic_error("min_product_expectation: objective increased");
      xi = second.vector;

      value = second.value;
      iterations = it;
      if (previous - value < tol) break;
    }

    // Recompute through the product vector so the reported value is the
    // expectation itself rather than the last eigenvalue.
    const double recomputed = quad_form(w, kron_vec(xi, eta)).real();
    if (recomputed < best.best_value) {
      best.best_value = recomputed;
      best.xi = xi;
      best.eta = eta;
      best.iterations = iterations;
    }
  }
  return best;
}

ProductMinResult min_product_expectation(const BlockWitness& w, int restarts,
                                         int max_iters, double tol, std::uint64_t seed) {
  return min_product_expectation(w.matrix, w.spec.n, restarts, max_iters, tol, seed);
}

std::optional<DetectionCertificate> detect_pptes(const CMatrix& w, int n, int steps,
                                                 double step_size, int dykstra_iters,
                                                 std::uint64_t seed) {
  const Eigen::Index d = static_cast<Eigen::Index>(n) * n;
  if (w.rows() != d || w.cols() != d)
    throw std::invalid_argument("detect_pptes: matrix must be (n*n)x(n*n)");
  if (steps < 1) throw std::invalid_argument("detect_pptes: steps must be >= 1");
  if (step_size <= 0.0) throw std::invalid_argument("detect_pptes: step size must be > 0");

  // Interior start: maximally mixed plus a seeded Hermitian kick of
  // Frobenius norm 0.1.
  Rng rng(seed);
  CMatrix kick = rng.hermitian_gaussian(static_cast<int>(d));
  kick *= 0.1 / kick.norm();
  CMatrix rho = CMatrix::Identity(d, d) / static_cast<double>(d) + kick;

  double alpha = step_size / frobenius(w);
  int halvings = 0;
  constexpr int kHalveWindow = 100;
  double window_best = std::numeric_limits<double>::infinity();

  DetectionCertificate best;
  best.seed = seed;
  best.value = std::numeric_limits<double>::infinity();
  bool found = false;

  for (int step = 1; step <= steps; ++step) {
    rho -= alpha * w;

    // Dykstra rounds: corrections on the two spectral cones, plain
    // projection on the trace plane.
    CMatrix p = CMatrix::Zero(d, d);
    CMatrix q = CMatrix::Zero(d, d);
    CMatrix y = rho;
    for (int round = 0; round < dykstra_iters; ++round) {
      const CMatrix x = clip_psd(y + p);
      p = (y + p) - x;
      const CMatrix g = partial_transpose(x + q, n, Subsystem::First);
      const CMatrix z = partial_transpose(clip_psd(g), n, Subsystem::First);
      q = (x + q) - z;
      const double shift = (1.0 - z.trace().real()) / static_cast<double>(d);
      y = z + shift * CMatrix::Identity(d, d);
    }
    rho = (y + y.adjoint()) / 2.0;
    if (!rho.allFinite())
      throw std::runtime_error("detect_pptes: projection diverged at step " +
                               std::to_string(step));

    const double lam = lambda_min(rho);
    const double lam_gamma = lambda_min(partial_transpose(rho, n, Subsystem::First));
    const double psd_residual = std::max(0.0, -lam);
    const double ppt_residual = std::max(0.0, -lam_gamma);
    const double trace_residual = std::abs(rho.trace().real() - 1.0);
    const double value = trace_product(w, rho).real();

    const bool feasible =
        psd_residual <= 1e-8 && ppt_residual <= 1e-8 && trace_residual <= 1e-9;
    if (feasible && value < best.value) {
      best.rho = rho;
      best.value = value;
      best.psd_residual = psd_residual;
      best.ppt_residual = ppt_residual;
      best.trace_residual = trace_residual;
      best.steps = step;
      found = true;
    }

    if (step % kHalveWindow == 0) {
      if (best.value >= window_best && halvings < 5) {
        alpha /= 2.0;
        ++halvings;
      }
      window_best = best.value;
    }
  }

  // Strict-negativity margin keeps infeasibility leakage from reading as a
  // detection.
  if (!found || best.value >= -10.0 * (best.psd_residual + best.ppt_residual))
    return std::nullopt;
  return best;
}

std::optional<DetectionCertificate> detect_pptes(const BlockWitness& w, int steps,
                                                 double step_size, int dykstra_iters,
                                                 std::uint64_t seed) {
  return detect_pptes(w.matrix, w.spec.n, steps, step_size, dykstra_iters, seed);
}

CMatrix sample_separable(int n, int parties_mix, std::uint64_t seed) {
  if (parties_mix < 1)
    throw std::invalid_argument("sample_separable: parties_mix must be >= 1");
  Rng rng(seed);
  const auto weights = rng.dirichlet_uniform(parties_mix);
  const Eigen::Index d = static_cast<Eigen::Index>(n) * n;
  CMatrix rho = CMatrix::Zero(d, d);
  for (int t = 0; t < parties_mix; ++t) {
    const CVector product = kron_vec(rng.unit_complex_vector(n), rng.unit_complex_vector(n));
    rho += weights[t] * (product * product.adjoint());
  }
  return (rho + rho.adjoint()) / 2.0;
}

}  // namespace wlab
