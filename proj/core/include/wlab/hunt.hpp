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

#pragma once

#include <cstdint>
#include <optional>

#include "wlab/witness.hpp"

namespace wlab {

struct ProductMinResult {
  double best_value = 0.0;
  CVector xi, eta;        // unit vectors achieving best_value
  int restarts_used = 0;
  int iterations = 0;     // iterations spent by the winning restart
};

// Alternating minimization of <xi⊗eta|W|xi⊗eta> over unit product vectors.
// For fixed xi the optimal eta is the bottom eigenvector of the contraction
// B(xi)_{rs} = <xi⊗e_r|W|xi⊗e_s>, and symmetrically for fixed eta via
// C(eta)_{ij} = <e_i⊗eta|W|e_j⊗eta>; the objective never increases. Restarts
// draw deterministic seeded starts; optional warm start replaces the draw of
// restart 0. Ties between restarts go to the earlier one.
ProductMinResult min_product_expectation(const CMatrix& w, int n, int restarts,
                                         int max_iters, double tol, std::uint64_t seed,
                                         const CVector* start_xi = nullptr,
                                         const CVector* start_eta = nullptr);
ProductMinResult min_product_expectation(const BlockWitness& w, int restarts,
                                         int max_iters, double tol, std::uint64_t seed);

struct DetectionCertificate {
  CMatrix rho;                  // n^2 x n^2, Hermitian, unit trace
  double trace_residual = 0.0;  // |Tr rho - 1|
  double psd_residual = 0.0;    // max(0, -lambda_min(rho))
  double ppt_residual = 0.0;    // max(0, -lambda_min(rho^Gamma))
  double value = 0.0;           // Tr(W rho), negative for a detection
  std::uint64_t seed = 0;
  int steps = 0;
};

// Projected subgradient descent on Tr(W rho) over the PPT body
// {rho ⪰ 0, rho^Gamma ⪰ 0, Tr rho = 1}. Each step moves against W and
// re-projects with `dykstra_iters` Dykstra rounds over the two spectral cones
// plus the trace plane. `step_size` is the coefficient of 1/||W||_F; the step
// halves on a stalled window, five times at most. Returns the best feasible
// iterate provided its value clears the strict-negativity margin
// -10*(psd_residual + ppt_residual), otherwise nothing.
std::optional<DetectionCertificate> detect_pptes(const CMatrix& w, int n, int steps,
                                                 double step_size, int dykstra_iters,
                                                 std::uint64_t seed);
std::optional<DetectionCertificate> detect_pptes(const BlockWitness& w, int steps,
                                                 double step_size, int dykstra_iters,
                                                 std::uint64_t seed);

// Convex mixture of `parties_mix` random pure product states with
// Dirichlet-uniform weights. Unit trace, PSD by construction.
CMatrix sample_separable(int n, int parties_mix, std::uint64_t seed);

}  // namespace wlab
