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

#include "wlab/cmatrix.hpp"
#include "wlab/exact.hpp"

namespace wlab {

// Parameters (n, k) of the witness family. All index arithmetic is 0-based
// modulo n with representatives 0..n-1.
struct MapSpec {
  int n = 0;
  int k = 0;

  // Throws std::invalid_argument unless n >= 3 and 1 <= k <= n-1.
  static MapSpec make(int n, int k);

  // 2k = 0 (mod n), equivalently k = n/2 for even n. In the degenerate case
  // the product-vector family below stops spanning.
  bool degenerate() const { return (2 * k) % n == 0; }
  int dim() const { return n * n; }
};

// Witness in block form: an n x n grid of n x n blocks.
//
// `matrix` holds the working floating-point form (scaled by 1/n when
// `normalized`); `exact_matrix` always mirrors the unnormalized integral form,
// which is what exact zero-set and rank certificates consume — the zero set
// and every expectation sign are invariant under the positive 1/n scaling.
struct BlockWitness {
  MapSpec spec;
  bool normalized = false;
  CMatrix matrix;
  GaussianRationalMatrix exact_matrix;
};

// diag(b) - X with b_i = (n-1) X(i,i) + X((i+k) mod n, (i+k) mod n).
CMatrix apply_map(const MapSpec& spec, const CMatrix& x);

// Block A_ij: for i == j, (n-2) E_ii + E_mm with m = (i+n-k) mod n; for
// i != j, -E_ij. Equals apply_map(spec, E_ij) entry for entry.
CMatrix build_block(const MapSpec& spec, int i, int j);

// Assembles sum_{i,j} E_ij ⊗ A_ij, optionally scaled by 1/n.
BlockWitness build_witness(const MapSpec& spec, bool normalized = false);

// Block transpose on the first factor: block (i,j) of the result is A_ji.
// An involution.
BlockWitness witness_gamma(const BlockWitness& w);

// Re Tr(W rho) for a Hermitian unit-trace rho; |Im Tr(W rho)| above 1e-10 is
// an error, as are dimension, Hermiticity or trace violations of rho.
double expectation(const BlockWitness& w, const CMatrix& rho);
double expectation_matrix(const CMatrix& w, const CMatrix& rho);

}  // namespace wlab
