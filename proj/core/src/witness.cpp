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

#include "wlab/witness.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wlab {

MapSpec MapSpec::make(int n, int k) {
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  if (k < 1 || k > n - 1) throw std::invalid_argument("k must be in 1..n-1");
  return MapSpec{n, k};
}

CMatrix apply_map(const MapSpec& spec, const CMatrix& x) {
  const int n = spec.n;
  if (x.rows() != n || x.cols() != n)
    throw std::invalid_argument("apply_map: input must be " + std::to_string(n) +
                                "x" + std::to_string(n));
  CMatrix out = -x;
  for (int i = 0; i < n; ++i) {
    const int shifted = (i + spec.k) % n;
    out(i, i) += static_cast<double>(n - 1) * x(i, i) + x(shifted, shifted);
  }
  return out;
}

CMatrix build_block(const MapSpec& spec, int i, int j) {
  const int n = spec.n;
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw std::invalid_argument("build_block: block index out of range");
  CMatrix block = CMatrix::Zero(n, n);
  if (i == j) {
    block(i, i) = static_cast<double>(n - 2);
    const int m = (i + n - spec.k) % n;
    block(m, m) += 1.0;
  } else {
    block(i, j) = -1.0;
  }
  return block;
}

BlockWitness build_witness(const MapSpec& spec, bool normalized) {
  const int n = spec.n;
  const int d = spec.dim();
  BlockWitness w;
  w.spec = spec;
  w.normalized = normalized;
  w.matrix = CMatrix::Zero(d, d);
  w.exact_matrix = GaussianRationalMatrix::zero(d, d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const CMatrix block = build_block(spec, i, j);
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          const double e = block(r, s).real();
          if (e == 0.0) continue;
          w.matrix(i * n + r, j * n + s) = e;
          w.exact_matrix.at(i * n + r, j * n + s) =
              GaussianRational::integer(static_cast<long long>(e));
        }
    }
  }
  if (normalized) w.matrix /= static_cast<double>(n);
  return w;
}

BlockWitness witness_gamma(const BlockWitness& w) {
  const int n = w.spec.n;
  BlockWitness g;
  g.spec = w.spec;
  g.normalized = w.normalized;
  g.matrix = partial_transpose(w.matrix, n, Subsystem::First);
  g.exact_matrix = GaussianRationalMatrix::zero(w.exact_matrix.rows, w.exact_matrix.cols);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
          g.exact_matrix.at(i * n + r, j * n + s) = w.exact_matrix.at(j * n + r, i * n + s);
  return g;
}

double expectation_matrix(const CMatrix& w, const CMatrix& rho) {
  if (rho.rows() != w.rows() || rho.cols() != w.cols())
    throw std::invalid_argument("expectation: state dimension mismatch");
  if (!is_hermitian(rho, 1e-10))
    throw std::invalid_argument("expectation: state is not Hermitian");
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > 1e-9)
    throw std::invalid_argument("expectation: state trace deviates from 1 by " +
                                std::to_string(std::abs(tr - 1.0)));
  const cplx t = trace_product(w, rho);
  if (std::abs(t.imag()) > 1e-10)
    throw std::runtime_error("expectation: nonreal trace, imag = " +
                             std::to_string(t.imag()));
  return t.real();
}

double expectation(const BlockWitness& w, const CMatrix& rho) {
  return expectation_matrix(w.matrix, rho);
}

}  // namespace wlab
