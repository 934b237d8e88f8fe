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

#include "wlab/rng.hpp"

#include <cmath>

namespace wlab {

namespace {
std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::uint64_t state = seed;
  std::uint64_t out = splitmix64(state);
  state ^= a * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL;
  out ^= splitmix64(state);
  state ^= b * 0xda942042e4dd58b5ULL + 0x9e3779b97f4a7c15ULL;
  out ^= splitmix64(state);
  return out;
}

double Rng::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

CVector Rng::unit_complex_vector(int n) {
  CVector v(n);
  for (int i = 0; i < n; ++i) {
    const double re = gaussian();
    const double im = gaussian();
    v(i) = cplx(re, im);
  }
  const double norm = v.norm();
  if (norm == 0.0) return unit_complex_vector(n);
  return v / norm;
}

CMatrix Rng::hermitian_gaussian(int dim) {
  CMatrix g(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = cplx(gaussian(), gaussian());
  CMatrix h = (g + g.adjoint()) / 2.0;
  return h;
}

std::vector<double> Rng::dirichlet_uniform(int m) {
  std::vector<double> w(m);
  double total = 0.0;
  for (int i = 0; i < m; ++i) {
    double u = uniform();
    while (u <= 0.0) u = uniform();
    w[i] = -std::log(u);
    total += w[i];
  }
  for (double& x : w) x /= total;
  return w;
}

}  // namespace wlab
