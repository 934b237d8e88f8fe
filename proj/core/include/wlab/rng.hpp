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
#include <random>
#include <vector>

#include "wlab/cmatrix.hpp"

namespace wlab {

// Generator name recorded in output metadata.
inline constexpr const char* kRngName = "mt19937_64";

// splitmix64-based mixing of a base seed with stream coordinates, so parallel
// workers get independent deterministic streams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

// Deterministic layer over std::mt19937_64. Distribution code lives here
// rather than in <random> so identical seeds give identical streams across
// standard library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }
  double uniform();   // [0, 1), 53-bit resolution
  double gaussian();  // standard normal, Box-Muller

  CVector unit_complex_vector(int n);
  CMatrix hermitian_gaussian(int dim);          // (G + G†)/2, unscaled
  std::vector<double> dirichlet_uniform(int m);  // uniform weights on the simplex

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace wlab
