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
#include <string>
#include <vector>

#include "wlab/witness.hpp"

namespace wlab {

// Phases on the pi/2 grid: theta[j] in {0,1,2,3} meaning theta_j = theta[j]*pi/2.
struct PhaseTuple {
  std::vector<int> theta;

  static PhaseTuple grid(std::vector<int> values);  // validates entries
  PhaseTuple scaled(int ell) const;                 // (ell*theta_j) mod 4
  int size() const { return static_cast<int>(theta.size()); }
};

enum class TagKind { XiXi, XiXiStar, Elementary };

// A tagged product vector of dimension n^2.
struct ProductVectorTag {
  TagKind kind = TagKind::Elementary;
  int n = 0;
  PhaseTuple theta;  // XiXi / XiXiStar payload
  int i = 0, j = 0;  // Elementary payload

  static ProductVectorTag xi_xi(PhaseTuple t);
  static ProductVectorTag xi_xi_star(PhaseTuple t);
  static ProductVectorTag elementary(int n, int i, int j);
};

// xi_theta: component j is i^theta[j], one of {1, i, -1, -i}.
CVector xi_vector(const PhaseTuple& t);
std::vector<GaussianRational> xi_vector_exact(const PhaseTuple& t);

// Realized product vector. Component ordering matches kron and the matrix
// identification v[i*n + j] = M(i,j).
CVector product_vec(const ProductVectorTag& tag);
std::vector<GaussianRational> product_vec_exact(const ProductVectorTag& tag);

// V_i: elementary tags (i, j) with j != i and j != (i+n-k) mod n. Exactly
// n-2 members.
std::vector<ProductVectorTag> v_set(const MapSpec& spec, int i);

enum class MembershipMode { Exact, Numeric };

// Whether <v|W|v> vanishes for the tagged product vector. Exact mode
// evaluates over Q(i) on the witness's exact mirror; numeric mode tests
// |value| <= 1e-10 * ||W||_F on the floating-point matrix.
bool zero_membership(const BlockWitness& w, const ProductVectorTag& tag, MembershipMode mode);

// The canonical finite family certifying the span of the zero set of
// W^Gamma: for each singleton i the four scalings theta^(ell) of the tuple
// (theta_i = 0, pi/2 elsewhere) as xi⊗xi tags; likewise for each pair i<j;
// plus every V_i member. 4n + 2n(n-1) + n(n-2) = 3n^2 tags.
std::vector<ProductVectorTag> generating_family(const MapSpec& spec);

struct SpanningReport {
  MapSpec spec;
  std::string target = "W_gamma";
  int generated_count = 0;
  int numeric_rank = 0;
  int exact_rank = 0;
  int expected = 0;        // n^2, or n^2 - n/2 in the degenerate case (reported, not asserted)
  bool certified = false;  // exact_rank == n^2
};

// Stacks the generating family and computes both the exact rank over Q(i)
// and the floating-point screening rank.
SpanningReport spanning_report(const MapSpec& spec);

// Rank of the conjugated grid family {xi_theta ⊗ xi_theta*} alone. theta_0 is
// pinned to 0: shifting every phase by the same grid step multiplies xi by a
// scalar that cancels against the conjugate factor.
int conjugate_grid_rank(int n);

// Numeric rank of the conjugated grid family together with `samples` product
// vectors driven to zero expectation against W from seeded starts.
// Exploratory: reported, never asserted against a closed form.
int zero_set_span_probe(const MapSpec& spec, int samples, std::uint64_t seed);

}  // namespace wlab
