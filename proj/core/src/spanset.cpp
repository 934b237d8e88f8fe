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

#include "wlab/spanset.hpp"

#include <cmath>
#include <stdexcept>

#include "wlab/hunt.hpp"
#include "wlab/rng.hpp"

namespace wlab {

PhaseTuple PhaseTuple::grid(std::vector<int> values) {
  for (int v : values)
    if (v < 0 || v > 3)
      throw std::invalid_argument("PhaseTuple: entries must be in 0..3");
  return PhaseTuple{std::move(values)};
}

PhaseTuple PhaseTuple::scaled(int ell) const {
  PhaseTuple out;
  out.theta.reserve(theta.size());
  for (int t : theta) out.theta.push_back(((t * ell) % 4 + 4) % 4);
  return out;
}

ProductVectorTag ProductVectorTag::xi_xi(PhaseTuple t) {
  ProductVectorTag tag;
  tag.kind = TagKind::XiXi;
  tag.n = t.size();
  tag.theta = std::move(t);
  return tag;
}

ProductVectorTag ProductVectorTag::xi_xi_star(PhaseTuple t) {
  ProductVectorTag tag;
  tag.kind = TagKind::XiXiStar;
  tag.n = t.size();
  tag.theta = std::move(t);
  return tag;
}

ProductVectorTag ProductVectorTag::elementary(int n, int i, int j) {
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw std::invalid_argument("ProductVectorTag: elementary index out of range");
  ProductVectorTag tag;
  tag.kind = TagKind::Elementary;
  tag.n = n;
  tag.i = i;
  tag.j = j;
  return tag;
}

CVector xi_vector(const PhaseTuple& t) {
  static const cplx roots[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  CVector v(t.size());
  for (int j = 0; j < t.size(); ++j) v(j) = roots[t.theta[j] & 3];
  return v;
}

std::vector<GaussianRational> xi_vector_exact(const PhaseTuple& t) {
  std::vector<GaussianRational> v;
  v.reserve(t.theta.size());
  for (int p : t.theta) v.push_back(GaussianRational::fourth_root(p));
  return v;
}

CVector product_vec(const ProductVectorTag& tag) {
  const int n = tag.n;
  CVector out = CVector::Zero(static_cast<Eigen::Index>(n) * n);
  switch (tag.kind) {
    case TagKind::Elementary:
      out(static_cast<Eigen::Index>(tag.i) * n + tag.j) = 1.0;
      break;
    case TagKind::XiXi: {
      const CVector x = xi_vector(tag.theta);
      out = kron_vec(x, x);
      break;
    }
    case TagKind::XiXiStar: {
      const CVector x = xi_vector(tag.theta);
      out = kron_vec(x, x.conjugate());
      break;
    }
  }
  return out;
}

std::vector<GaussianRational> product_vec_exact(const ProductVectorTag& tag) {
  const int n = tag.n;
  std::vector<GaussianRational> out(static_cast<std::size_t>(n) * n);
  switch (tag.kind) {
    case TagKind::Elementary:
      out[static_cast<std::size_t>(tag.i) * n + tag.j] = GaussianRational::integer(1);
      break;
    case TagKind::XiXi: {
      const auto x = xi_vector_exact(tag.theta);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(i) * n + j] = x[i] * x[j];
      break;
    }
    case TagKind::XiXiStar: {
      const auto x = xi_vector_exact(tag.theta);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          out[static_cast<std::size_t>(i) * n + j] = x[i] * x[j].conj();
      break;
    }
  }
  return out;
}

std::vector<ProductVectorTag> v_set(const MapSpec& spec, int i) {
  const int n = spec.n;
  if (i < 0 || i >= n) throw std::invalid_argument("v_set: index out of range");
  const int excluded = (i + n - spec.k) % n;
  std::vector<ProductVectorTag> tags;
  tags.reserve(n - 2);
  for (int j = 0; j < n; ++j) {
    if (j == i || j == excluded) continue;
    tags.push_back(ProductVectorTag::elementary(n, i, j));
  }
  return tags;
}

bool zero_membership(const BlockWitness& w, const ProductVectorTag& tag, MembershipMode mode) {
  if (tag.n != w.spec.n)
    throw std::invalid_argument("zero_membership: tag dimension mismatch");
  if (mode == MembershipMode::Exact) {
    const auto value = exact_quadratic_form(w.exact_matrix, product_vec_exact(tag));
    return value.is_zero();
  }
  const cplx value = quad_form(w.matrix, product_vec(tag));
  return std::abs(value) <= 1e-10 * frobenius(w.matrix);
}

std::vector<ProductVectorTag> generating_family(const MapSpec& spec) {
  const int n = spec.n;
  std::vector<ProductVectorTag> tags;
  tags.reserve(static_cast<std::size_t>(3) * n * n);
  // Singletons: theta_i = 0, pi/2 elsewhere.
  for (int i = 0; i < n; ++i) {
    std::vector<int> theta(n, 1);
    theta[i] = 0;
    const PhaseTuple base = PhaseTuple::grid(theta);
    for (int ell = 1; ell <= 4; ++ell)
      tags.push_back(ProductVectorTag::xi_xi(base.scaled(ell)));
  }
  // Pairs: theta_i = theta_j = 0, pi/2 elsewhere.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> theta(n, 1);
      theta[i] = 0;
      theta[j] = 0;
      const PhaseTuple base = PhaseTuple::grid(theta);
      for (int ell = 1; ell <= 4; ++ell)
        tags.push_back(ProductVectorTag::xi_xi(base.scaled(ell)));
    }
  }
  // Elementary members of every V_i.
  for (int i = 0; i < n; ++i) {
    auto vi = v_set(spec, i);
    tags.insert(tags.end(), vi.begin(), vi.end());
  }
  return tags;
}

SpanningReport spanning_report(const MapSpec& spec) {
  const int d = spec.dim();
  const auto tags = generating_family(spec);

  SpanningReport report;
  report.spec = spec;
  report.generated_count = static_cast<int>(tags.size());

  auto stacked = GaussianRationalMatrix::zero(report.generated_count, d);
  std::vector<CVector> numeric;
  numeric.reserve(tags.size());
  for (std::size_t r = 0; r < tags.size(); ++r) {
    const auto exact_vec = product_vec_exact(tags[r]);
    for (int c = 0; c < d; ++c) stacked.at(static_cast<int>(r), c) = exact_vec[c];
    numeric.push_back(product_vec(tags[r]));
  }

  report.exact_rank = exact_rank(stacked);
  report.numeric_rank = rank_numeric(numeric);
  report.expected = spec.degenerate() ? d - spec.n / 2 : d;
  report.certified = report.exact_rank == d;
  return report;
}

int conjugate_grid_rank(int n) {
  std::vector<CVector> vectors;
  const long count = static_cast<long>(std::lround(std::pow(4.0, n - 1)));
  vectors.reserve(count);
  std::vector<int> theta(n, 0);
  for (long code = 0; code < count; ++code) {
    long rest = code;
    for (int j = 1; j < n; ++j) {
      theta[j] = static_cast<int>(rest & 3);
      rest >>= 2;
    }
    vectors.push_back(product_vec(ProductVectorTag::xi_xi_star(PhaseTuple::grid(theta))));
  }
  return rank_numeric(vectors);
}

int zero_set_span_probe(const MapSpec& spec, int samples, std::uint64_t seed) {
  const int n = spec.n;
  if (samples < spec.dim())
    throw std::invalid_argument("zero_set_span_probe: samples must be >= n^2");

  const BlockWitness w = build_witness(spec);
  const double scale = 1.0 + frobenius(w.matrix);

  std::vector<CVector> vectors;
  // Grid part, theta_0 pinned to 0.
  std::vector<int> theta(n, 0);
  const long count = static_cast<long>(std::lround(std::pow(4.0, n - 1)));
  for (long code = 0; code < count; ++code) {
    long rest = code;
    for (int j = 1; j < n; ++j) {
      theta[j] = static_cast<int>(rest & 3);
      rest >>= 2;
    }
    vectors.push_back(product_vec(ProductVectorTag::xi_xi_star(PhaseTuple::grid(theta))));
  }
  // Sampled zeros of the product expectation.
  for (int s = 0; s < samples; ++s) {
    const auto result =
        min_product_expectation(w.matrix, n, 1, 200, 1e-14, mix_seed(seed, s));
    if (std::abs(result.best_value) <= 1e-9 * scale)
      vectors.push_back(kron_vec(result.xi, result.eta));
  }
  return rank_numeric(vectors);
}

}  // namespace wlab
