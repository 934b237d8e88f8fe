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

#include "wlab/cmatrix.hpp"

#include <Eigen/SVD>
#include <stdexcept>
#include <string>

namespace wlab {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const Eigen::Index ra = a.rows(), ca = a.cols();
  const Eigen::Index rb = b.rows(), cb = b.cols();
  CMatrix out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i)
    for (Eigen::Index j = 0; j < ca; ++j)
      for (Eigen::Index r = 0; r < rb; ++r)
        for (Eigen::Index s = 0; s < cb; ++s)
          out(i * rb + r, j * cb + s) = a(i, j) * b(r, s);
  return out;
}

CVector kron_vec(const CVector& a, const CVector& b) {
  const Eigen::Index na = a.size(), nb = b.size();
  CVector out(na * nb);
  for (Eigen::Index i = 0; i < na; ++i)
    for (Eigen::Index r = 0; r < nb; ++r) out(i * nb + r) = a(i) * b(r);
  return out;
}

CMatrix partial_transpose(const CMatrix& m, int n, Subsystem system) {
  const Eigen::Index d = static_cast<Eigen::Index>(n) * n;
  if (n <= 0 || m.rows() != d || m.cols() != d) {
    throw std::invalid_argument(
        "partial_transpose: matrix must be (n*n)x(n*n), got " +
        std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
        " with n=" + std::to_string(n));
  }
  CMatrix out(d, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          if (system == Subsystem::First)
            out(i * n + r, j * n + s) = m(j * n + r, i * n + s);
          else
            out(i * n + r, j * n + s) = m(i * n + s, j * n + r);
        }
  return out;
}

bool is_hermitian(const CMatrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = 1.0 + m.cwiseAbs().maxCoeff();
  double dev = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i; j < m.cols(); ++j)
      dev = std::max(dev, std::abs(m(i, j) - std::conj(m(j, i))));
  return dev <= rel_tol * scale;
}

HermEig eig_hermitian(const CMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("eig_hermitian: non-square input " +
                                std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()));
  if (!is_hermitian(m, 1e-10))
    throw std::invalid_argument("eig_hermitian: input is not Hermitian within tolerance");
  const CMatrix sym = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eig_hermitian: iterative QL failed to converge on dimension " +
                             std::to_string(m.rows()));
  return HermEig{solver.eigenvalues(), solver.eigenvectors()};
}

double lambda_min(const CMatrix& m) { return eig_hermitian(m).eigenvalues(0); }

int rank_numeric(const std::vector<CVector>& vectors, double rel_tol) {
  if (vectors.empty()) return 0;
  const Eigen::Index dim = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != dim)
      throw std::invalid_argument("rank_numeric: mixed vector dimensions");
  Eigen::MatrixXcd stacked(dim, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t c = 0; c < vectors.size(); ++c) stacked.col(c) = vectors[c];
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(stacked);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * sv(0)) ++rank;
  return rank;
}

cplx trace_product(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw std::invalid_argument("trace_product: incompatible dimensions");
  cplx t = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) t += a(i, j) * b(j, i);
  return t;
}

cplx quad_form(const CMatrix& m, const CVector& v) {
  if (m.rows() != m.cols() || m.cols() != v.size())
    throw std::invalid_argument("quad_form: incompatible dimensions");
  return (v.adjoint() * (m * v))(0);
}

double frobenius(const CMatrix& m) { return m.norm(); }

}  // namespace wlab
