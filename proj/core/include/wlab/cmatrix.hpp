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

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace wlab {

using cplx = std::complex<double>;

// Dense row-major complex matrices are the working representation throughout;
// vectors are column vectors.
using CMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CVector = Eigen::Matrix<cplx, Eigen::Dynamic, 1>;

// Kronecker product: (A ⊗ B)[i*rB + r, j*cB + s] = A(i,j) * B(r,s).
CMatrix kron(const CMatrix& a, const CMatrix& b);
CVector kron_vec(const CVector& a, const CVector& b);

enum class Subsystem { First, Second };

// Partial transpose of an (n*n)x(n*n) matrix viewed as an n x n grid of n x n
// blocks. First: output block (i,j) is input block (j,i). Second: every block
// is transposed in place. Each variant is an involution, bit for bit.
CMatrix partial_transpose(const CMatrix& m, int n, Subsystem system);

// max_{i,j} |M(i,j) - conj(M(j,i))| <= rel_tol * (1 + max|M|)
bool is_hermitian(const CMatrix& m, double rel_tol = 1e-12);

struct HermEig {
  Eigen::VectorXd eigenvalues;  // ascending
  CMatrix eigenvectors;         // orthonormal columns
};

// Hermitian eigendecomposition. The input is symmetrized as (M + M†)/2 before
// solving; a Hermiticity deviation beyond 1e-10 * (1 + max|M|) is an error, as
// is a non-square input.
HermEig eig_hermitian(const CMatrix& m);

double lambda_min(const CMatrix& m);

// Number of singular values above rel_tol * sigma_max of the matrix whose
// columns are `vectors`. Empty input has rank 0; mixed dimensions are an error.
int rank_numeric(const std::vector<CVector>& vectors, double rel_tol = 1e-9);

// Tr(a * b) without forming the product.
cplx trace_product(const CMatrix& a, const CMatrix& b);

// v† M v
cplx quad_form(const CMatrix& m, const CVector& v);

double frobenius(const CMatrix& m);

}  // namespace wlab
