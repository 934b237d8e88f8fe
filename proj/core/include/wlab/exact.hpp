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

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wlab/cmatrix.hpp"

namespace wlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Element of Q(i): two exact rational components. cpp_rational keeps each
// fraction reduced with a positive denominator, so the normalization contract
// (reduced fractions, zero stored as 0/1) holds by construction.
struct GaussianRational {
  BigRational re{0};
  BigRational im{0};

  static GaussianRational integer(long long re_val, long long im_val = 0);
  // i^power for any integer power (negative allowed); one of {1, i, -1, -i}.
  static GaussianRational fourth_root(long long power);

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return {re, -im}; }

  BigInt re_num() const { return boost::multiprecision::numerator(re); }
  BigInt re_den() const { return boost::multiprecision::denominator(re); }
  BigInt im_num() const { return boost::multiprecision::numerator(im); }
  BigInt im_den() const { return boost::multiprecision::denominator(im); }

  cplx to_complex() const;
  std::string str() const;
};

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a);
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
bool operator==(const GaussianRational& a, const GaussianRational& b);

struct GaussianRationalMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<GaussianRational> entries;  // row-major, length rows*cols

  static GaussianRationalMatrix zero(int rows, int cols);
  static GaussianRationalMatrix identity(int n);

  GaussianRational& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
  const GaussianRational& at(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * cols + c];
  }

  bool is_hermitian() const;  // exact entrywise test
  CMatrix to_complex() const;
};

// Rank over Q(i). Rows are cleared of denominators, then reduced by
// fraction-free Bareiss steps over Z[i] with largest-|pivot|^2 row pivoting.
// Independent of row order.
int exact_rank(const GaussianRationalMatrix& m);

// v† W v, exactly. W must be exactly Hermitian; the result then has
// identically zero imaginary part (enforced, not approximated).
GaussianRational exact_quadratic_form(const GaussianRationalMatrix& w,
                                      const std::vector<GaussianRational>& v);

}  // namespace wlab
