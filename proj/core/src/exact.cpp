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

#include "wlab/exact.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace wlab {

GaussianRational GaussianRational::integer(long long re_val, long long im_val) {
  return {BigRational(re_val), BigRational(im_val)};
}

GaussianRational GaussianRational::fourth_root(long long power) {
  switch (((power % 4) + 4) % 4) {
    case 0: return integer(1);
    case 1: return integer(0, 1);
    case 2: return integer(-1);
    default: return integer(0, -1);
  }
}

cplx GaussianRational::to_complex() const {
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::string GaussianRational::str() const {
  std::ostringstream os;
  os << re << (im < 0 ? " - " : " + ") << boost::multiprecision::abs(im) << "i";
  return os.str();
}

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
  return {a.re + b.re, a.im + b.im};
}

GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
  return {a.re - b.re, a.im - b.im};
}

GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  const BigRational norm = b.re * b.re + b.im * b.im;
  if (norm == 0) throw std::domain_error("GaussianRational: division by zero");
  return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
}

bool operator==(const GaussianRational& a, const GaussianRational& b) {
  return a.re == b.re && a.im == b.im;
}

GaussianRationalMatrix GaussianRationalMatrix::zero(int rows, int cols) {
  GaussianRationalMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.entries.assign(static_cast<std::size_t>(rows) * cols, GaussianRational{});
  return m;
}

GaussianRationalMatrix GaussianRationalMatrix::identity(int n) {
  auto m = zero(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRational::integer(1);
  return m;
}

bool GaussianRationalMatrix::is_hermitian() const {
  if (rows != cols) return false;
  for (int r = 0; r < rows; ++r)
    for (int c = r; c < cols; ++c)
      if (!(at(r, c) == at(c, r).conj())) return false;
  return true;
}

CMatrix GaussianRationalMatrix::to_complex() const {
  CMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = at(r, c).to_complex();
  return m;
}

namespace {

// Z[i] element for the fraction-free elimination.
struct GaussInt {
  BigInt re{0}, im{0};
  bool is_zero() const { return re == 0 && im == 0; }
};

GaussInt gi_mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt gi_sub(const GaussInt& a, const GaussInt& b) {
  return {a.re - b.re, a.im - b.im};
}

BigInt gi_norm(const GaussInt& a) { return a.re * a.re + a.im * a.im; }

// a / b in Z[i]; Bareiss guarantees exactness, which we still verify.
GaussInt gi_div_exact(const GaussInt& a, const GaussInt& b) {
  const BigInt norm = gi_norm(b);
  const GaussInt num = gi_mul(a, {b.re, -b.im});
  BigInt qr, rr, qi, ri;
  boost::multiprecision::divide_qr(num.re, norm, qr, rr);
  boost::multiprecision::divide_qr(num.im, norm, qi, ri);
  if (rr != 0 || ri != 0)
    throw std::logic_error("exact_rank: non-exact Bareiss division");
  return {std::move(qr), std::move(qi)};
}

}  // namespace

int exact_rank(const GaussianRationalMatrix& m) {
  const int nr = m.rows, nc = m.cols;
  if (nr == 0 || nc == 0) return 0;

  // Clear denominators row by row (positive row scaling preserves rank).
  std::vector<std::vector<GaussInt>> w(nr, std::vector<GaussInt>(nc));
  for (int r = 0; r < nr; ++r) {
    BigInt l = 1;
    for (int c = 0; c < nc; ++c) {
      const auto& e = m.at(r, c);
      l = boost::multiprecision::lcm(l, e.re_den());
      l = boost::multiprecision::lcm(l, e.im_den());
    }
    const BigRational scale(l);
    for (int c = 0; c < nc; ++c) {
      const auto& e = m.at(r, c);
      w[r][c] = {boost::multiprecision::numerator(BigRational(e.re * scale)),
                 boost::multiprecision::numerator(BigRational(e.im * scale))};
    }
  }

  int rank = 0;
  int row = 0;
  GaussInt prev{1, 0};
  for (int col = 0; col < nc && row < nr; ++col) {
    int best = -1;
    BigInt best_norm = 0;
    for (int r = row; r < nr; ++r) {
      BigInt nrm = gi_norm(w[r][col]);
      if (nrm > best_norm) {
        best = r;
        best_norm = std::move(nrm);
      }
    }
    if (best < 0) continue;
    std::swap(w[row], w[best]);
    const GaussInt pivot = w[row][col];
    for (int r = row + 1; r < nr; ++r) {
      const GaussInt lead = w[r][col];
      for (int c = col + 1; c < nc; ++c) {
        w[r][c] = gi_div_exact(gi_sub(gi_mul(w[r][c], pivot), gi_mul(lead, w[row][c])), prev);
      }
      w[r][col] = GaussInt{};
    }
    prev = pivot;
    ++rank;
    ++row;
  }
  return rank;
}

GaussianRational exact_quadratic_form(const GaussianRationalMatrix& w,
                                      const std::vector<GaussianRational>& v) {
  if (w.rows != w.cols)
    throw std::invalid_argument("exact_quadratic_form: matrix must be square");
  if (static_cast<int>(v.size()) != w.rows)
    throw std::invalid_argument("exact_quadratic_form: vector dimension mismatch");
  if (!w.is_hermitian())
    throw std::invalid_argument("exact_quadratic_form: matrix is not Hermitian");

  GaussianRational acc{};
  for (int i = 0; i < w.rows; ++i) {
    GaussianRational rowsum{};
    for (int j = 0; j < w.cols; ++j) {
      if (w.at(i, j).is_zero() || v[j].is_zero()) continue;
      rowsum = rowsum + w.at(i, j) * v[j];
    }
    acc = acc + v[i].conj() * rowsum;
  }
  if (!(acc.im == 0))
    throw std::logic_error("exact_quadratic_form: nonzero imaginary part on Hermitian input");
  return acc;
}

}  // namespace wlab
