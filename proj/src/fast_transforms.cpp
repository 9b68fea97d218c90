/*
 * Copyright 2026 The mash-sim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "mash/fast_transforms.hpp"

#include <cmath>
#include <numbers>

namespace mash {

namespace {

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

// In-place radix-2 Cooley-Tukey, unscaled: y_k = sum_j x_j w^{jk},
// w = exp(sign*2*pi*i/n). n must be a power of two.
void fft_pow2(CVec& x, int sign) {
  const int n = static_cast<int>(x.size());
  if (n <= 1) return;
  // Bit-reversal permutation.
  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
  for (int len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * std::numbers::pi / len;
    const cplx wlen(std::cos(ang), std::sin(ang));
    for (int i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (int k = 0; k < len / 2; ++k) {
        const cplx u = x[i + k];
        const cplx v = x[i + k + len / 2] * w;
        x[i + k] = u + v;
        x[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

// Chirp: exp(sign*pi*i*j^2/n), evaluated with j^2 reduced mod 2n to keep
// the trig argument small (the chirp is 2n-periodic in j).
cplx chirp(long long j, int n, int sign) {
  const long long q = (j * j) % (2LL * n);
  const double ang = sign * std::numbers::pi * static_cast<double>(q) / n;
  return {std::cos(ang), std::sin(ang)};
}

// Bluestein's algorithm: arbitrary-length DFT as one circular convolution
// of power-of-two length.
void fft_bluestein(CVec& x, int sign) {
  const int n = static_cast<int>(x.size());
  int m = 1;
  while (m < 2 * n - 1) m <<= 1;

  CVec a = CVec::Zero(m);
  CVec b = CVec::Zero(m);
  for (int j = 0; j < n; ++j) {
    a[j] = x[j] * chirp(j, n, sign);
    const cplx c = chirp(j, n, -sign);
    b[j] = c;
    if (j > 0) b[m - j] = c;
  }
  fft_pow2(a, -1);
  fft_pow2(b, -1);
  for (int j = 0; j < m; ++j) a[j] *= b[j];
  fft_pow2(a, +1);
  const double inv_m = 1.0 / m;
  for (int k = 0; k < n; ++k) x[k] = a[k] * inv_m * chirp(k, n, sign);
}

}  // namespace

void dft_apply(CVec& x, int sign) {
  const int n = static_cast<int>(x.size());
  if (n <= 1) return;
  if (is_pow2(n)) {
    fft_pow2(x, sign);
  } else {
    fft_bluestein(x, sign);
  }
  x *= 1.0 / std::sqrt(static_cast<double>(n));
}

CMat dft_matrix(int n, int sign) {
  CMat f(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const long long q = (static_cast<long long>(j) * k) % n;
      const double ang = sign * 2.0 * std::numbers::pi * static_cast<double>(q) / n;
      f(j, k) = cplx(std::cos(ang), std::sin(ang)) * scale;
    }
  }
  return f;
}

namespace {

// Paley construction I for order q+1, q prime with q % 4 == 3:
// H = I + S with S = [[0, 1^T], [-1, Q]] skew, Q the Jacobsthal matrix.
RMat paley_hadamard(int q) {
  std::vector<int> residue(q, -1);
  for (int i = 1; i < q; ++i) residue[(i * i) % q] = 1;  // quadratic residues
  residue[0] = 0;
  const int n = q + 1;
  RMat h = RMat::Identity(n, n);
  for (int j = 1; j < n; ++j) {
    h(0, j) = 1.0;
    h(j, 0) = -1.0;
  }
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      if (i != j) h(1 + i, 1 + j) = residue[((i - j) % q + q) % q];
  return h;
}

// Splits n = 2^a * m; returns true and sets (syl = 2^a, base = m) when the
// order is constructible as Sylvester doublings over a base of order 1/12/20.
bool split_order(int n, int& syl, int& base) {
  if (n < 1) return false;
  int a = 0, t = n;
  while (t % 2 == 0) {
    t /= 2;
    ++a;
  }
  if (t == 1) {
    syl = n;
    base = 1;
    return true;
  }
  if ((t == 3 || t == 5) && a >= 2) {
    base = t * 4;  // 12 or 20
    syl = n / base;
    return true;
  }
  return false;
}

}  // namespace

bool hadamard_order_admissible(int n) {
  int syl = 0, base = 0;
  return split_order(n, syl, base);
}

RMat hadamard_matrix(int n) {
  int syl = 0, base = 0;
  if (!split_order(n, syl, base)) {
    throw ConfigError(
        "no Hadamard matrix of order " + std::to_string(n) +
        " is constructible; admissible orders are 2^a, 12*2^a and 20*2^a");
  }
  RMat h = (base == 1) ? RMat::Ones(1, 1) : paley_hadamard(base - 1);
  while (h.rows() < n) {
    const Eigen::Index k = h.rows();
    RMat d(2 * k, 2 * k);
    d.topLeftCorner(k, k) = h;
    d.topRightCorner(k, k) = h;
    d.bottomLeftCorner(k, k) = h;
    d.bottomRightCorner(k, k) = -h;
    h = std::move(d);
  }
  return h;
}

WalshPlan::WalshPlan(int n) : n_(n) {
  if (!split_order(n, syl_order_, base_order_)) {
    throw ConfigError(
        "no Hadamard matrix of order " + std::to_string(n) +
        " is constructible; admissible orders are 2^a, 12*2^a and 20*2^a");
  }
  base_ = (base_order_ == 1) ? RMat::Ones(1, 1) : paley_hadamard(base_order_ - 1);
}

void WalshPlan::apply(CVec& x, bool transpose) const {
  if (static_cast<int>(x.size()) != n_)
    throw ConfigError("WalshPlan: length mismatch");
  const int m = base_order_;
  const int s = syl_order_;
  // H = H_syl(2^a) (x) H_base(m): index l = j*m + i. Viewing x as an s-by-m
  // row-major matrix X, y = H x becomes Y = Hs * X * Hb^T (Hs is symmetric).
  // Sylvester factor: in-place butterflies over the j axis (stride m).
  for (int half = 1; half < s; half <<= 1) {
    const int block = 2 * half * m;
    for (int start = 0; start < n_; start += block) {
      for (int off = 0; off < half * m; ++off) {
        const cplx u = x[start + off];
        const cplx v = x[start + off + half * m];
        x[start + off] = u + v;
        x[start + off + half * m] = u - v;
      }
    }
  }
  if (m > 1) {
    // Base factor: Y_row = X_row * Hb^T (or * Hb for the transposed plan).
    Eigen::Map<Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
        xm(x.data(), s, m);
    if (transpose)
      xm = (xm * base_).eval();
    else
      xm = (xm * base_.transpose()).eval();
  }
  x *= 1.0 / std::sqrt(static_cast<double>(n_));
}

}  // namespace mash
