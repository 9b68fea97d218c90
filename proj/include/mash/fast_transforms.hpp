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

#ifndef MASH_FAST_TRANSFORMS_HPP
#define MASH_FAST_TRANSFORMS_HPP

#include <vector>

#include "mash/types.hpp"

namespace mash {

/// Unitary DFT applied in place: y_k = L^{-1/2} sum_j x_j exp(sign*2*pi*i*jk/L).
/// sign = -1 is the forward transform. Runs in O(L log L) for any L
/// (radix-2 butterflies for powers of two, Bluestein otherwise).
void dft_apply(CVec& x, int sign);

/// Dense unitary DFT matrix, entries exp(sign*2*pi*i*jk/n)/sqrt(n).
CMat dft_matrix(int n, int sign = -1);

/// True if a Hadamard matrix of order n is constructible here:
/// n = 2^a, 12*2^a or 20*2^a (Sylvester doubling over a Paley base).
bool hadamard_order_admissible(int n);

/// +/-1 Hadamard matrix of order n; throws ConfigError for other orders.
RMat hadamard_matrix(int n);

/// Fast application of the unitary Walsh-Hadamard matrix F = H/sqrt(n).
/// The base (Paley) factor is a small dense block; the Sylvester factor uses
/// butterfly passes, so one apply costs O(n log n + n*m) for base order m.
class WalshPlan {
 public:
  explicit WalshPlan(int n);

  int size() const { return n_; }

  /// x <- F x (or F^T x when transpose is set; F is real so F^T = F^H).
  void apply(CVec& x, bool transpose = false) const;

 private:
  int n_ = 0;
  int base_order_ = 1;  // m
  int syl_order_ = 1;   // 2^a with n = 2^a * m
  RMat base_;           // m x m, entries +/-1
};

}  // namespace mash

#endif  // MASH_FAST_TRANSFORMS_HPP
