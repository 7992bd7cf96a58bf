// Copyright 2026 The recseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Identity generators built on the operators: the binomial anti-mean
// transform of order-2 sequences, r-bonacci numbers, polynomial sequences and
// polygonal / pyramidal numbers.

#pragma once

#include <utility>

#include "combinat.hpp"
#include "pipeline.hpp"

namespace recseq {

/// W(s0, s1, h, k): initial terms s0, s1 and characteristic polynomial
/// t^2 - h t + k.
struct Order2Spec {
  FieldElem s0, s1, h, k;

  Lrs to_lrs() const;
  /// h^2 - 4k
  FieldElem discriminant() const { return h * h - FieldElem(4) * k; }
  /// 2 s1 - s0 h
  FieldElem delta() const { return FieldElem(2) * s1 - s0 * h; }
};

/// C = L^(-h/2)(W) from the closed form
/// C_n = Delta^floor(n/2) / 2^n * delta^(n mod 2) * s0^(1 - n mod 2).
SeqPrefix anti_mean(const Order2Spec& w, std::size_t count);

/// sum_{i=0..2n} C(2n, i) (-1/2)^(2n-i) F_i; identically zero.
FieldElem fib_antimean_identity(std::size_t n);

/// t^r - t^{r-1} - ... - 1
Poly rbonacci_poly(std::size_t r);
SeqPrefix rbonacci(std::size_t r, std::size_t count);

/// I(rho(F^(r))) == F^(r+1) on the first count terms.
bool rbonacci_ladder_step(std::size_t r, std::size_t count);
/// I(u) == F^(1) and every ladder step for r = 1 .. r_max - 1.
bool rbonacci_ladder_check(std::size_t r_max, std::size_t count);

/// F^(r+1)_m == B_{m+1}(0, F^(r)_0, ..., F^(r)_m) for every m <= n.
bool rbonacci_bell_check(std::size_t r, std::size_t n);

/// F^(r)_{n+1} = F^(r-1)_n + sum_{i=1..n} F^(r)_{i-1} F^(r-1)_{n-i}, the
/// convolution obtained from F^(r) = I(rho(F^(r-1))); checked for n + 1 < count.
bool rbonacci_cross_order_check(std::size_t r, std::size_t count);

/// P^(2)_q(n) = (q-2) n^2 / 2 + (4-q) n / 2. Requires q >= 2.
FieldElem polygonal(long q, long n);
/// P^(d)_q(n), by partial sums of P^(d-1)_q for d > 2. Requires d >= 2.
FieldElem pyramidal(long q, long d, long n);
SeqPrefix pyramidal_sequence(long q, long d, std::size_t count);

/// L^(1)((0,1,q-2,0,...)) == (P_q(n)) and L^(1)((1,q-1,q-2,0,...)) ==
/// (P_q(n+1)), over count terms.
bool polygonal_identities_check(long q, std::size_t count);

/// (L^(-1)(f(0), f(1), ...), (Delta^n f(0))_n): equal as streams.
std::pair<SeqPrefix, SeqPrefix> one_click(const PolyFunc& f, std::size_t count);

}  // namespace recseq
