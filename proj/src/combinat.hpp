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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lrs.hpp"

namespace recseq {

/// Polynomial function f(m) of an integer variable, stored like Poly.
using PolyFunc = Poly;

/// Stirling numbers of the second kind {s,k} and unsigned first kind [k,h]
/// up to a fixed size. Read-only after construction.
class StirlingTables {
 public:
  explicit StirlingTables(std::size_t max_n);

  std::size_t max_n() const { return second_.size() - 1; }
  /// Throws DomainError unless 0 <= k <= s <= max_n.
  const BigInt& second(std::size_t s, std::size_t k) const;
  const BigInt& first_unsigned(std::size_t k, std::size_t h) const;

 private:
  std::vector<std::vector<BigInt>> second_;
  std::vector<std::vector<BigInt>> first_;
};

BigInt stirling2(long s, long k);
BigInt stirling1_unsigned(long k, long h);

/// c_s(m, alpha, y) as a polynomial in m:
/// sum_h (sum_{k=h..s} {s,k}[k,h](-1)^{k-h} (y/(alpha+y))^k) m^h.
/// Throws DomainError when alpha + y == 0.
PolyFunc c_poly(std::size_t s, const FieldElem& alpha, const FieldElem& y);
FieldElem c_coeff(std::size_t s, const FieldElem& m, const FieldElem& alpha, const FieldElem& y);

/// Q with sum_i C(m,i) y^i alpha^{m-i} P(i) = (alpha+y)^m Q(m).
PolyFunc q_poly(const PolyFunc& p, const FieldElem& alpha, const FieldElem& y);

/// Partial and complete ordinary Bell polynomials evaluated at a concrete
/// argument t = (t_1, t_2, ...), given 0-based (args[0] = t_1). Built by
/// powering the truncated series sum_n t_n z^n.
class BellTable {
 public:
  /// Throws DomainError if args has fewer than max_n entries.
  BellTable(std::span<const FieldElem> args, std::size_t max_n);

  std::size_t max_n() const { return max_n_; }
  /// B_{n,k}; zero outside 1 <= k <= n (B_{0,0} = 1).
  FieldElem partial(std::size_t n, std::size_t k) const;
  /// B_n = sum_{k=1..n} B_{n,k}; B_0 = 0.
  FieldElem complete(std::size_t n) const;

 private:
  std::size_t max_n_;
  // powers_[k][n] = coefficient of z^n in (sum t_j z^j)^k
  std::vector<std::vector<FieldElem>> powers_;
};

FieldElem bell_partial(std::span<const FieldElem> args, std::size_t n, std::size_t k);
FieldElem bell_complete(std::span<const FieldElem> args, std::size_t n);

/// invert_stream(a, 1)[n] == B_{n+1}(a_0, a_1, ...).
bool bell_of_invert_check(std::span<const FieldElem> a, std::size_t n);

/// T^(k)_h = C(h+k-2, k-1), with C(n, .) = 0 for n < 0.
BigInt figurate(long k, long h);
/// (T^(k)_0 .. T^(k)_{count-1}) by iterated partial sums of (0,1,1,1,...).
std::vector<BigInt> figurate_by_partial_sums(long k, std::size_t count);

/// Delta^0 f(0) .. Delta^order f(0) from values f(0), f(1), ...
/// Throws DomainError when fewer than order + 1 values are given.
SeqPrefix finite_differences(std::span<const FieldElem> values, std::size_t order);

/// Delta^i f(0) for i = 0 .. deg f.
SeqPrefix binomial_basis(const PolyFunc& f);

/// sum_i deltas[i] * C(n, i).
FieldElem from_binomial_basis(std::span<const FieldElem> deltas, long n);

/// m(m-1)...(m-k+1)
BigInt falling_factorial(long m, long k);

}  // namespace recseq
