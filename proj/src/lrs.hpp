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

// Linear recurrent sequences in their two equivalent forms: a monic
// characteristic polynomial with initial conditions, and a rational
// generating function u(t) / f^R(t).

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "poly.hpp"

namespace recseq {

/// Finite prefix a_0 .. a_{N-1} of a sequence.
using SeqPrefix = std::vector<FieldElem>;

/// Sequence with a_n = sum_{i=1..r} h_i a_{n-i} for n >= r, where the
/// characteristic polynomial is t^r - sum_i h_i t^{r-i}.
class Lrs {
 public:
  /// Throws DomainError unless char_poly is monic of degree r >= 1 and
  /// init holds exactly r terms.
  Lrs(Poly char_poly, std::vector<FieldElem> init);

  const Poly& char_poly() const { return char_poly_; }
  std::span<const FieldElem> init() const { return init_; }
  std::size_t order() const { return init_.size(); }
  /// Recurrence coefficient h_i, 1 <= i <= r.
  FieldElem h(std::size_t i) const;
  std::uint32_t radicand() const;

  friend bool operator==(const Lrs&, const Lrs&) = default;

 private:
  Poly char_poly_;
  std::vector<FieldElem> init_;
};

/// Generating function num(t) / den(t).
struct GenFun {
  Poly num;
  Poly den;
  friend bool operator==(const GenFun&, const GenFun&) = default;
};

/// A recurrence that holds from index valid_from on: the shifted sequence
/// (a_{n0}, a_{n0+1}, ...) satisfies char_poly from its start. The degree of
/// char_poly may be 0, meaning the terms vanish from valid_from on.
struct Recurrence {
  Poly char_poly;
  std::size_t valid_from = 0;
  /// a_0 .. a_{n0 + deg - 1}
  SeqPrefix head;

  SeqPrefix terms(std::size_t count) const;
  /// Equivalent full-degree Lrs with characteristic polynomial
  /// t^valid_from * char_poly, which holds from index 0.
  Lrs to_lrs() const;
};

struct MinimalRecurrence {
  Poly char_poly;
  std::size_t valid_from = 0;
};

SeqPrefix terms(const Lrs& s, std::size_t count);

/// u(t) with u_0 = s_0 and u_i = s_i - sum_{j=1..i} h_j s_{i-j}.
Poly numerator(const Lrs& s);

/// (numerator(s), reflect(char_poly, r)).
GenFun genfun(const Lrs& s);

/// Power series expansion of num/den. Throws DomainError unless den(0) == 1.
SeqPrefix series(const GenFun& g, std::size_t count);

/// Reads a recurrence off a generating function. The characteristic
/// polynomial is the reflection of den at its own degree, so it can be
/// shorter than the one the generating function was built from; the
/// validity index records where it starts to hold. Throws DivisionByZero for
/// a zero denominator and DomainError when den(0) == 0.
Recurrence recurrence_from_genfun(const GenFun& g);

/// Smallest degree monic polynomial (and smallest start index n0 <= degree)
/// whose recurrence holds on the whole prefix. Degrees e are tried while the
/// prefix has at least 2e + 2 terms; nullopt means the data is insufficient.
std::optional<MinimalRecurrence> minimal_recurrence(std::span<const FieldElem> prefix);

/// True iff a_n = sum h_i a_{n-i} holds for every n >= n0 + deg in the prefix.
bool recurrence_holds(const Poly& monic, std::span<const FieldElem> prefix, std::size_t n0);

/// Order r sequence with initial conditions (0, ..., 0, 1).
Lrs impulse(std::size_t r, const Poly& char_poly);

/// u = (1, 0, 0, ...), characteristic polynomial t.
Lrs startsequence();

/// Exact Gaussian elimination. Returns a solution of A x = b (free variables
/// set to zero) or nullopt when inconsistent.
std::optional<std::vector<FieldElem>> solve_linear(std::vector<std::vector<FieldElem>> a,
                                                   std::vector<FieldElem> b);

}  // namespace recseq
