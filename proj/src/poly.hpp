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
#include <string>
#include <vector>

#include "arith.hpp"

namespace recseq {

/// Dense univariate polynomial in t, lowest degree first. Trailing zero
/// coefficients are always trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<FieldElem> coeffs);

  static Poly constant(FieldElem c);
  /// c * t^k
  static Poly monomial(FieldElem c, std::size_t k);
  /// (t - root)
  static Poly linear_factor(const FieldElem& root);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of t^i; zero past the degree.
  FieldElem coeff(std::size_t i) const;
  std::span<const FieldElem> coeffs() const { return coeffs_; }
  const FieldElem& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading() == FieldElem(1); }
  /// Field tag shared by all coefficients (0 when all rational).
  std::uint32_t radicand() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const FieldElem& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const FieldElem& c) { return a *= c; }
  friend Poly operator*(const FieldElem& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Printed highest degree first, e.g. "t^2 - t - 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<FieldElem> coeffs_;
};

/// t^r * p(1/t). Throws DomainError when deg(p) > r.
Poly reflect(const Poly& p, std::size_t r);

/// q(t) = p(t - y), by binomial expansion of every (t - y)^i.
Poly shift_argument(const Poly& p, const FieldElem& y);

/// Horner evaluation.
FieldElem eval(const Poly& p, const FieldElem& t0);

Poly pow(const Poly& p, unsigned exp);

/// Scales so that the leading coefficient is 1. Throws on the zero polynomial.
Poly make_monic(const Poly& p);

/// p / t; requires p(0) == 0.
Poly divide_by_t(const Poly& p);

Poly multiply_by_t(const Poly& p);

/// Product of (t - root) over all roots.
Poly from_roots(std::span<const FieldElem> roots);

}  // namespace recseq
