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

// The Binomial operator L^(y), the Invert operator I^(x) and the two shifts
// sigma / rho, both on finite prefixes and on recurrences.

#pragma once

#include <optional>
#include <string>

#include "lrs.hpp"

namespace recseq {

enum class OpKind { kSigma, kRho, kInvert, kBinomial };

/// One operator application. param is present iff kind is kInvert or
/// kBinomial.
class OperatorStep {
 public:
  static OperatorStep sigma() { return OperatorStep(OpKind::kSigma, std::nullopt); }
  static OperatorStep rho() { return OperatorStep(OpKind::kRho, std::nullopt); }
  static OperatorStep invert(FieldElem x) { return OperatorStep(OpKind::kInvert, std::move(x)); }
  static OperatorStep binomial(FieldElem y) { return OperatorStep(OpKind::kBinomial, std::move(y)); }

  OpKind kind() const { return kind_; }
  const std::optional<FieldElem>& param() const { return param_; }
  /// "sigma", "rho", "I(x)" or "L(y)".
  std::string to_string() const;

  friend bool operator==(const OperatorStep&, const OperatorStep&) = default;

 private:
  OperatorStep(OpKind kind, std::optional<FieldElem> param) : kind_(kind), param_(std::move(param)) {}
  OpKind kind_;
  std::optional<FieldElem> param_;
};

// --- streams -------------------------------------------------------------

/// c_n = sum_{i<=n} C(n, i) y^(n-i) a_i. Same length as the input.
SeqPrefix binomial_stream(std::span<const FieldElem> a, const FieldElem& y);

/// b_0 = a_0, b_n = a_n + x sum_{j<n} a_{n-1-j} b_j. Same length as the input.
SeqPrefix invert_stream(std::span<const FieldElem> a, const FieldElem& x);

/// (a_1, a_2, ...): one term shorter.
SeqPrefix sigma(std::span<const FieldElem> a);
/// (0, a_0, a_1, ...): one term longer.
SeqPrefix rho(std::span<const FieldElem> a);

// --- characteristic polynomials ------------------------------------------

/// L^(y)(f) through sum_k p_k t^{r-k} with
/// p_k = sum_{i<=k} C(r-i, k-i) h_i (-y)^{k-i}, h_0 = 1 and f = sum h_k t^{r-k}.
Poly binomial_charpoly(const Poly& monic, const FieldElem& y);

/// New recurrence coefficients h'_1..h'_r of I^(x)(s):
/// h_1 + x s_0 and h_{i+1} + x s_i - x sum_{j=1..i} h_j s_{i-j}.
std::vector<FieldElem> invert_coefficients(const Lrs& s, const FieldElem& x);

/// t^r - sum h'_i t^{r-i}, the full-degree characteristic polynomial of I^(x)(s).
Poly invert_charpoly(const Lrs& s, const FieldElem& x);

/// For impulse sequences: f(t - z).
Poly impulse_binomial_polytransform(const Poly& f, const FieldElem& z);
/// For impulse sequences: f(t) - z.
Poly impulse_invert_polytransform(const Poly& f, const FieldElem& z);

// --- recurrences ---------------------------------------------------------

/// L^(y)(s): characteristic polynomial f(t - y), initial terms from the stream.
Lrs binomial_lrs(const Lrs& s, const FieldElem& y);

/// Generating function of I^(x)(s): u(t) / (f^R(t) - x t u(t)). Its
/// denominator may have lower degree than r.
GenFun invert_genfun(const Lrs& s, const FieldElem& x);

/// I^(x)(s) as an order-r Lrs with the full-degree polynomial from
/// invert_charpoly (which then has zero roots when the degree collapses).
Lrs invert_lrs(const Lrs& s, const FieldElem& x);

/// x = -h_r / u_{r-1}, the parameter that kills the t^r coefficient of the
/// Invert denominator; nullopt when u_{r-1} = 0.
std::optional<FieldElem> degree_reduction_param(const Lrs& s);

/// Initial conditions of the unique a with characteristic polynomial f such
/// that I^(x)(a) has characteristic polynomial g. Requires deg f == deg g
/// and x invertible.
Lrs invert_preimage(const Poly& f, const Poly& g, const FieldElem& x);

/// rho on an Lrs multiplies the polynomial by t.
Lrs rho(const Lrs& s);

/// sigma on an Lrs: divides the polynomial by t when it has a zero root;
/// otherwise keeps it and advances the initial conditions.
Lrs sigma(const Lrs& s);

/// sigma on a generating function: (A(t) - a_0) / t.
GenFun sigma(const GenFun& g);
/// rho on a generating function: t A(t).
GenFun rho(const GenFun& g);

SeqPrefix apply_step(const OperatorStep& step, std::span<const FieldElem> a);
Lrs apply_step(const OperatorStep& step, const Lrs& s);

}  // namespace recseq
