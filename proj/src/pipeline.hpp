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

// Construction and deconstruction of impulse sequences: composing sigma, rho,
// I^(z) and L^(z) to move between the startsequence u = (1, 0, 0, ...) and
// any impulse sequence.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "operators.hpp"

namespace recseq {

/// Ordered operator steps, stored in application order (steps()[0] acts
/// first). The text form follows function composition and is read right to
/// left: "I(1) . rho . I(1)".
class Pipeline {
 public:
  Pipeline() = default;
  explicit Pipeline(std::vector<OperatorStep> steps) : steps_(std::move(steps)) {}

  std::span<const OperatorStep> steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }

  /// Appends a step that acts after all existing ones.
  Pipeline& then(OperatorStep step) {
    steps_.push_back(std::move(step));
    return *this;
  }

  /// Composition text, rightmost step applied first.
  std::string to_string() const;

  friend bool operator==(const Pipeline&, const Pipeline&) = default;

 private:
  std::vector<OperatorStep> steps_;
};

/// Characteristic polynomial after each step of an Lrs application.
struct TraceEntry {
  OperatorStep step;
  Poly char_poly;
};

struct Trace {
  Lrs result;
  std::vector<TraceEntry> entries;
};

Lrs apply(const Pipeline& pipe, const Lrs& s);
Trace apply_traced(const Pipeline& pipe, const Lrs& s);
SeqPrefix apply(const Pipeline& pipe, std::span<const FieldElem> a);

/// Steps L^(z_1), rho, L^(z_2), rho, ..., L^(z_k) with every step kept.
Pipeline l_pipeline_from_params(std::span<const FieldElem> z);

/// L-construction parameters for the zeros alpha_1..alpha_r, consumed in the
/// given order: z_r = alpha_1 and z_{r-j} = alpha_{j+1} - alpha_j.
std::vector<FieldElem> l_params_from_zeros(std::span<const FieldElem> zeros);

/// Pipeline sending u to the impulse sequence with characteristic polynomial
/// prod (t - alpha_i). Binomial steps with a zero parameter are omitted.
Pipeline l_construct(std::span<const FieldElem> zeros);

/// Inverse of l_construct: L^(-alpha_1), sigma, L^(alpha_1 - alpha_2), ...
/// Throws DomainError unless s is an impulse sequence whose characteristic
/// polynomial equals prod (t - alpha_i).
Pipeline l_deconstruct(const Lrs& s, std::span<const FieldElem> zeros);

/// I(h_1), rho, I(h_2), ..., rho, I(h_r): u to the impulse sequence of
/// t^r - sum h_i t^{r-i}. Invert steps with zero parameter are omitted.
Pipeline i_construct(std::span<const FieldElem> h);

/// Inverse of i_construct. Throws DomainError unless s is an impulse sequence.
Pipeline i_deconstruct(const Lrs& s);

/// (v^(k))_n after k steps of L-construction with parameters z_1..z_k,
/// by the nested binomial sum over chains 0 < h_1 < ... < h_{k-1} <= n.
FieldElem v_explicit(std::span<const FieldElem> z, std::size_t n);

bool is_impulse(const Lrs& s);

}  // namespace recseq
