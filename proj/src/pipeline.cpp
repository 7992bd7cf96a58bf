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

#include "pipeline.hpp"

#include <algorithm>
#include <functional>

#include "error.hpp"

namespace recseq {

std::string Pipeline::to_string() const {
  std::string out;
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    if (!out.empty()) out += " . ";
    out += it->to_string();
  }
  return out;
}

Lrs apply(const Pipeline& pipe, const Lrs& s) { return apply_traced(pipe, s).result; }

Trace apply_traced(const Pipeline& pipe, const Lrs& s) {
  Trace trace{s, {}};
  for (const auto& step : pipe.steps()) {
    trace.result = apply_step(step, trace.result);
    trace.entries.push_back({step, trace.result.char_poly()});
  }
  return trace;
}

SeqPrefix apply(const Pipeline& pipe, std::span<const FieldElem> a) {
  SeqPrefix cur(a.begin(), a.end());
  for (const auto& step : pipe.steps()) cur = apply_step(step, cur);
  return cur;
}

Pipeline l_pipeline_from_params(std::span<const FieldElem> z) {
  Pipeline pipe;
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (k > 0) pipe.then(OperatorStep::rho());
    pipe.then(OperatorStep::binomial(z[k]));
  }
  return pipe;
}

std::vector<FieldElem> l_params_from_zeros(std::span<const FieldElem> zeros) {
  const std::size_t r = zeros.size();
  std::vector<FieldElem> z(r);
  if (r == 0) return z;
  z[r - 1] = zeros[0];
  for (std::size_t j = 1; j < r; ++j) z[r - 1 - j] = zeros[j] - zeros[j - 1];
  return z;
}

Pipeline l_construct(std::span<const FieldElem> zeros) {
  if (zeros.empty()) throw DomainError("l_construct: need at least one zero");
  const auto z = l_params_from_zeros(zeros);
  Pipeline pipe;
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (k > 0) pipe.then(OperatorStep::rho());
    if (!z[k].is_zero()) pipe.then(OperatorStep::binomial(z[k]));
  }
  return pipe;
}

bool is_impulse(const Lrs& s) {
  const auto init = s.init();
  for (std::size_t i = 0; i + 1 < init.size(); ++i) {
    if (!init[i].is_zero()) return false;
  }
  return init.back() == FieldElem(1);
}

Pipeline l_deconstruct(const Lrs& s, std::span<const FieldElem> zeros) {
  if (!is_impulse(s)) throw DomainError("l_deconstruct: expected impulse initial conditions");
  if (zeros.size() != s.order() || from_roots(zeros) != s.char_poly()) {
    throw DomainError("l_deconstruct: the given zeros do not factor " + s.char_poly().to_string());
  }
  Pipeline pipe;
  for (std::size_t j = 0; j < zeros.size(); ++j) {
    const FieldElem shift = j == 0 ? -zeros[0] : zeros[j - 1] - zeros[j];
    if (j > 0) pipe.then(OperatorStep::sigma());
    if (!shift.is_zero()) pipe.then(OperatorStep::binomial(shift));
  }
  return pipe;
}

Pipeline i_construct(std::span<const FieldElem> h) {
  Pipeline pipe;
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (k > 0) pipe.then(OperatorStep::rho());
    if (!h[k].is_zero()) pipe.then(OperatorStep::invert(h[k]));
  }
  return pipe;
}

Pipeline i_deconstruct(const Lrs& s) {
  if (!is_impulse(s)) throw DomainError("i_deconstruct: expected impulse initial conditions");
  Pipeline pipe;
  for (std::size_t i = s.order(); i >= 1; --i) {
    if (i < s.order()) pipe.then(OperatorStep::sigma());
    const FieldElem hi = s.h(i);
    if (!hi.is_zero()) pipe.then(OperatorStep::invert(-hi));
  }
  return pipe;
}

FieldElem v_explicit(std::span<const FieldElem> z, std::size_t n) {
  if (z.empty()) throw DomainError("v_explicit: need k >= 1 parameters");
  // level(j, upper) sums over h_j in [j, upper - 1] with upper = h_{j+1};
  // level 0 is the innermost factor z_1^(h_1 - 1).
  std::function<FieldElem(std::size_t, long)> level = [&](std::size_t j, long upper) -> FieldElem {
    if (j == 0) return pow(z[0], static_cast<unsigned long>(upper - 1));
    FieldElem acc;
    for (long hj = static_cast<long>(j); hj <= upper - 1; ++hj) {
      const FieldElem weight = FieldElem(binomial(upper - 1, hj)) *
                               pow(z[j], static_cast<unsigned long>(upper - hj - 1));
      if (weight.is_zero()) continue;
      acc += weight * level(j - 1, hj);
    }
    return acc;
  };
  return level(z.size() - 1, static_cast<long>(n) + 1);
}

}  // namespace recseq
