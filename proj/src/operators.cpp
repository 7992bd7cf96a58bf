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

#include "operators.hpp"

#include <stdexcept>

#include "error.hpp"

namespace recseq {

std::string OperatorStep::to_string() const {
  switch (kind_) {
    case OpKind::kSigma: return "sigma";
    case OpKind::kRho: return "rho";
    case OpKind::kInvert: return "I(" + param_->to_string() + ")";
    case OpKind::kBinomial: return "L(" + param_->to_string() + ")";
  }
  return {};
}

SeqPrefix binomial_stream(std::span<const FieldElem> a, const FieldElem& y) {
  const std::size_t n_terms = a.size();
  std::vector<FieldElem> ypow(n_terms);
  if (n_terms > 0) ypow[0] = FieldElem(1);
  for (std::size_t i = 1; i < n_terms; ++i) ypow[i] = ypow[i - 1] * y;

  SeqPrefix c(n_terms);
  for (std::size_t n = 0; n < n_terms; ++n) {
    FieldElem acc;
    for (std::size_t i = 0; i <= n; ++i) {
      if (a[i].is_zero() || ypow[n - i].is_zero()) continue;
      acc += FieldElem(binomial(static_cast<long>(n), static_cast<long>(i))) * ypow[n - i] * a[i];
    }
    c[n] = std::move(acc);
  }
  return c;
}

SeqPrefix invert_stream(std::span<const FieldElem> a, const FieldElem& x) {
  SeqPrefix b;
  b.reserve(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    FieldElem conv;
    for (std::size_t j = 0; j < n; ++j) {
      if (!a[n - 1 - j].is_zero()) conv += a[n - 1 - j] * b[j];
    }
    b.push_back(a[n] + x * conv);
  }
  return b;
}

SeqPrefix sigma(std::span<const FieldElem> a) {
  if (a.empty()) return {};
  return SeqPrefix(a.begin() + 1, a.end());
}

SeqPrefix rho(std::span<const FieldElem> a) {
  SeqPrefix out;
  out.reserve(a.size() + 1);
  out.emplace_back();
  out.insert(out.end(), a.begin(), a.end());
  return out;
}

Poly binomial_charpoly(const Poly& monic, const FieldElem& y) {
  if (!monic.is_monic()) throw DomainError("binomial_charpoly: polynomial must be monic");
  const auto r = static_cast<std::size_t>(monic.degree());
  // Coefficient h_k of t^{r-k}.
  std::vector<FieldElem> hk(r + 1);
  for (std::size_t k = 0; k <= r; ++k) hk[k] = monic.coeff(r - k);
  std::vector<FieldElem> negpow(r + 1);
  negpow[0] = FieldElem(1);
  for (std::size_t i = 1; i <= r; ++i) negpow[i] = negpow[i - 1] * (-y);

  std::vector<FieldElem> out(r + 1);
  for (std::size_t k = 0; k <= r; ++k) {
    FieldElem pk;
    for (std::size_t i = 0; i <= k; ++i) {
      if (hk[i].is_zero()) continue;
      pk += FieldElem(binomial(static_cast<long>(r - i), static_cast<long>(k - i))) * hk[i] * negpow[k - i];
    }
    out[r - k] = std::move(pk);
  }
  return Poly(std::move(out));
}

std::vector<FieldElem> invert_coefficients(const Lrs& s, const FieldElem& x) {
  const std::size_t r = s.order();
  const auto init = s.init();
  std::vector<FieldElem> out(r);
  out[0] = s.h(1) + x * init[0];
  for (std::size_t i = 1; i < r; ++i) {
    FieldElem conv;
    for (std::size_t j = 1; j <= i; ++j) conv += s.h(j) * init[i - j];
    out[i] = s.h(i + 1) + x * init[i] - x * conv;
  }
  return out;
}

Poly invert_charpoly(const Lrs& s, const FieldElem& x) {
  const std::size_t r = s.order();
  const auto h = invert_coefficients(s, x);
  std::vector<FieldElem> coeffs(r + 1);
  coeffs[r] = FieldElem(1);
  for (std::size_t i = 1; i <= r; ++i) coeffs[r - i] = -h[i - 1];
  return Poly(std::move(coeffs));
}

Poly impulse_binomial_polytransform(const Poly& f, const FieldElem& z) { return shift_argument(f, z); }

Poly impulse_invert_polytransform(const Poly& f, const FieldElem& z) {
  return f - Poly::constant(z);
}

Lrs binomial_lrs(const Lrs& s, const FieldElem& y) {
  Poly f = binomial_charpoly(s.char_poly(), y);
#ifndef NDEBUG
  if (f != shift_argument(s.char_poly(), y)) {
    throw std::logic_error("binomial_lrs: closed form and shift_argument disagree");
  }
#endif
  const SeqPrefix head = terms(s, s.order());
  return Lrs(std::move(f), binomial_stream(head, y));
}

GenFun invert_genfun(const Lrs& s, const FieldElem& x) {
  GenFun g = genfun(s);
  g.den -= Poly::monomial(x, 1) * g.num;
  return g;
}

Lrs invert_lrs(const Lrs& s, const FieldElem& x) {
  const SeqPrefix head = terms(s, s.order());
  return Lrs(invert_charpoly(s, x), invert_stream(head, x));
}

std::optional<FieldElem> degree_reduction_param(const Lrs& s) {
  const std::size_t r = s.order();
  const FieldElem u_last = numerator(s).coeff(r - 1);
  if (!is_invertible(u_last)) return std::nullopt;
  return -s.h(r) * u_last.inverse();
}

Lrs invert_preimage(const Poly& f, const Poly& g, const FieldElem& x) {
  if (!is_invertible(x)) throw DomainError("invert_preimage: x must be invertible");
  if (!f.is_monic() || !g.is_monic() || f.degree() != g.degree() || f.degree() < 1) {
    throw DomainError("invert_preimage: expected two monic polynomials of equal degree >= 1");
  }
  const auto r = static_cast<std::size_t>(f.degree());
  auto h = [&](std::size_t i) { return -f.coeff(r - i); };
  auto big_h = [&](std::size_t i) { return -g.coeff(r - i); };
  const FieldElem xinv = x.inverse();
  std::vector<FieldElem> s(r);
  s[0] = (big_h(1) - h(1)) * xinv;
  for (std::size_t i = 1; i < r; ++i) {
    FieldElem conv;
    for (std::size_t j = 1; j <= i; ++j) conv += h(j) * s[i - j];
    s[i] = (big_h(i + 1) - h(i + 1)) * xinv + conv;
  }
  return Lrs(f, std::move(s));
}

Lrs rho(const Lrs& s) {
  std::vector<FieldElem> init;
  init.reserve(s.order() + 1);
  init.emplace_back();
  init.insert(init.end(), s.init().begin(), s.init().end());
  return Lrs(multiply_by_t(s.char_poly()), std::move(init));
}

Lrs sigma(const Lrs& s) {
  const std::size_t r = s.order();
  if (s.char_poly().coeff(0).is_zero()) {
    if (r == 1) return Lrs(s.char_poly(), {FieldElem()});
    return Lrs(divide_by_t(s.char_poly()), std::vector<FieldElem>(s.init().begin() + 1, s.init().end()));
  }
  // No zero root: same recurrence, initial conditions advanced by one. The
  // shifted numerator (u - a_0 f^R) / t has the same denominator.
  const GenFun g = sigma(genfun(s));
  return Lrs(s.char_poly(), series(g, r));
}

GenFun sigma(const GenFun& g) {
  const SeqPrefix first = series(g, 1);
  Poly top = g.num - g.den * first[0];
  return {divide_by_t(top), g.den};
}

GenFun rho(const GenFun& g) { return {multiply_by_t(g.num), g.den}; }

SeqPrefix apply_step(const OperatorStep& step, std::span<const FieldElem> a) {
  switch (step.kind()) {
    case OpKind::kSigma: return sigma(a);
    case OpKind::kRho: return rho(a);
    case OpKind::kInvert: return invert_stream(a, *step.param());
    case OpKind::kBinomial: return binomial_stream(a, *step.param());
  }
  throw std::logic_error("unknown operator kind");
}

Lrs apply_step(const OperatorStep& step, const Lrs& s) {
  switch (step.kind()) {
    case OpKind::kSigma: return sigma(s);
    case OpKind::kRho: return rho(s);
    case OpKind::kInvert: return invert_lrs(s, *step.param());
    case OpKind::kBinomial: return binomial_lrs(s, *step.param());
  }
  throw std::logic_error("unknown operator kind");
}

}  // namespace recseq
