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

#include "poly.hpp"

#include <algorithm>

#include "error.hpp"

namespace recseq {

Poly::Poly(std::vector<FieldElem> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(FieldElem c) { return Poly(std::vector<FieldElem>{std::move(c)}); }

Poly Poly::monomial(FieldElem c, std::size_t k) {
  std::vector<FieldElem> v(k + 1);
  v[k] = std::move(c);
  return Poly(std::move(v));
}

Poly Poly::linear_factor(const FieldElem& root) {
  return Poly(std::vector<FieldElem>{-root, FieldElem(1)});
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElem Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : FieldElem();
}

std::uint32_t Poly::radicand() const {
  std::uint32_t d = 0;
  for (const auto& c : coeffs_) d = join_radicand(d, c.radicand());
  return d;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<FieldElem> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const FieldElem& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

namespace {

// Coefficient text for c*t^k when k > 0, without sign handling for
// rationals. Irrational coefficients are parenthesised.
std::string term_text(const FieldElem& magnitude, std::size_t k) {
  std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
  if (!magnitude.is_rational()) {
    const std::string c = "(" + magnitude.to_string() + ")";
    return k == 0 ? c : c + "*" + mono;
  }
  if (k == 0) return magnitude.to_string();
  if (magnitude == FieldElem(1)) return mono;
  return magnitude.to_string() + "*" + mono;
}

}  // namespace

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const FieldElem& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool negative = c.is_rational() && c.a().sign() < 0;
    const FieldElem magnitude = negative ? -c : c;
    if (out.empty()) {
      out = (negative ? "-" : "") + term_text(magnitude, i);
    } else {
      out += (negative ? " - " : " + ") + term_text(magnitude, i);
    }
  }
  return out;
}

Poly reflect(const Poly& p, std::size_t r) {
  if (p.degree() > static_cast<long>(r)) {
    throw DomainError("reflect: degree " + std::to_string(p.degree()) + " exceeds bound " +
                      std::to_string(r));
  }
  std::vector<FieldElem> out(r + 1);
  for (std::size_t i = 0; i <= r; ++i) out[i] = p.coeff(r - i);
  return Poly(std::move(out));
}

Poly shift_argument(const Poly& p, const FieldElem& y) {
  if (p.is_zero()) return p;
  const std::size_t n = p.coeffs().size();
  std::vector<FieldElem> neg_pow(n);
  neg_pow[0] = FieldElem(1);
  for (std::size_t i = 1; i < n; ++i) neg_pow[i] = neg_pow[i - 1] * (-y);

  std::vector<FieldElem> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const FieldElem& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    // c * (t - y)^i = c * sum_j C(i, j) (-y)^(i-j) t^j
    for (std::size_t j = 0; j <= i; ++j) {
      out[j] += c * FieldElem(binomial(static_cast<long>(i), static_cast<long>(j))) * neg_pow[i - j];
    }
  }
  return Poly(std::move(out));
}

FieldElem eval(const Poly& p, const FieldElem& t0) {
  FieldElem acc;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * t0 + p.coeffs()[i];
  return acc;
}

Poly pow(const Poly& p, unsigned exp) {
  Poly out = Poly::constant(FieldElem(1));
  for (unsigned i = 0; i < exp; ++i) out *= p;
  return out;
}

Poly make_monic(const Poly& p) {
  if (p.is_zero()) throw DomainError("the zero polynomial has no monic normalisation");
  return p * p.leading().inverse();
}

Poly divide_by_t(const Poly& p) {
  if (p.is_zero()) return p;
  if (!p.coeff(0).is_zero()) throw DomainError("divide_by_t: nonzero constant term");
  return Poly(std::vector<FieldElem>(p.coeffs().begin() + 1, p.coeffs().end()));
}

Poly multiply_by_t(const Poly& p) {
  if (p.is_zero()) return p;
  std::vector<FieldElem> out;
  out.reserve(p.coeffs().size() + 1);
  out.emplace_back();
  out.insert(out.end(), p.coeffs().begin(), p.coeffs().end());
  return Poly(std::move(out));
}

Poly from_roots(std::span<const FieldElem> roots) {
  Poly out = Poly::constant(FieldElem(1));
  for (const auto& r : roots) out *= Poly::linear_factor(r);
  return out;
}

}  // namespace recseq
