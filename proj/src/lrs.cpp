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

#include "lrs.hpp"

#include <algorithm>

#include "error.hpp"

namespace recseq {

Lrs::Lrs(Poly char_poly, std::vector<FieldElem> init)
    : char_poly_(std::move(char_poly)), init_(std::move(init)) {
  if (char_poly_.degree() < 1) throw DomainError("characteristic polynomial must have degree >= 1");
  if (!char_poly_.is_monic()) throw DomainError("characteristic polynomial must be monic");
  if (static_cast<long>(init_.size()) != char_poly_.degree()) {
    throw DomainError("expected " + std::to_string(char_poly_.degree()) +
                      " initial conditions, got " + std::to_string(init_.size()));
  }
}

FieldElem Lrs::h(std::size_t i) const { return -char_poly_.coeff(order() - i); }

std::uint32_t Lrs::radicand() const {
  std::uint32_t d = char_poly_.radicand();
  for (const auto& x : init_) d = join_radicand(d, x.radicand());
  return d;
}

namespace {

// Extends `out` in place with a_n = sum_{i=1..e} h_i a_{n-i} up to count.
void run_recurrence(const Poly& monic, SeqPrefix& out, std::size_t count) {
  const auto e = static_cast<std::size_t>(monic.degree());
  std::vector<FieldElem> h(e + 1);
  for (std::size_t i = 1; i <= e; ++i) h[i] = -monic.coeff(e - i);
  while (out.size() < count) {
    const std::size_t n = out.size();
    FieldElem next;
    for (std::size_t i = 1; i <= e; ++i) {
      if (!h[i].is_zero()) next += h[i] * out[n - i];
    }
    out.push_back(std::move(next));
  }
}

}  // namespace

SeqPrefix terms(const Lrs& s, std::size_t count) {
  SeqPrefix out(s.init().begin(), s.init().begin() + std::min(count, s.order()));
  run_recurrence(s.char_poly(), out, count);
  return out;
}

Poly numerator(const Lrs& s) {
  const std::size_t r = s.order();
  std::vector<FieldElem> u(r);
  for (std::size_t i = 0; i < r; ++i) {
    u[i] = s.init()[i];
    for (std::size_t j = 1; j <= i; ++j) u[i] -= s.h(j) * s.init()[i - j];
  }
  return Poly(std::move(u));
}

GenFun genfun(const Lrs& s) { return {numerator(s), reflect(s.char_poly(), s.order())}; }

SeqPrefix series(const GenFun& g, std::size_t count) {
  if (g.den.coeff(0) != FieldElem(1)) throw DomainError("series: denominator must have constant term 1");
  SeqPrefix out;
  out.reserve(count);
  const auto dd = static_cast<std::size_t>(g.den.degree());
  for (std::size_t n = 0; n < count; ++n) {
    FieldElem a = g.num.coeff(n);
    for (std::size_t i = 1; i <= std::min(n, dd); ++i) {
      const FieldElem& c = g.den.coeffs()[i];
      if (!c.is_zero()) a -= c * out[n - i];
    }
    out.push_back(std::move(a));
  }
  return out;
}

SeqPrefix Recurrence::terms(std::size_t count) const {
  SeqPrefix out(head.begin(), head.begin() + std::min(count, head.size()));
  run_recurrence(char_poly, out, count);
  return out;
}

Lrs Recurrence::to_lrs() const {
  if (head.empty()) return Lrs(Poly::monomial(FieldElem(1), 1), {FieldElem()});
  return Lrs(Poly::monomial(FieldElem(1), valid_from) * char_poly, head);
}

Recurrence recurrence_from_genfun(const GenFun& g) {
  if (g.den.is_zero()) throw DivisionByZero("generating function with zero denominator");
  const FieldElem d0 = g.den.coeff(0);
  if (d0.is_zero()) throw DomainError("denominator vanishes at t = 0; not a power series");
  const FieldElem scale = d0.inverse();
  const GenFun normal{g.num * scale, g.den * scale};

  Recurrence rec;
  const long e = normal.den.degree();
  rec.char_poly = reflect(normal.den, static_cast<std::size_t>(e));
  rec.valid_from = static_cast<std::size_t>(std::max(0L, normal.num.degree() - e + 1));
  rec.head = series(normal, rec.valid_from + static_cast<std::size_t>(e));
  return rec;
}

bool recurrence_holds(const Poly& monic, std::span<const FieldElem> prefix, std::size_t n0) {
  const auto e = static_cast<std::size_t>(monic.degree());
  for (std::size_t n = n0 + e; n < prefix.size(); ++n) {
    FieldElem acc;
    for (std::size_t i = 0; i <= e; ++i) acc += monic.coeff(e - i) * prefix[n - i];
    if (!acc.is_zero()) return false;
  }
  return true;
}

std::optional<std::vector<FieldElem>> solve_linear(std::vector<std::vector<FieldElem>> a,
                                                   std::vector<FieldElem> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && a[p][col].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    std::swap(b[p], b[row]);
    const FieldElem inv = a[row][col].inverse();
    for (std::size_t j = col; j < cols; ++j) a[row][j] *= inv;
    b[row] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      const FieldElem f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < rows; ++i) {
    if (!b[i].is_zero()) return std::nullopt;
  }
  std::vector<FieldElem> x(cols);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  return x;
}

std::optional<MinimalRecurrence> minimal_recurrence(std::span<const FieldElem> prefix) {
  const std::size_t n_terms = prefix.size();
  for (std::size_t e = 0; 2 * e + 2 <= n_terms; ++e) {
    for (std::size_t n0 = 0; n0 <= e; ++n0) {
      // Unknowns h_1..h_e; one equation per index n >= n0 + e.
      std::vector<std::vector<FieldElem>> a;
      std::vector<FieldElem> b;
      for (std::size_t n = n0 + e; n < n_terms; ++n) {
        std::vector<FieldElem> row(e);
        for (std::size_t i = 1; i <= e; ++i) row[i - 1] = prefix[n - i];
        a.push_back(std::move(row));
        b.push_back(prefix[n]);
      }
      std::optional<std::vector<FieldElem>> h;
      if (e == 0) {
        const bool all_zero = std::all_of(b.begin(), b.end(), [](const FieldElem& x) { return x.is_zero(); });
        if (all_zero) h = std::vector<FieldElem>{};
      } else {
        h = solve_linear(std::move(a), std::move(b));
      }
      if (!h) continue;
      std::vector<FieldElem> coeffs(e + 1);
      coeffs[e] = FieldElem(1);
      for (std::size_t i = 1; i <= e; ++i) coeffs[e - i] = -(*h)[i - 1];
      return MinimalRecurrence{Poly(std::move(coeffs)), n0};
    }
  }
  return std::nullopt;
}

Lrs impulse(std::size_t r, const Poly& char_poly) {
  if (r == 0) throw DomainError("impulse order must be >= 1");
  if (char_poly.degree() != static_cast<long>(r)) {
    throw DomainError("impulse: characteristic polynomial degree differs from order " + std::to_string(r));
  }
  std::vector<FieldElem> init(r);
  init[r - 1] = FieldElem(1);
  return Lrs(char_poly, std::move(init));
}

Lrs startsequence() { return impulse(1, Poly::monomial(FieldElem(1), 1)); }

}  // namespace recseq
