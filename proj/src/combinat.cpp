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

#include "combinat.hpp"

#include "error.hpp"
#include "operators.hpp"

namespace recseq {

StirlingTables::StirlingTables(std::size_t max_n) : second_(max_n + 1), first_(max_n + 1) {
  for (std::size_t n = 0; n <= max_n; ++n) {
    second_[n].resize(n + 1);
    first_[n].resize(n + 1);
    second_[n][n] = 1;
    first_[n][n] = 1;
    for (std::size_t k = 1; k < n; ++k) {
      second_[n][k] = BigInt(static_cast<unsigned long>(k)) * second_[n - 1][k] + second_[n - 1][k - 1];
      first_[n][k] = BigInt(static_cast<unsigned long>(n - 1)) * first_[n - 1][k] + first_[n - 1][k - 1];
    }
  }
}

const BigInt& StirlingTables::second(std::size_t s, std::size_t k) const {
  if (s > max_n() || k > s) throw DomainError("stirling2: index out of range");
  return second_[s][k];
}

const BigInt& StirlingTables::first_unsigned(std::size_t k, std::size_t h) const {
  if (k > max_n() || h > k) throw DomainError("stirling1: index out of range");
  return first_[k][h];
}

BigInt stirling2(long s, long k) {
  if (s < 0 || k < 0 || k > s) throw DomainError("stirling2: requires 0 <= k <= s");
  return StirlingTables(static_cast<std::size_t>(s)).second(s, k);
}

BigInt stirling1_unsigned(long k, long h) {
  if (k < 0 || h < 0 || h > k) throw DomainError("stirling1: requires 0 <= h <= k");
  return StirlingTables(static_cast<std::size_t>(k)).first_unsigned(k, h);
}

namespace {

FieldElem ratio_or_throw(const FieldElem& alpha, const FieldElem& y) {
  const FieldElem denom = alpha + y;
  if (denom.is_zero()) throw DomainError("alpha + y must be nonzero");
  return y / denom;
}

PolyFunc c_poly_with(const StirlingTables& tables, std::size_t s, const FieldElem& ratio) {
  std::vector<FieldElem> ratio_pow(s + 1);
  ratio_pow[0] = FieldElem(1);
  for (std::size_t k = 1; k <= s; ++k) ratio_pow[k] = ratio_pow[k - 1] * ratio;

  std::vector<FieldElem> coeffs(s + 1);
  for (std::size_t h = 0; h <= s; ++h) {
    FieldElem acc;
    for (std::size_t k = h; k <= s; ++k) {
      BigInt term = tables.second(s, k) * tables.first_unsigned(k, h);
      if ((k - h) % 2 == 1) term = -term;
      acc += FieldElem(term) * ratio_pow[k];
    }
    coeffs[h] = std::move(acc);
  }
  return PolyFunc(std::move(coeffs));
}

}  // namespace

PolyFunc c_poly(std::size_t s, const FieldElem& alpha, const FieldElem& y) {
  const FieldElem ratio = ratio_or_throw(alpha, y);
  return c_poly_with(StirlingTables(s), s, ratio);
}

FieldElem c_coeff(std::size_t s, const FieldElem& m, const FieldElem& alpha, const FieldElem& y) {
  return eval(c_poly(s, alpha, y), m);
}

PolyFunc q_poly(const PolyFunc& p, const FieldElem& alpha, const FieldElem& y) {
  const FieldElem ratio = ratio_or_throw(alpha, y);
  if (p.is_zero()) return p;
  const auto deg = static_cast<std::size_t>(p.degree());
  const StirlingTables tables(deg);
  PolyFunc q;
  for (std::size_t i = 0; i <= deg; ++i) {
    if (p.coeff(i).is_zero()) continue;
    q += c_poly_with(tables, i, ratio) * p.coeff(i);
  }
  return q;
}

BellTable::BellTable(std::span<const FieldElem> args, std::size_t max_n) : max_n_(max_n) {
  if (args.size() < max_n) {
    throw DomainError("bell: need " + std::to_string(max_n) + " arguments, got " + std::to_string(args.size()));
  }
  // series[n] = t_n, series[0] = 0
  std::vector<FieldElem> series(max_n + 1);
  for (std::size_t n = 1; n <= max_n; ++n) series[n] = args[n - 1];

  powers_.assign(max_n + 1, std::vector<FieldElem>(max_n + 1));
  powers_[0][0] = FieldElem(1);
  for (std::size_t k = 1; k <= max_n; ++k) {
    // The k-th power starts at z^k.
    for (std::size_t n = k; n <= max_n; ++n) {
      FieldElem acc;
      for (std::size_t j = 1; j <= n - (k - 1); ++j) {
        if (series[j].is_zero() || powers_[k - 1][n - j].is_zero()) continue;
        acc += series[j] * powers_[k - 1][n - j];
      }
      powers_[k][n] = std::move(acc);
    }
  }
}

FieldElem BellTable::partial(std::size_t n, std::size_t k) const {
  if (n > max_n_) throw DomainError("bell: index beyond table");
  if (k > n) return FieldElem();
  return powers_[k][n];
}

FieldElem BellTable::complete(std::size_t n) const {
  if (n > max_n_) throw DomainError("bell: index beyond table");
  FieldElem acc;
  for (std::size_t k = 1; k <= n; ++k) acc += powers_[k][n];
  return acc;
}

FieldElem bell_partial(std::span<const FieldElem> args, std::size_t n, std::size_t k) {
  return BellTable(args, n).partial(n, k);
}

FieldElem bell_complete(std::span<const FieldElem> args, std::size_t n) {
  return BellTable(args, n).complete(n);
}

bool bell_of_invert_check(std::span<const FieldElem> a, std::size_t n) {
  if (a.size() < n + 1) throw DomainError("bell_of_invert_check: prefix too short");
  const SeqPrefix b = invert_stream(a.first(n + 1), FieldElem(1));
  return b[n] == bell_complete(a, n + 1);
}

BigInt figurate(long k, long h) {
  if (k < 1 || h < 0) throw DomainError("figurate: requires k >= 1 and h >= 0");
  return binomial(h + k - 2, k - 1);
}

std::vector<BigInt> figurate_by_partial_sums(long k, std::size_t count) {
  if (k < 1) throw DomainError("figurate: requires k >= 1");
  std::vector<BigInt> row(count, BigInt(1));
  if (count > 0) row[0] = 0;
  for (long level = 2; level <= k; ++level) {
    BigInt running = 0;
    for (auto& x : row) {
      running += x;
      x = running;
    }
  }
  return row;
}

SeqPrefix finite_differences(std::span<const FieldElem> values, std::size_t order) {
  if (values.size() < order + 1) {
    throw DomainError("finite_differences: need " + std::to_string(order + 1) + " values");
  }
  SeqPrefix row(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(order + 1));
  SeqPrefix column;
  column.reserve(order + 1);
  for (std::size_t i = 0; i <= order; ++i) {
    column.push_back(row[0]);
    for (std::size_t j = 0; j + 1 < row.size(); ++j) row[j] = row[j + 1] - row[j];
    row.pop_back();
  }
  return column;
}

SeqPrefix binomial_basis(const PolyFunc& f) {
  if (f.is_zero()) return {FieldElem()};
  const auto d = static_cast<std::size_t>(f.degree());
  SeqPrefix values;
  for (std::size_t n = 0; n <= d; ++n) values.push_back(eval(f, FieldElem(static_cast<long>(n))));
  return finite_differences(values, d);
}

FieldElem from_binomial_basis(std::span<const FieldElem> deltas, long n) {
  FieldElem acc;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    acc += deltas[i] * FieldElem(binomial(n, static_cast<long>(i)));
  }
  return acc;
}

BigInt falling_factorial(long m, long k) {
  BigInt out = 1;
  for (long i = 0; i < k; ++i) out *= BigInt(m - i);
  return out;
}

}  // namespace recseq
