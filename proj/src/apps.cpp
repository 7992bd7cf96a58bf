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

#include "apps.hpp"

#include "error.hpp"

namespace recseq {

Lrs Order2Spec::to_lrs() const {
  return Lrs(Poly(std::vector<FieldElem>{k, -h, FieldElem(1)}), {s0, s1});
}

SeqPrefix anti_mean(const Order2Spec& w, std::size_t count) {
  const FieldElem disc = w.discriminant();
  const FieldElem delta = w.delta();
  SeqPrefix c;
  c.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    const bool odd = n % 2 == 1;
    FieldElem term = pow(disc, n / 2) * FieldElem(Rat(BigInt(1), BigInt(1) << static_cast<mp_bitcnt_t>(n)));
    term *= odd ? delta : w.s0;
    c.push_back(std::move(term));
  }
  return c;
}

FieldElem fib_antimean_identity(std::size_t n) {
  const SeqPrefix fib = terms(impulse(2, rbonacci_poly(2)), 2 * n + 1);
  const FieldElem half(Rat(-1, 2));
  FieldElem acc;
  for (std::size_t i = 0; i <= 2 * n; ++i) {
    acc += FieldElem(binomial(static_cast<long>(2 * n), static_cast<long>(i))) * pow(half, 2 * n - i) * fib[i];
  }
  return acc;
}

Poly rbonacci_poly(std::size_t r) {
  if (r == 0) throw DomainError("r-bonacci order must be >= 1");
  std::vector<FieldElem> coeffs(r + 1, FieldElem(-1));
  coeffs[r] = FieldElem(1);
  return Poly(std::move(coeffs));
}

SeqPrefix rbonacci(std::size_t r, std::size_t count) { return terms(impulse(r, rbonacci_poly(r)), count); }

bool rbonacci_ladder_step(std::size_t r, std::size_t count) {
  const SeqPrefix shifted = rho(rbonacci(r, count));
  SeqPrefix next = invert_stream(shifted, FieldElem(1));
  next.resize(count);
  return next == rbonacci(r + 1, count);
}

bool rbonacci_ladder_check(std::size_t r_max, std::size_t count) {
  SeqPrefix u(count);
  if (count > 0) u[0] = FieldElem(1);
  if (invert_stream(u, FieldElem(1)) != rbonacci(1, count)) return false;
  for (std::size_t r = 1; r < r_max; ++r) {
    if (!rbonacci_ladder_step(r, count)) return false;
  }
  return true;
}

bool rbonacci_bell_check(std::size_t r, std::size_t n) {
  const SeqPrefix lower = rbonacci(r, n + 1);
  const SeqPrefix upper = rbonacci(r + 1, n + 1);
  // t_1 = 0, t_{j+2} = F^(r)_j
  SeqPrefix args = rho(lower);
  const BellTable table(args, n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    if (upper[m] != table.complete(m + 1)) return false;
  }
  return true;
}

bool rbonacci_cross_order_check(std::size_t r, std::size_t count) {
  if (r < 2) throw DomainError("cross-order recurrence needs r >= 2");
  const SeqPrefix hi = rbonacci(r, count);
  const SeqPrefix lo = rbonacci(r - 1, count);
  for (std::size_t n = 0; n + 1 < count; ++n) {
    FieldElem rhs = lo[n];
    for (std::size_t i = 1; i <= n; ++i) rhs += hi[i - 1] * lo[n - i];
    if (hi[n + 1] != rhs) return false;
  }
  return true;
}

FieldElem polygonal(long q, long n) {
  if (q < 2) throw DomainError("polygonal: requires q >= 2");
  const FieldElem nn(n);
  return FieldElem(Rat(q - 2, 2)) * nn * nn + FieldElem(Rat(4 - q, 2)) * nn;
}

SeqPrefix pyramidal_sequence(long q, long d, std::size_t count) {
  if (q < 2) throw DomainError("pyramidal: requires q >= 2");
  if (d < 2) throw DomainError("pyramidal: requires d >= 2");
  SeqPrefix seq;
  seq.reserve(count);
  for (std::size_t n = 0; n < count; ++n) seq.push_back(polygonal(q, static_cast<long>(n)));
  for (long level = 3; level <= d; ++level) {
    FieldElem running;
    for (auto& x : seq) {
      running += x;
      x = running;
    }
  }
  return seq;
}

FieldElem pyramidal(long q, long d, long n) {
  if (n < 0) throw DomainError("pyramidal: requires n >= 0");
  return pyramidal_sequence(q, d, static_cast<std::size_t>(n) + 1).back();
}

bool polygonal_identities_check(long q, std::size_t count) {
  SeqPrefix from_zero(count), from_one(count);
  const FieldElem second(q - 2);
  if (count > 0) from_one[0] = FieldElem(1);
  if (count > 1) {
    from_zero[1] = FieldElem(1);
    from_one[1] = FieldElem(q - 1);
  }
  if (count > 2) {
    from_zero[2] = second;
    from_one[2] = second;
  }
  const SeqPrefix lhs0 = binomial_stream(from_zero, FieldElem(1));
  const SeqPrefix lhs1 = binomial_stream(from_one, FieldElem(1));
  for (std::size_t n = 0; n < count; ++n) {
    if (lhs0[n] != polygonal(q, static_cast<long>(n))) return false;
    if (lhs1[n] != polygonal(q, static_cast<long>(n) + 1)) return false;
  }
  return true;
}

std::pair<SeqPrefix, SeqPrefix> one_click(const PolyFunc& f, std::size_t count) {
  SeqPrefix values;
  values.reserve(count);
  for (std::size_t n = 0; n < count; ++n) values.push_back(eval(f, FieldElem(static_cast<long>(n))));
  SeqPrefix diffs = count == 0 ? SeqPrefix{} : finite_differences(values, count - 1);
  return {binomial_stream(values, FieldElem(-1)), std::move(diffs)};
}

}  // namespace recseq
