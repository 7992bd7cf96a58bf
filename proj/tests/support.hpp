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

// Test-only generators and independent oracles. Nothing here calls the
// library routine it is used to check.

#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "arith.hpp"
#include "lrs.hpp"
#include "poly.hpp"

namespace recseq::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  /// p/q with |p| <= 9, 1 <= q <= 5.
  Rat rational() { return Rat(BigInt(integer(-9, 9)), BigInt(integer(1, 5))); }
  Rat nonzero_rational() {
    Rat r;
    do r = rational();
    while (r.is_zero());
    return r;
  }
  FieldElem scalar() { return FieldElem(rational()); }
  FieldElem nonzero_scalar() { return FieldElem(nonzero_rational()); }
  FieldElem quad(std::uint32_t d) { return FieldElem(rational(), rational(), d); }
  FieldElem small_int() { return FieldElem(integer(-3, 3)); }

  std::vector<FieldElem> scalars(std::size_t n) {
    std::vector<FieldElem> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(scalar());
    return v;
  }
  std::vector<FieldElem> integers(std::size_t n, long lo, long hi) {
    std::vector<FieldElem> v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(integer(lo, hi));
    return v;
  }

  /// Random polynomial of exact degree deg (rational coefficients).
  Poly poly(std::size_t deg) {
    std::vector<FieldElem> c = scalars(deg + 1);
    c[deg] = nonzero_scalar();
    return Poly(std::move(c));
  }
  Poly monic(std::size_t deg) {
    std::vector<FieldElem> c = scalars(deg + 1);
    c[deg] = FieldElem(1);
    return Poly(std::move(c));
  }
  /// Random Lrs of order 1..max_order.
  Lrs lrs(std::size_t max_order) {
    const auto r = static_cast<std::size_t>(integer(1, static_cast<long>(max_order)));
    return Lrs(monic(r), scalars(r));
  }

 private:
  std::mt19937_64 rng_;
};

inline std::vector<FieldElem> ints(std::initializer_list<long> xs) {
  std::vector<FieldElem> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Poly poly_of(std::initializer_list<long> low_first) { return Poly(ints(low_first)); }

// --- oracles ---------------------------------------------------------------

/// Truncated power series product.
inline std::vector<FieldElem> series_mul(const std::vector<FieldElem>& a, const std::vector<FieldElem>& b,
                                         std::size_t n) {
  std::vector<FieldElem> out(n);
  for (std::size_t i = 0; i < n && i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// 1 / d as a truncated power series, by Newton-free coefficient recursion
/// on d * e = 1 (requires d_0 != 0).
inline std::vector<FieldElem> series_inverse(const std::vector<FieldElem>& d, std::size_t n) {
  std::vector<FieldElem> e(n);
  const FieldElem d0inv = d.at(0).inverse();
  for (std::size_t k = 0; k < n; ++k) {
    FieldElem acc = k == 0 ? FieldElem(1) : FieldElem();
    for (std::size_t i = 1; i <= k && i < d.size(); ++i) acc -= d[i] * e[k - i];
    e[k] = acc * d0inv;
  }
  return e;
}

/// Coefficients of A(t) / (1 - x t A(t)) through series division.
inline std::vector<FieldElem> invert_by_genfun(const std::vector<FieldElem>& a, const FieldElem& x) {
  const std::size_t n = a.size();
  std::vector<FieldElem> den(n);
  den[0] = FieldElem(1);
  for (std::size_t i = 1; i < n; ++i) den[i] = -x * a[i - 1];
  return series_mul(a, series_inverse(den, n), n);
}

/// Binomial transform by the exponential generating function identity
/// c = e^{yt} * a (egf product), written out with factorials.
inline std::vector<FieldElem> binomial_by_egf(const std::vector<FieldElem>& a, const FieldElem& y) {
  const std::size_t n = a.size();
  std::vector<FieldElem> fact(n);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt f = 1;
    for (std::size_t j = 2; j <= i; ++j) f *= BigInt(static_cast<unsigned long>(j));
    fact[i] = FieldElem(f);
  }
  std::vector<FieldElem> ea(n), ey(n);
  FieldElem ypow(1);
  for (std::size_t i = 0; i < n; ++i) {
    ea[i] = a[i] / fact[i];
    ey[i] = ypow / fact[i];
    ypow *= y;
  }
  std::vector<FieldElem> prod = series_mul(ey, ea, n);
  for (std::size_t i = 0; i < n; ++i) prod[i] *= fact[i];
  return prod;
}

/// p(t - y) by Horner's scheme in the polynomial ring.
inline Poly shift_by_horner(const Poly& p, const FieldElem& y) {
  const Poly lin = Poly::linear_factor(y);
  Poly acc;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * lin + Poly::constant(p.coeffs()[i]);
  return acc;
}

/// Partial ordinary Bell polynomial by enumerating every composition of n
/// into k positive parts (word form: each ordered word counted once).
inline FieldElem bell_partial_by_words(const std::vector<FieldElem>& t, std::size_t n, std::size_t k) {
  std::function<FieldElem(std::size_t, std::size_t)> rec = [&](std::size_t rem, std::size_t parts) -> FieldElem {
    if (parts == 0) return rem == 0 ? FieldElem(1) : FieldElem();
    FieldElem acc;
    for (std::size_t first = 1; first + (parts - 1) <= rem; ++first) acc += t[first - 1] * rec(rem - first, parts - 1);
    return acc;
  };
  return rec(n, k);
}

/// sum_{i=0..m} C(m,i) y^i alpha^{m-i} P(i)
inline FieldElem weighted_binomial_sum(const Poly& p, long m, const FieldElem& alpha, const FieldElem& y) {
  FieldElem acc;
  for (long i = 0; i <= m; ++i) {
    acc += FieldElem(binomial(m, i)) * pow(y, static_cast<unsigned long>(i)) *
           pow(alpha, static_cast<unsigned long>(m - i)) * eval(p, FieldElem(i));
  }
  return acc;
}

/// Delta^n f(0) = sum_k C(n,k) (-1)^{n-k} f(k)
inline FieldElem delta_direct(const std::function<FieldElem(long)>& f, long n) {
  FieldElem acc;
  for (long k = 0; k <= n; ++k) {
    FieldElem term = FieldElem(binomial(n, k)) * f(k);
    acc += ((n - k) % 2 == 0) ? term : -term;
  }
  return acc;
}

/// {s,k} = (1/k!) sum_j (-1)^{k-j} C(k,j) j^s
inline BigInt stirling2_explicit(long s, long k) {
  BigInt acc = 0;
  for (long j = 0; j <= k; ++j) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(s));
    BigInt term = binomial(k, j) * p;
    if ((k - j) % 2 == 1) term = -term;
    acc += term;
  }
  BigInt fact = 1;
  for (long i = 2; i <= k; ++i) fact *= BigInt(i);
  return acc / fact;
}

/// [k,h] as the coefficient of m^h in m(m+1)...(m+k-1).
inline BigInt stirling1_from_rising(long k, long h) {
  Poly rising = Poly::constant(FieldElem(1));
  for (long i = 0; i < k; ++i) rising *= Poly(std::vector<FieldElem>{FieldElem(i), FieldElem(1)});
  return rising.coeff(static_cast<std::size_t>(h)).a().numerator();
}

}  // namespace recseq::testing
