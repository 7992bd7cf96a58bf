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

// Exact scalars: arbitrary precision rationals and elements a + b*sqrt(d) of
// a real quadratic field. Every higher layer computes with FieldElem only.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace recseq {

using BigInt = mpz_class;

/// Canonical rational number: denominator > 0 and gcd(|num|, den) = 1.
class Rat {
 public:
  Rat() = default;
  Rat(int v) : v_(v) {}
  Rat(long v) : v_(v) {}
  Rat(const BigInt& v) : v_(v) {}
  /// Throws DivisionByZero when den == 0.
  Rat(const BigInt& num, const BigInt& den);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat inverse() const;

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const { return v_.get_str(); }

  const mpq_class& raw() const { return v_; }

 private:
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  mpq_class v_;
};

Rat pow(const Rat& base, unsigned long exp);

bool is_squarefree(std::uint32_t d);

/// a + b*sqrt(d). d == 0 tags a plain rational (b must then be 0); otherwise
/// d is a square-free integer >= 2. Rationals combine with any field; two
/// elements tagged with different nonzero d raise FieldMismatch.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(int v) : a_(v) {}
  FieldElem(long v) : a_(v) {}
  FieldElem(const BigInt& v) : a_(v) {}
  FieldElem(Rat a) : a_(std::move(a)) {}
  FieldElem(Rat a, Rat b, std::uint32_t d);

  static FieldElem sqrt(std::uint32_t d) { return FieldElem(Rat(0), Rat(1), d); }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  std::uint32_t radicand() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  /// a^2 - d*b^2; multiplicative.
  Rat norm() const;
  FieldElem conjugate() const { return FieldElem(a_, -b_, d_, Unchecked{}); }
  /// Throws DivisionByZero for zero.
  FieldElem inverse() const;

  FieldElem operator-() const { return FieldElem(-a_, -b_, d_, Unchecked{}); }
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o) { return *this *= o.inverse(); }

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

  // Value equality; the field tag does not take part.
  friend bool operator==(const FieldElem& x, const FieldElem& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// "p/q" for rationals, "a+b*sqrt(d)" otherwise (parsable by parse_scalar).
  std::string to_string() const;

 private:
  struct Unchecked {};
  FieldElem(Rat a, Rat b, std::uint32_t d, Unchecked)
      : a_(std::move(a)), b_(std::move(b)), d_(d) {}

  Rat a_;
  Rat b_;
  std::uint32_t d_ = 0;
};

FieldElem pow(const FieldElem& base, unsigned long exp);

/// True iff a is nonzero (every nonzero element of a field is a unit).
inline bool is_invertible(const FieldElem& a) { return !a.is_zero(); }

/// Merges two field tags; throws FieldMismatch on distinct nonzero tags.
std::uint32_t join_radicand(std::uint32_t d1, std::uint32_t d2);

/// The ambient field: Q (d == 0) or Q(sqrt d).
struct Field {
  std::uint32_t d = 0;

  static Field rationals() { return {}; }
  static Field quadratic(std::uint32_t d);

  bool is_rational() const { return d == 0; }
  bool contains(const FieldElem& x) const { return x.radicand() == 0 || x.radicand() == d; }
  /// "Q" or "Q(sqrt 5)".
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;
};

BigInt binomial(long n, long k);

}  // namespace recseq
