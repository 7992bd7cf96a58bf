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

#include "arith.hpp"

#include "error.hpp"

namespace recseq {

Rat::Rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rat(mpq_class(1 / v_));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

Rat pow(const Rat& base, unsigned long exp) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exp);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exp);
  return Rat(num, den);
}

bool is_squarefree(std::uint32_t d) {
  if (d == 0) return false;
  for (std::uint64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

std::uint32_t join_radicand(std::uint32_t d1, std::uint32_t d2) {
  if (d1 == 0) return d2;
  if (d2 == 0 || d1 == d2) return d1;
  throw FieldMismatch("cannot combine elements of Q(sqrt " + std::to_string(d1) +
                      ") and Q(sqrt " + std::to_string(d2) + ")");
}

FieldElem::FieldElem(Rat a, Rat b, std::uint32_t d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ == 0) {
    if (!b_.is_zero()) throw DomainError("irrational part requires a radicand");
    return;
  }
  if (d_ < 2 || !is_squarefree(d_)) {
    throw DomainError("radicand " + std::to_string(d_) + " is not a square-free integer >= 2");
  }
}

Rat FieldElem::norm() const { return a_ * a_ - Rat(static_cast<long>(d_)) * b_ * b_; }

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DivisionByZero();
  // d is not a perfect square, so the norm vanishes only at zero.
  const Rat n = norm();
  return FieldElem(a_ / n, -b_ / n, d_, Unchecked{});
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  d_ = join_radicand(d_, o.d_);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  d_ = join_radicand(d_, o.d_);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  d_ = join_radicand(d_, o.d_);
  if (b_.is_zero() && o.b_.is_zero()) {
    a_ *= o.a_;
    return *this;
  }
  Rat a = a_ * o.a_ + Rat(static_cast<long>(d_)) * b_ * o.b_;
  Rat b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

std::string FieldElem::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string out;
  if (!a_.is_zero()) out = a_.to_string();
  const std::string root = "sqrt(" + std::to_string(d_) + ")";
  if (b_ == Rat(1)) {
    out += (out.empty() ? "" : "+") + root;
  } else if (b_ == Rat(-1)) {
    out += "-" + root;
  } else {
    if (b_.sign() > 0 && !out.empty()) out += "+";
    out += b_.to_string() + "*" + root;
  }
  return out;
}

FieldElem pow(const FieldElem& base, unsigned long exp) {
  if (base.is_rational()) {
    return FieldElem(Rat(pow(base.a(), exp)), Rat(0), base.radicand());
  }
  FieldElem result(Rat(1), Rat(0), base.radicand());
  FieldElem sq = base;
  while (exp > 0) {
    if (exp & 1UL) result *= sq;
    exp >>= 1;
    if (exp > 0) sq *= sq;
  }
  return result;
}

Field Field::quadratic(std::uint32_t d) {
  if (d < 2 || !is_squarefree(d)) {
    throw DomainError("radicand " + std::to_string(d) + " is not a square-free integer >= 2");
  }
  return Field{d};
}

std::string Field::to_string() const {
  return d == 0 ? std::string("Q") : "Q(sqrt " + std::to_string(d) + ")";
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace recseq
