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

#include <doctest.h>

#include "error.hpp"
#include "poly.hpp"
#include "support.hpp"
#include "text.hpp"

using namespace recseq;
using recseq::testing::Gen;
using recseq::testing::poly_of;

TEST_CASE("ring operations") {
  CHECK(poly_of({-1, 1}) * poly_of({1, 1}) == poly_of({-1, 0, 1}));
  CHECK(poly_of({-1, -1, 1}) + Poly() == poly_of({-1, -1, 1}));
  // (1 - t - t^2) * t
  CHECK(poly_of({1, -1, -1}) * poly_of({0, 1}) == poly_of({0, 1, -1, -1}));
  CHECK((poly_of({1, 2}) - poly_of({1, 2})).is_zero());
  CHECK((poly_of({1, 2}) * FieldElem(0)).is_zero());
  CHECK(Poly().degree() == -1);
}

TEST_CASE("reflect") {
  // t^2 - t - 1 -> 1 - t - t^2
  CHECK(reflect(poly_of({-1, -1, 1}), 2) == poly_of({1, -1, -1}));
  CHECK(reflect(poly_of({1}), 0) == poly_of({1}));
  CHECK(reflect(poly_of({0, 1}), 1) == poly_of({1}));
  CHECK(reflect(poly_of({1, 1}), 3) == poly_of({0, 0, 1, 1}));
  CHECK_THROWS_AS(reflect(poly_of({1, 1, 1}), 1), DomainError);
  Gen g(21);
  for (int i = 0; i < 50; ++i) {
    const auto deg = static_cast<std::size_t>(g.integer(0, 6));
    Poly p = g.poly(deg);
    if (p.coeff(0).is_zero()) p += Poly::constant(FieldElem(1));
    CHECK(reflect(p, deg).degree() == static_cast<long>(deg));
    CHECK(reflect(reflect(p, deg), deg) == p);
  }
}

TEST_CASE("shift_argument examples") {
  CHECK(shift_argument(poly_of({-1, -1, 1}), FieldElem(1)) == poly_of({1, -3, 1}));
  const Poly p = poly_of({3, 0, -2, 7});
  CHECK(shift_argument(p, FieldElem(0)) == p);
  // (t - 1)^3 shifted by -1 is t^3
  CHECK(shift_argument(pow(poly_of({-1, 1}), 3), FieldElem(-1)) == poly_of({0, 0, 0, 1}));
  CHECK(shift_argument(Poly(), FieldElem(4)).is_zero());
}

TEST_CASE("shift_argument properties") {
  Gen g(22);
  for (int i = 0; i < 100; ++i) {
    const Poly p = g.poly(static_cast<std::size_t>(g.integer(0, 6)));
    const FieldElem y1 = g.scalar(), y2 = g.scalar(), t0 = g.scalar();
    CHECK(shift_argument(shift_argument(p, y1), -y1) == p);
    CHECK(shift_argument(shift_argument(p, y1), y2) == shift_argument(p, y1 + y2));
    CHECK(eval(shift_argument(p, y1), t0) == eval(p, t0 - y1));
    CHECK(shift_argument(p, y1) == recseq::testing::shift_by_horner(p, y1));
  }
}

TEST_CASE("eval") {
  const Poly f = poly_of({-1, -1, 1});
  CHECK(eval(f, FieldElem(2)) == FieldElem(1));
  const FieldElem phi(Rat(1, 2), Rat(1, 2), 5);
  CHECK(eval(f, phi).is_zero());
  CHECK(eval(f, phi.conjugate()).is_zero());
  CHECK(eval(Poly(), FieldElem(Rat(7, 3))).is_zero());
}

TEST_CASE("monic, t-division and roots") {
  CHECK(make_monic(poly_of({2, 4})) == Poly(std::vector<FieldElem>{FieldElem(Rat(1, 2)), FieldElem(1)}));
  CHECK_THROWS_AS(make_monic(Poly()), DomainError);
  CHECK(divide_by_t(poly_of({0, -1, 1})) == poly_of({-1, 1}));
  CHECK_THROWS_AS(divide_by_t(poly_of({1, 1})), DomainError);
  CHECK(multiply_by_t(poly_of({-1, 1})) == poly_of({0, -1, 1}));
  const std::vector<FieldElem> roots{FieldElem(2), FieldElem(3)};
  CHECK(from_roots(roots) == poly_of({6, -5, 1}));
}

TEST_CASE("text round trip") {
  CHECK(poly_of({-1, -1, 1}).to_string() == "t^2 - t - 1");
  CHECK(parse_poly("t^2 - t - 1") == poly_of({-1, -1, 1}));
  CHECK(parse_poly("t^2-t-1") == poly_of({-1, -1, 1}));
  CHECK(parse_poly("-t + 3t^2 + 1/2") == Poly(std::vector<FieldElem>{FieldElem(Rat(1, 2)), FieldElem(-1), FieldElem(3)}));
  CHECK(parse_poly("0").is_zero());
  CHECK(Poly().to_string() == "0");
  const Field q5 = Field::quadratic(5);
  const Poly irr = from_roots(std::vector<FieldElem>{FieldElem(Rat(1, 2), Rat(1, 2), 5), FieldElem(1)});
  CHECK(parse_poly(irr.to_string(), q5) == irr);
  Gen g(23);
  for (int i = 0; i < 100; ++i) {
    std::vector<FieldElem> c;
    const long deg = g.integer(0, 5);
    for (long k = 0; k <= deg; ++k) c.push_back(i % 2 ? g.scalar() : g.quad(5));
    const Poly p(std::move(c));
    CHECK(parse_poly(p.to_string(), q5) == p);
  }
}
