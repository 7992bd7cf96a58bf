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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every comparison is exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "apps.hpp"
#include "oeis_fixtures.hpp"
#include "support.hpp"
#include "text.hpp"

namespace {

using namespace recseq;
using recseq::testing::Gen;
using recseq::testing::ints;
using recseq::testing::poly_of;

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

SeqPrefix fixture(const std::vector<std::string>& values) {
  SeqPrefix out;
  for (const auto& v : values) out.push_back(parse_scalar(v));
  return out;
}

Lrs fibonacci() { return Lrs(poly_of({-1, -1, 1}), ints({0, 1})); }

Outcome pipeline_regression() {
  Outcome o;
  const Pipeline fib_pipe = parse_pipeline("I(1).rho.I(1)");
  const Lrs fib = apply(fib_pipe, startsequence());
  o.require(terms(fib, 30) == fixture(fixtures::kA000045), "Fibonacci differs from A000045");
  o.require(recseq::apply(fib_pipe, terms(startsequence(), 29)) == fixture(fixtures::kA000045),
            "stream Fibonacci differs from A000045");
  const Pipeline step = parse_pipeline("I(1).rho");
  const Lrs trib = apply(step, fib);
  const Lrs tetra = apply(step, trib);
  o.require(terms(trib, 30) == fixture(fixtures::kA000073), "Tribonacci differs from A000073");
  o.require(terms(tetra, 30) == fixture(fixtures::kA000078), "Tetranacci differs from A000078");
  o.require(tetra.char_poly() == poly_of({-1, -1, -1, -1, 1}), "Tetranacci characteristic polynomial");
  return o;
}

Outcome binomial_on_recurrences() {
  Outcome o;
  Gen g(1001);
  for (int i = 0; i < 200; ++i) {
    const Lrs s = g.lrs(5);
    const FieldElem y = g.scalar();
    o.require(terms(binomial_lrs(s, y), 30) == binomial_stream(terms(s, 30), y),
              "binomial_lrs terms differ from binomial_stream");
    o.require(binomial_charpoly(s.char_poly(), y) == shift_argument(s.char_poly(), y),
              "p_k closed form differs from shift_argument");
  }
  return o;
}

Outcome invert_on_recurrences() {
  Outcome o;
  Gen g(1002);
  for (int i = 0; i < 200; ++i) {
    const Lrs s = g.lrs(5);
    const FieldElem x = g.scalar();
    const SeqPrefix stream = invert_stream(terms(s, 40), x);
    o.require(series(invert_genfun(s, x), 40) == stream, "generating function expansion differs");
    o.require(terms(invert_lrs(s, x), 40) == stream, "invert_lrs terms differ");
    const std::size_t r = s.order();
    const Poly symbolic = reflect(reflect(s.char_poly(), r) - x * multiply_by_t(numerator(s)), r);
    o.require(invert_charpoly(s, x) == symbolic, "coefficient formula differs from symbolic expansion");
  }
  return o;
}

Outcome group_laws() {
  Outcome o;
  Gen g(1003);
  for (int i = 0; i < 100; ++i) {
    const SeqPrefix a = terms(g.lrs(5), 30);
    const FieldElem y1 = g.scalar(), y2 = g.scalar(), x1 = g.scalar(), x2 = g.scalar();
    o.require(binomial_stream(binomial_stream(a, y2), y1) == binomial_stream(a, y1 + y2), "L additivity");
    o.require(invert_stream(invert_stream(a, x2), x1) == invert_stream(a, x1 + x2), "I additivity");
    o.require(binomial_stream(invert_stream(a, x1), y1) == invert_stream(binomial_stream(a, y1), x1),
              "L and I do not commute");
  }
  return o;
}

Outcome weighted_sum_identities() {
  Outcome o;
  Gen g(1004);
  int pairs = 0;
  while (pairs < 12) {
    const FieldElem alpha = g.scalar(), y = g.scalar();
    if ((alpha + y).is_zero()) continue;
    ++pairs;
    for (std::size_t deg = 0; deg <= 4; ++deg) {
      const Poly p = g.poly(deg);
      const Poly q = q_poly(p, alpha, y);
      for (long m = 0; m <= 20; ++m) {
        o.require(recseq::testing::weighted_binomial_sum(p, m, alpha, y) ==
                      pow(alpha + y, static_cast<unsigned long>(m)) * eval(q, FieldElem(m)),
                  "Q(m) identity");
      }
    }
    for (std::size_t s = 0; s <= 5; ++s) {
      const Poly is = Poly::monomial(FieldElem(1), s);
      for (long m = 0; m <= 20; ++m) {
        o.require(recseq::testing::weighted_binomial_sum(is, m, alpha, y) ==
                      c_coeff(s, FieldElem(m), alpha, y) * pow(alpha + y, static_cast<unsigned long>(m)),
                  "c_s identity");
      }
    }
  }
  return o;
}

Outcome degree_reduction() {
  Outcome o;
  const auto x = degree_reduction_param(fibonacci());
  o.require(x.has_value() && *x == FieldElem(-1), "parameter is not -1");
  if (!x) return o;
  const GenFun gf = invert_genfun(fibonacci(), *x);
  o.require(gf.num == poly_of({0, 1}) && gf.den == poly_of({1, -1}), "generating function is not t/(1-t)");
  SeqPrefix expected(20, FieldElem(1));
  expected[0] = FieldElem(0);
  o.require(series(gf, 20) == expected, "terms are not 0,1,1,1,...");
  o.require(invert_stream(terms(fibonacci(), 20), *x) == expected, "stream terms are not 0,1,1,1,...");
  const auto m = minimal_recurrence(expected);
  o.require(m.has_value() && m->char_poly == poly_of({-1, 1}) && m->valid_from == 1,
            "minimal recurrence is not t - 1 from index 1");
  return o;
}

Outcome bell_identity() {
  Outcome o;
  Gen g(1007);
  for (int i = 0; i < 100; ++i) {
    const SeqPrefix a = g.integers(13, -6, 6);
    const SeqPrefix b = invert_stream(a, FieldElem(1));
    const BellTable bell(a, 13);
    for (std::size_t n = 0; n <= 12; ++n) o.require(b[n] == bell.complete(n + 1), "invert_stream vs B_{n+1}");
  }
  for (std::size_t r = 2; r <= 5; ++r) {
    const SeqPrefix fr = rbonacci(r, 13);
    const SeqPrefix next = rbonacci(r + 1, 13);
    SeqPrefix args{FieldElem(0)};
    args.insert(args.end(), fr.begin(), fr.end());
    const BellTable bell(args, 13);
    for (std::size_t n = 0; n <= 12; ++n) {
      o.require(next[n] == bell.complete(n + 1), "F^(r+1)_n vs B_{n+1}(0, F^(r))");
    }
  }
  return o;
}

Outcome quadratic_deconstruction() {
  Outcome o;
  const Field q5 = Field::quadratic(5);
  const Pipeline down = parse_pipeline("L(sqrt(5)) . sigma . L(-1/2-1/2*sqrt(5))", q5);
  const Lrs fib = fibonacci();
  const SeqPrefix start = terms(startsequence(), 15);
  o.require(terms(apply(down, fib), 15) == start, "Lrs pipeline does not reach the startsequence");
  o.require(recseq::apply(down, terms(fib, 16)) == start, "stream pipeline does not reach the startsequence");
  const SeqPrefix mid = apply_step(down.steps()[0], terms(fib, 4));
  o.require(mid == SeqPrefix{FieldElem(0), FieldElem(1), -FieldElem::sqrt(5), FieldElem(5)},
            "intermediate prefix is not (0,1,-sqrt5,5)");
  const FieldElem phi(Rat(1, 2), Rat(1, 2), 5);
  const std::vector<FieldElem> zeros{phi, phi.conjugate()};
  o.require(l_deconstruct(fib, zeros) == down, "l_deconstruct differs from the expected pipeline");
  const Pipeline up = l_construct(zeros);
  o.require(up == parse_pipeline("L(1/2+1/2*sqrt(5)) . rho . L(-sqrt(5))", q5), "inverse pipeline");
  SeqPrefix fib15 = fixture(fixtures::kA000045);
  fib15.resize(15);
  o.require(terms(apply(up, startsequence()), 15) == fib15 && terms(fib, 15) == fib15,
            "inverse does not rebuild Fibonacci");
  return o;
}

Outcome explicit_v() {
  Outcome o;
  Gen g(1009);
  for (std::size_t k = 1; k <= 4; ++k) {
    for (int trial = 0; trial < 10; ++trial) {
      const SeqPrefix z = g.scalars(k);
      const SeqPrefix a = terms(apply(l_pipeline_from_params(z), startsequence()), 16);
      for (std::size_t n = 0; n <= 15; ++n) o.require(v_explicit(z, n) == a[n], "nested sum vs pipeline");
    }
  }
  int pairs = 0;
  while (pairs < 20) {
    const FieldElem alpha = g.scalar(), beta = g.scalar();
    if (alpha == beta) continue;
    ++pairs;
    const std::vector<FieldElem> z{beta - alpha, alpha};
    for (std::size_t n = 0; n <= 15; ++n) {
      o.require(v_explicit(z, n) == (pow(beta, n) - pow(alpha, n)) / (beta - alpha), "Binet quotient");
    }
  }
  return o;
}

Outcome anti_mean_suite() {
  Outcome o;
  Gen g(1010);
  for (int i = 0; i < 100; ++i) {
    const Order2Spec w{g.scalar(), g.scalar(), g.scalar(), g.scalar()};
    o.require(anti_mean(w, 20) == binomial_stream(terms(w.to_lrs(), 20), -w.h / FieldElem(2)),
              "closed form vs L^(-h/2)");
  }
  for (std::size_t n = 0; n <= 10; ++n) o.require(fib_antimean_identity(n).is_zero(), "Fibonacci sum is not 0");
  return o;
}

Outcome polynomial_sequences() {
  Outcome o;
  Gen g(1011);
  for (std::size_t deg = 0; deg <= 5; ++deg) {
    for (int trial = 0; trial < 10; ++trial) {
      const Poly f = g.poly(deg);
      const auto [lstream, dstream] = one_click(f, 20);
      SeqPrefix values;
      for (long n = 0; n < 20; ++n) values.push_back(eval(f, FieldElem(n)));
      const SeqPrefix table = finite_differences(values, 19);
      o.require(lstream == binomial_stream(values, FieldElem(-1)), "one_click L stream");
      o.require(lstream == table, "L^(-1) vs difference table");
      o.require(dstream == table, "difference stream");
    }
  }
  for (long q = 2; q <= 10; ++q) o.require(polygonal_identities_check(q, 20), "polygonal identities");
  for (long k = 1; k <= 6; ++k) {
    const auto sums = figurate_by_partial_sums(k, 21);
    for (long h = 0; h <= 20; ++h) o.require(sums[static_cast<std::size_t>(h)] == figurate(k, h), "figurate");
  }
  const SeqPrefix tri = fixture(fixtures::kA000217);
  for (std::size_t n = 0; n < tri.size(); ++n) {
    o.require(polygonal(3, static_cast<long>(n)) == tri[n], "triangular numbers vs A000217");
    o.require(FieldElem(figurate(3, static_cast<long>(n))) == tri[n], "T^(3) vs A000217");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"pipeline regression (Fibonacci, Tribonacci, Tetranacci)", pipeline_regression},
      {"binomial operator on recurrences", binomial_on_recurrences},
      {"invert operator on recurrences", invert_on_recurrences},
      {"group and commutativity laws", group_laws},
      {"Q(m) and c_s(m, alpha, y) identities", weighted_sum_identities},
      {"degree reduction of the invert denominator", degree_reduction},
      {"ordinary Bell polynomial identities", bell_identity},
      {"deconstruction over Q(sqrt 5)", quadratic_deconstruction},
      {"explicit L-construction terms", explicit_v},
      {"binomial anti-mean transform", anti_mean_suite},
      {"polynomial, polygonal and figurate sequences", polynomial_sequences},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %2zu: %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                o.ok ? "" : " -- ", o.note.c_str());
    if (!o.ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
