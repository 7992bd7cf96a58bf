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

// Exercises the shared library through its C header only.

#include <doctest.h>

#include <cstring>
#include <string>

#include "recseq/recseq.h"

namespace {

std::string take(char* s) {
  std::string out = s;
  rs_string_free(s);
  return out;
}

std::string seq_string(const rs_seq* s) {
  char* out = nullptr;
  REQUIRE(rs_seq_to_string(s, ",", &out) == RS_OK);
  return take(out);
}

}  // namespace

TEST_CASE("recurrence handles") {
  rs_lrs* fib = nullptr;
  REQUIRE(rs_lrs_new("t^2 - t - 1", "0,1", nullptr, &fib) == RS_OK);
  CHECK(rs_lrs_order(fib) == 2);
  rs_seq* t = nullptr;
  REQUIRE(rs_lrs_terms(fib, 10, &t) == RS_OK);
  CHECK(rs_seq_length(t) == 10);
  CHECK(seq_string(t) == "0,1,1,2,3,5,8,13,21,34");
  char* term = nullptr;
  REQUIRE(rs_seq_term(t, 9, &term) == RS_OK);
  CHECK(take(term) == "34");
  CHECK(rs_seq_term(t, 10, &term) == RS_ERR_INVALID_ARGUMENT);

  char* js = nullptr;
  REQUIRE(rs_lrs_to_json(fib, &js) == RS_OK);
  const std::string doc = take(js);
  rs_lrs* back = nullptr;
  REQUIRE(rs_lrs_from_json(doc.c_str(), &back) == RS_OK);
  char* poly = nullptr;
  REQUIRE(rs_lrs_char_poly(back, &poly) == RS_OK);
  CHECK(take(poly) == "t^2 - t - 1");

  char* gf = nullptr;
  REQUIRE(rs_lrs_genfun(fib, &gf) == RS_OK);
  CHECK(take(gf) == R"js({"den":"-t^2 - t + 1","num":"t"})js");

  char* x = nullptr;
  REQUIRE(rs_lrs_degree_reduction(fib, &x) == RS_OK);
  CHECK(take(x) == "-1");
  char* inv = nullptr;
  REQUIRE(rs_lrs_invert_genfun(fib, "-1", &inv) == RS_OK);
  CHECK(take(inv) == R"js({"char_poly":"t - 1","den":"-t + 1","num":"t","valid_from":1})js");

  rs_lrs* stuck = nullptr;
  REQUIRE(rs_lrs_new("t^2 - t - 1", "1,1", nullptr, &stuck) == RS_OK);
  CHECK(rs_lrs_degree_reduction(stuck, &x) == RS_ERR_DOMAIN);

  rs_seq_free(t);
  rs_lrs_free(back);
  rs_lrs_free(stuck);
  rs_lrs_free(fib);
}

TEST_CASE("status codes and messages") {
  rs_lrs* s = nullptr;
  CHECK(rs_lrs_new("t^2 - t", "0", nullptr, &s) == RS_ERR_DOMAIN);
  CHECK(std::strlen(rs_last_error()) > 0);
  CHECK(rs_lrs_new("t^2 +* t", "0,1", nullptr, &s) == RS_ERR_PARSE);
  CHECK(rs_last_error_position() != static_cast<size_t>(-1));
  CHECK(rs_lrs_new("t - sqrt(5)", "1", nullptr, &s) == RS_ERR_FIELD_MISMATCH);
  CHECK(rs_lrs_new("t - sqrt(5)", "1", "Q(sqrt 5)", &s) == RS_OK);
  rs_lrs_free(s);
  CHECK(rs_lrs_new(nullptr, "1", nullptr, &s) == RS_ERR_INVALID_ARGUMENT);
  CHECK(rs_lrs_from_json("{not json", &s) == RS_ERR_PARSE);

  rs_pipeline* p = nullptr;
  CHECK(rs_pipeline_parse("I(1) . foo", nullptr, 0, &p) == RS_ERR_PARSE);
  CHECK(rs_last_error_position() == 7);
  CHECK(std::string(rs_last_error()).find("foo") != std::string::npos);
  CHECK(rs_pipeline_parse("L(1/0)", nullptr, 0, &p) == RS_ERR_PARSE);

  rs_seq* short_seq = nullptr;
  REQUIRE(rs_seq_parse("1,2,4", nullptr, &short_seq) == RS_OK);
  char* poly = nullptr;
  size_t n0 = 0;
  CHECK(rs_seq_minimal_recurrence(short_seq, &poly, &n0) == RS_ERR_INSUFFICIENT_DATA);
  rs_seq_free(short_seq);

  CHECK(std::string(rs_status_name(RS_ERR_FIELD_MISMATCH)) == "field mismatch");
  CHECK(std::string(rs_version()) == "1.0.0");
}

TEST_CASE("pipelines through the C API") {
  rs_pipeline* p = nullptr;
  REQUIRE(rs_pipeline_parse("I(1) . rho . I(1)", nullptr, 0, &p) == RS_OK);
  CHECK(rs_pipeline_length(p) == 3);
  rs_lrs* u = nullptr;
  REQUIRE(rs_lrs_startsequence(&u) == RS_OK);
  rs_lrs* out = nullptr;
  char* trace = nullptr;
  REQUIRE(rs_pipeline_apply_lrs(p, u, &out, &trace) == RS_OK);
  CHECK(take(trace) ==
        R"js([{"char_poly":"t - 1","op":"I(1)"},{"char_poly":"t^2 - t","op":"rho"},{"char_poly":"t^2 - t - 1","op":"I(1)"}])js");
  rs_seq* t = nullptr;
  REQUIRE(rs_lrs_terms(out, 8, &t) == RS_OK);
  CHECK(seq_string(t) == "0,1,1,2,3,5,8,13");

  char* js = nullptr;
  REQUIRE(rs_pipeline_to_json(p, &js) == RS_OK);
  const std::string pj = take(js);
  CHECK(pj == R"js([{"op":"I","param":"1"},{"op":"rho"},{"op":"I","param":"1"}])js");
  rs_pipeline* p2 = nullptr;
  REQUIRE(rs_pipeline_from_json(pj.c_str(), nullptr, &p2) == RS_OK);
  char* txt = nullptr;
  REQUIRE(rs_pipeline_to_string(p2, &txt) == RS_OK);
  CHECK(take(txt) == "I(1) . rho . I(1)");

  rs_seq* lit = nullptr;
  REQUIRE(rs_seq_parse("1,0,0,0,0,0,0,0", nullptr, &lit) == RS_OK);
  rs_seq* res = nullptr;
  REQUIRE(rs_pipeline_apply_seq(p, lit, &res, nullptr) == RS_OK);
  CHECK(seq_string(res) == "0,1,1,2,3,5,8,13,21");

  rs_seq_free(res);
  rs_seq_free(lit);
  rs_pipeline_free(p2);
  rs_seq_free(t);
  rs_lrs_free(out);
  rs_lrs_free(u);
  rs_pipeline_free(p);
}

TEST_CASE("construction and deconstruction") {
  const char* zeros = "1/2+1/2*sqrt(5),1/2-1/2*sqrt(5)";
  rs_pipeline* lc = nullptr;
  REQUIRE(rs_pipeline_l_construct(zeros, "Q(sqrt 5)", &lc) == RS_OK);
  char* txt = nullptr;
  REQUIRE(rs_pipeline_to_string(lc, &txt) == RS_OK);
  CHECK(take(txt) == "L(1/2+1/2*sqrt(5)) . rho . L(-sqrt(5))");
  CHECK(rs_pipeline_l_construct(zeros, nullptr, &lc) == RS_ERR_FIELD_MISMATCH);

  rs_lrs* fib = nullptr;
  REQUIRE(rs_lrs_impulse("t^2 - t - 1", nullptr, &fib) == RS_OK);
  rs_pipeline* ld = nullptr;
  REQUIRE(rs_pipeline_l_deconstruct(fib, zeros, "Q(sqrt 5)", &ld) == RS_OK);
  REQUIRE(rs_pipeline_to_string(ld, &txt) == RS_OK);
  CHECK(take(txt) == "L(sqrt(5)) . sigma . L(-1/2-1/2*sqrt(5))");
  rs_lrs* reached = nullptr;
  REQUIRE(rs_pipeline_apply_lrs(ld, fib, &reached, nullptr) == RS_OK);
  rs_seq* t = nullptr;
  REQUIRE(rs_lrs_terms(reached, 5, &t) == RS_OK);
  CHECK(seq_string(t) == "1,0,0,0,0");
  CHECK(rs_pipeline_l_deconstruct(fib, "1,2", nullptr, &ld) == RS_ERR_DOMAIN);

  rs_pipeline* ic = nullptr;
  REQUIRE(rs_pipeline_i_construct("1,1", nullptr, &ic) == RS_OK);
  REQUIRE(rs_pipeline_to_string(ic, &txt) == RS_OK);
  CHECK(take(txt) == "I(1) . rho . I(1)");
  rs_pipeline* id = nullptr;
  REQUIRE(rs_pipeline_i_deconstruct(fib, &id) == RS_OK);
  REQUIRE(rs_pipeline_to_string(id, &txt) == RS_OK);
  CHECK(take(txt) == "I(-1) . sigma . I(-1)");

  rs_pipeline_free(id);
  rs_pipeline_free(ic);
  rs_seq_free(t);
  rs_lrs_free(reached);
  rs_pipeline_free(ld);
  rs_lrs_free(fib);
  rs_pipeline_free(lc);
}

TEST_CASE("verification suites and tables") {
  int ok = 0;
  char* report = nullptr;
  REQUIRE(rs_verify_fib_antimean(10, &ok, &report) == RS_OK);
  CHECK(ok == 1);
  CHECK(take(report).find(R"js("suite":"fib-antimean")js") != std::string::npos);
  REQUIRE(rs_verify_rbonacci_ladder(6, 30, &ok, nullptr) == RS_OK);
  CHECK(ok == 1);
  REQUIRE(rs_verify_rbonacci_bell(5, 12, &ok, nullptr) == RS_OK);
  CHECK(ok == 1);
  for (long q = 2; q <= 10; ++q) {
    REQUIRE(rs_verify_polygonal(q, 20, &ok, nullptr) == RS_OK);
    CHECK(ok == 1);
  }
  REQUIRE(rs_verify_one_click("t^3 - 2t + 1/3", nullptr, 12, &ok, nullptr) == RS_OK);
  CHECK(ok == 1);
  CHECK(rs_verify_polygonal(1, 20, &ok, nullptr) == RS_ERR_INVALID_ARGUMENT);

  char* table = nullptr;
  REQUIRE(rs_table_stirling(2, 4, &table) == RS_OK);
  CHECK(take(table) == R"js([["1"],["0","1"],["0","1","1"],["0","1","3","1"],["0","1","7","6","1"]])js");
  REQUIRE(rs_table_figurate(3, 6, &table) == RS_OK);
  CHECK(take(table) == R"js([["0","1","1","1","1","1"],["0","1","2","3","4","5"],["0","1","3","6","10","15"]])js");
  rs_seq* ones = nullptr;
  REQUIRE(rs_seq_parse("1,1,1,1", nullptr, &ones) == RS_OK);
  REQUIRE(rs_table_bell(ones, 4, &table) == RS_OK);
  CHECK(take(table) == R"js([["1"],["0","1"],["0","1","1"],["0","1","2","1"],["0","1","3","3","1"]])js");
  CHECK(rs_table_bell(ones, 5, &table) == RS_ERR_DOMAIN);

  rs_seq* cubes = nullptr;
  REQUIRE(rs_seq_parse("0,1,8,27,64", nullptr, &cubes) == RS_OK);
  rs_seq* diffs = nullptr;
  REQUIRE(rs_table_differences(cubes, 4, &diffs) == RS_OK);
  CHECK(seq_string(diffs) == "0,1,6,6,0");

  rs_seq* s = nullptr;
  REQUIRE(rs_seq_polygonal(3, 2, 6, &s) == RS_OK);
  CHECK(seq_string(s) == "0,1,3,6,10,15");
  rs_seq_free(s);
  REQUIRE(rs_seq_rbonacci(3, 8, &s) == RS_OK);
  CHECK(seq_string(s) == "0,0,1,1,2,4,7,13");
  rs_seq_free(s);

  rs_seq_free(diffs);
  rs_seq_free(cubes);
  rs_seq_free(ones);
}
