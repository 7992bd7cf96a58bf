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

// recseq command line front end. Talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "recseq/recseq.h"

namespace {

using nlohmann::json;

struct Failure {
  rs_status status;
  std::string message;
};

void check(rs_status st) {
  if (st != RS_OK) throw Failure{st, rs_last_error()};
}

struct LrsFree {
  void operator()(rs_lrs* p) const { rs_lrs_free(p); }
};
struct SeqFree {
  void operator()(rs_seq* p) const { rs_seq_free(p); }
};
struct PipeFree {
  void operator()(rs_pipeline* p) const { rs_pipeline_free(p); }
};
using LrsPtr = std::unique_ptr<rs_lrs, LrsFree>;
using SeqPtr = std::unique_ptr<rs_seq, SeqFree>;
using PipePtr = std::unique_ptr<rs_pipeline, PipeFree>;

// Takes ownership of a C string from the library.
std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  rs_string_free(s);
  return out;
}

template <typename F>
std::string text(F&& call) {
  char* out = nullptr;
  check(call(&out));
  return take(out);
}

const char* field_ptr(const std::string& field) { return field.empty() ? nullptr : field.c_str(); }

struct Common {
  std::string poly, init, field, input;
  std::size_t count = 10;
  bool as_json = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_sequence) {
  if (with_sequence) {
    cmd->add_option("--poly", c.poly, "characteristic polynomial, e.g. \"t^2 - t - 1\"");
    cmd->add_option("--init", c.init, "initial terms, comma separated");
    cmd->add_option("--input", c.input,
                    "startsequence | impulse:<poly> | literal:<list> | json:<path>");
  }
  cmd->add_option("--field", c.field, "Q (default) or \"Q(sqrt D)\"");
  cmd->add_option("--count", c.count, "number of terms")->capture_default_str();
  cmd->add_flag("--json", c.as_json, "emit a JSON report");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{RS_ERR_INVALID_ARGUMENT, "cannot open " + path};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Either a recurrence or a literal prefix.
struct Input {
  LrsPtr lrs;
  SeqPtr seq;
};

Input read_input(const Common& c) {
  Input in;
  rs_lrs* l = nullptr;
  if (!c.poly.empty()) {
    if (!c.input.empty()) throw Failure{RS_ERR_INVALID_ARGUMENT, "--poly and --input are exclusive"};
    if (c.init.empty()) throw Failure{RS_ERR_INVALID_ARGUMENT, "--poly needs --init"};
    check(rs_lrs_new(c.poly.c_str(), c.init.c_str(), field_ptr(c.field), &l));
    in.lrs.reset(l);
    return in;
  }
  const std::string& spec = c.input;
  auto rest = [&](std::size_t n) { return spec.substr(n); };
  if (spec.empty()) {
    throw Failure{RS_ERR_INVALID_ARGUMENT, "give --poly/--init or --input"};
  } else if (spec == "startsequence") {
    check(rs_lrs_startsequence(&l));
  } else if (spec.rfind("impulse:", 0) == 0) {
    check(rs_lrs_impulse(rest(8).c_str(), field_ptr(c.field), &l));
  } else if (spec.rfind("json:", 0) == 0) {
    check(rs_lrs_from_json(read_file(rest(5)).c_str(), &l));
  } else if (spec.rfind("literal:", 0) == 0) {
    rs_seq* s = nullptr;
    check(rs_seq_parse(rest(8).c_str(), field_ptr(c.field), &s));
    in.seq.reset(s);
    return in;
  } else {
    throw Failure{RS_ERR_INVALID_ARGUMENT, "unknown --input form '" + spec + "'"};
  }
  in.lrs.reset(l);
  return in;
}

json seq_json(const rs_seq* s) { return json::parse(text([&](char** o) { return rs_seq_to_json(s, o); })); }
std::string seq_text(const rs_seq* s) { return text([&](char** o) { return rs_seq_to_string(s, ",", o); }); }

SeqPtr lrs_terms(const rs_lrs* l, std::size_t count) {
  rs_seq* s = nullptr;
  check(rs_lrs_terms(l, count, &s));
  return SeqPtr(s);
}

std::string char_poly(const rs_lrs* l) { return text([&](char** o) { return rs_lrs_char_poly(l, o); }); }

json base_report(const std::string& command) {
  return {{"command", command}, {"steps", json::array()}, {"terms", json::array()}, {"ok", true}};
}

int emit(const json& report, bool as_json, const std::string& plain) {
  if (as_json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << plain;
  }
  return report["ok"].get<bool>() ? 0 : 1;
}

std::string steps_text(const json& steps) {
  std::string out;
  std::size_t i = 1;
  for (const auto& s : steps) {
    const std::string poly = s["char_poly"].is_null() ? "(unknown)" : s["char_poly"].get<std::string>();
    out += "step " + std::to_string(i++) + ": " + s["op"].get<std::string>() + "  char poly: " + poly + "\n";
  }
  return out;
}

// ---- verbs ---------------------------------------------------------------

int run_eval(const Common& c) {
  Input in = read_input(c);
  json r = base_report("eval");
  std::string plain;
  if (in.lrs) {
    SeqPtr t = lrs_terms(in.lrs.get(), c.count);
    r["terms"] = seq_json(t.get());
    r["char_poly"] = char_poly(in.lrs.get());
    plain = seq_text(t.get()) + "\n";
  } else {
    r["terms"] = seq_json(in.seq.get());
    plain = seq_text(in.seq.get()) + "\n";
    char* poly = nullptr;
    std::size_t n0 = 0;
    if (rs_seq_minimal_recurrence(in.seq.get(), &poly, &n0) == RS_OK) {
      r["char_poly"] = take(poly);
      r["valid_from"] = n0;
      plain += "char poly: " + r["char_poly"].get<std::string>() + " (from index " + std::to_string(n0) + ")\n";
    }
  }
  return emit(r, c.as_json, plain);
}

PipePtr parse_pipe(const std::string& textual, const std::string& field, bool ltr) {
  rs_pipeline* p = nullptr;
  check(rs_pipeline_parse(textual.c_str(), field_ptr(field), ltr ? 1 : 0, &p));
  return PipePtr(p);
}

std::string pipe_text(const rs_pipeline* p) { return text([&](char** o) { return rs_pipeline_to_string(p, o); }); }

int run_transform(const Common& c, const std::string& pipeline, bool ltr) {
  PipePtr p = parse_pipe(pipeline, c.field, ltr);
  Input in = read_input(c);
  json r = base_report("transform");
  r["pipeline"] = pipe_text(p.get());
  std::string plain = "pipeline: " + r["pipeline"].get<std::string>() + "\n";
  char* trace = nullptr;
  SeqPtr out;
  if (in.lrs) {
    rs_lrs* res = nullptr;
    check(rs_pipeline_apply_lrs(p.get(), in.lrs.get(), &res, &trace));
    LrsPtr result(res);
    out = lrs_terms(result.get(), c.count);
    r["char_poly"] = char_poly(result.get());
  } else {
    rs_seq* res = nullptr;
    check(rs_pipeline_apply_seq(p.get(), in.seq.get(), &res, &trace));
    out.reset(res);
  }
  r["steps"] = json::parse(take(trace));
  r["terms"] = seq_json(out.get());
  plain += steps_text(r["steps"]);
  plain += "terms: " + seq_text(out.get()) + "\n";
  if (r.contains("char_poly")) plain += "char poly: " + r["char_poly"].get<std::string>() + "\n";
  return emit(r, c.as_json, plain);
}

int run_construct(const Common& c, const std::string& mode, const std::string& zeros, const std::string& coeffs) {
  rs_pipeline* raw = nullptr;
  if (mode == "L") {
    if (zeros.empty()) throw Failure{RS_ERR_INVALID_ARGUMENT, "--mode L needs --zeros"};
    check(rs_pipeline_l_construct(zeros.c_str(), field_ptr(c.field), &raw));
  } else {
    if (coeffs.empty()) throw Failure{RS_ERR_INVALID_ARGUMENT, "--mode I needs --coeffs"};
    check(rs_pipeline_i_construct(coeffs.c_str(), field_ptr(c.field), &raw));
  }
  PipePtr p(raw);
  rs_lrs* u = nullptr;
  check(rs_lrs_startsequence(&u));
  LrsPtr start(u);
  rs_lrs* res = nullptr;
  char* trace = nullptr;
  check(rs_pipeline_apply_lrs(p.get(), start.get(), &res, &trace));
  LrsPtr result(res);
  SeqPtr t = lrs_terms(result.get(), c.count);
  json r = base_report("construct");
  r["pipeline"] = pipe_text(p.get());
  r["pipeline_json"] = json::parse(text([&](char** o) { return rs_pipeline_to_json(p.get(), o); }));
  r["steps"] = json::parse(take(trace));
  r["terms"] = seq_json(t.get());
  r["char_poly"] = char_poly(result.get());
  std::string plain = "pipeline: " + r["pipeline"].get<std::string>() + "\n" + steps_text(r["steps"]) +
                      "terms: " + seq_text(t.get()) + "\nchar poly: " + r["char_poly"].get<std::string>() + "\n";
  return emit(r, c.as_json, plain);
}

int run_deconstruct(const Common& c, const std::string& mode, const std::string& zeros) {
  Input in = read_input(c);
  if (!in.lrs) throw Failure{RS_ERR_INVALID_ARGUMENT, "deconstruct needs a recurrence, not a literal prefix"};
  rs_pipeline* raw = nullptr;
  if (mode == "L") {
    if (zeros.empty()) throw Failure{RS_ERR_INVALID_ARGUMENT, "--mode L needs --zeros"};
    check(rs_pipeline_l_deconstruct(in.lrs.get(), zeros.c_str(), field_ptr(c.field), &raw));
  } else {
    check(rs_pipeline_i_deconstruct(in.lrs.get(), &raw));
  }
  PipePtr p(raw);
  rs_lrs* res = nullptr;
  char* trace = nullptr;
  check(rs_pipeline_apply_lrs(p.get(), in.lrs.get(), &res, &trace));
  LrsPtr result(res);
  SeqPtr t = lrs_terms(result.get(), c.count);
  rs_lrs* u = nullptr;
  check(rs_lrs_startsequence(&u));
  LrsPtr start(u);
  SeqPtr expected = lrs_terms(start.get(), c.count);
  json r = base_report("deconstruct");
  r["pipeline"] = pipe_text(p.get());
  r["steps"] = json::parse(take(trace));
  r["terms"] = seq_json(t.get());
  r["ok"] = rs_seq_equal(t.get(), expected.get()) == 1;
  std::string plain = "pipeline: " + r["pipeline"].get<std::string>() + "\n" + steps_text(r["steps"]) +
                      "terms: " + seq_text(t.get()) + "\n" +
                      (r["ok"].get<bool>() ? "reached the startsequence\n" : "did NOT reach the startsequence\n");
  return emit(r, c.as_json, plain);
}

int emit_verify(const std::string& suite, int ok, char* raw, bool as_json) {
  const json detail = json::parse(take(raw));
  json r = base_report("verify " + suite);
  r["ok"] = ok == 1;
  r["checks"] = detail["checks"];
  if (detail.contains("terms")) r["terms"] = detail["terms"];
  std::string plain;
  for (const auto& chk : detail["checks"]) {
    plain += std::string(chk["ok"].get<bool>() ? "PASS" : "FAIL") + "  " + chk["name"].get<std::string>() + "\n";
  }
  plain += std::string(ok == 1 ? "all checks passed" : "some checks FAILED") + "\n";
  return emit(r, as_json, plain);
}

int emit_table(const std::string& name, const json& rows, bool as_json) {
  json r = base_report("table " + name);
  r["table"] = rows;
  std::string plain;
  for (const auto& row : rows) {
    std::string line;
    for (const auto& v : row) line += (line.empty() ? "" : " ") + v.get<std::string>();
    plain += line + "\n";
  }
  return emit(r, as_json, plain);
}

SeqPtr parse_list(const std::string& list, const std::string& field) {
  rs_seq* s = nullptr;
  check(rs_seq_parse(list.c_str(), field_ptr(field), &s));
  return SeqPtr(s);
}

int emit_seq(const std::string& name, SeqPtr s, bool as_json) {
  json r = base_report("seq " + name);
  r["terms"] = seq_json(s.get());
  return emit(r, as_json, seq_text(s.get()) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear recurrent sequences under the Binomial and Invert operators"};
  app.require_subcommand(1);

  Common c;
  std::string pipeline, mode = "L", zeros, coeffs;
  bool ltr = false;

  auto* eval = app.add_subcommand("eval", "print terms of a sequence");
  add_common(eval, c, true);

  auto* transform = app.add_subcommand("transform", "apply an operator pipeline");
  add_common(transform, c, true);
  transform->add_option("--pipeline", pipeline, "e.g. \"I(1) . rho . I(1)\" (rightmost first)")->required();
  transform->add_flag("--left-to-right", ltr, "apply the leftmost step first");

  auto* construct = app.add_subcommand("construct", "pipeline from the startsequence to an impulse sequence");
  add_common(construct, c, false);
  construct->add_option("--mode", mode, "L (from zeros) or I (from coefficients)")
      ->check(CLI::IsMember({"L", "I"}))
      ->capture_default_str();
  construct->add_option("--zeros", zeros, "zeros of the characteristic polynomial (mode L)");
  construct->add_option("--coeffs", coeffs, "recurrence coefficients h_1..h_r (mode I)");

  auto* deconstruct = app.add_subcommand("deconstruct", "pipeline from an impulse sequence to the startsequence");
  add_common(deconstruct, c, true);
  deconstruct->add_option("--mode", mode, "L (needs --zeros) or I")
      ->check(CLI::IsMember({"L", "I"}))
      ->capture_default_str();
  deconstruct->add_option("--zeros", zeros, "zeros of the characteristic polynomial (mode L)");

  auto* verify = app.add_subcommand("verify", "run an identity suite");
  verify->require_subcommand(1);
  std::size_t n = 10, r = 4;
  long q = 5, d = 2;
  std::string poly_f, list;
  auto* v_anti = verify->add_subcommand("fib-antimean", "binomial anti-mean identity for Fibonacci");
  v_anti->add_option("--n", n, "largest n")->capture_default_str();
  add_common(v_anti, c, false);
  auto* v_ladder = verify->add_subcommand("rbonacci-ladder", "I(rho(F^(r))) = F^(r+1)");
  v_ladder->add_option("--r", r, "largest order")->capture_default_str();
  add_common(v_ladder, c, false);
  auto* v_bell = verify->add_subcommand("rbonacci-bell", "r-bonacci numbers as Bell polynomials");
  v_bell->add_option("--r", r, "largest order")->capture_default_str();
  v_bell->add_option("--n", n, "largest index")->capture_default_str();
  add_common(v_bell, c, false);
  auto* v_poly = verify->add_subcommand("polygonal", "polygonal number identities");
  v_poly->add_option("--q", q, "number of sides")->capture_default_str();
  add_common(v_poly, c, false);
  auto* v_click = verify->add_subcommand("one-click", "L(-1) of a polynomial sequence");
  v_click->add_option("--poly", poly_f, "f as a polynomial in t")->required();
  add_common(v_click, c, false);

  auto* table = app.add_subcommand("table", "print a combinatorial table");
  table->require_subcommand(1);
  int kind = 2;
  std::size_t order = 5, k = 6;
  auto* t_stir = table->add_subcommand("stirling", "Stirling numbers");
  t_stir->add_option("--kind", kind, "1 (unsigned first kind) or 2")->check(CLI::IsMember({1, 2}))->capture_default_str();
  t_stir->add_option("--n", n, "largest row")->capture_default_str();
  add_common(t_stir, c, false);
  auto* t_bell = table->add_subcommand("bell", "partial ordinary Bell polynomials B_{n,k}(args)");
  t_bell->add_option("--args", list, "t_1, t_2, ... comma separated")->required();
  t_bell->add_option("--n", n, "largest row")->capture_default_str();
  add_common(t_bell, c, false);
  auto* t_fig = table->add_subcommand("figurate", "figurate numbers T^(k)_h");
  t_fig->add_option("--k", k, "largest k")->capture_default_str();
  add_common(t_fig, c, false);
  auto* t_diff = table->add_subcommand("differences", "Delta^i f(0) from values f(0), f(1), ...");
  t_diff->add_option("--values", list, "comma separated values")->required();
  t_diff->add_option("--order", order, "largest difference order")->capture_default_str();
  add_common(t_diff, c, false);

  auto* seq = app.add_subcommand("seq", "generate a named sequence");
  seq->require_subcommand(1);
  auto* s_poly = seq->add_subcommand("polygonal", "polygonal (d = 2) or pyramidal (d > 2) numbers");
  s_poly->add_option("--q", q, "number of sides")->capture_default_str();
  s_poly->add_option("--d", d, "dimension")->capture_default_str();
  add_common(s_poly, c, false);
  auto* s_rb = seq->add_subcommand("rbonacci", "r-bonacci numbers");
  s_rb->add_option("--r", r, "order")->capture_default_str();
  add_common(s_rb, c, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval) return run_eval(c);
    if (*transform) return run_transform(c, pipeline, ltr);
    if (*construct) return run_construct(c, mode, zeros, coeffs);
    if (*deconstruct) return run_deconstruct(c, mode, zeros);

    int ok = 0;
    char* raw = nullptr;
    if (*v_anti) {
      check(rs_verify_fib_antimean(n, &ok, &raw));
      return emit_verify("fib-antimean", ok, raw, c.as_json);
    }
    if (*v_ladder) {
      check(rs_verify_rbonacci_ladder(r, c.count, &ok, &raw));
      return emit_verify("rbonacci-ladder", ok, raw, c.as_json);
    }
    if (*v_bell) {
      check(rs_verify_rbonacci_bell(r, n, &ok, &raw));
      return emit_verify("rbonacci-bell", ok, raw, c.as_json);
    }
    if (*v_poly) {
      check(rs_verify_polygonal(q, c.count, &ok, &raw));
      return emit_verify("polygonal", ok, raw, c.as_json);
    }
    if (*v_click) {
      check(rs_verify_one_click(poly_f.c_str(), field_ptr(c.field), c.count, &ok, &raw));
      return emit_verify("one-click", ok, raw, c.as_json);
    }

    if (*t_stir) return emit_table("stirling", json::parse(text([&](char** o) { return rs_table_stirling(kind, n, o); })), c.as_json);
    if (*t_bell) {
      SeqPtr args = parse_list(list, c.field);
      return emit_table("bell", json::parse(text([&](char** o) { return rs_table_bell(args.get(), n, o); })), c.as_json);
    }
    if (*t_fig) return emit_table("figurate", json::parse(text([&](char** o) { return rs_table_figurate(k, c.count, o); })), c.as_json);
    if (*t_diff) {
      SeqPtr values = parse_list(list, c.field);
      rs_seq* out = nullptr;
      check(rs_table_differences(values.get(), order, &out));
      return emit_seq("differences", SeqPtr(out), c.as_json);
    }

    rs_seq* out = nullptr;
    if (*s_poly) {
      check(rs_seq_polygonal(q, d, c.count, &out));
      return emit_seq("polygonal", SeqPtr(out), c.as_json);
    }
    if (*s_rb) {
      check(rs_seq_rbonacci(r, c.count, &out));
      return emit_seq("rbonacci", SeqPtr(out), c.as_json);
    }
  } catch (const Failure& f) {
    std::cerr << "error (" << rs_status_name(f.status) << "): " << f.message << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
