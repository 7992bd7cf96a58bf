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

#include "recseq/recseq.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <string>

#include "apps.hpp"
#include "error.hpp"
#include "json_io.hpp"

struct rs_lrs {
  recseq::Lrs value;
};
struct rs_seq {
  recseq::SeqPrefix value;
};
struct rs_pipeline {
  recseq::Pipeline value;
};

namespace {

using namespace recseq;
using nlohmann::json;

constexpr std::size_t kNoPosition = std::numeric_limits<std::size_t>::max();

thread_local std::string last_error;
thread_local std::size_t last_position = kNoPosition;

struct InvalidArgument : Error {
  using Error::Error;
};
struct InsufficientData : Error {
  using Error::Error;
};

rs_status fail(rs_status status, const char* msg, std::size_t position = kNoPosition) {
  last_error = msg;
  last_position = position;
  return status;
}

template <typename F>
rs_status guard(F&& f) {
  last_error.clear();
  last_position = kNoPosition;
  try {
    f();
    return RS_OK;
  } catch (const ParseError& e) {
    return fail(RS_ERR_PARSE, e.what(), e.position());
  } catch (const DivisionByZero& e) {
    return fail(RS_ERR_DIVISION_BY_ZERO, e.what());
  } catch (const FieldMismatch& e) {
    return fail(RS_ERR_FIELD_MISMATCH, e.what());
  } catch (const DomainError& e) {
    return fail(RS_ERR_DOMAIN, e.what());
  } catch (const InsufficientData& e) {
    return fail(RS_ERR_INSUFFICIENT_DATA, e.what());
  } catch (const InvalidArgument& e) {
    return fail(RS_ERR_INVALID_ARGUMENT, e.what());
  } catch (const json::exception& e) {
    return fail(RS_ERR_PARSE, e.what(), 0);
  } catch (const std::bad_alloc&) {
    return fail(RS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RS_ERR_INTERNAL, e.what());
  }
}

void need(const void* p, const char* what) {
  if (p == nullptr) throw InvalidArgument(std::string(what) + " must not be NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Field field_arg(const char* field) { return field == nullptr ? Field{} : parse_field(field); }

json report(const char* suite, json checks) {
  bool ok = true;
  for (const auto& c : checks) ok = ok && c["ok"].get<bool>();
  return {{"suite", suite}, {"checks", std::move(checks)}, {"ok", ok}};
}

rs_status finish_report(const json& r, int* ok, char** out) {
  *ok = r["ok"].get<bool>() ? 1 : 0;
  if (out != nullptr) *out = dup(r.dump());
  return RS_OK;
}

json trace_entry(const OperatorStep& step, const json& poly) { return {{"op", step.to_string()}, {"char_poly", poly}}; }

}  // namespace

extern "C" {

const char* rs_status_name(rs_status status) {
  switch (status) {
    case RS_OK: return "ok";
    case RS_ERR_PARSE: return "parse error";
    case RS_ERR_DIVISION_BY_ZERO: return "division by zero";
    case RS_ERR_FIELD_MISMATCH: return "field mismatch";
    case RS_ERR_DOMAIN: return "domain error";
    case RS_ERR_INSUFFICIENT_DATA: return "insufficient data";
    case RS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* rs_last_error(void) { return last_error.c_str(); }
size_t rs_last_error_position(void) { return last_position; }
void rs_string_free(char* s) { std::free(s); }
const char* rs_version(void) { return "1.0.0"; }

// ---- recurrences ---------------------------------------------------------

rs_status rs_lrs_new(const char* char_poly, const char* init, const char* field, rs_lrs** out) {
  return guard([&] {
    need(char_poly, "char_poly");
    need(init, "init");
    need(out, "out");
    const Field f = field_arg(field);
    *out = new rs_lrs{Lrs(parse_poly(char_poly, f), parse_scalar_list(init, f))};
  });
}

rs_status rs_lrs_impulse(const char* char_poly, const char* field, rs_lrs** out) {
  return guard([&] {
    need(char_poly, "char_poly");
    need(out, "out");
    const Poly f = parse_poly(char_poly, field_arg(field));
    if (f.degree() < 1) throw DomainError("impulse sequence needs a polynomial of degree >= 1");
    *out = new rs_lrs{impulse(static_cast<std::size_t>(f.degree()), f)};
  });
}

rs_status rs_lrs_startsequence(rs_lrs** out) {
  return guard([&] {
    need(out, "out");
    *out = new rs_lrs{startsequence()};
  });
}

rs_status rs_lrs_from_json(const char* text, rs_lrs** out) {
  return guard([&] {
    need(text, "json");
    need(out, "out");
    *out = new rs_lrs{lrs_from_json(json::parse(text))};
  });
}

rs_status rs_lrs_to_json(const rs_lrs* s, char** out) {
  return guard([&] {
    need(s, "lrs");
    need(out, "out");
    *out = dup(lrs_to_json(s->value).dump());
  });
}

rs_status rs_lrs_char_poly(const rs_lrs* s, char** out) {
  return guard([&] {
    need(s, "lrs");
    need(out, "out");
    *out = dup(s->value.char_poly().to_string());
  });
}

size_t rs_lrs_order(const rs_lrs* s) { return s == nullptr ? 0 : s->value.order(); }

rs_status rs_lrs_terms(const rs_lrs* s, size_t count, rs_seq** out) {
  return guard([&] {
    need(s, "lrs");
    need(out, "out");
    *out = new rs_seq{terms(s->value, count)};
  });
}

rs_status rs_lrs_genfun(const rs_lrs* s, char** out) {
  return guard([&] {
    need(s, "lrs");
    need(out, "out");
    *out = dup(genfun_to_json(genfun(s->value)).dump());
  });
}

rs_status rs_lrs_invert_genfun(const rs_lrs* s, const char* x, char** out) {
  return guard([&] {
    need(s, "lrs");
    need(x, "x");
    need(out, "out");
    const GenFun g = invert_genfun(s->value, parse_scalar(x, field_of(s->value)));
    const Recurrence rec = recurrence_from_genfun(g);
    json j = genfun_to_json(g);
    j["char_poly"] = rec.char_poly.to_string();
    j["valid_from"] = rec.valid_from;
    *out = dup(j.dump());
  });
}

rs_status rs_lrs_degree_reduction(const rs_lrs* s, char** out) {
  return guard([&] {
    need(s, "lrs");
    need(out, "out");
    const auto x = degree_reduction_param(s->value);
    if (!x) throw DomainError("not reducible: u_{r-1} is zero");
    *out = dup(x->to_string());
  });
}

void rs_lrs_free(rs_lrs* s) { delete s; }

// ---- prefixes ------------------------------------------------------------

rs_status rs_seq_parse(const char* list, const char* field, rs_seq** out) {
  return guard([&] {
    need(list, "list");
    need(out, "out");
    *out = new rs_seq{parse_scalar_list(list, field_arg(field))};
  });
}

size_t rs_seq_length(const rs_seq* a) { return a == nullptr ? 0 : a->value.size(); }

rs_status rs_seq_term(const rs_seq* a, size_t index, char** out) {
  return guard([&] {
    need(a, "seq");
    need(out, "out");
    if (index >= a->value.size()) throw InvalidArgument("index out of range");
    *out = dup(a->value[index].to_string());
  });
}

rs_status rs_seq_to_string(const rs_seq* a, const char* sep, char** out) {
  return guard([&] {
    need(a, "seq");
    need(out, "out");
    *out = dup(format_scalar_list(a->value, sep == nullptr ? "," : sep));
  });
}

rs_status rs_seq_to_json(const rs_seq* a, char** out) {
  return guard([&] {
    need(a, "seq");
    need(out, "out");
    *out = dup(terms_to_json(a->value).dump());
  });
}

int rs_seq_equal(const rs_seq* a, const rs_seq* b) {
  return a != nullptr && b != nullptr && a->value == b->value ? 1 : 0;
}

rs_status rs_seq_minimal_recurrence(const rs_seq* a, char** char_poly, size_t* valid_from) {
  return guard([&] {
    need(a, "seq");
    need(char_poly, "char_poly");
    need(valid_from, "valid_from");
    const auto m = minimal_recurrence(a->value);
    if (!m) throw InsufficientData("prefix too short to determine a recurrence");
    *char_poly = dup(m->char_poly.to_string());
    *valid_from = m->valid_from;
  });
}

void rs_seq_free(rs_seq* a) { delete a; }

// ---- pipelines -----------------------------------------------------------

rs_status rs_pipeline_parse(const char* text, const char* field, int left_to_right, rs_pipeline** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new rs_pipeline{parse_pipeline(text, field_arg(field), left_to_right != 0)};
  });
}

rs_status rs_pipeline_from_json(const char* text, const char* field, rs_pipeline** out) {
  return guard([&] {
    need(text, "json");
    need(out, "out");
    *out = new rs_pipeline{pipeline_from_json(json::parse(text), field_arg(field))};
  });
}

rs_status rs_pipeline_to_string(const rs_pipeline* p, char** out) {
  return guard([&] {
    need(p, "pipeline");
    need(out, "out");
    *out = dup(p->value.to_string());
  });
}

rs_status rs_pipeline_to_json(const rs_pipeline* p, char** out) {
  return guard([&] {
    need(p, "pipeline");
    need(out, "out");
    *out = dup(pipeline_to_json(p->value).dump());
  });
}

size_t rs_pipeline_length(const rs_pipeline* p) { return p == nullptr ? 0 : p->value.size(); }

rs_status rs_pipeline_l_construct(const char* zeros, const char* field, rs_pipeline** out) {
  return guard([&] {
    need(zeros, "zeros");
    need(out, "out");
    const auto z = parse_scalar_list(zeros, field_arg(field));
    if (z.empty()) throw InvalidArgument("at least one zero is required");
    *out = new rs_pipeline{l_construct(z)};
  });
}

rs_status rs_pipeline_i_construct(const char* coeffs, const char* field, rs_pipeline** out) {
  return guard([&] {
    need(coeffs, "coeffs");
    need(out, "out");
    const auto h = parse_scalar_list(coeffs, field_arg(field));
    if (h.empty()) throw InvalidArgument("at least one coefficient is required");
    *out = new rs_pipeline{i_construct(h)};
  });
}

rs_status rs_pipeline_l_deconstruct(const rs_lrs* s, const char* zeros, const char* field, rs_pipeline** out) {
  return guard([&] {
    need(s, "lrs");
    need(zeros, "zeros");
    need(out, "out");
    *out = new rs_pipeline{l_deconstruct(s->value, parse_scalar_list(zeros, field_arg(field)))};
  });
}

rs_status rs_pipeline_i_deconstruct(const rs_lrs* s, rs_pipeline** out) {
  return guard([&] {
    need(s, "lrs");
    need(out, "out");
    *out = new rs_pipeline{i_deconstruct(s->value)};
  });
}

rs_status rs_pipeline_apply_lrs(const rs_pipeline* p, const rs_lrs* s, rs_lrs** out, char** trace) {
  return guard([&] {
    need(p, "pipeline");
    need(s, "lrs");
    need(out, "out");
    Trace t = apply_traced(p->value, s->value);
    json steps = json::array();
    for (const auto& e : t.entries) steps.push_back(trace_entry(e.step, e.char_poly.to_string()));
    char* trace_text = trace != nullptr ? dup(steps.dump()) : nullptr;
    *out = new rs_lrs{std::move(t.result)};
    if (trace != nullptr) *trace = trace_text;
  });
}

rs_status rs_pipeline_apply_seq(const rs_pipeline* p, const rs_seq* a, rs_seq** out, char** trace) {
  return guard([&] {
    need(p, "pipeline");
    need(a, "seq");
    need(out, "out");
    SeqPrefix cur = a->value;
    json steps = json::array();
    for (const auto& step : p->value.steps()) {
      cur = apply_step(step, cur);
      if (trace == nullptr) continue;
      const auto m = minimal_recurrence(cur);
      json entry = trace_entry(step, m ? json(m->char_poly.to_string()) : json(nullptr));
      if (m) entry["valid_from"] = m->valid_from;
      steps.push_back(std::move(entry));
    }
    char* trace_text = trace != nullptr ? dup(steps.dump()) : nullptr;
    *out = new rs_seq{std::move(cur)};
    if (trace != nullptr) *trace = trace_text;
  });
}

void rs_pipeline_free(rs_pipeline* p) { delete p; }

// ---- identity checks -----------------------------------------------------

rs_status rs_verify_fib_antimean(size_t n_max, int* ok, char** out) {
  return guard([&] {
    need(ok, "ok");
    json checks = json::array();
    for (std::size_t n = 0; n <= n_max; ++n) {
      const FieldElem v = fib_antimean_identity(n);
      checks.push_back({{"name", "n=" + std::to_string(n)}, {"value", v.to_string()}, {"ok", v.is_zero()}});
    }
    finish_report(report("fib-antimean", std::move(checks)), ok, out);
  });
}

rs_status rs_verify_rbonacci_ladder(size_t r_max, size_t count, int* ok, char** out) {
  return guard([&] {
    need(ok, "ok");
    if (r_max < 1) throw InvalidArgument("r must be at least 1");
    json checks = json::array();
    const SeqPrefix one = invert_stream(terms(startsequence(), count), FieldElem(1));
    checks.push_back({{"name", "I(u) = F^(1)"}, {"ok", one == rbonacci(1, count)}});
    for (std::size_t r = 1; r < r_max; ++r) {
      checks.push_back({{"name", "I(rho(F^(" + std::to_string(r) + "))) = F^(" + std::to_string(r + 1) + ")"},
                        {"ok", rbonacci_ladder_step(r, count)}});
    }
    for (std::size_t r = 2; r <= r_max; ++r) {
      checks.push_back({{"name", "cross-order recurrence r=" + std::to_string(r)},
                        {"ok", rbonacci_cross_order_check(r, count)}});
    }
    finish_report(report("rbonacci-ladder", std::move(checks)), ok, out);
  });
}

rs_status rs_verify_rbonacci_bell(size_t r_max, size_t n_max, int* ok, char** out) {
  return guard([&] {
    need(ok, "ok");
    if (r_max < 1) throw InvalidArgument("r must be at least 1");
    json checks = json::array();
    for (std::size_t r = 1; r <= r_max; ++r) {
      checks.push_back({{"name", "F^(" + std::to_string(r + 1) + ")_n = B_{n+1}(0, F^(" + std::to_string(r) + "))"},
                        {"ok", rbonacci_bell_check(r, n_max)}});
    }
    finish_report(report("rbonacci-bell", std::move(checks)), ok, out);
  });
}

rs_status rs_verify_polygonal(long q, size_t count, int* ok, char** out) {
  return guard([&] {
    need(ok, "ok");
    if (q < 2) throw InvalidArgument("q must be at least 2");
    SeqPrefix p;
    for (std::size_t n = 0; n <= count; ++n) p.push_back(polygonal(q, static_cast<long>(n)));
    const SeqPrefix head(p.begin(), p.begin() + static_cast<long>(count));
    const SeqPrefix tail(p.begin() + 1, p.end());
    // (0, 1, q-2, 0, ...) and (1, q-1, q-2, 0, ...)
    SeqPrefix pn2(count), pn3(count);
    const FieldElem lead2[] = {FieldElem(0), FieldElem(1), FieldElem(q - 2)};
    const FieldElem lead3[] = {FieldElem(1), FieldElem(q - 1), FieldElem(q - 2)};
    for (std::size_t i = 0; i < 3 && i < count; ++i) {
      pn2[i] = lead2[i];
      pn3[i] = lead3[i];
    }
    json checks = json::array();
    checks.push_back({{"name", "L(1)((0,1,q-2,0,...)) = P_q(n)"}, {"ok", binomial_stream(pn2, FieldElem(1)) == head}});
    checks.push_back({{"name", "L(1)((1,q-1,q-2,0,...)) = P_q(n+1)"}, {"ok", binomial_stream(pn3, FieldElem(1)) == tail}});
    checks.push_back({{"name", "L(-1)(P_q(n)) = (0,1,q-2,0,...)"}, {"ok", binomial_stream(head, FieldElem(-1)) == pn2}});
    json r = report("polygonal", std::move(checks));
    r["q"] = q;
    r["terms"] = terms_to_json(head);
    finish_report(r, ok, out);
  });
}

rs_status rs_verify_one_click(const char* poly, const char* field, size_t count, int* ok, char** out) {
  return guard([&] {
    need(poly, "poly");
    need(ok, "ok");
    const Poly f = parse_poly(poly, field_arg(field));
    const auto [lstream, dstream] = one_click(f, count);
    SeqPrefix values;
    for (std::size_t n = 0; n < count; ++n) values.push_back(eval(f, FieldElem(static_cast<long>(n))));
    bool vanish = true;
    for (std::size_t n = static_cast<std::size_t>(f.degree() + 1); n < dstream.size(); ++n) {
      vanish = vanish && dstream[n].is_zero();
    }
    json checks = json::array();
    checks.push_back({{"name", "L(-1)((f(n))) = (Delta^n f(0))"}, {"ok", lstream == dstream}});
    checks.push_back({{"name", "Delta^n f(0) = 0 for n > deg f"}, {"ok", vanish}});
    checks.push_back({{"name", "L(1)((Delta^n f(0))) = (f(n))"}, {"ok", binomial_stream(dstream, FieldElem(1)) == values}});
    json r = report("one-click", std::move(checks));
    r["terms"] = terms_to_json(dstream);
    finish_report(r, ok, out);
  });
}

// ---- tables --------------------------------------------------------------

rs_status rs_table_stirling(int kind, size_t max_n, char** out) {
  return guard([&] {
    need(out, "out");
    if (kind != 1 && kind != 2) throw InvalidArgument("kind must be 1 or 2");
    const StirlingTables t(max_n);
    json rows = json::array();
    for (std::size_t n = 0; n <= max_n; ++n) {
      json row = json::array();
      for (std::size_t k = 0; k <= n; ++k) row.push_back((kind == 2 ? t.second(n, k) : t.first_unsigned(n, k)).get_str());
      rows.push_back(std::move(row));
    }
    *out = dup(rows.dump());
  });
}

rs_status rs_table_bell(const rs_seq* args, size_t max_n, char** out) {
  return guard([&] {
    need(args, "args");
    need(out, "out");
    const BellTable t(args->value, max_n);
    json rows = json::array();
    for (std::size_t n = 0; n <= max_n; ++n) {
      json row = json::array();
      for (std::size_t k = 0; k <= n; ++k) row.push_back(t.partial(n, k).to_string());
      rows.push_back(std::move(row));
    }
    *out = dup(rows.dump());
  });
}

rs_status rs_table_figurate(size_t max_k, size_t count, char** out) {
  return guard([&] {
    need(out, "out");
    json rows = json::array();
    for (std::size_t k = 1; k <= max_k; ++k) {
      json row = json::array();
      for (std::size_t h = 0; h < count; ++h) row.push_back(figurate(static_cast<long>(k), static_cast<long>(h)).get_str());
      rows.push_back(std::move(row));
    }
    *out = dup(rows.dump());
  });
}

rs_status rs_table_differences(const rs_seq* values, size_t order, rs_seq** out) {
  return guard([&] {
    need(values, "values");
    need(out, "out");
    *out = new rs_seq{finite_differences(values->value, order)};
  });
}

rs_status rs_seq_polygonal(long q, long d, size_t count, rs_seq** out) {
  return guard([&] {
    need(out, "out");
    if (q < 2) throw InvalidArgument("q must be at least 2");
    if (d < 2) throw InvalidArgument("d must be at least 2");
    *out = new rs_seq{pyramidal_sequence(q, d, count)};
  });
}

rs_status rs_seq_rbonacci(size_t r, size_t count, rs_seq** out) {
  return guard([&] {
    need(out, "out");
    if (r < 1) throw InvalidArgument("r must be at least 1");
    *out = new rs_seq{rbonacci(r, count)};
  });
}

}  // extern "C"
