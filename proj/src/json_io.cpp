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

#include "json_io.hpp"

#include "error.hpp"

namespace recseq {

using nlohmann::json;

namespace {

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing JSON member '") + key + "'", 0);
  return j.at(key);
}

std::string string_member(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_string()) throw ParseError(std::string("JSON member '") + key + "' must be a string", 0);
  return v.get<std::string>();
}

}  // namespace

Field field_of(const Lrs& s) { return Field{s.radicand()}; }

json lrs_to_json(const Lrs& s) {
  return {{"char_poly", s.char_poly().to_string()},
          {"init", terms_to_json(s.init())},
          {"field", field_of(s).to_string()}};
}

Lrs lrs_from_json(const json& j) {
  const Field field = j.contains("field") ? parse_field(string_member(j, "field")) : Field{};
  Poly f = parse_poly(string_member(j, "char_poly"), field);
  const json& init = member(j, "init");
  if (!init.is_array()) throw ParseError("JSON member 'init' must be an array", 0);
  std::vector<FieldElem> values;
  for (const auto& v : init) {
    if (v.is_string()) {
      values.push_back(parse_scalar(v.get<std::string>(), field));
    } else if (v.is_number_integer()) {
      values.emplace_back(v.get<long>());
    } else {
      throw ParseError("initial conditions must be strings or integers", 0);
    }
  }
  return Lrs(std::move(f), std::move(values));
}

json genfun_to_json(const GenFun& g) { return {{"num", g.num.to_string()}, {"den", g.den.to_string()}}; }

GenFun genfun_from_json(const json& j, Field field) {
  return {parse_poly(string_member(j, "num"), field), parse_poly(string_member(j, "den"), field)};
}

json pipeline_to_json(const Pipeline& p) {
  json out = json::array();
  for (const auto& step : p.steps()) {
    switch (step.kind()) {
      case OpKind::kSigma: out.push_back({{"op", "sigma"}}); break;
      case OpKind::kRho: out.push_back({{"op", "rho"}}); break;
      case OpKind::kInvert: out.push_back({{"op", "I"}, {"param", step.param()->to_string()}}); break;
      case OpKind::kBinomial: out.push_back({{"op", "L"}, {"param", step.param()->to_string()}}); break;
    }
  }
  return out;
}

Pipeline pipeline_from_json(const json& j, Field field) {
  if (!j.is_array()) throw ParseError("pipeline JSON must be an array", 0);
  Pipeline p;
  for (const auto& item : j) {
    const std::string op = string_member(item, "op");
    if (op == "sigma") {
      p.then(OperatorStep::sigma());
    } else if (op == "rho") {
      p.then(OperatorStep::rho());
    } else if (op == "I" || op == "L") {
      FieldElem param = parse_scalar(string_member(item, "param"), field);
      p.then(op == "I" ? OperatorStep::invert(std::move(param)) : OperatorStep::binomial(std::move(param)));
    } else {
      throw ParseError("unknown operator '" + op + "'", 0);
    }
  }
  return p;
}

json terms_to_json(std::span<const FieldElem> terms) {
  json out = json::array();
  for (const auto& t : terms) out.push_back(t.to_string());
  return out;
}

}  // namespace recseq
