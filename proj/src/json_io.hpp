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

// JSON documents:
//   Lrs      {"char_poly": "t^2 - t - 1", "init": ["0", "1"], "field": "Q"}
//   GenFun   {"num": "t", "den": "-t^2 - t + 1"}
//   Pipeline [{"op": "I", "param": "1"}, {"op": "rho"}, ...] in application order

#pragma once

#include <json.hpp>

#include "text.hpp"

namespace recseq {

/// Smallest field holding every coefficient of s.
Field field_of(const Lrs& s);

nlohmann::json lrs_to_json(const Lrs& s);
/// Throws ParseError (position 0) for structural problems.
Lrs lrs_from_json(const nlohmann::json& j);

nlohmann::json genfun_to_json(const GenFun& g);
GenFun genfun_from_json(const nlohmann::json& j, Field field = {});

nlohmann::json pipeline_to_json(const Pipeline& p);
Pipeline pipeline_from_json(const nlohmann::json& j, Field field = {});

nlohmann::json terms_to_json(std::span<const FieldElem> terms);

}  // namespace recseq
