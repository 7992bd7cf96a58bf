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

// Text forms shared by the CLI and the C API.
//
//   field    := "Q" | "Q(sqrt D)" | "Q(sqrt(D))"
//   scalar   := rational [("+"|"-") [rational "*"] "sqrt(" D ")"]
//             | ["-"] [rational "*"] "sqrt(" D ")"
//   rational := ["-"] digits ["/" digits]
//   poly     := ["-"] term (("+"|"-") term)*
//   term     := coeff ["*"] mono | mono | coeff
//   coeff    := rational | "sqrt(" D ")" | "(" scalar ")"
//   mono     := "t" ["^" digits]
//   pipeline := step ("." step)*       (applied right to left by default)
//   step     := "sigma" | "rho" | ("I"|"L") "(" scalar ")"
//
// Whitespace is ignored between tokens. Decimal literals are rejected.

#pragma once

#include <string_view>
#include <vector>

#include "pipeline.hpp"

namespace recseq {

Field parse_field(std::string_view text);

/// Throws ParseError on bad syntax and FieldMismatch when a sqrt term does
/// not belong to `field`.
FieldElem parse_scalar(std::string_view text, Field field = {});

/// Comma separated scalars; empty text gives an empty list.
std::vector<FieldElem> parse_scalar_list(std::string_view text, Field field = {});
std::string format_scalar_list(std::span<const FieldElem> values, std::string_view sep = ",");

Poly parse_poly(std::string_view text, Field field = {});

/// With left_to_right the leftmost step is applied first.
Pipeline parse_pipeline(std::string_view text, Field field = {}, bool left_to_right = false);

}  // namespace recseq
