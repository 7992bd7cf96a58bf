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

#include "text.hpp"

#include <cctype>
#include <algorithm>
#include <map>
#include <optional>

#include "error.hpp"

namespace recseq {

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, Field field) : text_(text), field_(field) {}

  std::size_t pos() const { return pos_; }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    const std::size_t after = pos_ + w.size();
    if (after < text_.size() && std::isalpha(static_cast<unsigned char>(text_[after]))) return false;
    pos_ = after;
    return true;
  }
  std::string_view word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }
  void expect_end(const char* what) {
    if (!at_end()) fail(std::string("unexpected trailing input in ") + what);
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  BigInt digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ + 1 < text_.size() && text_[pos_] == '.' &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      fail("decimal literals are not accepted");
    }
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  Rat unsigned_rational() {
    BigInt num = digits();
    if (!accept('/')) return Rat(num);
    const std::size_t at = pos_;
    BigInt den = digits();
    if (den == 0) throw ParseError("zero denominator", at);
    return Rat(num, den);
  }

  // "(D)" right after the word "sqrt"; returns sqrt(D) in the field.
  FieldElem sqrt_tail() {
    const std::size_t at = pos_ - 4;
    expect('(');
    const BigInt d = digits();
    expect(')');
    if (field_.is_rational()) {
      throw FieldMismatch("sqrt literal at position " + std::to_string(at) +
                          " requires a quadratic field (e.g. --field \"Q(sqrt " + d.get_str() + ")\")");
    }
    if (d != BigInt(static_cast<unsigned long>(field_.d))) {
      throw FieldMismatch("sqrt(" + d.get_str() + ") does not belong to " + field_.to_string());
    }
    return FieldElem::sqrt(field_.d);
  }

  // [rational "*"] "sqrt(" D ")" with the rational already consumed (or 1).
  FieldElem irrational_term(const Rat& coeff) {
    if (!accept_word("sqrt")) fail("expected sqrt(...)");
    return FieldElem(coeff) * sqrt_tail();
  }

  FieldElem scalar() {
    Rat sign(1);
    if (accept('-')) {
      sign = Rat(-1);
    } else {
      accept('+');
    }
    if (accept_word("sqrt")) return FieldElem(sign) * sqrt_tail();
    const Rat first = sign * unsigned_rational();
    if (accept('*')) return irrational_term(first);
    const char c = peek();
    if ((c == '+' || c == '-') && looks_like_irrational_tail()) {
      ++pos_;
      const Rat s2 = c == '-' ? Rat(-1) : Rat(1);
      if (accept_word("sqrt")) return FieldElem(first) + FieldElem(s2) * sqrt_tail();
      const Rat coeff = s2 * unsigned_rational();
      expect('*');
      return FieldElem(first) + irrational_term(coeff);
    }
    return FieldElem(first);
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // After a rational, a following "+ ..." belongs to the scalar only when it
  // continues with a sqrt term (otherwise it is a polynomial operator).
  bool looks_like_irrational_tail() {
    std::size_t p = pos_ + 1;
    auto ws = [&] {
      while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    };
    ws();
    if (text_.substr(p, 4) == "sqrt") return true;
    while (p < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[p])) || text_[p] == '/')) ++p;
    ws();
    if (p >= text_.size() || text_[p] != '*') return false;
    ++p;
    ws();
    return text_.substr(p, 4) == "sqrt";
  }

  std::string_view text_;
  Field field_;
  std::size_t pos_ = 0;
};

// Splits on `sep` outside parentheses, reporting each piece's offset.
std::vector<std::pair<std::string_view, std::size_t>> split_top(std::string_view text, char sep) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.emplace_back(text.substr(start, i - start), start);
      start = i + 1;
    }
  }
  out.emplace_back(text.substr(start), start);
  return out;
}

bool blank(std::string_view s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Re-throws a ParseError from a sub-parse with the position shifted.
template <typename F>
auto with_offset(std::size_t offset, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    std::string msg = e.what();
    const auto cut = msg.rfind(" at position ");
    if (cut != std::string::npos) msg.resize(cut);
    throw ParseError(msg, e.position() + offset);
  }
}

}  // namespace

Field parse_field(std::string_view text) {
  Cursor c(text, {});
  if (!c.accept_word("Q")) c.fail("expected a field name (Q or Q(sqrt D))");
  if (c.at_end()) return Field::rationals();
  c.expect('(');
  if (!c.accept_word("sqrt")) c.fail("expected sqrt");
  const bool paren = c.accept('(');
  const BigInt d = c.digits();
  if (paren) c.expect(')');
  c.expect(')');
  c.expect_end("field");
  if (!d.fits_uint_p()) c.fail("radicand too large");
  return Field::quadratic(static_cast<std::uint32_t>(d.get_ui()));
}

FieldElem parse_scalar(std::string_view text, Field field) {
  Cursor c(text, field);
  FieldElem out = c.scalar();
  c.expect_end("scalar");
  return out;
}

std::vector<FieldElem> parse_scalar_list(std::string_view text, Field field) {
  std::vector<FieldElem> out;
  if (blank(text)) return out;
  for (const auto& [piece, offset] : split_top(text, ',')) {
    out.push_back(with_offset(offset, [&, p = piece] { return parse_scalar(p, field); }));
  }
  return out;
}

std::string format_scalar_list(std::span<const FieldElem> values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += values[i].to_string();
  }
  return out;
}

Poly parse_poly(std::string_view text, Field field) {
  Cursor c(text, field);
  std::map<std::size_t, FieldElem> acc;
  bool first = true;
  do {
    FieldElem sign(1);
    if (c.accept('-')) {
      sign = FieldElem(-1);
    } else if (!c.accept('+') && !first) {
      c.fail("expected '+' or '-'");
    }
    first = false;

    FieldElem coeff(1);
    bool have_coeff = false;
    if (c.accept('(')) {
      coeff = c.scalar();
      c.expect(')');
      have_coeff = true;
    } else if (c.peek_digit()) {
      coeff = FieldElem(c.unsigned_rational());
      have_coeff = true;
    } else if (c.accept_word("sqrt")) {
      coeff = c.sqrt_tail();
      have_coeff = true;
    }
    std::size_t power = 0;
    const bool star = have_coeff && c.accept('*');
    if (c.accept_word("t")) {
      power = 1;
      if (c.accept('^')) {
        const BigInt e = c.digits();
        if (!e.fits_ulong_p()) c.fail("exponent too large");
        power = e.get_ui();
      }
    } else if (star || !have_coeff) {
      c.fail("expected 't'");
    }
    auto [it, inserted] = acc.try_emplace(power);
    it->second += sign * coeff;
  } while (!c.at_end());

  std::vector<FieldElem> coeffs(acc.empty() ? 0 : acc.rbegin()->first + 1);
  for (auto& [k, v] : acc) coeffs[k] = v;
  return Poly(std::move(coeffs));
}

Pipeline parse_pipeline(std::string_view text, Field field, bool left_to_right) {
  std::vector<OperatorStep> steps;
  for (const auto& [piece, offset] : split_top(text, '.')) {
    steps.push_back(with_offset(offset, [&, p = piece] {
      Cursor c(p, field);
      if (c.at_end()) c.fail("empty pipeline step");
      const std::size_t at = c.pos();
      const std::string_view name = c.word();
      std::optional<OperatorStep> step;
      if (name == "sigma") {
        step = OperatorStep::sigma();
      } else if (name == "rho") {
        step = OperatorStep::rho();
      } else if (name == "I" || name == "L") {
        c.expect('(');
        FieldElem param = c.scalar();
        c.expect(')');
        step = name == "I" ? OperatorStep::invert(std::move(param)) : OperatorStep::binomial(std::move(param));
      } else {
        throw ParseError("unknown operator '" + std::string(name) + "'", at);
      }
      c.expect_end("pipeline step");
      return *step;
    }));
  }
  if (!left_to_right) std::reverse(steps.begin(), steps.end());
  return Pipeline(std::move(steps));
}

}  // namespace recseq
