/*
 * Copyright 2026 the qef authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
 * implied. See the License for the specific language governing
 * permissions and limitations under the License.
 */
#include "qef/literal.hpp"

#include <cctype>

namespace qef {

namespace {

/// Recursive-descent reader for  expr := term ('+' term)*,
/// term := factor (('*'|'/') factor)*, factor := atom ('^' digits)?,
/// atom := 'w' | 't' | '0' | '1' | '(' expr ')'.
class LiteralParser {
 public:
  LiteralParser(const std::string& text, int k) : text_(text), k_(k) {}

  RatFunc run() {
    RatFunc v = expr();
    skip_space();
    if (pos_ != text_.size())
      throw Error("literal: unexpected \"" + text_.substr(pos_) + "\"");
    return v;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(uint8_t(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc v = term();
    while (eat('+')) v = v + term();
    return v;
  }

  RatFunc term() {
    RatFunc v = factor();
    for (;;) {
      if (eat('*')) {
        v = v * factor();
      } else if (eat('/')) {
        RatFunc d = factor();
        if (d.is_zero()) throw Error("literal: division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }

  RatFunc factor() {
    RatFunc v = atom();
    if (eat('^')) return v.pow(exponent());
    return v;
  }

  uint64_t exponent() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(uint8_t(text_[pos_])))
      throw Error("literal: expected an exponent after '^'");
    uint64_t e = 0;
    while (pos_ < text_.size() && std::isdigit(uint8_t(text_[pos_]))) {
      e = e * 10 + uint64_t(text_[pos_] - '0');
      if (e > 4096) throw Error("literal: exponent too large");
      ++pos_;
    }
    return e;
  }

  RatFunc atom() {
    skip_space();
    if (pos_ >= text_.size()) throw Error("literal: unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc v = expr();
      if (!eat(')')) throw Error("literal: missing ')'");
      return v;
    }
    ++pos_;
    switch (c) {
      case 'w': return RatFunc::constant(Gf2k::gen(k_));
      case 't': return RatFunc::t(k_);
      case '0': return RatFunc::zero(k_);
      case '1': return RatFunc::one(k_);
      default: break;
    }
    if (std::isdigit(uint8_t(c)))
      throw Error("literal: only the digits 0 and 1 denote constants");
    throw Error(std::string("literal: unexpected character '") + c + "'");
  }

  const std::string& text_;
  int k_;
  size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc_literal(const std::string& text, int k) {
  if (k < 1 || k > 16) throw Error("literal: field size out of range");
  return LiteralParser(text, k).run();
}

Gf2k parse_gf2k_literal(const std::string& text, int k) {
  const RatFunc v = parse_ratfunc_literal(text, k);
  if (!v.is_constant())
    throw Error("literal: \"" + text + "\" is not a field constant");
  return v.num().constant_term();
}

}  // namespace qef
