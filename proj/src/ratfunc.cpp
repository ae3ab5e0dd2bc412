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
#include "qef/ratfunc.hpp"

namespace qef {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.k() != den_.k()) throw Error("RatFunc: mixed fields");
  if (den_.is_zero()) throw Error("RatFunc: zero denominator");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly::one(num_.k());
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  const Gf2k scale = den_.lc().inv();
  num_ = num_ * scale;
  den_ = den_ * scale;
}

Gf2k RatFunc::constant_value() const {
  if (!is_constant()) throw Error("RatFunc: not a constant");
  return num_.coeff(0);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

RatFunc RatFunc::inv() const {
  if (is_zero()) throw Error("RatFunc: division by zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(uint64_t e) const {
  RatFunc base = *this, acc = one();
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::optional<RatFunc> RatFunc::sqrt() const {
  if (is_zero()) return zero();
  // p/q = (p*q)/q^2, so with gcd(p, q) = 1 the element is a square iff the
  // polynomial p*q is one.
  const Poly pq = num_ * den_;
  if (!pq.derivative().is_zero()) return std::nullopt;
  auto root = pq.sqrt();
  if (!root) return std::nullopt;
  return RatFunc(*root, den_);
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  // Parenthesize only what a sum or product would make ambiguous; bare
  // powers like t^2 bind tighter than the division sign.
  auto wrap = [](const std::string& s) {
    return s.find('+') != std::string::npos || s.find('*') != std::string::npos
               ? "(" + s + ")"
               : s;
  };
  return wrap(num_.str()) + "/" + wrap(den_.str());
}

}  // namespace qef
