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
#include "qef/poly.hpp"

#include <algorithm>

namespace qef {

Poly::Poly(int k, std::vector<Gf2k> coeffs) : k_(k), c_(std::move(coeffs)) {
  for (const Gf2k& c : c_)
    if (c.k() != k_) throw Error("Poly: coefficient from wrong field");
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::t(int k) {
  return Poly(k, {Gf2k::zero(k), Gf2k::one(k)});
}

Poly Poly::constant(const Gf2k& c) {
  Poly p(c.k());
  if (!c.is_zero()) p.c_.push_back(c);
  return p;
}

Gf2k Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Gf2k::zero(k_);
  return c_[i];
}

Gf2k Poly::lc() const {
  if (c_.empty()) throw Error("Poly: leading coefficient of zero");
  return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
  if (k_ != o.k_) throw Error("Poly: mixed fields in +");
  Poly r(k_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), Gf2k::zero(k_));
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(int(i)) + o.coeff(int(i));
  r.trim();
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (k_ != o.k_) throw Error("Poly: mixed fields in *");
  if (is_zero() || o.is_zero()) return Poly(k_);
  Poly r(k_);
  r.c_.assign(c_.size() + o.c_.size() - 1, Gf2k::zero(k_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

Poly Poly::operator*(const Gf2k& s) const {
  if (s.k() != k_) throw Error("Poly: mixed fields in scalar *");
  Poly r(k_);
  r.c_.reserve(c_.size());
  for (const Gf2k& c : c_) r.c_.push_back(c * s);
  r.trim();
  return r;
}

bool Poly::operator<(const Poly& o) const {
  if (deg() != o.deg()) return deg() < o.deg();
  for (int i = deg(); i >= 0; --i)
    if (coeff(i) != o.coeff(i)) return coeff(i) < o.coeff(i);
  return false;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (k_ != d.k_) throw Error("Poly: mixed fields in divmod");
  if (d.is_zero()) throw Error("Poly: division by zero polynomial");
  Poly q(k_), r = *this;
  const Gf2k dinv = d.lc().inv();
  while (!r.is_zero() && r.deg() >= d.deg()) {
    const int shift = r.deg() - d.deg();
    const Gf2k f = r.lc() * dinv;
    Poly term = Poly::constant(f).shift(shift);
    q += term;
    r += term * d;
  }
  return {q, r};
}

bool Poly::divides(const Poly& multiple) const {
  return multiple.divmod(*this).second.is_zero();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * lc().inv();
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = b;
    b = r;
  }
  return a.monic();
}

Gf2k Poly::eval(const Gf2k& x) const {
  Gf2k acc = Gf2k::zero(k_);
  for (int i = deg(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::derivative() const {
  Poly r(k_);
  for (int i = 1; i <= deg(); ++i)
    if (i % 2 == 1) r += Poly::constant(c_[i]).shift(i - 1);
  return r;
}

Poly Poly::shift(int n) const {
  if (n < 0) throw Error("Poly: negative shift");
  if (is_zero()) return *this;
  Poly r(k_);
  r.c_.assign(c_.size() + size_t(n), Gf2k::zero(k_));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i + size_t(n)] = c_[i];
  return r;
}

std::optional<Poly> Poly::sqrt() const {
  if (is_zero()) return Poly(k_);
  Poly r(k_);
  r.c_.assign(c_.size() / 2 + 1, Gf2k::zero(k_));
  for (int i = 0; i <= deg(); ++i) {
    if (i % 2 == 1) {
      if (!c_[i].is_zero()) return std::nullopt;
    } else {
      r.c_[i / 2] = c_[i].sqrt();
    }
  }
  r.trim();
  return r;
}

Poly Poly::embed_into(int m) const {
  Poly r(m);
  r.c_.reserve(c_.size());
  for (const Gf2k& c : c_) r.c_.push_back(c.embed_into(m));
  return r;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = deg(); i >= 0; --i) {
    const Gf2k& c = c_[size_t(i)];
    if (c.is_zero()) continue;
    if (!s.empty()) s += "+";
    std::string cs = c.str();
    const bool wrap = cs.find('+') != std::string::npos;
    if (i == 0) {
      s += wrap ? "(" + cs + ")" : cs;
      continue;
    }
    if (!c.is_one()) s += (wrap ? "(" + cs + ")" : cs) + "*";
    s += i == 1 ? "t" : "t^" + std::to_string(i);
  }
  return s;
}

}  // namespace qef
