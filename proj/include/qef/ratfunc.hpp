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
#pragma once

#include <optional>
#include <string>

#include "qef/poly.hpp"

namespace qef {

/// Element of the rational function field GF(2^k)(t), kept in canonical form
/// at all times: gcd(num, den) = 1 and den monic.  Zero is 0/1.
class RatFunc {
 public:
  explicit RatFunc(int k) : num_(k), den_(Poly::one(k)) {}
  RatFunc(Poly num, Poly den);
  /* implicit */ RatFunc(const Poly& p) : num_(p), den_(Poly::one(p.k())) {}
  static RatFunc zero(int k) { return RatFunc(k); }
  static RatFunc one(int k) { return RatFunc(Poly::one(k)); }
  static RatFunc t(int k) { return RatFunc(Poly::t(k)); }
  static RatFunc constant(const Gf2k& c) { return RatFunc(Poly::constant(c)); }

  int k() const { return num_.k(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  Gf2k constant_value() const;

  RatFunc zero() const { return RatFunc::zero(k()); }
  RatFunc one() const { return RatFunc::one(k()); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const { return *this + o; }
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc inv() const;
  RatFunc pow(uint64_t e) const;
  RatFunc square() const { return *this * *this; }

  /// Exact square root when one exists in GF(2^k)(t).  p/q in canonical form
  /// is a square iff the polynomial p*q has vanishing formal derivative; the
  /// root is then read off by halving exponents and taking coefficient
  /// square roots.
  std::optional<RatFunc> sqrt() const;
  bool is_square() const { return sqrt().has_value(); }

  std::string str() const;

 private:
  void canonicalize();
  Poly num_, den_;
};

inline std::optional<RatFunc> try_sqrt(const RatFunc& a) { return a.sqrt(); }

}  // namespace qef
