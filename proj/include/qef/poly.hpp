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
#include <utility>
#include <vector>

#include "qef/gf2k.hpp"

namespace qef {

/// Dense univariate polynomial in t over GF(2^k).  The coefficient field is
/// part of the value; operations on mismatched fields throw.  Coefficients
/// are stored low-degree first with no trailing zeros.
class Poly {
 public:
  explicit Poly(int k) : k_(k), c_() {}
  Poly(int k, std::vector<Gf2k> coeffs);
  static Poly zero(int k) { return Poly(k); }
  static Poly one(int k) { return constant(Gf2k::one(k)); }
  static Poly t(int k);
  static Poly constant(const Gf2k& c);

  int k() const { return k_; }
  /// Degree; -1 for the zero polynomial.
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Gf2k>& coeffs() const { return c_; }
  Gf2k coeff(int i) const;
  Gf2k lc() const;
  Gf2k constant_term() const { return coeff(0); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const { return *this + o; }
  Poly operator*(const Poly& o) const;
  Poly operator*(const Gf2k& s) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return k_ == o.k_ && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  /// Total order by degree then coefficient bits, used for canonical choices.
  bool operator<(const Poly& o) const;

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  bool divides(const Poly& multiple) const;

  Poly monic() const;
  static Poly gcd(Poly a, Poly b);

  Gf2k eval(const Gf2k& x) const;
  /// Formal derivative; in characteristic 2 only odd-degree terms survive.
  Poly derivative() const;
  /// Multiply by t^n.
  Poly shift(int n) const;

  /// Exact square root when the polynomial is a square (equivalently the
  /// derivative vanishes); nullopt otherwise.
  std::optional<Poly> sqrt() const;

  Poly embed_into(int m) const;

  std::string str() const;

 private:
  void trim();
  int k_;
  std::vector<Gf2k> c_;
};

inline Poly operator*(const Gf2k& s, const Poly& p) { return p * s; }

}  // namespace qef
