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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qef {

/// Library-wide error type.  Thrown for domain violations (mixed fields,
/// division by zero, unsupported input fragments, precision shortfalls).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Element of GF(2^k) for 1 <= k <= 16.
///
/// Elements are residues of GF(2)[x] modulo a fixed irreducible polynomial
/// of degree k, bit-packed little-endian (bit i = coefficient of x^i).  The
/// modulus for each k is the smallest-integer irreducible of degree k with
/// nonzero constant term, committed in gf2k_modulus().  Values are plain
/// 32-bit data; all operations are exact.  Operations on elements of
/// different fields throw.
class Gf2k {
 public:
  /// Default-constructed element is the zero of GF(2).
  Gf2k() : k_(1), v_(0) {}

  Gf2k(int k, uint32_t bits);

  static Gf2k zero(int k) { return Gf2k(k, 0); }
  static Gf2k one(int k) { return Gf2k(k, 1); }
  /// The residue class of x, i.e. the committed generator "w".
  static Gf2k gen(int k);

  int k() const { return k_; }
  uint32_t bits() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  /// Zero / one of the same field as *this (ring-context helpers used by
  /// generic series and curve code).
  Gf2k zero() const { return Gf2k(k_, 0); }
  Gf2k one() const { return Gf2k(k_, 1); }

  Gf2k operator+(const Gf2k& o) const;
  Gf2k operator-(const Gf2k& o) const { return *this + o; }
  Gf2k operator*(const Gf2k& o) const;
  Gf2k operator/(const Gf2k& o) const;
  Gf2k& operator+=(const Gf2k& o) { return *this = *this + o; }
  Gf2k& operator-=(const Gf2k& o) { return *this = *this + o; }
  Gf2k& operator*=(const Gf2k& o) { return *this = *this * o; }
  Gf2k& operator/=(const Gf2k& o) { return *this = *this / o; }

  bool operator==(const Gf2k& o) const { return k_ == o.k_ && v_ == o.v_; }
  bool operator!=(const Gf2k& o) const { return !(*this == o); }
  /// Total order by (k, bits); used for canonical smallest-solution choices.
  bool operator<(const Gf2k& o) const {
    return k_ != o.k_ ? k_ < o.k_ : v_ < o.v_;
  }

  Gf2k pow(uint64_t e) const;
  Gf2k inv() const;
  /// Frobenius square x -> x^2.
  Gf2k square() const { return *this * *this; }
  /// The unique square root, x^(2^(k-1)).  Total because the field is
  /// perfect.
  Gf2k sqrt() const;
  /// Absolute trace down to GF(2), returned as 0 or 1.
  int trace() const;

  /// Smallest (by bit value) s with s^2 + s = *this, when the trace
  /// vanishes; nullopt otherwise.  The second solution is s + 1.
  std::optional<Gf2k> solve_artin_schreier_const() const;

  /// Image under the committed embedding GF(2^k) -> GF(2^m); requires k | m.
  Gf2k embed_into(int m) const;

  /// Polynomial-in-w rendering, e.g. "w^2+w+1", "1", "0".
  std::string str() const;

 private:
  uint16_t k_;
  uint16_t v_;
};

/// Committed modulus for GF(2^k) as a bitmask including the x^k term.
uint32_t gf2k_modulus(int k);

/// All 2^k elements of GF(2^k) in increasing bit order.
std::vector<Gf2k> gf2k_elements(int k);

/// Image of the degree-k modulus generator inside GF(2^m) (smallest root by
/// bit value); requires k | m and m <= 16.  Cached per (k, m).
Gf2k gf2k_embedding_root(int k, int m);

inline std::optional<Gf2k> try_sqrt(const Gf2k& a) { return a.sqrt(); }

}  // namespace qef
