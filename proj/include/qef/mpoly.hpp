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

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qef/gf2k.hpp"

namespace qef {

/// Variable context for multivariate polynomials over GF(2): an ordered list
/// of at most 16 names, declared once per verification context.  Monomial
/// order is lex with the first variable strongest.
class MCtx {
 public:
  explicit MCtx(std::vector<std::string> names);
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(size_t(i)); }
  int index(const std::string& name) const;

 private:
  std::vector<std::string> names_;
};

using MCtxPtr = std::shared_ptr<const MCtx>;

/// Packed exponent vector: 16 lanes of 8 bits, variable 0 in the top byte.
/// Comparison of the (hi, lo) pair is exactly lex order on monomials.
struct MKey {
  uint64_t hi = 0, lo = 0;
  bool operator==(const MKey& o) const { return hi == o.hi && lo == o.lo; }
  bool operator<(const MKey& o) const {
    return hi != o.hi ? hi < o.hi : lo < o.lo;
  }
  int lane(int i) const;
  MKey with_lane(int i, int v) const;
  /// Component-wise sum; throws on lane overflow past 255.
  MKey plus(const MKey& o) const;
  /// Component-wise difference; requires divisibility.
  MKey minus(const MKey& o) const;
  bool divisible_by(const MKey& o) const;
  int total_degree() const;
};

/// Multivariate polynomial over GF(2) in a fixed variable context.  Since
/// coefficients are bits, a polynomial is just its sorted set of monomials
/// (leading term first); addition is symmetric difference.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(MCtxPtr ctx) : ctx_(std::move(ctx)) {}
  static MPoly zero(MCtxPtr ctx) { return MPoly(std::move(ctx)); }
  static MPoly one(MCtxPtr ctx);
  static MPoly var(MCtxPtr ctx, int i);
  static MPoly var(MCtxPtr ctx, const std::string& name);
  static MPoly monomial(MCtxPtr ctx, const MKey& key);

  const MCtxPtr& ctx() const { return ctx_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  size_t term_count() const { return terms_.size(); }
  const std::vector<MKey>& terms() const { return terms_; }
  MKey leading() const;
  int total_degree() const;
  int degree_in(int var) const;

  MPoly zero() const { return MPoly(ctx_); }
  MPoly one() const { return MPoly::one(ctx_); }

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const { return *this + o; }
  MPoly operator*(const MPoly& o) const;
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly pow(uint64_t e) const;
  /// Frobenius square: doubles every exponent (no cross terms over GF(2)).
  MPoly square() const;
  /// Exact square root when every exponent is even; nullopt otherwise.
  std::optional<MPoly> sqrt() const;

  /// Partial derivative: in characteristic 2 a term survives iff its
  /// exponent in the variable is odd.
  MPoly derivative(int var) const;
  MPoly derivative(const std::string& var) const;

  /// Simultaneous substitution of polynomials for variables (indices absent
  /// from the map stay themselves).
  MPoly substitute(const std::map<int, MPoly>& subs) const;

  std::string str() const;

 private:
  void normalize();
  MCtxPtr ctx_;
  std::vector<MKey> terms_;
};

inline std::optional<MPoly> try_sqrt(const MPoly& a) { return a.sqrt(); }

/// Result of multivariate division: target = sum quotients[i]*divisors[i]
/// + remainder, no remainder term divisible by any divisor leading term.
struct MDivision {
  std::vector<MPoly> quotients;
  MPoly remainder;
};

MDivision mpoly_divide(const MPoly& target, const std::vector<MPoly>& divisors);

/// Ideal-membership check with an explicit, re-verified cofactor
/// certificate.  Exact whenever the divisor set is a Groebner basis for the
/// lex order, which holds for all uses in this library (single generators,
/// or generators with pairwise coprime leading monomials).  On success the
/// returned quotients satisfy target == sum q_i * g_i, re-checked by
/// expansion.
std::optional<std::vector<MPoly>> mpoly_ideal_member(
    const MPoly& target, const std::vector<MPoly>& gens);

}  // namespace qef
