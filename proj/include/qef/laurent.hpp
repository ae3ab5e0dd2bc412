// Copyright 2026 the qef authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qef/gf2k.hpp"

namespace qef {

/// Laurent series with exact coefficients in a characteristic-2 ring R and
/// explicit precision bookkeeping.
///
/// A series is either exact (it is a Laurent polynomial: every coefficient
/// outside the stored window is zero) or truncated, in which case prec() is
/// the order of the first coefficient the series does not know.  Arithmetic
/// never claims coefficients beyond what the operands certify.
///
/// R must provide value semantics, +, *, ==, is_zero(), is_one(), instance
/// zero()/one() context helpers, str(), and a free try_sqrt(R) ->
/// optional<R>.  Gf2k, RatFunc and MPoly all qualify, so the same engine
/// expands over finite fields, rational function fields and symbolic
/// contexts.
template <class R>
class Laurent {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max();

  /// Exact zero series; `zero` fixes the coefficient ring context.
  explicit Laurent(R zero) : zero_(std::move(zero)) {}

  static Laurent monomial(const R& c, int order) {
    Laurent s(c.zero());
    s.low_ = order;
    s.coeffs_.push_back(c);
    s.normalize();
    return s;
  }
  /// The series parameter itself, t^1.
  static Laurent t(const R& zero) { return monomial(zero.one(), 1); }
  static Laurent exact(R zero, int low, std::vector<R> coeffs) {
    Laurent s(std::move(zero));
    s.low_ = low;
    s.coeffs_ = std::move(coeffs);
    s.normalize();
    return s;
  }
  static Laurent truncated(R zero, int low, std::vector<R> coeffs, int prec) {
    Laurent s(std::move(zero));
    s.low_ = low;
    s.coeffs_ = std::move(coeffs);
    s.prec_ = prec;
    if (low + int(s.coeffs_.size()) > prec)
      throw Error("Laurent: stored coefficients exceed declared precision");
    s.normalize();
    return s;
  }

  bool is_exact() const { return prec_ == kExact; }
  int prec() const { return prec_; }
  const R& ring_zero() const { return zero_; }

  /// True when every known coefficient is zero.  For an exact series this
  /// means the series is identically zero.
  bool known_zero() const { return coeffs_.empty(); }

  /// Order of the lowest nonzero coefficient; nullopt when none is known.
  std::optional<int> ord() const {
    if (coeffs_.empty()) return std::nullopt;
    return low_;
  }

  /// Coefficient at the given order; throws past the precision horizon.
  const R& coeff(int order) const {
    if (order >= prec_)
      throw Error("Laurent: coefficient requested beyond precision");
    if (order < low_ || order >= low_ + int(coeffs_.size())) return zero_;
    return coeffs_[size_t(order - low_)];
  }

  Laurent operator+(const Laurent& o) const {
    Laurent r(zero_);
    r.prec_ = std::min(prec_, o.prec_);
    int lo = std::min(low_or(r.prec_), o.low_or(r.prec_));
    int hi = std::min(r.prec_, std::max(top(), o.top()));
    if (lo < hi) {
      r.low_ = lo;
      r.coeffs_.assign(size_t(hi - lo), zero_);
      accumulate(r, *this, lo, hi);
      accumulate(r, o, lo, hi);
    }
    r.normalize();
    return r;
  }
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }

  Laurent operator*(const Laurent& o) const {
    // An exact zero annihilates regardless of the other factor's precision.
    if ((is_exact() && coeffs_.empty()) || (o.is_exact() && o.coeffs_.empty()))
      return Laurent(zero_);
    Laurent r(zero_);
    r.prec_ = kExact;
    if (prec_ != kExact) r.prec_ = clamp_add(prec_, o.low_or(o.prec_));
    if (o.prec_ != kExact)
      r.prec_ = std::min(r.prec_, clamp_add(o.prec_, low_or(prec_)));
    if (coeffs_.empty() || o.coeffs_.empty()) {
      r.normalize();
      return r;
    }
    int lo = low_ + o.low_;
    int hi = std::min(r.prec_, top() + o.top() - 1);
    if (lo < hi) {
      r.low_ = lo;
      r.coeffs_.assign(size_t(hi - lo), zero_);
      for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
          int n = low_ + int(i) + o.low_ + int(j);
          if (n >= hi) break;
          r.coeffs_[size_t(n - lo)] += coeffs_[i] * o.coeffs_[j];
        }
      }
    }
    r.normalize();
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  Laurent scale(const R& c) const {
    Laurent r = *this;
    for (R& v : r.coeffs_) v = v * c;
    r.normalize();
    return r;
  }

  Laurent shift(int n) const {
    Laurent r = *this;
    r.low_ += n;
    if (r.prec_ != kExact) r.prec_ += n;
    return r;
  }

  /// Forgets everything at order >= p.
  Laurent truncate(int p) const {
    Laurent r = *this;
    r.prec_ = std::min(prec_, p);
    while (!r.coeffs_.empty() && r.top() > r.prec_) r.coeffs_.pop_back();
    r.normalize();
    return r;
  }

  Laurent pow(unsigned e) const {
    Laurent r = monomial(zero_.one(), 0);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  /// Multiplicative inverse up to order prec (exclusive).  Requires the lead
  /// coefficient to be the ring identity: every expansion this library runs
  /// starts from a unit-normalized series, and keeping the requirement
  /// strict lets the engine work over coefficient rings without division.
  Laurent inverse(int prec) const {
    if (coeffs_.empty())
      throw Error("Laurent: inverse of a series with no known nonzero term");
    if (!coeffs_.front().is_one())
      throw Error("Laurent: inverse requires lead coefficient one");
    int m = low_;
    if (is_exact() && coeffs_.size() == 1) return monomial(zero_.one(), -m);
    int eff = prec;
    if (prec_ != kExact) eff = std::min(eff, prec_ - 2 * m);
    if (eff <= -m) throw Error("Laurent: insufficient precision for inverse");
    int rel = eff + m;  // precision of (1+v)^{-1} relative to t^{-m}
    Laurent v = shift(-m).truncate(rel);
    v.coeffs_.erase(v.coeffs_.begin());  // drop the leading 1
    ++v.low_;
    v.normalize();
    Laurent acc = monomial(zero_.one(), 0);
    Laurent term = acc;
    while (true) {
      term = (term * v).truncate(rel);
      if (term.coeffs_.empty()) break;
      acc += term;
    }
    acc.prec_ = rel;
    return acc.shift(-m);
  }

  /// Exact square root in characteristic 2: halves exponents and extracts
  /// coefficient roots.  Absent when an odd-order coefficient is nonzero or
  /// a coefficient has no root in R.
  std::optional<Laurent> sqrt() const {
    Laurent r(zero_);
    if (!coeffs_.empty()) {
      if (low_ % 2 != 0) return std::nullopt;
      r.low_ = low_ / 2;
      for (int n = low_; n < top(); ++n) {
        const R& c = coeff(n);
        if (n % 2 != 0) {
          if (!c.is_zero()) return std::nullopt;
          continue;
        }
        auto root = try_sqrt(c);
        if (!root) return std::nullopt;
        r.coeffs_.push_back(*root);
      }
    }
    if (prec_ != kExact)
      r.prec_ = prec_ >= 0 ? (prec_ + 1) / 2 : prec_ / 2;
    r.normalize();
    return r;
  }

  bool operator==(const Laurent& o) const {
    return low_ == o.low_ && prec_ == o.prec_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  std::string str() const {
    std::string s;
    for (int n = low_; n < top(); ++n) {
      const R& c = coeff(n);
      if (c.is_zero()) continue;
      if (!s.empty()) s += "+";
      std::string cs = c.str();
      bool wrap = cs.find('+') != std::string::npos ||
                  cs.find('*') != std::string::npos ||
                  cs.find('/') != std::string::npos;
      if (n == 0) {
        s += wrap ? "(" + cs + ")" : cs;
        continue;
      }
      if (!c.is_one()) s += (wrap ? "(" + cs + ")" : cs) + "*";
      s += n == 1 ? "t" : "t^" + std::to_string(n);
    }
    if (s.empty()) s = "0";
    if (prec_ != kExact) s += " + O(t^" + std::to_string(prec_) + ")";
    return s;
  }

 private:
  int top() const { return low_ + int(coeffs_.size()); }  // one past stored
  int low_or(int fallback) const { return coeffs_.empty() ? fallback : low_; }

  static int clamp_add(int a, int b) {
    long s = long(a) + long(b);
    if (s >= long(kExact)) return kExact - 1;
    return int(s);
  }

  static void accumulate(Laurent& r, const Laurent& s, int lo, int hi) {
    for (size_t i = 0; i < s.coeffs_.size(); ++i) {
      int n = s.low_ + int(i);
      if (n >= hi) break;
      r.coeffs_[size_t(n - lo)] += s.coeffs_[i];
    }
  }

  void normalize() {
    while (!coeffs_.empty() && coeffs_.front().is_zero()) {
      coeffs_.erase(coeffs_.begin());
      ++low_;
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    if (coeffs_.empty()) low_ = prec_ == kExact ? 0 : prec_;
  }

  R zero_;
  int low_ = 0;
  std::vector<R> coeffs_;
  int prec_ = kExact;
};

}  // namespace qef
