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

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qef/gf2k.hpp"
#include "qef/poly.hpp"

namespace qef {

/// Sparse polynomial in the three coordinates x, y, z over a
/// characteristic-2 field K.  Not necessarily homogeneous: affine charts and
/// blowup transforms live here too.  Keys are exponent triples in lex order.
template <class K>
class TriPoly {
 public:
  using Key = std::array<int, 3>;

  explicit TriPoly(K zero) : zero_(std::move(zero)) {}

  static TriPoly monomial(const K& c, int ex, int ey, int ez) {
    TriPoly p(c.zero());
    if (!c.is_zero()) p.terms_.emplace(Key{ex, ey, ez}, c);
    return p;
  }
  static TriPoly constant(const K& c) { return monomial(c, 0, 0, 0); }
  /// The coordinate with the given index (0 = x, 1 = y, 2 = z).
  static TriPoly coordinate(const K& zero, int i) {
    return monomial(zero.one(), i == 0 ? 1 : 0, i == 1 ? 1 : 0,
                    i == 2 ? 1 : 0);
  }

  const K& ring_zero() const { return zero_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, K>& terms() const { return terms_; }

  const K& coeff(int ex, int ey, int ez) const {
    auto it = terms_.find(Key{ex, ey, ez});
    return it == terms_.end() ? zero_ : it->second;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k[0] + k[1] + k[2]);
    return d;
  }
  int min_total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) {
      int s = k[0] + k[1] + k[2];
      if (d < 0 || s < d) d = s;
    }
    return d;
  }
  bool is_homogeneous() const {
    return terms_.empty() || total_degree() == min_total_degree();
  }
  int degree_in(int var) const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k[size_t(var)]);
    return d;
  }

  TriPoly operator+(const TriPoly& o) const {
    TriPoly r = *this;
    for (const auto& [k, c] : o.terms_) {
      auto it = r.terms_.find(k);
      if (it == r.terms_.end()) {
        r.terms_.emplace(k, c);
      } else {
        it->second += c;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
    return r;
  }
  TriPoly& operator+=(const TriPoly& o) { return *this = *this + o; }

  TriPoly operator*(const TriPoly& o) const {
    TriPoly r(zero_);
    for (const auto& [ka, ca] : terms_)
      for (const auto& [kb, cb] : o.terms_) {
        Key k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]};
        K prod = ca * cb;
        auto it = r.terms_.find(k);
        if (it == r.terms_.end()) {
          if (!prod.is_zero()) r.terms_.emplace(k, std::move(prod));
        } else {
          it->second += prod;
          if (it->second.is_zero()) r.terms_.erase(it);
        }
      }
    return r;
  }
  TriPoly& operator*=(const TriPoly& o) { return *this = *this * o; }

  TriPoly scale(const K& c) const {
    TriPoly r(zero_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) {
      K prod = v * c;
      if (!prod.is_zero()) r.terms_.emplace(k, std::move(prod));
    }
    return r;
  }

  TriPoly pow(unsigned e) const {
    TriPoly r = constant(zero_.one());
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  K eval(const K& x, const K& y, const K& z) const {
    K acc = zero_;
    for (const auto& [k, c] : terms_)
      acc += c * power(x, k[0]) * power(y, k[1]) * power(z, k[2]);
    return acc;
  }

  /// Formal partial derivative in characteristic 2: a term survives iff its
  /// exponent in the variable is odd.
  TriPoly derivative(int var) const {
    TriPoly r(zero_);
    for (const auto& [k, c] : terms_) {
      if (k[size_t(var)] % 2 == 0) continue;
      Key kk = k;
      --kk[size_t(var)];
      r.terms_.emplace(kk, c);
    }
    return r;
  }

  /// Simultaneous substitution of the three coordinates.
  TriPoly compose(const std::array<TriPoly, 3>& vals) const {
    TriPoly r(zero_);
    for (const auto& [k, c] : terms_) {
      TriPoly term = constant(c);
      for (int v = 0; v < 3; ++v)
        for (int i = 0; i < k[size_t(v)]; ++i) term *= vals[size_t(v)];
      r += term;
    }
    return r;
  }

  /// Exact quotient when the divisor divides this polynomial; nullopt
  /// otherwise.  Greedy leading-term elimination in lex order is a complete
  /// divisibility test for a single divisor.
  std::optional<TriPoly> divide_exact(const TriPoly& d) const {
    if (d.is_zero()) throw Error("TriPoly: division by zero");
    TriPoly r = *this, q(zero_);
    const auto& [kd, cd] = *d.terms_.rbegin();
    while (!r.is_zero()) {
      const auto& [kr, cr] = *r.terms_.rbegin();
      Key kq{kr[0] - kd[0], kr[1] - kd[1], kr[2] - kd[2]};
      if (kq[0] < 0 || kq[1] < 0 || kq[2] < 0) return std::nullopt;
      TriPoly m = monomial(cr / cd, kq[0], kq[1], kq[2]);
      q += m;
      r += d * m;
    }
    return q;
  }

  bool operator==(const TriPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const TriPoly& o) const { return !(*this == o); }

  std::string str() const {
    static const char* names[3] = {"x", "y", "z"};
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [k, c] = *it;
      if (!s.empty()) s += "+";
      std::string cs = c.str();
      bool wrap = cs.find('+') != std::string::npos ||
                  cs.find('*') != std::string::npos ||
                  cs.find('/') != std::string::npos;
      std::string mono;
      for (int v = 0; v < 3; ++v) {
        if (k[size_t(v)] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[v];
        if (k[size_t(v)] > 1) mono += "^" + std::to_string(k[size_t(v)]);
      }
      if (mono.empty()) {
        s += wrap ? "(" + cs + ")" : cs;
      } else {
        if (!c.is_one()) s += (wrap ? "(" + cs + ")" : cs) + "*";
        s += mono;
      }
    }
    return s.empty() ? "0" : s;
  }

 private:
  static K power(const K& b, int e) {
    K acc = b.one();
    for (int i = 0; i < e; ++i) acc = acc * b;
    return acc;
  }

  K zero_;
  std::map<Key, K> terms_;
};

/// Point of the projective plane over K.  The stored representative is
/// canonical: the last nonzero coordinate is scaled to 1, so equality and
/// ordering are plain structural comparisons.
template <class K>
class ProjPoint {
 public:
  ProjPoint(K x, K y, K z) : c_{std::move(x), std::move(y), std::move(z)} {
    int i = 2;
    while (i >= 0 && c_[size_t(i)].is_zero()) --i;
    if (i < 0) throw Error("ProjPoint: all coordinates zero");
    K s = c_[size_t(i)];
    for (auto& v : c_) v = v / s;
  }

  const K& x() const { return c_[0]; }
  const K& y() const { return c_[1]; }
  const K& z() const { return c_[2]; }
  const K& coord(int i) const { return c_[size_t(i)]; }

  bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  bool operator<(const ProjPoint& o) const { return c_ < o.c_; }

  std::string str() const {
    return "(" + c_[0].str() + ":" + c_[1].str() + ":" + c_[2].str() + ")";
  }

 private:
  std::array<K, 3> c_;
};

/// Line a*x + b*y + c*z = 0, canonicalized like a point of the dual plane.
template <class K>
class Line {
 public:
  Line(K a, K b, K c) : c_{std::move(a), std::move(b), std::move(c)} {
    int i = 2;
    while (i >= 0 && c_[size_t(i)].is_zero()) --i;
    if (i < 0) throw Error("Line: all coefficients zero");
    K s = c_[size_t(i)];
    for (auto& v : c_) v = v / s;
  }

  const K& a() const { return c_[0]; }
  const K& b() const { return c_[1]; }
  const K& c() const { return c_[2]; }

  K eval(const ProjPoint<K>& p) const {
    return c_[0] * p.x() + c_[1] * p.y() + c_[2] * p.z();
  }
  bool contains(const ProjPoint<K>& p) const { return eval(p).is_zero(); }

  bool operator==(const Line& o) const { return c_ == o.c_; }
  bool operator!=(const Line& o) const { return !(*this == o); }

  /// Two points spanning the line, picked by a fixed rule.
  std::pair<ProjPoint<K>, ProjPoint<K>> span() const {
    const K &a = c_[0], &b = c_[1], &c = c_[2];
    K zero = a.zero();
    if (!a.is_zero())
      return {ProjPoint<K>(b, a, zero), ProjPoint<K>(c, zero, a)};
    if (!b.is_zero())
      return {ProjPoint<K>(b, zero, zero), ProjPoint<K>(zero, c, b)};
    return {ProjPoint<K>(c, zero, zero), ProjPoint<K>(zero, c, zero)};
  }

  std::string str() const {
    return "[" + c_[0].str() + ":" + c_[1].str() + ":" + c_[2].str() + "]";
  }

 private:
  std::array<K, 3> c_;
};

/// Line through two distinct points (the cross product; self-inverse signs
/// in characteristic 2).
template <class K>
Line<K> line_through(const ProjPoint<K>& p, const ProjPoint<K>& q) {
  if (p == q) throw Error("line_through: points coincide");
  return Line<K>(p.y() * q.z() + p.z() * q.y(),
                 p.z() * q.x() + p.x() * q.z(),
                 p.x() * q.y() + p.y() * q.x());
}

/// Pads every term with the chosen variable up to the given total degree.
/// The variable must not occur in the input.
template <class K>
TriPoly<K> homogenize(const TriPoly<K>& f, int var, int degree) {
  TriPoly<K> r(f.ring_zero());
  for (const auto& [k, c] : f.terms()) {
    if (k[size_t(var)] != 0)
      throw Error("homogenize: variable already present");
    const int s = k[0] + k[1] + k[2];
    if (s > degree) throw Error("homogenize: degree too small");
    typename TriPoly<K>::Key kk = k;
    kk[size_t(var)] += degree - s;
    r += TriPoly<K>::monomial(c, kk[0], kk[1], kk[2]);
  }
  return r;
}

/// Plane projective curve: a nonzero homogeneous form with its degree.
template <class K>
class PlaneCurve {
 public:
  explicit PlaneCurve(TriPoly<K> form) : form_(std::move(form)) {
    if (form_.is_zero()) throw Error("PlaneCurve: zero form");
    if (!form_.is_homogeneous())
      throw Error("PlaneCurve: form is not homogeneous");
    degree_ = form_.total_degree();
  }

  const TriPoly<K>& form() const { return form_; }
  int degree() const { return degree_; }

  K eval(const ProjPoint<K>& p) const {
    return form_.eval(p.x(), p.y(), p.z());
  }
  bool contains(const ProjPoint<K>& p) const { return eval(p).is_zero(); }

  bool operator==(const PlaneCurve& o) const { return form_ == o.form_; }
  std::string str() const { return form_.str(); }

 private:
  TriPoly<K> form_;
  int degree_;
};

/// Order of vanishing of the form at P: move P to the affine origin in the
/// chart of its last nonzero coordinate, then take the lowest total degree.
template <class K>
int multiplicity_at(const PlaneCurve<K>& c, const ProjPoint<K>& p) {
  const K zero = c.form().ring_zero();
  int chart = 2;
  while (p.coord(chart).is_zero()) --chart;
  std::array<TriPoly<K>, 3> vals{TriPoly<K>(zero), TriPoly<K>(zero),
                                 TriPoly<K>(zero)};
  for (int v = 0; v < 3; ++v)
    vals[size_t(v)] =
        v == chart ? TriPoly<K>::constant(zero.one())
                   : TriPoly<K>::coordinate(zero, v) +
                         TriPoly<K>::constant(p.coord(v));
  return c.form().compose(vals).min_total_degree();
}

/// Jacobian criterion.  On a point of the curve, the three partials vanish
/// simultaneously exactly when the multiplicity is at least two.
template <class K>
bool is_singular_point(const PlaneCurve<K>& c, const ProjPoint<K>& p) {
  if (!c.contains(p)) throw Error("is_singular_point: point not on curve");
  for (int v = 0; v < 3; ++v)
    if (!c.form().derivative(v).eval(p.x(), p.y(), p.z()).is_zero())
      return false;
  return true;
}

/// Gradient line at a smooth point.
template <class K>
Line<K> tangent_line(const PlaneCurve<K>& c, const ProjPoint<K>& p) {
  if (!c.contains(p)) throw Error("tangent_line: point not on curve");
  K gx = c.form().derivative(0).eval(p.x(), p.y(), p.z());
  K gy = c.form().derivative(1).eval(p.x(), p.y(), p.z());
  K gz = c.form().derivative(2).eval(p.x(), p.y(), p.z());
  if (gx.is_zero() && gy.is_zero() && gz.is_zero())
    throw Error("tangent_line: singular point");
  return Line<K>(gx, gy, gz);
}

/// Restriction of the form to the line spanned by s0, s1: the binary form
/// F(u*s0 + v*s1), returned as coefficients of u^i v^(deg-i), i = 0..deg.
template <class K>
std::vector<K> restrict_to_line(const PlaneCurve<K>& c,
                                const ProjPoint<K>& s0,
                                const ProjPoint<K>& s1) {
  const K zero = c.form().ring_zero();
  TriPoly<K> u = TriPoly<K>::coordinate(zero, 0);
  TriPoly<K> v = TriPoly<K>::coordinate(zero, 1);
  std::array<TriPoly<K>, 3> vals{TriPoly<K>(zero), TriPoly<K>(zero),
                                 TriPoly<K>(zero)};
  for (int i = 0; i < 3; ++i)
    vals[size_t(i)] = u.scale(s0.coord(i)) + v.scale(s1.coord(i));
  TriPoly<K> b = c.form().compose(vals);
  std::vector<K> out(size_t(c.degree() + 1), zero);
  for (const auto& [k, cf] : b.terms()) out[size_t(k[0])] = cf;
  return out;
}

/// --- GF(2^k)-specific scans (definitions in plane_curve.cpp) ---

/// Same curve with coefficients embedded into GF(2^m); requires k | m.
PlaneCurve<Gf2k> embed_curve(const PlaneCurve<Gf2k>& c, int m);
ProjPoint<Gf2k> embed_point(const ProjPoint<Gf2k>& p, int m);

/// All GF(2^k)-rational points, scanning the q^2 + q + 1 canonical
/// representatives.
std::vector<ProjPoint<Gf2k>> enumerate_points(const PlaneCurve<Gf2k>& c);

struct ProfileEntry {
  ProjPoint<Gf2k> point;  // coordinates in GF(2^(k*j)) for some j <= 4
  int multiplicity;
};

/// Intersection divisor of the curve with a line: points over extensions of
/// degree up to 4 with multiplicities summing to deg C.  Throws if the line
/// is a component.
std::vector<ProfileEntry> line_intersection_profile(const PlaneCurve<Gf2k>& c,
                                                    const Line<Gf2k>& l);

/// Roots of the univariate polynomial over extension fields GF(2^(k*j)),
/// 1 <= j <= max_ext, each root reported once over its minimal field with
/// its multiplicity.
std::vector<std::pair<Gf2k, int>> poly_roots(const Poly& p, int max_ext);

/// Whether some line over GF(2^(k*j)), j <= max_ext, divides the form.
bool curve_has_line_factor(const PlaneCurve<Gf2k>& c, int max_ext);

/// Whether some conic over GF(2^(k*j)), j <= max_ext, divides the quartic.
/// Requires that no line divides (run curve_has_line_factor first).
bool curve_has_conic_factor(const PlaneCurve<Gf2k>& c, int max_ext);

/// Integrality test for quartic forms.  A reducible quartic always has a
/// linear or quadratic factor over an extension of degree at most 2, so the
/// two scans at max_ext = 2 decide the question; complete for k <= 4.
bool is_integral_quartic(const PlaneCurve<Gf2k>& c);

}  // namespace qef
