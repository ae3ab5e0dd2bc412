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
#include "qef/mpoly.hpp"

#include <algorithm>

namespace qef {

MCtx::MCtx(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty() || names_.size() > 16)
    throw Error("MCtx: between 1 and 16 variables required");
  for (size_t i = 0; i < names_.size(); ++i)
    for (size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw Error("MCtx: duplicate variable name");
}

int MCtx::index(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  throw Error("MCtx: unknown variable " + name);
}

int MKey::lane(int i) const {
  const uint64_t word = i < 8 ? hi : lo;
  const int shift = 8 * (7 - (i & 7));
  return static_cast<int>((word >> shift) & 0xff);
}

MKey MKey::with_lane(int i, int v) const {
  if (v < 0 || v > 255) throw Error("MKey: exponent out of range");
  MKey r = *this;
  uint64_t& word = i < 8 ? r.hi : r.lo;
  const int shift = 8 * (7 - (i & 7));
  word = (word & ~(uint64_t(0xff) << shift)) | (uint64_t(v) << shift);
  return r;
}

MKey MKey::plus(const MKey& o) const {
  MKey r;
  for (int i = 0; i < 16; ++i) {
    const int s = lane(i) + o.lane(i);
    if (s > 255) throw Error("MKey: exponent overflow in product");
    r = r.with_lane(i, s);
  }
  return r;
}

MKey MKey::minus(const MKey& o) const {
  MKey r;
  for (int i = 0; i < 16; ++i) {
    const int d = lane(i) - o.lane(i);
    if (d < 0) throw Error("MKey: non-divisible monomial difference");
    r = r.with_lane(i, d);
  }
  return r;
}

bool MKey::divisible_by(const MKey& o) const {
  for (int i = 0; i < 16; ++i)
    if (lane(i) < o.lane(i)) return false;
  return true;
}

int MKey::total_degree() const {
  int d = 0;
  for (int i = 0; i < 16; ++i) d += lane(i);
  return d;
}

namespace {

void require_same_ctx(const MPoly& a, const MPoly& b) {
  if (a.ctx() != b.ctx()) throw Error("MPoly: mixed variable contexts");
}

}  // namespace

void MPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const MKey& a, const MKey& b) { return b < a; });
  // Equal monomials cancel in pairs over GF(2).
  std::vector<MKey> out;
  out.reserve(terms_.size());
  size_t i = 0;
  while (i < terms_.size()) {
    size_t j = i;
    while (j < terms_.size() && terms_[j] == terms_[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(terms_[i]);
    i = j;
  }
  terms_ = std::move(out);
}

MPoly MPoly::one(MCtxPtr ctx) {
  MPoly p(std::move(ctx));
  p.terms_.push_back(MKey{});
  return p;
}

MPoly MPoly::var(MCtxPtr ctx, int i) {
  if (!ctx || i < 0 || i >= ctx->nvars()) throw Error("MPoly: bad variable");
  MPoly p(ctx);
  p.terms_.push_back(MKey{}.with_lane(i, 1));
  return p;
}

MPoly MPoly::var(MCtxPtr ctx, const std::string& name) {
  if (!ctx) throw Error("MPoly: null context");
  const int i = ctx->index(name);
  return var(std::move(ctx), i);
}

MPoly MPoly::monomial(MCtxPtr ctx, const MKey& key) {
  MPoly p(std::move(ctx));
  p.terms_.push_back(key);
  return p;
}

bool MPoly::is_one() const {
  return terms_.size() == 1 && terms_[0] == MKey{};
}

MKey MPoly::leading() const {
  if (terms_.empty()) throw Error("MPoly: leading term of zero");
  return terms_.front();
}

int MPoly::total_degree() const {
  int d = 0;
  for (const MKey& t : terms_) d = std::max(d, t.total_degree());
  return d;
}

int MPoly::degree_in(int var) const {
  int d = 0;
  for (const MKey& t : terms_) d = std::max(d, t.lane(var));
  return d;
}

MPoly MPoly::operator+(const MPoly& o) const {
  require_same_ctx(*this, o);
  MPoly r(ctx_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  // Merge two descending lists, cancelling equal monomials.
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i] == o.terms_[j]) {
      ++i;
      ++j;
    } else if (o.terms_[j] < terms_[i]) {
      r.terms_.push_back(terms_[i++]);
    } else {
      r.terms_.push_back(o.terms_[j++]);
    }
  }
  r.terms_.insert(r.terms_.end(), terms_.begin() + long(i), terms_.end());
  r.terms_.insert(r.terms_.end(), o.terms_.begin() + long(j), o.terms_.end());
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  require_same_ctx(*this, o);
  MPoly r(ctx_);
  if (is_zero() || o.is_zero()) return r;
  r.terms_.reserve(terms_.size() * o.terms_.size());
  for (const MKey& a : terms_)
    for (const MKey& b : o.terms_) r.terms_.push_back(a.plus(b));
  r.normalize();
  return r;
}

bool MPoly::operator==(const MPoly& o) const {
  require_same_ctx(*this, o);
  return terms_ == o.terms_;
}

MPoly MPoly::pow(uint64_t e) const {
  MPoly base = *this, acc = MPoly::one(ctx_);
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base.square();
  }
  return acc;
}

MPoly MPoly::square() const {
  MPoly r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const MKey& t : terms_) r.terms_.push_back(t.plus(t));
  // Squaring preserves the monomial order, no re-sort needed.
  return r;
}

std::optional<MPoly> MPoly::sqrt() const {
  MPoly r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const MKey& t : terms_) {
    MKey h;
    for (int i = 0; i < 16; ++i) {
      const int e = t.lane(i);
      if (e % 2 != 0) return std::nullopt;
      h = h.with_lane(i, e / 2);
    }
    r.terms_.push_back(h);
  }
  return r;
}

MPoly MPoly::derivative(int var) const {
  MPoly r(ctx_);
  for (const MKey& t : terms_) {
    const int e = t.lane(var);
    if (e % 2 == 1) r.terms_.push_back(t.with_lane(var, e - 1));
  }
  r.normalize();
  return r;
}

MPoly MPoly::derivative(const std::string& var) const {
  return derivative(ctx_->index(var));
}

MPoly MPoly::substitute(const std::map<int, MPoly>& subs) const {
  MPoly acc(ctx_);
  for (const MKey& t : terms_) {
    MPoly term = MPoly::one(ctx_);
    MKey untouched;
    for (int i = 0; i < 16; ++i) {
      const int e = t.lane(i);
      if (e == 0) continue;
      auto it = subs.find(i);
      if (it == subs.end()) {
        untouched = untouched.with_lane(i, e);
      } else {
        require_same_ctx(*this, it->second);
        term *= it->second.pow(uint64_t(e));
      }
    }
    acc += term * MPoly::monomial(ctx_, untouched);
  }
  return acc;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const MKey& t : terms_) {
    if (!s.empty()) s += "+";
    std::string m;
    for (int i = 0; i < ctx_->nvars(); ++i) {
      const int e = t.lane(i);
      if (e == 0) continue;
      if (!m.empty()) m += "*";
      m += ctx_->name(i);
      if (e > 1) m += "^" + std::to_string(e);
    }
    s += m.empty() ? "1" : m;
  }
  return s;
}

MDivision mpoly_divide(const MPoly& target, const std::vector<MPoly>& divisors) {
  if (divisors.empty()) throw Error("mpoly_divide: no divisors");
  for (const MPoly& g : divisors) {
    if (g.ctx() != target.ctx()) throw Error("mpoly_divide: mixed contexts");
    if (g.is_zero()) throw Error("mpoly_divide: zero divisor");
  }
  MDivision out;
  out.quotients.assign(divisors.size(), MPoly(target.ctx()));
  out.remainder = MPoly(target.ctx());
  MPoly p = target;
  while (!p.is_zero()) {
    const MKey lt = p.leading();
    bool reduced = false;
    for (size_t i = 0; i < divisors.size(); ++i) {
      const MKey glt = divisors[i].leading();
      if (!lt.divisible_by(glt)) continue;
      const MPoly q = MPoly::monomial(target.ctx(), lt.minus(glt));
      out.quotients[i] += q;
      p += q * divisors[i];
      reduced = true;
      break;
    }
    if (!reduced) {
      out.remainder += MPoly::monomial(target.ctx(), lt);
      p += MPoly::monomial(target.ctx(), lt);
    }
  }
  return out;
}

std::optional<std::vector<MPoly>> mpoly_ideal_member(
    const MPoly& target, const std::vector<MPoly>& gens) {
  MDivision div = mpoly_divide(target, gens);
  if (!div.remainder.is_zero()) return std::nullopt;
  // Re-verify the certificate by expansion.
  MPoly recon(target.ctx());
  for (size_t i = 0; i < gens.size(); ++i) recon += div.quotients[i] * gens[i];
  if (recon != target)
    throw Error("mpoly_ideal_member: certificate failed re-verification");
  return div.quotients;
}

}  // namespace qef
