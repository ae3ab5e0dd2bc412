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
#include "qef/gf2k.hpp"

#include <map>
#include <mutex>

namespace qef {

namespace {

// Smallest-integer irreducible of degree k over GF(2) with nonzero constant
// term, bit i = coefficient of x^i.  Re-derived by a sieve in the unit tests.
constexpr uint32_t kModulus[17] = {
    0,      3,     7,     11,    19,    37,    67,    131,   283,
    515,    1033,  2053,  4105,  8219,  16417, 32771, 65579,
};

void check_k(int k) {
  if (k < 1 || k > 16) throw Error("GF(2^k): k out of range [1,16]");
}

// Carry-less multiply of two residues followed by reduction.
uint32_t clmul_reduce(uint32_t a, uint32_t b, int k) {
  uint32_t prod = 0;
  while (b) {
    if (b & 1u) prod ^= a;
    b >>= 1;
    a <<= 1;
  }
  const uint32_t mod = kModulus[k];
  for (int d = 30; d >= k; --d) {
    if (prod & (1u << d)) prod ^= mod << (d - k);
  }
  return prod;
}

}  // namespace

uint32_t gf2k_modulus(int k) {
  check_k(k);
  return kModulus[k];
}

Gf2k::Gf2k(int k, uint32_t bits) {
  check_k(k);
  if (bits >> k) throw Error("GF(2^k): bits out of range for field");
  k_ = static_cast<uint16_t>(k);
  v_ = static_cast<uint16_t>(bits);
}

Gf2k Gf2k::gen(int k) {
  check_k(k);
  // For k = 1 the modulus is x + 1, so the class of x is 1.
  return k == 1 ? Gf2k(1, 1) : Gf2k(k, 2);
}

Gf2k Gf2k::operator+(const Gf2k& o) const {
  if (k_ != o.k_) throw Error("GF(2^k): mixed fields in +");
  return Gf2k(k_, v_ ^ o.v_);
}

Gf2k Gf2k::operator*(const Gf2k& o) const {
  if (k_ != o.k_) throw Error("GF(2^k): mixed fields in *");
  return Gf2k(k_, clmul_reduce(v_, o.v_, k_));
}

Gf2k Gf2k::operator/(const Gf2k& o) const { return *this * o.inv(); }

Gf2k Gf2k::pow(uint64_t e) const {
  Gf2k base = *this;
  Gf2k acc = one();
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Gf2k Gf2k::inv() const {
  if (is_zero()) throw Error("GF(2^k): division by zero");
  // x^(2^k - 2) = x^-1 in the multiplicative group.
  return pow((uint64_t(1) << k_) - 2);
}

Gf2k Gf2k::sqrt() const {
  Gf2k r = *this;
  for (int i = 0; i + 1 < k_; ++i) r = r * r;
  return r;
}

int Gf2k::trace() const {
  Gf2k acc = zero();
  Gf2k p = *this;
  for (int i = 0; i < k_; ++i) {
    acc += p;
    p = p * p;
  }
  if (!acc.is_zero() && !acc.is_one())
    throw Error("GF(2^k): trace escaped GF(2)");
  return acc.is_one() ? 1 : 0;
}

std::optional<Gf2k> Gf2k::solve_artin_schreier_const() const {
  if (trace() != 0) return std::nullopt;
  for (uint32_t s = 0; s < (1u << k_); ++s) {
    Gf2k cand(k_, s);
    if (cand * cand + cand == *this) return cand;
  }
  throw Error("GF(2^k): trace-zero element without s^2+s preimage");
}

Gf2k gf2k_embedding_root(int k, int m) {
  check_k(k);
  check_k(m);
  if (m % k != 0) throw Error("GF(2^k): no embedding, k does not divide m");
  static std::map<std::pair<int, int>, Gf2k> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({k, m});
  if (it != cache.end()) return it->second;
  const uint32_t mod = kModulus[k];
  for (uint64_t r = 0; r < (uint64_t(1) << m); ++r) {
    Gf2k x(m, static_cast<uint32_t>(r));
    // Evaluate the degree-k modulus at x inside GF(2^m).
    Gf2k acc = Gf2k::zero(m);
    Gf2k p = Gf2k::one(m);
    for (int i = 0; i <= k; ++i) {
      if (mod & (1u << i)) acc += p;
      p = p * x;
    }
    if (acc.is_zero()) {
      cache.emplace(std::make_pair(k, m), x);
      return x;
    }
  }
  throw Error("GF(2^k): embedding root not found");
}

Gf2k Gf2k::embed_into(int m) const {
  if (m == k_) return *this;
  Gf2k root = gf2k_embedding_root(k_, m);
  Gf2k acc = Gf2k::zero(m);
  Gf2k p = Gf2k::one(m);
  for (int i = 0; i < k_; ++i) {
    if (v_ & (1u << i)) acc += p;
    p = p * root;
  }
  return acc;
}

std::vector<Gf2k> gf2k_elements(int k) {
  check_k(k);
  std::vector<Gf2k> out;
  out.reserve(size_t(1) << k);
  for (uint32_t v = 0; v < (1u << k); ++v) out.emplace_back(k, v);
  return out;
}

std::string Gf2k::str() const {
  if (v_ == 0) return "0";
  std::string s;
  for (int i = k_ - 1; i >= 0; --i) {
    if (!(v_ & (1u << i))) continue;
    if (!s.empty()) s += "+";
    if (i == 0)
      s += "1";
    else if (i == 1)
      s += "w";
    else
      s += "w^" + std::to_string(i);
  }
  return s;
}

}  // namespace qef
