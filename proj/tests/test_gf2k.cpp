#include "doctest.h"
#include "qef/gf2k.hpp"

#include <cstdint>
#include <set>

using qef::Gf2k;

namespace {

// Independent sieve: smallest irreducible of degree k over GF(2) with
// nonzero constant term, trial-dividing by everything of degree <= k/2.
uint32_t sieve_modulus(int k) {
  auto divides = [](uint32_t d, int dd, uint32_t p, int pd) {
    while (pd >= dd) {
      p ^= d << (pd - dd);
      pd = 31;
      while (pd >= 0 && !(p & (1u << pd))) --pd;
    }
    return p == 0;
  };
  for (uint32_t cand = (1u << k) | 1u; cand < (2u << k); cand += 2) {
    bool irred = true;
    for (int dd = 1; irred && dd <= k / 2; ++dd)
      for (uint32_t d = 1u << dd; irred && d < (2u << dd); ++d)
        if (divides(d, dd, cand, k)) irred = false;
    if (irred) return cand;
  }
  return 0;
}

}  // namespace

TEST_SUITE("gf2k") {

TEST_CASE("committed moduli match the sieve for every k") {
  for (int k = 1; k <= 16; ++k) CHECK(qef::gf2k_modulus(k) == sieve_modulus(k));
}

TEST_CASE("field axioms hold exhaustively in GF(8)") {
  auto els = qef::gf2k_elements(3);
  for (const auto& a : els) {
    CHECK(a + a == Gf2k::zero(3));
    CHECK(a * Gf2k::one(3) == a);
    if (!a.is_zero()) CHECK(a * a.inv() == Gf2k::one(3));
    for (const auto& b : els) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      for (const auto& c : els) {
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
      }
    }
  }
}

TEST_CASE("squaring is a bijection and sqrt inverts it") {
  for (int k : {1, 2, 3, 4, 5, 8, 11, 16}) {
    std::set<uint32_t> images;
    const uint64_t n = uint64_t(1) << k;
    for (uint64_t v = 0; v < n; ++v) {
      Gf2k a(k, uint32_t(v));
      Gf2k sq = a * a;
      images.insert(sq.bits());
      CHECK(sq.sqrt() == a);
      CHECK(a.sqrt() * a.sqrt() == a);
    }
    CHECK(images.size() == n);
  }
}

TEST_CASE("sqrt in GF(4) sends the generator to its square") {
  Gf2k w = Gf2k::gen(2);
  CHECK(w.sqrt() == w * w);
  CHECK((w * w).sqrt() * (w * w).sqrt() == w * w);
}

TEST_CASE("trace splits the field in half and gates s^2+s=c") {
  for (int k : {2, 3, 4, 6}) {
    int zero_trace = 0;
    for (const auto& c : qef::gf2k_elements(k)) {
      auto s = c.solve_artin_schreier_const();
      if (c.trace() == 0) {
        ++zero_trace;
        REQUIRE(s.has_value());
        CHECK(*s * *s + *s == c);
        // The complementary solution also works.
        Gf2k s2 = *s + Gf2k::one(k);
        CHECK(s2 * s2 + s2 == c);
        CHECK(s->bits() < s2.bits());
      } else {
        CHECK(!s.has_value());
      }
    }
    CHECK(zero_trace == (1 << (k - 1)));
  }
}

TEST_CASE("exponentiation agrees with iterated product") {
  Gf2k w = Gf2k::gen(4);
  Gf2k acc = Gf2k::one(4);
  for (int e = 0; e < 40; ++e) {
    CHECK(w.pow(uint64_t(e)) == acc);
    acc *= w;
  }
  // Multiplicative group order.
  CHECK(w.pow(15) == Gf2k::one(4));
}

TEST_CASE("embeddings are field homomorphisms with stable images") {
  for (auto [k, m] : {std::pair{2, 4}, {2, 8}, {3, 6}, {4, 8}, {2, 6}}) {
    auto els = qef::gf2k_elements(k);
    for (const auto& a : els) {
      for (const auto& b : els) {
        CHECK((a + b).embed_into(m) == a.embed_into(m) + b.embed_into(m));
        CHECK((a * b).embed_into(m) == a.embed_into(m) * b.embed_into(m));
      }
      // The image satisfies the same minimal relation: Frobenius k times
      // fixes it.
      Gf2k img = a.embed_into(m);
      Gf2k frob = img;
      for (int i = 0; i < k; ++i) frob = frob * frob;
      CHECK(frob == img);
    }
    CHECK(Gf2k::one(k).embed_into(m) == Gf2k::one(m));
  }
}

TEST_CASE("mixed-field arithmetic throws") {
  CHECK_THROWS_AS(Gf2k::one(2) + Gf2k::one(3), qef::Error);
  CHECK_THROWS_AS(Gf2k::zero(4).inv(), qef::Error);
  CHECK_THROWS_AS(Gf2k(17, 0), qef::Error);
  CHECK_THROWS_AS(Gf2k(3, 9), qef::Error);
}

TEST_CASE("rendering is stable") {
  CHECK(Gf2k::zero(4).str() == "0");
  CHECK(Gf2k::one(4).str() == "1");
  CHECK(Gf2k::gen(4).str() == "w");
  CHECK(Gf2k(4, 0b1011).str() == "w^3+w+1");
}

}  // TEST_SUITE
