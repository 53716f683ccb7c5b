#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "quantcat/error.hpp"
#include "quantcat/qrel.hpp"

using namespace quantcat;

namespace {

Relation random_relation(const QuantaloidPtr& q, std::size_t n, std::size_t m, std::mt19937_64& rng) {
  Relation r(q, TypedSet::uniform(n), TypedSet::uniform(m));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      const auto& els = q->elements(0, 0);
      r.set(x, y, els[rng() % els.size()]);
    }
  }
  return r;
}

Relation random_lawvere(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  const auto l = lawvere_quantale();
  Relation r(l, TypedSet::uniform(n), TypedSet::uniform(m));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      const auto k = rng() % 9;
      r.set(x, y, k == 8 ? l->value(ExtRational::infinity())
                         : l->value(ExtRational(Rational(static_cast<long long>(k), 1 + static_cast<long long>(rng() % 3)))));
    }
  }
  return r;
}

}  // namespace

TEST(QRel, BooleanCompositionIsMatrixProduct) {
  QuantaloidPtr q = builtin_quantaloid("2");
  const Value one = q->top(0, 0);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 4, m = 1 + rng() % 4, k = 1 + rng() % 4;
    const Relation r = random_relation(q, n, m, rng);
    const Relation s = random_relation(q, m, k, rng);
    std::vector<bool> br(n * m), bs(m * k);
    for (std::size_t i = 0; i < n * m; ++i) br[i] = r.entries()[i] == one;
    for (std::size_t i = 0; i < m * k; ++i) bs[i] = s.entries()[i] == one;
    const auto expect = oracle::bool_product(br, bs, n, m, k);
    const Relation got = compose(s, r);
    for (std::size_t i = 0; i < n * k; ++i) EXPECT_EQ(got.entries()[i] == one, expect[i]);
  }
}

TEST(QRel, LawvereCompositionIsMinPlus) {
  const auto l = lawvere_quantale();
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 4, m = 1 + rng() % 4, k = 1 + rng() % 4;
    const Relation r = random_lawvere(n, m, rng);
    const Relation s = random_lawvere(m, k, rng);
    std::vector<ExtRational> nr, ns;
    for (Value v : r.entries()) nr.push_back(l->number(v));
    for (Value v : s.entries()) ns.push_back(l->number(v));
    const auto expect = oracle::min_plus(nr, ns, n, m, k);
    const Relation got = compose(s, r);
    for (std::size_t i = 0; i < n * k; ++i) EXPECT_EQ(l->number(got.entries()[i]), expect[i]);
  }
}

TEST(QRel, HomsAreRightAdjoints) {
  std::mt19937_64 rng(3);
  for (const char* name : {"2", "chain3", "lukasiewicz3"}) {
    QuantaloidPtr q = builtin_quantaloid(name);
    for (int trial = 0; trial < 100; ++trial) {
      const Relation r = random_relation(q, 2, 3, rng);
      const Relation t = random_relation(q, 2, 2, rng);
      const Relation u = random_relation(q, 3, 2, rng);
      // u . r <= t iff u <= t / r
      EXPECT_EQ(leq(compose(u, r), t), leq(u, left_hom(t, r))) << name;
      // s . v <= t iff v <= s \ t
      const Relation s = random_relation(q, 3, 2, rng);
      const Relation v = random_relation(q, 2, 3, rng);
      EXPECT_EQ(leq(compose(s, v), t), leq(v, right_hom(s, t))) << name;
    }
  }
}

TEST(QRel, IdentityIsNeutral) {
  std::mt19937_64 rng(4);
  QuantaloidPtr q = builtin_quantaloid("lukasiewicz3");
  const Relation r = random_relation(q, 3, 2, rng);
  EXPECT_EQ(compose(identity_relation(q, r.tgt()), r), r);
  EXPECT_EQ(compose(r, identity_relation(q, r.src())), r);
}

TEST(QRel, GraphAndCographAreAdjoint) {
  QuantaloidPtr q = builtin_quantaloid("2");
  const TypedSet x = TypedSet::uniform(3);
  const TypedSet y = TypedSet::uniform(2);
  for (const TypedMap& f : all_typed_maps(x, y)) {
    const Relation g = graph(q, f);
    const Relation c = cograph(q, f);
    EXPECT_TRUE(leq(identity_relation(q, x), compose(c, g)));
    EXPECT_TRUE(leq(compose(g, c), identity_relation(q, y)));
  }
}

TEST(QRel, TypedMapsPreserveTypes) {
  const TypedSet x(std::vector<ObjectId>{0, 1});
  const TypedSet y(std::vector<ObjectId>{0, 1, 1});
  EXPECT_EQ(all_typed_maps(x, y).size(), 2u);
  EXPECT_THROW(make_typed_map(x, y, {1, 1}), Error);
}

TEST(QRel, MismatchedEndpointsThrow) {
  QuantaloidPtr q = builtin_quantaloid("2");
  const Relation r(q, TypedSet::uniform(2), TypedSet::uniform(3));
  const Relation s(q, TypedSet::uniform(2), TypedSet::uniform(2));
  try {
    compose(s, r);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::type_mismatch);
  }
}
