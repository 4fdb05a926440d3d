#include <gtest/gtest.h>

#include <vector>

#include "bisets/biset.hpp"
#include "bisets/catalog.hpp"
#include "bisets/error.hpp"
#include "bisets/product.hpp"

using namespace bisets;

namespace {

bool transitive(const Biset& b) { return b.orbit_reps().size() == 1; }

// Two copies of a biset side by side.
BisetPtr doubled(const Biset& b) {
  const auto m = static_cast<Biset::Point>(b.size());
  const auto nh = b.left_group()->order(), ng = b.right_group()->order();
  std::vector<Biset::Point> left(nh * 2 * m), right(2 * m * ng);
  for (Elem h = 0; h < nh; ++h)
    for (Biset::Point u = 0; u < 2 * m; ++u) left[h * 2 * m + u] = b.left(h, u % m) + (u / m) * m;
  for (Biset::Point u = 0; u < 2 * m; ++u)
    for (Elem g = 0; g < ng; ++g) right[u * ng + g] = b.right(u % m, g) + (u / m) * m;
  return std::make_shared<const Biset>(b.ambient(), 2 * m, std::move(left), std::move(right));
}

}  // namespace

TEST(TransitiveBiset, Examples) {
  auto c2 = build_group("C2");
  auto amb = direct_product(c2, c2);
  auto whole = transitive_biset(ProductSubgroup::whole(amb));
  EXPECT_EQ(whole.biset->size(), 1u);

  auto diag = transitive_biset(ProductSubgroup::diagonal(amb));
  ASSERT_EQ(diag.biset->size(), 2u);
  EXPECT_EQ(diag.biset->left(1, 0), 1u);
  EXPECT_EQ(diag.biset->right(0, 1), 1u);

  auto free = transitive_biset(ProductSubgroup::trivial(amb));
  ASSERT_EQ(free.biset->size(), 4u);
  for (Biset::Point u = 0; u < 4; ++u) {
    EXPECT_NE(free.biset->left(1, u), u);
    EXPECT_NE(free.biset->right(u, 1), u);
  }
}

TEST(TransitiveBiset, ActionFollowsTheCosetFormula) {
  // h.(t,s)X.g = (ht, g^-1 s)X
  auto s3 = build_group("S3"), c2 = build_group("C2");
  auto amb = direct_product(s3, c2);
  const auto& grp = *amb->group();
  for (auto& sub : all_subgroups(amb->group())) {
    auto u = transitive_biset(ProductSubgroup(amb, sub));
    EXPECT_TRUE(transitive(*u.biset));
    EXPECT_EQ(u.rep(0), 0u);
    for (Biset::Point i = 0; i < u.biset->size(); ++i) {
      const auto r = u.rep(i);
      for (Elem h = 0; h < 6; ++h)
        for (Elem g = 0; g < 2; ++g) {
          const auto moved = grp.mul(amb->pair(h, c2->inv(g)), r);
          EXPECT_EQ(u.biset->right(u.biset->left(h, i), g), u.cosets.coset_of[moved]);
        }
    }
  }
}

TEST(Biset, RejectsNonCommutingTables) {
  auto c2 = build_group("C2");
  auto amb = direct_product(c2, c2);
  auto good = transitive_biset(ProductSubgroup::diagonal(amb));
  auto left = good.biset->left_table();
  left[2] = 0;  // h = 1 fixes point 0 but still moves point 1
  EXPECT_THROW(Biset(amb, 2, left, good.biset->right_table()), AssertionFailure);
  EXPECT_THROW(Biset(amb, 2, {0, 1, 1, 0}, {0, 1}), StructureError);
}

TEST(HomSet, Examples) {
  auto c2 = build_group("C2");
  auto amb = direct_product(c2, c2);
  auto one = transitive_biset(ProductSubgroup::whole(amb));
  EXPECT_EQ(one.biset->hom_set(0, 0).size(), 4u);

  auto diag = transitive_biset(ProductSubgroup::diagonal(amb));
  EXPECT_EQ(diag.biset->hom_set(0, 0), (std::vector<Elem>{amb->pair(0, 0), amb->pair(1, 1)}));

  auto two = doubled(*diag.biset);
  EXPECT_TRUE(two->hom_set(0, 2).empty());
  EXPECT_TRUE(two->hom_set(3, 1).empty());
}

TEST(HomSet, CompositionAndIdentity) {
  auto s3 = build_group("S3");
  auto amb = direct_product(s3, s3);
  const auto& grp = *amb->group();
  auto u = transitive_biset(ProductSubgroup::generated(amb, {{1, 1}}));
  const auto& b = *u.biset;
  for (Biset::Point p = 0; p < b.size(); ++p) {
    EXPECT_EQ(b.target(0, p), p);
    for (Biset::Point q = 0; q < b.size(); q += 3)
      for (auto f : b.hom_set(p, q)) {
        EXPECT_EQ(b.target(f, p), q);
        for (Biset::Point r = 0; r < b.size(); r += 4)
          for (auto f2 : b.hom_set(q, r)) EXPECT_EQ(b.target(grp.mul(f2, f), p), r);
      }
  }
}

TEST(AutGroup, PointZeroIsTheDefiningSubgroup) {
  for (const auto& [a, c] : std::vector<std::pair<const char*, const char*>>{{"C2", "C2"}, {"S3", "C2"}, {"C4", "C2xC2"}}) {
    auto amb = direct_product(build_group(a), build_group(c));
    const auto& grp = *amb->group();
    for (auto& sub : all_subgroups(amb->group())) {
      ProductSubgroup x(amb, sub);
      auto u = transitive_biset(x);
      EXPECT_EQ(u.biset->aut_group(0), x);
      for (Biset::Point p = 1; p < u.biset->size(); ++p) {
        const auto morph = u.biset->hom_set(0, p);
        ASSERT_FALSE(morph.empty());
        const auto f = morph.front();
        EXPECT_EQ(u.biset->aut_group(p).subgroup(), conjugate_subgroup(amb->group(), x.subgroup(), f));
        (void)grp;
      }
    }
  }
  auto c2 = build_group("C2");
  auto amb = direct_product(c2, c2);
  auto free = transitive_biset(ProductSubgroup::trivial(amb));
  for (Biset::Point p = 0; p < 4; ++p) EXPECT_EQ(free.biset->aut_group(p).size(), 1u);
}

TEST(OrbitReps, Examples) {
  auto s3 = build_group("S3");
  auto amb = direct_product(s3, s3);
  auto d = transitive_biset(ProductSubgroup::diagonal(amb));
  EXPECT_EQ(d.biset->size(), 6u);
  EXPECT_EQ(d.biset->orbit_reps(), std::vector<Biset::Point>{0});
  EXPECT_EQ(doubled(*d.biset)->orbit_reps(), (std::vector<Biset::Point>{0, 6}));
}

TEST(ComposeBisets, Examples) {
  auto c2 = build_group("C2");
  auto amb = direct_product(c2, c2);
  auto one = transitive_biset(ProductSubgroup::whole(amb));
  EXPECT_EQ(compose_bisets(one.biset, one.biset).biset->size(), 1u);

  auto s3 = build_group("S3");
  auto sq = direct_product(s3, s3);
  auto d = transitive_biset(ProductSubgroup::diagonal(sq));
  auto c = compose_bisets(d.biset, d.biset);
  EXPECT_EQ(c.biset->size(), 6u);
  EXPECT_EQ(c.biset->orbit_reps().size(), 1u);
  EXPECT_EQ(stabilizer(c, 0), ProductSubgroup::diagonal(sq));
  EXPECT_EQ(c.rep_pair.front(), (std::pair<Biset::Point, Biset::Point>{0, 0}));

  auto free = transitive_biset(ProductSubgroup::trivial(amb));
  auto ff = compose_bisets(free.biset, free.biset);
  for (Biset::Point w = 0; w < ff.biset->size(); ++w) EXPECT_EQ(stabilizer(ff, w).size(), 1u);
  EXPECT_THROW(compose_bisets(d.biset, free.biset), StructureError);
}

TEST(ComposeBisets, RepresentativesAreLexicographicMinima) {
  auto s3 = build_group("S3");
  auto sq = direct_product(s3, s3);
  auto v = transitive_biset(ProductSubgroup::generated(sq, {{1, 1}}));
  auto u = transitive_biset(ProductSubgroup::generated(sq, {{2, 0}}));
  auto c = compose_bisets(v.biset, u.biset);
  for (std::size_t w = 0; w < c.members.size(); ++w) {
    const auto [pv, pu] = c.rep_pair[w];
    EXPECT_EQ(c.raw(pv, pu), c.members[w].front());
    for (auto r : c.members[w]) EXPECT_EQ(c.point_of_pair[r], w);
  }
}

TEST(ComposeBisets, OrbitsMatchDoubleCosetsAndStabilizersMatchStar) {
  const std::vector<const char*> names{"C1", "C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8"};
  for (auto hn : names) {
    auto h = build_group(hn);
    if (h->order() > 8) continue;
    for (auto kn : {"C1", "C2"}) {
      auto k = build_group(kn);
      auto kh = direct_product(k, h), hk = direct_product(h, k);
      auto kg = direct_product(k, k);
      for (auto& ys : all_subgroups(kh->group()))
        for (auto& xs : all_subgroups(hk->group())) {
          ProductSubgroup y(kh, ys), x(hk, xs);
          auto v = transitive_biset(y), u = transitive_biset(x);
          auto c = compose_bisets(v.biset, u.biset, kg);
          const auto reps = double_coset_reps(h, y.p2(), x.p1());
          ASSERT_EQ(c.biset->orbit_reps().size(), reps.size());
          for (auto t : reps) {
            const auto w = c.point_of(0, u.cosets.coset_of[hk->pair(t, 0)]);
            EXPECT_EQ(stabilizer(c, w), star(y, conj_t1(x, t), kg));
          }
        }
    }
  }
}
