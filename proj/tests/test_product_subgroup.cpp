#include <gtest/gtest.h>

#include <set>
#include <utility>
#include <vector>

#include "bisets/catalog.hpp"
#include "bisets/group.hpp"
#include "bisets/product.hpp"

using namespace bisets;

namespace {

Elem first_involution(const Group& g) {
  for (Elem a = 1; a < g.order(); ++a)
    if (g.element_order(a) == 2) return a;
  return 0;
}

Elem first_of_order_three(const Group& g) {
  for (Elem a = 1; a < g.order(); ++a)
    if (g.element_order(a) == 3) return a;
  return 0;
}

// (k, g) pairs reachable through a middle element, by brute force.
std::set<std::pair<Elem, Elem>> brute_star(const ProductSubgroup& y, const ProductSubgroup& x) {
  std::set<std::pair<Elem, Elem>> out;
  const auto& yh = *y.ambient();
  const auto& xh = *x.ambient();
  for (auto a : y.elements())
    for (auto b : x.elements())
      if (yh.second(a) == xh.first(b)) out.emplace(yh.first(a), xh.second(b));
  return out;
}

std::set<std::pair<Elem, Elem>> as_pairs(const ProductSubgroup& z) {
  std::set<std::pair<Elem, Elem>> out;
  for (auto c : z.elements()) out.emplace(z.ambient()->first(c), z.ambient()->second(c));
  return out;
}

}  // namespace

TEST(ProjectionsAndKernels, DiagonalOfC2) {
  auto c2 = build_group("C2");
  auto d = ProductSubgroup::diagonal(direct_product(c2, c2));
  EXPECT_EQ(d.p1().elements(), (std::vector<Elem>{0, 1}));
  EXPECT_EQ(d.p2().elements(), (std::vector<Elem>{0, 1}));
  EXPECT_EQ(d.k1().elements(), std::vector<Elem>{0});
  EXPECT_EQ(d.k2().elements(), std::vector<Elem>{0});
}

TEST(ProjectionsAndKernels, WholeProduct) {
  auto s3 = build_group("S3"), c2 = build_group("C2");
  auto w = ProductSubgroup::whole(direct_product(s3, c2));
  EXPECT_EQ(w.p1().size(), 6u);
  EXPECT_EQ(w.k1().size(), 6u);
  EXPECT_EQ(w.p2().size(), 2u);
  EXPECT_EQ(w.k2().size(), 2u);
}

TEST(ProjectionsAndKernels, TwistedTransposition) {
  auto s3 = build_group("S3");
  auto amb = direct_product(s3, s3);
  const auto t = first_involution(*s3);
  auto x = ProductSubgroup::generated(amb, {{t, t}});
  EXPECT_EQ(x.size(), 2u);
  EXPECT_EQ(x.p1().elements(), (std::vector<Elem>{0, t}));
  EXPECT_EQ(x.k1().elements(), std::vector<Elem>{0});
}

TEST(ProjectionsAndKernels, GoursatCountsAndNormality) {
  for (const auto& [a, b] : std::vector<std::pair<const char*, const char*>>{{"C2", "C2"}, {"S3", "C2"}, {"C4", "C2xC2"}, {"S3", "S3"}}) {
    auto amb = direct_product(build_group(a), build_group(b));
    for (auto& s : all_subgroups(amb->group())) {
      ProductSubgroup x(amb, s);
      EXPECT_EQ(x.size(), x.p1().size() * x.k2().size());
      EXPECT_EQ(x.size(), x.p2().size() * x.k1().size());
      EXPECT_TRUE(is_normalized_by(x.k1(), x.p1()));
      EXPECT_TRUE(is_normalized_by(x.k2(), x.p2()));
    }
  }
}

TEST(ConjT1, Examples) {
  auto s3 = build_group("S3");
  auto amb = direct_product(s3, s3);
  const auto tr = first_involution(*s3), rot = first_of_order_three(*s3);
  auto x = ProductSubgroup::generated(amb, {{tr, tr}});
  EXPECT_EQ(conj_t1(x, 0), x);

  auto d = ProductSubgroup::diagonal(amb);
  for (Elem t = 0; t < 6; ++t) {
    std::set<std::pair<Elem, Elem>> expected;
    for (Elem h = 0; h < 6; ++h) expected.emplace(s3->conj(t, h), h);
    EXPECT_EQ(as_pairs(conj_t1(d, t)), expected);
  }

  auto moved = conj_t1(x, rot);
  const auto other = s3->conj(rot, tr);
  EXPECT_NE(other, tr);
  EXPECT_EQ(s3->element_order(other), 2u);
  EXPECT_EQ(as_pairs(moved), (std::set<std::pair<Elem, Elem>>{{0, 0}, {other, tr}}));
  EXPECT_EQ(moved.p2(), x.p2());
  EXPECT_EQ(moved.k2(), x.k2());
  EXPECT_EQ(moved.p1(), conjugate_subgroup(s3, x.p1(), rot));
}

TEST(Star, Examples) {
  auto c2 = build_group("C2");
  auto amb = direct_product(c2, c2);
  auto d = ProductSubgroup::diagonal(amb);
  EXPECT_EQ(star(d, d), d);
  EXPECT_EQ(star(ProductSubgroup::whole(amb), ProductSubgroup::whole(amb)), ProductSubgroup::whole(amb));
  auto right = ProductSubgroup::generated(amb, {{0, 1}});
  auto z = star(d, right);
  EXPECT_EQ(as_pairs(z), (std::set<std::pair<Elem, Elem>>{{0, 0}, {0, 1}}));
}

TEST(Star, MatchesBruteForceAndIsAssociative) {
  const std::vector<const char*> names{"C2", "C3", "S3"};
  for (auto kn : names)
    for (auto hn : names)
      for (auto gn : names) {
        auto k = build_group(kn), h = build_group(hn), g = build_group(gn);
        auto kh = direct_product(k, h), hg = direct_product(h, g);
        if (kh->order() * hg->order() > 400) continue;
        auto ys = all_subgroups(kh->group());
        auto xs = all_subgroups(hg->group());
        for (const auto& ys_ : ys)
          for (const auto& xs_ : xs) {
            ProductSubgroup y(kh, ys_), x(hg, xs_);
            EXPECT_EQ(as_pairs(star(y, x)), brute_star(y, x));
          }
      }
  auto c2 = build_group("C2"), s3 = build_group("S3");
  auto a = direct_product(c2, s3), b = direct_product(s3, s3), c = direct_product(s3, c2);
  auto za = all_subgroups(a->group()), zb = all_subgroups(b->group()), zc = all_subgroups(c->group());
  for (std::size_t i = 0; i < za.size(); i += 2)
    for (std::size_t j = 0; j < zb.size(); j += 3)
      for (std::size_t l = 0; l < zc.size(); l += 2) {
        ProductSubgroup z(a, za[i]), y(b, zb[j]), x(c, zc[l]);
        EXPECT_EQ(star(star(z, y), x), star(z, star(y, x)));
      }
}

TEST(Star, RejectsMismatchedMiddle) {
  auto c2 = build_group("C2"), c3 = build_group("C3");
  auto y = ProductSubgroup::whole(direct_product(c2, c2));
  auto x = ProductSubgroup::whole(direct_product(c3, c2));
  EXPECT_THROW(star(y, x), StructureError);
}

TEST(MiddleSection, Examples) {
  auto s3 = build_group("S3");
  auto amb = direct_product(s3, s3);
  auto d = ProductSubgroup::diagonal(amb);
  for (Elem t = 0; t < 6; ++t) EXPECT_EQ(middle_section(d, d, t).size(), 1u);

  auto one = build_group("C1");
  auto y = ProductSubgroup::product_of(direct_product(one, s3), Subgroup::trivial(one), Subgroup::whole(s3));
  auto x = ProductSubgroup::product_of(direct_product(s3, one), Subgroup::whole(s3), Subgroup::trivial(one));
  EXPECT_EQ(middle_section(y, x, 0).size(), 6u);

  const auto tr = first_involution(*s3), rot = first_of_order_three(*s3);
  auto tt = subgroup_generated(s3, {tr});
  auto x2 = ProductSubgroup::product_of(amb, tt, tt);
  EXPECT_EQ(middle_section(d, x2, rot).size(), 1u);
}
