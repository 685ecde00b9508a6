#include <gtest/gtest.h>

#include <set>
#include <string>

#include "corpus.hpp"
#include "lfnerve/laxfun.hpp"
#include "oracles.hpp"

using namespace lfnerve;

namespace {

TwoCatPtr disc(const CategoryPresentation& c) { return share(from_category(c)); }

std::set<std::pair<std::map<std::string, std::string>, std::map<std::string, std::string>>> as_ordinary(
    const std::vector<LaxFunctor>& fs) {
  std::set<std::pair<std::map<std::string, std::string>, std::map<std::string, std::string>>> out;
  for (const auto& F : fs) {
    const auto d = lax_functor_data(F);
    out.insert({d.F0, d.F1});
  }
  return out;
}

}  // namespace

TEST(LaxFunctor, IdentityIsValid) {
  for (const auto& c : corpus::two_categories()) {
    const LaxFunctor I = identity_lax_functor(c.cat);
    EXPECT_TRUE(lax_functor_violations(I).empty()) << c.name;
    EXPECT_NO_THROW(validate_lax_functor(c.cat, c.cat, lax_functor_data(I))) << c.name;
  }
}

TEST(LaxFunctor, DiscreteEnumerationMatchesOrdinaryFunctors) {
  const auto cats = corpus::categories();
  for (const auto& [na, a] : cats)
    for (const auto& [nb, b] : cats) {
      if (a.arrows.size() > 6 || b.arrows.size() > 6) continue;
      const auto lax = enumerate_lax_functors(disc(a), disc(b));
      const auto ord = oracle::ordinary_functors(a, b);
      std::set<std::pair<std::map<std::string, std::string>, std::map<std::string, std::string>>> expected;
      for (const auto& F : ord) expected.insert({F.obj, F.arr});
      EXPECT_EQ(as_ordinary(lax), expected) << na << " -> " << nb;
      EXPECT_EQ(lax.size(), ord.size()) << na << " -> " << nb;
    }
}

TEST(LaxFunctor, EnumerationIsCanonicalAndValid) {
  auto dom = disc(corpus::cyclic_category(2));
  auto cod = corpus::aut_of_cyclic(3);
  const auto fs = enumerate_lax_functors(dom, cod);
  ASSERT_EQ(fs.size(), 4u);
  for (const auto& F : fs) {
    EXPECT_TRUE(lax_functor_violations(F).empty());
    EXPECT_EQ(validate_lax_functor(dom, cod, lax_functor_data(F)), F);
  }
  EXPECT_EQ(enumerate_lax_functors(dom, cod), fs);
}

TEST(LaxFunctor, CocycleCountForAutZ3) {
  // F1(t) = id admits σ(t,t) ∈ {0,1,2}; F1(t) = inversion forces σ(t,t) = 0.
  auto dom = disc(corpus::cyclic_category(2));
  auto cod = corpus::aut_of_cyclic(3);
  std::map<std::string, int> per_action;
  for (const auto& F : enumerate_lax_functors(dom, cod)) ++per_action[cod->one_cell_id(F.one[*dom->find_one_cell("t")])];
  EXPECT_EQ(per_action["*->*:[0,1,2]"], 3);
  EXPECT_EQ(per_action["*->*:[0,2,1]"], 1);
}

TEST(LaxFunctor, NormalityFillsIdentityPairs) {
  auto dom = disc(corpus::cyclic_category(2));
  auto cod = corpus::aut_of_cyclic(2);
  LaxFunctorData d;
  d.F0 = {{"*", "*"}};
  d.F1 = {{"e", "*->*:[0,1]"}, {"t", "*->*:[0,1]"}};
  d.F2 = {{"id(e)", "*->*:[0,1]|0"}, {"id(t)", "*->*:[0,1]|0"}};
  d.sigma = {{"t", "t", "*->*:[0,1]|1"}};
  const LaxFunctor F = validate_lax_functor(dom, cod, d);
  const int e = *dom->find_one_cell("e"), t = *dom->find_one_cell("t");
  EXPECT_EQ(F.sig(e, t), cod->id2(F.one[t]));
  EXPECT_EQ(cod->two_cell_id(F.sig(t, t)), "*->*:[0,1]|1");
}

TEST(LaxFunctor, RejectsNonNormalSigma) {
  auto dom = disc(corpus::cyclic_category(2));
  auto cod = corpus::aut_of_cyclic(2);
  LaxFunctorData d;
  d.F0 = {{"*", "*"}};
  d.F1 = {{"e", "*->*:[0,1]"}, {"t", "*->*:[0,1]"}};
  d.F2 = {{"id(e)", "*->*:[0,1]|0"}, {"id(t)", "*->*:[0,1]|0"}};
  d.sigma = {{"e", "t", "*->*:[0,1]|1"}, {"t", "t", "*->*:[0,1]|0"}};
  try {
    validate_lax_functor(dom, cod, d);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.violations().front().law, "normality") << e.what();
  }
}

TEST(LaxFunctor, RejectsIncoherentSigma) {
  // ℤ/3 with inversion action and σ(t,t) = 1 violates coherence.
  auto dom = disc(corpus::cyclic_category(2));
  auto cod = corpus::aut_of_cyclic(3);
  LaxFunctorData d;
  d.F0 = {{"*", "*"}};
  d.F1 = {{"e", "*->*:[0,1,2]"}, {"t", "*->*:[0,2,1]"}};
  d.F2 = {{"id(e)", "*->*:[0,1,2]|0"}, {"id(t)", "*->*:[0,2,1]|0"}};
  d.sigma = {{"t", "t", "*->*:[0,1,2]|1"}};
  try {
    validate_lax_functor(dom, cod, d);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.violations().front().law, "coherence") << e.what();
  }
}

TEST(LaxFunctor, RejectsDanglingAndPartialData) {
  auto dom = disc(corpus::cyclic_category(2));
  auto cod = corpus::aut_of_cyclic(2);
  LaxFunctorData d;
  d.F0 = {{"*", "nowhere"}};
  EXPECT_THROW(validate_lax_functor(dom, cod, d), ValidationError);
}

TEST(LaxFunctor, CompositionWithIdentity) {
  auto dom = disc(corpus::cyclic_category(2));
  auto cod = corpus::aut_of_cyclic(3);
  for (const auto& F : enumerate_lax_functors(dom, cod)) {
    EXPECT_EQ(compose_lax_functors(identity_lax_functor(cod), F), F);
    EXPECT_EQ(compose_lax_functors(F, identity_lax_functor(dom)), F);
  }
}

TEST(LaxFunctor, CompositesAreValid) {
  auto d2 = share(delta_two_category(2));
  auto z2 = disc(corpus::cyclic_category(2));
  auto a3 = corpus::aut_of_cyclic(3);
  for (const auto& F : enumerate_lax_functors(d2, z2))
    for (const auto& G : enumerate_lax_functors(z2, a3))
      EXPECT_TRUE(lax_functor_violations(compose_lax_functors(G, F)).empty());
}

TEST(LaxFunctor, FixedObjectsRestrictTheSearch) {
  auto dom = disc(corpus::chain_category(1));
  auto cod = disc(corpus::chain_category(1));
  EXPECT_EQ(enumerate_lax_functors(dom, cod).size(), 3u);
  EXPECT_EQ(enumerate_lax_functors(dom, cod, objects_by_identifier(*dom, *cod)).size(), 1u);
}

TEST(LaxFunctor, SizeGuard) {
  auto dom = share(delta_two_category(3));
  auto cod = corpus::aut_of_cyclic(3);
  SearchBudget budget(5);
  EXPECT_THROW(enumerate_lax_functors(dom, cod, std::nullopt, budget), SizeLimitExceeded);
}

TEST(LaxTransformation, IdentityIsValid) {
  auto dom = disc(corpus::cyclic_category(2));
  auto cod = corpus::aut_of_cyclic(3);
  for (const auto& F : enumerate_lax_functors(dom, cod)) {
    const auto t = identity_transformation(F);
    EXPECT_TRUE(lax_transformation_violations(t).empty());
    EXPECT_EQ(validate_lax_transformation(F, F, lax_transformation_data(t)), t);
  }
}

TEST(LaxTransformation, DiscreteCaseMatchesNaturalTransformations) {
  const auto cats = corpus::categories();
  for (const auto& [na, a] : cats)
    for (const auto& [nb, b] : cats) {
      if (a.arrows.size() > 6 || b.arrows.size() > 6) continue;
      auto A = disc(a), B = disc(b);
      const auto lax = enumerate_lax_functors(A, B);
      const auto ord = oracle::ordinary_functors(a, b);
      ASSERT_EQ(lax.size(), ord.size());
      for (const auto& F : lax)
        for (const auto& G : lax) {
          const auto fd = lax_functor_data(F), gd = lax_functor_data(G);
          const oracle::Functor oF{fd.F0, fd.F1}, oG{gd.F0, gd.F1};
          const auto expected = oracle::natural_transformations(a, b, oF, oG);
          const auto got = enumerate_lax_transformations(F, G);
          ASSERT_EQ(got.size(), expected.size()) << na << " -> " << nb;
          std::set<std::map<std::string, std::string>> comps;
          for (const auto& t : got) {
            EXPECT_TRUE(lax_transformation_violations(t).empty());
            comps.insert(lax_transformation_data(t).components);
          }
          EXPECT_EQ(comps, (std::set<std::map<std::string, std::string>>(expected.begin(), expected.end())));
        }
    }
}

TEST(LaxTransformation, RejectsBadStructure) {
  auto dom = disc(corpus::cyclic_category(2));
  auto cod = corpus::aut_of_cyclic(2);
  const auto fs = enumerate_lax_functors(dom, cod);
  ASSERT_EQ(fs.size(), 2u);
  auto d = lax_transformation_data(identity_transformation(fs[0]));
  d.structure["e"] = "*->*:[0,1]|1";
  EXPECT_THROW(validate_lax_transformation(fs[0], fs[0], d), ValidationError);
}

TEST(Pi0, ClassCountsIntoAutomorphismGroupoids) {
  auto dom = disc(corpus::cyclic_category(2));
  for (int n : {2, 3}) {
    auto cod = corpus::aut_of_cyclic(n);
    const auto fix = objects_by_identifier(*dom, *cod);
    for (bool ic : {false, true}) {
      const auto P = pi0_lax(dom, cod, fix, {ic});
      EXPECT_EQ(P.num_classes(), 2u) << n;
      for (const auto& e : P.witnesses) {
        EXPECT_TRUE(lax_transformation_violations(e.witness).empty());
        EXPECT_EQ(e.witness.src, P.items[e.from]);
        EXPECT_EQ(e.witness.tgt, P.items[e.to]);
      }
      std::size_t total = 0;
      for (const auto& c : P.classes) total += c.size();
      EXPECT_EQ(total, P.items.size());
    }
  }
}

TEST(Pi0, AbelianCocycleOracle) {
  // Coprime and non-coprime cyclic cases against the abelian brute-forcer.
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {2, 5}, {3, 3}, {2, 1}, {1, 3}}) {
    auto dom = disc(corpus::cyclic_category(m));
    auto cod = corpus::aut_of_cyclic(n);
    const auto P = pi0_lax(dom, cod, objects_by_identifier(*dom, *cod));
    EXPECT_EQ(static_cast<int>(P.num_classes()), oracle::abelian_h2_classes(m, n)) << "Z" << m << " on Z" << n;
  }
}
