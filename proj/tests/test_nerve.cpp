#include <gtest/gtest.h>

#include <string>

#include "corpus.hpp"
#include "lfnerve/nerve.hpp"
#include "oracles.hpp"

using namespace lfnerve;

namespace {

TwoCatPtr disc(const CategoryPresentation& c) { return share(from_category(c)); }

/// Renaming of the classic nerve onto the geometric nerve of the 2-discrete
/// category: a string of arrows goes to the simplex with those edges.
std::array<std::vector<int>, 4> classic_to_geometric(const TruncSSet& X, const Nerve& N) {
  const TwoCat& C = *N.cat();
  std::array<std::vector<int>, 4> iso;
  for (int v = 0; v < X.size(0); ++v) iso[0].push_back(*C.find_object(X.id(0, v)));
  for (int e = 0; e < X.size(1); ++e) iso[1].push_back(*C.find_one_cell(X.id(1, e)));
  for (int x = 0; x < X.size(2); ++x) {
    const int f = iso[1][X.face(2, 2, x)], g = iso[1][X.face(2, 0, x)];
    const int h = C.comp1(f, g);
    iso[2].push_back(N.triangle_at({g, h, f, C.id2(h)}));
  }
  for (int x = 0; x < X.size(3); ++x) {
    std::array<int, 4> fs{};
    for (int i = 0; i < 4; ++i) fs[i] = iso[2][X.face(3, i, x)];
    iso[3].push_back(N.tetrahedron_at(fs));
  }
  return iso;
}

}  // namespace

TEST(Nerve, CorpusNervesAreSimplicial) {
  for (const auto& c : corpus::two_categories()) {
    const Nerve N(c.cat);
    EXPECT_TRUE(trunc_sset_violations(*N).empty()) << c.name;
    EXPECT_TRUE(N->coskeletal()) << c.name;
  }
}

TEST(Nerve, DeltaSizes) {
  // ner([n]) has C(n+k+1, k+1) k-simplices: monotone maps [k] → [n].
  const int expected[4][4] = {{1, 1, 1, 1}, {2, 3, 4, 5}, {3, 6, 10, 15}, {4, 10, 20, 35}};
  for (int n = 0; n <= 3; ++n) {
    const Nerve N(share(delta_two_category(n)));
    for (int k = 0; k <= 3; ++k) EXPECT_EQ(N->size(k), expected[n][k]) << n << " " << k;
  }
}

TEST(Nerve, AgreesWithClassicNerve) {
  for (const auto& [name, c] : corpus::categories()) {
    const Nerve N(disc(c));
    const TruncSSet X = classic_nerve(c);
    EXPECT_TRUE(is_isomorphism(X, *N, classic_to_geometric(X, N))) << name;
  }
}

TEST(Nerve, TriangleFacesAndDegeneracies) {
  auto A = corpus::aut_of_cyclic(3);
  const Nerve N(A);
  for (int x = 0; x < N->size(2); ++x) {
    const Triangle& t = N.triangle(x);
    EXPECT_EQ(N->face(2, 0, x), t.g);
    EXPECT_EQ(N->face(2, 1, x), t.h);
    EXPECT_EQ(N->face(2, 2, x), t.f);
  }
  // s_0(f) = (f, f, id; 1), s_1(f) = (id, f, f; 1).
  for (int f = 0; f < A->num_one_cells(); ++f) {
    const Triangle& s0 = N.triangle(N->degen(1, 0, f));
    const Triangle& s1 = N.triangle(N->degen(1, 1, f));
    EXPECT_EQ(s0.g, f);
    EXPECT_EQ(s0.f, A->id1(A->src1(f)));
    EXPECT_EQ(s0.alpha, A->id2(f));
    EXPECT_EQ(s1.g, A->id1(A->tgt1(f)));
    EXPECT_EQ(s1.f, f);
  }
}

TEST(Nerve, TetrahedronCommutation) {
  auto A = corpus::aut_of_cyclic(3);
  const Nerve N(A);
  const int id = *A->find_one_cell("*->*:[0,1,2]");
  const int z = A->id2(id);
  const int one = *A->find_two_cell("*->*:[0,1,2]|1");
  const Triangle plain{id, id, id, z}, twisted{id, id, id, one};
  EXPECT_TRUE(tetrahedron_commutes(*A, plain, plain, plain, plain));
  EXPECT_FALSE(tetrahedron_commutes(*A, plain, plain, plain, twisted));
  EXPECT_TRUE(tetrahedron_commutes(*A, plain, twisted, twisted, plain));
}

TEST(Nerve, LevelsMatchLaxFunctorsFromDelta) {
  for (const auto& c : corpus::two_categories()) {
    const Nerve N(c.cat);
    for (int n = 0; n <= 3; ++n)
      EXPECT_EQ(static_cast<std::size_t>(N->size(n)), enumerate_lax_functors(share(delta_two_category(n)), c.cat).size())
          << c.name << " level " << n;
  }
}

TEST(NerveMap, FullAndFaithful) {
  auto dom = disc(corpus::cyclic_category(2));
  auto cod = corpus::aut_of_cyclic(3);
  const Nerve NC(dom), ND(cod);
  const auto fs = enumerate_lax_functors(dom, cod);
  const auto maps = enumerate_simplicial_maps(NC.sset(), ND.sset());
  ASSERT_EQ(fs.size(), 4u);
  ASSERT_EQ(maps.size(), 4u);
  for (const auto& F : fs) {
    const auto m = nerve_of_lax_functor(F, NC, ND);
    EXPECT_TRUE(simplicial_map_violations(m).empty());
    EXPECT_EQ(reconstruct_lax_functor(m, NC, ND), F);
  }
  for (const auto& m : maps) EXPECT_EQ(nerve_of_lax_functor(reconstruct_lax_functor(m, NC, ND), NC, ND), m);
}

TEST(NerveMap, IdentityGoesToIdentity) {
  for (const auto& c : corpus::two_categories()) {
    const Nerve N(c.cat);
    EXPECT_EQ(nerve_of_lax_functor(identity_lax_functor(c.cat), N, N), identity_map(N.sset())) << c.name;
  }
}

TEST(NerveMap, ReconstructRejectsForeignNerves) {
  auto dom = disc(corpus::cyclic_category(2));
  auto cod = corpus::aut_of_cyclic(3);
  const Nerve NC(dom), ND(cod), other(corpus::aut_of_cyclic(2));
  const auto m = nerve_of_lax_functor(enumerate_lax_functors(dom, cod).front(), NC, ND);
  EXPECT_THROW(reconstruct_lax_functor(m, NC, other), ValidationError);
}

TEST(NerveMap, DiscreteFunctorsGiveClassicMaps) {
  const auto a = corpus::chain_category(2);
  const auto b = corpus::cyclic_category(2);
  const Nerve NA(disc(a)), NB(disc(b));
  const auto fs = enumerate_lax_functors(NA.cat(), NB.cat());
  const auto maps = enumerate_simplicial_maps(NA.sset(), NB.sset());
  EXPECT_EQ(fs.size(), oracle::ordinary_functors(a, b).size());
  EXPECT_EQ(maps.size(), fs.size());
}

TEST(NerveTransformation, IdentityGivesConstantHomotopy) {
  auto dom = disc(corpus::cyclic_category(2));
  auto cod = corpus::aut_of_cyclic(3);
  const Nerve NC(dom), ND(cod);
  for (const auto& F : enumerate_lax_functors(dom, cod)) {
    const Homotopy H = nerve_of_transformation(identity_transformation(F), NC, ND);
    EXPECT_EQ(H, constant_homotopy(nerve_of_lax_functor(F, NC, ND)));
    EXPECT_EQ(transformation_from_homotopy(H, F, F, NC, ND), identity_transformation(F));
  }
}

TEST(NerveTransformation, RoundTripIntoAutomorphismGroupoids) {
  for (int n : {2, 3}) {
    auto cod = corpus::aut_of_cyclic(n);
    for (auto dom : {disc(corpus::cyclic_category(2)), disc(corpus::cyclic_category(3)), share(delta_two_category(2))}) {
      const Nerve NC(dom), ND(cod);
      const auto fs = enumerate_lax_functors(dom, cod);
      for (const auto& F : fs)
        for (const auto& G : fs)
          for (const auto& t : enumerate_lax_transformations(F, G)) {
            const Homotopy H = nerve_of_transformation(t, NC, ND);
            EXPECT_TRUE(homotopy_violations(H).empty());
            EXPECT_EQ(H.src, nerve_of_lax_functor(G, NC, ND));
            EXPECT_EQ(H.tgt, nerve_of_lax_functor(F, NC, ND));
            EXPECT_EQ(transformation_from_homotopy(H, G, F, NC, ND), t);
          }
    }
  }
}

TEST(NerveTransformation, FoundHomotopiesGiveTransformations) {
  auto dom = disc(corpus::cyclic_category(2));
  auto cod = corpus::aut_of_cyclic(3);
  const Nerve NC(dom), ND(cod);
  const auto fs = enumerate_lax_functors(dom, cod);
  for (const auto& F : fs)
    for (const auto& G : fs) {
      auto H = find_homotopy(nerve_of_lax_functor(F, NC, ND), nerve_of_lax_functor(G, NC, ND));
      if (!H) continue;
      const LaxTransformation t = transformation_from_homotopy(*H, F, G, NC, ND);
      EXPECT_TRUE(lax_transformation_violations(t).empty());
      EXPECT_EQ(t.src, G);
      EXPECT_EQ(t.tgt, F);
    }
}

TEST(NerveTransformation, NaturalTransformationGivesClassicHomotopy) {
  // Between ordinary functors of posets, a natural transformation yields a
  // homotopy of classic nerves: compare existence with the classic search.
  const auto a = corpus::chain_category(1);
  const auto b = corpus::chain_category(2);
  const Nerve NA(disc(a)), NB(disc(b));
  auto XA = share(classic_nerve(a)), XB = share(classic_nerve(b));
  const auto ia = classic_to_geometric(*XA, NA), ib = classic_to_geometric(*XB, NB);
  const auto fs = enumerate_lax_functors(NA.cat(), NB.cat());
  for (const auto& F : fs)
    for (const auto& G : fs) {
      SearchBudget budget;
      const bool has_t = find_lax_transformation(G, F, false, budget).has_value();
      // Pull the geometric maps back to classic ones through the renamings.
      auto pull = [&](const SimplicialMap& m) {
        SimplicialMap c{XA, XB, {}};
        for (int k = 0; k <= 3; ++k) {
          c.phi[k].resize(XA->size(k));
          for (int x = 0; x < XA->size(k); ++x) {
            const int y = m.phi[k][ia[k][x]];
            c.phi[k][x] = static_cast<int>(std::find(ib[k].begin(), ib[k].end(), y) - ib[k].begin());
          }
        }
        return c;
      };
      const auto p = pull(nerve_of_lax_functor(F, NA, NB)), q = pull(nerve_of_lax_functor(G, NA, NB));
      EXPECT_TRUE(simplicial_map_violations(p).empty());
      EXPECT_EQ(find_homotopy(p, q).has_value(), has_t);
    }
}
