#include <gtest/gtest.h>

#include <algorithm>
#include <string>

#include "corpus.hpp"
#include "lfnerve/io.hpp"
#include "lfnerve/twocat.hpp"

using namespace lfnerve;

namespace {

bool has_law(const ValidationError& e, const std::string& law) {
  const auto& vs = e.violations();
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.law == law; });
}

TwoCatPresentation arrow2() { return io::two_cat_presentation(io::read_json(corpus::data_path("arrow2.2cat.json"))); }

template <class F>
void expect_law(const TwoCatPresentation& p, const std::string& law, F&& check_witness) {
  try {
    validate_two_category(p);
    FAIL() << "expected " << law;
  } catch (const ValidationError& e) {
    EXPECT_TRUE(has_law(e, law)) << e.what();
    check_witness(e);
  }
}

}  // namespace

TEST(TwoCat, TerminalHasOneCellPerDimension) {
  auto T = io::load_two_category(corpus::data_path("terminal.2cat.json"));
  EXPECT_EQ(T->num_objects(), 1);
  EXPECT_EQ(T->num_one_cells(), 1);
  EXPECT_EQ(T->num_two_cells(), 1);
  EXPECT_TRUE(is_two_groupoid(*T));
  EXPECT_TRUE(is_two_discrete(*T));
}

TEST(TwoCat, DeltaSizes) {
  for (int n = 0; n <= 4; ++n) {
    const TwoCat D = delta_two_category(n);
    EXPECT_EQ(D.num_objects(), n + 1);
    EXPECT_EQ(D.num_one_cells(), (n + 1) * (n + 2) / 2);
    EXPECT_EQ(D.num_two_cells(), D.num_one_cells());
    EXPECT_TRUE(is_two_discrete(D));
  }
  const TwoCat D2 = delta_two_category(2);
  const int f = *D2.find_one_cell("0->1"), g = *D2.find_one_cell("1->2");
  EXPECT_EQ(D2.one_cell_id(D2.comp1(f, g)), "0->2");
}

TEST(TwoCat, CompositionConventions) {
  auto A = corpus::aut_of_cyclic(3);
  const int id = *A->find_one_cell("*->*:[0,1,2]");
  const int inv = *A->find_one_cell("*->*:[0,2,1]");
  EXPECT_EQ(A->comp1(inv, inv), id);
  EXPECT_EQ(A->id1(0), id);
  // vcomp multiplies in K; hcomp(a, b) = χ'(a)·b.
  const int a1 = *A->find_two_cell("*->*:[0,2,1]|1");
  const int b2 = *A->find_two_cell("*->*:[0,2,1]|2");
  EXPECT_EQ(A->two_cell_id(A->vcomp(a1, b2)), "*->*:[0,2,1]|0");
  EXPECT_EQ(A->two_cell_id(A->hcomp(a1, b2)), "*->*:[0,1,2]|1");  // inv(1) + 2 = 2 + 2
  EXPECT_EQ(A->whisker_left(inv, a1), A->hcomp(a1, A->id2(inv)));
  EXPECT_EQ(A->whisker_right(b2, inv), A->hcomp(A->id2(inv), b2));
}

TEST(TwoCat, FromCategoryIsTwoDiscrete) {
  for (const auto& [name, cat] : corpus::categories()) {
    const TwoCat C = from_category(cat);
    EXPECT_TRUE(is_two_discrete(C)) << name;
    EXPECT_EQ(C.num_two_cells(), C.num_one_cells()) << name;
    for (int f = 0; f < C.num_one_cells(); ++f)
      EXPECT_EQ(C.two_cell_id(C.id2(f)), discrete_two_cell_id(C.one_cell_id(f)));
  }
}

TEST(TwoCat, GroupoidDetection) {
  EXPECT_TRUE(is_two_groupoid(from_category(corpus::cyclic_category(3))));
  EXPECT_FALSE(is_two_groupoid(from_category(corpus::chain_category(1))));
  EXPECT_FALSE(is_two_groupoid(validate_two_category(arrow2())));
  auto A = corpus::aut_of_cyclic(3);
  EXPECT_TRUE(is_two_groupoid(*A));
  for (int a = 0; a < A->num_two_cells(); ++a) {
    auto b = vertical_inverse(*A, a);
    ASSERT_TRUE(b.has_value());
    EXPECT_EQ(A->vcomp(a, *b), A->id2(A->src2(a)));
  }
}

TEST(TwoCat, PresentationRoundTrip) {
  for (const auto& c : corpus::two_categories()) EXPECT_EQ(validate_two_category(c.cat->presentation()), *c.cat) << c.name;
}

TEST(TwoCat, RejectsDuplicateAndDanglingIds) {
  auto p = arrow2();
  p.objects.push_back("a");
  expect_law(p, "duplicate identifier", [](const ValidationError&) {});
  p = arrow2();
  p.one_cells.push_back({"z", "a", "nowhere"});
  expect_law(p, "dangling identifier", [](const ValidationError&) {});
}

TEST(TwoCat, PartialTableNamesThePair) {
  auto p = arrow2();
  p.comp1.erase(std::find_if(p.comp1.begin(), p.comp1.end(), [](const CompDecl& d) { return d.f == "u" && d.g == "1b"; }));
  expect_law(p, "partial table", [](const ValidationError& e) {
    bool named = false;
    for (const auto& v : e.violations())
      for (const auto& w : v.witnesses) named = named || (w.find("u") != std::string::npos && w.find("1b") != std::string::npos);
    EXPECT_TRUE(named) << e.what();
  });
}

TEST(TwoCat, RejectsConflictingAndNonComposableEntries) {
  auto p = arrow2();
  p.vcomp.push_back({"iu", "iu", "w"});
  expect_law(p, "conflicting entry", [](const ValidationError&) {});
  p = arrow2();
  p.vcomp.push_back({"iv", "iu", "iu"});
  expect_law(p, "non-composable entry", [](const ValidationError&) {});
}

TEST(TwoCat, RejectsNonParallelTwoCell) {
  auto p = arrow2();
  p.two_cells.push_back({"bad", "u", "1a"});
  EXPECT_THROW(validate_two_category(p), ValidationError);
}

TEST(TwoCat, DetectsBrokenUnitLaw) {
  auto p = arrow2();
  for (auto& d : p.vcomp)
    if (d.f == "iu" && d.g == "w") d.result = "iv";
  EXPECT_THROW(validate_two_category(p), ValidationError);
}

TEST(TwoCat, DetectsBrokenInterchange) {
  // ℤ/2 as a 2-group with one object and one 1-cell, where hcomp is altered
  // to disagree with vcomp: interchange or unit laws must fail.
  TwoCatPresentation p;
  p.objects = {"*"};
  p.one_cells = {{"1", "*", "*"}};
  p.id1 = {{"*", "1"}};
  p.comp1 = {{"1", "1", "1"}};
  p.two_cells = {{"0", "1", "1"}, {"x", "1", "1"}};
  p.id2 = {{"1", "0"}};
  p.vcomp = {{"0", "0", "0"}, {"0", "x", "x"}, {"x", "0", "x"}, {"x", "x", "0"}};
  p.hcomp = p.vcomp;
  EXPECT_NO_THROW(validate_two_category(p));
  for (auto& d : p.hcomp)
    if (d.f == "x" && d.g == "x") d.result = "x";
  try {
    validate_two_category(p);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_TRUE(has_law(e, "interchange") || has_law(e, "hcomp associativity")) << e.what();
  }
}

TEST(TwoCat, DetectsNonAssociativeComposition) {
  // Three parallel endomorphisms of one object with a non-associative table.
  CategoryPresentation c;
  c.objects = {"*"};
  c.arrows = {{"e", "*", "*"}, {"a", "*", "*"}, {"b", "*", "*"}};
  c.identities = {{"*", "e"}};
  c.comp = {{"e", "e", "e"}, {"e", "a", "a"}, {"a", "e", "a"}, {"e", "b", "b"}, {"b", "e", "b"},
            {"a", "a", "b"}, {"a", "b", "a"}, {"b", "a", "b"}, {"b", "b", "b"}};
  try {
    from_category(c);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_TRUE(has_law(e, "comp1 associativity")) << e.what();
  }
}

TEST(TwoCat, AutomorphismTwoGroupoidCounts) {
  auto A3 = corpus::aut_of_cyclic(3);
  EXPECT_EQ(A3->num_objects(), 1);
  EXPECT_EQ(A3->num_one_cells(), 2);
  EXPECT_EQ(A3->num_two_cells(), 6);
  for (int f = 0; f < A3->num_one_cells(); ++f) {
    EXPECT_EQ(A3->two_cells_between(f, f).size(), 3u);
    for (int g = 0; g < A3->num_one_cells(); ++g)
      if (f != g) EXPECT_TRUE(A3->two_cells_between(f, g).empty());
  }
  auto T = corpus::aut_of_cyclic(1);
  EXPECT_EQ(T->num_objects(), 1);
  EXPECT_EQ(T->num_one_cells(), 1);
  EXPECT_EQ(T->num_two_cells(), 1);
}
