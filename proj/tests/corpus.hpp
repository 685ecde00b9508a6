#pragma once

// Small instances shared by the unit tests and the acceptance runner.

#include <string>
#include <utility>
#include <vector>

#include "lfnerve/cohom.hpp"
#include "lfnerve/io.hpp"
#include "lfnerve/twocat.hpp"

namespace corpus {

using namespace lfnerve;

inline std::string data_path(const std::string& name) { return std::string(LFNERVE_DATA_DIR) + "/" + name; }

/// One-object category of ℤ/n: arrows e, t, t2, ...
inline CategoryPresentation cyclic_category(int n) {
  CategoryPresentation c;
  c.objects = {"*"};
  std::vector<std::string> names{"e"};
  for (int k = 1; k < n; ++k) names.push_back(k == 1 ? "t" : "t" + std::to_string(k));
  for (const auto& a : names) c.arrows.push_back({a, "*", "*"});
  c.identities["*"] = "e";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) c.comp.push_back({names[a], names[b], names[(a + b) % n]});
  return c;
}

/// The poset {0 < 1 < ... < n} as a category; arrows "i<=j".
inline CategoryPresentation chain_category(int n) {
  CategoryPresentation c;
  auto arrow = [](int i, int j) { return std::to_string(i) + "<=" + std::to_string(j); };
  for (int i = 0; i <= n; ++i) {
    c.objects.push_back(std::to_string(i));
    c.identities[std::to_string(i)] = arrow(i, i);
    for (int j = i; j <= n; ++j) c.arrows.push_back({arrow(i, j), std::to_string(i), std::to_string(j)});
  }
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k) c.comp.push_back({arrow(i, j), arrow(j, k), arrow(i, k)});
  return c;
}

/// The poset a < c > b (a cospan).
inline CategoryPresentation cospan_category() {
  CategoryPresentation c;
  c.objects = {"a", "b", "c"};
  c.arrows = {{"1a", "a", "a"}, {"1b", "b", "b"}, {"1c", "c", "c"}, {"p", "a", "c"}, {"q", "b", "c"}};
  c.identities = {{"a", "1a"}, {"b", "1b"}, {"c", "1c"}};
  c.comp = {{"1a", "1a", "1a"}, {"1b", "1b", "1b"}, {"1c", "1c", "1c"}, {"1a", "p", "p"},
            {"p", "1c", "p"},   {"1b", "q", "q"},   {"q", "1c", "q"}};
  return c;
}

inline GroupFamily single(const FiniteGroup& K) { return GroupFamily{{{"*", K}}}; }

inline TwoCatPtr aut_of_cyclic(int n) { return share(automorphism_two_groupoid(single(cyclic_group(n)))); }

struct Named {
  std::string name;
  TwoCatPtr cat;
};

/// The finite categories of the corpus, by name.
inline std::vector<std::pair<std::string, CategoryPresentation>> categories() {
  return {{"trivial", cyclic_category(1)}, {"Z2", cyclic_category(2)},    {"Z3", cyclic_category(3)},
          {"[0]", chain_category(0)},      {"[1]", chain_category(1)},    {"[2]", chain_category(2)},
          {"[3]", chain_category(3)},      {"cospan", cospan_category()}};
}

/// The 2-categories of the corpus.
inline std::vector<Named> two_categories() {
  std::vector<Named> out;
  out.push_back({"terminal", io::load_two_category(data_path("terminal.2cat.json"))});
  for (int n = 0; n <= 3; ++n) out.push_back({"delta" + std::to_string(n), share(delta_two_category(n))});
  out.push_back({"Z2", share(from_category(cyclic_category(2)))});
  out.push_back({"Z3", share(from_category(cyclic_category(3)))});
  out.push_back({"poset[2]", share(from_category(chain_category(2)))});
  out.push_back({"cospan", share(from_category(cospan_category()))});
  out.push_back({"Aut(Z2)", aut_of_cyclic(2)});
  out.push_back({"Aut(Z3)", aut_of_cyclic(3)});
  out.push_back({"Aut(Z2,Z2)", share(automorphism_two_groupoid(GroupFamily{{{"x", cyclic_group(2)}, {"y", cyclic_group(2)}}}))});
  out.push_back({"arrow2", io::load_two_category(data_path("arrow2.2cat.json"))});
  return out;
}

}  // namespace corpus
