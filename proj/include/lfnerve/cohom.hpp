#pragma once

// Non-abelian 2-cohomology of finite groupoids with coefficients in a family
// of groups, computed as connected components of identity-on-objects lax
// functors into the automorphism 2-groupoid, and the comparison with
// homotopy classes of simplicial maps between nerves.

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lfnerve/error.hpp"
#include "lfnerve/laxfun.hpp"
#include "lfnerve/nerve.hpp"
#include "lfnerve/simpl.hpp"
#include "lfnerve/twocat.hpp"

namespace lfnerve {

struct GroupPresentation {
  std::vector<std::string> elements;
  std::string unit;
  std::vector<std::array<std::string, 3>> mult;  // {a, b, a·b}
  std::optional<std::map<std::string, std::string>> inv;
};

class FiniteGroup {
 public:
  int order() const { return static_cast<int>(elements_.size()); }
  int unit() const { return unit_; }
  int mul(int a, int b) const { return mult_[a * order() + b]; }
  int inv(int a) const { return inv_[a]; }
  const std::string& element_id(int a) const { return elements_[a]; }
  std::optional<int> find(const std::string& id) const {
    auto it = std::find(elements_.begin(), elements_.end(), id);
    if (it == elements_.end()) return std::nullopt;
    return static_cast<int>(it - elements_.begin());
  }

  GroupPresentation presentation() const {
    GroupPresentation p{elements_, elements_[unit_], {}, std::map<std::string, std::string>{}};
    for (int a = 0; a < order(); ++a) {
      for (int b = 0; b < order(); ++b) p.mult.push_back({elements_[a], elements_[b], elements_[mul(a, b)]});
      (*p.inv)[elements_[a]] = elements_[inv_[a]];
    }
    return p;
  }

  bool operator==(const FiniteGroup&) const = default;

 private:
  std::vector<std::string> elements_;
  int unit_ = 0;
  std::vector<int> mult_;
  std::vector<int> inv_;

  friend FiniteGroup validate_group(const GroupPresentation& raw);
};

/// Checks totality and the group axioms by exhaustion. Element order is kept
/// as given.
inline FiniteGroup validate_group(const GroupPresentation& raw) {
  std::vector<Violation> errs;
  FiniteGroup G;
  G.elements_ = raw.elements;
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < raw.elements.size(); ++i)
    if (!index.emplace(raw.elements[i], static_cast<int>(i)).second)
      errs.push_back({"duplicate identifier", {"element " + raw.elements[i]}});
  if (raw.elements.empty()) errs.push_back({"group axioms", {"empty element set"}});
  auto u = index.find(raw.unit);
  if (u == index.end()) errs.push_back({"dangling identifier", {"unit " + raw.unit}});
  if (!errs.empty()) throw ValidationError(std::move(errs));
  G.unit_ = u->second;
  const int n = G.order();
  G.mult_.assign(static_cast<std::size_t>(n) * n, kNone);
  for (const auto& [a, b, c] : raw.mult) {
    auto ia = index.find(a), ib = index.find(b), ic = index.find(c);
    if (ia == index.end() || ib == index.end() || ic == index.end()) {
      errs.push_back({"dangling identifier", {"mult " + a + " * " + b + " = " + c}});
      continue;
    }
    auto& slot = G.mult_[ia->second * n + ib->second];
    if (slot != kNone && slot != ic->second) errs.push_back({"conflicting entry", {"mult " + a + " * " + b}});
    slot = ic->second;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (G.mul(a, b) == kNone) errs.push_back({"partial table", {"mult " + G.elements_[a] + " * " + G.elements_[b]}});
  if (!errs.empty()) throw ValidationError(std::move(errs));
  for (int a = 0; a < n; ++a) {
    if (G.mul(G.unit_, a) != a || G.mul(a, G.unit_) != a) errs.push_back({"group unit", {G.elements_[a]}});
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)))
          errs.push_back({"group associativity", {G.elements_[a], G.elements_[b], G.elements_[c]}});
  }
  G.inv_.assign(n, kNone);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (G.mul(a, b) == G.unit_ && G.mul(b, a) == G.unit_) G.inv_[a] = b;
  for (int a = 0; a < n; ++a)
    if (G.inv_[a] == kNone) errs.push_back({"group inverse", {G.elements_[a]}});
  if (raw.inv && errs.empty())
    for (const auto& [a, b] : *raw.inv) {
      auto ia = index.find(a), ib = index.find(b);
      if (ia == index.end() || ib == index.end()) errs.push_back({"dangling identifier", {"inv " + a}});
      else if (G.inv_[ia->second] != ib->second) errs.push_back({"group inverse", {"inv " + a + " = " + b}});
    }
  throw_if_any(std::move(errs));
  return G;
}

/// Cyclic group ℤ/n with elements "0".."n-1".
inline FiniteGroup cyclic_group(int n) {
  GroupPresentation p;
  for (int a = 0; a < n; ++a) p.elements.push_back(std::to_string(a));
  p.unit = "0";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) p.mult.push_back({p.elements[a], p.elements[b], p.elements[(a + b) % n]});
  return validate_group(p);
}

/// Object-indexed family of groups.
struct GroupFamily {
  std::map<std::string, FiniteGroup> groups;
};

namespace detail {

/// All group isomorphisms K → L as image vectors, in lexicographic order.
inline std::vector<std::vector<int>> isomorphisms(const FiniteGroup& K, const FiniteGroup& L) {
  std::vector<std::vector<int>> out;
  if (K.order() != L.order()) return out;
  const int n = K.order();
  std::vector<int> img(n, kNone);
  std::vector<bool> used(n, false);
  std::function<void(int)> go = [&](int a) {
    if (a == n) {
      out.push_back(img);
      return;
    }
    for (int b = 0; b < n; ++b) {
      if (used[b]) continue;
      img[a] = b;
      bool ok = (a != K.unit()) || b == L.unit();
      for (int x = 0; ok && x <= a; ++x) {
        const int xa = K.mul(x, a), ax = K.mul(a, x);
        if (xa <= a && img[xa] != L.mul(img[x], b)) ok = false;
        if (ax <= a && img[ax] != L.mul(b, img[x])) ok = false;
      }
      if (!ok) continue;
      used[b] = true;
      go(a + 1);
      used[b] = false;
    }
    img[a] = kNone;
  };
  go(0);
  return out;
}

}  // namespace detail

/// The 2-groupoid Aut(𝒦): objects the indices of the family, 1-cells the
/// group isomorphisms K_x → K_y, 2-cells φ ⇒ ψ the elements k of K_y with
/// k·φ(u)·k⁻¹ = ψ(u). Vertical composition multiplies in K_y; horizontal
/// composition of a: φ ⇒ ψ with b: χ ⇒ χ' is χ'(a)·b.
///
/// Identifiers: 1-cell "x->y:[img,...]" (images in the element order of K_x),
/// 2-cell "<1-cell>|k" for the 2-cell with source the named 1-cell.
inline TwoCat automorphism_two_groupoid(const GroupFamily& K) {
  struct Iso {
    std::string x, y;
    std::vector<int> img;
    std::string id;
  };
  std::vector<Iso> isos;
  std::map<std::pair<std::string, std::string>, std::map<std::vector<int>, std::size_t>> by_img;
  auto iso_id = [&](const std::string& x, const std::string& y, const std::vector<int>& img) {
    const FiniteGroup& L = K.groups.at(y);
    std::string id = x + "->" + y + ":[";
    for (std::size_t i = 0; i < img.size(); ++i) id += (i ? "," : "") + L.element_id(img[i]);
    return id + "]";
  };
  for (const auto& [x, Kx] : K.groups)
    for (const auto& [y, Ky] : K.groups)
      for (auto& img : detail::isomorphisms(Kx, Ky)) {
        by_img[{x, y}][img] = isos.size();
        isos.push_back({x, y, img, iso_id(x, y, img)});
      }

  TwoCatPresentation p;
  for (const auto& [x, Kx] : K.groups) {
    p.objects.push_back(x);
    std::vector<int> id(Kx.order());
    for (int a = 0; a < Kx.order(); ++a) id[a] = a;
    p.id1[x] = isos[by_img.at({x, x}).at(id)].id;
  }
  for (const auto& i : isos) p.one_cells.push_back({i.id, i.x, i.y});
  auto compose = [&](const Iso& phi, const Iso& psi) {
    std::vector<int> img;
    for (int v : phi.img) img.push_back(psi.img[v]);
    return by_img.at({phi.x, psi.y}).at(img);
  };
  for (const auto& phi : isos)
    for (const auto& psi : isos)
      if (phi.y == psi.x) p.comp1.push_back({phi.id, psi.id, isos[compose(phi, psi)].id});

  // 2-cells: (source iso, element k); target c_k ∘ φ.
  struct Cell {
    std::size_t src, tgt;
    int k;
    std::string id;
  };
  std::vector<Cell> cells;
  std::map<std::pair<std::size_t, int>, std::size_t> cell_of;
  for (std::size_t s = 0; s < isos.size(); ++s) {
    const FiniteGroup& L = K.groups.at(isos[s].y);
    for (int k = 0; k < L.order(); ++k) {
      std::vector<int> img;
      for (int v : isos[s].img) img.push_back(L.mul(L.mul(k, v), L.inv(k)));
      const std::size_t t = by_img.at({isos[s].x, isos[s].y}).at(img);
      cell_of[{s, k}] = cells.size();
      cells.push_back({s, t, k, isos[s].id + "|" + L.element_id(k)});
    }
  }
  for (const auto& c : cells) p.two_cells.push_back({c.id, isos[c.src].id, isos[c.tgt].id});
  for (std::size_t s = 0; s < isos.size(); ++s)
    p.id2[isos[s].id] = cells[cell_of.at({s, K.groups.at(isos[s].y).unit()})].id;
  for (const auto& a : cells)
    for (const auto& b : cells)
      if (a.tgt == b.src) {
        const FiniteGroup& L = K.groups.at(isos[a.src].y);
        p.vcomp.push_back({a.id, b.id, cells[cell_of.at({a.src, L.mul(b.k, a.k)})].id});
      }
  for (const auto& a : cells)
    for (const auto& b : cells)
      if (isos[a.src].y == isos[b.src].x) {
        const FiniteGroup& M = K.groups.at(isos[b.src].y);
        const int k = M.mul(isos[b.tgt].img[a.k], b.k);
        p.hcomp.push_back({a.id, b.id, cells[cell_of.at({compose(isos[a.src], isos[b.src]), k})].id});
      }
  return validate_two_category(p);
}

struct H2Options {
  /// Require the transformations connecting cocycles to have identity components.
  bool identity_components = false;
};

namespace detail {

struct CohomologySetup {
  TwoCatPtr dom, cod;
  std::vector<int> fix;
};

inline CohomologySetup cohomology_setup(const CategoryPresentation& G, const GroupFamily& K) {
  auto dom = share(from_category(G));
  std::vector<std::string> base;
  for (const auto& [x, _] : K.groups) base.push_back(x);
  std::vector<std::string> objs;
  for (int a = 0; a < dom->num_objects(); ++a) objs.push_back(dom->object_id(a));
  if (base != objs) throw ValidationError("base mismatch", {"family is not indexed by the objects of the groupoid"});
  if (!is_two_groupoid(*dom)) throw ValidationError("non-groupoid", {"some arrow of the category is not invertible"});
  auto cod = share(automorphism_two_groupoid(K));
  auto fix = objects_by_identifier(*dom, *cod);
  return {dom, cod, fix};
}

}  // namespace detail

/// H²: connected components of the identity-on-objects lax functors from the
/// groupoid G (2-discrete) into Aut(𝒦). Each item is a cocycle: its F1 is the
/// action part, its σ the factor set.
inline LaxClassPartition h2(const CategoryPresentation& G, const GroupFamily& K, const H2Options& opts,
                            SearchBudget& budget) {
  auto setup = detail::cohomology_setup(G, K);
  return pi0_lax(setup.dom, setup.cod, setup.fix, {opts.identity_components}, budget);
}

inline LaxClassPartition h2(const CategoryPresentation& G, const GroupFamily& K, const H2Options& opts = {}) {
  SearchBudget budget;
  return h2(G, K, opts, budget);
}

struct RepresentationReport {
  std::size_t lax_functors = 0;
  std::size_t cohomology_classes = 0;
  /// Class count when connecting transformations must have identity components.
  std::size_t cohomology_classes_identity_components = 0;
  std::size_t simplicial_maps = 0;
  std::size_t homotopy_classes = 0;
  /// Maps and classes restricted to maps that are the identity on vertices.
  std::size_t vertex_constrained_maps = 0;
  std::size_t homotopy_classes_vertex_constrained = 0;
  /// bijection[k] = vertex-constrained homotopy class hit by cohomology class k.
  std::vector<std::size_t> bijection;
  bool well_defined = false;
  bool injective = false;
  bool surjective = false;
  bool pass = false;
  /// The all-maps count differs from the vertex-constrained count.
  bool discrepancy = false;
  std::vector<std::string> notes;
  LaxClassPartition classes;
};

/// Compares H²(G, 𝒦) with homotopy classes [ner G, ner Aut 𝒦] on the
/// enumerated instance: class-of-F ↦ class-of-ner(F) must be well defined,
/// injective and surjective.
inline RepresentationReport representation_check(const CategoryPresentation& G, const GroupFamily& K,
                                                 const H2Options& opts, SearchBudget& budget) {
  RepresentationReport r;
  auto setup = detail::cohomology_setup(G, K);
  auto strict = pi0_lax(setup.dom, setup.cod, setup.fix, {true}, budget);
  r.cohomology_classes_identity_components = strict.num_classes();
  r.classes = opts.identity_components ? std::move(strict)
                                       : pi0_lax(setup.dom, setup.cod, setup.fix, {false}, budget);
  r.lax_functors = r.classes.items.size();
  r.cohomology_classes = r.classes.num_classes();

  const Nerve NC(setup.dom), ND(setup.cod);
  auto maps = enumerate_simplicial_maps(NC.sset(), ND.sset(), budget);
  r.simplicial_maps = maps.size();
  std::vector<SimplicialMap> constrained;
  for (const auto& m : maps)
    if (m.phi[0] == setup.fix) constrained.push_back(m);
  r.vertex_constrained_maps = constrained.size();
  const auto all = homotopy_partition(maps, budget);
  const auto vc = homotopy_partition(constrained, budget);
  r.homotopy_classes = all.num_classes();
  r.homotopy_classes_vertex_constrained = vc.num_classes();
  r.discrepancy = r.homotopy_classes != r.homotopy_classes_vertex_constrained;

  auto index_of = [&](const SimplicialMap& m) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < vc.items.size(); ++i)
      if (vc.items[i] == m) return i;
    return std::nullopt;
  };

  // Well defined: every functor's nerve is a constrained map, members of one
  // cohomology class land in one homotopy class, and each witness
  // transformation yields a valid homotopy between the two nerves.
  r.well_defined = true;
  std::vector<std::size_t> image(r.classes.items.size(), 0);
  for (std::size_t i = 0; i < r.classes.items.size(); ++i) {
    auto idx = index_of(nerve_of_lax_functor(r.classes.items[i], NC, ND));
    if (!idx) {
      r.well_defined = false;
      r.notes.push_back("nerve of functor " + std::to_string(i) + " is not among the enumerated maps");
      continue;
    }
    image[i] = vc.class_of(*idx);
  }
  r.bijection.assign(r.classes.num_classes(), 0);
  for (std::size_t k = 0; k < r.classes.num_classes(); ++k) {
    const auto& members = r.classes.classes[k];
    r.bijection[k] = image[members.front()];
    for (std::size_t i : members)
      if (image[i] != r.bijection[k]) {
        r.well_defined = false;
        r.notes.push_back("cohomology class " + std::to_string(k) + " splits across homotopy classes");
      }
  }
  for (const auto& e : r.classes.witnesses) {
    try {
      const Homotopy H = nerve_of_transformation(e.witness, NC, ND);
      if (!(H.src == nerve_of_lax_functor(e.witness.tgt, NC, ND)) ||
          !(H.tgt == nerve_of_lax_functor(e.witness.src, NC, ND))) {
        r.well_defined = false;
        r.notes.push_back("witness homotopy has the wrong endpoints");
      }
    } catch (const ValidationError& err) {
      r.well_defined = false;
      r.notes.push_back(std::string("witness transformation gives no homotopy: ") + err.what());
    }
  }

  auto sorted = r.bijection;
  std::sort(sorted.begin(), sorted.end());
  r.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  // Surjective: each constrained map reconstructs to an enumerated functor.
  std::vector<bool> hit(vc.num_classes(), false);
  for (std::size_t k : r.bijection) hit[k] = true;
  r.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  for (std::size_t i = 0; i < vc.items.size(); ++i) {
    try {
      const LaxFunctor F = reconstruct_lax_functor(vc.items[i], NC, ND);
      auto it = std::find(r.classes.items.begin(), r.classes.items.end(), F);
      if (it == r.classes.items.end()) {
        r.surjective = false;
        r.notes.push_back("reconstructed functor of map " + std::to_string(i) + " is not enumerated");
      } else if (image[static_cast<std::size_t>(it - r.classes.items.begin())] != vc.class_of(i)) {
        r.surjective = false;
        r.notes.push_back("map " + std::to_string(i) + " is not in the class of its reconstruction");
      }
    } catch (const ValidationError& err) {
      r.surjective = false;
      r.notes.push_back(std::string("map does not reconstruct: ") + err.what());
    }
  }
  if (r.discrepancy)
    r.notes.push_back("homotopy classes over all maps (" + std::to_string(r.homotopy_classes) +
                      ") differ from vertex-constrained classes (" +
                      std::to_string(r.homotopy_classes_vertex_constrained) + ")");
  r.pass = r.well_defined && r.injective && r.surjective;
  return r;
}

inline RepresentationReport representation_check(const CategoryPresentation& G, const GroupFamily& K,
                                                 const H2Options& opts = {}) {
  SearchBudget budget;
  return representation_check(G, K, opts, budget);
}

}  // namespace lfnerve
