#pragma once

// Normal lax 2-functors and lax 2-natural transformations between finite
// strict 2-categories: validation, composition, exhaustive enumeration and
// connected components.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lfnerve/error.hpp"
#include "lfnerve/partition.hpp"
#include "lfnerve/twocat.hpp"

namespace lfnerve {

using TwoCatPtr = std::shared_ptr<const TwoCat>;

inline TwoCatPtr share(TwoCat c) { return std::make_shared<const TwoCat>(std::move(c)); }

inline bool same_two_category(const TwoCatPtr& a, const TwoCatPtr& b) {
  return a == b || (a && b && *a == *b);
}

/// A normal lax 2-functor. sigma is a dense dom.num_one_cells()² table holding
/// σ_(f,g): F(g∘f) ⇒ F(g)∘F(f) on composable pairs and kNone elsewhere.
struct LaxFunctor {
  TwoCatPtr dom, cod;
  std::vector<int> obj;
  std::vector<int> one;
  std::vector<int> two;
  std::vector<int> sigma;

  int sig(int f, int g) const { return sigma[static_cast<std::size_t>(f) * dom->num_one_cells() + g]; }
  int& sig(int f, int g) { return sigma[static_cast<std::size_t>(f) * dom->num_one_cells() + g]; }

  bool operator==(const LaxFunctor& o) const {
    return obj == o.obj && one == o.one && two == o.two && sigma == o.sigma &&
           same_two_category(dom, o.dom) && same_two_category(cod, o.cod);
  }
};

struct SigmaDecl {
  std::string f, g, two_cell;
  bool operator==(const SigmaDecl&) const = default;
};

/// Identifier-keyed functor data as it appears in interchange files.
struct LaxFunctorData {
  std::map<std::string, std::string> F0, F1, F2;
  std::vector<SigmaDecl> sigma;
};

/// A lax transformation α: src ⇒ tgt with components α_A: src(A) → tgt(A) and
/// structure s_f: α_B∘src(f) ⇒ tgt(f)∘α_A.
struct LaxTransformation {
  LaxFunctor src, tgt;
  std::vector<int> components;
  std::vector<int> structure;

  bool operator==(const LaxTransformation&) const = default;
};

struct LaxTransformationData {
  std::map<std::string, std::string> components, structure;
};

namespace detail {

inline std::vector<int> nonidentity_one_cells(const TwoCat& c) {
  std::vector<int> out;
  for (int f = 0; f < c.num_one_cells(); ++f)
    if (!c.is_identity1(f)) out.push_back(f);
  return out;
}

inline std::vector<int> nonidentity_two_cells(const TwoCat& c) {
  std::vector<int> out;
  for (int a = 0; a < c.num_two_cells(); ++a)
    if (!c.is_identity2(a)) out.push_back(a);
  return out;
}

/// Composable pairs (f, g) of 1-cells, in lexicographic index order.
inline std::vector<std::pair<int, int>> composable_pairs(const TwoCat& c) {
  std::vector<std::pair<int, int>> out;
  for (int f = 0; f < c.num_one_cells(); ++f)
    for (int b = 0; b < c.num_objects(); ++b)
      for (int g : c.hom(c.tgt1(f), b)) out.emplace_back(f, g);
  std::sort(out.begin(), out.end());
  return out;
}

/// Horizontally composable pairs of 2-cells (a over A→B, b over B→C).
inline std::vector<std::pair<int, int>> hcomposable_pairs(const TwoCat& c) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < c.num_two_cells(); ++a)
    for (int b = 0; b < c.num_two_cells(); ++b)
      if (c.hcomp(a, b) != kNone) out.emplace_back(a, b);
  return out;
}

// Individual laws, shared by the validator and the enumerator.

inline bool local_functoriality_holds(const LaxFunctor& F, int a, int b) {
  const TwoCat& C = *F.dom;
  const TwoCat& D = *F.cod;
  return F.two[C.vcomp(a, b)] == D.vcomp(F.two[a], F.two[b]);
}

/// σ_(f',g') · F(b∗a) = (F b ∗ F a) · σ_(f,g) for a: f⇒f', b: g⇒g'.
inline bool sigma_naturality_holds(const LaxFunctor& F, int a, int b) {
  const TwoCat& C = *F.dom;
  const TwoCat& D = *F.cod;
  const int f = C.src2(a), f2 = C.tgt2(a), g = C.src2(b), g2 = C.tgt2(b);
  const int lhs = D.vcomp(F.two[C.hcomp(a, b)], F.sig(f2, g2));
  const int rhs = D.vcomp(F.sig(f, g), D.hcomp(F.two[a], F.two[b]));
  return lhs == rhs;
}

/// (F h ∗ σ_(f,g)) · σ_(g∘f,h) = (σ_(g,h) ∗ F f) · σ_(f,h∘g).
inline bool sigma_coherence_holds(const LaxFunctor& F, int f, int g, int h) {
  const TwoCat& C = *F.dom;
  const TwoCat& D = *F.cod;
  const int lhs = D.vcomp(F.sig(C.comp1(f, g), h), D.whisker_left(F.one[h], F.sig(f, g)));
  const int rhs = D.vcomp(F.sig(f, C.comp1(g, h)), D.whisker_right(F.sig(g, h), F.one[f]));
  return lhs == rhs;
}

inline bool transformation_naturality_holds(const LaxTransformation& t, int b) {
  const LaxFunctor& F = t.src;
  const LaxFunctor& G = t.tgt;
  const TwoCat& C = *F.dom;
  const TwoCat& D = *F.cod;
  const int f = C.src2(b), f2 = C.tgt2(b);
  const int A = C.src1(f), B = C.tgt1(f);
  const int lhs = D.vcomp(t.structure[f], D.hcomp(D.id2(t.components[A]), G.two[b]));
  const int rhs = D.vcomp(D.hcomp(F.two[b], D.id2(t.components[B])), t.structure[f2]);
  return lhs == rhs;
}

/// (G g ∗ s_f)·(s_g ∗ F f)·(α_C ∗ σ^F_(f,g)) = (σ^G_(f,g) ∗ α_A)·s_(g∘f).
inline bool transformation_coherence_holds(const LaxTransformation& t, int f, int g) {
  const LaxFunctor& F = t.src;
  const LaxFunctor& G = t.tgt;
  const TwoCat& C = *F.dom;
  const TwoCat& D = *F.cod;
  const int A = C.src1(f), Cc = C.tgt1(g);
  int lhs = D.whisker_left(t.components[Cc], F.sig(f, g));
  lhs = D.vcomp(lhs, D.whisker_right(t.structure[g], F.one[f]));
  lhs = D.vcomp(lhs, D.whisker_left(G.one[g], t.structure[f]));
  const int rhs = D.vcomp(t.structure[C.comp1(f, g)], D.whisker_right(G.sig(f, g), t.components[A]));
  return lhs == rhs;
}

}  // namespace detail

/// Lists every violated lax-functor law with witnesses; empty means valid.
/// Boundary failures suppress the algebraic checks that depend on them.
inline std::vector<Violation> lax_functor_violations(const LaxFunctor& F) {
  std::vector<Violation> errs;
  const TwoCat& C = *F.dom;
  const TwoCat& D = *F.cod;
  const int n1 = C.num_one_cells();
  auto in_range = [](const std::vector<int>& v, std::size_t n, int bound) {
    if (v.size() != n) return false;
    for (int x : v)
      if (x < 0 || x >= bound) return false;
    return true;
  };
  if (!in_range(F.obj, C.num_objects(), D.num_objects()) || !in_range(F.one, n1, D.num_one_cells()) ||
      !in_range(F.two, C.num_two_cells(), D.num_two_cells()) ||
      F.sigma.size() != static_cast<std::size_t>(n1) * n1) {
    errs.push_back({"partial table", {"lax functor maps are not total"}});
    return errs;
  }
  for (int f = 0; f < n1; ++f)
    if (D.src1(F.one[f]) != F.obj[C.src1(f)] || D.tgt1(F.one[f]) != F.obj[C.tgt1(f)])
      errs.push_back({"endpoint mismatch", {C.one_cell_id(f) + " -> " + D.one_cell_id(F.one[f])}});
  for (int a = 0; a < C.num_two_cells(); ++a)
    if (D.src2(F.two[a]) != F.one[C.src2(a)] || D.tgt2(F.two[a]) != F.one[C.tgt2(a)])
      errs.push_back({"endpoint mismatch", {C.two_cell_id(a) + " -> " + D.two_cell_id(F.two[a])}});
  const auto pairs = detail::composable_pairs(C);
  for (auto [f, g] : pairs) {
    const int s = F.sig(f, g);
    if (s < 0 || s >= D.num_two_cells()) {
      errs.push_back({"partial table", {"sigma " + detail::pair_witness(C.one_cell_id(f), C.one_cell_id(g))}});
      continue;
    }
    if (D.src2(s) != F.one[C.comp1(f, g)] || D.tgt2(s) != D.comp1(F.one[f], F.one[g]))
      errs.push_back({"sigma endpoints", {detail::pair_witness(C.one_cell_id(f), C.one_cell_id(g)),
                                          D.two_cell_id(s)}});
  }
  if (!errs.empty()) return errs;

  for (int A = 0; A < C.num_objects(); ++A)
    if (F.one[C.id1(A)] != D.id1(F.obj[A])) errs.push_back({"normality", {"identity 1-cell of " + C.object_id(A)}});
  for (int f = 0; f < n1; ++f) {
    if (F.two[C.id2(f)] != D.id2(F.one[f])) errs.push_back({"normality", {"identity 2-cell of " + C.one_cell_id(f)}});
    const int idA = C.id1(C.src1(f)), idB = C.id1(C.tgt1(f));
    if (F.sig(idA, f) != D.id2(F.one[f]) || F.sig(f, idB) != D.id2(F.one[f]))
      errs.push_back({"normality", {"sigma with identity on " + C.one_cell_id(f)}});
  }
  for (int a = 0; a < C.num_two_cells(); ++a)
    for (int b : C.two_cells_from(C.tgt2(a)))
      if (!detail::local_functoriality_holds(F, a, b))
        errs.push_back({"local functoriality", {C.two_cell_id(a), C.two_cell_id(b)}});
  for (auto [a, b] : detail::hcomposable_pairs(C))
    if (!detail::sigma_naturality_holds(F, a, b))
      errs.push_back({"sigma naturality", {C.two_cell_id(a), C.two_cell_id(b)}});
  for (auto [f, g] : pairs)
    for (int d = 0; d < C.num_objects(); ++d)
      for (int h : C.hom(C.tgt1(g), d))
        if (!detail::sigma_coherence_holds(F, f, g, h))
          errs.push_back({"coherence", {C.one_cell_id(f), C.one_cell_id(g), C.one_cell_id(h)}});
  return errs;
}

inline LaxFunctor identity_lax_functor(const TwoCatPtr& c) {
  LaxFunctor F{c, c, {}, {}, {}, {}};
  for (int a = 0; a < c->num_objects(); ++a) F.obj.push_back(a);
  for (int f = 0; f < c->num_one_cells(); ++f) F.one.push_back(f);
  for (int a = 0; a < c->num_two_cells(); ++a) F.two.push_back(a);
  F.sigma.assign(static_cast<std::size_t>(c->num_one_cells()) * c->num_one_cells(), kNone);
  for (auto [f, g] : detail::composable_pairs(*c)) F.sig(f, g) = c->id2(c->comp1(f, g));
  return F;
}

/// Builds a functor from identifier-keyed data. Missing sigma entries on pairs
/// containing an identity are filled by normality; all other gaps are errors.
inline LaxFunctor validate_lax_functor(const TwoCatPtr& dom, const TwoCatPtr& cod, const LaxFunctorData& data) {
  const TwoCat& C = *dom;
  const TwoCat& D = *cod;
  std::vector<Violation> errs;
  LaxFunctor F{dom, cod, std::vector<int>(C.num_objects(), kNone), std::vector<int>(C.num_one_cells(), kNone),
               std::vector<int>(C.num_two_cells(), kNone),
               std::vector<int>(static_cast<std::size_t>(C.num_one_cells()) * C.num_one_cells(), kNone)};
  auto map_into = [&](const std::map<std::string, std::string>& m, const char* name, auto find_src,
                      auto find_tgt, std::vector<int>& out, auto src_name) {
    for (const auto& [k, v] : m) {
      auto s = find_src(k);
      auto t = find_tgt(v);
      if (!s || !t) {
        errs.push_back({"dangling identifier", {std::string(name) + " " + k + " -> " + v}});
        continue;
      }
      out[*s] = *t;
    }
    for (std::size_t i = 0; i < out.size(); ++i)
      if (out[i] == kNone)
        errs.push_back({"partial table", {std::string(name) + " missing " + src_name(static_cast<int>(i))}});
  };
  map_into(data.F0, "F0", [&](auto& s) { return C.find_object(s); }, [&](auto& s) { return D.find_object(s); },
           F.obj, [&](int i) { return C.object_id(i); });
  map_into(data.F1, "F1", [&](auto& s) { return C.find_one_cell(s); },
           [&](auto& s) { return D.find_one_cell(s); }, F.one, [&](int i) { return C.one_cell_id(i); });
  map_into(data.F2, "F2", [&](auto& s) { return C.find_two_cell(s); },
           [&](auto& s) { return D.find_two_cell(s); }, F.two, [&](int i) { return C.two_cell_id(i); });
  for (const auto& s : data.sigma) {
    auto f = C.find_one_cell(s.f);
    auto g = C.find_one_cell(s.g);
    auto a = D.find_two_cell(s.two_cell);
    if (!f || !g || !a) {
      errs.push_back({"dangling identifier", {"sigma " + detail::pair_witness(s.f, s.g) + " -> " + s.two_cell}});
      continue;
    }
    if (C.comp1(*f, *g) == kNone) {
      errs.push_back({"non-composable entry", {"sigma " + detail::pair_witness(s.f, s.g)}});
      continue;
    }
    F.sig(*f, *g) = *a;
  }
  if (!errs.empty()) throw ValidationError(std::move(errs));
  for (auto [f, g] : detail::composable_pairs(C)) {
    if (F.sig(f, g) != kNone) continue;
    if (C.is_identity1(f)) F.sig(f, g) = D.id2(F.one[g]);
    else if (C.is_identity1(g)) F.sig(f, g) = D.id2(F.one[f]);
    else errs.push_back({"partial table", {"sigma " + detail::pair_witness(C.one_cell_id(f), C.one_cell_id(g))}});
  }
  if (!errs.empty()) throw ValidationError(std::move(errs));
  throw_if_any(lax_functor_violations(F));
  return F;
}

/// Identifier-keyed data of a functor, with sigma listed on every composable pair.
inline LaxFunctorData lax_functor_data(const LaxFunctor& F) {
  const TwoCat& C = *F.dom;
  const TwoCat& D = *F.cod;
  LaxFunctorData d;
  for (int a = 0; a < C.num_objects(); ++a) d.F0[C.object_id(a)] = D.object_id(F.obj[a]);
  for (int f = 0; f < C.num_one_cells(); ++f) d.F1[C.one_cell_id(f)] = D.one_cell_id(F.one[f]);
  for (int a = 0; a < C.num_two_cells(); ++a) d.F2[C.two_cell_id(a)] = D.two_cell_id(F.two[a]);
  for (auto [f, g] : detail::composable_pairs(C))
    d.sigma.push_back({C.one_cell_id(f), C.one_cell_id(g), D.two_cell_id(F.sig(f, g))});
  return d;
}

/// G∘F, with σ^{G∘F}_(f,g) = σ^G_(Ff,Fg) · G(σ^F_(f,g)).
inline LaxFunctor compose_lax_functors(const LaxFunctor& G, const LaxFunctor& F) {
  if (!same_two_category(F.cod, G.dom))
    throw ValidationError("domain mismatch", {"codomain of the first functor is not the domain of the second"});
  const TwoCat& C = *F.dom;
  const TwoCat& E = *G.cod;
  LaxFunctor H{F.dom, G.cod, {}, {}, {}, {}};
  for (int x : F.obj) H.obj.push_back(G.obj[x]);
  for (int x : F.one) H.one.push_back(G.one[x]);
  for (int x : F.two) H.two.push_back(G.two[x]);
  H.sigma.assign(F.sigma.size(), kNone);
  for (auto [f, g] : detail::composable_pairs(C))
    H.sig(f, g) = E.vcomp(G.two[F.sig(f, g)], G.sig(F.one[f], F.one[g]));
  return H;
}

/// Every violated transformation law with witnesses; empty means valid.
inline std::vector<Violation> lax_transformation_violations(const LaxTransformation& t) {
  std::vector<Violation> errs;
  const LaxFunctor& F = t.src;
  const LaxFunctor& G = t.tgt;
  if (!same_two_category(F.dom, G.dom) || !same_two_category(F.cod, G.cod)) {
    errs.push_back({"domain mismatch", {"functors are not parallel"}});
    return errs;
  }
  const TwoCat& C = *F.dom;
  const TwoCat& D = *F.cod;
  if (t.components.size() != static_cast<std::size_t>(C.num_objects()) ||
      t.structure.size() != static_cast<std::size_t>(C.num_one_cells())) {
    errs.push_back({"partial table", {"transformation maps are not total"}});
    return errs;
  }
  for (int A = 0; A < C.num_objects(); ++A) {
    const int c = t.components[A];
    if (c < 0 || c >= D.num_one_cells() || D.src1(c) != F.obj[A] || D.tgt1(c) != G.obj[A])
      errs.push_back({"component endpoint mismatch", {C.object_id(A)}});
  }
  if (!errs.empty()) return errs;
  for (int f = 0; f < C.num_one_cells(); ++f) {
    const int s = t.structure[f];
    const int A = C.src1(f), B = C.tgt1(f);
    if (s < 0 || s >= D.num_two_cells() || D.src2(s) != D.comp1(F.one[f], t.components[B]) ||
        D.tgt2(s) != D.comp1(t.components[A], G.one[f]))
      errs.push_back({"structure endpoint mismatch", {C.one_cell_id(f)}});
  }
  if (!errs.empty()) return errs;
  for (int A = 0; A < C.num_objects(); ++A)
    if (t.structure[C.id1(A)] != D.id2(t.components[A])) errs.push_back({"unit", {C.object_id(A)}});
  for (int b = 0; b < C.num_two_cells(); ++b)
    if (!detail::transformation_naturality_holds(t, b)) errs.push_back({"naturality", {C.two_cell_id(b)}});
  for (auto [f, g] : detail::composable_pairs(C))
    if (!detail::transformation_coherence_holds(t, f, g))
      errs.push_back({"coherence", {C.one_cell_id(f), C.one_cell_id(g)}});
  return errs;
}

inline LaxTransformation identity_transformation(const LaxFunctor& F) {
  LaxTransformation t{F, F, {}, {}};
  const TwoCat& D = *F.cod;
  for (int x : F.obj) t.components.push_back(D.id1(x));
  for (int x : F.one) t.structure.push_back(D.id2(x));
  return t;
}

inline LaxTransformation validate_lax_transformation(const LaxFunctor& F, const LaxFunctor& G,
                                                     const LaxTransformationData& data) {
  const TwoCat& C = *F.dom;
  const TwoCat& D = *F.cod;
  std::vector<Violation> errs;
  LaxTransformation t{F, G, std::vector<int>(C.num_objects(), kNone), std::vector<int>(C.num_one_cells(), kNone)};
  for (const auto& [k, v] : data.components) {
    auto a = C.find_object(k);
    auto c = D.find_one_cell(v);
    if (!a || !c) errs.push_back({"dangling identifier", {"components " + k + " -> " + v}});
    else t.components[*a] = *c;
  }
  for (const auto& [k, v] : data.structure) {
    auto f = C.find_one_cell(k);
    auto s = D.find_two_cell(v);
    if (!f || !s) errs.push_back({"dangling identifier", {"structure " + k + " -> " + v}});
    else t.structure[*f] = *s;
  }
  for (int A = 0; A < C.num_objects(); ++A)
    if (t.components[A] == kNone) errs.push_back({"partial table", {"components missing " + C.object_id(A)}});
  if (errs.empty())
    for (int f = 0; f < C.num_one_cells(); ++f)
      if (t.structure[f] == kNone) {
        if (C.is_identity1(f)) t.structure[f] = D.id2(t.components[C.src1(f)]);
        else errs.push_back({"partial table", {"structure missing " + C.one_cell_id(f)}});
      }
  if (!errs.empty()) throw ValidationError(std::move(errs));
  throw_if_any(lax_transformation_violations(t));
  return t;
}

inline LaxTransformationData lax_transformation_data(const LaxTransformation& t) {
  const TwoCat& C = *t.src.dom;
  const TwoCat& D = *t.src.cod;
  LaxTransformationData d;
  for (int A = 0; A < C.num_objects(); ++A) d.components[C.object_id(A)] = D.one_cell_id(t.components[A]);
  for (int f = 0; f < C.num_one_cells(); ++f) d.structure[C.one_cell_id(f)] = D.two_cell_id(t.structure[f]);
  return d;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

/// Bucket constraints by the last search variable they mention; position -1
/// means the constraint only mentions forced values.
template <class T>
struct Triggered {
  std::vector<T> initial;
  std::vector<std::vector<T>> at;

  explicit Triggered(std::size_t n) : at(n) {}
  void add(int pos, T c) { (pos < 0 ? initial : at[pos]).push_back(std::move(c)); }
};

class LaxFunctorSearch {
 public:
  LaxFunctorSearch(TwoCatPtr dom, TwoCatPtr cod, std::optional<std::vector<int>> fix, SearchBudget& budget)
      : C_(*dom), D_(*cod), fix_(std::move(fix)), budget_(budget),
        cur_{dom, cod, std::vector<int>(C_.num_objects(), kNone), std::vector<int>(C_.num_one_cells(), kNone),
             std::vector<int>(C_.num_two_cells(), kNone),
             std::vector<int>(static_cast<std::size_t>(C_.num_one_cells()) * C_.num_one_cells(), kNone)},
        free1_(nonidentity_one_cells(C_)), free2_(nonidentity_two_cells(C_)),
        vcomp_checks_(free2_.size()), sigma_checks_(0) {
    std::vector<int> pos2(C_.num_two_cells(), -1);
    for (std::size_t k = 0; k < free2_.size(); ++k) pos2[free2_[k]] = static_cast<int>(k);
    for (int a = 0; a < C_.num_two_cells(); ++a)
      for (int b : C_.two_cells_from(C_.tgt2(a))) {
        const int p = std::max({pos2[a], pos2[b], pos2[C_.vcomp(a, b)]});
        vcomp_checks_.add(p, {a, b, 0});
      }

    const int n1 = C_.num_one_cells();
    sigma_pos_.assign(static_cast<std::size_t>(n1) * n1, -1);
    for (auto [f, g] : composable_pairs(C_))
      if (!C_.is_identity1(f) && !C_.is_identity1(g)) {
        sigma_pos_[static_cast<std::size_t>(f) * n1 + g] = static_cast<int>(free_pairs_.size());
        free_pairs_.emplace_back(f, g);
      }
    sigma_checks_ = Triggered<Check>(free_pairs_.size());
    auto pos = [&](int f, int g) { return sigma_pos_[static_cast<std::size_t>(f) * n1 + g]; };
    for (auto [a, b] : hcomposable_pairs(C_)) {
      if (C_.is_identity2(a) && C_.is_identity2(b)) continue;
      const int p = std::max(pos(C_.src2(a), C_.src2(b)), pos(C_.tgt2(a), C_.tgt2(b)));
      sigma_checks_.add(p, {a, b, 1});
    }
    for (auto [f, g] : composable_pairs(C_))
      for (int d = 0; d < C_.num_objects(); ++d)
        for (int h : C_.hom(C_.tgt1(g), d)) {
          if (C_.is_identity1(f) || C_.is_identity1(g) || C_.is_identity1(h)) continue;
          const int p =
              std::max({pos(f, g), pos(C_.comp1(f, g), h), pos(g, h), pos(f, C_.comp1(g, h))});
          sigma_checks_.add(p, {f, g, 2, h});
        }
  }

  std::vector<LaxFunctor> run() {
    objects(0);
    return std::move(out_);
  }

 private:
  struct Check {
    int a, b, kind, c = 0;
  };

  bool holds(const Check& k) const {
    switch (k.kind) {
      case 0: return local_functoriality_holds(cur_, k.a, k.b);
      case 1: return sigma_naturality_holds(cur_, k.a, k.b);
      default: return sigma_coherence_holds(cur_, k.a, k.b, k.c);
    }
  }
  bool all_hold(const std::vector<Check>& ks) const {
    for (const auto& k : ks)
      if (!holds(k)) return false;
    return true;
  }

  void objects(int i) {
    if (i == C_.num_objects()) {
      for (int A = 0; A < C_.num_objects(); ++A) cur_.one[C_.id1(A)] = D_.id1(cur_.obj[A]);
      one_cells(0);
      return;
    }
    if (fix_) {
      budget_.charge();
      cur_.obj[i] = (*fix_)[i];
      objects(i + 1);
      return;
    }
    for (int x = 0; x < D_.num_objects(); ++x) {
      budget_.charge();
      cur_.obj[i] = x;
      objects(i + 1);
    }
  }

  void one_cells(std::size_t k) {
    if (k == free1_.size()) {
      for (int f = 0; f < C_.num_one_cells(); ++f) cur_.two[C_.id2(f)] = D_.id2(cur_.one[f]);
      if (all_hold(vcomp_checks_.initial)) two_cells(0);
      return;
    }
    const int f = free1_[k];
    for (int y : D_.hom(cur_.obj[C_.src1(f)], cur_.obj[C_.tgt1(f)])) {
      budget_.charge();
      cur_.one[f] = y;
      one_cells(k + 1);
    }
  }

  void two_cells(std::size_t k) {
    if (k == free2_.size()) {
      for (auto [f, g] : composable_pairs_cache()) {
        if (C_.is_identity1(f)) cur_.sig(f, g) = D_.id2(cur_.one[g]);
        else if (C_.is_identity1(g)) cur_.sig(f, g) = D_.id2(cur_.one[f]);
      }
      if (all_hold(sigma_checks_.initial)) sigmas(0);
      return;
    }
    const int a = free2_[k];
    for (int y : D_.two_cells_between(cur_.one[C_.src2(a)], cur_.one[C_.tgt2(a)])) {
      budget_.charge();
      cur_.two[a] = y;
      if (all_hold(vcomp_checks_.at[k])) two_cells(k + 1);
    }
  }

  void sigmas(std::size_t k) {
    if (k == free_pairs_.size()) {
      out_.push_back(cur_);
      return;
    }
    const auto [f, g] = free_pairs_[k];
    const int from = cur_.one[C_.comp1(f, g)];
    const int to = D_.comp1(cur_.one[f], cur_.one[g]);
    for (int y : D_.two_cells_between(from, to)) {
      budget_.charge();
      cur_.sig(f, g) = y;
      if (all_hold(sigma_checks_.at[k])) sigmas(k + 1);
    }
  }

  const std::vector<std::pair<int, int>>& composable_pairs_cache() {
    if (!pairs_) pairs_ = composable_pairs(C_);
    return *pairs_;
  }

  const TwoCat& C_;
  const TwoCat& D_;
  std::optional<std::vector<int>> fix_;
  SearchBudget& budget_;
  LaxFunctor cur_;
  std::vector<int> free1_, free2_;
  std::vector<std::pair<int, int>> free_pairs_;
  std::vector<int> sigma_pos_;
  Triggered<Check> vcomp_checks_;
  Triggered<Check> sigma_checks_;
  std::optional<std::vector<std::pair<int, int>>> pairs_;
  std::vector<LaxFunctor> out_;
};

}  // namespace detail

/// All normal lax functors dom → cod in canonical (lexicographic) order,
/// optionally with the object map fixed.
inline std::vector<LaxFunctor> enumerate_lax_functors(const TwoCatPtr& dom, const TwoCatPtr& cod,
                                                      const std::optional<std::vector<int>>& fix_objects,
                                                      SearchBudget& budget) {
  if (fix_objects && fix_objects->size() != static_cast<std::size_t>(dom->num_objects()))
    throw ValidationError("partial table", {"fix_objects does not cover every object"});
  return detail::LaxFunctorSearch(dom, cod, fix_objects, budget).run();
}

inline std::vector<LaxFunctor> enumerate_lax_functors(const TwoCatPtr& dom, const TwoCatPtr& cod,
                                                      const std::optional<std::vector<int>>& fix_objects = {}) {
  SearchBudget budget;
  return enumerate_lax_functors(dom, cod, fix_objects, budget);
}

/// Object map sending each object of dom to the object of cod with the same identifier.
inline std::vector<int> objects_by_identifier(const TwoCat& dom, const TwoCat& cod) {
  std::vector<int> out;
  for (int a = 0; a < dom.num_objects(); ++a) {
    auto b = cod.find_object(dom.object_id(a));
    if (!b) throw ValidationError("dangling identifier", {"no object " + dom.object_id(a) + " in codomain"});
    out.push_back(*b);
  }
  return out;
}

struct TransformationSearchOptions {
  bool identity_components = false;
  std::size_t max_results = static_cast<std::size_t>(-1);
};

/// All lax transformations F ⇒ G in canonical order.
inline std::vector<LaxTransformation> enumerate_lax_transformations(const LaxFunctor& F, const LaxFunctor& G,
                                                                    const TransformationSearchOptions& opts,
                                                                    SearchBudget& budget) {
  if (!same_two_category(F.dom, G.dom) || !same_two_category(F.cod, G.cod))
    throw ValidationError("domain mismatch", {"functors are not parallel"});
  const TwoCat& C = *F.dom;
  const TwoCat& D = *F.cod;
  std::vector<LaxTransformation> out;
  LaxTransformation cur{F, G, std::vector<int>(C.num_objects(), kNone), std::vector<int>(C.num_one_cells(), kNone)};
  const auto free1 = detail::nonidentity_one_cells(C);
  std::vector<int> pos(C.num_one_cells(), -1);
  for (std::size_t k = 0; k < free1.size(); ++k) pos[free1[k]] = static_cast<int>(k);

  struct Check {
    int kind, a, b;
  };
  detail::Triggered<Check> checks(free1.size());
  for (int b = 0; b < C.num_two_cells(); ++b)
    if (!C.is_identity2(b)) checks.add(std::max(pos[C.src2(b)], pos[C.tgt2(b)]), {0, b, 0});
  for (auto [f, g] : detail::composable_pairs(C))
    checks.add(std::max({pos[f], pos[g], pos[C.comp1(f, g)]}), {1, f, g});
  auto all_hold = [&](const std::vector<Check>& ks) {
    for (const auto& k : ks) {
      const bool ok = k.kind == 0 ? detail::transformation_naturality_holds(cur, k.a)
                                  : detail::transformation_coherence_holds(cur, k.a, k.b);
      if (!ok) return false;
    }
    return true;
  };

  std::function<void(std::size_t)> structure = [&](std::size_t k) {
    if (out.size() >= opts.max_results) return;
    if (k == free1.size()) {
      out.push_back(cur);
      return;
    }
    const int f = free1[k];
    const int from = D.comp1(F.one[f], cur.components[C.tgt1(f)]);
    const int to = D.comp1(cur.components[C.src1(f)], G.one[f]);
    for (int y : D.two_cells_between(from, to)) {
      budget.charge();
      cur.structure[f] = y;
      if (all_hold(checks.at[k])) structure(k + 1);
      if (out.size() >= opts.max_results) return;
    }
  };
  std::function<void(int)> components = [&](int A) {
    if (out.size() >= opts.max_results) return;
    if (A == C.num_objects()) {
      for (int x = 0; x < C.num_objects(); ++x) cur.structure[C.id1(x)] = D.id2(cur.components[x]);
      if (all_hold(checks.initial)) structure(0);
      return;
    }
    for (int y : D.hom(F.obj[A], G.obj[A])) {
      if (opts.identity_components && y != D.id1(F.obj[A])) continue;
      budget.charge();
      cur.components[A] = y;
      components(A + 1);
    }
  };
  components(0);
  return out;
}

inline std::vector<LaxTransformation> enumerate_lax_transformations(const LaxFunctor& F, const LaxFunctor& G,
                                                                    const TransformationSearchOptions& opts = {}) {
  SearchBudget budget;
  return enumerate_lax_transformations(F, G, opts, budget);
}

inline std::optional<LaxTransformation> find_lax_transformation(const LaxFunctor& F, const LaxFunctor& G,
                                                                bool identity_components, SearchBudget& budget) {
  auto found = enumerate_lax_transformations(F, G, {identity_components, 1}, budget);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

using LaxClassPartition = ClassPartition<LaxFunctor, LaxTransformation>;

struct Pi0Options {
  /// Require connecting transformations to have identity components.
  bool identity_components = false;
};

/// Connected components of the enumerated functors under "a lax
/// transformation exists in either direction". Each witness transformation
/// runs from its own src to its own tgt.
inline LaxClassPartition pi0_lax(const TwoCatPtr& dom, const TwoCatPtr& cod,
                                 const std::optional<std::vector<int>>& fix_objects, const Pi0Options& opts,
                                 SearchBudget& budget) {
  return partition_by(enumerate_lax_functors(dom, cod, fix_objects, budget),
                      [&](const LaxFunctor& F, const LaxFunctor& G) {
                        return find_lax_transformation(F, G, opts.identity_components, budget);
                      });
}

inline LaxClassPartition pi0_lax(const TwoCatPtr& dom, const TwoCatPtr& cod,
                                 const std::optional<std::vector<int>>& fix_objects = {},
                                 const Pi0Options& opts = {}) {
  SearchBudget budget;
  return pi0_lax(dom, cod, fix_objects, opts, budget);
}

}  // namespace lfnerve
