#pragma once

// The geometric nerve of a finite 2-category and its action on lax functors
// and lax transformations, with the inverse constructions.
//
// Conventions. A 2-simplex (g, h, f; α) has edges f: A0→A1, g: A1→A2,
// h: A0→A2 and interior α: h ⇒ g∘f; d0 = g, d1 = h, d2 = f. A 3-simplex is
// a commuting tetrahedron stored by its four faces d0 (ρ), d1 (φ), d2 (λ),
// d3 (β). Degeneracies insert identity edges with identity interiors.

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lfnerve/error.hpp"
#include "lfnerve/laxfun.hpp"
#include "lfnerve/simpl.hpp"
#include "lfnerve/twocat.hpp"

namespace lfnerve {

struct Triangle {
  int g, h, f, alpha;
  auto key() const { return std::array<int, 4>{g, h, f, alpha}; }
  bool operator==(const Triangle&) const = default;
};

/// True iff m∗β · φ = ρ∗f · λ as 2-cells k ⇒ m∘g∘f. Throws on faces that do
/// not fit together as a tetrahedron.
inline bool tetrahedron_commutes(const TwoCat& C, const Triangle& d0, const Triangle& d1, const Triangle& d2,
                                 const Triangle& d3) {
  const int g = d3.g, h = d3.h, f = d3.f;
  const int m = d0.g, l = d0.h, k = d1.h;
  if (d0.f != g || d1.g != m || d1.f != h || d2.g != l || d2.h != k || d2.f != f)
    throw ValidationError("incidence mismatch", {"faces do not share edges as a tetrahedron"});
  const int lhs = C.vcomp(d1.alpha, C.whisker_left(m, d3.alpha));
  const int rhs = C.vcomp(d2.alpha, C.whisker_right(d0.alpha, f));
  return lhs == rhs;
}

/// Geometric nerve of a 2-category, truncated at dimension 3 (coskeletal
/// above), together with the decoding of its 2- and 3-simplices.
class Nerve {
 public:
  explicit Nerve(TwoCatPtr cat) : cat_(std::move(cat)) { build(); }

  const TwoCatPtr& cat() const { return cat_; }
  const SSetPtr& sset() const { return sset_; }
  const TruncSSet& operator*() const { return *sset_; }
  const TruncSSet* operator->() const { return sset_.get(); }

  const Triangle& triangle(int x) const { return triangles_[x]; }
  const std::array<int, 4>& tetrahedron(int x) const { return tetrahedra_[x]; }

  std::optional<int> find_triangle(const Triangle& t) const {
    auto it = triangle_index_.find(t.key());
    if (it == triangle_index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<int> find_tetrahedron(const std::array<int, 4>& faces) const {
    auto it = tetra_index_.find(faces);
    if (it == tetra_index_.end()) return std::nullopt;
    return it->second;
  }

  int triangle_at(const Triangle& t) const {
    auto x = find_triangle(t);
    if (!x) throw ValidationError("not a 2-simplex", {triangle_id(t)});
    return *x;
  }
  int tetrahedron_at(const std::array<int, 4>& faces) const {
    auto x = find_tetrahedron(faces);
    if (!x)
      throw ValidationError("tetrahedron does not commute", {triangle_id(triangles_[faces[0]]), triangle_id(triangles_[faces[1]]),
                                                              triangle_id(triangles_[faces[2]]), triangle_id(triangles_[faces[3]])});
    return *x;
  }

  std::string triangle_id(const Triangle& t) const {
    const TwoCat& C = *cat_;
    return "(" + C.one_cell_id(t.g) + "," + C.one_cell_id(t.h) + "," + C.one_cell_id(t.f) + ";" +
           C.two_cell_id(t.alpha) + ")";
  }

 private:
  void build() {
    const TwoCat& C = *cat_;
    std::array<std::vector<std::string>, 4> ids;
    for (int a = 0; a < C.num_objects(); ++a) ids[0].push_back(C.object_id(a));
    for (int f = 0; f < C.num_one_cells(); ++f) ids[1].push_back(C.one_cell_id(f));

    for (int f = 0; f < C.num_one_cells(); ++f)
      for (int c = 0; c < C.num_objects(); ++c)
        for (int g : C.hom(C.tgt1(f), c))
          for (int h : C.hom(C.src1(f), c))
            for (int alpha : C.two_cells_between(h, C.comp1(f, g))) {
              const Triangle t{g, h, f, alpha};
              triangle_index_.emplace(t.key(), static_cast<int>(triangles_.size()));
              triangles_.push_back(t);
              ids[2].push_back(triangle_id(t));
            }

    std::map<int, std::vector<int>> by_f;
    std::map<std::pair<int, int>, std::vector<int>> by_gf;
    std::map<std::array<int, 3>, std::vector<int>> by_edges;
    for (int x = 0; x < static_cast<int>(triangles_.size()); ++x) {
      const auto& t = triangles_[x];
      by_f[t.f].push_back(x);
      by_gf[{t.g, t.f}].push_back(x);
      by_edges[{t.g, t.h, t.f}].push_back(x);
    }
    for (int x3 = 0; x3 < static_cast<int>(triangles_.size()); ++x3) {
      const auto& b = triangles_[x3];
      for (int x0 : by_f[b.g]) {
        const auto& r = triangles_[x0];
        for (int x1 : by_gf[{r.g, b.h}]) {
          const auto& p = triangles_[x1];
          for (int x2 : by_edges[{r.h, p.h, b.f}]) {
            if (!tetrahedron_commutes(C, r, p, triangles_[x2], b)) continue;
            const std::array<int, 4> faces{x0, x1, x2, x3};
            tetra_index_.emplace(faces, static_cast<int>(tetrahedra_.size()));
            tetrahedra_.push_back(faces);
            const auto& l = triangles_[x2];
            ids[3].push_back("(" + C.one_cell_id(b.f) + "," + C.one_cell_id(b.g) + "," + C.one_cell_id(r.g) + "," +
                             C.one_cell_id(b.h) + "," + C.one_cell_id(r.h) + "," + C.one_cell_id(p.h) + ";" +
                             C.two_cell_id(r.alpha) + "," + C.two_cell_id(p.alpha) + "," + C.two_cell_id(l.alpha) +
                             "," + C.two_cell_id(b.alpha) + ")");
          }
        }
      }
    }

    std::array<std::vector<std::vector<int>>, 4> faces;
    std::array<std::vector<std::vector<int>>, 3> degens;
    const int n1 = C.num_one_cells();
    const int n2 = static_cast<int>(triangles_.size());
    const int n3 = static_cast<int>(tetrahedra_.size());
    faces[1] = {std::vector<int>(n1), std::vector<int>(n1)};
    for (int f = 0; f < n1; ++f) {
      faces[1][0][f] = C.tgt1(f);
      faces[1][1][f] = C.src1(f);
    }
    faces[2].assign(3, std::vector<int>(n2));
    for (int x = 0; x < n2; ++x) {
      faces[2][0][x] = triangles_[x].g;
      faces[2][1][x] = triangles_[x].h;
      faces[2][2][x] = triangles_[x].f;
    }
    faces[3].assign(4, std::vector<int>(n3));
    for (int x = 0; x < n3; ++x)
      for (int i = 0; i < 4; ++i) faces[3][i][x] = tetrahedra_[x][i];

    degens[0] = {std::vector<int>(C.num_objects())};
    for (int a = 0; a < C.num_objects(); ++a) degens[0][0][a] = C.id1(a);
    degens[1].assign(2, std::vector<int>(n1));
    for (int f = 0; f < n1; ++f) {
      degens[1][0][f] = triangle_at({f, f, C.id1(C.src1(f)), C.id2(f)});
      degens[1][1][f] = triangle_at({C.id1(C.tgt1(f)), f, f, C.id2(f)});
    }
    // s_i on 2-simplices: the tetrahedron whose faces the simplicial
    // identities dictate.
    degens[2].assign(3, std::vector<int>(n2));
    for (int x = 0; x < n2; ++x)
      for (int i = 0; i <= 2; ++i) {
        std::array<int, 4> fs{};
        for (int j = 0; j <= 3; ++j) {
          if (j < i) fs[j] = degens[1][i - 1][faces[2][j][x]];
          else if (j == i || j == i + 1) fs[j] = x;
          else fs[j] = degens[1][i][faces[2][j - 1][x]];
        }
        degens[2][i][x] = tetrahedron_at(fs);
      }
    sset_ = share(TruncSSet(std::move(ids), std::move(faces), std::move(degens), true));
  }

  TwoCatPtr cat_;
  SSetPtr sset_;
  std::vector<Triangle> triangles_;
  std::vector<std::array<int, 4>> tetrahedra_;
  std::map<std::array<int, 4>, int> triangle_index_;
  std::map<std::array<int, 4>, int> tetra_index_;
};

inline TruncSSet nerve_of_two_category(const TwoCatPtr& C) { return *Nerve(C).sset(); }

namespace detail {

inline void require_nerve_of(const Nerve& N, const TwoCatPtr& C, const char* role) {
  if (!same_two_category(N.cat(), C))
    throw ValidationError("domain mismatch", {std::string(role) + " nerve is not the nerve of the given 2-category"});
}

}  // namespace detail

/// ner(F): F0, F1 on vertices and edges; (g,h,f;α) ↦ (Fg,Fh,Ff; σ_(f,g)·Fα);
/// 3-simplices by their faces.
inline SimplicialMap nerve_of_lax_functor(const LaxFunctor& F, const Nerve& NC, const Nerve& ND) {
  detail::require_nerve_of(NC, F.dom, "domain");
  detail::require_nerve_of(ND, F.cod, "codomain");
  const TwoCat& D = *F.cod;
  SimplicialMap m{NC.sset(), ND.sset(), {}};
  m.phi[0] = F.obj;
  m.phi[1] = F.one;
  for (int x = 0; x < NC->size(2); ++x) {
    const auto& t = NC.triangle(x);
    m.phi[2].push_back(ND.triangle_at({F.one[t.g], F.one[t.h], F.one[t.f], D.vcomp(F.two[t.alpha], F.sig(t.f, t.g))}));
  }
  for (int x = 0; x < NC->size(3); ++x) {
    std::array<int, 4> fs{};
    for (int i = 0; i < 4; ++i) fs[i] = m.phi[2][NC.tetrahedron(x)[i]];
    m.phi[3].push_back(ND.tetrahedron_at(fs));
  }
  return m;
}

inline SimplicialMap nerve_of_lax_functor(const LaxFunctor& F) {
  return nerve_of_lax_functor(F, Nerve(F.dom), Nerve(F.cod));
}

/// The lax functor whose nerve is Φ: F(α: h ⇒ f) is the interior of
/// Φ(1, h, f; α) and σ_(f,g) the interior of Φ(g, g∘f, f; 1). Only the data
/// in dimensions ≤ 2 is read; Φ is validated in full first.
inline LaxFunctor reconstruct_lax_functor(const SimplicialMap& phi, const Nerve& NC, const Nerve& ND) {
  if (!same_sset(phi.dom, NC.sset()) || !same_sset(phi.cod, ND.sset()))
    throw ValidationError("domain mismatch", {"map is not between the nerves of the given 2-categories"});
  throw_if_any(simplicial_map_violations(phi));
  const TwoCat& C = *NC.cat();
  LaxFunctor F{NC.cat(), ND.cat(), phi.phi[0], phi.phi[1], {}, {}};
  for (int a = 0; a < C.num_two_cells(); ++a) {
    const int h = C.src2(a), f = C.tgt2(a);
    const int x = NC.triangle_at({C.id1(C.tgt1(f)), h, f, a});
    F.two.push_back(ND.triangle(phi.phi[2][x]).alpha);
  }
  F.sigma.assign(static_cast<std::size_t>(C.num_one_cells()) * C.num_one_cells(), kNone);
  for (auto [f, g] : detail::composable_pairs(C)) {
    const int gf = C.comp1(f, g);
    const int x = NC.triangle_at({g, gf, f, C.id2(gf)});
    F.sig(f, g) = ND.triangle(phi.phi[2][x]).alpha;
  }
  throw_if_any(lax_functor_violations(F));
  return F;
}

/// For t: F ⇒ G (components F(A) → G(A)) the homotopy from ner(G) to ner(F):
/// h_0^0 = t_A, h_0^1(f) = (Gf, t_B∘Ff, t_A; s_f), h_1^1(f) = (t_B, t_B∘Ff, Ff; 1),
/// and the three level-2 components are the tetrahedra fixed by their faces.
inline Homotopy nerve_of_transformation(const LaxTransformation& t, const Nerve& NC, const Nerve& ND) {
  const LaxFunctor& lower = t.src;  // q side
  const LaxFunctor& upper = t.tgt;  // p side
  detail::require_nerve_of(NC, upper.dom, "domain");
  detail::require_nerve_of(ND, upper.cod, "codomain");
  const TwoCat& C = *upper.dom;
  const TwoCat& D = *upper.cod;
  Homotopy H{nerve_of_lax_functor(upper, NC, ND), nerve_of_lax_functor(lower, NC, ND), {}};
  const auto& a = t.components;
  const auto& s = t.structure;

  H.h[0] = {a};
  H.h[1].assign(2, std::vector<int>(C.num_one_cells()));
  for (int f = 0; f < C.num_one_cells(); ++f) {
    const int A = C.src1(f), B = C.tgt1(f);
    const int d = D.comp1(lower.one[f], a[B]);
    H.h[1][0][f] = ND.triangle_at({upper.one[f], d, a[A], s[f]});
    H.h[1][1][f] = ND.triangle_at({a[B], d, lower.one[f], D.id2(d)});
  }
  H.h[2].assign(3, std::vector<int>(NC->size(2)));
  for (int x = 0; x < NC->size(2); ++x) {
    const auto& tr = NC.triangle(x);
    const int A1 = C.tgt1(tr.f), A2 = C.tgt1(tr.g);
    const int psi = D.whisker_left(a[A2], D.vcomp(lower.two[tr.alpha], lower.sig(tr.f, tr.g)));
    const int phi = D.vcomp(psi, D.whisker_right(s[tr.g], lower.one[tr.f]));
    const int lower_h = D.comp1(lower.one[tr.h], a[A2]);
    const int front = ND.triangle_at({upper.one[tr.g], lower_h, D.comp1(lower.one[tr.f], a[A1]), phi});
    const int left = ND.triangle_at({D.comp1(lower.one[tr.g], a[A2]), lower_h, lower.one[tr.f], psi});
    H.h[2][0][x] = ND.tetrahedron_at({H.src.phi[2][x], front, H.h[1][0][tr.h], H.h[1][0][tr.f]});
    H.h[2][1][x] = ND.tetrahedron_at({H.h[1][0][tr.g], front, left, H.h[1][1][tr.f]});
    H.h[2][2][x] = ND.tetrahedron_at({H.h[1][1][tr.g], H.h[1][1][tr.h], left, H.tgt.phi[2][x]});
  }
  throw_if_any(homotopy_violations(H));
  return H;
}

inline Homotopy nerve_of_transformation(const LaxTransformation& t) {
  return nerve_of_transformation(t, Nerve(t.src.dom), Nerve(t.src.cod));
}

/// For a homotopy from ner(F) to ner(G) into the nerve of a 2-groupoid, the
/// lax transformation G ⇒ F with components h_0^0 and structure
/// s(f) = h_0^1(f) · h_1^1(f)⁻¹ on interiors.
inline LaxTransformation transformation_from_homotopy(const Homotopy& H, const LaxFunctor& F, const LaxFunctor& G,
                                                      const Nerve& NC, const Nerve& ND) {
  const TwoCat& C = *F.dom;
  const TwoCat& D = *F.cod;
  if (!is_two_groupoid(D))
    throw ValidationError("2-cell inverse unavailable", {"codomain is not a 2-groupoid"});
  if (!(H.src == nerve_of_lax_functor(F, NC, ND)) || !(H.tgt == nerve_of_lax_functor(G, NC, ND)))
    throw ValidationError("domain mismatch", {"homotopy does not run from ner(F) to ner(G)"});
  throw_if_any(homotopy_violations(H));
  LaxTransformation t{G, F, H.h[0][0], std::vector<int>(C.num_one_cells())};
  for (int f = 0; f < C.num_one_cells(); ++f) {
    const int upper = ND.triangle(H.h[1][0][f]).alpha;
    const int lower = ND.triangle(H.h[1][1][f]).alpha;
    t.structure[f] = D.vcomp(*vertical_inverse(D, lower), upper);
  }
  throw_if_any(lax_transformation_violations(t));
  return t;
}

inline LaxTransformation transformation_from_homotopy(const Homotopy& H, const LaxFunctor& F, const LaxFunctor& G) {
  return transformation_from_homotopy(H, F, G, Nerve(F.dom), Nerve(F.cod));
}

}  // namespace lfnerve
