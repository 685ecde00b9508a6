#pragma once

// Finite strict 2-categories stored extensionally: cell sets plus total
// composition tables, validated exhaustively against the strict laws.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lfnerve/error.hpp"

namespace lfnerve {

inline constexpr int kNone = -1;

struct CellDecl {
  std::string id, src, tgt;
  bool operator==(const CellDecl&) const = default;
};

/// One table row. For comp1 the result is g∘f (f first); for vcomp it is g·f
/// (f first); for hcomp f lies over A→B, g over B→C and the result is g∗f.
struct CompDecl {
  std::string f, g, result;
  bool operator==(const CompDecl&) const = default;
};

struct TwoCatPresentation {
  std::vector<std::string> objects;
  std::vector<CellDecl> one_cells;
  std::map<std::string, std::string> id1;
  std::vector<CompDecl> comp1;
  std::vector<CellDecl> two_cells;
  std::map<std::string, std::string> id2;
  std::vector<CompDecl> vcomp;
  std::vector<CompDecl> hcomp;
};

/// A finite category: objects, arrows, identities and a composition table
/// (rows {f, g, g∘f}).
struct CategoryPresentation {
  std::vector<std::string> objects;
  std::vector<CellDecl> arrows;
  std::map<std::string, std::string> identities;
  std::vector<CompDecl> comp;
};

class TwoCat;
TwoCat validate_two_category(const TwoCatPresentation& raw);

/// A validated strict 2-category. Cells are indexed in lexicographic order of
/// their identifiers; composition lookups return kNone off their domain.
class TwoCat {
 public:
  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_one_cells() const { return static_cast<int>(one_.size()); }
  int num_two_cells() const { return static_cast<int>(two_.size()); }

  const std::string& object_id(int a) const { return objects_[a]; }
  const std::string& one_cell_id(int f) const { return one_[f].id; }
  const std::string& two_cell_id(int a) const { return two_[a].id; }

  int src1(int f) const { return one_[f].src; }
  int tgt1(int f) const { return one_[f].tgt; }
  int id1(int a) const { return id1_[a]; }
  bool is_identity1(int f) const { return id1_[one_[f].src] == f; }
  /// g∘f, defined when tgt1(f) == src1(g).
  int comp1(int f, int g) const { return comp1_[idx1(f, g)]; }

  int src2(int a) const { return two_[a].src; }
  int tgt2(int a) const { return two_[a].tgt; }
  int id2(int f) const { return id2_[f]; }
  bool is_identity2(int a) const { return id2_[two_[a].src] == a; }
  /// b·a (a first), defined when tgt2(a) == src2(b).
  int vcomp(int a, int b) const { return vcomp_[idx2(a, b)]; }
  /// b∗a with a over A→B and b over B→C.
  int hcomp(int a, int b) const { return hcomp_[idx2(a, b)]; }

  /// Left whiskering g∗a and right whiskering b∗f.
  int whisker_left(int g, int a) const { return hcomp(a, id2(g)); }
  int whisker_right(int b, int f) const { return hcomp(id2(f), b); }

  const std::vector<int>& hom(int a, int b) const { return hom_[a * num_objects() + b]; }
  const std::vector<int>& two_cells_between(int f, int g) const {
    static const std::vector<int> empty;
    auto it = between_.find({f, g});
    return it == between_.end() ? empty : it->second;
  }
  const std::vector<int>& two_cells_from(int f) const { return from_[f]; }

  std::optional<int> find_object(const std::string& id) const { return find(objects_, id); }
  std::optional<int> find_one_cell(const std::string& id) const { return find_cell(one_, id); }
  std::optional<int> find_two_cell(const std::string& id) const { return find_cell(two_, id); }

  /// Canonical presentation (sorted rows), suitable for serialization.
  TwoCatPresentation presentation() const {
    TwoCatPresentation p;
    p.objects = objects_;
    for (const auto& c : one_) p.one_cells.push_back({c.id, objects_[c.src], objects_[c.tgt]});
    for (int a = 0; a < num_objects(); ++a) p.id1[objects_[a]] = one_[id1_[a]].id;
    for (int f = 0; f < num_one_cells(); ++f)
      for (int g = 0; g < num_one_cells(); ++g)
        if (comp1(f, g) != kNone) p.comp1.push_back({one_[f].id, one_[g].id, one_[comp1(f, g)].id});
    for (const auto& c : two_) p.two_cells.push_back({c.id, one_[c.src].id, one_[c.tgt].id});
    for (int f = 0; f < num_one_cells(); ++f) p.id2[one_[f].id] = two_[id2_[f]].id;
    for (int a = 0; a < num_two_cells(); ++a)
      for (int b = 0; b < num_two_cells(); ++b) {
        if (vcomp(a, b) != kNone) p.vcomp.push_back({two_[a].id, two_[b].id, two_[vcomp(a, b)].id});
      }
    for (int a = 0; a < num_two_cells(); ++a)
      for (int b = 0; b < num_two_cells(); ++b) {
        if (hcomp(a, b) != kNone) p.hcomp.push_back({two_[a].id, two_[b].id, two_[hcomp(a, b)].id});
      }
    return p;
  }

  bool operator==(const TwoCat& o) const {
    return objects_ == o.objects_ && one_ == o.one_ && id1_ == o.id1_ && comp1_ == o.comp1_ &&
           two_ == o.two_ && id2_ == o.id2_ && vcomp_ == o.vcomp_ && hcomp_ == o.hcomp_;
  }

 private:
  struct Cell {
    std::string id;
    int src = kNone, tgt = kNone;
    bool operator==(const Cell&) const = default;
  };

  std::size_t idx1(int f, int g) const { return static_cast<std::size_t>(f) * one_.size() + g; }
  std::size_t idx2(int a, int b) const { return static_cast<std::size_t>(a) * two_.size() + b; }

  static std::optional<int> find(const std::vector<std::string>& v, const std::string& id) {
    auto it = std::lower_bound(v.begin(), v.end(), id);
    if (it == v.end() || *it != id) return std::nullopt;
    return static_cast<int>(it - v.begin());
  }
  static std::optional<int> find_cell(const std::vector<Cell>& v, const std::string& id) {
    auto it = std::lower_bound(v.begin(), v.end(), id,
                               [](const Cell& c, const std::string& s) { return c.id < s; });
    if (it == v.end() || it->id != id) return std::nullopt;
    return static_cast<int>(it - v.begin());
  }

  void index() {
    const int n0 = num_objects();
    hom_.assign(static_cast<std::size_t>(n0) * n0, {});
    for (int f = 0; f < num_one_cells(); ++f) hom_[one_[f].src * n0 + one_[f].tgt].push_back(f);
    between_.clear();
    from_.assign(one_.size(), {});
    for (int a = 0; a < num_two_cells(); ++a) {
      between_[{two_[a].src, two_[a].tgt}].push_back(a);
      from_[two_[a].src].push_back(a);
    }
  }

  std::vector<std::string> objects_;
  std::vector<Cell> one_;
  std::vector<int> id1_;
  std::vector<int> comp1_;
  std::vector<Cell> two_;
  std::vector<int> id2_;
  std::vector<int> vcomp_;
  std::vector<int> hcomp_;

  std::vector<std::vector<int>> hom_;
  std::map<std::pair<int, int>, std::vector<int>> between_;
  std::vector<std::vector<int>> from_;

  friend TwoCat validate_two_category(const TwoCatPresentation& raw);
};

namespace detail {

template <class Decl>
std::vector<std::string> sorted_ids(const std::vector<Decl>& decls) {
  std::vector<std::string> ids;
  for (const auto& d : decls) ids.push_back(d.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

inline std::string pair_witness(const std::string& a, const std::string& b) {
  return "(" + a + ", " + b + ")";
}

}  // namespace detail

/// Checks identifier references, table totality and every strict 2-category
/// law by exhaustion. Throws ValidationError listing every violation found.
inline TwoCat validate_two_category(const TwoCatPresentation& raw) {
  std::vector<Violation> errs;
  TwoCat c;

  auto check_unique = [&](const std::vector<std::string>& ids, const char* kind) {
    for (std::size_t i = 1; i < ids.size(); ++i)
      if (ids[i] == ids[i - 1]) errs.push_back({"duplicate identifier", {std::string(kind) + " " + ids[i]}});
  };

  c.objects_ = raw.objects;
  std::sort(c.objects_.begin(), c.objects_.end());
  check_unique(c.objects_, "object");

  auto one_ids = detail::sorted_ids(raw.one_cells);
  check_unique(one_ids, "one_cell");
  auto two_ids = detail::sorted_ids(raw.two_cells);
  check_unique(two_ids, "two_cell");
  if (!errs.empty()) throw ValidationError(std::move(errs));

  c.one_.resize(one_ids.size());
  for (const auto& d : raw.one_cells) {
    const int i = *TwoCat::find(one_ids, d.id);
    auto s = c.find_object(d.src);
    auto t = c.find_object(d.tgt);
    if (!s) errs.push_back({"dangling identifier", {"one_cell " + d.id + " src " + d.src}});
    if (!t) errs.push_back({"dangling identifier", {"one_cell " + d.id + " tgt " + d.tgt}});
    c.one_[i] = {d.id, s.value_or(kNone), t.value_or(kNone)};
  }
  c.two_.resize(two_ids.size());
  for (const auto& d : raw.two_cells) {
    const int i = *TwoCat::find(two_ids, d.id);
    int s = kNone, t = kNone;
    if (auto fs = TwoCat::find(one_ids, d.src)) s = *fs;
    else errs.push_back({"dangling identifier", {"two_cell " + d.id + " src " + d.src}});
    if (auto ft = TwoCat::find(one_ids, d.tgt)) t = *ft;
    else errs.push_back({"dangling identifier", {"two_cell " + d.id + " tgt " + d.tgt}});
    c.two_[i] = {d.id, s, t};
  }
  if (!errs.empty()) throw ValidationError(std::move(errs));

  const int n0 = c.num_objects(), n1 = c.num_one_cells(), n2 = c.num_two_cells();
  for (int a = 0; a < n2; ++a) {
    const auto& cell = c.two_[a];
    if (c.one_[cell.src].src != c.one_[cell.tgt].src || c.one_[cell.src].tgt != c.one_[cell.tgt].tgt)
      errs.push_back({"2-cell boundary not parallel", {cell.id}});
  }

  c.id1_.assign(n0, kNone);
  for (const auto& [obj, cell] : raw.id1) {
    auto a = c.find_object(obj);
    auto f = c.find_one_cell(cell);
    if (!a || !f) {
      errs.push_back({"dangling identifier", {"id1 " + obj + " -> " + cell}});
      continue;
    }
    if (c.one_[*f].src != *a || c.one_[*f].tgt != *a) errs.push_back({"id1 endpoints", {obj, cell}});
    c.id1_[*a] = *f;
  }
  for (int a = 0; a < n0; ++a)
    if (c.id1_[a] == kNone) errs.push_back({"partial table", {"id1 missing object " + c.objects_[a]}});

  c.id2_.assign(n1, kNone);
  for (const auto& [cell, two] : raw.id2) {
    auto f = c.find_one_cell(cell);
    auto a = c.find_two_cell(two);
    if (!f || !a) {
      errs.push_back({"dangling identifier", {"id2 " + cell + " -> " + two}});
      continue;
    }
    if (c.two_[*a].src != *f || c.two_[*a].tgt != *f) errs.push_back({"id2 endpoints", {cell, two}});
    c.id2_[*f] = *a;
  }
  for (int f = 0; f < n1; ++f)
    if (c.id2_[f] == kNone) errs.push_back({"partial table", {"id2 missing one_cell " + c.one_[f].id}});

  // Composition tables: fill, then check totality on the composable domain.
  auto fill = [&](const std::vector<CompDecl>& rows, std::vector<int>& table, int n, const char* name,
                  auto find_arg, auto composable) {
    table.assign(static_cast<std::size_t>(n) * n, kNone);
    for (const auto& r : rows) {
      auto f = find_arg(r.f);
      auto g = find_arg(r.g);
      auto res = find_arg(r.result);
      if (!f || !g || !res) {
        errs.push_back({"dangling identifier", {std::string(name) + " " + detail::pair_witness(r.f, r.g) +
                                                    " -> " + r.result}});
        continue;
      }
      if (!composable(*f, *g)) {
        errs.push_back({"non-composable entry", {std::string(name) + " " + detail::pair_witness(r.f, r.g)}});
        continue;
      }
      auto& slot = table[static_cast<std::size_t>(*f) * n + *g];
      if (slot != kNone && slot != *res)
        errs.push_back({"conflicting entry", {std::string(name) + " " + detail::pair_witness(r.f, r.g)}});
      slot = *res;
    }
  };
  auto find1 = [&](const std::string& s) { return c.find_one_cell(s); };
  auto find2 = [&](const std::string& s) { return c.find_two_cell(s); };
  auto comp1_ok = [&](int f, int g) { return c.one_[f].tgt == c.one_[g].src; };
  auto vcomp_ok = [&](int a, int b) { return c.two_[a].tgt == c.two_[b].src; };
  auto hcomp_ok = [&](int a, int b) { return c.one_[c.two_[a].src].tgt == c.one_[c.two_[b].src].src; };
  fill(raw.comp1, c.comp1_, n1, "comp1", find1, comp1_ok);
  fill(raw.vcomp, c.vcomp_, n2, "vcomp", find2, vcomp_ok);
  fill(raw.hcomp, c.hcomp_, n2, "hcomp", find2, hcomp_ok);

  for (int f = 0; f < n1; ++f)
    for (int g = 0; g < n1; ++g) {
      if (!comp1_ok(f, g)) continue;
      const int r = c.comp1(f, g);
      if (r == kNone) {
        errs.push_back({"partial table", {"comp1 " + detail::pair_witness(c.one_[f].id, c.one_[g].id)}});
      } else if (c.one_[r].src != c.one_[f].src || c.one_[r].tgt != c.one_[g].tgt) {
        errs.push_back({"comp1 endpoints", {detail::pair_witness(c.one_[f].id, c.one_[g].id), c.one_[r].id}});
      }
    }
  for (int a = 0; a < n2; ++a)
    for (int b = 0; b < n2; ++b) {
      if (vcomp_ok(a, b)) {
        const int r = c.vcomp(a, b);
        if (r == kNone)
          errs.push_back({"partial table", {"vcomp " + detail::pair_witness(c.two_[a].id, c.two_[b].id)}});
        else if (c.two_[r].src != c.two_[a].src || c.two_[r].tgt != c.two_[b].tgt)
          errs.push_back({"vcomp endpoints", {detail::pair_witness(c.two_[a].id, c.two_[b].id), c.two_[r].id}});
      }
    }
  if (!errs.empty()) throw ValidationError(std::move(errs));

  // hcomp boundaries need comp1 to be total.
  for (int a = 0; a < n2; ++a)
    for (int b = 0; b < n2; ++b) {
      if (!hcomp_ok(a, b)) continue;
      const int r = c.hcomp(a, b);
      if (r == kNone) {
        errs.push_back({"partial table", {"hcomp " + detail::pair_witness(c.two_[a].id, c.two_[b].id)}});
        continue;
      }
      const int want_src = c.comp1(c.two_[a].src, c.two_[b].src);
      const int want_tgt = c.comp1(c.two_[a].tgt, c.two_[b].tgt);
      if (c.two_[r].src != want_src || c.two_[r].tgt != want_tgt)
        errs.push_back({"hcomp endpoints", {detail::pair_witness(c.two_[a].id, c.two_[b].id), c.two_[r].id}});
    }
  if (!errs.empty()) throw ValidationError(std::move(errs));

  c.index();
  const auto& o1 = c.one_;
  const auto& o2 = c.two_;

  for (int f = 0; f < n1; ++f) {
    if (c.comp1(c.id1(o1[f].src), f) != f || c.comp1(f, c.id1(o1[f].tgt)) != f)
      errs.push_back({"comp1 unit", {o1[f].id}});
  }
  for (int f = 0; f < n1; ++f)
    for (int b = 0; b < n0; ++b)
      for (int g : c.hom(o1[f].tgt, b))
        for (int cc = 0; cc < n0; ++cc)
          for (int h : c.hom(b, cc))
            if (c.comp1(c.comp1(f, g), h) != c.comp1(f, c.comp1(g, h)))
              errs.push_back({"comp1 associativity", {o1[f].id, o1[g].id, o1[h].id}});

  for (int a = 0; a < n2; ++a) {
    if (c.vcomp(c.id2(o2[a].src), a) != a || c.vcomp(a, c.id2(o2[a].tgt)) != a)
      errs.push_back({"vcomp unit", {o2[a].id}});
    for (int b : c.two_cells_from(o2[a].tgt))
      for (int d : c.two_cells_from(o2[b].tgt))
        if (c.vcomp(c.vcomp(a, b), d) != c.vcomp(a, c.vcomp(b, d)))
          errs.push_back({"vcomp associativity", {o2[a].id, o2[b].id, o2[d].id}});
  }

  for (int f = 0; f < n1; ++f)
    for (int b = 0; b < n0; ++b)
      for (int g : c.hom(o1[f].tgt, b))
        if (c.hcomp(c.id2(f), c.id2(g)) != c.id2(c.comp1(f, g)))
          errs.push_back({"hcomp identity", {o1[f].id, o1[g].id}});

  // 2-cells grouped by source object, for horizontal enumeration.
  std::vector<std::vector<int>> by_src_obj(n0);
  for (int a = 0; a < n2; ++a) by_src_obj[o1[o2[a].src].src].push_back(a);
  auto tgt_obj = [&](int a) { return o1[o2[a].src].tgt; };

  for (int a = 0; a < n2; ++a) {
    const int aa = o1[o2[a].src].src, bb = tgt_obj(a);
    if (c.hcomp(c.id2(c.id1(aa)), a) != a || c.hcomp(a, c.id2(c.id1(bb))) != a)
      errs.push_back({"hcomp unit", {o2[a].id}});
    for (int b : by_src_obj[bb])
      for (int d : by_src_obj[tgt_obj(b)])
        if (c.hcomp(c.hcomp(a, b), d) != c.hcomp(a, c.hcomp(b, d)))
          errs.push_back({"hcomp associativity", {o2[a].id, o2[b].id, o2[d].id}});
  }

  // Interchange: (b'·b) ∗ (a'·a) = (b'∗a')·(b∗a).
  for (int a = 0; a < n2; ++a)
    for (int a2 : c.two_cells_from(o2[a].tgt))
      for (int b : by_src_obj[tgt_obj(a)])
        for (int b2 : c.two_cells_from(o2[b].tgt)) {
          const int lhs = c.hcomp(c.vcomp(a, a2), c.vcomp(b, b2));
          const int rhs = c.vcomp(c.hcomp(a, b), c.hcomp(a2, b2));
          if (lhs != rhs) errs.push_back({"interchange", {o2[a].id, o2[a2].id, o2[b].id, o2[b2].id}});
        }

  throw_if_any(std::move(errs));
  return c;
}

/// The simplex [n] as a 2-category: one 1-cell i→j for each i ≤ j and only
/// identity 2-cells.
inline TwoCat delta_two_category(int n) {
  CategoryPresentation p;
  auto arrow = [](int i, int j) { return std::to_string(i) + "->" + std::to_string(j); };
  for (int i = 0; i <= n; ++i) {
    p.objects.push_back(std::to_string(i));
    p.identities[std::to_string(i)] = arrow(i, i);
    for (int j = i; j <= n; ++j) p.arrows.push_back({arrow(i, j), std::to_string(i), std::to_string(j)});
  }
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k) p.comp.push_back({arrow(i, j), arrow(j, k), arrow(i, k)});
  TwoCatPresentation t;
  t.objects = p.objects;
  t.one_cells = p.arrows;
  t.id1 = p.identities;
  t.comp1 = p.comp;
  for (const auto& a : p.arrows) {
    const std::string cell = "id(" + a.id + ")";
    t.two_cells.push_back({cell, a.id, a.id});
    t.id2[a.id] = cell;
    t.vcomp.push_back({cell, cell, cell});
  }
  for (const auto& r : p.comp)
    t.hcomp.push_back({"id(" + r.f + ")", "id(" + r.g + ")", "id(" + r.result + ")"});
  return validate_two_category(t);
}

/// Identifier of the identity deformation of a 1-cell in a 2-discrete 2-category.
inline std::string discrete_two_cell_id(const std::string& arrow) { return "id(" + arrow + ")"; }

/// The 2-discrete 2-category on a finite category: its only 2-cells are identities.
inline TwoCat from_category(const CategoryPresentation& cat) {
  TwoCatPresentation t;
  t.objects = cat.objects;
  t.one_cells = cat.arrows;
  t.id1 = cat.identities;
  t.comp1 = cat.comp;
  for (const auto& a : cat.arrows) {
    const std::string cell = discrete_two_cell_id(a.id);
    t.two_cells.push_back({cell, a.id, a.id});
    t.id2[a.id] = cell;
    t.vcomp.push_back({cell, cell, cell});
  }
  for (const auto& r : cat.comp)
    t.hcomp.push_back({discrete_two_cell_id(r.f), discrete_two_cell_id(r.g), discrete_two_cell_id(r.result)});
  return validate_two_category(t);
}

/// Vertical inverse of a 2-cell, if one exists.
inline std::optional<int> vertical_inverse(const TwoCat& c, int a) {
  for (int b : c.two_cells_between(c.tgt2(a), c.src2(a)))
    if (c.vcomp(a, b) == c.id2(c.src2(a)) && c.vcomp(b, a) == c.id2(c.tgt2(a))) return b;
  return std::nullopt;
}

/// Strict inverse of a 1-cell under comp1, if one exists.
inline std::optional<int> inverse1(const TwoCat& c, int f) {
  for (int g : c.hom(c.tgt1(f), c.src1(f)))
    if (c.comp1(f, g) == c.id1(c.src1(f)) && c.comp1(g, f) == c.id1(c.tgt1(f))) return g;
  return std::nullopt;
}

inline bool is_two_groupoid(const TwoCat& c) {
  for (int f = 0; f < c.num_one_cells(); ++f)
    if (!inverse1(c, f)) return false;
  for (int a = 0; a < c.num_two_cells(); ++a)
    if (!vertical_inverse(c, a)) return false;
  return true;
}

/// 2-discrete: every 2-cell is an identity.
inline bool is_two_discrete(const TwoCat& c) {
  for (int a = 0; a < c.num_two_cells(); ++a)
    if (!c.is_identity2(a)) return false;
  return true;
}

}  // namespace lfnerve
