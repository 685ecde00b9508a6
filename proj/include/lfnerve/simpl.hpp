#pragma once

// 3-truncated simplicial sets with an optional coskeletal-above-3 reading,
// simplicial maps, combinatorial homotopies and the classic category nerve.

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lfnerve/error.hpp"
#include "lfnerve/partition.hpp"
#include "lfnerve/twocat.hpp"

namespace lfnerve {

inline constexpr int kTopLevel = 3;

struct OperatorDecl {
  int level = 0, index = 0;
  std::string from, to;
};

struct TruncSSetPresentation {
  std::array<std::vector<std::string>, 4> simplices;
  std::vector<OperatorDecl> faces;   // level = dimension of `from`, 1..3
  std::vector<OperatorDecl> degens;  // level = dimension of `from`, 0..2
  bool coskeletal = false;
};

/// Simplices of dimensions 0..3 with face maps d_i: S_n → S_{n-1} and
/// degeneracies s_i: S_n → S_{n+1}. With `coskeletal` set, 4-simplices are
/// read as compatible families of five 3-simplices.
class TruncSSet {
 public:
  TruncSSet() = default;

  /// faces[n][i][x] for n in 1..3; degens[n][i][x] for n in 0..2.
  TruncSSet(std::array<std::vector<std::string>, 4> ids, std::array<std::vector<std::vector<int>>, 4> faces,
            std::array<std::vector<std::vector<int>>, 3> degens, bool coskeletal)
      : ids_(std::move(ids)), faces_(std::move(faces)), degens_(std::move(degens)), coskeletal_(coskeletal) {
    build_indices();
  }

  int size(int n) const { return static_cast<int>(ids_[n].size()); }
  const std::string& id(int n, int x) const { return ids_[n][x]; }
  int face(int n, int i, int x) const { return faces_[n][i][x]; }
  int degen(int n, int i, int x) const { return degens_[n][i][x]; }
  bool coskeletal() const { return coskeletal_; }

  std::optional<int> find(int n, const std::string& id) const {
    auto it = lookup_[n].find(id);
    if (it == lookup_[n].end()) return std::nullopt;
    return it->second;
  }

  std::vector<int> boundary(int n, int x) const {
    std::vector<int> out;
    for (int i = 0; i <= n; ++i) out.push_back(face(n, i, x));
    return out;
  }

  /// Simplices of dimension n whose boundary is exactly `faces`.
  const std::vector<int>& with_boundary(int n, const std::vector<int>& faces) const {
    static const std::vector<int> empty;
    auto it = by_boundary_[n].find(faces);
    return it == by_boundary_[n].end() ? empty : it->second;
  }

  /// Simplices of dimension n whose d_0 face is y.
  const std::vector<int>& with_face0(int n, int y) const {
    static const std::vector<int> empty;
    if (y < 0 || static_cast<std::size_t>(y) >= by_face0_[n].size()) return empty;
    return by_face0_[n][y];
  }

  /// First (k, w) with s_k(w) = x, if x is degenerate (n ≥ 1).
  std::optional<std::pair<int, int>> degenerate_from(int n, int x) const {
    if (n == 0 || degenerate_[n][x].first < 0) return std::nullopt;
    return degenerate_[n][x];
  }

  TruncSSetPresentation presentation() const {
    TruncSSetPresentation p;
    p.simplices = ids_;
    p.coskeletal = coskeletal_;
    for (int n = 1; n <= kTopLevel; ++n)
      for (int i = 0; i <= n; ++i)
        for (int x = 0; x < size(n); ++x) p.faces.push_back({n, i, id(n, x), id(n - 1, face(n, i, x))});
    for (int n = 0; n < kTopLevel; ++n)
      for (int i = 0; i <= n; ++i)
        for (int x = 0; x < size(n); ++x) p.degens.push_back({n, i, id(n, x), id(n + 1, degen(n, i, x))});
    return p;
  }

  bool operator==(const TruncSSet& o) const {
    return ids_ == o.ids_ && faces_ == o.faces_ && degens_ == o.degens_ && coskeletal_ == o.coskeletal_;
  }

 private:
  void build_indices() {
    for (int n = 0; n <= kTopLevel; ++n) {
      lookup_[n].clear();
      for (int x = 0; x < size(n); ++x) lookup_[n].emplace(ids_[n][x], x);
      by_boundary_[n].clear();
      by_face0_[n].assign(n > 0 ? size(n - 1) : 0, {});
      degenerate_[n].assign(size(n), {-1, -1});
    }
    for (int n = 1; n <= kTopLevel; ++n)
      for (int x = 0; x < size(n); ++x) {
        by_boundary_[n][boundary(n, x)].push_back(x);
        const int y = face(n, 0, x);
        if (y >= 0 && y < size(n - 1)) by_face0_[n][y].push_back(x);
      }
    for (int n = 0; n < kTopLevel; ++n)
      for (int k = 0; k <= n; ++k)
        for (int w = 0; w < size(n); ++w) {
          const int x = degens_[n][k][w];
          if (x >= 0 && x < size(n + 1) && degenerate_[n + 1][x].first < 0) degenerate_[n + 1][x] = {k, w};
        }
  }

  std::array<std::vector<std::string>, 4> ids_;
  std::array<std::vector<std::vector<int>>, 4> faces_;
  std::array<std::vector<std::vector<int>>, 3> degens_;
  bool coskeletal_ = false;

  std::array<std::unordered_map<std::string, int>, 4> lookup_;
  std::array<std::map<std::vector<int>, std::vector<int>>, 4> by_boundary_;
  std::array<std::vector<std::vector<int>>, 4> by_face0_;
  std::array<std::vector<std::pair<int, int>>, 4> degenerate_;
};

using SSetPtr = std::shared_ptr<const TruncSSet>;

inline SSetPtr share(TruncSSet x) { return std::make_shared<const TruncSSet>(std::move(x)); }

inline bool same_sset(const SSetPtr& a, const SSetPtr& b) { return a == b || (a && b && *a == *b); }

namespace detail {

inline std::string simplex_witness(const TruncSSet& X, int n, int x) {
  return "level " + std::to_string(n) + " simplex " + X.id(n, x);
}

inline std::string op_name(char op, int i) { return std::string(1, op) + "_" + std::to_string(i); }

}  // namespace detail

/// Checks every simplicial identity whose two sides stay within dimension 3.
inline std::vector<Violation> trunc_sset_violations(const TruncSSet& X) {
  std::vector<Violation> errs;
  using detail::op_name;
  auto law = [](const std::string& lhs, const std::string& rhs) { return lhs + " = " + rhs; };
  // d_i d_j = d_{j-1} d_i, i < j
  for (int n = 2; n <= kTopLevel; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        for (int x = 0; x < X.size(n); ++x)
          if (X.face(n - 1, i, X.face(n, j, x)) != X.face(n - 1, j - 1, X.face(n, i, x)))
            errs.push_back({law(op_name('d', i) + " " + op_name('d', j), op_name('d', j - 1) + " " + op_name('d', i)),
                            {detail::simplex_witness(X, n, x)}});
  for (int n = 0; n < kTopLevel; ++n)
    for (int j = 0; j <= n; ++j)
      for (int x = 0; x < X.size(n); ++x) {
        const int y = X.degen(n, j, x);
        for (int i = 0; i <= n + 1; ++i) {
          const int lhs = X.face(n + 1, i, y);
          int rhs;
          std::string l;
          if (i < j) {
            rhs = X.degen(n - 1, j - 1, X.face(n, i, x));
            l = law(op_name('d', i) + " " + op_name('s', j), op_name('s', j - 1) + " " + op_name('d', i));
          } else if (i == j || i == j + 1) {
            rhs = x;
            l = law(op_name('d', i) + " " + op_name('s', j), "id");
          } else {
            rhs = X.degen(n - 1, j, X.face(n, i - 1, x));
            l = law(op_name('d', i) + " " + op_name('s', j), op_name('s', j) + " " + op_name('d', i - 1));
          }
          if (lhs != rhs) errs.push_back({l, {detail::simplex_witness(X, n, x)}});
        }
      }
  // s_i s_j = s_{j+1} s_i, i ≤ j
  for (int n = 0; n + 2 <= kTopLevel; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        for (int x = 0; x < X.size(n); ++x)
          if (X.degen(n + 1, i, X.degen(n, j, x)) != X.degen(n + 1, j + 1, X.degen(n, i, x)))
            errs.push_back({law(op_name('s', i) + " " + op_name('s', j), op_name('s', j + 1) + " " + op_name('s', i)),
                            {detail::simplex_witness(X, n, x)}});
  return errs;
}

/// Builds and checks a truncated simplicial set from identifier-keyed data.
inline TruncSSet validate_trunc_sset(const TruncSSetPresentation& raw) {
  std::vector<Violation> errs;
  std::array<std::unordered_map<std::string, int>, 4> index;
  for (int n = 0; n <= kTopLevel; ++n)
    for (std::size_t x = 0; x < raw.simplices[n].size(); ++x)
      if (!index[n].emplace(raw.simplices[n][x], static_cast<int>(x)).second)
        errs.push_back({"duplicate identifier", {"level " + std::to_string(n) + " simplex " + raw.simplices[n][x]}});
  if (!errs.empty()) throw ValidationError(std::move(errs));

  std::array<std::vector<std::vector<int>>, 4> faces;
  std::array<std::vector<std::vector<int>>, 3> degens;
  for (int n = 1; n <= kTopLevel; ++n) faces[n].assign(n + 1, std::vector<int>(raw.simplices[n].size(), kNone));
  for (int n = 0; n < kTopLevel; ++n) degens[n].assign(n + 1, std::vector<int>(raw.simplices[n].size(), kNone));

  auto apply = [&](const OperatorDecl& d, bool is_face) {
    const char* what = is_face ? "face" : "degeneracy";
    const int lo = is_face ? 1 : 0, hi = is_face ? kTopLevel : kTopLevel - 1;
    if (d.level < lo || d.level > hi || d.index < 0 || d.index > d.level) {
      errs.push_back({"operator out of range", {std::string(what) + " level " + std::to_string(d.level) + " index " +
                                                std::to_string(d.index)}});
      return;
    }
    const int to_level = is_face ? d.level - 1 : d.level + 1;
    auto from = index[d.level].find(d.from);
    auto to = index[to_level].find(d.to);
    if (from == index[d.level].end() || to == index[to_level].end()) {
      errs.push_back({"dangling simplex reference", {std::string(what) + " " + d.from + " -> " + d.to}});
      return;
    }
    auto& slot = is_face ? faces[d.level][d.index][from->second] : degens[d.level][d.index][from->second];
    if (slot != kNone && slot != to->second)
      errs.push_back({"conflicting entry", {std::string(what) + " " + d.from}});
    slot = to->second;
  };
  for (const auto& d : raw.faces) apply(d, true);
  for (const auto& d : raw.degens) apply(d, false);
  for (int n = 1; n <= kTopLevel; ++n)
    for (int i = 0; i <= n; ++i)
      for (std::size_t x = 0; x < raw.simplices[n].size(); ++x)
        if (faces[n][i][x] == kNone)
          errs.push_back({"partial table", {"d_" + std::to_string(i) + " of level " + std::to_string(n) + " simplex " +
                                            raw.simplices[n][x]}});
  for (int n = 0; n < kTopLevel; ++n)
    for (int i = 0; i <= n; ++i)
      for (std::size_t x = 0; x < raw.simplices[n].size(); ++x)
        if (degens[n][i][x] == kNone)
          errs.push_back({"partial table", {"s_" + std::to_string(i) + " of level " + std::to_string(n) + " simplex " +
                                            raw.simplices[n][x]}});
  if (!errs.empty()) throw ValidationError(std::move(errs));
  TruncSSet X(raw.simplices, std::move(faces), std::move(degens), raw.coskeletal);
  throw_if_any(trunc_sset_violations(X));
  return X;
}

/// The edge path v0→v1→…→vn of an n-simplex, as level-1 simplices.
inline std::vector<int> spine(const TruncSSet& X, int n, int x) {
  if (n == 0) return {};
  if (n == 1) return {x};
  // Drop the last vertex for the initial part, the first n-1 vertices for the last edge.
  std::vector<int> out = spine(X, n - 1, X.face(n, n, x));
  int last = x;
  for (int m = n; m > 1; --m) last = X.face(m, 0, last);
  out.push_back(last);
  return out;
}

// ---------------------------------------------------------------------------
// Simplicial maps

struct SimplicialMap {
  SSetPtr dom, cod;
  std::array<std::vector<int>, 4> phi;

  bool operator==(const SimplicialMap& o) const {
    return phi == o.phi && same_sset(dom, o.dom) && same_sset(cod, o.cod);
  }
};

struct SimplicialMapData {
  std::array<std::map<std::string, std::string>, 4> phi;
};

inline std::vector<Violation> simplicial_map_violations(const SimplicialMap& m) {
  std::vector<Violation> errs;
  const TruncSSet& X = *m.dom;
  const TruncSSet& Y = *m.cod;
  for (int n = 0; n <= kTopLevel; ++n) {
    bool ok = m.phi[n].size() == static_cast<std::size_t>(X.size(n));
    for (int y : m.phi[n]) ok = ok && y >= 0 && y < Y.size(n);
    if (!ok) errs.push_back({"level mismatch", {"level " + std::to_string(n) + " map is not total"}});
  }
  if (!errs.empty()) return errs;
  for (int n = 1; n <= kTopLevel; ++n)
    for (int i = 0; i <= n; ++i)
      for (int x = 0; x < X.size(n); ++x)
        if (m.phi[n - 1][X.face(n, i, x)] != Y.face(n, i, m.phi[n][x]))
          errs.push_back({"naturality: " + detail::op_name('d', i), {detail::simplex_witness(X, n, x)}});
  for (int n = 0; n < kTopLevel; ++n)
    for (int i = 0; i <= n; ++i)
      for (int x = 0; x < X.size(n); ++x)
        if (m.phi[n + 1][X.degen(n, i, x)] != Y.degen(n, i, m.phi[n][x]))
          errs.push_back({"naturality: " + detail::op_name('s', i), {detail::simplex_witness(X, n, x)}});
  return errs;
}

inline SimplicialMap validate_simplicial_map(const SSetPtr& X, const SSetPtr& Y, const SimplicialMapData& data) {
  std::vector<Violation> errs;
  SimplicialMap m{X, Y, {}};
  for (int n = 0; n <= kTopLevel; ++n) {
    m.phi[n].assign(X->size(n), kNone);
    for (const auto& [k, v] : data.phi[n]) {
      auto x = X->find(n, k);
      auto y = Y->find(n, v);
      if (!x || !y) errs.push_back({"dangling simplex reference", {"level " + std::to_string(n) + " " + k + " -> " + v}});
      else m.phi[n][*x] = *y;
    }
    for (int x = 0; x < X->size(n); ++x)
      if (m.phi[n][x] == kNone) errs.push_back({"level mismatch", {"unmapped " + detail::simplex_witness(*X, n, x)}});
  }
  if (!errs.empty()) throw ValidationError(std::move(errs));
  throw_if_any(simplicial_map_violations(m));
  return m;
}

inline SimplicialMapData simplicial_map_data(const SimplicialMap& m) {
  SimplicialMapData d;
  for (int n = 0; n <= kTopLevel; ++n)
    for (int x = 0; x < m.dom->size(n); ++x) d.phi[n][m.dom->id(n, x)] = m.cod->id(n, m.phi[n][x]);
  return d;
}

inline SimplicialMap identity_map(const SSetPtr& X) {
  SimplicialMap m{X, X, {}};
  for (int n = 0; n <= kTopLevel; ++n)
    for (int x = 0; x < X->size(n); ++x) m.phi[n].push_back(x);
  return m;
}

/// The map collapsing X onto the totally degenerate simplices over vertex v of Y.
inline SimplicialMap constant_map(const SSetPtr& X, const SSetPtr& Y, int v) {
  SimplicialMap m{X, Y, {}};
  std::array<int, 4> point{v, 0, 0, 0};
  for (int n = 1; n <= kTopLevel; ++n) point[n] = Y->degen(n - 1, 0, point[n - 1]);
  for (int n = 0; n <= kTopLevel; ++n) m.phi[n].assign(X->size(n), point[n]);
  return m;
}

/// second ∘ first.
inline SimplicialMap compose_maps(const SimplicialMap& second, const SimplicialMap& first) {
  if (!same_sset(first.cod, second.dom))
    throw ValidationError("level mismatch", {"maps are not composable"});
  SimplicialMap m{first.dom, second.cod, {}};
  for (int n = 0; n <= kTopLevel; ++n)
    for (int y : first.phi[n]) m.phi[n].push_back(second.phi[n][y]);
  return m;
}

namespace detail {

/// Backtracking over every simplex of X in dimension order. Degenerate
/// simplices take the value forced by their first degeneracy decomposition;
/// the rest range over simplices of Y with the required boundary.
class MapSearch {
 public:
  MapSearch(SSetPtr X, SSetPtr Y, SearchBudget& budget, std::function<bool(const SimplicialMap&)> emit)
      : X_(*X), Y_(*Y), budget_(budget), emit_(std::move(emit)), cur_{X, Y, {}} {
    for (int n = 0; n <= kTopLevel; ++n) cur_.phi[n].assign(X_.size(n), kNone);
  }

  void run() { step(0, 0); }

 private:
  bool step(int n, int x) {
    if (x == X_.size(n)) {
      if (n == kTopLevel) {
        if (!simplicial_map_violations(cur_).empty()) return true;
        return emit_(cur_);
      }
      return step(n + 1, 0);
    }
    auto try_value = [&](int y) {
      budget_.charge();
      cur_.phi[n][x] = y;
      return step(n, x + 1);
    };
    if (n == 0) {
      for (int y = 0; y < Y_.size(0); ++y)
        if (!try_value(y)) return false;
      return true;
    }
    std::vector<int> want(n + 1);
    for (int i = 0; i <= n; ++i) want[i] = cur_.phi[n - 1][X_.face(n, i, x)];
    if (auto dg = X_.degenerate_from(n, x)) {
      const int y = Y_.degen(n - 1, dg->first, cur_.phi[n - 1][dg->second]);
      if (Y_.boundary(n, y) != want) return true;
      return try_value(y);
    }
    for (int y : Y_.with_boundary(n, want))
      if (!try_value(y)) return false;
    return true;
  }

  const TruncSSet& X_;
  const TruncSSet& Y_;
  SearchBudget& budget_;
  std::function<bool(const SimplicialMap&)> emit_;
  SimplicialMap cur_;
};

}  // namespace detail

/// All simplicial maps X → Y in canonical order. Y must be coskeletal so that
/// maps are determined by their restriction to dimensions ≤ 3.
inline std::vector<SimplicialMap> enumerate_simplicial_maps(const SSetPtr& X, const SSetPtr& Y, SearchBudget& budget) {
  if (!Y->coskeletal())
    throw ValidationError("non-coskeletal target", {"enumeration requires a coskeletal codomain"});
  std::vector<SimplicialMap> out;
  detail::MapSearch(X, Y, budget, [&](const SimplicialMap& m) {
    out.push_back(m);
    return true;
  }).run();
  return out;
}

inline std::vector<SimplicialMap> enumerate_simplicial_maps(const SSetPtr& X, const SSetPtr& Y) {
  SearchBudget budget;
  return enumerate_simplicial_maps(X, Y, budget);
}

// ---------------------------------------------------------------------------
// Homotopies

/// A homotopy from p to q: h[n][j][x] ∈ Y_{n+1} for x ∈ X_n, 0 ≤ j ≤ n ≤ 2,
/// with d_0 h_0 = p and d_{n+1} h_n = q.
struct Homotopy {
  SimplicialMap src, tgt;
  std::array<std::vector<std::vector<int>>, 3> h;

  bool operator==(const Homotopy&) const = default;
};

struct HomotopyData {
  /// components[n][j]: simplex id of X_n → simplex id of Y_{n+1}.
  std::array<std::vector<std::map<std::string, std::string>>, 3> components;
};

namespace detail {

/// Faces of h_j^n(x) that the homotopy identities pin down, given the lower
/// components; entry kNone marks the face d_{j+1} shared with h_{j+1}^n.
inline std::vector<int> determined_faces(const Homotopy& H, int n, int j, int x) {
  const TruncSSet& X = *H.src.dom;
  std::vector<int> out(n + 2, kNone);
  for (int i = 0; i <= n + 1; ++i) {
    if (i == 0 && j == 0) out[i] = H.src.phi[n][x];
    else if (i == n + 1 && j == n) out[i] = H.tgt.phi[n][x];
    else if (i < j) out[i] = H.h[n - 1][j - 1][X.face(n, i, x)];
    else if (i > j + 1) out[i] = H.h[n - 1][j][X.face(n, i - 1, x)];
  }
  return out;
}

/// d_i F_j = d_{j-1} F_i for i < j: the five 3-simplices bound a 4-simplex.
inline bool compatible_family(const TruncSSet& Y, const std::array<int, 5>& F, int upto) {
  for (int j = 1; j <= upto; ++j)
    for (int i = 0; i < j; ++i)
      if (F[j] != kNone && F[i] != kNone && Y.face(3, i, F[j]) != Y.face(3, j - 1, F[i])) return false;
  return true;
}

/// Searches the shared faces u_0..u_2 so that the four induced 4-simplices
/// h_j^3(x) are compatible families.
inline bool level_four_fills(const Homotopy& H, int x) {
  const TruncSSet& X = *H.src.dom;
  const TruncSSet& Y = *H.src.cod;
  auto h2 = [&](int j, int face) { return H.h[2][j][X.face(3, face, x)]; };
  std::array<std::array<int, 5>, 4> z{};
  z[0] = {H.src.phi[3][x], kNone, h2(0, 1), h2(0, 2), h2(0, 3)};
  z[1] = {h2(0, 0), kNone, kNone, h2(1, 2), h2(1, 3)};
  z[2] = {h2(1, 0), h2(1, 1), kNone, kNone, h2(2, 3)};
  z[3] = {h2(2, 0), h2(2, 1), h2(2, 2), kNone, H.tgt.phi[3][x]};
  std::function<bool(int)> choose = [&](int j) {
    if (j == 3) return compatible_family(Y, z[3], 4);
    for (int u = 0; u < Y.size(3); ++u) {
      z[j][j + 1] = u;
      z[j + 1][j + 1] = u;
      if (compatible_family(Y, z[j], 4) && compatible_family(Y, z[j + 1], j + 1) && choose(j + 1)) return true;
    }
    z[j][j + 1] = kNone;
    z[j + 1][j + 1] = kNone;
    return false;
  };
  return choose(0);
}

}  // namespace detail

inline std::vector<Violation> homotopy_violations(const Homotopy& H) {
  std::vector<Violation> errs;
  if (!same_sset(H.src.dom, H.tgt.dom) || !same_sset(H.src.cod, H.tgt.cod)) {
    errs.push_back({"level mismatch", {"maps are not parallel"}});
    return errs;
  }
  const TruncSSet& X = *H.src.dom;
  const TruncSSet& Y = *H.src.cod;
  for (int n = 0; n < kTopLevel; ++n) {
    bool ok = H.h[n].size() == static_cast<std::size_t>(n + 1);
    for (const auto& comp : H.h[n]) {
      ok = ok && comp.size() == static_cast<std::size_t>(X.size(n));
      for (int y : comp) ok = ok && y >= 0 && y < Y.size(n + 1);
    }
    if (!ok) errs.push_back({"level mismatch", {"level " + std::to_string(n) + " components are not total"}});
  }
  if (!errs.empty()) return errs;

  auto comp_name = [](int n, int j) { return "h_" + std::to_string(j) + "^" + std::to_string(n); };
  for (int n = 0; n < kTopLevel; ++n)
    for (int j = 0; j <= n; ++j)
      for (int x = 0; x < X.size(n); ++x) {
        const int y = H.h[n][j][x];
        const auto want = detail::determined_faces(H, n, j, x);
        for (int i = 0; i <= n + 1; ++i) {
          if (want[i] != kNone && Y.face(n + 1, i, y) != want[i]) {
            std::string law = "d_" + std::to_string(i) + " " + comp_name(n, j);
            if (i == 0 && j == 0) law += " = p";
            else if (i == n + 1 && j == n) law += " = q";
            else if (i < j) law += " = " + comp_name(n - 1, j - 1) + " d_" + std::to_string(i);
            else law += " = " + comp_name(n - 1, j) + " d_" + std::to_string(i - 1);
            errs.push_back({law, {detail::simplex_witness(X, n, x)}});
          }
          if (i == j + 1 && j < n && Y.face(n + 1, i, y) != Y.face(n + 1, i, H.h[n][j + 1][x]))
            errs.push_back({"d_" + std::to_string(i) + " " + comp_name(n, j) + " = d_" + std::to_string(i) + " " +
                                comp_name(n, j + 1),
                            {detail::simplex_witness(X, n, x)}});
        }
      }
  for (int n = 0; n + 1 < kTopLevel; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i)
        for (int x = 0; x < X.size(n); ++x) {
          const int lhs = Y.degen(n + 1, i, H.h[n][j][x]);
          const int rhs = i <= j ? H.h[n + 1][j + 1][X.degen(n, i, x)] : H.h[n + 1][j][X.degen(n, i - 1, x)];
          if (lhs != rhs)
            errs.push_back({"s_" + std::to_string(i) + " " + comp_name(n, j) +
                                (i <= j ? " = " + comp_name(n + 1, j + 1) + " s_" + std::to_string(i)
                                        : " = " + comp_name(n + 1, j) + " s_" + std::to_string(i - 1)),
                            {detail::simplex_witness(X, n, x)}});
        }
  if (errs.empty() && Y.coskeletal())
    for (int x = 0; x < X.size(3); ++x)
      if (!detail::level_four_fills(H, x))
        errs.push_back({"induced level-3 boundary does not bound", {detail::simplex_witness(X, 3, x)}});
  return errs;
}

inline Homotopy validate_homotopy(const SimplicialMap& p, const SimplicialMap& q, const HomotopyData& data) {
  std::vector<Violation> errs;
  const TruncSSet& X = *p.dom;
  const TruncSSet& Y = *p.cod;
  Homotopy H{p, q, {}};
  for (int n = 0; n < kTopLevel; ++n) {
    H.h[n].assign(n + 1, std::vector<int>(X.size(n), kNone));
    if (data.components[n].size() != static_cast<std::size_t>(n + 1)) {
      errs.push_back({"level mismatch", {"level " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                                         " components"}});
      continue;
    }
    for (int j = 0; j <= n; ++j) {
      for (const auto& [k, v] : data.components[n][j]) {
        auto x = X.find(n, k);
        auto y = Y.find(n + 1, v);
        if (!x || !y) errs.push_back({"dangling simplex reference", {k + " -> " + v}});
        else H.h[n][j][*x] = *y;
      }
      for (int x = 0; x < X.size(n); ++x)
        if (H.h[n][j][x] == kNone)
          errs.push_back({"level mismatch", {"h_" + std::to_string(j) + "^" + std::to_string(n) + " missing " +
                                             X.id(n, x)}});
    }
  }
  if (!errs.empty()) throw ValidationError(std::move(errs));
  throw_if_any(homotopy_violations(H));
  return H;
}

inline HomotopyData homotopy_data(const Homotopy& H) {
  HomotopyData d;
  const TruncSSet& X = *H.src.dom;
  const TruncSSet& Y = *H.src.cod;
  for (int n = 0; n < kTopLevel; ++n) {
    d.components[n].resize(n + 1);
    for (int j = 0; j <= n; ++j)
      for (int x = 0; x < X.size(n); ++x) d.components[n][j][X.id(n, x)] = Y.id(n + 1, H.h[n][j][x]);
  }
  return d;
}

/// h_j^n = s_j ∘ p_n.
inline Homotopy constant_homotopy(const SimplicialMap& p) {
  Homotopy H{p, p, {}};
  for (int n = 0; n < kTopLevel; ++n) {
    H.h[n].assign(n + 1, {});
    for (int j = 0; j <= n; ++j)
      for (int y : p.phi[n]) H.h[n][j].push_back(p.cod->degen(n, j, y));
  }
  return H;
}

namespace detail {

class HomotopySearch {
 public:
  HomotopySearch(const SimplicialMap& p, const SimplicialMap& q, SearchBudget& budget)
      : X_(*p.dom), Y_(*p.cod), budget_(budget), cur_{p, q, {}} {
    for (int n = 0; n < kTopLevel; ++n) cur_.h[n].assign(n + 1, std::vector<int>(X_.size(n), kNone));
  }

  std::optional<Homotopy> run() {
    if (step(0, 0, 0)) return cur_;
    return std::nullopt;
  }

 private:
  bool faces_match(int n, int j, int x, int y) const {
    const auto want = determined_faces(cur_, n, j, x);
    for (int i = 0; i <= n + 1; ++i)
      if (want[i] != kNone && Y_.face(n + 1, i, y) != want[i]) return false;
    // d_j h_j = d_j h_{j-1}
    if (j > 0 && Y_.face(n + 1, j, y) != Y_.face(n + 1, j, cur_.h[n][j - 1][x])) return false;
    return true;
  }

  bool step(int n, int x, int j) {
    if (j > n) return step(n, x + 1, 0);
    if (x == X_.size(n)) {
      if (n + 1 == kTopLevel) return homotopy_violations(cur_).empty();
      return step(n + 1, 0, 0);
    }
    auto attempt = [&](int y) {
      budget_.charge();
      if (!faces_match(n, j, x, y)) return false;
      cur_.h[n][j][x] = y;
      return step(n, x, j + 1);
    };
    if (auto dg = X_.degenerate_from(n, x)) {
      const auto [k, w] = *dg;
      const int y = j <= k ? Y_.degen(n, k + 1, cur_.h[n - 1][j][w]) : Y_.degen(n, k, cur_.h[n - 1][j - 1][w]);
      return attempt(y);
    }
    const auto want = determined_faces(cur_, n, j, x);
    for (int y : Y_.with_face0(n + 1, want[0]))
      if (attempt(y)) return true;
    return false;
  }

  const TruncSSet& X_;
  const TruncSSet& Y_;
  SearchBudget& budget_;
  Homotopy cur_;
};

}  // namespace detail

/// Some homotopy from p to q, if one exists (exhaustive search).
inline std::optional<Homotopy> find_homotopy(const SimplicialMap& p, const SimplicialMap& q, SearchBudget& budget) {
  if (!same_sset(p.dom, q.dom) || !same_sset(p.cod, q.cod))
    throw ValidationError("level mismatch", {"maps are not parallel"});
  return detail::HomotopySearch(p, q, budget).run();
}

inline std::optional<Homotopy> find_homotopy(const SimplicialMap& p, const SimplicialMap& q) {
  SearchBudget budget;
  return find_homotopy(p, q, budget);
}

using MapClassPartition = ClassPartition<SimplicialMap, Homotopy>;

/// Partition of the given maps under the equivalence generated by "a homotopy
/// from p to q exists".
inline MapClassPartition homotopy_partition(std::vector<SimplicialMap> maps, SearchBudget& budget) {
  return partition_by(std::move(maps), [&](const SimplicialMap& p, const SimplicialMap& q) {
    return find_homotopy(p, q, budget);
  });
}

inline MapClassPartition homotopy_classes(const SSetPtr& X, const SSetPtr& Y, SearchBudget& budget) {
  return homotopy_partition(enumerate_simplicial_maps(X, Y, budget), budget);
}

inline MapClassPartition homotopy_classes(const SSetPtr& X, const SSetPtr& Y) {
  SearchBudget budget;
  return homotopy_classes(X, Y, budget);
}

// ---------------------------------------------------------------------------
// Classic nerve

/// Nerve of a finite category, built directly from composable strings of
/// arrows. Simplex identifiers: objects, arrows, then arrows joined by '|'
/// in path order.
inline TruncSSet classic_nerve(const CategoryPresentation& cat) {
  std::vector<Violation> errs;
  std::map<std::string, int> obj;
  for (const auto& o : cat.objects)
    if (!obj.emplace(o, static_cast<int>(obj.size())).second) errs.push_back({"duplicate identifier", {"object " + o}});
  std::map<std::string, int> arr;
  std::vector<std::pair<int, int>> ends;
  std::vector<std::string> arrow_ids;
  for (const auto& a : cat.arrows) {
    if (!arr.emplace(a.id, static_cast<int>(arrow_ids.size())).second) {
      errs.push_back({"duplicate identifier", {"arrow " + a.id}});
      continue;
    }
    arrow_ids.push_back(a.id);
    auto s = obj.find(a.src), t = obj.find(a.tgt);
    if (s == obj.end() || t == obj.end()) {
      errs.push_back({"dangling identifier", {"arrow " + a.id}});
      ends.emplace_back(kNone, kNone);
    } else {
      ends.emplace_back(s->second, t->second);
    }
  }
  if (!errs.empty()) throw ValidationError(std::move(errs));
  const int na = static_cast<int>(arrow_ids.size());
  std::vector<int> ident(obj.size(), kNone);
  for (const auto& [o, a] : cat.identities) {
    auto oi = obj.find(o);
    auto ai = arr.find(a);
    if (oi == obj.end() || ai == arr.end()) errs.push_back({"dangling identifier", {"identity " + o}});
    else if (ends[ai->second] != std::pair{oi->second, oi->second}) errs.push_back({"id1 endpoints", {o, a}});
    else ident[oi->second] = ai->second;
  }
  for (const auto& [o, i] : obj)
    if (ident[i] == kNone) errs.push_back({"partial table", {"identity missing for " + o}});
  std::vector<int> comp(static_cast<std::size_t>(na) * na, kNone);
  for (const auto& r : cat.comp) {
    auto f = arr.find(r.f), g = arr.find(r.g), h = arr.find(r.result);
    if (f == arr.end() || g == arr.end() || h == arr.end()) {
      errs.push_back({"dangling identifier", {"comp " + r.f + ", " + r.g}});
      continue;
    }
    if (ends[f->second].second != ends[g->second].first) {
      errs.push_back({"non-composable entry", {"comp " + r.f + ", " + r.g}});
      continue;
    }
    comp[f->second * na + g->second] = h->second;
  }
  for (int f = 0; f < na; ++f)
    for (int g = 0; g < na; ++g)
      if (ends[f].second == ends[g].first) {
        const int h = comp[f * na + g];
        if (h == kNone) errs.push_back({"partial table", {"comp (" + arrow_ids[f] + ", " + arrow_ids[g] + ")"}});
        else if (ends[h] != std::pair{ends[f].first, ends[g].second})
          errs.push_back({"comp1 endpoints", {arrow_ids[f], arrow_ids[g]}});
      }
  if (!errs.empty()) throw ValidationError(std::move(errs));
  auto c = [&](int f, int g) { return comp[f * na + g]; };
  for (int f = 0; f < na; ++f)
    if (c(ident[ends[f].first], f) != f || c(f, ident[ends[f].second]) != f)
      errs.push_back({"comp1 unit", {arrow_ids[f]}});
  for (int f = 0; f < na; ++f)
    for (int g = 0; g < na; ++g)
      for (int h = 0; h < na; ++h)
        if (ends[f].second == ends[g].first && ends[g].second == ends[h].first && c(c(f, g), h) != c(f, c(g, h)))
          errs.push_back({"comp1 associativity", {arrow_ids[f], arrow_ids[g], arrow_ids[h]}});
  throw_if_any(std::move(errs));

  // strings[n] for n ≥ 1: sequences of n composable arrows.
  std::array<std::vector<std::vector<int>>, 4> strings;
  for (int f = 0; f < na; ++f) strings[1].push_back({f});
  for (int n = 2; n <= kTopLevel; ++n)
    for (const auto& s : strings[n - 1])
      for (int g = 0; g < na; ++g)
        if (ends[s.back()].second == ends[g].first) {
          auto t = s;
          t.push_back(g);
          strings[n].push_back(std::move(t));
        }
  std::array<std::map<std::vector<int>, int>, 4> pos;
  for (int n = 1; n <= kTopLevel; ++n)
    for (std::size_t k = 0; k < strings[n].size(); ++k) pos[n][strings[n][k]] = static_cast<int>(k);

  std::array<std::vector<std::string>, 4> ids;
  std::vector<std::string> obj_ids(obj.size());
  for (const auto& [o, i] : obj) obj_ids[i] = o;
  ids[0] = obj_ids;
  for (int n = 1; n <= kTopLevel; ++n)
    for (const auto& s : strings[n]) {
      std::string id;
      for (std::size_t k = 0; k < s.size(); ++k) id += (k ? "|" : "") + arrow_ids[s[k]];
      ids[n].push_back(id);
    }

  std::array<std::vector<std::vector<int>>, 4> faces;
  std::array<std::vector<std::vector<int>>, 3> degens;
  faces[1] = {std::vector<int>(na), std::vector<int>(na)};
  for (int f = 0; f < na; ++f) {
    faces[1][0][f] = ends[f].second;
    faces[1][1][f] = ends[f].first;
  }
  for (int n = 2; n <= kTopLevel; ++n) {
    faces[n].assign(n + 1, std::vector<int>(strings[n].size()));
    for (std::size_t k = 0; k < strings[n].size(); ++k) {
      const auto& s = strings[n][k];
      for (int i = 0; i <= n; ++i) {
        std::vector<int> t;
        if (i == 0) t.assign(s.begin() + 1, s.end());
        else if (i == n) t.assign(s.begin(), s.end() - 1);
        else {
          t.assign(s.begin(), s.begin() + (i - 1));
          t.push_back(c(s[i - 1], s[i]));
          t.insert(t.end(), s.begin() + i + 1, s.end());
        }
        faces[n][i][k] = pos[n - 1].at(t);
      }
    }
  }
  degens[0] = {std::vector<int>(obj.size())};
  for (std::size_t o = 0; o < obj.size(); ++o) degens[0][0][o] = ident[o];
  for (int n = 1; n < kTopLevel; ++n) {
    degens[n].assign(n + 1, std::vector<int>(strings[n].size()));
    for (std::size_t k = 0; k < strings[n].size(); ++k) {
      const auto& s = strings[n][k];
      for (int i = 0; i <= n; ++i) {
        const int vertex = i == 0 ? ends[s[0]].first : ends[s[i - 1]].second;
        auto t = s;
        t.insert(t.begin() + i, ident[vertex]);
        degens[n][i][k] = pos[n + 1].at(t);
      }
    }
  }
  return TruncSSet(std::move(ids), std::move(faces), std::move(degens), true);
}

/// True when `iso` is a level-wise bijection X → Y commuting with all faces
/// and degeneracies.
inline bool is_isomorphism(const TruncSSet& X, const TruncSSet& Y, const std::array<std::vector<int>, 4>& iso) {
  for (int n = 0; n <= kTopLevel; ++n) {
    if (X.size(n) != Y.size(n) || iso[n].size() != static_cast<std::size_t>(X.size(n))) return false;
    std::vector<bool> hit(Y.size(n), false);
    for (int y : iso[n]) {
      if (y < 0 || y >= Y.size(n) || hit[y]) return false;
      hit[y] = true;
    }
  }
  for (int n = 1; n <= kTopLevel; ++n)
    for (int i = 0; i <= n; ++i)
      for (int x = 0; x < X.size(n); ++x)
        if (iso[n - 1][X.face(n, i, x)] != Y.face(n, i, iso[n][x])) return false;
  for (int n = 0; n < kTopLevel; ++n)
    for (int i = 0; i <= n; ++i)
      for (int x = 0; x < X.size(n); ++x)
        if (iso[n + 1][X.degen(n, i, x)] != Y.degen(n, i, iso[n][x])) return false;
  return X.coskeletal() == Y.coskeletal();
}

}  // namespace lfnerve
