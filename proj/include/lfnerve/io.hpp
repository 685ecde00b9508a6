#pragma once

// JSON interchange for every file kind. Documents are checked for unknown
// fields; output uses sorted keys and canonical array order, so it is
// byte-stable.

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lfnerve/cohom.hpp"
#include "lfnerve/laxfun.hpp"
#include "lfnerve/nerve.hpp"
#include "lfnerve/simpl.hpp"
#include "lfnerve/twocat.hpp"

namespace lfnerve::io {

using json = nlohmann::json;
namespace fs = std::filesystem;

/// Unreadable file, malformed JSON or a document of the wrong shape.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Kind { two_category, category, sset, group, family, lax_functor, lax_functor_list, simplicial_map };

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::two_category: return "2-category";
    case Kind::category: return "category";
    case Kind::sset: return "simplicial set";
    case Kind::group: return "group";
    case Kind::family: return "group family";
    case Kind::lax_functor: return "lax functor";
    case Kind::lax_functor_list: return "lax functor list";
    case Kind::simplicial_map: return "simplicial map";
  }
  return "unknown";
}

inline json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline void write_json(const fs::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << dump(j);
  if (!out) throw FormatError("write failed for " + path.string());
}

inline Kind detect_kind(const json& j) {
  if (!j.is_object()) throw FormatError("document is not a JSON object");
  if (j.contains("one_cells")) return Kind::two_category;
  if (j.contains("arrows")) return Kind::category;
  if (j.contains("simplices")) return Kind::sset;
  if (j.contains("elements")) return Kind::group;
  if (j.contains("functors")) return Kind::lax_functor_list;
  if (j.contains("F0")) return Kind::lax_functor;
  if (j.contains("phi")) return Kind::simplicial_map;
  if (!j.empty()) {
    bool family = true;
    for (const auto& [_, v] : j.items()) family = family && (v.is_string() || (v.is_object() && v.contains("elements")));
    if (family) return Kind::family;
  }
  throw FormatError("cannot tell which kind of document this is");
}

namespace detail {

inline void check_fields(const json& j, const char* kind, std::initializer_list<const char*> required,
                         std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) throw FormatError(std::string(kind) + ": expected a JSON object");
  std::set<std::string> known;
  for (const char* k : required) {
    known.insert(k);
    if (!j.contains(k)) throw FormatError(std::string(kind) + ": missing field \"" + k + "\"");
  }
  for (const char* k : optional) known.insert(k);
  for (const auto& [k, _] : j.items())
    if (!known.count(k)) throw FormatError(std::string(kind) + ": unknown field \"" + k + "\"");
}

/// Runs a parser, turning nlohmann type errors into FormatError.
template <class F>
auto guarded(const char* kind, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw FormatError(std::string(kind) + ": " + e.what());
  }
}

inline std::vector<CellDecl> cells(const json& arr, const char* kind) {
  std::vector<CellDecl> out;
  for (const auto& c : arr) {
    check_fields(c, kind, {"id", "src", "tgt"});
    out.push_back({c.at("id").get<std::string>(), c.at("src").get<std::string>(), c.at("tgt").get<std::string>()});
  }
  return out;
}

inline std::vector<CompDecl> comps(const json& arr, const char* kind) {
  std::vector<CompDecl> out;
  for (const auto& c : arr) {
    check_fields(c, kind, {"f", "g", "result"});
    out.push_back({c.at("f").get<std::string>(), c.at("g").get<std::string>(), c.at("result").get<std::string>()});
  }
  return out;
}

inline json cells_json(const std::vector<CellDecl>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back({{"id", c.id}, {"src", c.src}, {"tgt", c.tgt}});
  return out;
}

inline json comps_json(const std::vector<CompDecl>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back({{"f", c.f}, {"g", c.g}, {"result", c.result}});
  return out;
}

inline fs::path resolve(const fs::path& base, const std::string& ref) {
  const fs::path p(ref);
  return p.is_absolute() ? p : base / p;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Presentations

inline TwoCatPresentation two_cat_presentation(const json& j) {
  return detail::guarded("2-category", [&] {
    detail::check_fields(j, "2-category",
                         {"objects", "one_cells", "id1", "comp1", "two_cells", "id2", "vcomp", "hcomp"});
    TwoCatPresentation p;
    p.objects = j.at("objects").get<std::vector<std::string>>();
    p.one_cells = detail::cells(j.at("one_cells"), "one_cells entry");
    p.id1 = j.at("id1").get<std::map<std::string, std::string>>();
    p.comp1 = detail::comps(j.at("comp1"), "comp1 entry");
    p.two_cells = detail::cells(j.at("two_cells"), "two_cells entry");
    p.id2 = j.at("id2").get<std::map<std::string, std::string>>();
    p.vcomp = detail::comps(j.at("vcomp"), "vcomp entry");
    p.hcomp = detail::comps(j.at("hcomp"), "hcomp entry");
    return p;
  });
}

inline json to_json(const TwoCatPresentation& p) {
  return {{"objects", p.objects},         {"one_cells", detail::cells_json(p.one_cells)},
          {"id1", p.id1},                 {"comp1", detail::comps_json(p.comp1)},
          {"two_cells", detail::cells_json(p.two_cells)}, {"id2", p.id2},
          {"vcomp", detail::comps_json(p.vcomp)}, {"hcomp", detail::comps_json(p.hcomp)}};
}

inline json to_json(const TwoCat& c) { return to_json(c.presentation()); }

inline CategoryPresentation category_presentation(const json& j) {
  return detail::guarded("category", [&] {
    detail::check_fields(j, "category", {"objects", "arrows", "identities", "comp"});
    CategoryPresentation p;
    p.objects = j.at("objects").get<std::vector<std::string>>();
    p.arrows = detail::cells(j.at("arrows"), "arrows entry");
    p.identities = j.at("identities").get<std::map<std::string, std::string>>();
    p.comp = detail::comps(j.at("comp"), "comp entry");
    return p;
  });
}

inline json to_json(const CategoryPresentation& p) {
  return {{"objects", p.objects},
          {"arrows", detail::cells_json(p.arrows)},
          {"identities", p.identities},
          {"comp", detail::comps_json(p.comp)}};
}

inline TruncSSetPresentation sset_presentation(const json& j) {
  return detail::guarded("simplicial set", [&] {
    detail::check_fields(j, "simplicial set", {"simplices", "faces", "degens"}, {"coskeletal"});
    TruncSSetPresentation p;
    const auto& levels = j.at("simplices");
    if (!levels.is_array() || levels.size() != 4)
      throw FormatError("simplicial set: \"simplices\" must list exactly 4 levels");
    for (int n = 0; n < 4; ++n) p.simplices[n] = levels.at(n).get<std::vector<std::string>>();
    auto ops = [](const json& arr, const char* kind) {
      std::vector<OperatorDecl> out;
      for (const auto& o : arr) {
        detail::check_fields(o, kind, {"level", "index", "from", "to"});
        out.push_back({o.at("level").get<int>(), o.at("index").get<int>(), o.at("from").get<std::string>(),
                       o.at("to").get<std::string>()});
      }
      return out;
    };
    p.faces = ops(j.at("faces"), "faces entry");
    p.degens = ops(j.at("degens"), "degens entry");
    p.coskeletal = j.value("coskeletal", false);
    return p;
  });
}

inline json to_json(const TruncSSetPresentation& p) {
  auto ops = [](const std::vector<OperatorDecl>& os) {
    json out = json::array();
    for (const auto& o : os) out.push_back({{"level", o.level}, {"index", o.index}, {"from", o.from}, {"to", o.to}});
    return out;
  };
  json levels = json::array();
  for (const auto& l : p.simplices) levels.push_back(l);
  return {{"simplices", levels}, {"faces", ops(p.faces)}, {"degens", ops(p.degens)}, {"coskeletal", p.coskeletal}};
}

inline json to_json(const TruncSSet& X) { return to_json(X.presentation()); }

inline GroupPresentation group_presentation(const json& j) {
  return detail::guarded("group", [&] {
    detail::check_fields(j, "group", {"elements", "unit", "mult"}, {"inv"});
    GroupPresentation p;
    p.elements = j.at("elements").get<std::vector<std::string>>();
    p.unit = j.at("unit").get<std::string>();
    p.mult = j.at("mult").get<std::vector<std::array<std::string, 3>>>();
    if (j.contains("inv")) p.inv = j.at("inv").get<std::map<std::string, std::string>>();
    return p;
  });
}

inline json to_json(const FiniteGroup& G) {
  const auto p = G.presentation();
  return {{"elements", p.elements}, {"unit", p.unit}, {"mult", p.mult}, {"inv", *p.inv}};
}

// ---------------------------------------------------------------------------
// Loading with file references. `base` is the directory of the referring
// file; string references are paths relative to it.

/// A 2-category document, or a category document read as 2-discrete.
inline TwoCat two_category_from(const json& doc) {
  if (doc.is_object() && doc.contains("arrows")) return from_category(category_presentation(doc));
  return validate_two_category(two_cat_presentation(doc));
}

inline TwoCatPtr load_two_category(const json& ref, const fs::path& base) {
  if (ref.is_string()) return share(two_category_from(read_json(detail::resolve(base, ref.get<std::string>()))));
  return share(two_category_from(ref));
}

inline TwoCatPtr load_two_category(const fs::path& path) {
  return share(two_category_from(read_json(path)));
}

inline CategoryPresentation load_category(const fs::path& path) { return category_presentation(read_json(path)); }

/// A simplicial set given by path, inline, or as {"nerve_of": <2-category ref>}.
inline SSetPtr load_sset(const json& ref, const fs::path& base) {
  if (ref.is_string()) {
    const fs::path p = detail::resolve(base, ref.get<std::string>());
    return load_sset(read_json(p), p.parent_path());
  }
  if (ref.is_object() && ref.contains("nerve_of")) {
    detail::check_fields(ref, "nerve reference", {"nerve_of"});
    return Nerve(load_two_category(ref.at("nerve_of"), base)).sset();
  }
  return share(validate_trunc_sset(sset_presentation(ref)));
}

inline SSetPtr load_sset(const fs::path& path) { return load_sset(json(path.string()), fs::path()); }

inline FiniteGroup load_group(const json& ref, const fs::path& base) {
  if (ref.is_string()) return validate_group(group_presentation(read_json(detail::resolve(base, ref.get<std::string>()))));
  return validate_group(group_presentation(ref));
}

inline GroupFamily family_from(const json& j, const fs::path& base) {
  if (!j.is_object() || j.empty()) throw FormatError("group family: expected a non-empty object");
  GroupFamily K;
  for (const auto& [x, g] : j.items()) K.groups.emplace(x, load_group(g, base));
  return K;
}

inline GroupFamily load_family(const fs::path& path) { return family_from(read_json(path), path.parent_path()); }

inline json to_json(const GroupFamily& K) {
  json out = json::object();
  for (const auto& [x, G] : K.groups) out[x] = to_json(G);
  return out;
}

inline LaxFunctorData lax_functor_body(const json& j) {
  return detail::guarded("lax functor", [&] {
    LaxFunctorData d;
    d.F0 = j.at("F0").get<std::map<std::string, std::string>>();
    d.F1 = j.at("F1").get<std::map<std::string, std::string>>();
    d.F2 = j.at("F2").get<std::map<std::string, std::string>>();
    for (const auto& s : j.at("sigma")) {
      detail::check_fields(s, "sigma entry", {"f", "g", "two_cell"});
      d.sigma.push_back({s.at("f").get<std::string>(), s.at("g").get<std::string>(), s.at("two_cell").get<std::string>()});
    }
    return d;
  });
}

inline json lax_functor_body_json(const LaxFunctor& F) {
  const auto d = lax_functor_data(F);
  json sigma = json::array();
  for (const auto& s : d.sigma) sigma.push_back({{"f", s.f}, {"g", s.g}, {"two_cell", s.two_cell}});
  return {{"F0", d.F0}, {"F1", d.F1}, {"F2", d.F2}, {"sigma", sigma}};
}

inline LaxFunctor lax_functor_from(const json& j, const fs::path& base) {
  detail::check_fields(j, "lax functor", {"dom", "cod", "F0", "F1", "F2", "sigma"});
  return validate_lax_functor(load_two_category(j.at("dom"), base), load_two_category(j.at("cod"), base),
                              lax_functor_body(j));
}

inline LaxFunctor load_lax_functor(const fs::path& path) {
  return lax_functor_from(read_json(path), path.parent_path());
}

/// A self-contained lax functor document with inline endpoints.
inline json to_json(const LaxFunctor& F) {
  json out = lax_functor_body_json(F);
  out["dom"] = to_json(*F.dom);
  out["cod"] = to_json(*F.cod);
  return out;
}

/// All functors of a list document, validated against the shared endpoints.
inline std::vector<LaxFunctor> lax_functor_list_from(const json& j, const fs::path& base) {
  detail::check_fields(j, "lax functor list", {"dom", "cod", "functors"});
  auto dom = load_two_category(j.at("dom"), base);
  auto cod = load_two_category(j.at("cod"), base);
  std::vector<LaxFunctor> out;
  for (const auto& f : j.at("functors")) {
    detail::check_fields(f, "functors entry", {"F0", "F1", "F2", "sigma"});
    out.push_back(validate_lax_functor(dom, cod, lax_functor_body(f)));
  }
  return out;
}

inline json lax_functor_list_json(const TwoCat& dom, const TwoCat& cod, const std::vector<LaxFunctor>& fs) {
  json list = json::array();
  for (const auto& F : fs) list.push_back(lax_functor_body_json(F));
  return {{"dom", to_json(dom)}, {"cod", to_json(cod)}, {"functors", list}};
}

inline json lax_transformation_json(const LaxTransformation& t) {
  const auto d = lax_transformation_data(t);
  return {{"components", d.components}, {"structure", d.structure}};
}

inline SimplicialMap simplicial_map_from(const json& j, const fs::path& base) {
  detail::check_fields(j, "simplicial map", {"dom", "cod", "phi"});
  auto X = load_sset(j.at("dom"), base);
  auto Y = load_sset(j.at("cod"), base);
  SimplicialMapData d = detail::guarded("simplicial map", [&] {
    const auto& phi = j.at("phi");
    if (!phi.is_array() || phi.size() != 4) throw FormatError("simplicial map: \"phi\" must list exactly 4 levels");
    SimplicialMapData out;
    for (int n = 0; n < 4; ++n) out.phi[n] = phi.at(n).get<std::map<std::string, std::string>>();
    return out;
  });
  return validate_simplicial_map(X, Y, d);
}

inline SimplicialMap load_simplicial_map(const fs::path& path) {
  return simplicial_map_from(read_json(path), path.parent_path());
}

/// `dom_ref`/`cod_ref` describe the endpoints: an inline simplicial set, a
/// path, or a {"nerve_of": ...} reference.
inline json to_json(const SimplicialMap& m, json dom_ref, json cod_ref) {
  const auto d = simplicial_map_data(m);
  json phi = json::array();
  for (const auto& level : d.phi) phi.push_back(level);
  return {{"dom", std::move(dom_ref)}, {"cod", std::move(cod_ref)}, {"phi", phi}};
}

inline json to_json(const SimplicialMap& m) { return to_json(m, to_json(*m.dom), to_json(*m.cod)); }

inline json homotopy_json(const Homotopy& H) {
  const auto d = homotopy_data(H);
  json levels = json::array();
  for (const auto& level : d.components) levels.push_back(level);
  return {{"components", levels}};
}

// ---------------------------------------------------------------------------
// Reports

inline json violations_json(const std::vector<Violation>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back({{"law", v.law}, {"witnesses", v.witnesses}});
  return out;
}

inline json to_json(const LaxClassPartition& P) {
  json classes = json::array();
  for (const auto& members : P.classes) {
    const LaxFunctor& rep = P.items[members.front()];
    const auto d = lax_functor_data(rep);
    json factor = json::array();
    for (const auto& s : d.sigma) factor.push_back({{"f", s.f}, {"g", s.g}, {"two_cell", s.two_cell}});
    classes.push_back({{"members", members}, {"representative", {{"action", d.F1}, {"factor_set", factor}}}});
  }
  json witnesses = json::array();
  for (const auto& e : P.witnesses)
    witnesses.push_back({{"from", e.from}, {"to", e.to}, {"transformation", lax_transformation_json(e.witness)}});
  return {{"functors", P.items.size()}, {"classes", classes}, {"witnesses", witnesses}};
}

inline json to_json(const MapClassPartition& P) {
  json maps = json::array();
  for (const auto& m : P.items) {
    json phi = json::array();
    for (const auto& level : simplicial_map_data(m).phi) phi.push_back(level);
    maps.push_back(phi);
  }
  json witnesses = json::array();
  for (const auto& e : P.witnesses) witnesses.push_back({{"from", e.from}, {"to", e.to}, {"homotopy", homotopy_json(e.witness)}});
  return {{"maps", maps}, {"classes", P.classes}, {"witnesses", witnesses}};
}

inline json to_json(const RepresentationReport& r) {
  return {{"lax_functors", r.lax_functors},
          {"cohomology_classes", r.cohomology_classes},
          {"cohomology_classes_identity_components", r.cohomology_classes_identity_components},
          {"simplicial_maps", r.simplicial_maps},
          {"homotopy_classes", r.homotopy_classes},
          {"vertex_constrained_maps", r.vertex_constrained_maps},
          {"homotopy_classes_vertex_constrained", r.homotopy_classes_vertex_constrained},
          {"bijection", r.bijection},
          {"well_defined", r.well_defined},
          {"injective", r.injective},
          {"surjective", r.surjective},
          {"discrepancy", r.discrepancy},
          {"pass", r.pass},
          {"notes", r.notes},
          {"classes", to_json(r.classes)}};
}

}  // namespace lfnerve::io
