#pragma once

// Command-line front end. Parsing and dispatch are separate so commands can be
// run in-process: dispatch() never touches the process streams.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "lfnerve/cohom.hpp"
#include "lfnerve/io.hpp"
#include "lfnerve/laxfun.hpp"
#include "lfnerve/nerve.hpp"
#include "lfnerve/simpl.hpp"

namespace lfnerve::cli {

namespace fs = std::filesystem;
using io::json;

enum ExitStatus : int { kOk = 0, kFailed = 1, kUsage = 2 };

struct CommandRequest {
  std::string command;
  std::vector<std::string> inputs;
  std::string output;
  std::string dom, cod;
  std::string groupoid, family;
  bool fix_objects = false;
  bool identity_components = false;
  bool json_errors = false;
  std::optional<std::uint64_t> size_guard;
};

struct CommandResult {
  int status = kOk;
  std::string out, err;
};

namespace detail {

struct Context {
  const CommandRequest& req;
  std::ostringstream out;
  SearchBudget budget;

  explicit Context(const CommandRequest& r) : req(r), budget(r.size_guard.value_or(default_size_guard())) {}

  /// Writes to -o when given, else to standard output.
  void emit(const json& j) {
    if (req.output.empty()) out << io::dump(j);
    else io::write_json(req.output, j);
  }
  void save_report(const json& j) {
    if (!req.output.empty()) io::write_json(req.output, j);
  }
};

inline std::string levels_text(const TruncSSet& X) {
  return std::to_string(X.size(0)) + " " + std::to_string(X.size(1)) + " " + std::to_string(X.size(2)) + " " +
         std::to_string(X.size(3));
}

inline int cmd_validate(Context& c) {
  for (const auto& path : c.req.inputs) {
    const json doc = io::read_json(path);
    const fs::path base = fs::path(path).parent_path();
    const io::Kind kind = io::detect_kind(doc);
    std::string detail;
    switch (kind) {
      case io::Kind::two_category: {
        const auto C = io::two_category_from(doc);
        detail = "objects " + std::to_string(C.num_objects()) + ", 1-cells " + std::to_string(C.num_one_cells()) +
                 ", 2-cells " + std::to_string(C.num_two_cells());
        break;
      }
      case io::Kind::category: {
        const auto C = io::two_category_from(doc);
        detail = "objects " + std::to_string(C.num_objects()) + ", arrows " + std::to_string(C.num_one_cells());
        break;
      }
      case io::Kind::sset: {
        const auto X = validate_trunc_sset(io::sset_presentation(doc));
        detail = "simplices per level " + levels_text(X);
        break;
      }
      case io::Kind::group: {
        detail = "order " + std::to_string(validate_group(io::group_presentation(doc)).order());
        break;
      }
      case io::Kind::family: {
        detail = "groups " + std::to_string(io::family_from(doc, base).groups.size());
        break;
      }
      case io::Kind::lax_functor: {
        io::lax_functor_from(doc, base);
        break;
      }
      case io::Kind::lax_functor_list: {
        detail = "functors " + std::to_string(io::lax_functor_list_from(doc, base).size());
        break;
      }
      case io::Kind::simplicial_map: {
        io::simplicial_map_from(doc, base);
        break;
      }
    }
    c.out << path << ": valid " << io::kind_name(kind);
    if (!detail.empty()) c.out << " (" << detail << ")";
    c.out << "\n";
  }
  return kOk;
}

inline int cmd_nerve(Context& c) {
  const Nerve N(io::load_two_category(fs::path(c.req.inputs.at(0))));
  c.emit(io::to_json(*N));
  if (!c.req.output.empty()) c.out << "simplices per level: " << levels_text(*N) << "\n";
  return kOk;
}

inline int cmd_nerve_map(Context& c) {
  const LaxFunctor F = io::load_lax_functor(c.req.inputs.at(0));
  const SimplicialMap m = nerve_of_lax_functor(F);
  c.emit(io::to_json(m, json{{"nerve_of", io::to_json(*F.dom)}}, json{{"nerve_of", io::to_json(*F.cod)}}));
  return kOk;
}

inline int cmd_reconstruct(Context& c) {
  const SimplicialMap m = io::load_simplicial_map(c.req.inputs.at(0));
  const Nerve NC(io::load_two_category(fs::path(c.req.dom)));
  const Nerve ND(io::load_two_category(fs::path(c.req.cod)));
  c.emit(io::to_json(reconstruct_lax_functor(m, NC, ND)));
  return kOk;
}

inline int cmd_enum_lax(Context& c) {
  auto dom = io::load_two_category(fs::path(c.req.inputs.at(0)));
  auto cod = io::load_two_category(fs::path(c.req.inputs.at(1)));
  std::optional<std::vector<int>> fix;
  if (c.req.fix_objects) fix = objects_by_identifier(*dom, *cod);
  const auto fs = enumerate_lax_functors(dom, cod, fix, c.budget);
  c.emit(io::lax_functor_list_json(*dom, *cod, fs));
  if (!c.req.output.empty()) c.out << "lax functors: " << fs.size() << "\n";
  return kOk;
}

inline void print_classes(std::ostream& out, const LaxClassPartition& P) {
  for (std::size_t k = 0; k < P.num_classes(); ++k) {
    const LaxFunctor& F = P.items[P.classes[k].front()];
    const TwoCat& C = *F.dom;
    const TwoCat& D = *F.cod;
    out << "class " << k << " (" << P.classes[k].size() << " cocycles): action";
    for (int f : lfnerve::detail::nonidentity_one_cells(C)) out << " " << C.one_cell_id(f) << "=" << D.one_cell_id(F.one[f]);
    out << "; factor set";
    bool any = false;
    for (auto [f, g] : lfnerve::detail::composable_pairs(C)) {
      if (C.is_identity1(f) || C.is_identity1(g)) continue;
      out << " (" << C.one_cell_id(f) << "," << C.one_cell_id(g) << ")=" << D.two_cell_id(F.sig(f, g));
      any = true;
    }
    if (!any) out << " trivial";
    out << "\n";
  }
}

inline int cmd_h2(Context& c) {
  const auto G = io::load_category(c.req.groupoid);
  const auto K = io::load_family(c.req.family);
  const auto P = h2(G, K, {c.req.identity_components}, c.budget);
  const auto Q = h2(G, K, {!c.req.identity_components}, c.budget);
  const auto& strict = c.req.identity_components ? P : Q;
  c.out << "classes: " << P.num_classes() << "\n";
  c.out << "classes with identity components: " << strict.num_classes() << "\n";
  c.out << "cocycles: " << P.items.size() << "\n";
  print_classes(c.out, P);
  json report = io::to_json(P);
  report["classes_identity_components"] = strict.num_classes();
  c.save_report(report);
  return kOk;
}

inline int cmd_rep_check(Context& c) {
  const auto G = io::load_category(c.req.groupoid);
  const auto K = io::load_family(c.req.family);
  const auto r = representation_check(G, K, {c.req.identity_components}, c.budget);
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  c.out << "classes: " << r.cohomology_classes << ", homotopy classes: " << r.homotopy_classes
        << ", bijection: " << (r.pass ? "PASS" : "FAIL") << "\n";
  c.out << "vertex-constrained homotopy classes: " << r.homotopy_classes_vertex_constrained << "\n";
  c.out << "classes with identity components: " << r.cohomology_classes_identity_components << "\n";
  c.out << "lax functors: " << r.lax_functors << ", simplicial maps: " << r.simplicial_maps
        << ", vertex-constrained maps: " << r.vertex_constrained_maps << "\n";
  for (std::size_t k = 0; k < r.bijection.size(); ++k)
    c.out << "class " << k << " -> homotopy class " << r.bijection[k] << "\n";
  c.out << "well-defined: " << yes(r.well_defined) << ", injective: " << yes(r.injective)
        << ", surjective: " << yes(r.surjective) << "\n";
  c.out << "discrepancy: " << (r.discrepancy ? "yes" : "none") << "\n";
  for (const auto& n : r.notes) c.out << "note: " << n << "\n";
  c.save_report(io::to_json(r));
  return r.pass ? kOk : kFailed;
}

inline int cmd_homotopy_classes(Context& c) {
  auto X = io::load_sset(fs::path(c.req.inputs.at(0)));
  auto Y = io::load_sset(fs::path(c.req.inputs.at(1)));
  const auto P = homotopy_classes(X, Y, c.budget);
  c.out << "maps: " << P.items.size() << ", homotopy classes: " << P.num_classes() << "\n";
  for (std::size_t k = 0; k < P.num_classes(); ++k) {
    c.out << "class " << k << ":";
    for (auto i : P.classes[k]) c.out << " " << i;
    c.out << "\n";
  }
  c.save_report(io::to_json(P));
  return kOk;
}

inline std::string error_text(const std::vector<Violation>& vs, bool as_json) {
  if (as_json) return json{{"errors", io::violations_json(vs)}}.dump() + "\n";
  std::string out;
  for (const auto& v : vs) out += "error: " + v.to_string() + "\n";
  return out;
}

}  // namespace detail

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"validate", "nerve",  "nerve-map", "reconstruct",
                                              "enum-lax", "h2",     "rep-check", "homotopy-classes"};
  return names;
}

/// Runs one command. Exit status 0 on success, 1 on a validation failure or a
/// failed check, 2 on usage or IO errors.
inline CommandResult dispatch(const CommandRequest& req) {
  CommandResult res;
  auto fail = [&](int status, const std::string& law, const std::string& what) {
    res.status = status;
    res.err = detail::error_text({{law, {what}}}, req.json_errors);
    return res;
  };
  std::vector<std::string> files = req.inputs;
  for (const auto* p : {&req.dom, &req.cod, &req.groupoid, &req.family})
    if (!p->empty()) files.push_back(*p);
  for (const auto& f : files)
    if (!fs::exists(f)) return fail(kUsage, "io", "no such file: " + f);

  detail::Context c(req);
  try {
    const std::string& cmd = req.command;
    if (cmd == "validate") res.status = detail::cmd_validate(c);
    else if (cmd == "nerve") res.status = detail::cmd_nerve(c);
    else if (cmd == "nerve-map") res.status = detail::cmd_nerve_map(c);
    else if (cmd == "reconstruct") res.status = detail::cmd_reconstruct(c);
    else if (cmd == "enum-lax") res.status = detail::cmd_enum_lax(c);
    else if (cmd == "h2") res.status = detail::cmd_h2(c);
    else if (cmd == "rep-check") res.status = detail::cmd_rep_check(c);
    else if (cmd == "homotopy-classes") res.status = detail::cmd_homotopy_classes(c);
    else return fail(kUsage, "usage", "unknown command " + cmd);
  } catch (const ValidationError& e) {
    res.status = kFailed;
    res.err = detail::error_text(e.violations(), req.json_errors);
  } catch (const SizeLimitExceeded& e) {
    return fail(kFailed, "size guard", e.what());
  } catch (const io::FormatError& e) {
    return fail(kUsage, "io", e.what());
  } catch (const std::out_of_range& e) {
    return fail(kUsage, "usage", "missing argument");
  }
  res.out = c.out.str();
  return res;
}

/// Builds a request from the command line, or returns the result of a parse
/// failure (help text counts as success).
inline std::variant<CommandRequest, CommandResult> parse_command_line(int argc, const char* const* argv) {
  CommandRequest req;
  CLI::App app{"Geometric nerves of finite 2-categories, lax functors and non-abelian 2-cohomology", "lfnerve"};
  app.require_subcommand(1);
  std::uint64_t guard = 0;
  app.add_option("--size-guard", guard, "Maximum number of candidate branches explored by a search");
  app.add_flag("--json-errors", req.json_errors, "Report errors on standard error as JSON");
  app.add_flag("--identity-components", req.identity_components,
               "Connect cocycles only through transformations with identity components");

  auto* validate = app.add_subcommand("validate", "Validate interchange files (kind is detected)");
  validate->add_option("files", req.inputs, "Files to validate")->required();

  auto* nerve = app.add_subcommand("nerve", "Geometric nerve of a 2-category");
  nerve->add_option("two_category", req.inputs, "2-category or category file")->required()->expected(1);
  nerve->add_option("-o,--output", req.output, "Output simplicial set file");

  auto* nerve_map = app.add_subcommand("nerve-map", "Simplicial map induced by a lax functor");
  nerve_map->add_option("lax_functor", req.inputs, "Lax functor file")->required()->expected(1);
  nerve_map->add_option("-o,--output", req.output, "Output simplicial map file");

  auto* reconstruct = app.add_subcommand("reconstruct", "Lax functor underlying a map of nerves");
  reconstruct->add_option("map", req.inputs, "Simplicial map file")->required()->expected(1);
  reconstruct->add_option("--dom", req.dom, "Domain 2-category")->required();
  reconstruct->add_option("--cod", req.cod, "Codomain 2-category")->required();
  reconstruct->add_option("-o,--output", req.output, "Output lax functor file");

  auto* enum_lax = app.add_subcommand("enum-lax", "Enumerate normal lax functors");
  enum_lax->add_option("endpoints", req.inputs, "Domain and codomain 2-categories")->required()->expected(2);
  enum_lax->add_flag("--fix-objects", req.fix_objects, "Send each object to the object with the same name");
  enum_lax->add_option("-o,--output", req.output, "Output lax functor list file");

  auto* h2cmd = app.add_subcommand("h2", "Non-abelian second cohomology of a groupoid");
  h2cmd->add_option("--groupoid", req.groupoid, "Groupoid (category file)")->required();
  h2cmd->add_option("--family", req.family, "Group family file")->required();
  h2cmd->add_option("-o,--output", req.output, "JSON report");

  auto* rep = app.add_subcommand("rep-check", "Compare cohomology classes with homotopy classes of nerve maps");
  rep->add_option("--groupoid", req.groupoid, "Groupoid (category file)")->required();
  rep->add_option("--family", req.family, "Group family file")->required();
  rep->add_option("-o,--output", req.output, "JSON report");

  auto* hc = app.add_subcommand("homotopy-classes", "Homotopy classes of maps between simplicial sets");
  hc->add_option("endpoints", req.inputs, "Domain and codomain simplicial sets")->required()->expected(2);
  hc->add_option("-o,--output", req.output, "JSON report");

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    return CommandResult{code == 0 ? kOk : kUsage, out.str(), err.str()};
  }
  req.command = app.get_subcommands().front()->get_name();
  if (guard > 0) req.size_guard = guard;
  return req;
}

inline CommandResult run(int argc, const char* const* argv) {
  auto parsed = parse_command_line(argc, argv);
  if (auto* r = std::get_if<CommandResult>(&parsed)) return *r;
  return dispatch(std::get<CommandRequest>(parsed));
}

}  // namespace lfnerve::cli
