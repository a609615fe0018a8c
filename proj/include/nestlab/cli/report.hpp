#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nestlab/cli/workspace.hpp"

namespace nestlab::cli {

using Json = nlohmann::ordered_json;

struct Options {
  std::string file;  // label recorded under inputs
  std::vector<std::string> names;
  int horizon = default_horizon;
  int depth = 2;
  int bound = 2;
  std::string mode = "loc";
  int stage = 0;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> c = {"classify", "decompose", "k0",      "gmap",    "conjugate", "recover",
                                             "lift",     "compose",   "system-classify", "scale", "compare", "examples"};
  return c;
}

namespace report {

inline Json cell(const Cell& c) { return Json::array({c.row, c.col}); }

inline Json cells(const CellSet& s) {
  Json a = Json::array();
  for (const Cell& c : s) a.push_back(cell(c));
  return a;
}

/// Nonzero entries as [row, col, value].
inline Json element(const GElement& g) {
  Json a = Json::array();
  for (const Cell& c : g.support()) a.push_back(Json::array({c.row, c.col, g.at(c)}));
  return a;
}

inline Json summands(const std::vector<SummandMap>& s) {
  Json a = Json::array();
  for (const SummandMap& f : s) a.push_back(f.image);
  return a;
}

inline Json embedding(const Embedding& e) {
  return Json{{"domain", e.domain().ranks()}, {"codomain", e.codomain().ranks()}, {"summands", summands(e.summands())}};
}

inline Json flags(const OrderFlags& f) {
  return Json{{"regular", f.regular}, {"loc", f.loc}, {"lop", f.lop}, {"oc", f.oc}, {"op", f.op}};
}

inline Json ghom(const GHom& g) {
  Json a = Json::array();
  for (const auto& [c, x] : g.images()) a.push_back(Json{{"cell", cell(c)}, {"image", element(x)}});
  return a;
}

}  // namespace report

namespace detail {

inline void need_names(const std::string& cmd, const Options& o, std::size_t n, const std::string& usage) {
  if (o.names.size() != n)
    throw Error(Errc::MissingArgument, cmd + " expects " + std::to_string(n) + " name" + (n == 1 ? "" : "s") + ": " + usage);
}

/// Type label of a group; T2Degenerate takes precedence when both apply.
inline std::string group_type(const Embedding& g) {
  if (is_t2_degenerate(g)) return "T2Degenerate";
  if (is_refinement_type(g).value) return "RefinementType";
  return "Neither";
}

inline GHom ghom_of(const Workspace& ws, const std::string& n) {
  const auto k = ws.kind_of(n);
  if (k == Kind::Embedding) return g_map(ws.embedding(n));
  return ws.ghom(n);
}

inline Json run_classify(const Workspace& ws, const Options& o, Json& witnesses, Json&) {
  need_names("classify", o, 1, "classify FILE EMBEDDING");
  const OrderReport r = classify_order_properties(ws.embedding(o.names[0]));
  for (const OrderWitness& w : r.witnesses)
    witnesses.push_back(Json{{"property", w.property},
                             {"domain_support", report::cells(w.domain_support)},
                             {"image", report::cells(w.image)},
                             {"conflict", Json::array({report::cell(w.first), report::cell(w.second)})}});
  return report::flags(r.flags);
}

inline Json run_decompose(const Workspace& ws, const Options& o, Json& witnesses, Json& notes) {
  need_names("decompose", o, 1, "decompose FILE EMBEDDING");
  const Embedding& e = ws.embedding(o.names[0]);
  const StructureReport rep = structure_verdict(e);
  Json groups = Json::array(), types = Json::array(), verdicts = Json::array(), hulls = Json::array();
  for (std::size_t k = 0; k < rep.decomposition.groups.size(); ++k) {
    const Embedding& g = rep.decomposition.groups[k];
    groups.push_back(g.multiplicity());
    types.push_back(group_type(g));
    verdicts.push_back(std::string(verdict_name(rep.verdicts[k])));
    hulls.push_back(Json::array({rep.decomposition.hulls[k].lo, rep.decomposition.hulls[k].hi}));
    witnesses.push_back(Json{{"group", k + 1}, {"summands", report::summands(g.summands())}});
  }
  const RefinementResult ref = is_refinement_type(e);
  Json result{{"groups", groups},
              {"types", types},
              {"verdicts", verdicts},
              {"hulls", hulls},
              {"order_irreducible", rep.decomposition.groups.size() == 1},
              {"oc", rep.oc},
              {"refinement_type", ref.value},
              {"t2_degenerate", is_t2_degenerate(e)},
              {"claim", std::string(claim_name(rep.claim))},
              {"claim_holds", rep.consistent}};
  if (ref.witness)
    witnesses.push_back(Json{{"refinement_order", Json{{"domain", ref.witness->domain_order}, {"codomain", ref.witness->codomain_order}}}});
  else
    notes.push_back("not of refinement type: " + ref.reason);
  notes.push_back("types list T2Degenerate whenever a group meets at most two codomain atoms; verdicts show both labels");
  return result;
}

inline Json run_k0(const Workspace& ws, const Options& o, Json&, Json& notes) {
  need_names("k0", o, 1, "k0 FILE EMBEDDING");
  const Embedding& e = ws.embedding(o.names[0]);
  const K0Matrix k = k0_matrix(e);
  Json result{{"display", k.display()}, {"normalized", k.normalized()}, {"multiplicity", e.multiplicity()}};
  if (is_t2_degenerate(e) && touched_atoms(e).size() == 2) {
    const auto sig = multiplicity_signature(e);
    result["signature"] = sig;
    result["signature_roundtrip"] = k0_rows_from_signature(sig) == k0_touched_rows(e);
  } else {
    result["signature"] = nullptr;
    result["signature_roundtrip"] = nullptr;
    notes.push_back("multiplicity signature needs an image meeting exactly two codomain atoms");
  }
  return result;
}

inline Json run_gmap(const Workspace& ws, const Options& o, Json&, Json&) {
  need_names("gmap", o, 1, "gmap FILE EMBEDDING");
  return Json{{"cells", report::ghom(g_map(ws.embedding(o.names[0])))}};
}

inline Json run_conjugate(const Workspace& ws, const Options& o, Json& witnesses, Json& notes) {
  need_names("conjugate", o, 2, "conjugate FILE EMBEDDING EMBEDDING");
  const Embedding& a = ws.embedding(o.names[0]);
  const Embedding& b = ws.embedding(o.names[1]);
  const auto w = inner_conjugate(a, b);
  const bool same_k0 = a.domain() == b.domain() && a.codomain() == b.codomain() && k0_matrix(a) == k0_matrix(b);
  if (w) witnesses.push_back(Json{{"permutation", w->image()}});
  if (same_k0 && !w) notes.push_back("equal K0 matrices without inner conjugacy; at least one map is not locally order conserving");
  return Json{{"inner_conjugate", w.has_value()}, {"same_k0", same_k0}};
}

inline Json run_recover(const Workspace& ws, const Options& o, Json&, Json&) {
  need_names("recover", o, 1, "recover FILE EMBEDDING");
  const Embedding& e = ws.embedding(o.names[0]);
  const auto s = recover_summands_from_k0(e.domain(), e.codomain(), k0_matrix(e));
  return Json{{"summands", report::summands(s)}, {"matches_input", s == e.summands()}};
}

inline Json run_lift(const Workspace& ws, const Options& o, Json&, Json& notes) {
  need_names("lift", o, 1, "lift FILE GHOM [--mode loc|op]");
  if (o.mode != "loc" && o.mode != "op") throw Error(Errc::MissingArgument, "--mode must be loc or op");
  const GHom g = ghom_of(ws, o.names[0]);
  const Embedding e = lift_ghom(g, o.mode == "loc" ? LiftMode::LOC : LiftMode::OP);
  if (ws.kind_of(o.names[0]) == Kind::Embedding) notes.push_back("lifted the G map of the embedding");
  return Json{{"embedding", report::embedding(e)}, {"gmap_matches", g_map(e) == g}};
}

inline Json run_compose(const Workspace& ws, const Options& o, Json&, Json&) {
  need_names("compose", o, 2, "compose FILE OUTER INNER");
  const Embedding e = compose(ws.embedding(o.names[0]), ws.embedding(o.names[1]));
  return Json{{"embedding", report::embedding(e)}, {"flags", report::flags(classify_order_properties(e).flags)}};
}

inline Json run_system_classify(const Workspace& ws, const Options& o, Json&, Json&) {
  need_names("system-classify", o, 1, "system-classify FILE SYSTEM");
  const NamedSystem& s = ws.system(o.names[0]);
  const SystemReport rep = classify_system(s.system);
  Json comps = Json::array();
  for (const CompositeFlags& c : rep.composites) {
    Json j{{"from", c.from}, {"to", c.to}};
    j.update(report::flags(c.flags));
    j["refinement_type"] = c.refinement;
    comps.push_back(std::move(j));
  }
  return Json{{"stages", s.stages},
              {"composites", comps},
              {"families", Json{{"loc", rep.loc}, {"lop", rep.lop}, {"oc", rep.oc}, {"op", rep.op}}},
              {"pi_commute", SystemInvariant(s.system).pi_diagrams_commute()}};
}

inline Json run_scale(const Workspace& ws, const Options& o, Json&, Json& notes) {
  need_names("scale", o, 1, "scale FILE SYSTEM [--stage K] [--horizon N]");
  const NamedSystem& s = ws.system(o.names[0]);
  if (o.stage < 0 || o.stage >= s.system.size())
    throw Error(Errc::StageOutOfRange, "stage " + std::to_string(o.stage) + " does not exist");
  const SystemInvariant inv(s.system);
  const NestAlgebra& a = s.system.stage(o.stage);
  auto row = [&](const std::string& label, const GElement& g) {
    Json j{{"element", label}, {"value", report::element(g)}};
    for (ScaleKind k : {ScaleKind::Sigma, ScaleKind::Sigma0, ScaleKind::SigmaOC, ScaleKind::SigmaOP})
      j[std::string(scale_name(k))] = std::string(tri_name(inv.scale_membership({o.stage, g}, k, o.horizon)));
    return j;
  };
  Json rows = Json::array();
  GElement one(a);
  for (int k = 1; k <= a.atoms(); ++k) one.set({k, k}, a.rank(k));
  rows.push_back(row("unit", one));
  for (const Cell& c : a.cells())
    rows.push_back(row("e(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")", GElement::unit(a, c)));
  notes.push_back("sigma_oc and sigma_op are decided up to the horizon; the last presented stage counts as the limit");
  return Json{{"stage", o.stage}, {"horizon", o.horizon}, {"elements", rows}};
}

inline Json run_compare(const Workspace& ws, const Options& o, Json& witnesses, Json& notes) {
  need_names("compare", o, 2, "compare FILE SYSTEM SYSTEM [--depth D] [--bound B]");
  const auto r = inv_compare(ws.system(o.names[0]).system, ws.system(o.names[1]).system, o.depth, o.bound);
  if (!r) {
    notes.push_back("search exhausted; this does not rule out an isomorphism");
    return Json{{"found", false}, {"depth", o.depth}, {"bound", o.bound}};
  }
  for (std::size_t k = 0; k < r->forward.size(); ++k) {
    witnesses.push_back(Json{{"from", Json::array({"A", r->a_stages[k]})},
                             {"to", Json::array({"B", r->b_stages[k]})},
                             {"summands", report::summands(r->forward[k].summands())}});
    witnesses.push_back(Json{{"from", Json::array({"B", r->b_stages[k]})},
                             {"to", Json::array({"A", r->a_stages[k + 1]})},
                             {"summands", report::summands(r->backward[k].summands())}});
  }
  return Json{{"found", true}, {"depth", o.depth}, {"bound", o.bound}, {"a_stages", r->a_stages}, {"b_stages", r->b_stages}};
}

}  // namespace detail

/// Runs one command on a workspace and returns the report.
inline Json run(const std::string& command, const Workspace& ws, const Options& o) {
  Json witnesses = Json::array();
  Json notes = Json::array();
  Json result;
  if (command == "classify") result = detail::run_classify(ws, o, witnesses, notes);
  else if (command == "decompose") result = detail::run_decompose(ws, o, witnesses, notes);
  else if (command == "k0") result = detail::run_k0(ws, o, witnesses, notes);
  else if (command == "gmap") result = detail::run_gmap(ws, o, witnesses, notes);
  else if (command == "conjugate") result = detail::run_conjugate(ws, o, witnesses, notes);
  else if (command == "recover") result = detail::run_recover(ws, o, witnesses, notes);
  else if (command == "lift") result = detail::run_lift(ws, o, witnesses, notes);
  else if (command == "compose") result = detail::run_compose(ws, o, witnesses, notes);
  else if (command == "system-classify") result = detail::run_system_classify(ws, o, witnesses, notes);
  else if (command == "scale") result = detail::run_scale(ws, o, witnesses, notes);
  else if (command == "compare") result = detail::run_compare(ws, o, witnesses, notes);
  else throw Error(Errc::UnknownCommand, "unknown command '" + command + "'");

  Json inputs{{"file", o.file}, {"names", o.names}};
  if (command == "lift") inputs["mode"] = o.mode;
  if (command == "scale") {
    inputs["stage"] = o.stage;
    inputs["horizon"] = o.horizon;
  }
  if (command == "compare") {
    inputs["depth"] = o.depth;
    inputs["bound"] = o.bound;
  }
  return Json{{"command", command}, {"inputs", inputs}, {"result", result}, {"witnesses", witnesses}, {"notes", notes}};
}

}  // namespace nestlab::cli
