#pragma once

#include <string>
#include <vector>

#include "nestlab/cli/report.hpp"

namespace nestlab::cli {

struct CorpusCheck {
  std::string anchor;
  std::string command;
  std::vector<std::string> names;
  /// JSON pointer into the report and the value expected there.
  std::string pointer;
  Json expected;
  Options extra = {};
};

/// Expected outcomes for the shipped example corpus.
inline std::vector<CorpusCheck> corpus_checks() {
  auto opt = [](int depth, int bound) {
    Options o;
    o.depth = depth;
    o.bound = bound;
    return o;
  };
  return {
      {"T(2,2,2) -> T(6,8,10): ordered groups", "decompose", {"phi1"}, "/result/groups", Json::array({2, 1, 1})},
      {"T(2,2,2) -> T(6,8,10): every group T2-degenerate", "decompose", {"phi1"}, "/result/types",
       Json::array({"T2Degenerate", "T2Degenerate", "T2Degenerate"})},
      {"T(2,2,2) -> T(6,8,10): order conserving", "classify", {"phi1"}, "/result/oc", true},
      {"T_4 -> T(4,4): K0 matrix", "k0", {"phi2"}, "/result/display", Json::parse("[[2,1,1,0],[0,1,1,2]]")},
      {"T_4 -> T(4,4): multiplicity signature", "k0", {"phi2"}, "/result/signature", Json::array({0, 1, 0, 1, 0})},
      {"T_4 -> T(4,4): signature reproduces K0", "k0", {"phi2"}, "/result/signature_roundtrip", true},
      {"T_4 -> T(4,4): not of refinement type", "decompose", {"phi2"}, "/result/refinement_type", false},
      {"T_4 -> T(4,4): order irreducible", "decompose", {"phi2"}, "/result/order_irreducible", true},
      {"T(2,2,1) -> T(6,3,1): order conserving", "classify", {"phi3"}, "/result/oc", true},
      {"T(2,2,1) -> T(6,3,1): order irreducible", "decompose", {"phi3"}, "/result/order_irreducible", true},
      {"T(2,2,1) -> T(6,3,1): neither T2-degenerate nor refinement", "decompose", {"phi3"}, "/result/verdicts",
       Json::array({"Neither"})},
      {"T(2,2) -> T(2,2,2,2): order preserving", "classify", {"phi4"}, "/result/op", true},
      {"T(2,2) -> T(2,2,2,2): not order conserving", "classify", {"phi4"}, "/result/oc", false},
      {"T_2 -> T(3,3): order conserving", "classify", {"phi5"}, "/result/oc", true},
      {"T_2 -> T(3,3): not locally order preserving", "classify", {"phi5"}, "/result/lop", false},
      {"second map of the chain is not LOC", "classify", {"phi6b"}, "/result/loc", false},
      {"second map of the chain fails at cell (1,3)", "classify", {"phi6b"}, "/witnesses/0/domain_support", Json::parse("[[1,3]]")},
      {"the composite of the chain is LOC", "compose", {"phi6b", "phi6a"}, "/result/flags/loc", true},
      {"same K0 matrix without inner conjugacy", "conjugate", {"cross_loc", "cross_bad"}, "/result/inner_conjugate", false},
      {"standard system is order conserving", "system-classify", {"standard"}, "/result/families/oc", true},
      {"refinement system is order conserving", "system-classify", {"refinement"}, "/result/families/oc", true},
      {"refinement system composites are of refinement type", "system-classify", {"refinement"}, "/result/composites/2/refinement_type",
       true},
      {"standard system intertwines with its telescope", "compare", {"standard", "standard_tel"}, "/result/found", true, opt(2, 2)},
      {"refinement system intertwines with its telescope", "compare", {"refinement", "refinement_tel"}, "/result/found", true, opt(2, 2)},
      {"standard and refinement systems: search exhausts", "compare", {"standard", "refinement"}, "/result/found", false, opt(2, 2)},
      {"written-out G map lifts to the first example", "lift", {"g_phi1"}, "/result/embedding/summands",
       Json::parse("[[1,1,2],[1,2,2],[2,3,3],[3,3,3]]")},
  };
}

/// Runs every corpus check against a workspace parsed from the corpus file.
inline Json run_examples(const Workspace& ws, const std::string& file) {
  Json checks = Json::array();
  int passed = 0;
  for (const CorpusCheck& c : corpus_checks()) {
    Options o = c.extra;
    o.file = file;
    o.names = c.names;
    Json actual;
    std::string error;
    try {
      actual = run(c.command, ws, o).at(Json::json_pointer(c.pointer));
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool pass = error.empty() && actual == c.expected;
    passed += pass ? 1 : 0;
    Json j{{"anchor", c.anchor}, {"command", c.command}, {"names", c.names}, {"pointer", c.pointer}, {"expected", c.expected}};
    j["actual"] = error.empty() ? actual : Json(nullptr);
    if (!error.empty()) j["error"] = error;
    j["pass"] = pass;
    checks.push_back(std::move(j));
  }
  const int total = static_cast<int>(checks.size());
  return Json{{"command", "examples"},
              {"inputs", Json{{"file", file}, {"names", Json::array()}}},
              {"result", Json{{"passed", passed}, {"total", total}, {"checks", checks}}},
              {"witnesses", Json::array()},
              {"notes", Json::array()}};
}

}  // namespace nestlab::cli
