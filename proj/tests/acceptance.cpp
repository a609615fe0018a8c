// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "nestlab/cli/corpus.hpp"
#include "nestlab/cli/parser.hpp"
#include "nestlab/lift.hpp"
#include "nestlab/structure.hpp"
#include "support/enumerate.hpp"
#include "support/examples.hpp"

using namespace nestlab;
using namespace nestlab::testkit;
using nestlab::cli::Json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const cli::Workspace& corpus() {
  static const cli::Workspace ws = cli::parse(slurp(NESTLAB_SOURCE_DIR "/corpus/examples.nest"));
  return ws;
}

Json cli_result(const std::string& cmd, const std::string& name) {
  cli::Options o;
  o.file = "examples.nest";
  o.names = {name};
  return cli::run(cmd, corpus(), o)["result"];
}

/// LOC embeddings between all algebras with at most 3 atoms and total rank
/// at most 6, multiplicity at most 3, grouped by (domain, codomain).
const std::vector<std::vector<Embedding>>& loc_range() {
  static const std::vector<std::vector<Embedding>> out = [] {
    std::vector<std::vector<Embedding>> r;
    const std::vector<NestAlgebra> algs = algebras(1, 6, 3);
    for (const NestAlgebra& d : algs)
      for (const NestAlgebra& c : algs) {
        if (c.total_rank() < d.total_rank()) continue;
        std::vector<Embedding> loc;
        for (const Embedding& e : embeddings(d, c, 3))
          if (classify_order_properties(e).flags.loc) loc.push_back(e);
        if (!loc.empty()) r.push_back(std::move(loc));
      }
    return r;
  }();
  return out;
}

Outcome first_example() {
  Outcome o;
  const Json d = cli_result("decompose", "phi1");
  o.require(d["groups"] == Json::array({2, 1, 1}), "groups " + d["groups"].dump());
  o.require(d["types"] == Json::array({"T2Degenerate", "T2Degenerate", "T2Degenerate"}), "types " + d["types"].dump());
  o.require(cli_result("classify", "phi1")["oc"] == true, "not order conserving");
  if (o.pass) o.detail = "groups [2,1,1], all T2Degenerate, OC";
  return o;
}

Outcome second_example() {
  Outcome o;
  const Json k = cli_result("k0", "phi2");
  o.require(k["display"] == Json::parse("[[2,1,1,0],[0,1,1,2]]"), "display " + k["display"].dump());
  o.require(k["signature"] == Json::array({0, 1, 0, 1, 0}), "signature " + k["signature"].dump());
  o.require(k["signature_roundtrip"] == true, "signature does not reproduce K0");
  const Json d = cli_result("decompose", "phi2");
  o.require(d["refinement_type"] == false, "refinement type");
  o.require(d["order_irreducible"] == true, "not order irreducible");
  if (o.pass) o.detail = "K0 [[2,1,1,0],[0,1,1,2]], signature (0,1,0,1,0), not refinement, irreducible";
  return o;
}

Outcome third_example() {
  Outcome o;
  const Json d = cli_result("decompose", "phi3");
  o.require(cli_result("classify", "phi3")["oc"] == true, "not order conserving");
  o.require(d["order_irreducible"] == true, "not order irreducible");
  o.require(d["verdicts"] == Json::array({"Neither"}), "verdicts " + d["verdicts"].dump());
  if (o.pass) o.detail = "OC, irreducible, Neither";
  return o;
}

Outcome order_examples() {
  Outcome o;
  const Json p4 = cli_result("classify", "phi4");
  const Json p5 = cli_result("classify", "phi5");
  o.require(p4["op"] == true && p4["oc"] == false, "phi4 " + p4.dump());
  o.require(p5["oc"] == true && p5["lop"] == false, "phi5 " + p5.dump());
  int checked = 0;
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m)
      for (const Embedding& e : embeddings(triangular(n), triangular(m), 2)) {
        const OrderFlags f = classify_order_properties(e).flags;
        o.require(f.oc == f.op, "OC and OP differ on " + e.to_string());
        ++checked;
      }
  if (o.pass) o.detail = "phi4 OP not OC, phi5 OC not LOP, OC = OP on " + std::to_string(checked) + " triangular maps";
  return o;
}

Outcome matrix_unit_tables() {
  Outcome o;
  int tables = 0;
  const std::vector<NestAlgebra> algs = algebras(1, 5);
  for (const NestAlgebra& d : algs)
    for (const NestAlgebra& c : algs) {
      const int n = d.total_rank(), m = c.total_rank();
      for (int mu = 1; mu * n <= m; ++mu) {
        // tracks[p] lists the images of position p under each summand;
        // tracks[0] is increasing, the rest are arbitrary, which covers
        // every choice of unit projections and connecting partial isometries.
        std::vector<std::vector<int>> tracks(static_cast<std::size_t>(n));
        std::vector<bool> used(static_cast<std::size_t>(m + 1), false);
        std::function<void(int, int)> go = [&](int p, int k) {
          if (p == n) {
            MatrixUnitTable t;
            for (int i = 1; i <= n; ++i)
              for (int j = 1; j <= n; ++j) {
                if (d.block_of(i) > d.block_of(j)) continue;
                std::set<PositionPair> s;
                for (int q = 0; q < mu; ++q) {
                  const int r = tracks[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(q)];
                  const int col = tracks[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(q)];
                  if (c.block_of(r) > c.block_of(col)) return;  // leaves the codomain algebra
                  s.insert({r, col});
                }
                t.emplace(PositionPair{i, j}, StandardPisom(c, std::move(s)));
              }
            ++tables;
            try {
              const Embedding e = from_matrix_unit_images(d, c, t);
              o.require(e.multiplicity() == mu, "multiplicity " + e.to_string());
              const auto w = find_conjugator(d, c, canonical_images(e), t);
              o.require(w.has_value() && conjugate(t, *w) == canonical_images(e), "no conjugator for " + e.to_string());
            } catch (const Error& err) {
              o.require(false, std::string("rejected table: ") + err.what());
            }
            return;
          }
          auto& cur = tracks[static_cast<std::size_t>(p)];
          if (k == mu) {
            go(p + 1, 0);
            return;
          }
          const int lo = (p == 0 && k > 0) ? cur.back() + 1 : 1;
          for (int x = lo; x <= m; ++x) {
            if (used[static_cast<std::size_t>(x)]) continue;
            used[static_cast<std::size_t>(x)] = true;
            cur.push_back(x);
            go(p, k + 1);
            cur.pop_back();
            used[static_cast<std::size_t>(x)] = false;
          }
        };
        go(0, 0);
      }
    }
  if (o.pass) o.detail = std::to_string(tables) + " tables recovered and conjugated back";
  return o;
}

Outcome k0_classifies_loc() {
  Outcome o;
  long pairs = 0;
  for (const auto& group : loc_range())
    for (const Embedding& p : group)
      for (const Embedding& q : group) {
        const bool same = k0_matrix(p) == k0_matrix(q);
        const auto w = inner_conjugate(p, q);
        o.require(same == w.has_value(), "K0 and conjugacy disagree: " + p.to_string() + " vs " + q.to_string());
        if (w) o.require(conjugate(canonical_images(q), *w) == canonical_images(p), "witness fails on " + p.to_string());
        ++pairs;
      }
  const Embedding a = make_embedding({1, 1}, {1, 1, 1, 1}, {{1, 3}, {2, 4}});
  const Embedding b = make_embedding({1, 1}, {1, 1, 1, 1}, {{1, 4}, {2, 3}});
  o.require(k0_matrix(a) == k0_matrix(b), "cross pair K0 differs");
  o.require(!inner_conjugate(a, b).has_value(), "cross pair conjugate");
  if (o.pass) o.detail = std::to_string(pairs) + " LOC pairs; cross pair same K0, not conjugate";
  return o;
}

Outcome structure_claims() {
  Outcome o;
  int tri = 0, wide = 0;
  for (int m = 3; m <= 6; ++m)
    for (const Embedding& e : embeddings(triangular(3), triangular(m), 2)) {
      const StructureReport r = structure_verdict(e);
      if (!r.oc) continue;
      o.require(r.claim == StructureClaim::TriangularRefinement && r.consistent, "triangular claim fails on " + e.to_string());
      ++tri;
    }
  std::vector<NestAlgebra> domains;
  for (const NestAlgebra& d : algebras(2, 10))
    if (std::all_of(d.ranks().begin(), d.ranks().end(), [](int r) { return r >= 2; })) domains.push_back(d);
  const std::vector<NestAlgebra> codomains = algebras(2, 10);
  for (const NestAlgebra& d : domains)
    for (const NestAlgebra& c : codomains) {
      if (c.total_rank() < d.total_rank()) continue;
      for (const Embedding& e : embeddings(d, c, c.total_rank() / d.total_rank())) {
        const StructureReport r = structure_verdict(e);
        if (!r.oc) continue;
        o.require(r.claim == StructureClaim::RefinementOrDegenerate && r.consistent, "claim fails on " + e.to_string());
        ++wide;
      }
    }
  if (o.pass) o.detail = std::to_string(tri) + " OC maps of T_3, " + std::to_string(wide) + " OC maps with atom ranks >= 2";
  return o;
}

Outcome lifting() {
  Outcome o;
  std::mt19937_64 rng(5150);
  const auto& range = loc_range();
  for (int k = 0; k < 1000; ++k) {
    const auto& group = range[rng() % range.size()];
    const Embedding& e = group[rng() % group.size()];
    const GHom g = g_map(e);
    const Embedding back = lift_ghom(g, LiftMode::LOC);
    o.require(g_map(back) == g && back == e, "round trip fails on " + e.to_string());
  }
  long exhaustive = 0;
  for (const auto& group : range)
    for (const Embedding& e : group) {
      const GHom g = g_map(e);
      o.require(g_map(lift_ghom(g, LiftMode::LOC)) == g, "round trip fails on " + e.to_string());
      ++exhaustive;
    }

  const std::vector<NestAlgebra> pool = {make_nest({2, 2}), make_nest({2, 1, 2}), make_nest({3, 2}), make_nest({1, 2, 1, 2}),
                                         make_nest({2, 2, 2})};
  std::map<std::size_t, std::vector<StandardPisom>> pisoms;
  int lemma = 0;
  for (int trial = 0; trial < 20000 && lemma < 200; ++trial) {
    const std::size_t ai = trial % pool.size();
    if (!pisoms.count(ai)) pisoms.emplace(ai, standard_pisoms(pool[ai]));
    const auto& all = pisoms.at(ai);
    const StandardPisom& v1 = all[rng() % all.size()];
    if (v1.empty()) continue;
    std::vector<StandardPisom> vs{v1};
    for (const StandardPisom& w : all)
      if (vs.size() < 3 && !(w == v1) && w.final_positions() == v1.final_positions() && rng() % 3 == 0) vs.push_back(w);
    std::vector<const StandardPisom*> us;
    for (const StandardPisom& u : all)
      if (u.initial_positions() == v1.final_positions()) us.push_back(&u);
    const StandardPisom& u = *us[rng() % us.size()];
    const GElement x = rank_distribution(u);
    std::vector<GElement> ys, zs;
    bool staircase = is_staircase(x.support());
    for (const StandardPisom& v : vs) {
      ys.push_back(rank_distribution(v));
      zs.push_back(rank_distribution(multiply(u, v)));
      staircase = staircase && is_staircase(ys.back().support()) && is_staircase(zs.back().support());
    }
    if (!staircase) continue;
    try {
      const StandardPisom w = lemma_lift(x, ys, zs, vs);
      o.require(rank_distribution(w) == x, "lifted element has the wrong distribution");
      for (std::size_t k = 0; k < vs.size(); ++k)
        o.require(rank_distribution(multiply(w, vs[k])) == zs[k], "product distribution differs");
    } catch (const Error& err) {
      o.require(false, std::string("lemma_lift refused a realizable instance: ") + err.what());
    }
    ++lemma;
  }
  o.require(lemma == 200, "only " + std::to_string(lemma) + " staircase instances");
  if (o.pass)
    o.detail = "1000 random and " + std::to_string(exhaustive) + " exhaustive round trips, " + std::to_string(lemma) + " lemma instances";
  return o;
}

Outcome composition_lemmas() {
  Outcome o;
  const Embedding a = phi6a(), b = phi6b();
  const OrderReport rb = classify_order_properties(b);
  o.require(classify_order_properties(compose(b, a)).flags.loc, "composite not LOC");
  o.require(!rb.flags.loc, "second map LOC");
  o.require(!rb.witnesses.empty() && rb.witnesses.front().domain_support == CellSet{{1, 3}}, "failing cell is not (1,3)");
  o.require(bimodule_cells(a).count({1, 3}) == 0, "(1,3) inside the bimodule cells");

  std::mt19937_64 rng(8086);
  const std::vector<NestAlgebra> pool = {triangular(2), make_nest({1, 2}), make_nest({2, 1}), triangular(3), make_nest({1, 2, 1}),
                                         triangular(4), make_nest({2, 2}), make_nest({1, 3, 1}), make_nest({2, 1, 2})};
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Embedding>> cache;
  auto maps = [&](std::size_t i, std::size_t j) -> const std::vector<Embedding>& {
    auto it = cache.find({i, j});
    if (it == cache.end()) it = cache.emplace(std::make_pair(i, j), embeddings(pool[i], pool[j], 2)).first;
    return it->second;
  };
  int bimodule = 0, triple[2] = {0, 0};
  for (int trial = 0; trial < 200000 && (bimodule < 1000 || triple[0] < 1000 || triple[1] < 1000); ++trial) {
    std::size_t idx[4];
    for (auto& k : idx) k = rng() % pool.size();
    const auto& f = maps(idx[0], idx[1]);
    const auto& g = maps(idx[1], idx[2]);
    const auto& h = maps(idx[2], idx[3]);
    if (f.empty() || g.empty() || h.empty()) continue;
    const Embedding& phi = f[rng() % f.size()];
    const Embedding& psi = g[rng() % g.size()];
    const Embedding& eta = h[rng() % h.size()];
    if (bimodule < 1000 && classify_order_properties(compose(psi, phi)).flags.loc) {
      for (const Cell& c : bimodule_cells(phi))
        o.require(is_staircase(image_cells(psi, {c})), "bimodule cell not conserved: " + psi.to_string());
      ++bimodule;
    }
    for (AutoMode m : {AutoMode::OC, AutoMode::OP}) {
      int& count = triple[m == AutoMode::OC ? 0 : 1];
      if (count >= 1000) continue;
      const AutoCheck r = check_autooc(phi, psi, eta, m);
      if (!r.hypothesis_met) continue;
      o.require(r.holds, "triple composition fails: " + phi.to_string() + " ; " + psi.to_string() + " ; " + eta.to_string());
      ++count;
    }
  }
  o.require(bimodule == 1000 && triple[0] == 1000 && triple[1] == 1000, "not enough instances met the hypotheses");
  if (o.pass) o.detail = "cell (1,3) outside the bimodule; 1000 pair and 2x1000 triple instances";
  return o;
}

Outcome systems() {
  Outcome o;
  const std::vector<NestAlgebra> stages = {triangular(1), triangular(2), triangular(4), triangular(8)};
  const DirectSystem st4 = make_system(stages, {standard_step(1), standard_step(2), standard_step(4)});
  const DirectSystem rf4 = make_system(stages, {refinement_step(1), refinement_step(2), refinement_step(4)});
  const DirectSystem st = telescope(st4, {1, 2, 3});
  const DirectSystem rf = telescope(rf4, {1, 2, 3});
  for (const DirectSystem& s : {st4, rf4}) {
    o.require(classify_system(s).oc, "system not OC");
    o.require(SystemInvariant(s).pi_diagrams_commute(), "pi diagrams do not commute");
    // A depth 2 zig-zag needs three stages on each side.
    const DirectSystem tel = telescope(s, {0, 1, 3});
    o.require(SystemInvariant(tel).pi_diagrams_commute(), "pi diagrams do not commute on the telescope");
    o.require(inv_compare(tel, tel, 2, 2).has_value(), "no self-intertwining of the telescope");
    o.require(inv_compare(s, tel, 2, 2).has_value(), "no intertwining with the telescope");
  }
  for (const DirectSystem& s : {st, rf}) o.require(inv_compare(s, telescope(s, {0, 2}), 2, 2).has_value(), "T_2 system: no telescope intertwining");
  o.require(!inv_compare(st, rf, 2, 2).has_value() && !inv_compare(rf, st, 2, 2).has_value(), "standard and refinement intertwine");
  if (o.pass) o.detail = "both OC, telescopes intertwine, standard/refinement search exhausts at bound 2";
  return o;
}

Outcome goldens() {
  Outcome o;
  const std::pair<const char*, const char*> cases[] = {{"decompose", "phi1"}, {"classify", "phi1"}, {"k0", "phi2"},
                                                       {"decompose", "phi2"}, {"classify", "phi3"}, {"decompose", "phi3"},
                                                       {"classify", "phi4"},  {"classify", "phi5"}};
  for (const auto& [cmd, name] : cases) {
    cli::Options opt;
    opt.file = "examples.nest";
    opt.names = {name};
    const std::string out = cli::run(cmd, corpus(), opt).dump(2) + "\n";
    o.require(out == slurp(std::string(NESTLAB_SOURCE_DIR "/tests/golden/") + cmd + "_" + name + ".json"),
              std::string(cmd) + " " + name + " differs from its golden file");
  }
  const Json ex = cli::run_examples(corpus(), "examples.nest");
  o.require(ex["result"]["passed"] == ex["result"]["total"], "corpus checks failed");
  if (o.pass) o.detail = "8 golden reports identical, " + ex["result"]["total"].dump() + " corpus checks pass";
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "T(2,2,2) -> T(6,8,10) decomposition", 1, first_example},
      {2, "T_4 -> T(4,4) K0 data", 1, second_example},
      {3, "T(2,2,1) -> T(6,3,1) is neither type", 1, third_example},
      {4, "order property examples and triangular OC = OP", 60, order_examples},
      {5, "matrix unit tables give regular embeddings", 120, matrix_unit_tables},
      {6, "K0 classifies LOC embeddings up to inner conjugacy", 300, k0_classifies_loc},
      {7, "structure of order conserving embeddings", 600, structure_claims},
      {8, "G map lifting and the lifting lemma", 120, lifting},
      {9, "composition lemmas", 60, composition_lemmas},
      {10, "standard and refinement systems", 120, systems},
      {11, "CLI corpus against golden reports", 60, goldens},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.pass && secs > c.limit_seconds) {
      r.pass = false;
      r.detail += " (over the time limit)";
    }
    failed += r.pass ? 0 : 1;
    std::printf("%s criterion %2d: %s: %s [%.2f s, limit %.0f s]\n", r.pass ? "PASS" : "FAIL", c.id, c.title, r.detail.c_str(), secs,
                c.limit_seconds);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
