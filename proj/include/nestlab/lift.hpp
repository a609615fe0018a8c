#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nestlab/conjugacy.hpp"
#include "nestlab/embedding.hpp"

namespace nestlab {

enum class LiftMode { LOC, OP };

namespace detail {

inline std::string cell_name(Cell c) { return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")"; }

}  // namespace detail

/// Lifts a pi-respecting homomorphism of dimension distribution groups to
/// a regular embedding with the same G map.
///
/// Each round takes f(a) = first codomain atom where the remaining y_a is
/// positive. For a staircase X(a,b) the first nonzero row is f(a) and the
/// first nonzero column is f(b), and the top-left cell of a staircase set
/// is (first row, first column), so (f(a), f(b)) carries a positive entry.
/// Removing one unit there from every X(a,b) keeps the margins consistent,
/// so the loop runs exactly mu times.
inline Embedding lift_ghom(const GHom& gamma, LiftMode mode) {
  validate_ghom(gamma);
  const NestAlgebra& d = gamma.domain();
  const NestAlgebra& c = gamma.codomain();

  std::int64_t mu = -1;
  for (int a = 1; a <= d.atoms(); ++a) {
    std::int64_t t = 0;
    for (std::int64_t v : gamma.margin(a)) t += v;
    if (mu >= 0 && t != mu)
      throw Error(Errc::MarginMismatch, "atom " + std::to_string(a) + " has image rank " + std::to_string(t) + ", atom 1 has " +
                                            std::to_string(mu));
    mu = t;
  }
  if (mu <= 0) throw Error(Errc::MarginMismatch, "the homomorphism is zero");

  for (const Cell& cell : d.cells()) {
    const CellSet s = gamma.at(cell).support();
    if (mode == LiftMode::LOC && !is_staircase(s))
      throw Error(Errc::NotStaircase, "X" + detail::cell_name(cell) + " = " + gamma.at(cell).to_string() + " is not staircase");
    if (mode == LiftMode::OP && !is_strictly_monotone(s))
      throw Error(Errc::NotStrictlyMonotone,
                  "X" + detail::cell_name(cell) + " = " + gamma.at(cell).to_string() + " is not strictly monotone");
  }

  std::map<Cell, GElement> rest(gamma.images().begin(), gamma.images().end());
  std::vector<SummandMap> summands;
  for (std::int64_t step = 0; step < mu; ++step) {
    SummandMap f;
    for (int a = 1; a <= d.atoms(); ++a) {
      const GElement& diag = rest.at({a, a});
      int A = 1;
      while (diag.at({A, A}) == 0) ++A;
      f.image.push_back(A);
    }
    for (const Cell& cell : d.cells()) {
      const Cell corner{f(cell.row), f(cell.col)};
      GElement& x = rest.at(cell);
      if (corner.row > corner.col || x.at(corner) <= 0)
        throw Error(Errc::CornerMissing, "X" + detail::cell_name(cell) + " has no entry at " + detail::cell_name(corner) +
                                             " in round " + std::to_string(step + 1));
      x.add(corner, -1);
    }
    summands.push_back(std::move(f));
  }

  Embedding phi(d, c, std::move(summands));
  if (!(g_map(phi) == gamma)) throw Error(Errc::CornerMissing, "peeled summands do not reproduce the homomorphism");
  return phi;
}

/// Finds u with rank distribution X, initial projection the common final
/// projection P of the vs, and rank distribution of u * v_k equal to Z^k.
///
/// Each position m of P has a type: its own atom and the column atoms it
/// is sent to by the vs. The construction fills the rows of X from the
/// top. In a staircase matrix every later row starts at or after the last
/// column J of the current row, so a position whose atom lies before J (or
/// whose v_k-image lies before the last column M_k of the current row of
/// Z^k) must land in the current row, and one whose atom or some image lies
/// beyond those columns cannot. The remaining candidates all share the
/// type (J, M_1, ..., M_t), so any of them fills the rest of the row.
inline StandardPisom lemma_lift(const GElement& x, const std::vector<GElement>& ys, const std::vector<GElement>& zs,
                                const std::vector<StandardPisom>& vs) {
  const NestAlgebra& a = x.ambient();
  auto mismatch = [](const std::string& m) { throw Error(Errc::MarginMismatch, m); };
  if (ys.size() != vs.size() || zs.size() != vs.size()) mismatch("need one Y and one Z per partial isometry");
  if (x.is_zero()) throw Error(Errc::DegenerateInput, "X is zero");
  auto check_stair = [](const GElement& g, const std::string& name) {
    if (!g.is_nonnegative()) throw Error(Errc::MarginMismatch, name + " has a negative entry");
    if (!is_staircase(g.support())) throw Error(Errc::NotStaircase, name + " = " + g.to_string() + " is not staircase");
  };
  check_stair(x, "X");
  for (std::size_t k = 0; k < vs.size(); ++k) {
    const std::string tag = std::to_string(k + 1);
    for (const GElement* g : {&ys[k], &zs[k]})
      if (!(g->ambient() == a)) mismatch("all data must live in " + a.to_string());
    if (!(vs[k].ambient() == a)) mismatch("all data must live in " + a.to_string());
    check_stair(ys[k], "Y" + tag);
    check_stair(zs[k], "Z" + tag);
    if (x.pi_f() != zs[k].pi_f()) mismatch("row sums of X and Z" + tag + " differ");
    if (x.pi_i() != ys[k].pi_f()) mismatch("column sums of X differ from row sums of Y" + tag);
    if (ys[k].pi_i() != zs[k].pi_i()) mismatch("column sums of Y" + tag + " and Z" + tag + " differ");
    if (!(rank_distribution(vs[k]) == ys[k])) mismatch("v" + tag + " does not have rank distribution Y" + tag);
    if (vs[k].final_positions() != vs.front().final_positions()) mismatch("the partial isometries have different final projections");
  }
  if (vs.empty()) return realize(x);
  for (int atom = 1; atom <= a.atoms(); ++atom)
    if (x.pi_f()[static_cast<std::size_t>(atom - 1)] > a.rank(atom))
      mismatch("row sums of X exceed the rank of atom " + std::to_string(atom));

  const std::size_t t = vs.size();
  struct Item {
    int position;
    int atom;
    std::vector<int> images;  // column atom under each v_k
  };
  std::vector<Item> pending;
  std::vector<std::map<int, int>> v_of(t);
  for (std::size_t k = 0; k < t; ++k)
    for (const auto& [r, col] : vs[k].pairs()) v_of[k][r] = col;
  for (int m : vs.front().final_positions()) {
    Item it{m, a.block_of(m), {}};
    for (std::size_t k = 0; k < t; ++k) it.images.push_back(a.block_of(v_of[k].at(m)));
    pending.push_back(std::move(it));
  }

  auto fail = [](const std::string& m) { throw Error(Errc::CornerMissing, "data not realizable: " + m); };
  auto last_col = [&](const GElement& g, int row) {
    int j = 0;
    for (int col = row; col <= a.atoms(); ++col)
      if (g.at({row, col}) > 0) j = col;
    return j;
  };

  std::vector<int> next_row(static_cast<std::size_t>(a.atoms()));
  for (int atom = 1; atom <= a.atoms(); ++atom) next_row[static_cast<std::size_t>(atom - 1)] = a.first_position(atom);
  std::set<PositionPair> pairs;
  const std::vector<std::int64_t> row_sums = x.pi_f();
  for (int row = 1; row <= a.atoms(); ++row) {
    const std::int64_t need = row_sums[static_cast<std::size_t>(row - 1)];
    if (need == 0) continue;
    const int J = last_col(x, row);
    std::vector<int> M;
    for (std::size_t k = 0; k < t; ++k) M.push_back(last_col(zs[k], row));

    std::vector<Item> forced, spare, later;
    for (Item& it : pending) {
      bool must = it.atom < J;
      bool cannot = it.atom > J;
      for (std::size_t k = 0; k < t; ++k) {
        must = must || it.images[k] < M[k];
        cannot = cannot || it.images[k] > M[k];
      }
      if (must && cannot) fail("position " + std::to_string(it.position) + " is forced into and out of row atom " + std::to_string(row));
      (must ? forced : cannot ? later : spare).push_back(std::move(it));
    }
    if (static_cast<std::int64_t>(forced.size()) > need ||
        static_cast<std::int64_t>(forced.size() + spare.size()) < need)
      fail("row atom " + std::to_string(row) + " needs " + std::to_string(need) + " positions, " + std::to_string(forced.size()) +
           " forced and " + std::to_string(spare.size()) + " optional");
    const auto extra = static_cast<std::size_t>(need - static_cast<std::int64_t>(forced.size()));
    std::sort(spare.begin(), spare.end(), [](const Item& p, const Item& q) { return p.position < q.position; });
    for (std::size_t k = 0; k < spare.size(); ++k) (k < extra ? forced : later).push_back(std::move(spare[k]));
    std::sort(forced.begin(), forced.end(), [](const Item& p, const Item& q) { return p.position < q.position; });
    for (const Item& it : forced) pairs.insert({next_row[static_cast<std::size_t>(row - 1)]++, it.position});
    pending = std::move(later);
  }
  if (!pending.empty()) fail(std::to_string(pending.size()) + " positions of the initial projection left over");

  StandardPisom u(a, std::move(pairs));
  if (!(rank_distribution(u) == x)) fail("rank distribution of u differs from X");
  for (std::size_t k = 0; k < t; ++k)
    if (!(rank_distribution(multiply(u, vs[k])) == zs[k]))
      fail("rank distribution of u v" + std::to_string(k + 1) + " differs from Z" + std::to_string(k + 1));
  return u;
}

/// Lifts a locally order preserving homomorphism on a triangular domain by
/// lifting the images of e_{a,a+1} to order preserving partial isometries
/// between consecutive diagonal projections and extending multiplicatively.
inline Embedding lift_op_chain(const GHom& gamma) {
  const NestAlgebra& d = gamma.domain();
  const NestAlgebra& c = gamma.codomain();
  if (!d.triangular()) throw Error(Errc::NotTriangularDomain, d.to_string() + " has an atom of rank > 1");
  validate_ghom(gamma);
  for (const Cell& cell : d.cells())
    if (!is_strictly_monotone(gamma.at(cell).support()))
      throw Error(Errc::NotOrderPreserving,
                  "X" + detail::cell_name(cell) + " = " + gamma.at(cell).to_string() + " is not strictly monotone");

  const int r = d.atoms();
  // Diagonal projections: lowest free positions of each codomain atom.
  std::vector<int> next(static_cast<std::size_t>(c.atoms()));
  for (int A = 1; A <= c.atoms(); ++A) next[static_cast<std::size_t>(A - 1)] = c.first_position(A);
  std::vector<std::map<int, std::vector<int>>> proj(static_cast<std::size_t>(r + 1));
  for (int a = 1; a <= r; ++a) {
    const std::vector<std::int64_t> y = gamma.margin(a);
    for (int A = 1; A <= c.atoms(); ++A)
      for (std::int64_t k = 0; k < y[static_cast<std::size_t>(A - 1)]; ++k)
        proj[static_cast<std::size_t>(a)][A].push_back(next[static_cast<std::size_t>(A - 1)]++);
  }

  MatrixUnitTable table;
  for (int a = 1; a <= r; ++a) {
    std::set<PositionPair> p;
    for (const auto& [A, ps] : proj[static_cast<std::size_t>(a)])
      for (int q : ps) p.insert({q, q});
    table.emplace(PositionPair{a, a}, StandardPisom(c, std::move(p)));
  }
  for (int a = 1; a < r; ++a) {
    // A strictly monotone cell set pairs each row atom with one column atom.
    std::set<PositionPair> v;
    for (const Cell& cell : gamma.at({a, a + 1}).support()) {
      const auto& rows = proj[static_cast<std::size_t>(a)][cell.row];
      const auto& cols = proj[static_cast<std::size_t>(a + 1)][cell.col];
      if (rows.size() != cols.size())
        throw Error(Errc::NotOrderPreserving, "X" + detail::cell_name({a, a + 1}) + " does not match its margins");
      for (std::size_t k = 0; k < rows.size(); ++k) v.insert({rows[k], cols[k]});
    }
    table.emplace(PositionPair{a, a + 1}, StandardPisom(c, std::move(v)));
  }
  Embedding phi = from_matrix_unit_images(d, c, table);
  if (!(g_map(phi) == gamma))
    throw Error(Errc::NotOrderPreserving, "the multiplicative extension does not reproduce the homomorphism");
  return phi;
}

}  // namespace nestlab
