#pragma once

// Independent reference implementations used to cross-check the library.
// They follow the definitions literally and are deliberately slow.

#include <map>
#include <vector>

#include "nestlab/embedding.hpp"
#include "support/enumerate.hpp"

namespace nestlab::testkit {

/// q_i v q_j != 0 implies q_s v q_t = 0 whenever s < i and t > j.
inline bool oracle_staircase(const CellSet& s) {
  for (const Cell& ij : s)
    for (const Cell& st : s)
      if (st.row < ij.row && st.col > ij.col) return false;
  return true;
}

/// (s,t) != (i,j) in the support with s <= i forces t < j.
inline bool oracle_strictly_monotone(const CellSet& s) {
  for (const Cell& ij : s)
    for (const Cell& st : s)
      if (!(st == ij) && st.row <= ij.row && !(st.col < ij.col)) return false;
  return true;
}

inline CellSet oracle_block_support(const NestAlgebra& a, const std::set<PositionPair>& pairs) {
  CellSet s;
  for (const auto& [r, c] : pairs) {
    int br = 0, bc = 0;
    int acc = 0;
    for (int k = 1; k <= a.atoms(); ++k) {
      if (r > acc && r <= acc + a.rank(k)) br = k;
      if (c > acc && c <= acc + a.rank(k)) bc = k;
      acc += a.rank(k);
    }
    s.insert({br, bc});
  }
  return s;
}

/// Image of a standard partial isometry under the standard form of phi,
/// recomputed from the slot rule rather than read from the embedding.
inline std::set<PositionPair> oracle_apply(const Embedding& phi, const std::set<PositionPair>& pairs) {
  const NestAlgebra& d = phi.domain();
  const NestAlgebra& c = phi.codomain();
  std::map<std::pair<std::size_t, int>, int> slot;
  std::vector<int> fill(static_cast<std::size_t>(c.atoms() + 1), 0);
  for (std::size_t s = 0; s < phi.summands().size(); ++s)
    for (int p = 1; p <= d.total_rank(); ++p) {
      const int A = phi.summands()[s](d.block_of(p));
      slot[{s, p}] = c.first_position(A) + fill[static_cast<std::size_t>(A)]++;
    }
  std::set<PositionPair> out;
  for (std::size_t s = 0; s < phi.summands().size(); ++s)
    for (const auto& [r, col] : pairs) out.insert({slot.at({s, r}), slot.at({s, col})});
  return out;
}

/// Order flags by brute force over every standard partial isometry of the
/// domain: OC iff every standard OC element maps to an OC element, and
/// likewise for OP; LOC/LOP via every rank-one matrix unit.
inline OrderFlags oracle_flags_by_pisoms(const Embedding& phi) {
  OrderFlags f;
  f.loc = f.lop = f.oc = f.op = true;
  for (const StandardPisom& v : standard_pisoms(phi.domain())) {
    const CellSet in = oracle_block_support(phi.domain(), v.pairs());
    const CellSet out = oracle_block_support(phi.codomain(), oracle_apply(phi, v.pairs()));
    if (oracle_staircase(in) && !oracle_staircase(out)) {
      f.oc = false;
      if (v.rank() == 1) f.loc = false;
    }
    if (oracle_strictly_monotone(in) && !oracle_strictly_monotone(out)) {
      f.op = false;
      if (v.rank() == 1) f.lop = false;
    }
  }
  return f;
}

/// OC decided over every feasible staircase support of the domain.
inline bool oracle_oc_by_supports(const Embedding& phi) {
  for (const CellSet& s : enumerate_feasible_staircase_supports(phi.domain()))
    if (!oracle_staircase(image_cells(phi, s))) return false;
  return true;
}

}  // namespace nestlab::testkit
