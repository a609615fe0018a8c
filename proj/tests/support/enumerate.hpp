#pragma once

// Exhaustive generators for small algebras, maps and partial isometries.

#include <functional>
#include <set>
#include <vector>

#include "nestlab/embedding.hpp"

namespace nestlab::testkit {

/// Ordered compositions of n into positive parts.
inline std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> go = [&](int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = 1; p <= left; ++p) {
      cur.push_back(p);
      go(left - p);
      cur.pop_back();
    }
  };
  go(n);
  return out;
}

/// All nest algebras with total rank in [lo, hi] and at most max_atoms atoms.
inline std::vector<NestAlgebra> algebras(int lo, int hi, int max_atoms = 1 << 20) {
  std::vector<NestAlgebra> out;
  for (int n = lo; n <= hi; ++n)
    for (auto& c : compositions(n))
      if (static_cast<int>(c.size()) <= max_atoms) out.emplace_back(c);
  return out;
}

/// Weakly increasing maps {1..l} -> {1..L}.
inline std::vector<SummandMap> monotone_maps(int l, int L) {
  std::vector<SummandMap> out;
  SummandMap cur;
  std::function<void(int)> go = [&](int lo) {
    if (cur.size() == l) {
      out.push_back(cur);
      return;
    }
    for (int x = lo; x <= L; ++x) {
      cur.image.push_back(x);
      go(x);
      cur.image.pop_back();
    }
  };
  go(1);
  return out;
}

/// Every embedding domain -> codomain with multiplicity in [1, max_mu].
inline std::vector<Embedding> embeddings(const NestAlgebra& domain, const NestAlgebra& codomain, int max_mu) {
  const std::vector<SummandMap> maps = monotone_maps(domain.atoms(), codomain.atoms());
  std::vector<Embedding> out;
  std::vector<std::size_t> pick;
  std::vector<int> load(static_cast<std::size_t>(codomain.atoms()), 0);
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    if (!pick.empty()) {
      std::vector<SummandMap> s;
      for (std::size_t k : pick) s.push_back(maps[k]);
      out.emplace_back(domain, codomain, std::move(s));
    }
    if (static_cast<int>(pick.size()) == max_mu) return;
    for (std::size_t k = from; k < maps.size(); ++k) {
      bool fits = true;
      for (int a = 1; a <= domain.atoms(); ++a) load[static_cast<std::size_t>(maps[k](a) - 1)] += domain.rank(a);
      for (int A = 1; A <= codomain.atoms(); ++A) fits = fits && load[static_cast<std::size_t>(A - 1)] <= codomain.rank(A);
      if (fits) {
        pick.push_back(k);
        go(k);
        pick.pop_back();
      }
      for (int a = 1; a <= domain.atoms(); ++a) load[static_cast<std::size_t>(maps[k](a) - 1)] -= domain.rank(a);
    }
  };
  go(0);
  return out;
}

/// All standard partial isometries of an algebra (partial permutations
/// lying in the block upper triangular pattern), including zero.
inline std::vector<StandardPisom> standard_pisoms(const NestAlgebra& a) {
  const int n = a.total_rank();
  std::vector<StandardPisom> out;
  std::set<PositionPair> cur;
  std::vector<bool> col_used(static_cast<std::size_t>(n + 1), false);
  std::function<void(int)> go = [&](int row) {
    if (row > n) {
      out.emplace_back(a, cur);
      return;
    }
    go(row + 1);
    for (int c = 1; c <= n; ++c) {
      if (col_used[static_cast<std::size_t>(c)] || a.block_of(row) > a.block_of(c)) continue;
      col_used[static_cast<std::size_t>(c)] = true;
      cur.insert({row, c});
      go(row + 1);
      cur.erase({row, c});
      col_used[static_cast<std::size_t>(c)] = false;
    }
  };
  go(1);
  return out;
}

/// All subsets of the cells of an algebra.
inline std::vector<CellSet> cell_subsets(const NestAlgebra& a) {
  const std::vector<Cell> cells = a.cells();
  std::vector<CellSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << cells.size()); ++mask) {
    CellSet s;
    for (std::size_t k = 0; k < cells.size(); ++k)
      if (mask >> k & 1U) s.insert(cells[k]);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace nestlab::testkit
