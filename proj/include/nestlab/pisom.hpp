#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nestlab/algebra.hpp"

namespace nestlab {

using CellSet = std::set<Cell>;
using PositionPair = std::pair<int, int>;

/// No cell of `s` is strictly northeast of another.
inline bool is_staircase(const CellSet& s) {
  for (const Cell& c : s)
    for (const Cell& d : s)
      if (strictly_northeast(c, d)) return false;
  return true;
}

/// Distinct row atoms, distinct column atoms, and ordering by row orders
/// by column. Equivalently: no cell is weakly northeast of a different one.
inline bool is_strictly_monotone(const CellSet& s) {
  int last_col = 0;
  int last_row = 0;
  // std::set iterates by (row, col), so strict increase in both is enough.
  for (const Cell& c : s) {
    if (c.row <= last_row || c.col <= last_col) return false;
    last_row = c.row;
    last_col = c.col;
  }
  return true;
}

/// Returns a pair (c, d) of cells of `s` with c strictly northeast of d,
/// or nothing when `s` is a staircase.
inline std::optional<std::pair<Cell, Cell>> staircase_conflict(const CellSet& s) {
  for (const Cell& c : s)
    for (const Cell& d : s)
      if (strictly_northeast(c, d)) return std::pair{c, d};
  return std::nullopt;
}

/// Element of the dimension distribution group G(A) = T_l(Z): an integer
/// matrix indexed by the upper cells of the ambient algebra.
class GElement {
 public:
  explicit GElement(NestAlgebra ambient)
      : ambient_(std::move(ambient)),
        entries_(static_cast<std::size_t>(ambient_.atoms() * ambient_.atoms()), 0) {}

  GElement(NestAlgebra ambient, std::initializer_list<std::pair<Cell, std::int64_t>> values)
      : GElement(std::move(ambient)) {
    for (const auto& [c, v] : values) add(c, v);
  }

  /// Unit generator at a cell.
  static GElement unit(const NestAlgebra& ambient, Cell c, std::int64_t m = 1) {
    GElement g(ambient);
    g.add(c, m);
    return g;
  }

  const NestAlgebra& ambient() const noexcept { return ambient_; }

  std::int64_t at(Cell c) const {
    check(c);
    return entries_[index(c)];
  }

  void set(Cell c, std::int64_t v) {
    check(c);
    entries_[index(c)] = v;
  }

  void add(Cell c, std::int64_t v) {
    check(c);
    entries_[index(c)] += v;
  }

  CellSet support() const {
    CellSet s;
    for (const Cell& c : ambient_.cells())
      if (at(c) != 0) s.insert(c);
    return s;
  }

  /// Row sums per row atom ([v] -> [vv*]).
  std::vector<std::int64_t> pi_f() const {
    std::vector<std::int64_t> out(static_cast<std::size_t>(ambient_.atoms()), 0);
    for (const Cell& c : ambient_.cells()) out[static_cast<std::size_t>(c.row - 1)] += at(c);
    return out;
  }

  /// Column sums per column atom ([v] -> [v*v]).
  std::vector<std::int64_t> pi_i() const {
    std::vector<std::int64_t> out(static_cast<std::size_t>(ambient_.atoms()), 0);
    for (const Cell& c : ambient_.cells()) out[static_cast<std::size_t>(c.col - 1)] += at(c);
    return out;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](std::int64_t v) { return v == 0; });
  }

  bool is_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(), [](std::int64_t v) { return v >= 0; });
  }

  bool is_diagonal() const {
    for (const Cell& c : support())
      if (c.row != c.col) return false;
    return true;
  }

  std::int64_t max_entry() const {
    return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
  }

  /// In the scale Sigma(A): realizable as the rank distribution of a
  /// regular partial isometry.
  bool in_scale() const {
    if (!is_nonnegative()) return false;
    const auto f = pi_f();
    const auto i = pi_i();
    for (int a = 1; a <= ambient_.atoms(); ++a) {
      const auto k = static_cast<std::size_t>(a - 1);
      if (f[k] > ambient_.rank(a) || i[k] > ambient_.rank(a)) return false;
    }
    return true;
  }

  GElement& operator+=(const GElement& o) {
    same_ambient(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
  }

  GElement& operator-=(const GElement& o) {
    same_ambient(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
  }

  GElement& operator*=(std::int64_t m) {
    for (auto& v : entries_) v *= m;
    return *this;
  }

  friend GElement operator+(GElement a, const GElement& b) { return a += b; }
  friend GElement operator-(GElement a, const GElement& b) { return a -= b; }
  friend GElement operator*(std::int64_t m, GElement a) { return a *= m; }

  friend bool operator==(const GElement& a, const GElement& b) {
    return a.ambient_ == b.ambient_ && a.entries_ == b.entries_;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (const Cell& c : ambient_.cells()) {
      if (at(c) == 0) continue;
      if (!first) s += "; ";
      first = false;
      s += "(" + std::to_string(c.row) + "," + std::to_string(c.col) + "):" + std::to_string(at(c));
    }
    return s + "}";
  }

 private:
  std::size_t index(Cell c) const {
    return static_cast<std::size_t>((c.row - 1) * ambient_.atoms() + (c.col - 1));
  }

  void check(Cell c) const {
    if (!ambient_.contains(c))
      throw Error(Errc::NotInAlgebra, "cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                                          ") is not an upper cell of " + ambient_.to_string());
  }

  void same_ambient(const GElement& o) const {
    if (!(ambient_ == o.ambient_))
      throw Error(Errc::AmbientMismatch, ambient_.to_string() + " vs " + o.ambient_.to_string());
  }

  NestAlgebra ambient_;
  std::vector<std::int64_t> entries_;
};

/// A standard partial isometry: a sum of distinct matrix units e_{rc}
/// forming a partial permutation, lying in the ambient nest algebra.
/// Standard implies regular for every compatible block structure.
class StandardPisom {
 public:
  StandardPisom(NestAlgebra ambient, std::set<PositionPair> pairs)
      : ambient_(std::move(ambient)), pairs_(std::move(pairs)) {
    std::set<int> rows, cols;
    for (const auto& [r, c] : pairs_) {
      const int br = ambient_.block_of(r);
      const int bc = ambient_.block_of(c);
      if (!rows.insert(r).second || !cols.insert(c).second)
        throw Error(Errc::InvalidPisom, "position pairs do not form a partial permutation");
      if (br > bc)
        throw Error(Errc::NotInAlgebra, "e_{" + std::to_string(r) + "," + std::to_string(c) + "} lies below the block diagonal of " +
                                            ambient_.to_string());
    }
  }

  StandardPisom(NestAlgebra ambient, std::initializer_list<PositionPair> pairs)
      : StandardPisom(std::move(ambient), std::set<PositionPair>(pairs)) {}

  static StandardPisom identity(const NestAlgebra& a) {
    std::set<PositionPair> p;
    for (int k = 1; k <= a.total_rank(); ++k) p.insert({k, k});
    return StandardPisom(a, std::move(p));
  }

  const NestAlgebra& ambient() const noexcept { return ambient_; }
  const std::set<PositionPair>& pairs() const noexcept { return pairs_; }
  int rank() const noexcept { return static_cast<int>(pairs_.size()); }
  bool empty() const noexcept { return pairs_.empty(); }

  /// Final projection positions (range of vv*).
  std::set<int> final_positions() const {
    std::set<int> s;
    for (const auto& pr : pairs_) s.insert(pr.first);
    return s;
  }

  /// Initial projection positions (range of v*v).
  std::set<int> initial_positions() const {
    std::set<int> s;
    for (const auto& pr : pairs_) s.insert(pr.second);
    return s;
  }

  bool is_projection() const {
    return std::all_of(pairs_.begin(), pairs_.end(), [](const PositionPair& p) { return p.first == p.second; });
  }

  friend bool operator==(const StandardPisom& a, const StandardPisom& b) {
    return a.ambient_ == b.ambient_ && a.pairs_ == b.pairs_;
  }

 private:
  NestAlgebra ambient_;
  std::set<PositionPair> pairs_;
};

/// Composition of partial permutations, u * v: e_{rm} e_{mc} = e_{rc}.
inline std::set<PositionPair> compose_pairs(const std::set<PositionPair>& u, const std::set<PositionPair>& v) {
  std::map<int, int> v_by_row;
  for (const auto& [r, c] : v) v_by_row.emplace(r, c);
  std::set<PositionPair> out;
  for (const auto& [r, m] : u)
    if (auto it = v_by_row.find(m); it != v_by_row.end()) out.insert({r, it->second});
  return out;
}

inline std::set<PositionPair> adjoint_pairs(const std::set<PositionPair>& u) {
  std::set<PositionPair> out;
  for (const auto& [r, c] : u) out.insert({c, r});
  return out;
}

inline StandardPisom multiply(const StandardPisom& u, const StandardPisom& v) {
  if (!(u.ambient() == v.ambient()))
    throw Error(Errc::AmbientMismatch, u.ambient().to_string() + " vs " + v.ambient().to_string());
  return StandardPisom(u.ambient(), compose_pairs(u.pairs(), v.pairs()));
}

inline CellSet block_support(const StandardPisom& v) {
  CellSet s;
  for (const auto& [r, c] : v.pairs()) s.insert({v.ambient().block_of(r), v.ambient().block_of(c)});
  return s;
}

inline bool pisom_is_oc(const StandardPisom& v) { return is_staircase(block_support(v)); }
inline bool pisom_is_op(const StandardPisom& v) { return is_strictly_monotone(block_support(v)); }

/// Entry (i,j) is the rank of the (i,j) block of v.
inline GElement rank_distribution(const StandardPisom& v) {
  GElement g(v.ambient());
  for (const auto& [r, c] : v.pairs()) g.add({v.ambient().block_of(r), v.ambient().block_of(c)}, 1);
  return g;
}

/// Canonical standard representative of a scale element: cells in
/// row-major order, each taking the lowest unused row positions of its row
/// atom and the lowest unused column positions of its column atom.
inline StandardPisom realize(const GElement& g) {
  if (!g.in_scale())
    throw Error(Errc::MarginMismatch, "element " + g.to_string() + " is not a rank distribution in " +
                                          g.ambient().to_string());
  const NestAlgebra& a = g.ambient();
  std::vector<int> next_row(static_cast<std::size_t>(a.atoms()));
  std::vector<int> next_col(static_cast<std::size_t>(a.atoms()));
  for (int k = 1; k <= a.atoms(); ++k) {
    next_row[static_cast<std::size_t>(k - 1)] = a.first_position(k);
    next_col[static_cast<std::size_t>(k - 1)] = a.first_position(k);
  }
  std::set<PositionPair> pairs;
  for (const Cell& c : a.cells())
    for (std::int64_t m = 0; m < g.at(c); ++m)
      pairs.insert({next_row[static_cast<std::size_t>(c.row - 1)]++, next_col[static_cast<std::size_t>(c.col - 1)]++});
  return StandardPisom(a, std::move(pairs));
}

/// All nonempty staircase cell sets realizable by a regular partial
/// isometry with rank one in each cell: at most r_a cells in block row a
/// and at most r_a cells in block column a. Ordered by size, then
/// lexicographically.
inline std::vector<CellSet> enumerate_feasible_staircase_supports(const NestAlgebra& a) {
  const std::vector<Cell> cells = a.cells();
  std::vector<int> row_used(static_cast<std::size_t>(a.atoms()), 0);
  std::vector<int> col_used(static_cast<std::size_t>(a.atoms()), 0);
  std::vector<Cell> chosen;
  std::vector<CellSet> out;

  auto recurse = [&](auto&& self, std::size_t from) -> void {
    if (!chosen.empty()) out.emplace_back(chosen.begin(), chosen.end());
    for (std::size_t k = from; k < cells.size(); ++k) {
      const Cell c = cells[k];
      auto& ru = row_used[static_cast<std::size_t>(c.row - 1)];
      auto& cu = col_used[static_cast<std::size_t>(c.col - 1)];
      if (ru >= a.rank(c.row) || cu >= a.rank(c.col)) continue;
      const bool clash = std::any_of(chosen.begin(), chosen.end(), [&](const Cell& d) {
        return strictly_northeast(c, d) || strictly_northeast(d, c);
      });
      if (clash) continue;
      ++ru;
      ++cu;
      chosen.push_back(c);
      self(self, k + 1);
      chosen.pop_back();
      --ru;
      --cu;
    }
  };
  recurse(recurse, 0);

  std::sort(out.begin(), out.end(), [](const CellSet& x, const CellSet& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
  return out;
}

}  // namespace nestlab
