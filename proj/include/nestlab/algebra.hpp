#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "nestlab/error.hpp"

namespace nestlab {

/// A block position (row atom, column atom), 1-based. Upper cells
/// (row <= col) index the block subspaces q_i A q_j of a nest algebra.
struct Cell {
  int row = 0;
  int col = 0;

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Cell& c) {
  return os << '(' << c.row << ',' << c.col << ')';
}

/// `c` sits strictly northeast of `d`: smaller row atom and larger column
/// atom. This is the single conflict relation behind both the staircase
/// and the strict-monotone predicates.
constexpr bool strictly_northeast(const Cell& c, const Cell& d) noexcept {
  return c.row < d.row && c.col > d.col;
}

/// Finite dimensional nest algebra T(r_1, ..., r_l): block upper triangular
/// matrices for the ordered composition of n = r_1 + ... + r_l into atoms.
/// Positions and atoms are 1-based. Immutable once built.
class NestAlgebra {
 public:
  explicit NestAlgebra(std::vector<int> atom_ranks) : ranks_(std::move(atom_ranks)) {
    if (ranks_.empty()) throw Error(Errc::EmptyComposition, "a nest algebra needs at least one atom");
    for (int r : ranks_)
      if (r < 1) throw Error(Errc::NonPositiveRank, "atom rank " + std::to_string(r) + " is not positive");
    starts_.reserve(ranks_.size() + 1);
    int acc = 1;
    for (int r : ranks_) {
      starts_.push_back(acc);
      acc += r;
    }
    starts_.push_back(acc);
    atom_of_.reserve(static_cast<std::size_t>(acc - 1));
    for (std::size_t a = 0; a < ranks_.size(); ++a)
      for (int k = 0; k < ranks_[a]; ++k) atom_of_.push_back(static_cast<int>(a) + 1);
  }

  NestAlgebra(std::initializer_list<int> atom_ranks) : NestAlgebra(std::vector<int>(atom_ranks)) {}

  int atoms() const noexcept { return static_cast<int>(ranks_.size()); }
  int total_rank() const noexcept { return starts_.back() - 1; }
  const std::vector<int>& ranks() const noexcept { return ranks_; }
  int rank(int atom) const { return ranks_.at(static_cast<std::size_t>(atom - 1)); }

  /// First and last position of an atom's interval.
  int first_position(int atom) const { return starts_.at(static_cast<std::size_t>(atom - 1)); }
  int last_position(int atom) const { return starts_.at(static_cast<std::size_t>(atom)) - 1; }

  int block_of(int position) const {
    if (position < 1 || position > total_rank())
      throw Error(Errc::PositionOutOfRange,
                  "position " + std::to_string(position) + " outside 1.." + std::to_string(total_rank()));
    return atom_of_[static_cast<std::size_t>(position - 1)];
  }

  bool contains(const Cell& c) const noexcept {
    return c.row >= 1 && c.row <= c.col && c.col <= atoms();
  }

  /// Upper cells in row-major order; l(l+1)/2 of them.
  std::vector<Cell> cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(atoms() * (atoms() + 1) / 2));
    for (int i = 1; i <= atoms(); ++i)
      for (int j = i; j <= atoms(); ++j) out.push_back({i, j});
    return out;
  }

  bool triangular() const noexcept {
    return std::all_of(ranks_.begin(), ranks_.end(), [](int r) { return r == 1; });
  }

  std::string to_string() const {
    std::string s = "T(";
    for (std::size_t i = 0; i < ranks_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(ranks_[i]);
    }
    return s + ')';
  }

  friend bool operator==(const NestAlgebra& a, const NestAlgebra& b) noexcept { return a.ranks_ == b.ranks_; }

 private:
  std::vector<int> ranks_;
  std::vector<int> starts_;
  std::vector<int> atom_of_;
};

inline NestAlgebra make_nest(std::vector<int> atom_ranks) { return NestAlgebra(std::move(atom_ranks)); }

/// The triangular algebra T_n.
inline NestAlgebra triangular(int n) { return NestAlgebra(std::vector<int>(static_cast<std::size_t>(n), 1)); }

inline std::ostream& operator<<(std::ostream& os, const NestAlgebra& a) { return os << a.to_string(); }

}  // namespace nestlab
