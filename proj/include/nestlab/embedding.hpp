#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nestlab/pisom.hpp"

namespace nestlab {

/// Atom-level description of a multiplicity-one summand: image[a-1] is the
/// codomain atom receiving domain atom a. Weakly monotone.
struct SummandMap {
  std::vector<int> image;

  int operator()(int atom) const { return image.at(static_cast<std::size_t>(atom - 1)); }
  int size() const noexcept { return static_cast<int>(image.size()); }

  friend auto operator<=>(const SummandMap&, const SummandMap&) = default;
  friend bool operator==(const SummandMap&, const SummandMap&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t k = 0; k < image.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(image[k]);
    }
    return s + ")";
  }
};

inline bool is_monotone(const SummandMap& f) { return std::is_sorted(f.image.begin(), f.image.end()); }

/// g after f.
inline SummandMap compose(const SummandMap& g, const SummandMap& f) {
  SummandMap out;
  out.image.reserve(f.image.size());
  for (int x : f.image) out.image.push_back(g(x));
  return out;
}

/// Regular star-extendible embedding given as a multiset of summand maps,
/// kept sorted lexicographically. The concrete standard form places the
/// copies by the canonical slot assignment: inside each codomain atom,
/// slots are filled in order of (summand, domain position).
class Embedding {
 public:
  Embedding(NestAlgebra domain, NestAlgebra codomain, std::vector<SummandMap> summands)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), summands_(std::move(summands)) {
    if (summands_.empty()) throw Error(Errc::EmptySummandList, "an embedding needs at least one summand");
    std::vector<int> load(static_cast<std::size_t>(codomain_.atoms()), 0);
    for (const SummandMap& f : summands_) {
      if (f.size() != domain_.atoms())
        throw Error(Errc::NotMonotone, "summand " + f.to_string() + " does not have one entry per domain atom of " +
                                           domain_.to_string());
      for (int x : f.image)
        if (x < 1 || x > codomain_.atoms())
          throw Error(Errc::NotMonotone, "summand " + f.to_string() + " leaves the atoms of " + codomain_.to_string());
      if (!is_monotone(f)) throw Error(Errc::NotMonotone, "summand " + f.to_string() + " is not monotone");
      for (int a = 1; a <= domain_.atoms(); ++a) load[static_cast<std::size_t>(f(a) - 1)] += domain_.rank(a);
    }
    for (int A = 1; A <= codomain_.atoms(); ++A)
      if (load[static_cast<std::size_t>(A - 1)] > codomain_.rank(A))
        throw Error(Errc::CapacityExceeded, "codomain atom " + std::to_string(A) + " needs rank " +
                                                std::to_string(load[static_cast<std::size_t>(A - 1)]) + " but has " +
                                                std::to_string(codomain_.rank(A)));
    std::sort(summands_.begin(), summands_.end());

    std::vector<int> next(static_cast<std::size_t>(codomain_.atoms()));
    for (int A = 1; A <= codomain_.atoms(); ++A) next[static_cast<std::size_t>(A - 1)] = codomain_.first_position(A);
    slots_.resize(summands_.size());
    for (std::size_t s = 0; s < summands_.size(); ++s) {
      slots_[s].reserve(static_cast<std::size_t>(domain_.total_rank()));
      for (int p = 1; p <= domain_.total_rank(); ++p)
        slots_[s].push_back(next[static_cast<std::size_t>(summands_[s](domain_.block_of(p)) - 1)]++);
    }
  }

  const NestAlgebra& domain() const noexcept { return domain_; }
  const NestAlgebra& codomain() const noexcept { return codomain_; }
  const std::vector<SummandMap>& summands() const noexcept { return summands_; }
  int multiplicity() const noexcept { return static_cast<int>(summands_.size()); }

  /// Codomain position receiving domain position p under summand s (0-based s).
  int slot(std::size_t s, int p) const { return slots_.at(s).at(static_cast<std::size_t>(p - 1)); }

  bool unital() const {
    std::vector<int> load(static_cast<std::size_t>(codomain_.atoms()), 0);
    for (const SummandMap& f : summands_)
      for (int a = 1; a <= domain_.atoms(); ++a) load[static_cast<std::size_t>(f(a) - 1)] += domain_.rank(a);
    return load == codomain_.ranks();
  }

  friend bool operator==(const Embedding& a, const Embedding& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.summands_ == b.summands_;
  }

  std::string to_string() const {
    std::string s = domain_.to_string() + " -> " + codomain_.to_string() + " {";
    for (std::size_t k = 0; k < summands_.size(); ++k) {
      if (k) s += ", ";
      s += summands_[k].to_string();
    }
    return s + "}";
  }

 private:
  NestAlgebra domain_;
  NestAlgebra codomain_;
  std::vector<SummandMap> summands_;
  std::vector<std::vector<int>> slots_;
};

inline Embedding make_embedding(NestAlgebra domain, NestAlgebra codomain, std::vector<SummandMap> summands) {
  return Embedding(std::move(domain), std::move(codomain), std::move(summands));
}

inline Embedding make_embedding(NestAlgebra domain, NestAlgebra codomain, std::initializer_list<std::vector<int>> maps) {
  std::vector<SummandMap> s;
  for (const auto& m : maps) s.push_back(SummandMap{m});
  return Embedding(std::move(domain), std::move(codomain), std::move(s));
}

inline Embedding identity_embedding(const NestAlgebra& a) {
  SummandMap id;
  for (int k = 1; k <= a.atoms(); ++k) id.image.push_back(k);
  return Embedding(a, a, {id});
}

inline StandardPisom apply(const Embedding& phi, const StandardPisom& v) {
  if (!(v.ambient() == phi.domain()))
    throw Error(Errc::NotInDomain, "partial isometry lives in " + v.ambient().to_string() + ", embedding starts at " +
                                       phi.domain().to_string());
  std::set<PositionPair> out;
  for (std::size_t s = 0; s < phi.summands().size(); ++s)
    for (const auto& [r, c] : v.pairs()) out.insert({phi.slot(s, r), phi.slot(s, c)});
  return StandardPisom(phi.codomain(), std::move(out));
}

/// Codomain cells hit by the given domain cells under any summand.
inline CellSet image_cells(const Embedding& phi, const CellSet& cells) {
  CellSet out;
  for (const SummandMap& f : phi.summands())
    for (const Cell& c : cells) out.insert({f(c.row), f(c.col)});
  return out;
}

inline Embedding compose(const Embedding& psi, const Embedding& phi) {
  if (!(phi.codomain() == psi.domain()))
    throw Error(Errc::DomainMismatch, "cannot compose " + phi.codomain().to_string() + " into " + psi.domain().to_string());
  std::vector<SummandMap> out;
  out.reserve(phi.summands().size() * psi.summands().size());
  for (const SummandMap& g : psi.summands())
    for (const SummandMap& f : phi.summands()) out.push_back(compose(g, f));
  return Embedding(phi.domain(), psi.codomain(), std::move(out));
}

inline CellSet bimodule_cells(const Embedding& phi) {
  const std::vector<Cell> cells = phi.domain().cells();
  return image_cells(phi, CellSet(cells.begin(), cells.end()));
}

// ---------------------------------------------------------------- K0

/// Induced map on K0 in the rank-one basis: entry (A, a) counts summands
/// sending domain atom a to codomain atom A. Composes by matrix product.
class K0Matrix {
 public:
  K0Matrix(std::vector<int> domain_ranks, int rows)
      : domain_ranks_(std::move(domain_ranks)),
        rows_(rows),
        entries_(static_cast<std::size_t>(rows_) * domain_ranks_.size(), 0) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return static_cast<int>(domain_ranks_.size()); }
  const std::vector<int>& domain_ranks() const noexcept { return domain_ranks_; }

  std::int64_t at(int A, int a) const { return entries_.at(index(A, a)); }
  void set(int A, int a, std::int64_t v) { entries_.at(index(A, a)) = v; }

  std::vector<std::int64_t> column(int a) const {
    std::vector<std::int64_t> out;
    for (int A = 1; A <= rows_; ++A) out.push_back(at(A, a));
    return out;
  }

  std::vector<std::int64_t> column_sums() const {
    std::vector<std::int64_t> out;
    for (int a = 1; a <= cols(); ++a) {
      std::int64_t t = 0;
      for (int A = 1; A <= rows_; ++A) t += at(A, a);
      out.push_back(t);
    }
    return out;
  }

  /// Rows of the display form rank(phi(q_a) Q_A) = r_a * n_{A,a}.
  std::vector<std::vector<std::int64_t>> display() const {
    std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(rows_));
    for (int A = 1; A <= rows_; ++A)
      for (int a = 1; a <= cols(); ++a)
        out[static_cast<std::size_t>(A - 1)].push_back(at(A, a) * domain_ranks_[static_cast<std::size_t>(a - 1)]);
    return out;
  }

  std::vector<std::vector<std::int64_t>> normalized() const {
    std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(rows_));
    for (int A = 1; A <= rows_; ++A)
      for (int a = 1; a <= cols(); ++a) out[static_cast<std::size_t>(A - 1)].push_back(at(A, a));
    return out;
  }

  /// (this) * rhs: apply rhs first. rhs.rows() must equal cols().
  K0Matrix operator*(const K0Matrix& rhs) const {
    if (rhs.rows() != cols()) throw Error(Errc::DomainMismatch, "K0 matrix shapes do not chain");
    K0Matrix out(rhs.domain_ranks_, rows_);
    for (int A = 1; A <= rows_; ++A)
      for (int a = 1; a <= rhs.cols(); ++a) {
        std::int64_t t = 0;
        for (int m = 1; m <= cols(); ++m) t += at(A, m) * rhs.at(m, a);
        out.set(A, a, t);
      }
    return out;
  }

  friend bool operator==(const K0Matrix& x, const K0Matrix& y) {
    return x.domain_ranks_ == y.domain_ranks_ && x.rows_ == y.rows_ && x.entries_ == y.entries_;
  }

 private:
  std::size_t index(int A, int a) const {
    if (A < 1 || A > rows_ || a < 1 || a > cols())
      throw Error(Errc::PositionOutOfRange, "K0 entry (" + std::to_string(A) + "," + std::to_string(a) + ") out of range");
    return static_cast<std::size_t>((A - 1) * cols() + (a - 1));
  }

  std::vector<int> domain_ranks_;
  int rows_;
  std::vector<std::int64_t> entries_;
};

inline K0Matrix k0_matrix(const Embedding& phi) {
  K0Matrix k(phi.domain().ranks(), phi.codomain().atoms());
  for (const SummandMap& f : phi.summands())
    for (int a = 1; a <= phi.domain().atoms(); ++a) k.set(f(a), a, k.at(f(a), a) + 1);
  return k;
}

// ---------------------------------------------------------------- G maps

/// A pi-respecting homomorphism G(domain) -> G(codomain), given by the
/// images X(a,b) of the cell generators.
class GHom {
 public:
  GHom(NestAlgebra domain, NestAlgebra codomain) : domain_(std::move(domain)), codomain_(std::move(codomain)) {
    for (const Cell& c : domain_.cells()) images_.emplace(c, GElement(codomain_));
  }

  const NestAlgebra& domain() const noexcept { return domain_; }
  const NestAlgebra& codomain() const noexcept { return codomain_; }
  const std::map<Cell, GElement>& images() const noexcept { return images_; }

  const GElement& at(Cell c) const {
    auto it = images_.find(c);
    if (it == images_.end()) throw Error(Errc::NotInDomain, "cell is not a generator of " + domain_.to_string());
    return it->second;
  }

  void set(Cell c, GElement g) {
    if (!(g.ambient() == codomain_)) throw Error(Errc::AmbientMismatch, "image must live in " + codomain_.to_string());
    auto it = images_.find(c);
    if (it == images_.end()) throw Error(Errc::NotInDomain, "cell is not a generator of " + domain_.to_string());
    it->second = std::move(g);
  }

  /// Image y_a of the K0 class of a rank-one subprojection of atom a.
  std::vector<std::int64_t> margin(int a) const { return at({a, a}).pi_f(); }

  GElement apply(const GElement& g) const {
    if (!(g.ambient() == domain_)) throw Error(Errc::AmbientMismatch, "element must live in " + domain_.to_string());
    GElement out(codomain_);
    for (const Cell& c : domain_.cells())
      if (g.at(c) != 0) out += g.at(c) * at(c);
    return out;
  }

  friend bool operator==(const GHom& x, const GHom& y) {
    return x.domain_ == y.domain_ && x.codomain_ == y.codomain_ && x.images_ == y.images_;
  }

 private:
  NestAlgebra domain_;
  NestAlgebra codomain_;
  std::map<Cell, GElement> images_;
};

/// delta after gamma.
inline GHom compose(const GHom& delta, const GHom& gamma) {
  if (!(gamma.codomain() == delta.domain()))
    throw Error(Errc::DomainMismatch, "cannot compose " + gamma.codomain().to_string() + " into " + delta.domain().to_string());
  GHom out(gamma.domain(), delta.codomain());
  for (const Cell& c : gamma.domain().cells()) out.set(c, delta.apply(gamma.at(c)));
  return out;
}

/// Checks nonnegativity, margin consistency and scale preservation;
/// throws MarginMismatch naming the first failure.
inline void validate_ghom(const GHom& g) {
  const NestAlgebra& d = g.domain();
  const NestAlgebra& cod = g.codomain();
  auto fail = [](const std::string& m) { throw Error(Errc::MarginMismatch, m); };
  for (const Cell& c : d.cells()) {
    const GElement& x = g.at(c);
    if (!x.is_nonnegative()) fail("image of cell (" + std::to_string(c.row) + "," + std::to_string(c.col) + ") has a negative entry");
    if (x.pi_f() != g.margin(c.row))
      fail("row sums of X(" + std::to_string(c.row) + "," + std::to_string(c.col) + ") differ from X(" +
           std::to_string(c.row) + "," + std::to_string(c.row) + ")");
    if (x.pi_i() != g.margin(c.col))
      fail("column sums of X(" + std::to_string(c.row) + "," + std::to_string(c.col) + ") differ from X(" +
           std::to_string(c.col) + "," + std::to_string(c.col) + ")");
  }
  for (int a = 1; a <= d.atoms(); ++a)
    if (!g.at({a, a}).is_diagonal()) fail("X(" + std::to_string(a) + "," + std::to_string(a) + ") is not diagonal");
  for (int A = 1; A <= cod.atoms(); ++A) {
    std::int64_t load = 0;
    for (int a = 1; a <= d.atoms(); ++a) load += d.rank(a) * g.margin(a)[static_cast<std::size_t>(A - 1)];
    if (load > cod.rank(A))
      fail("codomain atom " + std::to_string(A) + " receives rank " + std::to_string(load) + " > " +
           std::to_string(cod.rank(A)));
  }
}

inline GHom g_map(const Embedding& phi) {
  GHom g(phi.domain(), phi.codomain());
  for (const Cell& c : phi.domain().cells()) {
    GElement x(phi.codomain());
    for (const SummandMap& f : phi.summands()) x.add({f(c.row), f(c.col)}, 1);
    g.set(c, std::move(x));
  }
  return g;
}

// ---------------------------------------------------------------- order properties

/// A pair (c, d) of distinct cells with c weakly northeast of d (c.row <=
/// d.row and c.col >= d.col): the obstruction to strict monotonicity.
inline std::optional<std::pair<Cell, Cell>> monotone_conflict(const CellSet& s) {
  for (const Cell& c : s)
    for (const Cell& d : s)
      if (!(c == d) && c.row <= d.row && c.col >= d.col) return std::pair{c, d};
  return std::nullopt;
}

struct OrderFlags {
  bool regular = true;
  bool loc = false;
  bool lop = false;
  bool oc = false;
  bool op = false;

  friend bool operator==(const OrderFlags&, const OrderFlags&) = default;
};

/// Why a flag is false: a domain support whose image cells contain the
/// conflicting pair (first, second).
struct OrderWitness {
  std::string property;
  CellSet domain_support;
  CellSet image;
  Cell first;
  Cell second;
};

struct OrderReport {
  OrderFlags flags;
  std::vector<OrderWitness> witnesses;
};

/// Decides the four order properties at block-support level.
///
/// Any conflict in an image cell set involves two image cells, each coming
/// from a single domain cell, and every subset of a feasible staircase
/// (resp. strictly monotone) support is again one. So OC and OP reduce to
/// domain supports with at most two cells, and LOC/LOP to singletons.
inline OrderReport classify_order_properties(const Embedding& phi) {
  OrderReport rep;
  const NestAlgebra& d = phi.domain();
  const std::vector<Cell> cells = d.cells();

  auto first_failure = [&](const std::string& prop, const std::vector<CellSet>& supports, bool monotone) -> bool {
    for (const CellSet& s : supports) {
      const CellSet img = image_cells(phi, s);
      auto bad = monotone ? monotone_conflict(img) : staircase_conflict(img);
      if (bad) {
        rep.witnesses.push_back({prop, s, img, bad->first, bad->second});
        return false;
      }
    }
    return true;
  };

  std::vector<CellSet> singles;
  for (const Cell& c : cells) singles.push_back({c});

  std::vector<CellSet> oc_pairs;
  std::vector<CellSet> op_pairs;
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      const Cell c = cells[i];
      const Cell e = cells[j];
      const CellSet s{c, e};
      if (is_strictly_monotone(s)) op_pairs.push_back(s);
      if (!is_staircase(s)) continue;
      auto over = [&](int atom, auto proj) {
        return static_cast<int>(proj(c) == atom) + static_cast<int>(proj(e) == atom) > d.rank(atom);
      };
      bool feasible = true;
      for (int a = 1; a <= d.atoms() && feasible; ++a)
        feasible = !over(a, [](const Cell& x) { return x.row; }) && !over(a, [](const Cell& x) { return x.col; });
      if (feasible) oc_pairs.push_back(s);
    }
  std::sort(oc_pairs.begin(), oc_pairs.end());
  std::sort(op_pairs.begin(), op_pairs.end());

  // A local failure is also the witness for the global property.
  auto inherit = [&](const std::string& from, const std::string& to) {
    for (const OrderWitness& w : rep.witnesses)
      if (w.property == from) {
        OrderWitness copy = w;
        copy.property = to;
        rep.witnesses.push_back(std::move(copy));
        return;
      }
  };
  rep.flags.loc = first_failure("loc", singles, false);
  rep.flags.lop = first_failure("lop", singles, true);
  rep.flags.oc = rep.flags.loc ? first_failure("oc", oc_pairs, false) : (inherit("loc", "oc"), false);
  rep.flags.op = rep.flags.lop ? first_failure("op", op_pairs, true) : (inherit("lop", "op"), false);
  return rep;
}

// ---------------------------------------------------------------- matrix-unit images

/// Images of domain matrix units e_{ij}, keyed by (i, j).
using MatrixUnitTable = std::map<PositionPair, StandardPisom>;

/// Images of every domain matrix unit under the standard form of phi.
inline MatrixUnitTable canonical_images(const Embedding& phi) {
  MatrixUnitTable t;
  const NestAlgebra& d = phi.domain();
  for (int i = 1; i <= d.total_rank(); ++i)
    for (int j = 1; j <= d.total_rank(); ++j)
      if (d.block_of(i) <= d.block_of(j)) t.emplace(PositionPair{i, j}, apply(phi, StandardPisom(d, {{i, j}})));
  return t;
}

/// One multiplicity-one summand recovered from matrix-unit images:
/// positions[i-1] is the codomain position carrying domain position i.
struct Track {
  SummandMap map;
  std::vector<int> positions;
};

/// Validates images of the generating matrix units and splits them into
/// tracks. Requires e_{ii} and e_{i,i+1} for every position i; further
/// entries are checked against the values forced by the relations. Each
/// rank-one subprojection p of the image of e_{11} determines the track
/// e_{i1}-image * p * e_{1i}-image, ordered by p.
inline std::vector<Track> matrix_unit_tracks(const NestAlgebra& domain, const NestAlgebra& codomain, const MatrixUnitTable& images) {
  const int n = domain.total_rank();
  auto rel = [](const std::string& m) { throw Error(Errc::RelationViolation, m); };
  auto unit_name = [](int i, int j) { return "e_{" + std::to_string(i) + "," + std::to_string(j) + "}"; };

  for (const auto& [key, img] : images) {
    if (!(img.ambient() == codomain))
      throw Error(Errc::NotInCodomainAlgebra, "image of " + unit_name(key.first, key.second) + " lives in " +
                                                  img.ambient().to_string() + ", not " + codomain.to_string());
    if (key.first < 1 || key.second < 1 || key.first > n || key.second > n ||
        domain.block_of(key.first) > domain.block_of(key.second))
      rel(unit_name(key.first, key.second) + " is not a matrix unit of " + domain.to_string());
  }
  auto get = [&](int i, int j) -> const StandardPisom& {
    auto it = images.find({i, j});
    if (it == images.end()) rel("missing image of " + unit_name(i, j));
    return it->second;
  };

  // Diagonal units go to nonzero, mutually orthogonal projections.
  std::vector<std::set<int>> proj(static_cast<std::size_t>(n + 1));
  std::set<int> used;
  for (int i = 1; i <= n; ++i) {
    const StandardPisom& p = get(i, i);
    if (!p.is_projection()) rel("image of " + unit_name(i, i) + " is not a projection");
    if (p.empty()) rel("image of " + unit_name(i, i) + " is zero, so the map is not injective");
    for (int x : p.final_positions())
      if (!used.insert(x).second) rel("images of the diagonal units are not orthogonal");
    proj[static_cast<std::size_t>(i)] = p.final_positions();
  }

  // Superdiagonal units are partial isometries between consecutive projections.
  std::map<PositionPair, std::set<PositionPair>> derived;
  for (int i = 1; i <= n; ++i) derived[{i, i}] = get(i, i).pairs();
  for (int i = 1; i < n; ++i) {
    const StandardPisom& v = get(i, i + 1);
    if (v.final_positions() != proj[static_cast<std::size_t>(i)] || v.initial_positions() != proj[static_cast<std::size_t>(i + 1)])
      rel("image of " + unit_name(i, i + 1) + " does not carry image of " + unit_name(i + 1, i + 1) + " onto image of " +
          unit_name(i, i));
    derived[{i, i + 1}] = v.pairs();
  }
  for (int len = 2; len < n; ++len)
    for (int i = 1; i + len <= n; ++i)
      derived[{i, i + len}] = compose_pairs(derived.at({i, i + len - 1}), derived.at({i + len - 1, i + len}));

  MatrixUnitTable full;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (domain.block_of(i) > domain.block_of(j)) continue;
      std::set<PositionPair> pairs = i <= j ? derived.at({i, j}) : adjoint_pairs(derived.at({j, i}));
      try {
        full.emplace(PositionPair{i, j}, StandardPisom(codomain, std::move(pairs)));
      } catch (const Error&) {
        throw Error(Errc::NotInCodomainAlgebra, "image of " + unit_name(i, j) + " is not in " + codomain.to_string());
      }
    }
  for (const auto& [key, img] : images)
    if (!(full.at(key) == img)) rel("image of " + unit_name(key.first, key.second) + " disagrees with the products of the generators");

  std::vector<Track> tracks;
  for (int p : proj[1]) {
    std::vector<int> track{p};
    for (int i = 2; i <= n; ++i) {
      int at = -1;
      for (const auto& [r, c] : derived.at({1, i}))
        if (r == p) at = c;
      track.push_back(at);
    }
    SummandMap f;
    for (int a = 1; a <= domain.atoms(); ++a) {
      const int atom = codomain.block_of(track[static_cast<std::size_t>(domain.first_position(a) - 1)]);
      for (int q = domain.first_position(a); q <= domain.last_position(a); ++q)
        if (codomain.block_of(track[static_cast<std::size_t>(q - 1)]) != atom)
          throw Error(Errc::IrregularImage, "positions of domain atom " + std::to_string(a) + " split across codomain atoms");
      f.image.push_back(atom);
    }
    tracks.push_back({std::move(f), std::move(track)});
  }
  return tracks;
}

/// Rebuilds an embedding, as a summand multiset, from images of the
/// generating matrix units.
inline Embedding from_matrix_unit_images(const NestAlgebra& domain, const NestAlgebra& codomain, const MatrixUnitTable& images) {
  std::vector<SummandMap> summands;
  for (Track& t : matrix_unit_tracks(domain, codomain, images)) summands.push_back(std::move(t.map));
  return Embedding(domain, codomain, std::move(summands));
}

}  // namespace nestlab
