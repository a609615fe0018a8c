#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "nestlab/embedding.hpp"

namespace nestlab {

/// Interval [lo, hi] of codomain atoms spanned by the image of the unit.
struct Hull {
  int lo = 0;
  int hi = 0;

  friend auto operator<=>(const Hull&, const Hull&) = default;
};

inline Hull hull(const SummandMap& f) { return {f.image.front(), f.image.back()}; }

/// Two hulls must share a group unless one ends (weakly) before the other starts.
inline bool hulls_conflict(const Hull& x, const Hull& y) { return !(x.hi <= y.lo || y.hi <= x.lo); }

struct OrderedDecomposition {
  std::vector<Embedding> groups;
  std::vector<Hull> hulls;
};

/// Finest ordered sum decomposition: connected components of the hull
/// conflict graph, listed in codomain order. Groups with equal hulls (only
/// possible for single-atom hulls) are ordered by their summand lists.
inline OrderedDecomposition ordered_decomposition(const Embedding& phi) {
  const auto& s = phi.summands();
  const std::size_t m = s.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (hulls_conflict(hull(s[i]), hull(s[j]))) parent[find(i)] = find(j);

  std::vector<std::vector<SummandMap>> members;
  std::vector<std::size_t> root_of_group;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t r = find(i);
    auto it = std::find(root_of_group.begin(), root_of_group.end(), r);
    if (it == root_of_group.end()) {
      root_of_group.push_back(r);
      members.push_back({s[i]});
    } else {
      members[static_cast<std::size_t>(it - root_of_group.begin())].push_back(s[i]);
    }
  }
  std::vector<std::pair<Hull, std::vector<SummandMap>>> keyed;
  for (auto& g : members) {
    Hull h = hull(g.front());
    for (const SummandMap& f : g) h = {std::min(h.lo, f.image.front()), std::max(h.hi, f.image.back())};
    std::sort(g.begin(), g.end());
    keyed.emplace_back(h, std::move(g));
  }
  std::sort(keyed.begin(), keyed.end());

  OrderedDecomposition out;
  for (auto& [h, g] : keyed) {
    out.hulls.push_back(h);
    out.groups.emplace_back(phi.domain(), phi.codomain(), std::move(g));
  }
  return out;
}

inline bool is_order_irreducible(const Embedding& phi) { return ordered_decomposition(phi).groups.size() == 1; }

/// Total orders on domain and codomain positions (listed first to last)
/// under which the image slots of each domain position precede those of
/// the next.
struct RefinementWitness {
  std::vector<int> domain_order;
  std::vector<int> codomain_order;
};

struct RefinementResult {
  bool value = false;
  std::optional<RefinementWitness> witness;
  std::string reason;
};

/// Refinement type test. Positions inside an atom are interchangeable, so
/// the search over within-atom orders collapses: the slots of two positions
/// of one domain atom can be separated only if every summand sends that
/// atom to the same codomain atom, and consecutive atoms need
/// max f(a) <= min f(a+1). Under LOC the summands form a pointwise chain,
/// so ordering each codomain atom by (domain position, summand) keeps every
/// matrix unit image order preserving.
inline RefinementResult is_refinement_type(const Embedding& phi) {
  RefinementResult res;
  const NestAlgebra& d = phi.domain();
  const NestAlgebra& c = phi.codomain();
  const auto& s = phi.summands();
  if (!classify_order_properties(phi).flags.loc) {
    res.reason = "not locally order conserving";
    return res;
  }
  auto lo = [&](int a) {
    int v = c.atoms();
    for (const SummandMap& f : s) v = std::min(v, f(a));
    return v;
  };
  auto hi = [&](int a) {
    int v = 1;
    for (const SummandMap& f : s) v = std::max(v, f(a));
    return v;
  };
  for (int a = 1; a <= d.atoms(); ++a) {
    if (d.rank(a) >= 2 && lo(a) != hi(a)) {
      res.reason = "domain atom " + std::to_string(a) + " of rank " + std::to_string(d.rank(a)) +
                   " is spread over codomain atoms " + std::to_string(lo(a)) + ".." + std::to_string(hi(a));
      return res;
    }
    if (a < d.atoms() && hi(a) > lo(a + 1)) {
      res.reason = "images of domain atoms " + std::to_string(a) + " and " + std::to_string(a + 1) + " interleave";
      return res;
    }
  }
  res.value = true;
  RefinementWitness w;
  for (int p = 1; p <= d.total_rank(); ++p) w.domain_order.push_back(p);
  for (int A = 1; A <= c.atoms(); ++A) {
    std::vector<bool> used(static_cast<std::size_t>(c.rank(A)), false);
    for (int p = 1; p <= d.total_rank(); ++p)
      for (std::size_t k = 0; k < s.size(); ++k) {
        const int slot = phi.slot(k, p);
        if (c.block_of(slot) != A) continue;
        w.codomain_order.push_back(slot);
        used[static_cast<std::size_t>(slot - c.first_position(A))] = true;
      }
    for (int q = c.first_position(A); q <= c.last_position(A); ++q)
      if (!used[static_cast<std::size_t>(q - c.first_position(A))]) w.codomain_order.push_back(q);
  }
  res.witness = std::move(w);
  return res;
}

/// Codomain atoms meeting the image of the unit.
inline std::vector<int> touched_atoms(const Embedding& phi) {
  std::set<int> t;
  for (const SummandMap& f : phi.summands()) t.insert(f.image.begin(), f.image.end());
  return {t.begin(), t.end()};
}

inline bool is_t2_degenerate(const Embedding& phi) { return touched_atoms(phi).size() <= 2; }

/// Counts r_1..r_{p+1} of summands by class: class k sends the last k-1
/// domain atoms to the second touched codomain atom and the rest to the
/// first.
inline std::vector<std::int64_t> multiplicity_signature(const Embedding& phi) {
  const std::vector<int> t = touched_atoms(phi);
  if (t.size() > 2)
    throw Error(Errc::NotT2Degenerate, "the unit meets " + std::to_string(t.size()) + " codomain atoms");
  const int p = phi.domain().atoms();
  std::vector<std::int64_t> sig(static_cast<std::size_t>(p + 1), 0);
  for (const SummandMap& f : phi.summands()) {
    const auto upper = t.size() == 2 ? std::count(f.image.begin(), f.image.end(), t[1]) : 0;
    ++sig[static_cast<std::size_t>(upper)];
  }
  return sig;
}

/// The two nonzero rows of the K0 matrix determined by a signature
/// (rank-one basis).
inline std::vector<std::vector<std::int64_t>> k0_rows_from_signature(const std::vector<std::int64_t>& sig) {
  const int p = static_cast<int>(sig.size()) - 1;
  std::vector<std::vector<std::int64_t>> rows(2, std::vector<std::int64_t>(static_cast<std::size_t>(p), 0));
  for (int j = 1; j <= p; ++j) {
    for (int k = 1; k <= p + 1 - j; ++k) rows[0][static_cast<std::size_t>(j - 1)] += sig[static_cast<std::size_t>(k - 1)];
    for (int k = p + 2 - j; k <= p + 1; ++k) rows[1][static_cast<std::size_t>(j - 1)] += sig[static_cast<std::size_t>(k - 1)];
  }
  return rows;
}

/// Rows of k0_matrix(phi) at the (at most two) touched atoms; a missing
/// second atom contributes a zero row.
inline std::vector<std::vector<std::int64_t>> k0_touched_rows(const Embedding& phi) {
  const std::vector<int> t = touched_atoms(phi);
  const K0Matrix k = k0_matrix(phi);
  std::vector<std::vector<std::int64_t>> rows(2, std::vector<std::int64_t>(static_cast<std::size_t>(k.cols()), 0));
  for (std::size_t r = 0; r < t.size() && r < 2; ++r)
    for (int a = 1; a <= k.cols(); ++a) rows[r][static_cast<std::size_t>(a - 1)] = k.at(t[r], a);
  return rows;
}

enum class SummandVerdict { RefinementType, T2Degenerate, Both, Neither };

constexpr std::string_view verdict_name(SummandVerdict v) {
  switch (v) {
    case SummandVerdict::RefinementType: return "RefinementType";
    case SummandVerdict::T2Degenerate: return "T2Degenerate";
    case SummandVerdict::Both: return "Both";
    case SummandVerdict::Neither: return "Neither";
  }
  return "?";
}

inline SummandVerdict classify_group(const Embedding& g) {
  const bool r = is_refinement_type(g).value;
  const bool t = is_t2_degenerate(g);
  if (r && t) return SummandVerdict::Both;
  if (r) return SummandVerdict::RefinementType;
  if (t) return SummandVerdict::T2Degenerate;
  return SummandVerdict::Neither;
}

/// Which structure statement applies to an embedding.
enum class StructureClaim {
  /// Triangular domain and codomain, order conserving: every group is of
  /// refinement type.
  TriangularRefinement,
  /// Domain without rank-one atoms, order conserving: every group is of
  /// refinement type or T2-degenerate.
  RefinementOrDegenerate,
  /// No statement; groups of neither kind are admissible.
  None,
};

constexpr std::string_view claim_name(StructureClaim c) {
  switch (c) {
    case StructureClaim::TriangularRefinement: return "triangular_refinement";
    case StructureClaim::RefinementOrDegenerate: return "refinement_or_degenerate";
    case StructureClaim::None: return "none";
  }
  return "?";
}

struct StructureReport {
  OrderedDecomposition decomposition;
  std::vector<SummandVerdict> verdicts;
  bool oc = false;
  StructureClaim claim = StructureClaim::None;
  /// Every group satisfies the applicable claim.
  bool consistent = true;
};

inline StructureReport structure_verdict(const Embedding& phi) {
  StructureReport rep;
  rep.decomposition = ordered_decomposition(phi);
  rep.oc = classify_order_properties(phi).flags.oc;
  for (const Embedding& g : rep.decomposition.groups) rep.verdicts.push_back(classify_group(g));

  const NestAlgebra& d = phi.domain();
  const bool no_rank_one = std::all_of(d.ranks().begin(), d.ranks().end(), [](int r) { return r >= 2; });
  if (rep.oc && d.triangular() && phi.codomain().triangular())
    rep.claim = StructureClaim::TriangularRefinement;
  else if (rep.oc && no_rank_one)
    rep.claim = StructureClaim::RefinementOrDegenerate;

  for (SummandVerdict v : rep.verdicts) {
    if (rep.claim == StructureClaim::TriangularRefinement)
      rep.consistent = rep.consistent && (v == SummandVerdict::RefinementType || v == SummandVerdict::Both);
    if (rep.claim == StructureClaim::RefinementOrDegenerate) rep.consistent = rep.consistent && v != SummandVerdict::Neither;
  }
  return rep;
}

}  // namespace nestlab
