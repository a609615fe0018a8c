#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nestlab/embedding.hpp"

namespace nestlab {

/// A permutation of positions that keeps every position inside its atom:
/// the standard-level form of a diagonal unitary.
class BlockPermutation {
 public:
  /// image[p-1] = sigma(p).
  BlockPermutation(NestAlgebra ambient, std::vector<int> image) : ambient_(std::move(ambient)), image_(std::move(image)) {
    const int n = ambient_.total_rank();
    if (static_cast<int>(image_.size()) != n) throw Error(Errc::InvalidPisom, "permutation has the wrong length");
    inverse_.assign(static_cast<std::size_t>(n), 0);
    for (int p = 1; p <= n; ++p) {
      const int q = image_[static_cast<std::size_t>(p - 1)];
      if (ambient_.block_of(q) != ambient_.block_of(p))
        throw Error(Errc::InvalidPisom, "permutation moves position " + std::to_string(p) + " out of its atom");
      if (inverse_[static_cast<std::size_t>(q - 1)] != 0) throw Error(Errc::InvalidPisom, "not a permutation");
      inverse_[static_cast<std::size_t>(q - 1)] = p;
    }
  }

  static BlockPermutation identity(const NestAlgebra& a) {
    std::vector<int> id(static_cast<std::size_t>(a.total_rank()));
    for (int p = 1; p <= a.total_rank(); ++p) id[static_cast<std::size_t>(p - 1)] = p;
    return BlockPermutation(a, std::move(id));
  }

  const NestAlgebra& ambient() const noexcept { return ambient_; }
  const std::vector<int>& image() const noexcept { return image_; }
  int operator()(int p) const { return image_.at(static_cast<std::size_t>(p - 1)); }
  int inverse(int p) const { return inverse_.at(static_cast<std::size_t>(p - 1)); }

  bool is_identity() const {
    for (int p = 1; p <= ambient_.total_rank(); ++p)
      if ((*this)(p) != p) return false;
    return true;
  }

 private:
  NestAlgebra ambient_;
  std::vector<int> image_;
  std::vector<int> inverse_;
};

/// sigma^{-1} v sigma, as a partial permutation: e_{rc} -> e_{sigma^{-1} r, sigma^{-1} c}.
inline StandardPisom conjugate(const StandardPisom& v, const BlockPermutation& sigma) {
  std::set<PositionPair> out;
  for (const auto& [r, c] : v.pairs()) out.insert({sigma.inverse(r), sigma.inverse(c)});
  return StandardPisom(v.ambient(), std::move(out));
}

inline MatrixUnitTable conjugate(const MatrixUnitTable& t, const BlockPermutation& sigma) {
  MatrixUnitTable out;
  for (const auto& [k, v] : t) out.emplace(k, conjugate(v, sigma));
  return out;
}

/// A block permutation sigma with sigma^{-1} psi(e) sigma = phi(e) for every
/// matrix unit e, given matrix-unit tables of two embeddings with the same
/// domain and codomain. Tracks with equal summand maps are matched in
/// order; codomain positions outside the range are matched increasingly
/// within each atom.
inline std::optional<BlockPermutation> find_conjugator(const NestAlgebra& domain, const NestAlgebra& codomain,
                                                       const MatrixUnitTable& phi, const MatrixUnitTable& psi) {
  const std::vector<Track> tp = matrix_unit_tracks(domain, codomain, phi);
  const std::vector<Track> tq = matrix_unit_tracks(domain, codomain, psi);
  if (tp.size() != tq.size()) return std::nullopt;

  std::map<SummandMap, std::vector<const Track*>> pending;
  for (const Track& t : tq) pending[t.map].push_back(&t);
  std::map<SummandMap, std::size_t> taken;

  const int m = codomain.total_rank();
  std::vector<int> sigma(static_cast<std::size_t>(m), 0);
  std::vector<bool> hit(static_cast<std::size_t>(m), false);
  for (const Track& t : tp) {
    auto it = pending.find(t.map);
    std::size_t& k = taken[t.map];
    if (it == pending.end() || k >= it->second.size()) return std::nullopt;
    const Track& match = *it->second[k++];
    for (std::size_t i = 0; i < t.positions.size(); ++i) {
      sigma[static_cast<std::size_t>(t.positions[i] - 1)] = match.positions[i];
      hit[static_cast<std::size_t>(match.positions[i] - 1)] = true;
    }
  }
  for (int A = 1; A <= codomain.atoms(); ++A) {
    std::vector<int> free_targets;
    for (int q = codomain.first_position(A); q <= codomain.last_position(A); ++q)
      if (!hit[static_cast<std::size_t>(q - 1)]) free_targets.push_back(q);
    std::size_t next = 0;
    for (int p = codomain.first_position(A); p <= codomain.last_position(A); ++p)
      if (sigma[static_cast<std::size_t>(p - 1)] == 0) sigma[static_cast<std::size_t>(p - 1)] = free_targets.at(next++);
  }
  BlockPermutation w(codomain, std::move(sigma));

  // Compare on every domain matrix unit, rebuilt from the tracks.
  for (int i = 1; i <= domain.total_rank(); ++i)
    for (int j = 1; j <= domain.total_rank(); ++j) {
      if (domain.block_of(i) > domain.block_of(j)) continue;
      std::set<PositionPair> a, b;
      for (const Track& t : tp) a.insert({t.positions[static_cast<std::size_t>(i - 1)], t.positions[static_cast<std::size_t>(j - 1)]});
      for (const Track& t : tq) b.insert({t.positions[static_cast<std::size_t>(i - 1)], t.positions[static_cast<std::size_t>(j - 1)]});
      if (!(conjugate(StandardPisom(codomain, b), w) == StandardPisom(codomain, a))) return std::nullopt;
    }
  return w;
}

/// Inner conjugacy of two embeddings by a diagonal (block) permutation.
/// This holds exactly when the summand multisets agree.
inline std::optional<BlockPermutation> inner_conjugate(const Embedding& phi, const Embedding& psi) {
  if (!(phi.domain() == psi.domain()) || !(phi.codomain() == psi.codomain())) return std::nullopt;
  if (phi.summands() != psi.summands()) return std::nullopt;
  return find_conjugator(phi.domain(), phi.codomain(), canonical_images(phi), canonical_images(psi));
}

/// Recovers the summand multiset of the locally order conserving embedding
/// with K0 matrix `k`.
///
/// The summands of an LOC embedding form a pointwise chain (two summands
/// with f_s(a) < f_t(a) and f_s(b) > f_t(b) put a strictly northeast pair
/// into the image of cell (min(a,b), max(a,b))). The least element of the
/// chain sends each atom a to the first codomain atom with a positive entry
/// in column a, so peeling that map and repeating recovers the multiset.
inline std::vector<SummandMap> recover_summands_from_k0(const NestAlgebra& domain, const NestAlgebra& codomain, const K0Matrix& k) {
  if (k.cols() != domain.atoms() || k.rows() != codomain.atoms())
    throw Error(Errc::InconsistentColumns, "K0 matrix shape does not match " + domain.to_string() + " -> " + codomain.to_string());
  const std::vector<std::int64_t> sums = k.column_sums();
  for (int a = 1; a <= k.cols(); ++a) {
    for (int A = 1; A <= k.rows(); ++A)
      if (k.at(A, a) < 0) throw Error(Errc::InconsistentColumns, "K0 matrix has a negative entry");
    if (sums[static_cast<std::size_t>(a - 1)] != sums.front())
      throw Error(Errc::InconsistentColumns, "column " + std::to_string(a) + " sums to " +
                                                 std::to_string(sums[static_cast<std::size_t>(a - 1)]) + ", column 1 to " +
                                                 std::to_string(sums.front()));
  }
  if (sums.front() == 0) throw Error(Errc::InconsistentColumns, "K0 matrix is zero");

  K0Matrix rest = k;
  std::vector<SummandMap> out;
  for (std::int64_t step = 0; step < sums.front(); ++step) {
    SummandMap f;
    for (int a = 1; a <= k.cols(); ++a) {
      int A = 1;
      while (rest.at(A, a) == 0) ++A;
      rest.set(A, a, rest.at(A, a) - 1);
      f.image.push_back(A);
    }
    out.push_back(std::move(f));
  }

  auto fail = [](const std::string& why) { throw Error(Errc::NoLocRealization, why); };
  for (const SummandMap& f : out)
    if (!is_monotone(f)) fail("peeled map " + f.to_string() + " is not monotone");
  std::optional<Embedding> e;
  try {
    e.emplace(domain, codomain, out);
  } catch (const Error& err) {
    fail(std::string("peeled maps do not form an embedding: ") + err.what());
  }
  if (!(k0_matrix(*e) == k)) fail("peeled maps do not reproduce the K0 matrix");
  if (!classify_order_properties(*e).flags.loc) fail("the peeled embedding is not locally order conserving");
  return e->summands();
}

}  // namespace nestlab
