#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nestlab/conjugacy.hpp"
#include "nestlab/embedding.hpp"
#include "nestlab/lift.hpp"
#include "nestlab/structure.hpp"

namespace nestlab {

/// Finite presentation A_0 -> A_1 -> ... of a direct system.
class DirectSystem {
 public:
  DirectSystem(std::vector<NestAlgebra> stages, std::vector<Embedding> maps)
      : stages_(std::move(stages)), maps_(std::move(maps)) {
    if (stages_.empty()) throw Error(Errc::ChainMismatch, "a system needs at least one stage");
    if (maps_.size() + 1 != stages_.size())
      throw Error(Errc::ChainMismatch, std::to_string(stages_.size()) + " stages need " + std::to_string(stages_.size() - 1) +
                                           " maps, got " + std::to_string(maps_.size()));
    for (std::size_t k = 0; k < maps_.size(); ++k)
      if (!(maps_[k].domain() == stages_[k]) || !(maps_[k].codomain() == stages_[k + 1]))
        throw Error(Errc::ChainMismatch, "map " + std::to_string(k) + " runs " + maps_[k].domain().to_string() + " -> " +
                                             maps_[k].codomain().to_string() + ", expected " + stages_[k].to_string() + " -> " +
                                             stages_[k + 1].to_string());
  }

  const std::vector<NestAlgebra>& stages() const noexcept { return stages_; }
  const std::vector<Embedding>& maps() const noexcept { return maps_; }
  int size() const noexcept { return static_cast<int>(stages_.size()); }
  const NestAlgebra& stage(int k) const { return stages_.at(static_cast<std::size_t>(k)); }

  /// The system map A_k -> A_l, k <= l.
  Embedding composite(int k, int l) const {
    if (k < 0 || l >= size() || k > l)
      throw Error(Errc::StageOutOfRange, "no system map from stage " + std::to_string(k) + " to stage " + std::to_string(l));
    Embedding e = identity_embedding(stage(k));
    for (int j = k; j < l; ++j) e = compose(maps_[static_cast<std::size_t>(j)], e);
    return e;
  }

 private:
  std::vector<NestAlgebra> stages_;
  std::vector<Embedding> maps_;
};

inline DirectSystem make_system(std::vector<NestAlgebra> stages, std::vector<Embedding> maps) {
  return DirectSystem(std::move(stages), std::move(maps));
}

/// Keeps stages `keep` (strictly increasing) with the composite maps between them.
inline DirectSystem telescope(const DirectSystem& s, const std::vector<int>& keep) {
  std::vector<NestAlgebra> st;
  std::vector<Embedding> mp;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    st.push_back(s.stage(keep[i]));
    if (i > 0) {
      if (keep[i] <= keep[i - 1]) throw Error(Errc::ChainMismatch, "telescope stages must increase");
      mp.push_back(s.composite(keep[i - 1], keep[i]));
    }
  }
  return DirectSystem(std::move(st), std::move(mp));
}

struct CompositeFlags {
  int from = 0;
  int to = 0;
  OrderFlags flags;
  bool refinement = false;
};

struct SystemReport {
  std::vector<CompositeFlags> composites;
  bool loc = true;
  bool lop = true;
  bool oc = true;
  bool op = true;
};

/// Order flags of every composite A_k -> A_l (k < l) and membership of the
/// presentation in the LOC / LOP / OC / OP system families.
inline SystemReport classify_system(const DirectSystem& s) {
  SystemReport rep;
  for (int k = 0; k < s.size(); ++k)
    for (int l = k + 1; l < s.size(); ++l) {
      const Embedding e = s.composite(k, l);
      CompositeFlags c{k, l, classify_order_properties(e).flags, is_refinement_type(e).value};
      rep.loc = rep.loc && c.flags.loc;
      rep.lop = rep.lop && c.flags.lop;
      rep.oc = rep.oc && c.flags.oc;
      rep.op = rep.op && c.flags.op;
      rep.composites.push_back(c);
    }
  return rep;
}

// ---------------------------------------------------------------- invariant

struct LimitElement {
  int stage = 0;
  GElement value;
};

enum class Tri { Yes, No, Unknown };

constexpr std::string_view tri_name(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

enum class ScaleKind { Sigma, Sigma0, SigmaOC, SigmaOP };

constexpr std::string_view scale_name(ScaleKind k) {
  switch (k) {
    case ScaleKind::Sigma: return "sigma";
    case ScaleKind::Sigma0: return "sigma0";
    case ScaleKind::SigmaOC: return "sigma_oc";
    case ScaleKind::SigmaOP: return "sigma_op";
  }
  return "?";
}

inline constexpr int default_horizon = 8;

/// Rank over Q of an integer matrix, by fraction-free elimination.
inline int integer_rank(std::vector<std::vector<boost::multiprecision::cpp_int>> m) {
  using boost::multiprecision::cpp_int;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  std::size_t rank = 0;
  cpp_int prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

/// The colimit presentation of the dimension distribution group of a
/// system: the cell lattices of the stages and the G maps between them.
class SystemInvariant {
 public:
  explicit SystemInvariant(DirectSystem s) : system_(std::move(s)) {
    for (const Embedding& e : system_.maps()) transitions_.push_back(g_map(e));
  }

  const DirectSystem& system() const noexcept { return system_; }
  const GHom& transition(int k) const { return transitions_.at(static_cast<std::size_t>(k)); }

  LimitElement push(const LimitElement& e, int to) const {
    if (to < e.stage || to >= system_.size())
      throw Error(Errc::StageOutOfRange, "cannot push from stage " + std::to_string(e.stage) + " to stage " + std::to_string(to));
    GElement g = e.value;
    for (int k = e.stage; k < to; ++k) g = transition(k).apply(g);
    return {to, std::move(g)};
  }

  bool transition_injective(int k) const {
    const GHom& t = transition(k);
    const std::vector<Cell> in = t.domain().cells();
    const std::vector<Cell> out = t.codomain().cells();
    std::vector<std::vector<boost::multiprecision::cpp_int>> m(out.size(), std::vector<boost::multiprecision::cpp_int>(in.size()));
    for (std::size_t j = 0; j < in.size(); ++j)
      for (std::size_t i = 0; i < out.size(); ++i) m[i][j] = t.at(in[j]).at(out[i]);
    return integer_rank(std::move(m)) == static_cast<int>(in.size());
  }

  /// Equality in the limit. Equal if the pushforwards agree at some stage
  /// within the horizon. Unequal if they still differ at the last stage
  /// examined and every later presented transition is injective (the
  /// presentation is taken as the whole system). Otherwise unknown.
  Tri limit_equal(const LimitElement& x, const LimitElement& y, int horizon = default_horizon) const {
    int t = std::max(x.stage, y.stage);
    const int stop = std::min(system_.size() - 1, t + horizon);
    for (;; ++t) {
      if (push(x, t).value == push(y, t).value) return Tri::Yes;
      if (t == stop) break;
    }
    for (int k = t; k + 1 < system_.size(); ++k)
      if (!transition_injective(k)) return Tri::Unknown;
    return Tri::No;
  }

  Tri scale_membership(const LimitElement& e, ScaleKind which, int horizon = default_horizon) const {
    const NestAlgebra& a = system_.stage(e.stage);
    const GElement& g = e.value;
    if (which == ScaleKind::Sigma) return g.in_scale() ? Tri::Yes : Tri::No;
    if (which == ScaleKind::Sigma0) {
      if (!g.is_nonnegative() || !g.is_diagonal()) return Tri::No;
      for (int k = 1; k <= a.atoms(); ++k)
        if (g.at({k, k}) > a.rank(k)) return Tri::No;
      return Tri::Yes;
    }
    if (!g.in_scale()) return Tri::No;
    auto shape_ok = [&](const GElement& h) {
      return which == ScaleKind::SigmaOC ? is_staircase(h.support()) : is_strictly_monotone(h.support());
    };
    const int stop = std::min(system_.size() - 1, e.stage + horizon);
    for (int t = e.stage; t <= stop; ++t) {
      const GElement h = push(e, t).value;
      if (!shape_ok(h)) return Tri::No;
      // Diagonal support is carried to diagonal support by every G map.
      if (h.is_diagonal()) return Tri::Yes;
    }
    return stop == system_.size() - 1 ? Tri::Yes : Tri::Unknown;
  }

  /// The G maps commute with the row and column sum maps to K0.
  bool pi_diagrams_commute() const {
    for (std::size_t k = 0; k < transitions_.size(); ++k) {
      const GHom& t = transitions_[k];
      const K0Matrix n = k0_matrix(system_.maps()[k]);
      auto push_k0 = [&](const std::vector<std::int64_t>& v) {
        std::vector<std::int64_t> out(static_cast<std::size_t>(n.rows()), 0);
        for (int A = 1; A <= n.rows(); ++A)
          for (int a = 1; a <= n.cols(); ++a) out[static_cast<std::size_t>(A - 1)] += n.at(A, a) * v[static_cast<std::size_t>(a - 1)];
        return out;
      };
      for (const Cell& c : t.domain().cells()) {
        const GElement g = GElement::unit(t.domain(), c);
        if (t.apply(g).pi_f() != push_k0(g.pi_f()) || t.apply(g).pi_i() != push_k0(g.pi_i())) return false;
      }
    }
    return true;
  }

 private:
  DirectSystem system_;
  std::vector<GHom> transitions_;
};

// ---------------------------------------------------------------- intertwining

/// A commuting zig-zag A_{n_1} -> B_{m_1} -> A_{n_2} -> ... -> B_{m_d} -> A_{n_{d+1}}.
struct Intertwining {
  std::vector<int> a_stages;
  std::vector<int> b_stages;
  std::vector<Embedding> forward;   // A_{n_k} -> B_{m_k}
  std::vector<Embedding> backward;  // B_{m_k} -> A_{n_{k+1}}
};

/// The unique staircase matrix with the given row and column sums
/// (northwest corner rule), or nothing if it leaves the upper cells.
inline std::optional<GElement> northwest_corner(const NestAlgebra& a, std::vector<std::int64_t> rows, std::vector<std::int64_t> cols) {
  GElement g(a);
  std::size_t i = 0, j = 0;
  const std::size_t l = rows.size();
  while (i < l && j < l) {
    if (rows[i] == 0) {
      ++i;
      continue;
    }
    if (cols[j] == 0) {
      ++j;
      continue;
    }
    const std::int64_t m = std::min(rows[i], cols[j]);
    if (i > j) return std::nullopt;
    g.add({static_cast<int>(i + 1), static_cast<int>(j + 1)}, m);
    rows[i] -= m;
    cols[j] -= m;
  }
  return g;
}

/// Locally order conserving homomorphisms G(a) -> G(b) with every entry at
/// most `bound`. They are determined by their K0 margins: for each domain
/// atom a sorted tuple of codomain atoms, pointwise nondecreasing in a, and
/// each X(a,b) is the northwest-corner matrix of its margins.
inline std::vector<GHom> loc_ghom_candidates(const NestAlgebra& a, const NestAlgebra& b, int bound) {
  std::vector<GHom> out;
  const int l = a.atoms();
  const int L = b.atoms();
  int max_mu = b.total_rank();
  for (int r : a.ranks()) max_mu = std::min(max_mu, b.total_rank() / r);

  for (int mu = 1; mu <= max_mu; ++mu) {
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(l), std::vector<int>(static_cast<std::size_t>(mu)));
    std::vector<std::int64_t> load(static_cast<std::size_t>(L), 0);
    std::function<void(int, int)> go = [&](int atom, int k) {
      if (atom > l) {
        GHom g(a, b);
        std::vector<std::vector<std::int64_t>> y(static_cast<std::size_t>(l), std::vector<std::int64_t>(static_cast<std::size_t>(L), 0));
        for (int x = 0; x < l; ++x)
          for (int v : cols[static_cast<std::size_t>(x)]) ++y[static_cast<std::size_t>(x)][static_cast<std::size_t>(v - 1)];
        for (const Cell& c : a.cells()) {
          auto x = northwest_corner(b, y[static_cast<std::size_t>(c.row - 1)], y[static_cast<std::size_t>(c.col - 1)]);
          if (!x || x->max_entry() > bound) return;
          if (c.row == c.col && !x->is_diagonal()) return;
          g.set(c, std::move(*x));
        }
        out.push_back(std::move(g));
        return;
      }
      if (k == mu) {
        go(atom + 1, 0);
        return;
      }
      auto& col = cols[static_cast<std::size_t>(atom - 1)];
      int lo = k > 0 ? col[static_cast<std::size_t>(k - 1)] : 1;
      if (atom > 1) lo = std::max(lo, cols[static_cast<std::size_t>(atom - 2)][static_cast<std::size_t>(k)]);
      for (int v = lo; v <= L; ++v) {
        if (load[static_cast<std::size_t>(v - 1)] + a.rank(atom) > b.rank(v)) continue;
        load[static_cast<std::size_t>(v - 1)] += a.rank(atom);
        col[static_cast<std::size_t>(k)] = v;
        go(atom, k + 1);
        load[static_cast<std::size_t>(v - 1)] -= a.rank(atom);
      }
    };
    go(1, 0);
  }
  return out;
}

/// Bounded search for an intertwining of depth `depth` between two
/// presentations, starting at stage 0 of `sa`. Candidate maps are the
/// locally order conserving homomorphisms with entries at most `bound`,
/// lifted to embeddings; each triangle must commute on G and the lifted
/// composite must be inner conjugate to the system map. Returns the first
/// success in lexicographic order of (stages, candidates), or nothing when
/// the search space is exhausted (which does not refute isomorphism).
inline std::optional<Intertwining> inv_compare(const DirectSystem& sa, const DirectSystem& sb, int depth, int bound) {
  if (depth < 1) throw Error(Errc::MissingArgument, "depth must be at least 1");
  Intertwining cur;
  cur.a_stages.push_back(0);

  std::function<bool()> step = [&]() -> bool {
    const std::size_t k = cur.backward.size();  // completed zig-zags
    if (static_cast<int>(k) == depth) return true;
    const int n = cur.a_stages.back();
    const int m_min = cur.b_stages.empty() ? 0 : cur.b_stages.back() + 1;
    for (int m = m_min; m < sb.size(); ++m) {
      const NestAlgebra& bm = sb.stage(m);
      for (const GHom& fg : loc_ghom_candidates(sa.stage(n), bm, bound)) {
        // Lower triangle: phi_k psi_{k-1} = beta(m_{k-1} -> m).
        if (k > 0) {
          const Embedding beta = sb.composite(cur.b_stages.back(), m);
          if (!(compose(fg, g_map(cur.backward.back())) == g_map(beta))) continue;
        }
        const Embedding phi = lift_ghom(fg, LiftMode::LOC);
        if (k > 0 && !inner_conjugate(compose(phi, cur.backward.back()), sb.composite(cur.b_stages.back(), m))) continue;
        for (int n2 = n + 1; n2 < sa.size(); ++n2) {
          const Embedding alpha = sa.composite(n, n2);
          const GHom target = g_map(alpha);
          for (const GHom& bg : loc_ghom_candidates(bm, sa.stage(n2), bound)) {
            if (!(compose(bg, fg) == target)) continue;
            const Embedding psi = lift_ghom(bg, LiftMode::LOC);
            if (!inner_conjugate(compose(psi, phi), alpha)) continue;
            cur.b_stages.push_back(m);
            cur.forward.push_back(phi);
            cur.a_stages.push_back(n2);
            cur.backward.push_back(psi);
            if (step()) return true;
            cur.b_stages.pop_back();
            cur.forward.pop_back();
            cur.a_stages.pop_back();
            cur.backward.pop_back();
          }
        }
      }
    }
    return false;
  };
  if (step()) return cur;
  return std::nullopt;
}

enum class AutoMode { OC, OP };

struct AutoCheck {
  bool hypothesis_met = false;
  bool holds = true;
};

/// If psi phi and eta psi both have the property, so does eta psi phi.
inline AutoCheck check_autooc(const Embedding& phi, const Embedding& psi, const Embedding& eta, AutoMode mode) {
  if (!(phi.codomain() == psi.domain()) || !(psi.codomain() == eta.domain()))
    throw Error(Errc::ChainMismatch, "maps do not form a chain");
  auto has = [&](const Embedding& e) {
    const OrderFlags f = classify_order_properties(e).flags;
    return mode == AutoMode::OC ? f.oc : f.op;
  };
  const Embedding pp = compose(psi, phi);
  AutoCheck r;
  r.hypothesis_met = has(pp) && has(compose(eta, psi));
  if (r.hypothesis_met) r.holds = has(compose(eta, pp));
  return r;
}

}  // namespace nestlab
