#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nestlab/system.hpp"

namespace nestlab::cli {

enum class Kind { Algebra, Embedding, GHom, System };

constexpr std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::Algebra: return "algebra";
    case Kind::Embedding: return "embedding";
    case Kind::GHom: return "ghom";
    case Kind::System: return "system";
  }
  return "?";
}

struct NamedSystem {
  std::vector<std::string> stages;  // algebra names
  std::vector<std::string> maps;    // embedding names
  DirectSystem system;
};

/// Named objects in declaration order. Names are unique across kinds.
class Workspace {
 public:
  bool has(const std::string& name) const { return kinds_.count(name) > 0; }
  std::optional<Kind> kind_of(const std::string& name) const {
    auto it = kinds_.find(name);
    if (it == kinds_.end()) return std::nullopt;
    return it->second;
  }
  const std::vector<std::string>& order() const noexcept { return order_; }
  bool empty() const noexcept { return order_.empty(); }

  void add(const std::string& name, NestAlgebra a) {
    claim(name, Kind::Algebra);
    algebras_.emplace(name, std::move(a));
  }
  void add(const std::string& name, std::string dom, std::string cod, Embedding e) {
    claim(name, Kind::Embedding);
    ends_.emplace(name, std::make_pair(std::move(dom), std::move(cod)));
    embeddings_.emplace(name, std::move(e));
  }
  void add(const std::string& name, std::string dom, std::string cod, GHom g) {
    claim(name, Kind::GHom);
    ends_.emplace(name, std::make_pair(std::move(dom), std::move(cod)));
    ghoms_.emplace(name, std::move(g));
  }
  void add(const std::string& name, NamedSystem s) {
    claim(name, Kind::System);
    systems_.emplace(name, std::move(s));
  }

  const NestAlgebra& algebra(const std::string& n) const { return get(algebras_, n, Kind::Algebra); }
  const Embedding& embedding(const std::string& n) const { return get(embeddings_, n, Kind::Embedding); }
  const GHom& ghom(const std::string& n) const { return get(ghoms_, n, Kind::GHom); }
  const NamedSystem& system(const std::string& n) const { return get(systems_, n, Kind::System); }
  /// Domain and codomain algebra names of an embedding or ghom.
  const std::pair<std::string, std::string>& ends(const std::string& n) const { return ends_.at(n); }

  friend bool operator==(const Workspace& a, const Workspace& b) {
    if (a.order_ != b.order_ || a.kinds_ != b.kinds_ || a.algebras_ != b.algebras_ || a.embeddings_ != b.embeddings_ ||
        a.ghoms_ != b.ghoms_ || a.ends_ != b.ends_ || a.systems_.size() != b.systems_.size())
      return false;
    for (const auto& [n, s] : a.systems_) {
      const NamedSystem& t = b.systems_.at(n);
      if (s.stages != t.stages || s.maps != t.maps) return false;
    }
    return true;
  }

 private:
  void claim(const std::string& name, Kind k) {
    if (has(name)) throw Error(Errc::DuplicateName, "name '" + name + "' is already declared");
    kinds_.emplace(name, k);
    order_.push_back(name);
  }

  template <class M>
  static const typename M::mapped_type& get(const M& m, const std::string& n, Kind k) {
    auto it = m.find(n);
    if (it == m.end()) throw Error(Errc::UnknownReference, "no " + std::string(kind_name(k)) + " named '" + n + "'");
    return it->second;
  }

  std::vector<std::string> order_;
  std::map<std::string, Kind> kinds_;
  std::map<std::string, NestAlgebra> algebras_;
  std::map<std::string, Embedding> embeddings_;
  std::map<std::string, GHom> ghoms_;
  std::map<std::string, std::pair<std::string, std::string>> ends_;
  std::map<std::string, NamedSystem> systems_;
};

namespace detail {

inline std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

}  // namespace detail

/// Source text that parses back to the same workspace.
inline std::string print(const Workspace& ws) {
  std::string out;
  for (const std::string& n : ws.order()) {
    switch (*ws.kind_of(n)) {
      case Kind::Algebra:
        out += "algebra " + n + " = nest(" + detail::join_ints(ws.algebra(n).ranks()) + ")\n";
        break;
      case Kind::Embedding: {
        const auto& [d, c] = ws.ends(n);
        out += "embedding " + n + " : " + d + " -> " + c + " = summands{ ";
        const auto& s = ws.embedding(n).summands();
        for (std::size_t k = 0; k < s.size();) {
          std::size_t j = k;
          while (j < s.size() && s[j] == s[k]) ++j;
          if (k) out += "; ";
          out += "(" + detail::join_ints(s[k].image) + ")";
          if (j - k > 1) out += " x" + std::to_string(j - k);
          k = j;
        }
        out += " }\n";
        break;
      }
      case Kind::GHom: {
        const auto& [d, c] = ws.ends(n);
        out += "ghom " + n + " : " + d + " -> " + c + " =";
        for (const auto& [cell, g] : ws.ghom(n).images()) {
          out += " cell(" + std::to_string(cell.row) + "," + std::to_string(cell.col) + "){";
          bool first = true;
          for (const Cell& x : g.support()) {
            out += std::string(first ? " " : "; ") + "(" + std::to_string(x.row) + "," + std::to_string(x.col) + "):" +
                   std::to_string(g.at(x));
            first = false;
          }
          out += " }";
        }
        out += "\n";
        break;
      }
      case Kind::System: {
        const NamedSystem& s = ws.system(n);
        out += "system " + n + " = " + s.stages.front();
        for (std::size_t k = 0; k < s.maps.size(); ++k) out += " -" + s.maps[k] + "-> " + s.stages[k + 1];
        out += "\n";
        break;
      }
    }
  }
  return out;
}

}  // namespace nestlab::cli
