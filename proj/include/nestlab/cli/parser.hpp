#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "nestlab/cli/workspace.hpp"

namespace nestlab::cli {

/// An error located in the input text (1-based line and column).
class ParseError : public Error {
 public:
  ParseError(Errc code, int line, int col, const std::string& msg)
      : Error(code, std::to_string(line) + ":" + std::to_string(col) + ": " + msg), line_(line), col_(col) {}
  int line() const noexcept { return line_; }
  int col() const noexcept { return col_; }

 private:
  int line_;
  int col_;
};

namespace detail {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok type;
  std::string text;
  int line;
  int col;
};

inline std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l = line, cc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), l, cc});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, std::string(src.substr(i, j - i)), l, cc});
      advance(j - i);
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Tok::Punct, "->", l, cc});
      advance(2);
    } else if (std::string_view("=(),:{};-").find(c) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, c), l, cc});
      advance(1);
    } else {
      throw ParseError(Errc::SyntaxError, l, cc, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  Workspace run() {
    Workspace ws;
    while (peek().type != Tok::End) statement(ws);
    return ws;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const Token& t, Errc code, const std::string& msg) const { throw ParseError(code, t.line, t.col, msg); }

  static std::string describe(const Token& t) { return t.type == Tok::End ? "end of input" : "'" + t.text + "'"; }

  const Token& expect(std::string_view punct) {
    const Token& t = take();
    if (t.type != Tok::Punct || t.text != punct) fail(t, Errc::SyntaxError, "expected '" + std::string(punct) + "', found " + describe(t));
    return t;
  }
  bool accept(std::string_view punct) {
    if (peek().type == Tok::Punct && peek().text == punct) {
      ++pos_;
      return true;
    }
    return false;
  }
  const Token& ident(const std::string& what) {
    const Token& t = take();
    if (t.type != Tok::Ident) fail(t, Errc::SyntaxError, "expected " + what + ", found " + describe(t));
    return t;
  }
  void keyword(std::string_view kw) {
    const Token& t = take();
    if (t.type != Tok::Ident || t.text != kw) fail(t, Errc::SyntaxError, "expected '" + std::string(kw) + "', found " + describe(t));
  }
  int integer() {
    const Token& t = take();
    if (t.type != Tok::Int) fail(t, Errc::SyntaxError, "expected an integer, found " + describe(t));
    if (t.text.size() > 9) fail(t, Errc::SyntaxError, "integer " + t.text + " is too large");
    return std::stoi(t.text);
  }
  std::vector<int> tuple() {
    std::vector<int> v;
    expect("(");
    v.push_back(integer());
    while (accept(",")) v.push_back(integer());
    expect(")");
    return v;
  }

  const NestAlgebra& algebra_ref(const Workspace& ws, const Token& t) const {
    const auto k = ws.kind_of(t.text);
    if (!k) fail(t, Errc::UnknownReference, "unknown algebra '" + t.text + "'");
    if (*k != Kind::Algebra) fail(t, Errc::UnknownReference, "'" + t.text + "' is " + std::string(kind_name(*k)) + ", not an algebra");
    return ws.algebra(t.text);
  }

  template <class F>
  auto guarded(const Token& at, F&& f) const {
    try {
      return f();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(at, Errc::InvariantViolation, std::string(errc_name(e.code())) + ": " + e.what());
    }
  }

  void declare(Workspace& ws, const Token& name, auto&& add) {
    if (ws.has(name.text)) fail(name, Errc::DuplicateName, "name '" + name.text + "' is already declared");
    add();
  }

  void statement(Workspace& ws) {
    const Token& kw = ident("a declaration keyword");
    if (kw.text == "algebra") {
      const Token& name = ident("a name");
      expect("=");
      keyword("nest");
      const Token& open = peek();
      const std::vector<int> r = tuple();
      NestAlgebra a = guarded(open, [&] { return make_nest(r); });
      declare(ws, name, [&] { ws.add(name.text, std::move(a)); });
    } else if (kw.text == "embedding") {
      const Token& name = ident("a name");
      expect(":");
      const Token& dn = ident("a domain algebra");
      expect("->");
      const Token& cn = ident("a codomain algebra");
      const NestAlgebra& d = algebra_ref(ws, dn);
      const NestAlgebra& c = algebra_ref(ws, cn);
      expect("=");
      const Token& body = peek();
      keyword("summands");
      expect("{");
      std::vector<SummandMap> s;
      while (!accept("}")) {
        SummandMap f{tuple()};
        int count = 1;
        if (peek().type == Tok::Ident && peek().text.size() > 1 && peek().text[0] == 'x' &&
            std::all_of(peek().text.begin() + 1, peek().text.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
          const Token& m = take();
          if (m.text.size() > 7) fail(m, Errc::SyntaxError, "multiplicity " + m.text + " is too large");
          count = std::stoi(m.text.substr(1));
          if (count < 1) fail(m, Errc::SyntaxError, "multiplicity must be positive");
        }
        for (int k = 0; k < count; ++k) s.push_back(f);
        if (!accept(";")) {
          expect("}");
          break;
        }
      }
      Embedding e = guarded(body, [&] { return Embedding(d, c, std::move(s)); });
      declare(ws, name, [&] { ws.add(name.text, dn.text, cn.text, std::move(e)); });
    } else if (kw.text == "ghom") {
      const Token& name = ident("a name");
      expect(":");
      const Token& dn = ident("a domain algebra");
      expect("->");
      const Token& cn = ident("a codomain algebra");
      const NestAlgebra& d = algebra_ref(ws, dn);
      const NestAlgebra& c = algebra_ref(ws, cn);
      expect("=");
      GHom g(d, c);
      std::set<Cell> seen;
      while (peek().type == Tok::Ident && peek().text == "cell") {
        const Token& at = take();
        const std::vector<int> rc = tuple();
        if (rc.size() != 2) fail(at, Errc::SyntaxError, "a cell has two coordinates");
        const Cell cell{rc[0], rc[1]};
        if (!d.contains(cell)) fail(at, Errc::InvariantViolation, "cell (" + detail::join_ints(rc) + ") is not a cell of " + d.to_string());
        if (!seen.insert(cell).second) fail(at, Errc::DuplicateName, "cell (" + detail::join_ints(rc) + ") given twice");
        expect("{");
        GElement x(c);
        while (!accept("}")) {
          const Token& ct = peek();
          const std::vector<int> t = tuple();
          if (t.size() != 2) fail(ct, Errc::SyntaxError, "a cell has two coordinates");
          expect(":");
          const int m = integer();
          if (!c.contains({t[0], t[1]}))
            fail(ct, Errc::InvariantViolation, "(" + detail::join_ints(t) + ") is not a cell of " + c.to_string());
          x.add({t[0], t[1]}, m);
          if (!accept(";")) {
            expect("}");
            break;
          }
        }
        g.set(cell, std::move(x));
      }
      if (seen.empty()) fail(peek(), Errc::SyntaxError, "expected 'cell', found " + describe(peek()));
      declare(ws, name, [&] { ws.add(name.text, dn.text, cn.text, std::move(g)); });
    } else if (kw.text == "system") {
      const Token& name = ident("a name");
      expect("=");
      std::vector<std::string> stages, maps;
      std::vector<NestAlgebra> st;
      std::vector<Embedding> mp;
      const Token& first = ident("an algebra");
      st.push_back(algebra_ref(ws, first));
      stages.push_back(first.text);
      while (accept("-")) {
        const Token& en = ident("an embedding");
        const auto k = ws.kind_of(en.text);
        if (!k || *k != Kind::Embedding) fail(en, Errc::UnknownReference, "unknown embedding '" + en.text + "'");
        expect("->");
        const Token& an = ident("an algebra");
        st.push_back(algebra_ref(ws, an));
        stages.push_back(an.text);
        maps.push_back(en.text);
        mp.push_back(ws.embedding(en.text));
      }
      DirectSystem sys = guarded(first, [&] { return DirectSystem(std::move(st), std::move(mp)); });
      declare(ws, name, [&] { ws.add(name.text, NamedSystem{std::move(stages), std::move(maps), std::move(sys)}); });
    } else {
      fail(kw, Errc::SyntaxError, "unknown declaration '" + kw.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Workspace parse(std::string_view text) { return detail::Parser(text).run(); }

}  // namespace nestlab::cli
