#include "svred/session.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "svred/errors.hpp"

namespace svred {

namespace {

enum class Tok { ident, number, symbol, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Tok::ident;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
          t.text += advance();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Tok::number;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) t.text += advance();
      } else if (std::string_view("=,;[]+-*^/()").find(c) != std::string_view::npos) {
        t.kind = Tok::symbol;
        t.text = advance();
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", static_cast<int>(line_), static_cast<int>(column_));
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

  Session session() {
    Session s;
    while (peek().kind != Tok::end) {
      const Token& t = peek();
      if (t.kind == Tok::ident && t.text == "ring")
        ring_decl(s);
      else if (t.kind == Tok::ident && t.text == "ideal")
        ideal_decl(s);
      else if (t.kind == Tok::ident && t.text == "partition")
        partition_decl(s);
      else
        fail(t, "expected 'ring', 'ideal' or 'partition', got " + describe(t));
    }
    return s;
  }

  Polynomial single(const RingContext& ring) {
    Polynomial p = poly(ring);
    if (peek().kind != Tok::end) fail(peek(), "unexpected " + describe(peek()) + " after polynomial");
    return p;
  }

 private:
  [[noreturn]] static void fail(const Token& t, const std::string& message) {
    throw ParseError(message, static_cast<int>(t.line), static_cast<int>(t.column));
  }

  static std::string describe(const Token& t) {
    if (t.kind == Tok::end) return "end of input";
    return "'" + t.text + "'";
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.kind != Tok::end) ++pos_;
    return t;
  }
  bool at_symbol(const char* s) const { return peek().kind == Tok::symbol && peek().text == s; }
  bool at_keyword(const char* s) const { return peek().kind == Tok::ident && peek().text == s; }

  void expect_symbol(const char* s) {
    if (!at_symbol(s)) fail(peek(), std::string("expected '") + s + "', got " + describe(peek()));
    next();
  }
  void expect_keyword(const char* s) {
    if (!at_keyword(s)) fail(peek(), std::string("expected '") + s + "', got " + describe(peek()));
    next();
  }
  const Token& name() {
    if (peek().kind != Tok::ident) fail(peek(), "expected a name, got " + describe(peek()));
    return next();
  }

  void ring_decl(Session& s) {
    next();
    const Token& n = name();
    for (const auto& r : s.rings)
      if (r.name == n.text) fail(n, "ring '" + n.text + "' is already declared");
    expect_symbol("=");
    expect_keyword("vars");
    std::vector<std::string> vars;
    for (;;) {
      const Token& v = name();
      for (const auto& existing : vars)
        if (existing == v.text) fail(v, "variable '" + v.text + "' repeats");
      vars.push_back(v.text);
      if (!at_symbol(",")) break;
      next();
    }
    expect_symbol(";");
    std::vector<Polynomial> relations;
    bool local = false;
    if (at_keyword("rel")) {
      next();
      // Relations refer to the variables just declared.
      auto scratch = RingContext::make(vars);
      for (;;) {
        relations.push_back(poly(*scratch));
        if (!at_symbol(",")) break;
        next();
      }
      expect_symbol(";");
    }
    if (at_keyword("local")) {
      next();
      local = true;
      expect_symbol(";");
    }
    try {
      s.rings.push_back({n.text, RingContext::make(std::move(vars), std::move(relations), local)});
    } catch (const Error& e) {
      fail(n, e.what());
    }
  }

  void ideal_decl(Session& s) {
    const Token& kw = next();
    if (s.rings.empty()) fail(kw, "ideal declared before any ring");
    const Token& n = name();
    for (const auto& i : s.ideals)
      if (i.name == n.text) fail(n, "ideal '" + n.text + "' is already declared");
    expect_symbol("=");
    const NamedRing& ring = s.rings.back();
    std::vector<Polynomial> gens;
    for (;;) {
      gens.push_back(poly(*ring.ring));
      if (!at_symbol(",")) break;
      next();
    }
    expect_symbol(";");
    s.ideals.push_back({n.text, ring.name, Ideal(ring.ring, std::move(gens))});
  }

  void partition_decl(Session& s) {
    next();
    const Token& n = name();
    for (const auto& p : s.partitions)
      if (p.name == n.text) fail(n, "partition '" + n.text + "' is already declared");
    expect_keyword("of");
    const Token& target = name();
    const NamedIdeal* ideal = nullptr;
    for (const auto& i : s.ideals)
      if (i.name == target.text) ideal = &i;
    if (!ideal) fail(target, "unknown ideal '" + target.text + "'");
    expect_symbol("=");
    std::vector<std::vector<Polynomial>> parts;
    const RingContext& ring = *ideal->ideal.ring();
    while (at_symbol("[")) {
      next();
      std::vector<Polynomial> part;
      for (;;) {
        const Token& start = peek();
        Polynomial p = poly(ring);
        const auto& gens = ideal->ideal.generators();
        if (std::find(gens.begin(), gens.end(), p) == gens.end())
          fail(start, p.to_string(ring.variables()) + " is not a generator of ideal '" + ideal->name + "'");
        part.push_back(std::move(p));
        if (!at_symbol(",")) break;
        next();
      }
      expect_symbol("]");
      parts.push_back(std::move(part));
    }
    if (parts.empty()) fail(peek(), "expected '[', got " + describe(peek()));
    expect_symbol(";");
    try {
      s.partitions.push_back({n.text, ideal->name, Partition(ideal->ideal, std::move(parts))});
    } catch (const Error& e) {
      fail(n, e.what());
    }
  }

  // poly := ["+"|"-"] term (("+"|"-") term)*
  Polynomial poly(const RingContext& ring) {
    Polynomial sum(ring.nvars());
    bool negative = false;
    if (at_symbol("+") || at_symbol("-")) negative = next().text == "-";
    for (;;) {
      Polynomial t = term(ring);
      sum = negative ? sum - t : sum + t;
      if (!(at_symbol("+") || at_symbol("-"))) break;
      negative = next().text == "-";
    }
    return sum;
  }

  // term := factor ("*" factor)*
  Polynomial term(const RingContext& ring) {
    Polynomial p = factor(ring);
    while (at_symbol("*")) {
      next();
      p = p * factor(ring);
    }
    return p;
  }

  // factor := primary ["^" natural]
  Polynomial factor(const RingContext& ring) {
    Polynomial base = primary(ring);
    if (at_symbol("^")) {
      next();
      if (peek().kind != Tok::number) fail(peek(), "expected an exponent, got " + describe(peek()));
      const Token& e = next();
      if (e.text.size() > 6) fail(e, "exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(e.text)));
    }
    return base;
  }

  // primary := natural ["/" natural] | variable | "(" poly ")"
  Polynomial primary(const RingContext& ring) {
    const Token& t = peek();
    if (t.kind == Tok::number) {
      next();
      Rational q(t.text);
      if (at_symbol("/")) {
        next();
        if (peek().kind != Tok::number) fail(peek(), "expected a denominator, got " + describe(peek()));
        const Token& d = next();
        Rational den(d.text);
        if (den == 0) fail(d, "zero denominator");
        q /= den;
      }
      q.canonicalize();
      return Polynomial::constant(ring.nvars(), q);
    }
    if (t.kind == Tok::ident) {
      next();
      auto index = ring.index_of(t.text);
      if (!index) fail(t, "unknown variable '" + t.text + "'");
      return Polynomial::variable(ring.nvars(), *index);
    }
    if (at_symbol("(")) {
      next();
      Polynomial p = poly(ring);
      expect_symbol(")");
      return p;
    }
    fail(t, "expected a polynomial, got " + describe(t));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

template <typename T>
const T& lookup(const std::vector<T>& items, const std::string& name, const char* kind) {
  if (items.empty()) throw PreconditionError(std::string("session has no ") + kind);
  if (name.empty()) return items.back();
  for (const auto& item : items)
    if (item.name == name) return item;
  throw PreconditionError(std::string("unknown ") + kind + " '" + name + "'");
}

std::string join(const std::vector<Polynomial>& polys, const RingContext& ring) {
  std::string out;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i) out += ", ";
    out += polys[i].to_string(ring.variables());
  }
  return out;
}

}  // namespace

const NamedRing& Session::ring(const std::string& name) const { return lookup(rings, name, "ring"); }
const NamedIdeal& Session::ideal(const std::string& name) const { return lookup(ideals, name, "ideal"); }
const NamedPartition& Session::partition(const std::string& name) const {
  return lookup(partitions, name, "partition");
}

Session parse_session(std::string_view text) { return Parser(text).session(); }

Polynomial parse_polynomial(std::string_view text, const RingContext& ring) { return Parser(text).single(ring); }

std::string print_session(const Session& session) {
  std::ostringstream out;
  // Ideals attach to the most recent ring, so print each ring followed by
  // its ideals and their partitions.
  for (const auto& r : session.rings) {
    const RingContext& ring = *r.ring;
    out << "ring " << r.name << " = vars ";
    for (std::size_t i = 0; i < ring.nvars(); ++i) out << (i ? ", " : "") << ring.variables()[i];
    out << ";";
    if (!ring.relations().empty()) out << " rel " << join(ring.relations(), ring) << ";";
    if (ring.origin_local()) out << " local;";
    out << "\n";
    for (const auto& i : session.ideals) {
      if (i.ring != r.name) continue;
      out << "ideal " << i.name << " = " << join(i.ideal.generators(), ring) << ";\n";
      for (const auto& p : session.partitions) {
        if (p.ideal != i.name) continue;
        out << "partition " << p.name << " of " << i.name << " =";
        for (const auto& part : p.partition.parts()) out << " [" << join(part, ring) << "]";
        out << ";\n";
      }
    }
  }
  return out.str();
}

Session make_session(const Partition& partition, const std::string& ring_name, const std::string& ideal_name,
                     const std::string& partition_name) {
  Session s;
  s.rings.push_back({ring_name, partition.ring()});
  s.ideals.push_back({ideal_name, ring_name, partition.ideal()});
  s.partitions.push_back({partition_name, ideal_name, partition});
  return s;
}

}  // namespace svred
