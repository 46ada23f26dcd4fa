#pragma once

// Session files: a small declaration language for fields, rings, ideals,
// ring maps, simplicial complexes and assertions, with a canonical printer
// such that parse(print(s)) == s.
//
//   field Q;                      field Fp 101;
//   ring A = [a, b, c];           ring S = [x, y, z] grading [1, 1, 2];
//   ring R = A / J;               (quotient by a declared ideal of A)
//   ideal I = (x*y - z^2, x^3);   ideal I in S = (...);   ideal K = kernel(phi);
//   map phi : A -> S { a -> x, b -> y*z, c -> z^2 };
//   complex D = { {1,2,3}, {2,3,4} };   complex E = { {1} } vertices 3;
//   assert minprimes K = [K by phi];
//   assert equidimensional R;     assert reduced R;
//
// Comments run from '#' or '//' to the end of the line.

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "conncheck/stanley_reisner.hpp"

namespace conncheck::io {

struct RingDecl {
  std::string name;
  RingPtr ring;                          ///< ambient polynomial ring
  std::optional<std::string> base;        ///< ambient ring name when this is A / J
  std::optional<std::string> quotient_by; ///< J
  friend bool operator==(const RingDecl& a, const RingDecl& b) {
    return a.name == b.name && *a.ring == *b.ring && a.base == b.base && a.quotient_by == b.quotient_by;
  }
};

struct IdealDecl {
  std::string name;
  std::string ring;
  std::vector<Polynomial> generators;
  std::optional<std::string> kernel_of;
  friend bool operator==(const IdealDecl&, const IdealDecl&) = default;
};

struct MapDecl {
  std::string name;
  std::string source;
  std::string target;
  std::vector<Polynomial> images;
  friend bool operator==(const MapDecl&, const MapDecl&) = default;
};

struct ComplexDecl {
  std::string name;
  SimplicialComplex complex;
  friend bool operator==(const ComplexDecl&, const ComplexDecl&) = default;
};

struct AssertedPrimeRef {
  std::string ideal;
  std::optional<std::string> kernel_of;
  friend bool operator==(const AssertedPrimeRef&, const AssertedPrimeRef&) = default;
};

struct MinPrimesAssertion {
  std::string ideal;
  std::vector<AssertedPrimeRef> primes;
  friend bool operator==(const MinPrimesAssertion&, const MinPrimesAssertion&) = default;
};

struct PropertyAssertion {
  std::string property; ///< "equidimensional" or "reduced"
  std::string ring;
  friend bool operator==(const PropertyAssertion&, const PropertyAssertion&) = default;
};

using Statement = std::variant<RingDecl, IdealDecl, MapDecl, ComplexDecl, MinPrimesAssertion, PropertyAssertion>;

class Session {
public:
  Field field = Field::rationals();
  std::vector<Statement> statements;

  friend bool operator==(const Session& a, const Session& b) {
    return a.field == b.field && a.statements == b.statements;
  }

  template <class T>
  const T* find(std::string_view name) const {
    for (const auto& s : statements)
      if (const auto* d = std::get_if<T>(&s); d && d->name == name)
        return d;
    return nullptr;
  }

  template <class T>
  const T& get(std::string_view name, const char* kind) const {
    if (const auto* d = find<T>(name))
      return *d;
    throw PreconditionError(std::string("unknown ") + kind + " '" + std::string(name) + "'");
  }

  const RingDecl& ring_decl(std::string_view name) const { return get<RingDecl>(name, "ring"); }
  const RingPtr& ambient(std::string_view ring_name) const { return ring_decl(ring_name).ring; }

  RingMap map(std::string_view name) const {
    const auto& m = get<MapDecl>(name, "map");
    const auto& tgt = ring_decl(m.target);
    std::optional<Ideal> relations;
    if (tgt.quotient_by)
      relations = ideal(*tgt.quotient_by);
    return RingMap(ring_decl(m.source).ring, tgt.ring, m.images, relations);
  }

  Ideal ideal(std::string_view name) const {
    const auto& d = get<IdealDecl>(name, "ideal");
    if (d.kernel_of)
      return ring_map_kernel(map(*d.kernel_of));
    return Ideal(ambient(d.ring), d.generators);
  }

  std::optional<MinimalPrimeSet> asserted_primes(std::string_view ideal_name) const {
    for (const auto& s : statements)
      if (const auto* a = std::get_if<MinPrimesAssertion>(&s); a && a->ideal == ideal_name) {
        std::vector<AssertedPrime> claimed;
        for (const auto& p : a->primes)
          claimed.push_back({ideal(p.ideal), p.kernel_of ? std::optional<RingMap>(map(*p.kernel_of)) : std::nullopt});
        return asserted_minimal_primes(ideal(ideal_name), claimed);
      }
    return std::nullopt;
  }

  bool asserts(std::string_view property, std::string_view ring) const {
    for (const auto& s : statements)
      if (const auto* a = std::get_if<PropertyAssertion>(&s); a && a->property == property && a->ring == ring)
        return true;
    return false;
  }

  /// Ring or complex by name, with minimal primes from an assertion, the
  /// monomial lane or factor-splitting, in that order of preference.
  PresentedRing presented_ring(std::string_view name) const {
    if (const auto* c = find<ComplexDecl>(name))
      return face_ring(c->complex, field);
    const auto& d = ring_decl(name);
    if (!d.quotient_by)
      return PresentedRing::polynomial(d.ring);
    const Ideal J = ideal(*d.quotient_by);
    if (J.is_unit())
      throw PreconditionError("ring '" + std::string(name) + "' is the zero ring");
    PresentedRing R(J);
    if (auto set = asserted_primes(*d.quotient_by)) {
      R = attach_min_primes(std::move(R), std::move(*set));
    } else {
      // without certified primes the ring can still serve height computations
      // when its properties are asserted
      try {
        R = attach_min_primes(std::move(R), minimal_primes(J));
      } catch (const UndecidedComponent&) {
      }
    }
    apply_assertion(R.equidimensional, "equidimensional", name);
    apply_assertion(R.reduced, "reduced", name);
    return R;
  }

private:
  void apply_assertion(Certainty& flag, const char* property, std::string_view ring) const {
    if (!asserts(property, ring))
      return;
    if (flag == Certainty::refuted)
      throw PreconditionError(std::string("assertion '") + property + " " + std::string(ring) +
                              "' contradicts the computed minimal primes");
    if (flag == Certainty::unknown)
      flag = Certainty::asserted;
  }
};

namespace detail {

enum class Tok { identifier, number, symbol, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  int line = 1;
  int column = 1;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
      while (i < src.size() && src[i] != '\n')
        advance(1);
      continue;
    }
    Token t{Tok::symbol, "", line, col};
    std::size_t n = 1;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::identifier;
      while (i + n < src.size() && (std::isalnum(static_cast<unsigned char>(src[i + n])) || src[i + n] == '_'))
        ++n;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::number;
      while (i + n < src.size() && std::isdigit(static_cast<unsigned char>(src[i + n])))
        ++n;
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      n = 2;
    } else if (std::string_view("=;:,[](){}+-*^/").find(c) == std::string_view::npos) {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    t.text = std::string(src.substr(i, n));
    advance(n);
    out.push_back(std::move(t));
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

class Parser {
public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  Session session() {
    Session s;
    bool field_seen = false;
    while (!at_end()) {
      const Token& t = peek();
      if (t.kind != Tok::identifier)
        fail("expected a declaration keyword");
      if (t.text == "field") {
        if (field_seen || !s.statements.empty())
          fail("the field must be declared once, before any other declaration");
        next();
        s.field = parse_field();
        field_seen = true;
        expect(";");
      } else if (t.text == "ring") {
        next();
        add(s, parse_ring(s));
      } else if (t.text == "ideal") {
        next();
        add(s, parse_ideal(s));
      } else if (t.text == "map") {
        next();
        add(s, parse_map(s));
      } else if (t.text == "complex") {
        next();
        add(s, parse_complex(s));
      } else if (t.text == "assert") {
        next();
        s.statements.push_back(parse_assertion(s));
      } else {
        fail("unknown declaration '" + t.text + "'");
      }
    }
    return s;
  }

  /// A single polynomial in `ring`, consuming all input.
  Polynomial polynomial(const RingPtr& ring) {
    auto p = expr(ring);
    if (!at_end())
      fail("unexpected trailing input");
    return p;
  }

  /// "u / v" or a bare "u" (denominator 1).
  std::pair<Polynomial, Polynomial> fraction(const RingPtr& ring) {
    auto u = expr(ring);
    Polynomial v = Polynomial::constant(ring, 1);
    if (accept("/"))
      v = expr(ring);
    if (!at_end())
      fail("unexpected trailing input");
    return {std::move(u), std::move(v)};
  }

private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at_end() const { return peek().kind == Tok::end; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(peek(), msg); }
  [[noreturn]] static void fail_at(const Token& t, const std::string& msg) {
    throw ParseError(msg + (t.kind == Tok::end ? " (at end of input)" : " (at '" + t.text + "')"), t.line, t.column);
  }

  bool is(const char* sym) const { return peek().kind != Tok::number && peek().text == sym; }
  bool accept(const char* sym) {
    if (!is(sym))
      return false;
    next();
    return true;
  }
  void expect(const char* sym) {
    if (!accept(sym))
      fail(std::string("expected '") + sym + "'");
  }
  std::string identifier(const char* what) {
    if (peek().kind != Tok::identifier)
      fail(std::string("expected ") + what);
    return next().text;
  }
  std::string number(const char* what) {
    if (peek().kind != Tok::number)
      fail(std::string("expected ") + what);
    return next().text;
  }
  long small_number(const char* what) {
    const Token& t = peek();
    const std::string s = number(what);
    if (s.size() > 9)
      fail_at(t, std::string(what) + " is too large");
    return std::stol(s);
  }

  Field parse_field() {
    const std::string kind = identifier("'Q' or 'Fp'");
    if (kind == "Q")
      return Field::rationals();
    if (kind != "Fp")
      fail("expected 'Q' or 'Fp'");
    const Token& t = peek();
    const std::string p = number("a prime");
    try {
      return Field::prime(std::stoull(p));
    } catch (const std::exception& e) {
      fail_at(t, e.what());
    }
  }

  template <class T>
  void add(Session& s, T decl) {
    const bool ring_like = std::is_same_v<T, RingDecl> || std::is_same_v<T, ComplexDecl>;
    const bool clash = s.find<T>(decl.name) ||
                       (ring_like && (s.find<RingDecl>(decl.name) || s.find<ComplexDecl>(decl.name)));
    if (clash)
      fail_at(toks_[decl_start_], "duplicate name '" + decl.name + "'");
    s.statements.push_back(std::move(decl));
  }

  RingDecl parse_ring(const Session& s) {
    decl_start_ = pos_;
    RingDecl d;
    d.name = identifier("a ring name");
    expect("=");
    if (accept("[")) {
      std::vector<std::string> names;
      if (!is("]"))
        do
          names.push_back(identifier("a variable name"));
        while (accept(","));
      expect("]");
      std::vector<int> weights;
      if (peek().kind == Tok::identifier && peek().text == "grading") {
        next();
        expect("[");
        do
          weights.push_back(static_cast<int>(small_number("a weight")));
        while (accept(","));
        expect("]");
      }
      try {
        d.ring = PolyRing::make(std::move(names), s.field, std::move(weights));
      } catch (const StructuralError& e) {
        fail_at(toks_[decl_start_], e.what());
      }
    } else {
      const Token& at = peek();
      const std::string base = identifier("'[' or an ambient ring name");
      const auto* amb = s.find<RingDecl>(base);
      if (!amb)
        fail_at(at, "unknown ring '" + base + "'");
      if (amb->quotient_by)
        fail_at(at, "quotients of quotient rings are not supported");
      expect("/");
      const Token& it = peek();
      const std::string ideal = identifier("an ideal name");
      const auto* id = s.find<IdealDecl>(ideal);
      if (!id)
        fail_at(it, "unknown ideal '" + ideal + "'");
      if (id->ring != base)
        fail_at(it, "ideal '" + ideal + "' does not belong to ring '" + base + "'");
      d.ring = amb->ring;
      d.base = base;
      d.quotient_by = ideal;
    }
    expect(";");
    current_ring_ = d.base.value_or(d.name);
    return d;
  }

  IdealDecl parse_ideal(const Session& s) {
    decl_start_ = pos_;
    IdealDecl d;
    d.name = identifier("an ideal name");
    std::string ring_name = current_ring_;
    if (peek().kind == Tok::identifier && peek().text == "in") {
      next();
      const Token& at = peek();
      ring_name = identifier("a ring name");
      const auto* r = s.find<RingDecl>(ring_name);
      if (!r)
        fail_at(at, "unknown ring '" + ring_name + "'");
      ring_name = r->base.value_or(ring_name);
    }
    expect("=");
    if (peek().kind == Tok::identifier && peek().text == "kernel") {
      next();
      expect("(");
      const Token& at = peek();
      const std::string m = identifier("a map name");
      const auto* md = s.find<MapDecl>(m);
      if (!md)
        fail_at(at, "unknown map '" + m + "'");
      expect(")");
      d.kernel_of = m;
      d.ring = md->source;
    } else {
      if (ring_name.empty())
        fail("no ring declared before this ideal");
      d.ring = ring_name;
      const RingPtr& ring = s.ambient(ring_name);
      expect("(");
      if (!is(")"))
        do
          d.generators.push_back(expr(ring));
        while (accept(","));
      expect(")");
    }
    expect(";");
    return d;
  }

  MapDecl parse_map(const Session& s) {
    decl_start_ = pos_;
    MapDecl d;
    d.name = identifier("a map name");
    expect(":");
    const Token& src_tok = peek();
    d.source = identifier("a source ring");
    expect("->");
    const Token& tgt_tok = peek();
    d.target = identifier("a target ring");
    const auto* src = s.find<RingDecl>(d.source);
    const auto* tgt = s.find<RingDecl>(d.target);
    if (!src)
      fail_at(src_tok, "unknown ring '" + d.source + "'");
    if (!tgt)
      fail_at(tgt_tok, "unknown ring '" + d.target + "'");
    if (src->quotient_by)
      fail_at(src_tok, "the source of a map must be a polynomial ring");
    std::vector<std::optional<Polynomial>> images(src->ring->nvars());
    expect("{");
    if (!is("}"))
      do {
        const Token& at = peek();
        const std::string var = identifier("a source variable");
        const auto idx = src->ring->index_of(var);
        if (!idx)
          fail_at(at, "'" + var + "' is not a variable of " + d.source);
        if (images[*idx])
          fail_at(at, "variable '" + var + "' is mapped twice");
        expect("->");
        images[*idx] = expr(tgt->ring);
      } while (accept(","));
    expect("}");
    accept(";");
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (!images[i])
        fail_at(toks_[decl_start_], "arity mismatch: no image for source variable '" + src->ring->names()[i] + "'");
      d.images.push_back(std::move(*images[i]));
    }
    return d;
  }

  ComplexDecl parse_complex(const Session&) {
    decl_start_ = pos_;
    ComplexDecl d{identifier("a complex name"), SimplicialComplex(0, {})};
    expect("=");
    expect("{");
    std::vector<std::vector<std::size_t>> facets;
    std::size_t n = 0;
    if (!is("}"))
      do {
        expect("{");
        std::vector<std::size_t> f;
        if (!is("}"))
          do {
            const Token& at = peek();
            const long v = small_number("a vertex number");
            if (v < 1)
              fail_at(at, "vertices are numbered from 1");
            f.push_back(static_cast<std::size_t>(v - 1));
            n = std::max<std::size_t>(n, static_cast<std::size_t>(v));
          } while (accept(","));
        expect("}");
        facets.push_back(std::move(f));
      } while (accept(","));
    expect("}");
    if (peek().kind == Tok::identifier && peek().text == "vertices") {
      next();
      const Token& at = peek();
      const long v = small_number("a vertex count");
      if (static_cast<std::size_t>(v) < n)
        fail_at(at, "vertex count is smaller than the largest vertex used");
      n = static_cast<std::size_t>(v);
    }
    expect(";");
    try {
      d.complex = SimplicialComplex(n, facets);
    } catch (const std::exception& e) {
      fail_at(toks_[decl_start_], e.what());
    }
    return d;
  }

  Statement parse_assertion(const Session& s) {
    const Token& kw = peek();
    const std::string what = identifier("'minprimes', 'equidimensional' or 'reduced'");
    if (what == "equidimensional" || what == "reduced") {
      const Token& at = peek();
      PropertyAssertion a{what, identifier("a ring name")};
      if (!s.find<RingDecl>(a.ring))
        fail_at(at, "unknown ring '" + a.ring + "'");
      expect(";");
      return a;
    }
    if (what != "minprimes")
      fail_at(kw, "unknown assertion '" + what + "'");
    MinPrimesAssertion a;
    const Token& at = peek();
    a.ideal = identifier("an ideal name");
    const auto* target = s.find<IdealDecl>(a.ideal);
    if (!target)
      fail_at(at, "unknown ideal '" + a.ideal + "'");
    expect("=");
    expect("[");
    if (!is("]"))
      do {
        const Token& pt = peek();
        AssertedPrimeRef p{identifier("a prime ideal name"), std::nullopt};
        const auto* pd = s.find<IdealDecl>(p.ideal);
        if (!pd)
          fail_at(pt, "unknown ideal '" + p.ideal + "'");
        if (pd->ring != target->ring)
          fail_at(pt, "ideal '" + p.ideal + "' lives in a different ring");
        if (peek().kind == Tok::identifier && peek().text == "by") {
          next();
          const Token& mt = peek();
          p.kernel_of = identifier("a map name");
          if (!s.find<MapDecl>(*p.kernel_of))
            fail_at(mt, "unknown map '" + *p.kernel_of + "'");
        }
        a.primes.push_back(std::move(p));
      } while (accept(","));
    expect("]");
    expect(";");
    return a;
  }

  // expr := ['+'|'-'] term (('+'|'-') term)*
  Polynomial expr(const RingPtr& ring) {
    bool negate = false;
    if (accept("-"))
      negate = true;
    else
      accept("+");
    Polynomial acc = term(ring);
    if (negate)
      acc = -acc;
    for (;;) {
      if (accept("+"))
        acc += term(ring);
      else if (accept("-"))
        acc -= term(ring);
      else
        return acc;
    }
  }

  // term := power (('*' power) | ('/' integer))*
  Polynomial term(const RingPtr& ring) {
    Polynomial acc = power(ring);
    for (;;) {
      if (accept("*")) {
        acc *= power(ring);
      } else if (is("/") && peek(1).kind == Tok::number) {
        next();
        const Token& t = peek();
        const mpz_class d(number("a divisor"));
        if (d == 0)
          fail_at(t, "division by zero");
        try {
          acc = ring->field().from_rational(mpq_class(1, 1) / mpq_class(d)) * acc;
        } catch (const std::exception& e) {
          fail_at(t, e.what());
        }
      } else {
        return acc;
      }
    }
  }

  // power := primary ['^' integer]
  Polynomial power(const RingPtr& ring) {
    Polynomial base = primary(ring);
    if (accept("^")) {
      const long e = small_number("an exponent");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary(const RingPtr& ring) {
    const Token& t = peek();
    if (t.kind == Tok::number) {
      next();
      return Polynomial::constant(ring, ring->field().from_rational(mpq_class(mpz_class(t.text))));
    }
    if (t.kind == Tok::identifier) {
      const auto idx = ring->index_of(t.text);
      if (!idx)
        fail("unknown variable '" + t.text + "'");
      next();
      return Polynomial::variable(ring, *idx);
    }
    if (accept("(")) {
      Polynomial p = expr(ring);
      expect(")");
      return p;
    }
    fail("expected a number, variable or '('");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t decl_start_ = 0;
  std::string current_ring_;
};

} // namespace detail

inline Session parse_session(std::string_view text) { return detail::Parser(text).session(); }

inline Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return detail::Parser(text).polynomial(ring);
}

inline std::pair<Polynomial, Polynomial> parse_fraction(std::string_view text, const RingPtr& ring) {
  return detail::Parser(text).fraction(ring);
}

namespace detail {

inline std::string join_polys(const std::vector<Polynomial>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i)
    s += (i ? ", " : "") + ps[i].to_string();
  return s;
}

} // namespace detail

/// Canonical text: one declaration per line, every ideal with an explicit ring.
inline std::string print_session(const Session& s) {
  std::string out = "field " + s.field.to_string() + ";\n";
  for (const auto& st : s.statements) {
    std::visit(
        [&](const auto& d) {
          using T = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<T, RingDecl>) {
            if (d.quotient_by) {
              out += "ring " + d.name + " = " + *d.base + " / " + *d.quotient_by + ";\n";
            } else {
              out += "ring " + d.name + " = [";
              const auto& names = d.ring->names();
              for (std::size_t i = 0; i < names.size(); ++i)
                out += (i ? ", " : "") + names[i];
              out += "]";
              const auto& w = d.ring->weights();
              if (std::any_of(w.begin(), w.end(), [](int x) { return x != 1; })) {
                out += " grading [";
                for (std::size_t i = 0; i < w.size(); ++i)
                  out += (i ? ", " : "") + std::to_string(w[i]);
                out += "]";
              }
              out += ";\n";
            }
          } else if constexpr (std::is_same_v<T, IdealDecl>) {
            if (d.kernel_of)
              out += "ideal " + d.name + " = kernel(" + *d.kernel_of + ");\n";
            else
              out += "ideal " + d.name + " in " + d.ring + " = (" + detail::join_polys(d.generators) + ");\n";
          } else if constexpr (std::is_same_v<T, MapDecl>) {
            const auto& src = s.ring_decl(d.source).ring;
            out += "map " + d.name + " : " + d.source + " -> " + d.target + " { ";
            for (std::size_t i = 0; i < d.images.size(); ++i)
              out += (i ? ", " : "") + src->names()[i] + " -> " + d.images[i].to_string();
            out += " };\n";
          } else if constexpr (std::is_same_v<T, ComplexDecl>) {
            out += "complex " + d.name + " = " + d.complex.to_string() + " vertices " +
                   std::to_string(d.complex.n_vertices()) + ";\n";
          } else if constexpr (std::is_same_v<T, MinPrimesAssertion>) {
            out += "assert minprimes " + d.ideal + " = [";
            for (std::size_t i = 0; i < d.primes.size(); ++i)
              out += (i ? ", " : "") + d.primes[i].ideal + (d.primes[i].kernel_of ? " by " + *d.primes[i].kernel_of : "");
            out += "];\n";
          } else {
            out += "assert " + d.property + " " + d.ring + ";\n";
          }
        },
        st);
  }
  return out;
}

} // namespace conncheck::io
