#include "diffhopf/expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "diffhopf/error.hpp"

namespace diffhopf {

namespace {

// ---------------------------------------------------------------------------
// Printing

bool scalar_negative(const Scalar& c) {
  if (c.is_rational()) return c.rational() < 0;
  return c.numerator().lead() < 0;
}

// Factors print by generator, higher derivatives first: d(y)*y, X11*X22.
std::string monomial_string(const Monomial& m, const Ring& ring) {
  auto factors = m.factors();
  std::stable_sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
    return Var::from_key(a.first).gen < Var::from_key(b.first).gen;
  });
  std::string out;
  for (const auto& [key, e] : factors) {
    if (!out.empty()) out += "*";
    out += ring.var_name(Var::from_key(key));
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

// Appends a term with its sign; magnitude handling keeps output re-parsable.
void append_term(std::string& out, const Scalar& coeff, const Monomial& m, const Ring& ring, bool sole) {
  if (sole && m.is_one()) {
    out += coeff.to_string();
    return;
  }
  const bool neg = scalar_negative(coeff);
  const Scalar mag = neg ? -coeff : coeff;
  if (out.empty())
    out += neg ? "-" : "";
  else
    out += neg ? " - " : " + ";
  if (m.is_one()) {
    out += mag.is_rational() ? mag.to_string() : "(" + mag.to_string() + ")";
    return;
  }
  if (!mag.is_one()) {
    out += mag.needs_parens_as_factor() ? "(" + mag.to_string() + ")" : mag.to_string();
    out += "*";
  }
  out += monomial_string(m, ring);
}

bool single_factor(const Poly& p) {
  if (p.size() != 1) return false;
  const auto& t = p.lead();
  return t.coeff.is_one() && t.mono.factors().size() == 1;
}

std::string element_string(const Poly& num, const std::vector<std::uint32_t>& den, const Ring& ring) {
  std::string n = to_string(num, ring);
  std::vector<std::string> factors;
  for (std::uint32_t i = 0; i < den.size(); ++i) {
    if (den[i] == 0) continue;
    const Poly& d = ring.denominator(i);
    std::string s = to_string(d, ring);
    if (!single_factor(d) || (den[i] > 1 && d.lead().mono.factors().front().second > 1)) s = "(" + s + ")";
    if (den[i] > 1) s += "^" + std::to_string(den[i]);
    factors.push_back(std::move(s));
  }
  if (factors.empty()) return n;
  if (num.size() > 1 || (num.is_constant() && !num.constant_term().is_rational())) n = "(" + n + ")";
  std::string d;
  for (const auto& f : factors) d += (d.empty() ? "" : "*") + f;
  if (factors.size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

std::string tensor_string(const Element& x) {
  const Ring& ring = *x.ring();
  const RingPtr& base = ring.base();
  const std::uint32_t legs = ring.legs();
  const std::uint32_t n = ring.base_generators();
  const std::uint32_t nd = ring.base_denominators();
  if (x.is_zero()) return "0";

  // Group by the monomials of all legs but the last; the last leg collects a polynomial.
  struct Group {
    std::vector<Monomial> heads;
    std::vector<Poly::Term> tail;
  };
  std::map<std::vector<Monomial>, std::vector<Poly::Term>, std::greater<>> groups;
  for (const auto& term : x.numerator().terms()) {
    std::vector<std::vector<Monomial::Factor>> parts(legs);
    for (const auto& f : term.mono.factors()) {
      Var v = Var::from_key(f.first);
      const std::uint32_t leg = v.gen / n;
      parts[leg].push_back(f);
    }
    std::vector<Monomial> monos;
    for (std::uint32_t c = 0; c < legs; ++c) {
      Monomial m;
      for (const auto& f : parts[c]) {
        Var v = Var::from_key(f.first);
        m = m * Monomial::of(Var{v.gen - c * n, v.order}, f.second);
      }
      monos.push_back(std::move(m));
    }
    Monomial last = monos.back();
    monos.pop_back();
    groups[monos].push_back(Poly::Term{std::move(last), term.coeff});
  }
  const auto& den = x.denominator_exponents();
  auto leg_den = [&](std::uint32_t c) {
    return std::vector<std::uint32_t>(den.begin() + c * nd, den.begin() + (c + 1) * nd);
  };
  std::string out;
  for (auto& [heads, tail] : groups) {
    std::string item = "tensor(";
    for (std::uint32_t c = 0; c + 1 < legs; ++c) {
      Element leg(base, Poly::of(heads[c]), leg_den(c));
      item += to_string(leg) + ", ";
    }
    Element last(base, Poly::from_terms(tail), leg_den(legs - 1));
    item += to_string(last) + ")";
    out += (out.empty() ? "" : " + ") + item;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(c)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Int, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ',': k = Tok::Comma; break;
      default:
        throw Error(Errc::SyntaxError, "at offset " + std::to_string(i) + ": unexpected character '" +
                                           std::string(1, s[i]) + "'");
    }
    out.push_back({k, std::string(1, s[i]), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, RingPtr ring) : toks_(tokenize(text)), ring_(std::move(ring)) {}

  Element parse_all() {
    Element e = expr(ring_);
    if (peek().kind != Tok::End) fail("end of input or operator");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw Error(Errc::SyntaxError,
                "at offset " + std::to_string(t.pos) + ": expected " + expected + ", found " + got);
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) fail(what);
  }

  Element expr(const RingPtr& ring) {
    Element acc(ring);
    bool neg = false;
    if (accept(Tok::Minus))
      neg = true;
    else
      accept(Tok::Plus);
    Element first = term(ring);
    acc = neg ? -first : first;
    while (true) {
      if (accept(Tok::Plus))
        acc += term(ring);
      else if (accept(Tok::Minus))
        acc -= term(ring);
      else
        break;
    }
    return acc;
  }

  Element term(const RingPtr& ring) {
    Element acc = factor(ring);
    while (true) {
      if (accept(Tok::Star)) {
        acc *= factor(ring);
      } else if (peek().kind == Tok::Slash) {
        const std::size_t at = peek().pos;
        ++pos_;
        Element d = factor(ring);
        acc *= invert(d, at);
      } else {
        break;
      }
    }
    return acc;
  }

  Element invert(const Element& d, std::size_t at) const {
    if (d.is_zero()) throw Error(Errc::DivisionByZero, "at offset " + std::to_string(at) + ": division by zero");
    auto inv = d.inverse();
    if (!inv)
      throw Error(Errc::IllegalInverse, "at offset " + std::to_string(at) + ": cannot invert '" + to_string(d) +
                                            "' (not a product of designated denominators)");
    return *inv;
  }

  std::uint32_t integer(const char* what) {
    if (peek().kind != Tok::Int) fail(what);
    const Token& t = next();
    if (t.text.size() > 6) throw Error(Errc::SyntaxError, "at offset " + std::to_string(t.pos) + ": exponent too large");
    return static_cast<std::uint32_t>(std::stoul(t.text));
  }

  Element factor(const RingPtr& ring) {
    if (accept(Tok::Minus)) return -factor(ring);
    Element base = atom(ring);
    if (peek().kind == Tok::Caret) {
      const std::size_t at = peek().pos;
      ++pos_;
      const bool neg = accept(Tok::Minus);
      std::uint32_t e = integer("integer exponent");
      if (neg) return invert(base, at).pow(e);
      return base.pow(e);
    }
    return base;
  }

  Element atom(const RingPtr& ring) {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: {
        ++pos_;
        return Element::constant(ring, Scalar(Rational(mpz_class(t.text))));
      }
      case Tok::LParen: {
        ++pos_;
        Element e = expr(ring);
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Ident:
        return identifier(ring);
      default:
        fail("number, identifier, or '('");
    }
  }

  Element identifier(const RingPtr& ring) {
    const Token t = next();
    if (t.text == "t") {
      if (ring->field() != FieldKind::RationalFunctions)
        throw Error(Errc::UnknownIdentifier,
                    "at offset " + std::to_string(t.pos) + ": 't' is not available over Q");
      return Element::constant(ring, Scalar::t());
    }
    if (t.text == "tensor") {
      if (ring->legs() < 2)
        throw Error(Errc::UnknownIdentifier, "at offset " + std::to_string(t.pos) + ": tensor(...) used outside a tensor power");
      return tensor_atom(ring);
    }
    if (t.text == "d" && (peek().kind == Tok::LParen || peek().kind == Tok::Caret)) {
      std::uint32_t order = 1;
      if (accept(Tok::Caret)) order = integer("derivative order");
      expect(Tok::LParen, "'('");
      Element inner = expr(ring);
      expect(Tok::RParen, "')'");
      return inner.derive(order);
    }
    if (ring->legs() > 1)
      throw Error(Errc::UnknownIdentifier,
                  "at offset " + std::to_string(t.pos) + ": identifier '" + t.text + "' must appear inside tensor(...)");
    auto gen = ring->find_generator(t.text);
    if (!gen)
      throw Error(Errc::UnknownIdentifier, "at offset " + std::to_string(t.pos) + ": unknown identifier '" + t.text + "'");
    return Element::generator(ring, *gen);
  }

  Element tensor_atom(const RingPtr& ring) {
    expect(Tok::LParen, "'('");
    const RingPtr& base = ring->base();
    const std::uint32_t n = ring->base_generators();
    const std::uint32_t nd = ring->base_denominators();
    Element acc = Element::constant(ring, Scalar(1));
    for (std::uint32_t c = 0; c < ring->legs(); ++c) {
      if (c > 0) expect(Tok::Comma, "','");
      Element leg = expr(base);
      acc *= leg.embedded(ring, c * n, c * nd);
    }
    expect(Tok::RParen, "')'");
    return acc;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  RingPtr ring_;
};

}  // namespace

std::string to_string(const Poly& p, const Ring& ring) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) append_term(out, t.coeff, t.mono, ring, p.size() == 1);
  return out;
}

std::string to_string(const Element& x) {
  if (x.ring()->legs() > 1) return tensor_string(x);
  return element_string(x.numerator(), x.denominator_exponents(), *x.ring());
}

Element parse_expr(std::string_view text, const RingPtr& ring) {
  Parser p(text, ring);
  return p.parse_all();
}

Scalar parse_scalar(std::string_view text, FieldKind field) {
  Element e = parse_expr(text, Ring::scalars(field));
  return e.constant_value();
}

}  // namespace diffhopf
