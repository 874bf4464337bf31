#include "greenp/cli/expression.hpp"

#include <cctype>
#include <limits>

#include "greenp/error.hpp"

namespace greenp::cli {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const PrimeContext& ctx) : s_(text), ctx_(ctx) {}

  Expression expr() {
    Expression e;
    skip_ws();
    const bool lead = pos_ < s_.size() && s_[pos_] == '-';
    if (lead) ++pos_;
    e.terms.push_back(term(lead));
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      const char c = s_[pos_];
      if (c != '+' && c != '-') fail("expected '+', '-', '*' or end of input");
      ++pos_;
      e.terms.push_back(term(c == '-'));
    }
    return e;
  }

 private:
  Term term(bool negated) {
    Term t;
    t.negated = negated;
    t.factors.push_back(factor());
    while (peek() == '*') {
      ++pos_;
      t.factors.push_back(factor());
    }
    return t;
  }

  Factor factor() {
    Factor f;
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      f.scalar = integer();
      const char d = peek();
      if (d == 'D' || d == 'P' || d == 'S' || d == 'O') {
        f.has_atom = true;
        f.atom = atom();
      }
      return f;
    }
    if (c == 'D' || c == 'P' || c == 'S' || c == 'O') {
      f.has_atom = true;
      f.atom = atom();
      return f;
    }
    fail(c == '\0' ? "unexpected end of input" : "expected an integer or an atom");
  }

  Atom atom() {
    const std::size_t start = pos_;
    const char c = s_[pos_++];
    Atom a;
    switch (c) {
      case 'D':
        a.kind = Atom::Kind::Simple;
        a.index = index_in(integer(), ctx_.p() - 2, "simple", start);
        break;
      case 'P':
        a.kind = Atom::Kind::Projective;
        a.index = index_in(integer(), ctx_.p() - 2, "projective", start);
        break;
      case 'S':
        a.kind = Atom::Kind::Specht;
        a.index = index_in(integer(), ctx_.p() - 1, "Specht", start);
        break;
      default:
        a.kind = Atom::Kind::Shifted;
        expect('^');
        a.shift = signed_integer();
        expect('(');
        expect('D');
        a.index = index_in(integer(), ctx_.p() - 2, "simple", start);
        expect(')');
        break;
    }
    return a;
  }

  int index_in(std::int64_t v, int hi, const char* what, std::size_t at) const {
    if (v > hi)
      throw DomainError(std::string(what) + " index " + std::to_string(v) + " at position " +
                        std::to_string(at) + " is outside [0, " + std::to_string(hi) +
                        "] for p = " + std::to_string(ctx_.p()));
    return static_cast<int>(v);
  }

  std::int64_t signed_integer() {
    bool neg = false;
    if (peek() == '-') {
      ++pos_;
      neg = true;
    }
    const std::int64_t v = integer();
    return neg ? -v : v;
  }

  std::int64_t integer() {
    skip_ws();
    if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected an integer");
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const int d = s_[pos_] - '0';
      if (v > (std::numeric_limits<std::int64_t>::max() - d) / 10) fail("integer too large");
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  std::string_view s_;
  const PrimeContext& ctx_;
  std::size_t pos_ = 0;
};

std::string render_atom(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::Simple:
      return "D" + std::to_string(a.index);
    case Atom::Kind::Projective:
      return "P" + std::to_string(a.index);
    case Atom::Kind::Specht:
      return "S" + std::to_string(a.index);
    case Atom::Kind::Shifted:
      return "O^" + std::to_string(a.shift) + "(D" + std::to_string(a.index) + ")";
  }
  return {};
}

StableElement atom_value(const Atom& a, const PrimeContext& ctx, bool as_syzygy) {
  switch (a.kind) {
    case Atom::Kind::Simple:
      return StableElement::basis(ctx, {0, a.index});
    case Atom::Kind::Projective:
      return StableElement(ctx);
    case Atom::Kind::Specht:
      if (!as_syzygy)
        throw DomainError("S" + std::to_string(a.index) +
                          " is not a stable ring element; pass --as-syzygy to read it as O^" +
                          std::to_string(a.index) + "(D0)");
      return StableElement::basis(ctx, canonicalize(ctx, a.index, 0));
    case Atom::Kind::Shifted:
      return StableElement::basis(ctx, canonicalize(ctx, a.shift, a.index));
  }
  return StableElement(ctx);
}

}  // namespace

Expression parse(std::string_view text, const PrimeContext& ctx) {
  return Parser(text, ctx).expr();
}

std::string render(const Expression& e) {
  std::string out;
  for (std::size_t k = 0; k < e.terms.size(); ++k) {
    const Term& t = e.terms[k];
    if (k > 0)
      out += t.negated ? " - " : " + ";
    else if (t.negated)
      out += "-";
    for (std::size_t f = 0; f < t.factors.size(); ++f) {
      const Factor& fac = t.factors[f];
      if (f > 0) out += " * ";
      if (!fac.has_atom)
        out += std::to_string(fac.scalar);
      else if (fac.scalar == 1)
        out += render_atom(fac.atom);
      else
        out += std::to_string(fac.scalar) + " " + render_atom(fac.atom);
    }
  }
  return out;
}

StableElement evaluate(const Expression& e, const PrimeContext& ctx, bool as_syzygy) {
  StableElement total(ctx);
  for (const Term& t : e.terms) {
    StableElement prod = StableElement::unit(ctx);
    for (const Factor& f : t.factors) {
      if (f.has_atom) prod = tensor(prod, atom_value(f.atom, ctx, as_syzygy));
      prod *= f.scalar;
    }
    if (t.negated)
      total -= prod;
    else
      total += prod;
  }
  return total;
}

StableClass parse_class(std::string_view text, const PrimeContext& ctx) {
  const StableElement e = evaluate(parse(text, ctx), ctx, true);
  if (e.terms().size() != 1 || e.terms().begin()->second != 1)
    throw DomainError("expected a single indecomposable class, got " + render(e));
  return e.terms().begin()->first;
}

std::string render(const StableElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, mult] : e.terms()) {
    std::int64_t m = mult;
    if (first) {
      if (m < 0) out += "-";
    } else {
      out += m < 0 ? " - " : " + ";
    }
    if (m < 0) m = -m;
    if (m != 1) out += std::to_string(m) + " ";
    out += to_string(c);
    first = false;
  }
  return out;
}

}  // namespace greenp::cli
