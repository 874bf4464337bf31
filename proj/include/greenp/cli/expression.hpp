#pragma once

// Stable-ring expressions:
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := INT | atom | INT atom
//   atom   := 'D' INT | 'P' INT | 'S' INT | 'O' '^' SINT '(' 'D' INT ')'
// Whitespace between tokens is ignored.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "greenp/stable_ring.hpp"

namespace greenp::cli {

struct Atom {
  enum class Kind { Simple, Projective, Specht, Shifted };
  Kind kind = Kind::Simple;
  int index = 0;
  std::int64_t shift = 0;  // Shifted only
  bool operator==(const Atom&) const = default;
};

struct Factor {
  std::int64_t scalar = 1;
  bool has_atom = false;
  Atom atom;
  bool operator==(const Factor&) const = default;
};

struct Term {
  bool negated = false;
  std::vector<Factor> factors;
  bool operator==(const Term&) const = default;
};

struct Expression {
  std::vector<Term> terms;
  bool operator==(const Expression&) const = default;
};

// Throws ParseError on bad syntax and DomainError on indices out of range
// for ctx.
Expression parse(std::string_view text, const PrimeContext& ctx);

std::string render(const Expression& e);

// S_i is rejected unless as_syzygy, which reads it as O^i(D0). P_t is zero.
StableElement evaluate(const Expression& e, const PrimeContext& ctx, bool as_syzygy = false);

// A single class with coefficient 1, e.g. "O^2(D1)" or "S3" (read as a
// syzygy of D0).
StableClass parse_class(std::string_view text, const PrimeContext& ctx);

// "2 O^1(D0) + D3"; "0" for the zero element.
std::string render(const StableElement& e);

}  // namespace greenp::cli
