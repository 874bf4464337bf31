#pragma once

// The stable Green ring of F S_p.
//
// Every indecomposable non-projective module is Omega^i(D_j) with
// i, j in [0, p-2]; shifts outside that window fold back through
// Omega^{p-1}(D_j) = D_{p-2-j} and the period 2p-2.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "greenp/diagram.hpp"

namespace greenp {

using BigInt = boost::multiprecision::cpp_int;

// Canonical label of Omega^shift(D_j), shift and j in [0, p-2].
struct StableClass {
  int shift = 0;
  int j = 0;
  auto operator<=>(const StableClass&) const = default;
};

// "O^i(D_j)", or "D_j" when the shift is zero.
std::string to_string(const StableClass& c);

StableClass canonicalize(const PrimeContext& ctx, std::int64_t shift, int j);
// Throws DomainError unless c is already canonical for ctx.
void check_canonical(const PrimeContext& ctx, const StableClass& c);

// A finitely supported Z-combination of stable classes. Coefficients may be
// negative; zero coefficients are never stored.
class StableElement {
 public:
  explicit StableElement(const PrimeContext& ctx) : ctx_(ctx) {}

  static StableElement basis(const PrimeContext& ctx, const StableClass& c,
                             std::int64_t mult = 1);
  static StableElement unit(const PrimeContext& ctx);

  const PrimeContext& context() const { return ctx_; }
  const std::map<StableClass, std::int64_t>& terms() const { return terms_; }
  std::int64_t coeff(const StableClass& c) const;
  bool is_zero() const { return terms_.empty(); }
  // True when every coefficient is nonnegative.
  bool is_genuine() const;

  // Adds mult * c; c must be canonical.
  void add(const StableClass& c, std::int64_t mult);

  StableElement& operator+=(const StableElement& other);
  StableElement& operator-=(const StableElement& other);
  StableElement& operator*=(std::int64_t scalar);

  bool operator==(const StableElement& other) const {
    return ctx_ == other.ctx_ && terms_ == other.terms_;
  }

 private:
  PrimeContext ctx_;
  std::map<StableClass, std::int64_t> terms_;
};

StableElement operator+(StableElement a, const StableElement& b);
StableElement operator-(StableElement a, const StableElement& b);
StableElement operator*(std::int64_t scalar, StableElement a);

// Omega^k(D_i) (x) Omega^l(D_j) = sum over t in R(i,j) of Omega^{k+l}(D_t).
std::vector<StableClass> tensor_classes(const PrimeContext& ctx,
                                        const StableClass& x,
                                        const StableClass& y);
StableElement tensor(const StableElement& a, const StableElement& b);
StableElement syzygy(const StableElement& e, std::int64_t n);
StableElement dual(const StableElement& e);

struct LoewyPair {
  std::vector<int> head;
  std::vector<int> socle;
  // Omega^0(D_j): head and socle are both reported as {j}.
  bool simple = false;
};

LoewyPair loewy(const PrimeContext& ctx, const StableClass& c);

BigInt dim_simple(const PrimeContext& ctx, int j);
// dim_simple for every j in [0, p-2].
std::vector<BigInt> simple_dims(const PrimeContext& ctx);
BigInt dim_class(const PrimeContext& ctx, const StableClass& c);
BigInt dim_projective(const PrimeContext& ctx, int t);
// Signed sum of coefficient * dim_class.
BigInt dim_element(const StableElement& e);

// Projective indices t of Q_n in the minimal resolution of c (with repeats).
std::vector<int> min_resolution_term(const PrimeContext& ctx,
                                     const StableClass& c, std::int64_t n);

// A simple F S_p module: either D_hook in b0 or an opaque non-principal one.
struct SimpleLabel {
  bool principal = true;
  int index = 0;

  static SimpleLabel hook(int j) { return {true, j}; }
  static SimpleLabel non_principal(int id) { return {false, id}; }
  bool operator==(const SimpleLabel&) const = default;
};

// dim Ext^n(D_lambda, D_mu) = dim Hom(Omega^n(D_lambda), D_mu).
int ext_dim(const PrimeContext& ctx, std::int64_t n, const SimpleLabel& lambda,
            const SimpleLabel& mu);

// Labels of indecomposable modules as they appear in census and oracle output.
struct ModuleLabel {
  enum class Kind { Stable, Projective, NonPrincipal, Unidentified };

  Kind kind = Kind::Stable;
  StableClass cls{};
  int index = 0;  // t for P_t, dimension for NonPrincipal/Unidentified

  static ModuleLabel stable(const StableClass& c) {
    return {Kind::Stable, c, 0};
  }
  static ModuleLabel projective(int t) { return {Kind::Projective, {}, t}; }
  static ModuleLabel non_principal(int dim) {
    return {Kind::NonPrincipal, {}, dim};
  }
  static ModuleLabel unidentified(int dim) {
    return {Kind::Unidentified, {}, dim};
  }

  bool is_projective() const {
    return kind == Kind::Projective || kind == Kind::NonPrincipal;
  }
  auto operator<=>(const ModuleLabel&) const = default;
};

// "O^i(D_j)", "D_j", "P_t", "X[d]" (non-principal simple of dimension d),
// "?[d]" (unidentified).
std::string to_string(const ModuleLabel& label);

struct CensusEntry {
  ModuleLabel label;
  BigInt dim;
  std::vector<int> head;
  std::vector<int> socle;
};

// The p(p-1) indecomposables of b0: stable classes sorted by (shift, j),
// then P_0, ..., P_{p-2}.
std::vector<CensusEntry> census(const PrimeContext& ctx);

}  // namespace greenp
