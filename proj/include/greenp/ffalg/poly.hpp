#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "greenp/ffalg/matrix.hpp"

namespace greenp::ffalg {

// Univariate polynomial, coefficients from low to high degree, no trailing
// zeros (the zero polynomial has no coefficients).
template <class Field>
class Poly {
 public:
  using Elem = typename Field::Elem;

  explicit Poly(const Field& field) : field_(field) {}
  Poly(const Field& field, std::vector<Elem> coeffs)
      : field_(field), c_(std::move(coeffs)) {
    trim();
  }

  static Poly constant(const Field& f, const Elem& a) { return Poly(f, {a}); }
  static Poly x(const Field& f) { return Poly(f, {f.zero(), f.one()}); }
  // x^n
  static Poly monomial(const Field& f, std::size_t n) {
    std::vector<Elem> c(n + 1, f.zero());
    c[n] = f.one();
    return Poly(f, std::move(c));
  }

  const Field& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  Elem leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of 0");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && field_.is_one(c_.back()); }

  Poly monic() const {
    if (c_.empty()) return *this;
    const Elem inv = field_.inv(c_.back());
    std::vector<Elem> c = c_;
    for (Elem& a : c) a = field_.mul(a, inv);
    return Poly(field_, std::move(c));
  }

  Poly derivative() const {
    std::vector<Elem> c;
    for (std::size_t i = 1; i < c_.size(); ++i)
      c.push_back(field_.mul(field_.from_int(static_cast<std::int64_t>(i)), c_[i]));
    return Poly(field_, std::move(c));
  }

  Elem eval(const Elem& x) const {
    Elem out = field_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) out = field_.fma(c_[i], out, x);
    return out;
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  Poly scaled(const Elem& s) const {
    std::vector<Elem> c = c_;
    for (Elem& a : c) a = field_.mul(a, s);
    return Poly(field_, std::move(c));
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    const Field& f = a.field_;
    if (a.is_zero() || b.is_zero()) return Poly(f);
    std::vector<Elem> c(a.c_.size() + b.c_.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (f.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = f.fma(c[i + j], a.c_[i], b.c_[j]);
    }
    return Poly(f, std::move(c));
  }

  // (quotient, remainder)
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    const Field& f = field_;
    if (degree() < d.degree()) return {Poly(f), *this};
    std::vector<Elem> r = c_;
    std::vector<Elem> q(c_.size() - d.c_.size() + 1, f.zero());
    const Elem lead_inv = f.inv(d.c_.back());
    for (std::size_t k = q.size(); k-- > 0;) {
      const Elem coef = f.mul(r[k + d.c_.size() - 1], lead_inv);
      q[k] = coef;
      if (f.is_zero(coef)) continue;
      const Elem neg = f.neg(coef);
      for (std::size_t j = 0; j < d.c_.size(); ++j)
        r[k + j] = f.fma(r[k + j], neg, d.c_[j]);
    }
    r.resize(d.c_.size() - 1);
    return {Poly(f, std::move(q)), Poly(f, std::move(r))};
  }

  friend Poly operator/(const Poly& a, const Poly& b) { return a.divmod(b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return a.divmod(b).second; }

 private:
  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  Field field_;
  std::vector<Elem> c_;
};

using FpPoly = Poly<PrimeField>;
using QPoly = Poly<RationalField>;

// Monic gcd; gcd(0, 0) = 0.
template <class Field>
Poly<Field> gcd(Poly<Field> a, Poly<Field> b) {
  while (!b.is_zero()) {
    Poly<Field> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class Field>
Poly<Field> lcm(const Poly<Field>& a, const Poly<Field>& b) {
  if (a.is_zero() || b.is_zero()) return Poly<Field>(a.field());
  return ((a * b) / gcd(a, b)).monic();
}

template <class Field>
Poly<Field> pow(Poly<Field> base, std::uint64_t e) {
  Poly<Field> out = Poly<Field>::constant(base.field(), base.field().one());
  while (e) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return out;
}

// base^e mod m
template <class Field>
Poly<Field> powmod(Poly<Field> base, std::uint64_t e, const Poly<Field>& m) {
  Poly<Field> out = Poly<Field>::constant(base.field(), base.field().one()) % m;
  base = base % m;
  while (e) {
    if (e & 1) out = (out * base) % m;
    e >>= 1;
    if (e) base = (base * base) % m;
  }
  return out;
}

// f(A) by Horner's rule.
template <class Field>
Matrix<Field> evaluate(const Poly<Field>& f, const Matrix<Field>& a) {
  const Field& fld = a.field();
  Matrix<Field> out(fld, a.rows(), a.cols());
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    out = out * a;
    for (std::size_t d = 0; d < a.rows(); ++d) out(d, d) = fld.add(out(d, d), c[i]);
  }
  return out;
}

}  // namespace greenp::ffalg
