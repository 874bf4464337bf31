#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace greenp::ffalg {

// Q with arbitrary-precision numerators and denominators.
class RationalField {
 public:
  using Elem = boost::multiprecision::cpp_rational;

  std::string name() const { return "Q"; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool is_one(const Elem& a) const { return a == 1; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem fma(const Elem& a, const Elem& b, const Elem& c) const {
    return a + b * c;
  }
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return a * inv(b); }
  Elem from_int(std::int64_t v) const { return Elem(v); }

  bool operator==(const RationalField&) const { return true; }
};

inline RationalField::Elem RationalField::inv(const Elem& a) const {
  if (a == 0) throw std::domain_error("division by zero in Q");
  return Elem(1) / a;
}

}  // namespace greenp::ffalg
