#include "greenp/ffalg/prime_field.hpp"

#include <limits>

#include "greenp/diagram.hpp"
#include "greenp/error.hpp"

namespace greenp::ffalg {

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (q >= (1u << 31) || !is_prime(q))
    throw DomainError("field order " + std::to_string(q) +
                      " is not a prime below 2^31");
  barrett_ = std::numeric_limits<std::uint64_t>::max() / q_;
  const std::uint64_t sq = static_cast<std::uint64_t>(q_ - 1) * (q_ - 1);
  chunk_ = sq == 0 ? std::numeric_limits<std::uint64_t>::max()
                   : (std::numeric_limits<std::uint64_t>::max() - q_) / sq;
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const {
  Elem out = 1;
  while (e) {
    if (e & 1) out = mul(out, a);
    a = mul(a, a);
    e >>= 1;
  }
  return out;
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw DomainError("division by zero in " + name());
  // Extended Euclid on (a, q).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = q_, new_r = a;
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    t -= quot * new_t;
    std::swap(t, new_t);
    r -= quot * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += q_;
  return static_cast<Elem>(t);
}

PrimeField::Elem PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(q_);
  if (r < 0) r += q_;
  return static_cast<Elem>(r);
}

}  // namespace greenp::ffalg
