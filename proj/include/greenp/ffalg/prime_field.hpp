#pragma once

#include <cstdint>
#include <string>

namespace greenp::ffalg {

// GF(q) for a machine-word prime q < 2^31. Elements are residues in [0, q).
// Products are formed in 64 bits and reduced with a precomputed Barrett
// constant, so callers may accumulate several products before reducing.
class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t q);

  std::uint32_t modulus() const { return q_; }
  std::string name() const { return "GF(" + std::to_string(q_) + ")"; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }

  Elem reduce(std::uint64_t x) const {
    const std::uint64_t quot = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(x) * barrett_) >> 64);
    std::uint64_t r = x - quot * q_;
    // The quotient estimate is short by at most 2.
    while (r >= q_) r -= q_;
    return static_cast<Elem>(r);
  }

  Elem add(Elem a, Elem b) const {
    const std::uint32_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + q_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : q_ - a; }
  Elem mul(Elem a, Elem b) const {
    return reduce(static_cast<std::uint64_t>(a) * b);
  }
  // a + b * c
  Elem fma(Elem a, Elem b, Elem c) const {
    return reduce(a + static_cast<std::uint64_t>(b) * c);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem from_int(std::int64_t v) const;
  // Representative in (-q/2, q/2] for display.
  std::int64_t to_signed(Elem a) const {
    return a > q_ / 2 ? static_cast<std::int64_t>(a) - q_ : a;
  }

  // How many products (q-1)^2 fit in a uint64 accumulator.
  std::uint64_t lazy_chunk() const { return chunk_; }

  bool operator==(const PrimeField& o) const { return q_ == o.q_; }

 private:
  std::uint32_t q_;
  std::uint64_t barrett_;
  std::uint64_t chunk_;
};

}  // namespace greenp::ffalg
