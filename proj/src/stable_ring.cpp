#include "greenp/stable_ring.hpp"

#include <algorithm>

#include "greenp/error.hpp"

namespace greenp {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw ResourceError("stable ring coefficient overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw ResourceError("stable ring coefficient overflow");
  return out;
}

void check_same_prime(const PrimeContext& a, const PrimeContext& b) {
  if (!(a == b))
    throw DomainError("mismatched primes: p = " + std::to_string(a.p()) +
                      " and p = " + std::to_string(b.p()));
}

void check_simple_index(const PrimeContext& ctx, int j) {
  if (j < 0 || j > ctx.p() - 2)
    throw DomainError("simple index j = " + std::to_string(j) +
                      " outside [0, " + std::to_string(ctx.p() - 2) + "]");
}

}  // namespace

std::string to_string(const StableClass& c) {
  if (c.shift == 0) return "D" + std::to_string(c.j);
  return "O^" + std::to_string(c.shift) + "(D" + std::to_string(c.j) + ")";
}

StableClass canonicalize(const PrimeContext& ctx, std::int64_t shift, int j) {
  check_simple_index(ctx, j);
  const std::int64_t period = ctx.period();
  std::int64_t s = shift % period;
  if (s < 0) s += period;
  if (s >= ctx.p() - 1)
    return {static_cast<int>(s - (ctx.p() - 1)), ctx.p() - 2 - j};
  return {static_cast<int>(s), j};
}

void check_canonical(const PrimeContext& ctx, const StableClass& c) {
  if (c.shift < 0 || c.shift > ctx.p() - 2)
    throw DomainError("class " + to_string(c) + " is not canonical for p = " +
                      std::to_string(ctx.p()));
  check_simple_index(ctx, c.j);
}

StableElement StableElement::basis(const PrimeContext& ctx,
                                   const StableClass& c, std::int64_t mult) {
  StableElement e(ctx);
  e.add(c, mult);
  return e;
}

StableElement StableElement::unit(const PrimeContext& ctx) {
  return basis(ctx, {0, 0});
}

std::int64_t StableElement::coeff(const StableClass& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? 0 : it->second;
}

bool StableElement::is_genuine() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.second >= 0; });
}

void StableElement::add(const StableClass& c, std::int64_t mult) {
  check_canonical(ctx_, c);
  if (mult == 0) return;
  auto [it, inserted] = terms_.try_emplace(c, mult);
  if (!inserted) {
    it->second = checked_add(it->second, mult);
    if (it->second == 0) terms_.erase(it);
  }
}

StableElement& StableElement::operator+=(const StableElement& other) {
  check_same_prime(ctx_, other.ctx_);
  for (const auto& [c, m] : other.terms_) add(c, m);
  return *this;
}

StableElement& StableElement::operator-=(const StableElement& other) {
  check_same_prime(ctx_, other.ctx_);
  for (const auto& [c, m] : other.terms_) add(c, checked_mul(m, -1));
  return *this;
}

StableElement& StableElement::operator*=(std::int64_t scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second = checked_mul(kv.second, scalar);
  return *this;
}

StableElement operator+(StableElement a, const StableElement& b) {
  return a += b;
}
StableElement operator-(StableElement a, const StableElement& b) {
  return a -= b;
}
StableElement operator*(std::int64_t scalar, StableElement a) {
  return a *= scalar;
}

std::vector<StableClass> tensor_classes(const PrimeContext& ctx,
                                        const StableClass& x,
                                        const StableClass& y) {
  check_canonical(ctx, x);
  check_canonical(ctx, y);
  std::vector<StableClass> out;
  const auto [l, r] = layer_ends(ctx, x.j, y.j);
  const std::int64_t shift = static_cast<std::int64_t>(x.shift) + y.shift;
  for (int t = l; t <= r; t += 2) out.push_back(canonicalize(ctx, shift, t));
  return out;
}

StableElement tensor(const StableElement& a, const StableElement& b) {
  check_same_prime(a.context(), b.context());
  const PrimeContext& ctx = a.context();
  StableElement out(ctx);
  for (const auto& [x, mx] : a.terms())
    for (const auto& [y, my] : b.terms()) {
      const std::int64_t m = checked_mul(mx, my);
      for (const StableClass& c : tensor_classes(ctx, x, y)) out.add(c, m);
    }
  return out;
}

StableElement syzygy(const StableElement& e, std::int64_t n) {
  const PrimeContext& ctx = e.context();
  StableElement out(ctx);
  // Reduce first so shift + n cannot overflow.
  const std::int64_t step = n % ctx.period();
  for (const auto& [c, m] : e.terms())
    out.add(canonicalize(ctx, c.shift + step, c.j), m);
  return out;
}

StableElement dual(const StableElement& e) {
  const PrimeContext& ctx = e.context();
  StableElement out(ctx);
  for (const auto& [c, m] : e.terms())
    out.add(canonicalize(ctx, -static_cast<std::int64_t>(c.shift), c.j), m);
  return out;
}

LoewyPair loewy(const PrimeContext& ctx, const StableClass& c) {
  check_canonical(ctx, c);
  if (c.shift == 0) return {{c.j}, {c.j}, true};
  return {r_set(ctx, c.shift, c.j).members(),
          r_set(ctx, c.shift - 1, c.j).members(), false};
}

BigInt dim_simple(const PrimeContext& ctx, int j) {
  check_simple_index(ctx, j);
  // binomial(p-2, j)
  const int n = ctx.p() - 2;
  const int k = std::min(j, n - j);
  BigInt out = 1;
  for (int m = 1; m <= k; ++m) {
    out *= n - k + m;
    out /= m;
  }
  return out;
}

std::vector<BigInt> simple_dims(const PrimeContext& ctx) {
  const int n = ctx.p() - 2;
  std::vector<BigInt> out(static_cast<std::size_t>(n) + 1);
  out[0] = 1;
  for (int j = 1; j <= n; ++j) out[j] = out[j - 1] * (n - j + 1) / j;
  return out;
}

BigInt dim_class(const PrimeContext& ctx, const StableClass& c) {
  const LoewyPair lp = loewy(ctx, c);
  if (lp.simple) return dim_simple(ctx, c.j);
  BigInt out = 0;
  for (int t : lp.head) out += dim_simple(ctx, t);
  for (int t : lp.socle) out += dim_simple(ctx, t);
  return out;
}

BigInt dim_projective(const PrimeContext& ctx, int t) {
  check_simple_index(ctx, t);
  BigInt out = 2 * dim_simple(ctx, t);
  if (t > 0) out += dim_simple(ctx, t - 1);
  if (t < ctx.p() - 2) out += dim_simple(ctx, t + 1);
  return out;
}

BigInt dim_element(const StableElement& e) {
  BigInt out = 0;
  for (const auto& [c, m] : e.terms()) out += dim_class(e.context(), c) * m;
  return out;
}

std::vector<int> min_resolution_term(const PrimeContext& ctx,
                                     const StableClass& c, std::int64_t n) {
  check_canonical(ctx, c);
  if (n < 0) throw DomainError("resolution index must be >= 0");
  const StableClass target =
      canonicalize(ctx, c.shift + n % ctx.period(), c.j);
  return loewy(ctx, target).head;
}

int ext_dim(const PrimeContext& ctx, std::int64_t n, const SimpleLabel& lambda,
            const SimpleLabel& mu) {
  if (n < 0) throw DomainError("Ext degree must be >= 0");
  if (lambda.principal) check_simple_index(ctx, lambda.index);
  if (mu.principal) check_simple_index(ctx, mu.index);
  if (n == 0) return lambda == mu ? 1 : 0;
  if (!lambda.principal || !mu.principal) return 0;
  const StableClass omega =
      canonicalize(ctx, n % ctx.period(), lambda.index);
  const auto head = loewy(ctx, omega).head;
  return static_cast<int>(std::count(head.begin(), head.end(), mu.index));
}

std::string to_string(const ModuleLabel& label) {
  switch (label.kind) {
    case ModuleLabel::Kind::Stable:
      return to_string(label.cls);
    case ModuleLabel::Kind::Projective:
      return "P" + std::to_string(label.index);
    case ModuleLabel::Kind::NonPrincipal:
      return "X[" + std::to_string(label.index) + "]";
    case ModuleLabel::Kind::Unidentified:
      return "?[" + std::to_string(label.index) + "]";
  }
  return "?";
}

std::vector<CensusEntry> census(const PrimeContext& ctx) {
  const int n = ctx.rank();
  const std::vector<BigInt> dims = simple_dims(ctx);
  std::vector<CensusEntry> out;
  out.reserve(static_cast<std::size_t>(n) * n + n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const StableClass c{i, j};
      LoewyPair lp = loewy(ctx, c);
      BigInt dim = 0;
      if (lp.simple) {
        dim = dims[j];
      } else {
        for (int t : lp.head) dim += dims[t];
        for (int t : lp.socle) dim += dims[t];
      }
      out.push_back({ModuleLabel::stable(c), std::move(dim), std::move(lp.head),
                     std::move(lp.socle)});
    }
  for (int t = 0; t < n; ++t)
    out.push_back({ModuleLabel::projective(t), dim_projective(ctx, t), {t}, {t}});
  return out;
}

}  // namespace greenp
