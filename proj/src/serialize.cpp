#include "greenp/serialize.hpp"

#include <limits>

#include "greenp/error.hpp"

namespace greenp {

nlohmann::json to_json(const StableElement& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [c, mult] : e.terms())
    terms.push_back({{"shift", c.shift}, {"j", c.j}, {"mult", mult}});
  return {{"p", e.context().p()}, {"terms", std::move(terms)}};
}

StableElement stable_element_from_json(const nlohmann::json& j) {
  try {
    const PrimeContext ctx(j.at("p").get<int>());
    StableElement e(ctx);
    for (const auto& t : j.at("terms"))
      e.add(canonicalize(ctx, t.at("shift").get<std::int64_t>(), t.at("j").get<int>()),
            t.at("mult").get<std::int64_t>());
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw DomainError(std::string("malformed stable element: ") + ex.what());
  }
}

nlohmann::json to_json(const GammaValue& g) {
  return {{"sine_index", g.sine_index()}, {"p", g.prime()}, {"value", g.value()}};
}

nlohmann::json to_json(const PrimeContext& ctx, const StableClass& c, const LoewyPair& lp) {
  return {{"p", ctx.p()},
          {"class", {{"shift", c.shift}, {"j", c.j}}},
          {"label", to_string(c)},
          {"head", lp.head},
          {"socle", lp.socle},
          {"simple", lp.simple}};
}

nlohmann::json bigint_json(const BigInt& n) {
  if (n >= 0 && n <= std::numeric_limits<std::uint64_t>::max())
    return static_cast<std::uint64_t>(n);
  if (n < 0 && n >= std::numeric_limits<std::int64_t>::min())
    return static_cast<std::int64_t>(n);
  return n.str();
}

nlohmann::json upsilon_report(const UpsilonAlgebra& alg, const FieldSpec& field,
                              bool with_radical_basis, std::uint64_t seed) {
  const RadicalResult rad = radical(alg, field);
  const LocalDecomposition local = local_decomposition(alg, field, seed);
  nlohmann::json out = {{"p", alg.context().p()},
                        {"field", field.name()},
                        {"radical_dim", rad.dimension},
                        {"semisimple", rad.dimension == 0},
                        {"summand_dims", local.decided ? nlohmann::json(local.summand_dims)
                                                       : nlohmann::json(nullptr)},
                        {"trace_discriminant", bigint_json(trace_discriminant(alg))}};
  if (with_radical_basis) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : rad.basis) {
      nlohmann::json r = nlohmann::json::array();
      for (const Rational& x : row) r.push_back(x.str());
      rows.push_back(std::move(r));
    }
    out["radical_basis"] = std::move(rows);
  }
  return out;
}

nlohmann::json census_json(const PrimeContext& ctx) {
  nlohmann::json entries = nlohmann::json::array();
  for (const CensusEntry& e : census(ctx))
    entries.push_back({{"label", to_string(e.label)},
                       {"dim", bigint_json(e.dim)},
                       {"head", e.head},
                       {"socle", e.socle}});
  return {{"p", ctx.p()}, {"count", entries.size()}, {"entries", std::move(entries)}};
}

nlohmann::json to_json(const ArQuiver& q) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const ArVertex& v : q.vertices()) vertices.push_back(dot_label(v));
  nlohmann::json edges = nlohmann::json::array();
  for (const ArEdge& e : q.edges()) edges.push_back({dot_label(e.from), dot_label(e.to)});
  return {{"p", q.context().p()},
          {"vertices", std::move(vertices)},
          {"edges", std::move(edges)},
          {"mesh_symmetric", mesh_symmetric(q)}};
}

}  // namespace greenp
