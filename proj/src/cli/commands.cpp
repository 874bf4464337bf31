#include "greenp/cli/commands.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "greenp/ar_quiver.hpp"
#include "greenp/cli/expression.hpp"
#include "greenp/error.hpp"
#include "greenp/invariants.hpp"
#include "greenp/oracle/verify.hpp"
#include "greenp/serialize.hpp"
#include "greenp/upsilon.hpp"

namespace greenp::cli {
namespace {

struct Options {
  int p = 0;
  bool json = false;
  bool as_syzygy = false;
  std::string expr;
  std::int64_t n = 0;
  std::string field;
  bool decompose = false;
  bool dot = false;
  std::string seed;
  int max_tensor_power = 4;
  unsigned jobs = 0;
};

std::uint64_t parse_seed(const std::string& text, const char* source) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used, 0);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw CLI::ValidationError(std::string(source) + ": not an integer seed: " + text);
  }
}

std::string join_simples(const std::vector<int>& ts) {
  if (ts.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < ts.size(); ++k) out += (k ? " + D" : "D") + std::to_string(ts[k]);
  return out;
}

std::string join_projectives(const std::vector<int>& ts) {
  if (ts.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < ts.size(); ++k) out += (k ? " + P" : "P") + std::to_string(ts[k]);
  return out;
}

void check_enumeration(const PrimeContext& ctx) {
  if (ctx.p() > kMaxEnumerationPrime)
    throw ResourceError("enumeration is limited to p <= " + std::to_string(kMaxEnumerationPrime));
}

std::string fixed(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(10) << v;
  return s.str();
}

int cmd_tensor(const Options& o, std::ostream& out) {
  const PrimeContext ctx(o.p);
  const StableElement e = evaluate(parse(o.expr, ctx), ctx, o.as_syzygy);
  if (o.json)
    out << to_json(e).dump() << "\n";
  else
    out << render(e) << "\n";
  return kOk;
}

int cmd_syzygy(const Options& o, std::ostream& out) {
  const PrimeContext ctx(o.p);
  const StableElement e = syzygy(evaluate(parse(o.expr, ctx), ctx, o.as_syzygy), o.n);
  if (o.json)
    out << to_json(e).dump() << "\n";
  else
    out << render(e) << "\n";
  return kOk;
}

int cmd_loewy(const Options& o, std::ostream& out) {
  const PrimeContext ctx(o.p);
  const StableClass c = parse_class(o.expr, ctx);
  const LoewyPair lp = loewy(ctx, c);
  if (o.json) {
    nlohmann::json j = to_json(ctx, c, lp);
    j["input"] = o.expr;
    out << j.dump() << "\n";
  } else {
    out << to_string(c) << (lp.simple ? " (simple)" : "") << "\n"
        << "  head:  " << join_simples(lp.head) << "\n"
        << "  socle: " << join_simples(lp.socle) << "\n";
  }
  return kOk;
}

int cmd_resolve(const Options& o, std::ostream& out) {
  const PrimeContext ctx(o.p);
  if (o.n < 0) throw DomainError("resolution length must be nonnegative");
  const StableClass c = parse_class(o.expr, ctx);
  nlohmann::json terms = nlohmann::json::array();
  for (std::int64_t k = 0; k <= o.n; ++k) {
    const std::vector<int> q = min_resolution_term(ctx, c, k);
    if (o.json)
      terms.push_back({{"n", k}, {"projectives", q}});
    else
      out << "Q" << k << " = " << join_projectives(q) << "\n";
  }
  if (o.json)
    out << nlohmann::json{{"p", ctx.p()},
                          {"class", {{"shift", c.shift}, {"j", c.j}}},
                          {"terms", terms}}
               .dump()
        << "\n";
  return kOk;
}

int cmd_gamma(const Options& o, std::ostream& out) {
  const PrimeContext ctx(o.p);
  const StableElement e = evaluate(parse(o.expr, ctx), ctx, o.as_syzygy);
  if (e.terms().size() == 1 && e.terms().begin()->second == 1) {
    const StableClass c = e.terms().begin()->first;
    const GammaValue g = gamma_class(ctx, c);
    if (o.json) {
      nlohmann::json j = to_json(g);
      j["sign_note"] = gamma_sign_note(c);
      out << j.dump() << "\n";
    } else {
      out << fixed(g.value()) << " (sine index " << g.sine_index() << ")\n";
    }
    return kOk;
  }
  const double total = gamma_element(e);
  if (o.json) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [c, mult] : e.terms())
      terms.push_back({{"shift", c.shift},
                       {"j", c.j},
                       {"mult", mult},
                       {"sine_index", gamma_class(ctx, c).sine_index()}});
    out << nlohmann::json{{"p", ctx.p()}, {"value", total}, {"terms", terms}}.dump() << "\n";
  } else {
    out << fixed(total) << "\n";
  }
  return kOk;
}

int cmd_upsilon(const Options& o, std::ostream& out, std::uint64_t seed) {
  const PrimeContext ctx(o.p);
  const FieldSpec field =
      (o.field == "Q" || o.field == "q") ? FieldSpec::rationals() : [&] {
        std::int64_t q = 0;
        std::size_t used = 0;
        try {
          q = std::stoll(o.field, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used == 0 || used != o.field.size())
          throw DomainError("--field expects a prime or Q, got " + o.field);
        return FieldSpec::prime(q);
      }();
  const UpsilonAlgebra alg = build_upsilon(ctx);
  const nlohmann::json report = upsilon_report(alg, field, o.decompose, seed);
  if (o.json) {
    out << report.dump() << "\n";
    return kOk;
  }
  out << "p = " << ctx.p() << " over " << field.name() << "\n"
      << "  radical dimension: " << report["radical_dim"].get<int>() << "\n"
      << "  semisimple: " << (report["semisimple"].get<bool>() ? "yes" : "no") << "\n"
      << "  local summands: ";
  if (report["summand_dims"].is_null()) {
    out << "undecided\n";
  } else {
    const auto dims = report["summand_dims"].get<std::vector<int>>();
    for (std::size_t k = 0; k < dims.size(); ++k) out << (k ? ", " : "") << dims[k];
    out << "\n";
  }
  out << "  trace form discriminant: " << report["trace_discriminant"].dump() << "\n";
  if (o.decompose)
    for (const auto& row : report["radical_basis"]) out << "  radical: " << row.dump() << "\n";
  return kOk;
}

int cmd_ar_quiver(const Options& o, std::ostream& out) {
  const PrimeContext ctx(o.p);
  check_enumeration(ctx);
  const ArQuiver q = ar_quiver(ctx);
  if (o.dot)
    out << to_dot(q);
  else if (o.json)
    out << to_json(q).dump() << "\n";
  else
    out << "p = " << ctx.p() << ": " << q.vertices().size() << " vertices, " << q.edges().size()
        << " arrows, mesh symmetric: " << (mesh_symmetric(q) ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_census(const Options& o, std::ostream& out) {
  const PrimeContext ctx(o.p);
  check_enumeration(ctx);
  if (o.json) {
    out << census_json(ctx).dump() << "\n";
    return kOk;
  }
  const auto entries = census(ctx);
  out << entries.size() << " indecomposable modules in the principal block for p = " << ctx.p()
      << "\n";
  for (const CensusEntry& e : entries)
    out << "  " << std::left << std::setw(14) << to_string(e.label) << " dim " << std::setw(8)
        << e.dim.str() << " head " << join_simples(e.head) << "; socle "
        << join_simples(e.socle) << "\n";
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err, std::uint64_t seed) {
  const PrimeContext ctx(o.p);
  oracle::VerifyOptions opts;
  opts.seed = seed;
  opts.max_tensor_power = o.max_tensor_power;
  opts.jobs = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
  const auto records = oracle::run_verification(ctx, opts);
  std::size_t failed = 0;
  for (const auto& r : records) {
    out << oracle::to_json(r).dump() << "\n";
    if (!r.pass) ++failed;
  }
  err << records.size() << " checks, " << failed << " failed (p = " << ctx.p() << ", seed = 0x"
      << std::hex << seed << std::dec << ")\n";
  return failed ? kVerifyFailed : kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_seed) {
  CLI::App app{"Stable Green ring calculator for the symmetric group S_p in characteristic p",
               "greenp"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("-p,--prime", o.p, "odd prime p")->required();
    sub->add_flag("--json", o.json, "emit JSON");
  };
  auto expression = [&](CLI::App* sub, const char* what) {
    sub->add_option("expr", o.expr, what)->required();
  };

  CLI::App* tensor = app.add_subcommand("tensor", "evaluate a stable ring expression");
  common(tensor);
  expression(tensor, "expression, e.g. \"D1 * D1\"");
  tensor->add_flag("--as-syzygy", o.as_syzygy, "read S_i as O^i(D0)");

  CLI::App* syz = app.add_subcommand("syzygy", "apply Omega^n to an expression");
  common(syz);
  syz->add_option("-n", o.n, "shift")->required();
  expression(syz, "expression");
  syz->add_flag("--as-syzygy", o.as_syzygy, "read S_i as O^i(D0)");

  CLI::App* loewy_cmd = app.add_subcommand("loewy", "radical layers of a class");
  common(loewy_cmd);
  expression(loewy_cmd, "class, e.g. \"O^2(D1)\" or \"S2\"");

  CLI::App* resolve = app.add_subcommand("resolve", "minimal projective resolution terms Q_0..Q_n");
  common(resolve);
  resolve->add_option("-n", o.n, "last term")->required();
  expression(resolve, "class");

  CLI::App* gamma = app.add_subcommand("gamma", "Benson-Symonds invariant");
  common(gamma);
  expression(gamma, "expression");
  gamma->add_flag("--as-syzygy", o.as_syzygy, "read S_i as O^i(D0)");

  CLI::App* ups = app.add_subcommand("upsilon", "radical and local summands of the simple ring");
  common(ups);
  ups->add_option("--field", o.field, "prime q or Q")->required();
  ups->add_flag("--decompose", o.decompose, "also print a radical basis");
  ups->add_option("--seed", o.seed, "random seed");

  CLI::App* ar = app.add_subcommand("ar-quiver", "Auslander-Reiten quiver");
  common(ar);
  ar->add_flag("--dot", o.dot, "emit Graphviz DOT");

  CLI::App* cen = app.add_subcommand("census", "indecomposable modules of the principal block");
  common(cen);

  CLI::App* ver = app.add_subcommand("verify", "check closed forms against explicit matrices");
  common(ver);
  ver->add_option("--seed", o.seed, "random seed (overrides GREENP_SEED)");
  ver->add_option("--max-tensor-power", o.max_tensor_power, "coredim smoke test bound (0 skips)")
      ->check(CLI::NonNegativeNumber);
  ver->add_option("--jobs", o.jobs, "worker threads (default: hardware concurrency)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    std::uint64_t seed = oracle::kDefaultSeed;
    if (!o.seed.empty())
      seed = parse_seed(o.seed, "--seed");
    else if (env_seed && !env_seed->empty())
      seed = parse_seed(*env_seed, "GREENP_SEED");

    if (tensor->parsed()) return cmd_tensor(o, out);
    if (syz->parsed()) return cmd_syzygy(o, out);
    if (loewy_cmd->parsed()) return cmd_loewy(o, out);
    if (resolve->parsed()) return cmd_resolve(o, out);
    if (gamma->parsed()) return cmd_gamma(o, out);
    if (ups->parsed()) return cmd_upsilon(o, out, seed);
    if (ar->parsed()) return cmd_ar_quiver(o, out);
    if (cen->parsed()) return cmd_census(o, out);
    if (ver->parsed()) return cmd_verify(o, out, err, seed);
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kDomain;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const InternalError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kVerifyFailed;
  }
}

}  // namespace greenp::cli
