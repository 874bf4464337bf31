#include <gtest/gtest.h>

#include <sstream>

#include "greenp/cli/commands.hpp"
#include "greenp/cli/expression.hpp"
#include "greenp/error.hpp"
#include "greenp/serialize.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace greenp;
using namespace greenp::cli;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args, std::optional<std::string> env = std::nullopt) {
  args.insert(args.begin(), "greenp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err, env);
  return {code, out.str(), err.str()};
}

Expression random_expression(const PrimeContext& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(1, 4), nfactors(1, 3), kind(0, 4), idx(0, ctx.p() - 2),
      scalar(0, 6), shift(-20, 20), coin(0, 1);
  Expression e;
  for (int t = nterms(rng); t > 0; --t) {
    Term term;
    term.negated = coin(rng) == 1;
    for (int f = nfactors(rng); f > 0; --f) {
      Factor fac;
      fac.scalar = scalar(rng);
      const int k = kind(rng);
      fac.has_atom = k != 4;
      if (!fac.has_atom && fac.scalar == 0) fac.scalar = 2;
      if (fac.has_atom) {
        fac.atom.kind = static_cast<Atom::Kind>(k);
        fac.atom.index = fac.atom.kind == Atom::Kind::Specht ? idx(rng) + coin(rng) : idx(rng);
        if (fac.atom.kind == Atom::Kind::Shifted) fac.atom.shift = shift(rng);
      }
      term.factors.push_back(fac);
    }
    e.terms.push_back(term);
  }
  return e;
}

}  // namespace

TEST(Expression, ParseExamples) {
  const PrimeContext ctx(5);
  EXPECT_EQ(render(evaluate(parse("D1 * D1", ctx), ctx)), "D0 + D2");
  EXPECT_EQ(render(evaluate(parse("  2D1+D3 - D1", ctx), ctx)), "D1 + D3");
  EXPECT_EQ(render(evaluate(parse("O^-1(D0)", ctx), ctx)), "O^3(D3)");
  EXPECT_EQ(render(evaluate(parse("P2 + D0", ctx), ctx)), "D0");
  EXPECT_EQ(render(evaluate(parse("D1 - D1", ctx), ctx)), "0");
  EXPECT_EQ(render(evaluate(parse("-D2", ctx), ctx)), "-D2");
  EXPECT_EQ(render(evaluate(parse("S2", ctx), ctx, true)), "O^2(D0)");
  EXPECT_THROW(evaluate(parse("S2", ctx), ctx), DomainError);
  EXPECT_EQ(parse_class("O^9(D1)", ctx), (StableClass{1, 1}));
  EXPECT_THROW(parse_class("D1 + D2", ctx), DomainError);
}

TEST(Expression, ParseErrorsCarryPositions) {
  const PrimeContext ctx(5);
  try {
    parse("D1 + X2", ctx);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  for (const char* bad : {"", "D", "D1 +", "D1 ** D2", "O^(D1)", "O^2 D1", "(D1)", "D1 D2"})
    EXPECT_THROW(parse(bad, ctx), ParseError) << bad;
  EXPECT_THROW(parse("D4", ctx), DomainError);
  EXPECT_THROW(parse("P7", ctx), DomainError);
  EXPECT_THROW(parse("S5", ctx), DomainError);
}

TEST(Expression, RenderParseRoundTrip) {
  auto rng = greenp::testing::rng(20);
  for (int k = 0; k < 1000; ++k) {
    const PrimeContext ctx(k % 2 ? 5 : 7);
    const Expression e = random_expression(ctx, rng);
    const std::string text = render(e);
    ASSERT_EQ(parse(text, ctx), e) << text;
    const StableElement v = evaluate(e, ctx, true);
    ASSERT_EQ(evaluate(parse(render(v), ctx), ctx), v) << render(v);
    ASSERT_EQ(stable_element_from_json(to_json(v)), v);
  }
}

TEST(Cli, TensorAndJson) {
  CliRun r = run_cli({"tensor", "-p", "5", "D1 * D1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "D0 + D2\n");
  r = run_cli({"tensor", "-p", "5", "--json", "D1 * D1"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["p"], 5);
  EXPECT_EQ(j["terms"].size(), 2u);
}

TEST(Cli, EverySubcommandEmitsValidJson) {
  const std::vector<std::vector<std::string>> cmds = {
      {"tensor", "-p", "7", "--json", "O^3(D2) * D4"},
      {"syzygy", "-p", "7", "-n", "5", "--json", "D1 + D2"},
      {"loewy", "-p", "7", "--json", "O^2(D1)"},
      {"resolve", "-p", "7", "-n", "4", "--json", "D3"},
      {"gamma", "-p", "7", "--json", "2 D1 + D0"},
      {"upsilon", "-p", "7", "--field", "2", "--json", "--decompose"},
      {"upsilon", "-p", "7", "--field", "Q", "--json"},
      {"ar-quiver", "-p", "7", "--json"},
      {"census", "-p", "7", "--json"},
  };
  for (const auto& c : cmds) {
    const CliRun r = run_cli(c);
    ASSERT_EQ(r.code, 0) << c[0] << ": " << r.err;
    EXPECT_TRUE(nlohmann::json::accept(r.out)) << r.out;
  }
}

TEST(Cli, UpsilonReport) {
  const CliRun r = run_cli({"upsilon", "-p", "7", "--field", "7", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["radical_dim"], 4);
  EXPECT_EQ(j["semisimple"], false);
  EXPECT_EQ(j["summand_dims"], nlohmann::json::array({3, 3}));
  EXPECT_EQ(j["trace_discriminant"], 153664);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run_cli({"tensor", "D1"}).code, kUsage);
  EXPECT_EQ(run_cli({"tensor", "-p", "4", "D1"}).code, kDomain);
  EXPECT_EQ(run_cli({"tensor", "-p", "2", "D0"}).code, kDomain);
  EXPECT_EQ(run_cli({"tensor", "-p", "5", "D9"}).code, kDomain);
  EXPECT_EQ(run_cli({"tensor", "-p", "5", "D1 +"}).code, kDomain);
  EXPECT_EQ(run_cli({"gamma", "-p", "5", "--", "-D1"}).code, kDomain);
  EXPECT_EQ(run_cli({"gamma", "-p", "5", "-D1"}).code, kUsage);
  EXPECT_EQ(run_cli({"upsilon", "-p", "5", "--field", "6"}).code, kDomain);
  EXPECT_EQ(run_cli({"upsilon", "-p", "103", "--field", "2"}).code, kResource);
  EXPECT_EQ(run_cli({"census", "-p", "1009"}).code, kResource);
  EXPECT_EQ(run_cli({"verify", "-p", "11"}).code, kResource);
  EXPECT_EQ(run_cli({"verify", "-p", "3", "--seed", "zz"}).code, kUsage);
  const CliRun help = run_cli({"--help"});
  EXPECT_EQ(help.code, kOk);
  EXPECT_NE(help.out.find("tensor"), std::string::npos);
}

TEST(Cli, SeedPrecedence) {
  const CliRun def = run_cli({"verify", "-p", "3", "--max-tensor-power", "0", "--jobs", "1"});
  ASSERT_EQ(def.code, kOk) << def.err;
  EXPECT_NE(def.err.find("seed = 0x5eed"), std::string::npos) << def.err;
  const CliRun env = run_cli({"verify", "-p", "3", "--max-tensor-power", "0"}, "42");
  EXPECT_NE(env.err.find("seed = 0x2a"), std::string::npos) << env.err;
  const CliRun flag = run_cli({"verify", "-p", "3", "--max-tensor-power", "0", "--seed", "7"}, "42");
  EXPECT_NE(flag.err.find("seed = 0x7)"), std::string::npos) << flag.err;
  EXPECT_EQ(run_cli({"verify", "-p", "3"}, "not-a-seed").code, kUsage);
}

TEST(Cli, VerifyIsDeterministic) {
  const CliRun a = run_cli({"verify", "-p", "5", "--max-tensor-power", "2", "--jobs", "1"});
  const CliRun b = run_cli({"verify", "-p", "5", "--max-tensor-power", "2", "--jobs", "4"});
  ASSERT_EQ(a.code, kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  std::istringstream lines(a.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_TRUE(j["pass"].get<bool>()) << line;
    ++n;
  }
  EXPECT_GT(n, 20);
}
