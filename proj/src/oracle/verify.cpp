#include "greenp/oracle/verify.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "greenp/error.hpp"
#include "greenp/invariants.hpp"
#include "greenp/oracle/modules.hpp"

namespace greenp::oracle {
namespace {

using Task = std::function<std::vector<CheckRecord>(std::uint64_t seed)>;

nlohmann::json labels_json(const StableElement& e) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [c, mult] : e.terms())
    for (std::int64_t k = 0; k < mult; ++k) out.push_back(to_string(c));
  return out;
}

CheckRecord record(const std::string& check, int p, nlohmann::json inputs,
                   nlohmann::json expected, nlohmann::json got) {
  const bool pass = expected == got;
  return {check, p, std::move(inputs), std::move(expected), std::move(got), pass};
}

std::vector<Task> build_tasks(const PrimeContext& ctx, const VerifyOptions& opts) {
  const int p = ctx.p();
  const int n = p - 1;
  std::vector<Task> tasks;

  tasks.push_back([ctx, p, n](std::uint64_t) {
    std::vector<CheckRecord> out;
    auto rel = [&](const std::string& name, const MatRep& m) {
      out.push_back(record("relations", p, {{"module", name}}, true, m.satisfies_relations()));
    };
    rel("M", perm_module(ctx));
    rel("S1", specht_s1(ctx));
    for (int j = 0; j < n; ++j) rel("D" + std::to_string(j), simple_d(ctx, j));
    for (int t = 0; t < n; ++t) rel("P" + std::to_string(t), signed_young_module(ctx, t));
    return out;
  });

  tasks.push_back([ctx, p, n](std::uint64_t seed) {
    std::vector<CheckRecord> out;
    for (int j = 0; j < n; ++j) {
      const MatRep d = simple_d(ctx, j);
      out.push_back(record("dim_simple", p, {{"j", j}}, dim_simple(ctx, j).str(),
                           std::to_string(d.degree())));
      out.push_back(record("self_dual", p, {{"j", j}}, 1, hom_dim(d, dual(d), seed + j)));
      for (int i = 0; i < n; ++i)
        out.push_back(record("schur", p, {{"i", i}, {"j", j}}, i == j ? 1 : 0,
                             hom_dim(simple_d(ctx, i), d, seed ^ (i * 31 + j))));
    }
    return out;
  });

  tasks.push_back([ctx, p, n](std::uint64_t seed) {
    std::vector<CheckRecord> out;
    for (int t = 0; t < n; ++t) {
      const MatRep pt = signed_young_module(ctx, t);
      out.push_back(record("dim_projective", p, {{"t", t}}, dim_projective(ctx, t).str(),
                           std::to_string(pt.degree())));
      const HeadSocle hs = head_socle(pt, seed + t);
      out.push_back(record("projective_head_socle", p, {{"t", t}},
                           {{"head", {t}}, {"socle", {t}}},
                           {{"head", hs.head}, {"socle", hs.socle}}));
    }
    return out;
  });

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      tasks.push_back([ctx, p, i, j, cfg = opts.config](std::uint64_t seed) {
        const MatRep m = tensor_rep(simple_d(ctx, i), simple_d(ctx, j));
        const DecompositionReport rep = fitting_decompose(m, seed, cfg);
        StableElement expected(ctx);
        for (int t : r_set(ctx, i, j)) expected.add({0, t}, 1);
        nlohmann::json projective = nlohmann::json::array();
        for (const auto& [label, mult] : rep.counts())
          if (label.is_projective()) projective.push_back({to_string(label), mult});
        std::vector<CheckRecord> out;
        const nlohmann::json want = labels_json(expected);
        const nlohmann::json have = labels_json(rep.stable_part(ctx));
        out.push_back({"tensor_stable_part", p, {{"i", i}, {"j", j}}, {{"stable", want}},
                       {{"stable", have}, {"projective", projective}}, want == have});
        out.push_back(record("tensor_identified", p, {{"i", i}, {"j", j}}, false, rep.residual));
        out.push_back(record("tensor_degree", p, {{"i", i}, {"j", j}}, m.degree(),
                             rep.total_degree()));
        return out;
      });

  for (int j = 0; j < n; ++j)
    tasks.push_back([ctx, p, j](std::uint64_t seed) {
      std::vector<CheckRecord> out;
      const MatRep d = simple_d(ctx, j);
      MatRep m = d;
      for (int i = 0; i <= 2 * p - 2; ++i) {
        if (i < 2 * p - 2) {
          const LoewyPair lp = loewy(ctx, canonicalize(ctx, i, j));
          const HeadSocle hs = head_socle(m, seed + i);
          out.push_back(record("syzygy_loewy", p, {{"i", i}, {"j", j}},
                               {{"head", lp.head}, {"socle", lp.simple ? lp.head : lp.socle}},
                               {{"head", hs.head}, {"socle", hs.socle}}));
        } else {
          out.push_back(record("syzygy_period", p, {{"n", i}, {"j", j}}, true,
                               is_isomorphic(m, d, seed + i)));
        }
        if (i < 2 * p - 2) m = omega_rep(m, seed ^ (0x51 + i));
      }
      return out;
    });

  tasks.push_back([ctx, p, n](std::uint64_t) {
    std::vector<CheckRecord> out;
    for (int j = 0; j < n; ++j) {
      const MatRep d = simple_d(ctx, j);
      std::vector<int> blocks = restriction_jordan_stable(ctx, j).blocks;
      const int free = (static_cast<int>(d.degree()) - blocks.front()) / p;
      blocks.insert(blocks.end(), free, p);
      out.push_back(record("restriction_jordan", p, {{"j", j}}, make_jordan_type(blocks).blocks,
                           restriction_jordan(d).blocks));
    }
    return out;
  });

  if (opts.max_tensor_power >= 2 && p <= opts.config.max_power_prime)
    for (int j = 0; j < n; ++j)
      tasks.push_back([ctx, p, j, cfg = opts.config,
                       top = opts.max_tensor_power](std::uint64_t seed) {
        std::vector<CheckRecord> out;
        const double gamma = gamma_class(ctx, {0, j}).value();
        const MatRep d = simple_d(ctx, j);
        for (int k = 2; k <= top; ++k) {
          const std::size_t cd = coredim(d, k, seed + k, cfg);
          const double root = std::pow(static_cast<double>(cd), 1.0 / k);
          CheckRecord r{"coredim_growth", p, {{"j", j}, {"n", k}},
                        {{"gamma", gamma}, {"relative_tolerance", 0.25}},
                        {{"coredim", cd}, {"root", root}},
                        std::abs(root - gamma) <= 0.25 * gamma};
          out.push_back(std::move(r));
        }
        return out;
      });

  return tasks;
}

}  // namespace

nlohmann::json to_json(const CheckRecord& r) {
  return {{"check", r.check},       {"p", r.p},     {"inputs", r.inputs},
          {"expected", r.expected}, {"got", r.got}, {"pass", r.pass}};
}

std::uint64_t task_seed(std::uint64_t run_seed, std::uint64_t task) {
  std::uint64_t x = run_seed + 0x9E3779B97F4A7C15ULL * (task + 1);
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::vector<CheckRecord> run_verification(const PrimeContext& ctx, const VerifyOptions& opts) {
  if (ctx.p() > opts.config.max_decompose_prime)
    throw ResourceError("verification is limited to p <= " +
                        std::to_string(opts.config.max_decompose_prime));
  if (opts.max_tensor_power > opts.config.max_tensor_power)
    throw ResourceError("tensor powers are limited to n <= " +
                        std::to_string(opts.config.max_tensor_power));
  const std::vector<Task> tasks = build_tasks(ctx, opts);
  std::vector<std::vector<CheckRecord>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < tasks.size();) {
      try {
        results[k] = tasks[k](task_seed(opts.seed, k));
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, tasks.size()));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < jobs; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<CheckRecord> out;
  for (auto& rs : results)
    for (auto& r : rs) out.push_back(std::move(r));
  return out;
}

}  // namespace greenp::oracle
