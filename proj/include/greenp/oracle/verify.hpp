#pragma once

// The oracle verification suite: every closed-form statement the symbolic
// modules make about p is recomputed from explicit matrices and compared.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "greenp/oracle/decompose.hpp"

namespace greenp::oracle {

constexpr std::uint64_t kDefaultSeed = 0x5EED;

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  // Largest n for the coredim smoke test; 0 skips it.
  int max_tensor_power = 4;
  unsigned jobs = 1;
  OracleConfig config;
};

struct CheckRecord {
  std::string check;
  int p = 0;
  nlohmann::json inputs;
  nlohmann::json expected;
  nlohmann::json got;
  bool pass = false;
};

nlohmann::json to_json(const CheckRecord& r);

// Deterministic per-task seed derived from the run seed.
std::uint64_t task_seed(std::uint64_t run_seed, std::uint64_t task);

// Records in a fixed order independent of the number of jobs. Throws
// ResourceError when p exceeds the configured decomposition cap.
std::vector<CheckRecord> run_verification(const PrimeContext& ctx,
                                          const VerifyOptions& opts);

}  // namespace greenp::oracle
