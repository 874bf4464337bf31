#pragma once

// Indecomposable decomposition of explicit modules and everything built on
// it: identification against the census, cores, syzygies, Jordan types.

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "greenp/invariants.hpp"
#include "greenp/oracle/hom.hpp"
#include "greenp/oracle/matrep.hpp"
#include "greenp/stable_ring.hpp"

namespace greenp::oracle {

struct OracleConfig {
  int max_decompose_prime = 7;
  int max_power_prime = 5;
  int max_tensor_power = 4;
};

struct HeadSocle {
  std::vector<int> head;  // D_t repeated by multiplicity, ascending
  std::vector<int> socle;
  bool operator==(const HeadSocle&) const = default;
};

// head multiplicity of D_t = dim Hom(M, D_t); socle = dim Hom(D_t, M).
HeadSocle head_socle(const MatRep& m, std::uint64_t seed = 0x5EED);

// Lookup (dimension, head, socle) -> census label. Keys with empty head and
// socle denote non-principal simple projectives.
class IdTable {
 public:
  // Throws InternalError if two census entries share a key.
  explicit IdTable(const PrimeContext& ctx);
  ModuleLabel identify(std::size_t dim, const HeadSocle& hs) const;

 private:
  std::map<std::tuple<std::size_t, std::vector<int>, std::vector<int>>, ModuleLabel> table_;
};

struct Summand {
  ModuleLabel label;
  MatRep rep;
};

struct DecompositionReport {
  std::vector<Summand> summands;
  // Set when some summand could not be certified indecomposable or could
  // not be identified.
  bool residual = false;

  // (label, multiplicity) sorted by label.
  std::vector<std::pair<ModuleLabel, int>> counts() const;
  // Non-projective labels as a stable-ring element.
  StableElement stable_part(const PrimeContext& ctx) const;
  std::size_t total_degree() const;
};

DecompositionReport fitting_decompose(const MatRep& m, std::uint64_t seed,
                                      const OracleConfig& cfg = {});

struct StrippedModule {
  MatRep core;
  std::map<ModuleLabel, int> projectives;
  bool residual = false;
};

StrippedModule stable_strip(const MatRep& m, std::uint64_t seed,
                            const OracleConfig& cfg = {});

// Kernel of a projective cover of m, built from signed Young modules.
MatRep omega_rep(const MatRep& m, std::uint64_t seed = 0x5EED);

// Jordan type of the p-cycle acting on m.
JordanType restriction_jordan(const MatRep& m);

// dim of the core of m^{(x) n}; ResourceError beyond the configured caps.
std::size_t coredim(const MatRep& m, int n, std::uint64_t seed,
                    const OracleConfig& cfg = {});

// Searches Hom(a, b) for an invertible element.
bool is_isomorphic(const MatRep& a, const MatRep& b, std::uint64_t seed = 0x5EED);

}  // namespace greenp::oracle
