#pragma once

// Spaces of module homomorphisms, computed by spinning the source module:
// a homomorphism is determined by the images of a set of module generators,
// and every relation found while spinning becomes a linear constraint on
// those images.

#include <cstdint>
#include <vector>

#include "greenp/oracle/matrep.hpp"

namespace greenp::oracle {

// A basis u_0, ..., u_{n-1} of a module built from seed vectors by applying
// generators, together with the relations that did not produce new vectors.
class SpinBasis {
 public:
  SpinBasis(const MatRep& m, std::uint64_t seed);

  const MatRep& module() const { return m_; }
  std::size_t seeds() const { return seed_count_; }

  struct Step {
    int parent;  // -1 for a seed vector
    int gen;     // generator applied to the parent
    int seed;    // seed this vector was spun from
  };
  const std::vector<Step>& steps() const { return steps_; }

  struct Relation {
    int source;  // basis index
    int gen;
  };
  const std::vector<Relation>& relations() const { return relations_; }

  // Columns u_k.
  const FpMatrix& basis() const { return basis_; }
  const FpMatrix& basis_inverse() const { return basis_inv_; }

 private:
  MatRep m_;
  std::size_t seed_count_ = 0;
  std::vector<Step> steps_;
  std::vector<Relation> relations_;
  FpMatrix basis_;
  FpMatrix basis_inv_;
};

// Basis of Hom(A, B); each element is a degree(B) x degree(A) matrix X with
// X a(g) = b(g) X for both generators.
std::vector<FpMatrix> hom_space(const SpinBasis& a, const MatRep& b);
std::vector<FpMatrix> hom_space(const MatRep& a, const MatRep& b,
                                std::uint64_t seed = 0x5EED);
std::size_t hom_dim(const MatRep& a, const MatRep& b, std::uint64_t seed = 0x5EED);

bool is_homomorphism(const MatRep& a, const MatRep& b, const FpMatrix& x);

}  // namespace greenp::oracle
