#pragma once

// The ghost projective class on bounded free complexes over the integers:
// ghost-projective covers, Adams towers, length certificates and the check
// that k-fold composites of ghosts are null-homotopic.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghostlength/complex.hpp"
#include "ghostlength/random.hpp"

namespace ghostlength {

class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(const std::string& what, std::optional<int> degree = std::nullopt,
                    std::string group = {})
      : std::invalid_argument(what), degree_(degree), group_(std::move(group)) {}
  std::optional<int> degree() const { return degree_; }
  const std::string& group() const { return group_; }

 private:
  std::optional<int> degree_;
  std::string group_;
};

// Projective dimension over Z: 0 for free groups, 1 otherwise.
int pdim_fg_abelian(const FgAbelianGroup& g);

// Free complexes are ghost projective iff all homology is torsion-free
// (boundaries are automatically free over Z).
bool is_ghost_projective(const GradedComplex& x);

// P_n = P^{B_n} + P^{H_n} + P^{B_{n-1}} with p: P -> X surjective on
// homology; the cofibre of p receives a ghost X -> cofibre.
struct GhostCover {
  GradedComplex projective;
  ChainMap cover;   // P -> X
  Cone cofibre;     // cone of `cover`; cofibre.inclusion is the ghost X -> Y
  // Summand sizes (b_n, h_n, b_{n-1}) per degree, starting at projective.min_degree().
  std::vector<std::array<std::size_t, 3>> blocks;

  const ChainMap& ghost() const { return cofibre.inclusion; }
};

GhostCover ghost_cover(const GradedComplex& x);

struct AdamsTower {
  std::vector<GradedComplex> stages;  // X^0 = X, ..., X^depth
  std::vector<GhostCover> covers;     // cover of X^i, i < depth
  std::vector<ChainMap> kernels;      // inclusion ker(P^i -> X^i) -> P^i
};

// X^{i+1} = Sigma ker(P^i -> X^i).
AdamsTower adams_tower(const GradedComplex& x, int depth);

// Degreewise kernel of a degreewise surjection, with its inclusion.
ChainMap degreewise_kernel(const ChainMap& p);

struct LengthCertificate {
  int k = 0;
  bool certified = false;
  AdamsTower tower;
  // ranks of each stage, indexed like tower.stages
  std::vector<std::pair<int, std::vector<std::size_t>>> stage_ranks;
};

// Builds the Adams tower to depth k - 1 and confirms the last stage is
// ghost projective. Throws PreconditionError naming the degree and group
// when some B_n or H_n has projective dimension >= k.
LengthCertificate certify_length(const GradedComplex& x, int k);

struct KellyVerdict {
  ChainMap composite;
  std::optional<Homotopy> witness;
  bool witness_verified = false;
  bool null_homotopic() const { return witness.has_value() && witness_verified; }
};

// `intermediates` are the targets X_1, ..., X_k of the k ghosts
// X = X_0 -> X_1 -> ... -> X_k. Throws PreconditionError for
// non-composable maps, non-ghosts, or pdim >= k.
KellyVerdict kelly_check(const GradedComplex& x, const std::vector<GradedComplex>& intermediates,
                         const std::vector<ChainMap>& ghosts, int k);

struct KellyParams {
  int k = 2;
  RandomComplexParams complex;
  int coefficient_bound = 1;
  int ghost_attempts = 64;
};

struct KellyTrial {
  std::uint64_t seed = 0;
  std::size_t trial = 0;
  std::vector<GradedComplex> complexes;  // X_0, ..., X_k
  std::vector<ChainMap> ghosts;
  KellyVerdict verdict;
  // ghosts that are not themselves null-homotopic
  std::size_t essential_ghosts = 0;
};

// For k >= 2, trial 0 is the Moore chain M -> Sigma M -> ... -> Sigma^k M.
// Other trials start from a random complex (ghost projective when k = 1);
// each step either takes the universal ghost into the cofibre of a
// ghost-projective cover, or rejection-samples a ghost into a fresh random
// complex. All randomness comes from split_seed(master_seed, trial).
KellyTrial run_kelly_trial(std::uint64_t master_seed, std::size_t trial, const KellyParams& params);

// f: M -> Sigma M with f_1 = 1, M = Z --2--> Z in degrees 1, 0.
ChainMap moore_ghost(const Integer& m = 2);

}  // namespace ghostlength
