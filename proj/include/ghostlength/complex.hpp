#pragma once

// Bounded chain complexes of finitely generated free abelian groups, chain
// maps between them, and the homological algebra used on top: homology with
// explicit cycle coordinates, induced maps, ghost detection, null-homotopies,
// suspensions and cones.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghostlength/int_matrix.hpp"
#include "ghostlength/smith.hpp"

namespace ghostlength {

// A type invariant of a complex or map failed; `degree()` names where.
class InvariantError : public std::invalid_argument {
 public:
  InvariantError(const std::string& what, std::optional<int> degree = std::nullopt)
      : std::invalid_argument(what), degree_(degree) {}
  std::optional<int> degree() const { return degree_; }

 private:
  std::optional<int> degree_;
};

// Z^rank + Z/t_1 + ... + Z/t_m with t_1 | t_2 | ... | t_m, all t_i >= 2.
// Generators are ordered torsion first (in list order), then free.
struct FgAbelianGroup {
  std::size_t rank = 0;
  IntVector torsion;

  std::size_t generator_count() const { return torsion.size() + rank; }
  // Order of each generator: t_i for torsion, 0 for free.
  IntVector orders() const;
  bool is_zero() const { return rank == 0 && torsion.empty(); }
  bool is_free() const { return torsion.empty(); }
  // Throws InvariantError if the divisibility chain or t_i >= 2 fails.
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;
};

// Diagonal entries of a Smith form (units, torsion, zeros) -> group.
FgAbelianGroup group_from_factors(const IntVector& factors);

class GradedComplex {
 public:
  GradedComplex() = default;
  // differentials[i] : C_{min+i+1} -> C_{min+i}, shape ranks[i] x ranks[i+1].
  // Validates shapes and d o d = 0.
  GradedComplex(int min_degree, std::vector<std::size_t> ranks,
                std::vector<IntMatrix> differentials);

  static GradedComplex concentrated(int degree, std::size_t rank);
  // Z --m--> Z in degrees (degree + 1, degree).
  static GradedComplex moore(const Integer& m, int degree = 0);

  int min_degree() const { return min_degree_; }
  int max_degree() const { return min_degree_ + static_cast<int>(ranks_.size()) - 1; }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  const std::vector<IntMatrix>& differentials() const { return differentials_; }

  std::size_t rank(int n) const;
  // d_n : C_n -> C_{n-1}; a correctly shaped zero matrix outside the stored range.
  IntMatrix differential(int n) const;
  bool is_zero() const;
  std::size_t total_rank() const;

  friend bool operator==(const GradedComplex&, const GradedComplex&) = default;

 private:
  int min_degree_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<IntMatrix> differentials_;
};

struct DegreeRange {
  int lo = 0;
  int hi = -1;
  bool empty() const { return hi < lo; }
};

// Smallest range containing every non-zero group of either complex.
DegreeRange support(const GradedComplex& x);
DegreeRange support_union(const GradedComplex& x, const GradedComplex& y);

class ChainMap {
 public:
  ChainMap() = default;
  // components[i] : source_{min+i} -> target_{min+i}. Degrees outside the
  // given range are zero. Validates shapes and f d = d f.
  ChainMap(GradedComplex source, GradedComplex target, int min_degree,
           std::vector<IntMatrix> components);

  static ChainMap zero(const GradedComplex& source, const GradedComplex& target);
  static ChainMap identity(const GradedComplex& x);

  const GradedComplex& source() const { return source_; }
  const GradedComplex& target() const { return target_; }
  int min_degree() const { return min_degree_; }
  const std::vector<IntMatrix>& components() const { return components_; }
  IntMatrix component(int n) const;
  bool is_zero() const;

 private:
  GradedComplex source_;
  GradedComplex target_;
  int min_degree_ = 0;
  std::vector<IntMatrix> components_;
};

// g o f; throws InvariantError if f.target() != g.source().
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap operator+(const ChainMap& a, const ChainMap& b);
ChainMap operator-(const ChainMap& a);

// A lattice L with a sublattice M (given by generators), in adapted
// coordinates: L has basis b_1..b_z and M is spanned by factor_j * b_j.
// For homology, L = Z_n and M = B_n.
class Subquotient {
 public:
  Subquotient(IntMatrix lattice_basis, const IntMatrix& sub_generators);

  const FgAbelianGroup& group() const { return group_; }
  // Adapted basis of L, columns in ambient coordinates.
  const IntMatrix& adapted_basis() const { return adapted_; }
  // 1: in M; >= 2: torsion generator; 0: free generator.
  const IntVector& factors() const { return factors_; }
  // Indices into adapted_basis() of the generators of L/M, in group order.
  const std::vector<std::size_t>& generator_indices() const { return generators_; }

  IntMatrix generator_representatives() const;
  // Basis of M: factor_j * b_j over j with non-zero factor.
  IntMatrix sub_basis() const;

  // Coordinates of v in the adapted basis; nullopt if v is not in L.
  std::optional<IntVector> coordinates(const IntVector& v) const;
  // The class of v in L/M as generator coefficients, torsion reduced into
  // [0, t). Throws InvariantError if v is not in L.
  IntVector classify(const IntVector& v) const;

 private:
  IntMatrix lattice_;
  SmithDecomposition lattice_snf_;
  IntMatrix to_adapted_;  // U_inv of the sub-lattice Smith form
  IntMatrix adapted_;
  IntVector factors_;
  std::vector<std::size_t> generators_;
  FgAbelianGroup group_;
};

using HomologyPresentation = Subquotient;

// H_n(X) = ker d_n / im d_{n+1} with cycle coordinates retained.
HomologyPresentation homology(const GradedComplex& x, int n);

// B_n(X) as a lattice basis (columns in C_n coordinates).
IntMatrix boundary_basis(const GradedComplex& x, int n);

// Matrix of H_n(f) on the generators of the two homology groups; entries
// in torsion rows reduced modulo the generator order.
struct InducedMap {
  IntMatrix matrix;
  IntVector target_orders;
  bool is_zero() const { return matrix.is_zero(); }
  bool is_surjective() const;
};

InducedMap induced_homology_map(const ChainMap& f, int n);

// Zero on homology in every degree.
bool is_ghost(const ChainMap& f);

// h_n : X_n -> Y_{n+1}, stored for n in [min_degree, min_degree + size).
struct Homotopy {
  int min_degree = 0;
  std::vector<IntMatrix> components;
  // Zero outside the stored range; shapes then come from the complexes.
  IntMatrix component(int n, const GradedComplex& source, const GradedComplex& target) const;
};

// Solves f = d h + h d exactly over the integers.
std::optional<Homotopy> null_homotopy(const ChainMap& f);

// Checks f_n = d^Y_{n+1} h_n + h_{n-1} d^X_n in every degree.
bool verify_null_homotopy(const ChainMap& f, const Homotopy& h);

// (d h + h d) as a chain map X -> Y.
ChainMap homotopy_boundary(const GradedComplex& x, const GradedComplex& y, const Homotopy& h);

// (Sigma X)_n = X_{n-1}, d_{Sigma X} = -d_X.
GradedComplex suspend(const GradedComplex& x);
// (Sigma f)_n = f_{n-1}.
ChainMap suspend(const ChainMap& f);

struct Cone {
  GradedComplex complex;  // Y_n + X_{n-1}, d = [[d_Y, f], [0, -d_X]]
  ChainMap inclusion;     // Y -> cone
  ChainMap projection;    // cone -> Sigma X
};

Cone cone(const ChainMap& f);

// The lattice of chain maps X -> Y, with a Z-basis in vectorized
// coordinates (components in degree order, each row-major).
class ChainMapLattice {
 public:
  ChainMapLattice(GradedComplex source, GradedComplex target);

  const GradedComplex& source() const { return source_; }
  const GradedComplex& target() const { return target_; }
  std::size_t dimension() const { return basis_.cols(); }
  const IntMatrix& basis() const { return basis_; }

  ChainMap from_coefficients(const IntVector& coefficients) const;

 private:
  GradedComplex source_;
  GradedComplex target_;
  DegreeRange range_;
  IntMatrix basis_;
};

class Rng;

// Random lattice combination with coefficients in [-bound, bound].
ChainMap sample_chain_map(const ChainMapLattice& lattice, Rng& rng, int bound);
ChainMap sample_chain_map(const GradedComplex& x, const GradedComplex& y, std::uint64_t seed,
                          int bound);

// A complex over Z/modulus: differentials reduced into [0, modulus).
// d o d vanishes modulo `modulus`, not necessarily over Z.
struct ModComplex {
  Integer modulus;
  int min_degree = 0;
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> differentials;

  std::size_t rank(int n) const;
  IntMatrix differential(int n) const;
};

// X (x) Z/d. d = 0 is the identity, d = 1 the zero complex.
ModComplex tensor_cyclic(const GradedComplex& x, const Integer& d);

// H_n of a complex over Z/d as an abelian group.
FgAbelianGroup homology_mod(const ModComplex& x, int n);
bool is_exact_at(const ModComplex& x, int n);

// A Z-basis (columns) of the lattice spanned by the columns of g.
IntMatrix lattice_basis(const IntMatrix& g);

}  // namespace ghostlength
