#pragma once

// Pure exactness for short exact sequences of finitely generated abelian
// groups: the tensor criterion over a finite family of cyclic groups, and
// the split criterion as an independent cross-check.

#include <optional>
#include <vector>

#include "ghostlength/complex.hpp"

namespace ghostlength {

class Rng;

// Z^generators / (column span of relations).
struct Presentation {
  std::size_t generators = 0;
  IntMatrix relations;
};

// Diagonal relations t_i on the torsion generators.
Presentation presentation(const FgAbelianGroup& g);

// G (x) Z/d: adds d times the identity to the relations. d = 0 is a no-op.
Presentation tensor_cyclic(const Presentation& p, const Integer& d);

// Smith-normalized form of a presentation with the coordinate changes
// between old and new generators.
struct NormalizedGroup {
  FgAbelianGroup group;
  IntMatrix to_new;  // new-coordinates = to_new * old-coordinates
  IntMatrix to_old;  // old-coordinates of each new generator (columns)
};

NormalizedGroup normalize(const Presentation& p);

// 0 -> A --i--> B --p--> C -> 0 on the generators of the normalized groups.
struct ShortExactSeq {
  FgAbelianGroup a, b, c;
  IntMatrix i;  // gens(B) x gens(A)
  IntMatrix p;  // gens(C) x gens(B)
};

struct ExactnessReport {
  bool well_defined = false;
  bool composite_zero = false;
  bool injective = false;
  bool exact_middle = false;
  bool surjective = false;
  bool exact() const {
    return well_defined && composite_zero && injective && exact_middle && surjective;
  }
};

// Exactness of 0 -> A -> B -> C -> 0 for presented groups.
ExactnessReport check_exactness(const Presentation& a, const Presentation& b,
                                const Presentation& c, const IntMatrix& i, const IntMatrix& p);

// Whether i: A -> B is a well-defined injective homomorphism.
bool is_injective(const Presentation& a, const Presentation& b, const IntMatrix& i);

// Throws InvariantError naming the failed condition.
void validate(const ShortExactSeq& seq);

// {0} and every prime power up to the largest elementary divisor of A, B, C.
std::vector<Integer> purity_test_family(const ShortExactSeq& seq);

struct PurityResult {
  bool pure = false;
  std::optional<Integer> failing_modulus;
};

PurityResult pure_exactness(const ShortExactSeq& seq);
bool is_pure_exact(const ShortExactSeq& seq);

// Integer retraction r: B -> A with r i = id_A, if any.
std::optional<IntMatrix> retraction(const ShortExactSeq& seq);
bool is_split(const ShortExactSeq& seq);

// 0 -> A -> A + C -> C -> 0 with the canonical maps.
ShortExactSeq split_sequence(const FgAbelianGroup& a, const FgAbelianGroup& c);

// Random B with a random subgroup A (split or not), C = B / A.
ShortExactSeq random_short_exact(Rng& rng);

FgAbelianGroup random_group(Rng& rng, std::size_t max_rank = 2, std::size_t max_torsion = 2);

}  // namespace ghostlength
