#pragma once

// Smith normal form over the integers and the linear Diophantine solver
// built on top of it.

#include <optional>
#include <vector>

#include "ghostlength/int_matrix.hpp"

namespace ghostlength {

// A = U * S * V with U, V unimodular and S diagonal with
// d_1 | d_2 | ... | d_rank, all positive, followed by zeros.
// The inverses are kept alongside because every consumer needs them:
// U_inv * A * V_inv = S.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  IntMatrix U_inv;
  IntMatrix V_inv;
  std::size_t rank = 0;

  // d_1, ..., d_rank
  IntVector invariant_factors() const;
};

// Gcd-pivot elimination; deterministic for a given input.
SmithDecomposition smith_normal_form(const IntMatrix& a);

struct DiophantineSolution {
  std::optional<IntVector> solution;
  // Columns form a Z-basis of {x : A x = 0}.
  IntMatrix kernel;
};

// Solves A x = b over the integers. Throws DimensionError when b has the
// wrong length.
DiophantineSolution solve_diophantine(const IntMatrix& a, const IntVector& b);

// Columnwise solve of A X = B; nullopt as soon as one column has no solution.
std::optional<IntMatrix> solve_matrix(const IntMatrix& a, const IntMatrix& b);

// Z-basis of the kernel lattice, as columns.
IntMatrix kernel_basis(const IntMatrix& a);

// Pairwise size reduction of a lattice basis (columns). Spans the same
// lattice; entries usually shrink a lot compared with raw Smith kernels.
IntMatrix size_reduce(IntMatrix basis);

// Whether every column of `b` lies in the column lattice of `a`.
bool in_column_lattice(const IntMatrix& a, const IntMatrix& b);

}  // namespace ghostlength
