#include "ghostlength/smith.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace ghostlength {

namespace {

// Tracks S together with U, U_inv, V, V_inv so that U S V = A and
// U_inv A V_inv = S hold after every step.
class SmithState {
 public:
  explicit SmithState(const IntMatrix& a)
      : S(a),
        U(IntMatrix::identity(a.rows())),
        U_inv(IntMatrix::identity(a.rows())),
        V(IntMatrix::identity(a.cols())),
        V_inv(IntMatrix::identity(a.cols())) {}

  void swap_rows(std::size_t i, std::size_t j) {
    S.swap_rows(i, j);
    U_inv.swap_rows(i, j);
    U.swap_columns(i, j);
  }

  void swap_columns(std::size_t i, std::size_t j) {
    S.swap_columns(i, j);
    V_inv.swap_columns(i, j);
    V.swap_rows(i, j);
  }

  void negate_row(std::size_t i) {
    S.negate_row(i);
    U_inv.negate_row(i);
    for (std::size_t r = 0; r < U.rows(); ++r) U(r, i) = -U(r, i);
  }

  // rows (i, j) <- (a ri + b rj, c ri + d rj), ad - bc = 1
  void combine_rows(std::size_t i, std::size_t j, const Integer& a, const Integer& b,
                    const Integer& c, const Integer& d) {
    S.combine_rows(i, j, a, b, c, d);
    U_inv.combine_rows(i, j, a, b, c, d);
    U.combine_columns(i, j, d, -c, -b, a);
  }

  // columns (i, j) <- (a ci + b cj, c ci + d cj), ad - bc = 1
  void combine_columns(std::size_t i, std::size_t j, const Integer& a, const Integer& b,
                       const Integer& c, const Integer& d) {
    S.combine_columns(i, j, a, b, c, d);
    V_inv.combine_columns(i, j, a, b, c, d);
    V.combine_rows(i, j, d, -c, -b, a);
  }

  IntMatrix S, U, U_inv, V, V_inv;
};

// Returns (g, s, t) with g = s*x + t*y, g = gcd(x, y) > 0.
void extended_gcd(const Integer& x, const Integer& y, Integer& g, Integer& s, Integer& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
}

// Clears S(i, t) against the pivot S(t, t) with a unimodular row step.
void clear_below(SmithState& st, std::size_t t, std::size_t i) {
  const Integer p = st.S(t, t);
  const Integer x = st.S(i, t);
  if (x == 0) return;
  if (x % p == 0) {
    st.combine_rows(t, i, 1, 0, -(x / p), 1);
    return;
  }
  Integer g, s, u;
  extended_gcd(p, x, g, s, u);
  st.combine_rows(t, i, s, u, -(x / g), p / g);
}

void clear_right(SmithState& st, std::size_t t, std::size_t j) {
  const Integer p = st.S(t, t);
  const Integer x = st.S(t, j);
  if (x == 0) return;
  if (x % p == 0) {
    st.combine_columns(t, j, 1, 0, -(x / p), 1);
    return;
  }
  Integer g, s, u;
  extended_gcd(p, x, g, s, u);
  st.combine_columns(t, j, s, u, -(x / g), p / g);
}

}  // namespace

IntVector SmithDecomposition::invariant_factors() const {
  IntVector d(rank);
  for (std::size_t i = 0; i < rank; ++i) d[i] = S(i, i);
  return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  SmithState st(a);
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // Smallest non-zero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pr = t, pc = t;
    Integer best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        const Integer& x = st.S(i, j);
        if (x != 0 && (!found || abs(x) < best)) {
          found = true;
          best = abs(x);
          pr = i;
          pc = j;
        }
      }
    if (!found) break;
    st.swap_rows(t, pr);
    st.swap_columns(t, pc);

    for (;;) {
      bool dirty = true;
      while (dirty) {
        for (std::size_t i = t + 1; i < m; ++i) clear_below(st, t, i);
        for (std::size_t j = t + 1; j < n; ++j) clear_right(st, t, j);
        dirty = false;
        for (std::size_t i = t + 1; i < m && !dirty; ++i) dirty = st.S(i, t) != 0;
      }
      // Divisibility: fold an offending row into the pivot row and repeat.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (st.S(i, j) % st.S(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      st.combine_rows(t, bad, 1, 1, 0, 1);
    }
    if (st.S(t, t) < 0) st.negate_row(t);
  }

  SmithDecomposition out;
  out.rank = t;
  out.S = std::move(st.S);
  out.U = std::move(st.U);
  out.V = std::move(st.V);
  out.U_inv = std::move(st.U_inv);
  out.V_inv = std::move(st.V_inv);
  return out;
}

namespace {

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Nearest integer to num/den, den > 0.
Integer round_quotient(const Integer& num, const Integer& den) {
  Integer twice = 2 * num + den;
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), Integer(2 * den).get_mpz_t());
  return q;
}

IntVector round_div_reduce(IntVector x, const IntMatrix& basis) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < basis.cols(); ++k) {
      IntVector b = basis.column(k);
      Integer bb = dot(b, b);
      if (bb == 0) continue;
      Integer q = round_quotient(dot(x, b), bb);
      if (q == 0) continue;
      IntVector y(x);
      for (std::size_t i = 0; i < y.size(); ++i) y[i] -= q * b[i];
      if (dot(y, y) < dot(x, x)) {
        x = std::move(y);
        changed = true;
      }
    }
  }
  return x;
}

}  // namespace

IntMatrix size_reduce(IntMatrix basis) {
  const std::size_t k = basis.cols();
  std::vector<IntVector> cols(k);
  for (std::size_t c = 0; c < k; ++c) cols[c] = basis.column(c);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        Integer bb = dot(cols[j], cols[j]);
        if (bb == 0) continue;
        Integer q = round_quotient(dot(cols[i], cols[j]), bb);
        if (q == 0) continue;
        IntVector y(cols[i]);
        for (std::size_t r = 0; r < y.size(); ++r) y[r] -= q * cols[j][r];
        if (dot(y, y) < dot(cols[i], cols[i])) {
          cols[i] = std::move(y);
          changed = true;
        }
      }
  }
  // Sign normalization: first non-zero entry positive.
  for (auto& c : cols) {
    for (const auto& x : c) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : c) y = -y;
      break;
    }
  }
  return IntMatrix::from_columns(cols, basis.rows());
}

DiophantineSolution solve_diophantine(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows())
    throw DimensionError("solve_diophantine: right-hand side has " + std::to_string(b.size()) +
                         " entries, matrix has " + std::to_string(a.rows()) + " rows");
  SmithDecomposition snf = smith_normal_form(a);
  const std::size_t n = a.cols();
  std::vector<std::size_t> free_cols;
  for (std::size_t j = snf.rank; j < n; ++j) free_cols.push_back(j);

  DiophantineSolution out;
  out.kernel = size_reduce(snf.V_inv.select_columns(free_cols));

  IntVector c = snf.U_inv * b;
  IntVector y(n);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < snf.rank) {
      if (c[i] % snf.S(i, i) != 0) return out;
      y[i] = c[i] / snf.S(i, i);
    } else if (c[i] != 0) {
      return out;
    }
  }
  out.solution = round_div_reduce(snf.V_inv * y, out.kernel);
  return out;
}

std::optional<IntMatrix> solve_matrix(const IntMatrix& a, const IntMatrix& b) {
  if (b.rows() != a.rows()) throw DimensionError("solve_matrix: row counts differ");
  SmithDecomposition snf = smith_normal_form(a);
  IntMatrix c = snf.U_inv * b;
  IntMatrix y(a.cols(), b.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t k = 0; k < c.cols(); ++k) {
      if (i < snf.rank) {
        if (c(i, k) % snf.S(i, i) != 0) return std::nullopt;
        y(i, k) = c(i, k) / snf.S(i, i);
      } else if (c(i, k) != 0) {
        return std::nullopt;
      }
    }
  return snf.V_inv * y;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  SmithDecomposition snf = smith_normal_form(a);
  std::vector<std::size_t> free_cols;
  for (std::size_t j = snf.rank; j < a.cols(); ++j) free_cols.push_back(j);
  return size_reduce(snf.V_inv.select_columns(free_cols));
}

bool in_column_lattice(const IntMatrix& a, const IntMatrix& b) {
  return solve_matrix(a, b).has_value();
}

}  // namespace ghostlength
