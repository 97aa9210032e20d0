#include "ghostlength/complex.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

#include "ghostlength/random.hpp"

namespace ghostlength {

// ---------------------------------------------------------------------------
// FgAbelianGroup

IntVector FgAbelianGroup::orders() const {
  IntVector out(torsion);
  out.resize(torsion.size() + rank, 0);
  return out;
}

void FgAbelianGroup::validate() const {
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] < 2)
      throw InvariantError("torsion coefficient " + torsion[i].get_str() + " is below 2");
    if (i > 0 && torsion[i] % torsion[i - 1] != 0)
      throw InvariantError("torsion coefficients " + torsion[i - 1].get_str() + ", " +
                           torsion[i].get_str() + " break the divisibility chain");
  }
}

std::string FgAbelianGroup::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank > 0) {
    os << "Z";
    if (rank > 1) os << "^" << rank;
    first = false;
  }
  for (const auto& t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t.get_str();
    first = false;
  }
  return os.str();
}

FgAbelianGroup group_from_factors(const IntVector& factors) {
  FgAbelianGroup g;
  for (const auto& f : factors) {
    if (f == 0)
      ++g.rank;
    else if (abs(f) >= 2)
      g.torsion.push_back(abs(f));
  }
  return g;
}

// ---------------------------------------------------------------------------
// GradedComplex

GradedComplex::GradedComplex(int min_degree, std::vector<std::size_t> ranks,
                             std::vector<IntMatrix> differentials)
    : min_degree_(min_degree), ranks_(std::move(ranks)), differentials_(std::move(differentials)) {
  const std::size_t expected = ranks_.empty() ? 0 : ranks_.size() - 1;
  if (differentials_.size() != expected)
    throw InvariantError("complex with " + std::to_string(ranks_.size()) + " degrees needs " +
                         std::to_string(expected) + " differentials, got " +
                         std::to_string(differentials_.size()));
  for (std::size_t i = 0; i < differentials_.size(); ++i) {
    const auto& d = differentials_[i];
    const int n = min_degree_ + static_cast<int>(i) + 1;
    if (d.rows() != ranks_[i] || d.cols() != ranks_[i + 1])
      throw InvariantError("differential d_" + std::to_string(n) + " has shape " +
                               std::to_string(d.rows()) + "x" + std::to_string(d.cols()) +
                               ", expected " + std::to_string(ranks_[i]) + "x" +
                               std::to_string(ranks_[i + 1]),
                           n);
  }
  for (std::size_t i = 0; i + 1 < differentials_.size(); ++i) {
    if (!(differentials_[i] * differentials_[i + 1]).is_zero()) {
      const int n = min_degree_ + static_cast<int>(i) + 2;
      throw InvariantError("d_" + std::to_string(n - 1) + " d_" + std::to_string(n) +
                               " is not zero at degree " + std::to_string(n),
                           n);
    }
  }
}

GradedComplex GradedComplex::concentrated(int degree, std::size_t rank) {
  return GradedComplex(degree, {rank}, {});
}

GradedComplex GradedComplex::moore(const Integer& m, int degree) {
  IntMatrix d(1, 1);
  d(0, 0) = m;
  return GradedComplex(degree, {1, 1}, {d});
}

std::size_t GradedComplex::rank(int n) const {
  if (n < min_degree_ || n > max_degree()) return 0;
  return ranks_[static_cast<std::size_t>(n - min_degree_)];
}

IntMatrix GradedComplex::differential(int n) const {
  if (n - 1 >= min_degree_ && n <= max_degree())
    return differentials_[static_cast<std::size_t>(n - 1 - min_degree_)];
  return IntMatrix(rank(n - 1), rank(n));
}

bool GradedComplex::is_zero() const {
  return std::all_of(ranks_.begin(), ranks_.end(), [](std::size_t r) { return r == 0; });
}

std::size_t GradedComplex::total_rank() const {
  std::size_t s = 0;
  for (auto r : ranks_) s += r;
  return s;
}

DegreeRange support(const GradedComplex& x) {
  DegreeRange r{0, -1};
  bool any = false;
  for (int n = x.min_degree(); n <= x.max_degree(); ++n) {
    if (x.rank(n) == 0) continue;
    if (!any) r.lo = n;
    r.hi = n;
    any = true;
  }
  return r;
}

DegreeRange support_union(const GradedComplex& x, const GradedComplex& y) {
  DegreeRange a = support(x), b = support(y);
  if (a.empty()) return b;
  if (b.empty()) return a;
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

// ---------------------------------------------------------------------------
// ChainMap

ChainMap::ChainMap(GradedComplex source, GradedComplex target, int min_degree,
                   std::vector<IntMatrix> components)
    : source_(std::move(source)),
      target_(std::move(target)),
      min_degree_(min_degree),
      components_(std::move(components)) {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const int n = min_degree_ + static_cast<int>(i);
    const auto& f = components_[i];
    if (f.rows() != target_.rank(n) || f.cols() != source_.rank(n))
      throw InvariantError("component f_" + std::to_string(n) + " has shape " +
                               std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                               ", expected " + std::to_string(target_.rank(n)) + "x" +
                               std::to_string(source_.rank(n)),
                           n);
  }
  DegreeRange r = support_union(source_, target_);
  if (r.empty()) return;
  for (int n = r.lo; n <= r.hi + 1; ++n) {
    if (!(component(n - 1) * source_.differential(n) == target_.differential(n) * component(n)))
      throw InvariantError("chain map square does not commute at degree " + std::to_string(n),
                           n);
  }
}

ChainMap ChainMap::zero(const GradedComplex& source, const GradedComplex& target) {
  return ChainMap(source, target, 0, {});
}

ChainMap ChainMap::identity(const GradedComplex& x) {
  std::vector<IntMatrix> comps;
  for (int n = x.min_degree(); n <= x.max_degree(); ++n)
    comps.push_back(IntMatrix::identity(x.rank(n)));
  return ChainMap(x, x, x.min_degree(), std::move(comps));
}

IntMatrix ChainMap::component(int n) const {
  const int i = n - min_degree_;
  if (i >= 0 && i < static_cast<int>(components_.size()))
    return components_[static_cast<std::size_t>(i)];
  return IntMatrix(target_.rank(n), source_.rank(n));
}

bool ChainMap::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const IntMatrix& m) { return m.is_zero(); });
}

namespace {

std::vector<IntMatrix> components_over(const DegreeRange& r,
                                       const std::function<IntMatrix(int)>& fn) {
  std::vector<IntMatrix> out;
  for (int n = r.lo; n <= r.hi; ++n) out.push_back(fn(n));
  return out;
}

}  // namespace

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (!(f.target() == g.source()))
    throw InvariantError("compose: target of the first map is not the source of the second");
  DegreeRange r = support_union(f.source(), g.target());
  if (r.empty()) return ChainMap::zero(f.source(), g.target());
  return ChainMap(f.source(), g.target(), r.lo,
                  components_over(r, [&](int n) { return g.component(n) * f.component(n); }));
}

ChainMap operator+(const ChainMap& a, const ChainMap& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target()))
    throw InvariantError("sum of chain maps with different endpoints");
  DegreeRange r = support_union(a.source(), a.target());
  if (r.empty()) return a;
  return ChainMap(a.source(), a.target(), r.lo,
                  components_over(r, [&](int n) { return a.component(n) + b.component(n); }));
}

ChainMap operator-(const ChainMap& a) {
  std::vector<IntMatrix> comps;
  for (const auto& c : a.components()) comps.push_back(-c);
  return ChainMap(a.source(), a.target(), a.min_degree(), std::move(comps));
}

// ---------------------------------------------------------------------------
// Subquotient / homology

IntMatrix lattice_basis(const IntMatrix& g) {
  SmithDecomposition snf = smith_normal_form(g);
  IntMatrix basis(g.rows(), snf.rank);
  for (std::size_t j = 0; j < snf.rank; ++j)
    for (std::size_t r = 0; r < g.rows(); ++r) basis(r, j) = snf.U(r, j) * snf.S(j, j);
  return size_reduce(std::move(basis));
}

Subquotient::Subquotient(IntMatrix lattice_basis, const IntMatrix& sub_generators)
    : lattice_(std::move(lattice_basis)), lattice_snf_(smith_normal_form(lattice_)) {
  const std::size_t z = lattice_.cols();
  if (lattice_snf_.rank != z) throw InvariantError("subquotient: lattice basis is not independent");
  if (sub_generators.rows() != lattice_.rows())
    throw DimensionError("subquotient: generators live in a different ambient lattice");

  IntMatrix coords(z, sub_generators.cols());
  for (std::size_t c = 0; c < sub_generators.cols(); ++c) {
    // Inline version of coordinates() before to_adapted_ exists.
    IntVector w = lattice_snf_.U_inv * sub_generators.column(c);
    IntVector y(z);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i < z) {
        if (w[i] % lattice_snf_.S(i, i) != 0)
          throw InvariantError("subquotient: generator " + std::to_string(c) +
                               " lies outside the lattice");
        y[i] = w[i] / lattice_snf_.S(i, i);
      } else if (w[i] != 0) {
        throw InvariantError("subquotient: generator " + std::to_string(c) +
                             " lies outside the lattice");
      }
    }
    IntVector col = lattice_snf_.V_inv * y;
    for (std::size_t i = 0; i < z; ++i) coords(i, c) = col[i];
  }

  SmithDecomposition snf = smith_normal_form(coords);
  to_adapted_ = snf.U_inv;
  adapted_ = lattice_ * snf.U;
  factors_.assign(z, 0);
  for (std::size_t j = 0; j < snf.rank; ++j) factors_[j] = snf.S(j, j);
  for (std::size_t j = 0; j < z; ++j)
    if (factors_[j] != 1) generators_.push_back(j);
  group_ = group_from_factors(factors_);
}

IntMatrix Subquotient::generator_representatives() const {
  return adapted_.select_columns(generators_);
}

IntMatrix Subquotient::sub_basis() const {
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (factors_[j] == 0) continue;
    IntVector c = adapted_.column(j);
    for (auto& x : c) x *= factors_[j];
    cols.push_back(std::move(c));
  }
  return IntMatrix::from_columns(cols, adapted_.rows());
}

std::optional<IntVector> Subquotient::coordinates(const IntVector& v) const {
  const std::size_t z = lattice_.cols();
  IntVector w = lattice_snf_.U_inv * v;
  IntVector y(z);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i < z) {
      if (w[i] % lattice_snf_.S(i, i) != 0) return std::nullopt;
      y[i] = w[i] / lattice_snf_.S(i, i);
    } else if (w[i] != 0) {
      return std::nullopt;
    }
  }
  return to_adapted_ * (lattice_snf_.V_inv * y);
}

IntVector Subquotient::classify(const IntVector& v) const {
  auto a = coordinates(v);
  if (!a) throw InvariantError("classify: vector is not in the lattice (not a cycle)");
  IntVector out;
  out.reserve(generators_.size());
  for (std::size_t j : generators_) {
    Integer x = (*a)[j];
    if (factors_[j] != 0) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), factors_[j].get_mpz_t());
    out.push_back(x);
  }
  return out;
}

HomologyPresentation homology(const GradedComplex& x, int n) {
  return Subquotient(kernel_basis(x.differential(n)), x.differential(n + 1));
}

IntMatrix boundary_basis(const GradedComplex& x, int n) {
  return lattice_basis(x.differential(n + 1));
}

bool InducedMap::is_surjective() const {
  const std::size_t g = matrix.rows();
  if (g == 0) return true;
  std::vector<IntVector> rel;
  for (std::size_t i = 0; i < g; ++i) {
    if (target_orders[i] == 0) continue;
    IntVector c(g);
    c[i] = target_orders[i];
    rel.push_back(std::move(c));
  }
  SmithDecomposition snf = smith_normal_form(hconcat(matrix, IntMatrix::from_columns(rel, g)));
  if (snf.rank != g) return false;
  for (const auto& d : snf.invariant_factors())
    if (d != 1) return false;
  return true;
}

InducedMap induced_homology_map(const ChainMap& f, int n) {
  HomologyPresentation hx = homology(f.source(), n);
  HomologyPresentation hy = homology(f.target(), n);
  IntMatrix gens = hx.generator_representatives();
  IntMatrix fn = f.component(n);
  InducedMap out;
  out.target_orders = hy.group().orders();
  out.matrix = IntMatrix(hy.group().generator_count(), gens.cols());
  for (std::size_t c = 0; c < gens.cols(); ++c) {
    IntVector image = hy.classify(fn * gens.column(c));
    for (std::size_t r = 0; r < image.size(); ++r) out.matrix(r, c) = image[r];
  }
  return out;
}

bool is_ghost(const ChainMap& f) {
  DegreeRange r = support_union(f.source(), f.target());
  for (int n = r.lo; n <= r.hi; ++n) {
    if (f.source().rank(n) == 0 || f.target().rank(n) == 0) continue;
    if (!induced_homology_map(f, n).is_zero()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Homotopies

IntMatrix Homotopy::component(int n, const GradedComplex& source,
                              const GradedComplex& target) const {
  const int i = n - min_degree;
  if (i >= 0 && i < static_cast<int>(components.size()))
    return components[static_cast<std::size_t>(i)];
  return IntMatrix(target.rank(n + 1), source.rank(n));
}

std::optional<Homotopy> null_homotopy(const ChainMap& f) {
  const GradedComplex& x = f.source();
  const GradedComplex& y = f.target();
  DegreeRange r = support_union(x, y);
  if (r.empty()) return Homotopy{};

  // unknown h_n for n in [lo - 1, hi], entry (c, b) at offset[n] + c*cols + b
  const int h_lo = r.lo - 1;
  std::vector<std::size_t> offset;
  std::size_t unknowns = 0;
  for (int n = h_lo; n <= r.hi; ++n) {
    offset.push_back(unknowns);
    unknowns += y.rank(n + 1) * x.rank(n);
  }
  auto var = [&](int n, std::size_t c, std::size_t b) {
    return offset[static_cast<std::size_t>(n - h_lo)] + c * x.rank(n) + b;
  };

  std::size_t equations = 0;
  for (int n = r.lo; n <= r.hi; ++n) equations += y.rank(n) * x.rank(n);

  IntMatrix a(equations, unknowns);
  IntVector rhs(equations);
  std::size_t row = 0;
  for (int n = r.lo; n <= r.hi; ++n) {
    const IntMatrix dy = y.differential(n + 1);  // Y_{n+1} -> Y_n
    const IntMatrix dx = x.differential(n);      // X_n -> X_{n-1}
    const IntMatrix fn = f.component(n);
    for (std::size_t i = 0; i < y.rank(n); ++i)
      for (std::size_t j = 0; j < x.rank(n); ++j, ++row) {
        rhs[row] = fn(i, j);
        for (std::size_t c = 0; c < y.rank(n + 1); ++c)
          if (dy(i, c) != 0) a(row, var(n, c, j)) += dy(i, c);
        for (std::size_t c = 0; c < x.rank(n - 1); ++c)
          if (dx(c, j) != 0) a(row, var(n - 1, i, c)) += dx(c, j);
      }
  }

  DiophantineSolution sol = solve_diophantine(a, rhs);
  if (!sol.solution) return std::nullopt;
  Homotopy h;
  h.min_degree = h_lo;
  for (int n = h_lo; n <= r.hi; ++n) {
    IntMatrix hn(y.rank(n + 1), x.rank(n));
    for (std::size_t c = 0; c < hn.rows(); ++c)
      for (std::size_t b = 0; b < hn.cols(); ++b) hn(c, b) = (*sol.solution)[var(n, c, b)];
    h.components.push_back(std::move(hn));
  }
  return h;
}

ChainMap homotopy_boundary(const GradedComplex& x, const GradedComplex& y, const Homotopy& h) {
  DegreeRange r = support_union(x, y);
  if (r.empty()) return ChainMap::zero(x, y);
  return ChainMap(x, y, r.lo, components_over(r, [&](int n) {
                    return y.differential(n + 1) * h.component(n, x, y) +
                           h.component(n - 1, x, y) * x.differential(n);
                  }));
}

bool verify_null_homotopy(const ChainMap& f, const Homotopy& h) {
  const GradedComplex& x = f.source();
  const GradedComplex& y = f.target();
  for (std::size_t i = 0; i < h.components.size(); ++i) {
    const int n = h.min_degree + static_cast<int>(i);
    const auto& c = h.components[i];
    if (c.rows() != y.rank(n + 1) || c.cols() != x.rank(n)) return false;
  }
  DegreeRange r = support_union(x, y);
  for (int n = r.lo; n <= r.hi; ++n) {
    IntMatrix lhs = y.differential(n + 1) * h.component(n, x, y) +
                    h.component(n - 1, x, y) * x.differential(n);
    if (!(lhs == f.component(n))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Suspension and cones

GradedComplex suspend(const GradedComplex& x) {
  std::vector<IntMatrix> d;
  for (const auto& m : x.differentials()) d.push_back(-m);
  return GradedComplex(x.min_degree() + 1, x.ranks(), std::move(d));
}

ChainMap suspend(const ChainMap& f) {
  return ChainMap(suspend(f.source()), suspend(f.target()), f.min_degree() + 1, f.components());
}

Cone cone(const ChainMap& f) {
  const GradedComplex& x = f.source();
  const GradedComplex& y = f.target();
  DegreeRange rx = support(x), ry = support(y);
  DegreeRange r;
  if (rx.empty())
    r = ry;
  else if (ry.empty())
    r = {rx.lo + 1, rx.hi + 1};
  else
    r = {std::min(ry.lo, rx.lo + 1), std::max(ry.hi, rx.hi + 1)};

  GradedComplex sx = suspend(x);
  if (r.empty()) {
    GradedComplex c;
    return Cone{c, ChainMap::zero(y, c), ChainMap::zero(c, sx)};
  }

  std::vector<std::size_t> ranks;
  for (int n = r.lo; n <= r.hi; ++n) ranks.push_back(y.rank(n) + x.rank(n - 1));
  std::vector<IntMatrix> diffs;
  for (int n = r.lo + 1; n <= r.hi; ++n)
    diffs.push_back(block2x2(y.differential(n), f.component(n - 1),
                             IntMatrix(x.rank(n - 2), y.rank(n)), -x.differential(n - 1)));
  GradedComplex c(r.lo, std::move(ranks), std::move(diffs));

  DegreeRange ri = support_union(y, c);
  std::vector<IntMatrix> inc = components_over(ri, [&](int n) {
    return vconcat(IntMatrix::identity(y.rank(n)), IntMatrix(x.rank(n - 1), y.rank(n)));
  });
  DegreeRange rp = support_union(c, sx);
  std::vector<IntMatrix> proj = components_over(rp, [&](int n) {
    return hconcat(IntMatrix(x.rank(n - 1), y.rank(n)), IntMatrix::identity(x.rank(n - 1)));
  });
  return Cone{c, ChainMap(y, c, ri.lo, std::move(inc)), ChainMap(c, sx, rp.lo, std::move(proj))};
}

// ---------------------------------------------------------------------------
// Chain-map lattices

ChainMapLattice::ChainMapLattice(GradedComplex source, GradedComplex target)
    : source_(std::move(source)), target_(std::move(target)), range_(support_union(source_, target_)) {
  if (range_.empty()) return;
  const GradedComplex& x = source_;
  const GradedComplex& y = target_;
  std::vector<std::size_t> offset;
  std::size_t unknowns = 0;
  for (int n = range_.lo; n <= range_.hi; ++n) {
    offset.push_back(unknowns);
    unknowns += y.rank(n) * x.rank(n);
  }
  auto var = [&](int n, std::size_t i, std::size_t j) {
    return offset[static_cast<std::size_t>(n - range_.lo)] + i * x.rank(n) + j;
  };
  auto in_range = [&](int n) { return n >= range_.lo && n <= range_.hi; };

  std::vector<IntVector> rows;
  for (int n = range_.lo; n <= range_.hi + 1; ++n) {
    // (f_{n-1} dX_n - dY_n f_n)(i, j) = 0
    const IntMatrix dx = x.differential(n);
    const IntMatrix dy = y.differential(n);
    for (std::size_t i = 0; i < y.rank(n - 1); ++i)
      for (std::size_t j = 0; j < x.rank(n); ++j) {
        IntVector eq(unknowns);
        if (in_range(n - 1))
          for (std::size_t c = 0; c < x.rank(n - 1); ++c) eq[var(n - 1, i, c)] += dx(c, j);
        if (in_range(n))
          for (std::size_t c = 0; c < y.rank(n); ++c) eq[var(n, c, j)] -= dy(i, c);
        rows.push_back(std::move(eq));
      }
  }
  IntMatrix system = IntMatrix::from_rows(rows, unknowns);
  basis_ = kernel_basis(system);
}

ChainMap ChainMapLattice::from_coefficients(const IntVector& coefficients) const {
  if (range_.empty()) return ChainMap::zero(source_, target_);
  IntVector v = basis_ * coefficients;
  std::vector<IntMatrix> comps;
  std::size_t at = 0;
  for (int n = range_.lo; n <= range_.hi; ++n) {
    IntMatrix m(target_.rank(n), source_.rank(n));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = v[at++];
    comps.push_back(std::move(m));
  }
  return ChainMap(source_, target_, range_.lo, std::move(comps));
}

ChainMap sample_chain_map(const ChainMapLattice& lattice, Rng& rng, int bound) {
  if (bound < 1) throw std::invalid_argument("sample_chain_map: bound must be >= 1");
  IntVector coeff(lattice.dimension());
  for (auto& c : coeff) c = rng.uniform(-bound, bound);
  return lattice.from_coefficients(coeff);
}

ChainMap sample_chain_map(const GradedComplex& x, const GradedComplex& y, std::uint64_t seed,
                          int bound) {
  Rng rng(seed);
  return sample_chain_map(ChainMapLattice(x, y), rng, bound);
}

// ---------------------------------------------------------------------------
// Reduction modulo d

std::size_t ModComplex::rank(int n) const {
  const int i = n - min_degree;
  if (i < 0 || i >= static_cast<int>(ranks.size())) return 0;
  return ranks[static_cast<std::size_t>(i)];
}

IntMatrix ModComplex::differential(int n) const {
  const int i = n - 1 - min_degree;
  if (i >= 0 && i < static_cast<int>(differentials.size()))
    return differentials[static_cast<std::size_t>(i)];
  return IntMatrix(rank(n - 1), rank(n));
}

ModComplex tensor_cyclic(const GradedComplex& x, const Integer& d) {
  if (d < 0) throw std::invalid_argument("tensor_cyclic: modulus must be >= 0");
  ModComplex out{d, x.min_degree(), x.ranks(), {}};
  if (d == 1) {
    std::fill(out.ranks.begin(), out.ranks.end(), 0);
    for (std::size_t i = 0; i < x.differentials().size(); ++i) out.differentials.emplace_back(0, 0);
    return out;
  }
  for (const auto& m : x.differentials()) out.differentials.push_back(reduce_mod(m, d));
  return out;
}

FgAbelianGroup homology_mod(const ModComplex& x, int n) {
  const std::size_t r = x.rank(n);
  if (r == 0) return {};
  const IntMatrix dn = x.differential(n);
  const IntMatrix dn1 = x.differential(n + 1);
  if (x.modulus == 0) return Subquotient(kernel_basis(dn), dn1).group();

  // cycles: x with d_n x in m Z^{r'}, i.e. the projection of ker [d_n | m I]
  const std::size_t rp = dn.rows();
  IntMatrix k = kernel_basis(hconcat(dn, x.modulus * IntMatrix::identity(rp)));
  IntMatrix cycles = lattice_basis(k.block(0, 0, r, k.cols()));
  IntMatrix bounds = hconcat(dn1, x.modulus * IntMatrix::identity(r));
  return Subquotient(cycles, bounds).group();
}

bool is_exact_at(const ModComplex& x, int n) { return homology_mod(x, n).is_zero(); }

}  // namespace ghostlength
