#include "ghostlength/purity.hpp"

#include <algorithm>

#include "ghostlength/random.hpp"

namespace ghostlength {

Presentation presentation(const FgAbelianGroup& g) {
  Presentation p;
  p.generators = g.generator_count();
  p.relations = IntMatrix(p.generators, g.torsion.size());
  for (std::size_t j = 0; j < g.torsion.size(); ++j) p.relations(j, j) = g.torsion[j];
  return p;
}

Presentation tensor_cyclic(const Presentation& p, const Integer& d) {
  if (d < 0) throw std::invalid_argument("tensor_cyclic: modulus must be >= 0");
  if (d == 0) return p;
  return {p.generators, hconcat(p.relations, d * IntMatrix::identity(p.generators))};
}

NormalizedGroup normalize(const Presentation& p) {
  SmithDecomposition snf = smith_normal_form(p.relations);
  IntVector factors(p.generators, 0);
  for (std::size_t j = 0; j < snf.rank; ++j) factors[j] = snf.S(j, j);
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < p.generators; ++j)
    if (factors[j] != 1) kept.push_back(j);
  IntVector kept_factors;
  for (auto j : kept) kept_factors.push_back(factors[j]);
  return {group_from_factors(kept_factors), snf.U_inv.select_rows(kept), snf.U.select_columns(kept)};
}

namespace {

bool all_units(const IntMatrix& m, std::size_t expected_rank) {
  SmithDecomposition snf = smith_normal_form(m);
  if (snf.rank != expected_rank) return false;
  for (const auto& d : snf.invariant_factors())
    if (d != 1) return false;
  return true;
}

}  // namespace

bool is_injective(const Presentation& a, const Presentation& b, const IntMatrix& i) {
  if (!in_column_lattice(b.relations, i * a.relations)) return false;
  IntMatrix k = kernel_basis(hconcat(i, b.relations));
  return in_column_lattice(a.relations, k.block(0, 0, a.generators, k.cols()));
}

ExactnessReport check_exactness(const Presentation& a, const Presentation& b,
                                const Presentation& c, const IntMatrix& i, const IntMatrix& p) {
  if (i.rows() != b.generators || i.cols() != a.generators || p.rows() != c.generators ||
      p.cols() != b.generators)
    throw DimensionError("check_exactness: map shapes do not match the groups");
  ExactnessReport r;
  r.well_defined = in_column_lattice(b.relations, i * a.relations) &&
                   in_column_lattice(c.relations, p * b.relations);
  r.composite_zero = in_column_lattice(c.relations, p * i);
  r.injective = is_injective(a, b, i);
  IntMatrix k = kernel_basis(hconcat(p, c.relations));
  r.exact_middle = in_column_lattice(hconcat(i, b.relations), k.block(0, 0, b.generators, k.cols()));
  r.surjective = all_units(hconcat(p, c.relations), c.generators);
  return r;
}

void validate(const ShortExactSeq& seq) {
  seq.a.validate();
  seq.b.validate();
  seq.c.validate();
  ExactnessReport r = check_exactness(presentation(seq.a), presentation(seq.b),
                                      presentation(seq.c), seq.i, seq.p);
  if (!r.well_defined) throw InvariantError("sequence maps are not well-defined homomorphisms");
  if (!r.composite_zero) throw InvariantError("p o i is not zero");
  if (!r.injective) throw InvariantError("i is not injective");
  if (!r.exact_middle) throw InvariantError("ker p is not contained in im i");
  if (!r.surjective) throw InvariantError("p is not surjective");
}

namespace {

// Prime-power factors of |n|.
std::vector<Integer> elementary_divisors(Integer n) {
  std::vector<Integer> out;
  n = abs(n);
  for (Integer q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    Integer pe = 1;
    while (n % q == 0) {
      n /= q;
      pe *= q;
    }
    out.push_back(pe);
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime_power(const Integer& q) {
  auto f = elementary_divisors(q);
  return f.size() == 1 && f.front() == q;
}

}  // namespace

std::vector<Integer> purity_test_family(const ShortExactSeq& seq) {
  Integer largest = 0;
  for (const auto* g : {&seq.a, &seq.b, &seq.c})
    for (const auto& t : g->torsion)
      for (const auto& e : elementary_divisors(t)) largest = std::max(largest, e);
  std::vector<Integer> family{0};
  for (Integer q = 2; q <= largest; ++q)
    if (is_prime_power(q)) family.push_back(q);
  return family;
}

PurityResult pure_exactness(const ShortExactSeq& seq) {
  validate(seq);
  const Presentation a = presentation(seq.a), b = presentation(seq.b), c = presentation(seq.c);
  for (const auto& d : purity_test_family(seq)) {
    ExactnessReport r = check_exactness(tensor_cyclic(a, d), tensor_cyclic(b, d),
                                        tensor_cyclic(c, d), seq.i, seq.p);
    if (!r.exact()) return {false, d};
  }
  return {true, std::nullopt};
}

bool is_pure_exact(const ShortExactSeq& seq) { return pure_exactness(seq).pure; }

std::optional<IntMatrix> retraction(const ShortExactSeq& seq) {
  validate(seq);
  const Presentation pa = presentation(seq.a), pb = presentation(seq.b);
  const std::size_t ga = pa.generators, gb = pb.generators;
  const std::size_t ra = pa.relations.cols(), rb = pb.relations.cols();
  // unknowns: r (ga x gb), Y (ra x rb), W (ra x ga)
  const std::size_t off_y = ga * gb, off_w = off_y + ra * rb, unknowns = off_w + ra * ga;
  auto r_at = [&](std::size_t a, std::size_t c) { return a * gb + c; };
  auto y_at = [&](std::size_t e, std::size_t beta) { return off_y + e * rb + beta; };
  auto w_at = [&](std::size_t e, std::size_t a) { return off_w + e * ga + a; };

  std::vector<IntVector> rows;
  IntVector rhs;
  // r R_B = R_A Y: r is well defined on B
  for (std::size_t a = 0; a < ga; ++a)
    for (std::size_t beta = 0; beta < rb; ++beta) {
      IntVector eq(unknowns);
      for (std::size_t c = 0; c < gb; ++c) eq[r_at(a, c)] += pb.relations(c, beta);
      for (std::size_t e = 0; e < ra; ++e) eq[y_at(e, beta)] -= pa.relations(a, e);
      rows.push_back(std::move(eq));
      rhs.push_back(0);
    }
  // r i = I + R_A W: r i is the identity of A
  for (std::size_t a = 0; a < ga; ++a)
    for (std::size_t a2 = 0; a2 < ga; ++a2) {
      IntVector eq(unknowns);
      for (std::size_t c = 0; c < gb; ++c) eq[r_at(a, c)] += seq.i(c, a2);
      for (std::size_t e = 0; e < ra; ++e) eq[w_at(e, a2)] -= pa.relations(a, e);
      rows.push_back(std::move(eq));
      rhs.push_back(a == a2 ? 1 : 0);
    }

  DiophantineSolution sol = solve_diophantine(IntMatrix::from_rows(rows, unknowns), rhs);
  if (!sol.solution) return std::nullopt;
  IntMatrix r(ga, gb);
  for (std::size_t a = 0; a < ga; ++a)
    for (std::size_t c = 0; c < gb; ++c) r(a, c) = (*sol.solution)[r_at(a, c)];
  return r;
}

bool is_split(const ShortExactSeq& seq) { return retraction(seq).has_value(); }

ShortExactSeq split_sequence(const FgAbelianGroup& a, const FgAbelianGroup& c) {
  const Presentation pa = presentation(a), pc = presentation(c);
  NormalizedGroup b = normalize({pa.generators + pc.generators, direct_sum(pa.relations, pc.relations)});
  IntMatrix inc = vconcat(IntMatrix::identity(pa.generators), IntMatrix(pc.generators, pa.generators));
  IntMatrix proj = hconcat(IntMatrix(pc.generators, pa.generators), IntMatrix::identity(pc.generators));
  return {a, b.group, c, b.to_new * inc, proj * b.to_old};
}

FgAbelianGroup random_group(Rng& rng, std::size_t max_rank, std::size_t max_torsion) {
  static const long kOrders[] = {2, 3, 4, 6, 8, 9, 12};
  const auto rank = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_rank)));
  const auto count = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_torsion)));
  IntVector diag;
  for (std::size_t i = 0; i < count; ++i) diag.emplace_back(kOrders[rng.uniform(0, 6)]);
  Presentation p{rank + count, IntMatrix(rank + count, count)};
  for (std::size_t j = 0; j < count; ++j) p.relations(j, j) = diag[j];
  return normalize(p).group;
}

ShortExactSeq random_short_exact(Rng& rng) {
  if (rng.chance(1, 2)) return split_sequence(random_group(rng), random_group(rng));

  FgAbelianGroup b = random_group(rng);
  const std::size_t gb = b.generator_count();
  if (gb == 0) return split_sequence(random_group(rng), random_group(rng));
  const Presentation pb = presentation(b);
  const auto s = static_cast<std::size_t>(rng.uniform(1, 2));
  IntMatrix gens = random_matrix(rng, gb, s, 3);

  // A = <gens> = Z^s / {y : gens y in im R_B}
  IntMatrix k = kernel_basis(hconcat(gens, pb.relations));
  NormalizedGroup a = normalize({s, k.block(0, 0, s, k.cols())});
  NormalizedGroup c = normalize({gb, hconcat(pb.relations, gens)});
  return {a.group, b, c.group, gens * a.to_old, c.to_new};
}

}  // namespace ghostlength
