#include "ghostlength/ghost_resolution.hpp"

#include <utility>

namespace ghostlength {

int pdim_fg_abelian(const FgAbelianGroup& g) { return g.torsion.empty() ? 0 : 1; }

bool is_ghost_projective(const GradedComplex& x) {
  DegreeRange r = support(x);
  for (int n = r.lo; n <= r.hi; ++n)
    if (!homology(x, n).group().is_free()) return false;
  return true;
}

GhostCover ghost_cover(const GradedComplex& x) {
  DegreeRange r = support(x);
  if (r.empty()) {
    GradedComplex zero;
    ChainMap p = ChainMap::zero(zero, x);
    return GhostCover{zero, p, cone(p), {}};
  }

  std::vector<IntMatrix> boundaries;  // B_n basis, n in [lo, hi]
  std::vector<IntMatrix> generators;  // H_n generator cycles
  for (int n = r.lo; n <= r.hi; ++n) {
    HomologyPresentation h = homology(x, n);
    boundaries.push_back(h.sub_basis());
    generators.push_back(h.generator_representatives());
  }
  auto at = [&](const std::vector<IntMatrix>& v, int n) -> IntMatrix {
    if (n < r.lo || n > r.hi) return IntMatrix(x.rank(n), 0);
    return v[static_cast<std::size_t>(n - r.lo)];
  };

  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> comps;
  std::vector<std::array<std::size_t, 3>> blocks;
  for (int n = r.lo; n <= r.hi; ++n) {
    IntMatrix b = at(boundaries, n);
    IntMatrix g = at(generators, n);
    IntMatrix b_prev = at(boundaries, n - 1);
    // lifts of the B_{n-1} basis through d_n
    std::optional<IntMatrix> lifts = solve_matrix(x.differential(n), b_prev);
    if (!lifts) throw InvariantError("ghost_cover: boundary basis does not lift", n);
    blocks.push_back({b.cols(), g.cols(), b_prev.cols()});
    ranks.push_back(b.cols() + g.cols() + b_prev.cols());
    comps.push_back(hconcat(hconcat(b, g), *lifts));
  }

  std::vector<IntMatrix> diffs;
  for (int n = r.lo + 1; n <= r.hi; ++n) {
    const auto& here = blocks[static_cast<std::size_t>(n - r.lo)];
    const std::size_t rows = ranks[static_cast<std::size_t>(n - 1 - r.lo)];
    const std::size_t cols = ranks[static_cast<std::size_t>(n - r.lo)];
    // P^{B_{n-1}} in degree n maps identically onto P^{B_{n-1}} in degree n-1
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < here[2]; ++i) d(i, here[0] + here[1] + i) = 1;
    diffs.push_back(std::move(d));
  }
  GradedComplex p(r.lo, std::move(ranks), std::move(diffs));
  ChainMap cover(p, x, r.lo, std::move(comps));
  Cone c = cone(cover);
  return GhostCover{std::move(p), std::move(cover), std::move(c), std::move(blocks)};
}

ChainMap degreewise_kernel(const ChainMap& p) {
  const GradedComplex& src = p.source();
  DegreeRange r = support(src);
  if (r.empty()) return ChainMap::zero(GradedComplex(), src);

  std::vector<IntMatrix> bases;
  std::vector<std::size_t> ranks;
  for (int n = r.lo; n <= r.hi; ++n) {
    bases.push_back(kernel_basis(p.component(n)));
    ranks.push_back(bases.back().cols());
  }
  std::vector<IntMatrix> diffs;
  for (int n = r.lo + 1; n <= r.hi; ++n) {
    const IntMatrix& k_here = bases[static_cast<std::size_t>(n - r.lo)];
    const IntMatrix& k_below = bases[static_cast<std::size_t>(n - 1 - r.lo)];
    std::optional<IntMatrix> d = solve_matrix(k_below, src.differential(n) * k_here);
    if (!d) throw InvariantError("degreewise kernel is not a subcomplex", n);
    diffs.push_back(std::move(*d));
  }
  GradedComplex k(r.lo, std::move(ranks), std::move(diffs));
  return ChainMap(std::move(k), src, r.lo, std::move(bases));
}

AdamsTower adams_tower(const GradedComplex& x, int depth) {
  if (depth < 0) throw std::invalid_argument("adams_tower: depth must be >= 0");
  AdamsTower t;
  t.stages.push_back(x);
  for (int i = 0; i < depth; ++i) {
    GhostCover c = ghost_cover(t.stages.back());
    ChainMap inc = degreewise_kernel(c.cover);
    t.stages.push_back(suspend(inc.source()));
    t.covers.push_back(std::move(c));
    t.kernels.push_back(std::move(inc));
  }
  return t;
}

namespace {

void require_pdim_below(const GradedComplex& x, int k, const std::string& who) {
  DegreeRange r = support(x);
  for (int n = r.lo; n <= r.hi; ++n) {
    FgAbelianGroup b{boundary_basis(x, n).cols(), {}};
    if (pdim_fg_abelian(b) >= k)
      throw PreconditionError(who + ": B_" + std::to_string(n) + " = " + b.to_string() +
                                  " has projective dimension >= " + std::to_string(k),
                              n, b.to_string());
    FgAbelianGroup h = homology(x, n).group();
    if (pdim_fg_abelian(h) >= k)
      throw PreconditionError(who + ": H_" + std::to_string(n) + " = " + h.to_string() +
                                  " has projective dimension " +
                                  std::to_string(pdim_fg_abelian(h)) + ", not below " +
                                  std::to_string(k),
                              n, h.to_string());
  }
}

}  // namespace

LengthCertificate certify_length(const GradedComplex& x, int k) {
  if (k < 1) throw std::invalid_argument("certify_length: k must be >= 1");
  require_pdim_below(x, k, "certify_length");
  LengthCertificate cert;
  cert.k = k;
  cert.tower = adams_tower(x, k - 1);
  for (const auto& s : cert.tower.stages) cert.stage_ranks.emplace_back(s.min_degree(), s.ranks());
  cert.certified = is_ghost_projective(cert.tower.stages.back());
  return cert;
}

KellyVerdict kelly_check(const GradedComplex& x, const std::vector<GradedComplex>& intermediates,
                         const std::vector<ChainMap>& ghosts, int k) {
  if (k < 1) throw std::invalid_argument("kelly_check: k must be >= 1");
  if (ghosts.size() != static_cast<std::size_t>(k) || intermediates.size() != ghosts.size())
    throw PreconditionError("kelly_check: expected " + std::to_string(k) + " maps and targets, got " +
                            std::to_string(ghosts.size()) + " and " +
                            std::to_string(intermediates.size()));
  for (std::size_t i = 0; i < ghosts.size(); ++i) {
    const GradedComplex& expected_source = i == 0 ? x : intermediates[i - 1];
    if (!(ghosts[i].source() == expected_source) || !(ghosts[i].target() == intermediates[i]))
      throw PreconditionError("kelly_check: map " + std::to_string(i) + " does not compose");
    if (!is_ghost(ghosts[i]))
      throw PreconditionError("kelly_check: map " + std::to_string(i) + " is not a ghost");
  }
  require_pdim_below(x, k, "kelly_check");

  KellyVerdict v;
  v.composite = ghosts.front();
  for (std::size_t i = 1; i < ghosts.size(); ++i) v.composite = compose(ghosts[i], v.composite);
  v.witness = null_homotopy(v.composite);
  v.witness_verified = v.witness && verify_null_homotopy(v.composite, *v.witness);
  return v;
}

ChainMap moore_ghost(const Integer& m) {
  GradedComplex moore = GradedComplex::moore(m);
  IntMatrix one(1, 1);
  one(0, 0) = 1;
  return ChainMap(moore, suspend(moore), 1, {one});
}

namespace {

ChainMap sample_ghost(const GradedComplex& x, const GradedComplex& y, Rng& rng,
                      const KellyParams& params) {
  ChainMapLattice lattice(x, y);
  for (int attempt = 0; attempt < params.ghost_attempts && lattice.dimension() > 0; ++attempt) {
    ChainMap f = sample_chain_map(lattice, rng, params.coefficient_bound);
    if (!f.is_zero() && is_ghost(f)) return f;
  }
  return ChainMap::zero(x, y);
}

}  // namespace

KellyTrial run_kelly_trial(std::uint64_t master_seed, std::size_t trial, const KellyParams& params) {
  if (params.k < 1) throw std::invalid_argument("run_kelly_trial: k must be >= 1");
  KellyTrial out;
  out.seed = split_seed(master_seed, trial);
  out.trial = trial;
  Rng rng(out.seed);

  if (trial == 0 && params.k >= 2) {
    ChainMap f = moore_ghost();
    out.complexes.push_back(f.source());
    for (int i = 0; i < params.k; ++i) {
      out.ghosts.push_back(f);
      out.complexes.push_back(f.target());
      f = suspend(f);
    }
  } else {
    GradedComplex x = random_complex(rng, params.complex);
    // k = 1 needs torsion-free homology at the source
    for (int attempt = 0; params.k == 1 && !is_ghost_projective(x); ++attempt)
      x = attempt < 200 ? random_complex(rng, params.complex) : GradedComplex::concentrated(0, 1);
    // for k >= 2 prefer sources with torsion, where essential ghosts exist
    for (int attempt = 0; params.k >= 2 && attempt < 16 && is_ghost_projective(x); ++attempt)
      x = random_complex(rng, params.complex);
    out.complexes.push_back(x);
    for (int i = 0; i < params.k; ++i) {
      const GradedComplex& src = out.complexes.back();
      if (rng.chance(1, 2)) {
        // the universal ghost out of src, essential unless src is ghost projective
        GhostCover c = ghost_cover(src);
        out.ghosts.push_back(c.ghost());
        out.complexes.push_back(c.cofibre.complex);
      } else {
        GradedComplex y = random_complex(rng, params.complex);
        out.ghosts.push_back(sample_ghost(src, y, rng, params));
        out.complexes.push_back(std::move(y));
      }
    }
  }

  for (const auto& g : out.ghosts)
    if (!null_homotopy(g)) ++out.essential_ghosts;
  std::vector<GradedComplex> targets(out.complexes.begin() + 1, out.complexes.end());
  out.verdict = kelly_check(out.complexes.front(), targets, out.ghosts, params.k);
  return out;
}

}  // namespace ghostlength
