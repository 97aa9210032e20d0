#include <doctest.h>

#include "ghostlength/ghost_resolution.hpp"

using namespace ghostlength;

namespace {

void check_cover(const GradedComplex& x) {
  GhostCover c = ghost_cover(x);
  CHECK(is_ghost_projective(c.projective));
  CHECK(c.cover.target() == x);
  DegreeRange r = support(x);
  for (int n = r.lo; n <= r.hi; ++n) {
    CHECK(induced_homology_map(c.cover, n).is_surjective());
    // degreewise surjective, so the kernel is a subcomplex
    CHECK(smith_normal_form(c.cover.component(n)).rank == x.rank(n));
  }
  CHECK(is_ghost(c.ghost()));
}

}  // namespace

TEST_CASE("projective dimension and ghost projectivity") {
  CHECK(pdim_fg_abelian(FgAbelianGroup{3, {}}) == 0);
  CHECK(pdim_fg_abelian(FgAbelianGroup{0, {2}}) == 1);
  CHECK(is_ghost_projective(GradedComplex(0, {2, 1}, {IntMatrix(2, 1)})));
  CHECK_FALSE(is_ghost_projective(GradedComplex::moore(2)));
  CHECK(is_ghost_projective(GradedComplex::moore(1)));
  CHECK(is_ghost_projective(GradedComplex()));
}

TEST_CASE("ghost-projective covers") {
  GhostCover zero = ghost_cover(GradedComplex());
  CHECK(zero.projective.is_zero());
  CHECK(zero.cofibre.complex.is_zero());

  check_cover(GradedComplex::moore(2));
  check_cover(GradedComplex::moore(6, -1));
  check_cover(GradedComplex(0, {2, 1}, {IntMatrix(2, 1)}));

  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) check_cover(random_complex(rng));
}

TEST_CASE("Adams towers") {
  AdamsTower t = adams_tower(GradedComplex::moore(2), 2);
  REQUIRE(t.stages.size() == 3);
  CHECK_FALSE(is_ghost_projective(t.stages[0]));
  CHECK(is_ghost_projective(t.stages[1]));
  CHECK(homology(t.stages[1], 1).group() == FgAbelianGroup{1, {}});

  AdamsTower z = adams_tower(GradedComplex(), 3);
  for (const auto& s : z.stages) CHECK(s.is_zero());

  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    GradedComplex x = random_complex(rng);
    AdamsTower a = adams_tower(x, 1);
    CHECK(is_ghost_projective(a.stages[1]));
    // kernel inclusion composed with the cover is zero
    CHECK(compose(a.covers[0].cover, a.kernels[0]).is_zero());
  }
  CHECK_THROWS(adams_tower(GradedComplex(), -1));
}

TEST_CASE("length certificates") {
  GradedComplex free(0, {1}, {});
  CHECK(certify_length(free, 1).certified);
  CHECK(certify_length(GradedComplex::moore(2), 2).certified);
  try {
    certify_length(GradedComplex::moore(2, 3), 1);
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    REQUIRE(e.degree());
    CHECK(*e.degree() == 3);
    CHECK(e.group() == "Z/2");
  }
}

TEST_CASE("composites of ghosts") {
  ChainMap f = moore_ghost();
  CHECK(is_ghost(f));
  CHECK_FALSE(null_homotopy(f));
  KellyVerdict v = kelly_check(f.source(), {f.target(), suspend(f.target())}, {f, suspend(f)}, 2);
  CHECK(v.null_homotopic());
  CHECK_THROWS_AS(kelly_check(f.source(), {f.target()}, {f}, 1), PreconditionError);
  CHECK_THROWS_AS(kelly_check(f.source(), {f.target()}, {f, f}, 2), PreconditionError);
  GradedComplex z = GradedComplex::concentrated(0, 1);
  CHECK_THROWS_AS(kelly_check(z, {z}, {ChainMap::identity(z)}, 1), PreconditionError);
}

TEST_CASE("seeded Kelly trials") {
  KellyParams p;
  KellyTrial t0 = run_kelly_trial(7, 0, p);
  CHECK(t0.essential_ghosts == 2);
  CHECK(t0.verdict.null_homotopic());

  std::size_t essential = 0;
  for (std::size_t i = 1; i < 40; ++i) {
    KellyTrial t = run_kelly_trial(7, i, p);
    CHECK(t.verdict.null_homotopic());
    essential += t.essential_ghosts > 0;
    KellyTrial again = run_kelly_trial(7, i, p);
    CHECK(again.complexes == t.complexes);
  }
  CHECK(essential > 10);

  p.k = 1;
  for (std::size_t i = 0; i < 20; ++i) CHECK(run_kelly_trial(3, i, p).verdict.null_homotopic());
}
