// One line per acceptance criterion; exits non-zero if any criterion fails.

#include <sys/resource.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ghostlength/chain_bounds.hpp"
#include "ghostlength/cli.hpp"
#include "ghostlength/ghost_resolution.hpp"
#include "ghostlength/purity.hpp"
#include "ghostlength/smith.hpp"

using namespace ghostlength;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string ms(double v) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(v < 10 ? 3 : 0);
  s << v << " ms";
  return s.str();
}

long peak_rss_mb() {
  rusage u{};
  getrusage(RUSAGE_SELF, &u);
  return u.ru_maxrss / 1024;
}

template <typename T>
std::string join(const std::vector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

Verdict stl_table() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  cli::Outcome o = cli::rpn_table(-1, 20);
  const double t = elapsed_ms(start);
  const auto got = o.doc.results["stl"].get<std::vector<std::int64_t>>();
  const std::vector<std::int64_t> want{0, 1, 1, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 5, 5, 5, 5, 6, 6, 6, 6, 6};
  v.require(got == want, "got " + join(got));
  v.require(t < 10.0, "runtime " + ms(t));
  v.note(join(got) + " in " + ms(t));
  return v;
}

Verdict stl_two_to_twenty() {
  Verdict v;
  const std::int64_t n = std::int64_t{1} << 20;
  const auto start = std::chrono::steady_clock::now();
  const std::int64_t s = stl(n);
  const double t = elapsed_ms(start);
  const std::int64_t u = upper_bound(n);
  v.require(s == 136, "stl(2^20) = " + std::to_string(s) + ", expected 136");
  v.require(u == 262146, "upper_bound(2^20) = " + std::to_string(u));
  v.require(t < 5000.0, "runtime " + ms(t));
  v.require(peak_rss_mb() < 1024, "peak memory " + std::to_string(peak_rss_mb()) + " MB");
  v.note("stl = " + std::to_string(s) + ", upper = " + std::to_string(u) + " in " + ms(t) + ", peak " +
         std::to_string(peak_rss_mb()) + " MB");
  return v;
}

Verdict weighted_values() {
  Verdict v;
  const std::vector<std::pair<std::int64_t, std::int64_t>> cases{
      {56, 11}, {127, 17}, {128, 19}, {std::int64_t{1} << 20, 264}};
  std::string seen;
  for (auto [n, want] : cases) {
    const std::int64_t got = weighted_bound(n);
    v.require(got == want, "weighted(" + std::to_string(n) + ") = " + std::to_string(got) +
                               ", expected " + std::to_string(want));
    seen += (seen.empty() ? "" : ", ") + std::to_string(n) + "->" + std::to_string(got);
  }
  // the exact value is frozen so that any change is noticed
  const std::int64_t m = monotone_bound(127, 256);
  v.require(m >= 18, "monotone(127, 256) = " + std::to_string(m) + " < 18");
  v.require(m == 18, "monotone(127, 256) changed from 18 to " + std::to_string(m));
  v.note("weighted " + seen + "; monotone(127, 256) = " + std::to_string(m));
  return v;
}

Verdict small_n_formula() {
  Verdict v;
  for (std::int64_t n = 2; n <= 19; ++n)
    v.require(stl(n) == n / 4 + 2, "stl(" + std::to_string(n) + ") = " + std::to_string(stl(n)));
  v.require(stl(20) == 6, "stl(20) = " + std::to_string(stl(20)));
  v.require(upper_bound(20) == 7, "upper_bound(20) = " + std::to_string(upper_bound(20)));
  v.note("stl(20) = " + std::to_string(stl(20)) + " < " + std::to_string(upper_bound(20)));
  return v;
}

Verdict vakil() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  VakilReport r = vakil_runs(std::int64_t{1} << 16);
  const double t = elapsed_ms(start);
  v.require(r.ok(), "pattern broken");
  v.require(r.completed_runs() == vakil_pattern(r.completed), "completed runs differ from the pattern");
  v.require(r.completed > 0 && r.runs.front() == 1, "initial run is not a single 0");
  v.require(t < 1000.0, "runtime " + ms(t));
  v.note(std::to_string(r.completed) + " completed runs in " + ms(t));
  return v;
}

Verdict oracle() {
  Verdict v;
  for (std::int64_t n = 0; n <= kOracleMaxN; ++n) {
    v.require(1 + oracle_longest_path(n, false) == stl(n), "unweighted differs at n = " + std::to_string(n));
    v.require(1 + oracle_longest_path(n, true) == weighted_bound(n), "weighted differs at n = " + std::to_string(n));
  }
  v.note("n = 0.." + std::to_string(kOracleMaxN));
  return v;
}

Verdict smith_suite() {
  Verdict v;
  Rng rng(20240611);
  int failures = 0;
  const auto start = std::chrono::steady_clock::now();
  for (int trial = 0; trial < 1000; ++trial) {
    const auto r = static_cast<std::size_t>(rng.uniform(1, 6));
    const auto c = static_cast<std::size_t>(rng.uniform(1, 6));
    IntMatrix a = random_matrix(rng, r, c, 9);
    SmithDecomposition d = smith_normal_form(a);
    bool ok = d.U * d.S * d.V == a && abs(determinant(d.U)) == 1 && abs(determinant(d.V)) == 1;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j && d.S(i, j) != 0) ok = false;
    for (std::size_t i = 0; i < d.rank; ++i) {
      if (d.S(i, i) <= 0) ok = false;
      if (i > 0 && d.S(i, i) % d.S(i - 1, i - 1) != 0) ok = false;
    }
    for (std::size_t i = d.rank; i < std::min(r, c); ++i)
      if (d.S(i, i) != 0) ok = false;
    failures += !ok;
  }
  const double t = elapsed_ms(start);
  v.require(failures == 0, std::to_string(failures) + " failures");
  v.require(t < 5000.0, "runtime " + ms(t));
  v.note("1000 matrices, " + std::to_string(failures) + " failures in " + ms(t));
  return v;
}

Verdict moore_triptych() {
  Verdict v;
  ChainMap f = moore_ghost();
  v.require(is_ghost(f), "M -> Sigma M is not detected as a ghost");
  v.require(!null_homotopy(f), "M -> Sigma M was found null-homotopic");
  ChainMap g = compose(suspend(f), f);
  auto h = null_homotopy(g);
  v.require(h.has_value(), "M -> Sigma^2 M has no null-homotopy");
  v.require(h && verify_null_homotopy(g, *h), "witness does not verify");
  if (v.pass) v.note("ghost, not null-homotopic; composite null-homotopic with verified witness");
  return v;
}

Verdict kelly() {
  Verdict v;
  KellyParams params;
  params.k = 2;
  std::size_t passed = 0, essential = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t trial = 0; trial < 200; ++trial) {
    KellyTrial t = run_kelly_trial(7, trial, params);
    const bool ok = t.verdict.witness && verify_null_homotopy(t.verdict.composite, *t.verdict.witness);
    passed += ok;
    essential += t.essential_ghosts > 0;
  }
  const double t = elapsed_ms(start);
  v.require(passed == 200, std::to_string(passed) + "/200 null-homotopic");
  v.require(t < 60000.0, "runtime " + ms(t));
  v.note(std::to_string(passed) + "/200 null-homotopic, " + std::to_string(essential) +
         " with an essential ghost, " + ms(t));
  return v;
}

Verdict ghost_covers() {
  Verdict v;
  Rng rng(1010);
  int bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    GradedComplex x = random_complex(rng);
    GhostCover c = ghost_cover(x);
    bool ok = is_ghost_projective(c.projective) && is_ghost(c.ghost());
    DegreeRange r = support(x);
    for (int n = r.lo; n <= r.hi; ++n) ok = ok && induced_homology_map(c.cover, n).is_surjective();
    ok = ok && is_ghost_projective(adams_tower(x, 1).stages[1]);
    bad += !ok;
  }
  v.require(bad == 0, std::to_string(bad) + "/100 complexes fail");
  v.note("100 complexes");
  return v;
}

Verdict purity() {
  Verdict v;
  Rng rng(2718);
  int disagree = 0, split = 0;
  for (int trial = 0; trial < 200; ++trial) {
    ShortExactSeq s = random_short_exact(rng);
    const bool sp = is_split(s);
    disagree += is_pure_exact(s) != sp;
    split += sp;
  }
  v.require(disagree == 0, std::to_string(disagree) + "/200 disagree");
  ShortExactSeq two{FgAbelianGroup{1, {}}, FgAbelianGroup{1, {}}, FgAbelianGroup{0, {2}},
                    IntMatrix::from_rows({{2}}), IntMatrix::from_rows({{1}})};
  v.require(!is_pure_exact(two), "0 -> Z -2-> Z -> Z/2 -> 0 reported pure");
  v.require(!is_split(two), "0 -> Z -2-> Z -> Z/2 -> 0 reported split");
  v.note("200 sequences (" + std::to_string(split) + " split), all agree");
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"Stl table for n = -1..20", stl_table},
      {"Stl(RP^{2^20}) and the cell-count upper bound", stl_two_to_twenty},
      {"weighted and monotone bounds", weighted_values},
      {"Stl(n) = floor(n/4) + 2 for 2 <= n <= 19, Stl(20) = 6", small_n_formula},
      {"run lengths up to n = 2^16", vakil},
      {"longest-path DP equals exhaustive search for n <= 24", oracle},
      {"Smith normal form on 1000 random matrices", smith_suite},
      {"Moore complex ghost, its square, null-homotopies", moore_triptych},
      {"200 seeded composites of two ghosts are null-homotopic", kelly},
      {"ghost covers and first Adams stage on 100 complexes", ghost_covers},
      {"pure exact equals split on 200 sequences", purity},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    failed += !v.pass;
    std::printf("%s %2zu  %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                v.detail.c_str());
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
