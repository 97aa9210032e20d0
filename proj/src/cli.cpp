#include "ghostlength/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "ghostlength/complex.hpp"
#include "ghostlength/ghost_resolution.hpp"
#include "ghostlength/io.hpp"
#include "ghostlength/purity.hpp"

namespace ghostlength::cli {

using io::json;

namespace {

// Bad or inconsistent input files; reported with the file name, exit 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename F>
auto load(const std::string& file, F parse) {
  try {
    return parse(io::read_document(file));
  } catch (const io::ParseError& e) {
    throw InputError(file + ": " + e.what());
  } catch (const InvariantError& e) {
    throw InputError(file + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

std::vector<std::string> int_row(const std::string& label, const std::vector<std::int64_t>& v) {
  std::vector<std::string> row{label};
  for (auto x : v) row.push_back(std::to_string(x));
  return row;
}

json homology_json(const GradedComplex& x) {
  json out = json::array();
  DegreeRange r = support(x);
  for (int n = r.lo; n <= r.hi; ++n) {
    FgAbelianGroup g = homology(x, n).group();
    json entry = io::to_json(g);
    entry["degree"] = n;
    entry["group"] = g.to_string();
    out.push_back(std::move(entry));
  }
  return out;
}

TextTable homology_table(const json& h, const std::string& title) {
  TextTable t{title, {{"n", "H_n"}}, true};
  for (const auto& e : h)
    t.rows.push_back({std::to_string(e["degree"].get<int>()), e["group"].get<std::string>()});
  if (h.empty()) t.rows.push_back({"*", "0"});
  return t;
}

}  // namespace

Outcome rpn_table(std::int64_t from, std::int64_t to, std::int64_t budget) {
  if (from < -1) throw UsageError("--from must be >= -1");
  if (to < from) throw UsageError("--to must be >= --from");
  std::vector<std::int64_t> all = stl_sequence(to, budget);  // stl(-1..to)
  std::vector<std::int64_t> ns, values;
  for (std::int64_t n = from; n <= to; ++n) {
    ns.push_back(n);
    values.push_back(all[static_cast<std::size_t>(n + 1)]);
  }
  Outcome o;
  o.doc.command = "rpn table";
  o.doc.parameters = {{"from", from}, {"to", to}, {"budget", budget}};
  o.doc.results = {{"n", ns}, {"stl", values}};
  o.doc.tables = wrap_columns({"", {int_row("n", ns), int_row("Stl", values)}, true}, 22);
  return o;
}

Outcome rpn_bounds(std::int64_t n, std::optional<std::int64_t> horizon, std::int64_t budget) {
  if (n < -1) throw UsageError("N must be >= -1");
  if (horizon && *horizon < n) throw UsageError("--horizon must be >= N");
  BoundsReport b = bounds_report(n, horizon, budget);
  Outcome o;
  o.doc.command = "rpn bounds";
  o.doc.parameters = {{"n", n}, {"horizon", b.horizon}, {"budget", budget}};
  o.doc.results = {{"n", b.n},
                   {"steenrod", b.steenrod},
                   {"weighted", b.weighted},
                   {"monotone", b.monotone},
                   {"horizon", b.horizon},
                   {"upper", b.upper ? json(*b.upper) : json(nullptr)}};
  TextTable t{"", {}, false};
  t.rows.push_back({"n", std::to_string(b.n)});
  t.rows.push_back({"steenrod", std::to_string(b.steenrod)});
  t.rows.push_back({"weighted", std::to_string(b.weighted)});
  t.rows.push_back({"monotone", std::to_string(b.monotone)});
  t.rows.push_back({"upper", b.upper ? std::to_string(*b.upper) : "-"});
  o.doc.tables.push_back(std::move(t));
  return o;
}

Outcome rpn_vakil(std::int64_t max_n, std::int64_t budget) {
  if (max_n < 0) throw UsageError("--max-n must be >= 0");
  VakilReport v = vakil_runs(max_n, budget);
  Outcome o;
  o.doc.command = "rpn vakil";
  o.doc.parameters = {{"max_n", max_n}, {"budget", budget}};
  json failure = nullptr;
  if (v.failure)
    failure = {{"run_index", v.failure->run_index},
               {"value", v.failure->value},
               {"expected", v.failure->expected},
               {"actual", v.failure->actual}};
  o.doc.results = {{"runs", v.runs},
                   {"completed", v.completed},
                   {"expected", vakil_pattern(v.completed)},
                   {"ok", v.ok()},
                   {"failure", failure}};
  std::vector<std::int64_t> idx;
  for (std::size_t i = 0; i < v.runs.size(); ++i) idx.push_back(static_cast<std::int64_t>(i));
  o.doc.tables = wrap_columns(
      {"", {int_row("Stl", idx), int_row("run", v.runs), int_row("expected", vakil_pattern(v.runs.size()))}, true},
      16);
  if (v.ok()) {
    o.doc.notes.push_back(std::to_string(v.completed) + " completed runs match the pattern");
  } else {
    o.doc.notes.push_back("pattern broken at run " + std::to_string(v.failure->run_index) +
                          ": expected " + std::to_string(v.failure->expected) + ", got " +
                          std::to_string(v.failure->actual));
    o.exit_code = kExitFalsified;
  }
  return o;
}

Outcome rpn_fundamental(std::int64_t max_n, std::int64_t budget) {
  if (max_n < 1) throw UsageError("--max-n must be >= 1");
  FundamentalSequence f = fundamental_sequence(max_n, budget);
  Outcome o;
  o.doc.command = "rpn fundamental";
  o.doc.parameters = {{"max_n", max_n}, {"budget", budget}};
  o.doc.results = {{"values", f.values}, {"last_step", f.last_step}};
  std::vector<std::int64_t> m, step;
  for (std::int64_t i = 1; i <= max_n; ++i) m.push_back(i);
  for (int k : f.last_step) step.push_back(k);
  o.doc.tables = wrap_columns({"", {int_row("m", m), int_row("value", f.values), int_row("k", step)}, true}, 20);
  o.doc.notes.push_back("k = -1 marks cells hit by no operation");
  return o;
}

Outcome complex_homology(const std::string& file) {
  GradedComplex x = load(file, [](const json& j) { return io::complex_from_json(j); });
  Outcome o;
  o.doc.command = "complex homology";
  o.doc.parameters = {{"file", file}};
  json h = homology_json(x);
  o.doc.results = {{"min_degree", x.min_degree()}, {"ranks", x.ranks()}, {"homology", h}};
  o.doc.tables.push_back(homology_table(h, ""));
  if (h.empty()) o.doc.notes.push_back("zero complex: all homology groups are zero");
  return o;
}

Outcome complex_ghost_check(const std::string& file) {
  ChainMap f = load(file, [](const json& j) { return io::chain_map_from_json(j); });
  Outcome o;
  o.doc.command = "complex ghost-check";
  o.doc.parameters = {{"file", file}};
  json induced = json::array();
  TextTable t{"", {{"n", "H_n(X)", "H_n(Y)", "H_n(f)"}}, true};
  DegreeRange r = support_union(f.source(), f.target());
  for (int n = r.lo; n <= r.hi; ++n) {
    InducedMap m = induced_homology_map(f, n);
    json orders = json::array();
    for (const auto& d : m.target_orders) orders.push_back(io::to_json(d));
    induced.push_back({{"degree", n}, {"matrix", io::to_json(m.matrix)}, {"target_orders", orders},
                       {"zero", m.is_zero()}});
    t.rows.push_back({std::to_string(n), homology(f.source(), n).group().to_string(),
                      homology(f.target(), n).group().to_string(), m.is_zero() ? "0" : "nonzero"});
  }
  std::optional<Homotopy> h = null_homotopy(f);
  const bool ghost = is_ghost(f);
  o.doc.results = {{"ghost", ghost},
                   {"induced", induced},
                   {"null_homotopic", h.has_value()},
                   {"homotopy", h ? io::to_json(*h) : json(nullptr)}};
  o.doc.tables.push_back(std::move(t));
  o.doc.notes.push_back(std::string(ghost ? "ghost" : "not a ghost") + "; " +
                        (h ? "null-homotopic" : "not null-homotopic"));
  return o;
}

Outcome complex_resolve(const std::string& file, int depth) {
  if (depth < 0) throw UsageError("--depth must be >= 0");
  GradedComplex x = load(file, [](const json& j) { return io::complex_from_json(j); });
  AdamsTower tower = adams_tower(x, depth);
  Outcome o;
  o.doc.command = "complex resolve";
  o.doc.parameters = {{"file", file}, {"depth", depth}};
  json stages = json::array();
  std::optional<int> bound;
  for (std::size_t i = 0; i < tower.stages.size(); ++i) {
    const GradedComplex& s = tower.stages[i];
    const bool gp = is_ghost_projective(s);
    if (gp && !bound) bound = static_cast<int>(i) + 1;
    json h = homology_json(s);
    stages.push_back({{"stage", i}, {"min_degree", s.min_degree()}, {"ranks", s.ranks()},
                      {"ghost_projective", gp}, {"homology", h}});
    o.doc.tables.push_back(homology_table(
        h, "X^" + std::to_string(i) + (gp ? " (ghost projective)" : "")));
  }
  json covers = json::array();
  for (const auto& c : tower.covers)
    covers.push_back({{"min_degree", c.projective.min_degree()}, {"ranks", c.projective.ranks()}});
  o.doc.results = {{"stages", stages},
                   {"covers", covers},
                   {"length_bound", bound ? json(*bound) : json(nullptr)}};
  if (bound)
    o.doc.notes.push_back("ghost length <= " + std::to_string(*bound) + " (stage " +
                          std::to_string(*bound - 1) + " is ghost projective)");
  else
    o.doc.notes.push_back("no stage up to depth " + std::to_string(depth) + " is ghost projective");
  return o;
}

namespace {

struct TrialSummary {
  std::uint64_t seed = 0;
  std::size_t essential = 0;
  bool null_homotopic = false;
  std::optional<KellyTrial> failed;  // kept only for counterexamples
};

void write_bundle(const std::string& path, const KellyOptions& opt, const KellyTrial& t) {
  json complexes = json::array(), ghosts = json::array();
  for (const auto& c : t.complexes) complexes.push_back(io::to_json(c));
  for (const auto& g : t.ghosts) ghosts.push_back(io::to_json(g));
  json bundle = {{"schema", kReportSchema},
                 {"kind", "kelly-counterexample"},
                 {"master_seed", io::seed_to_json(opt.seed)},
                 {"trial", t.trial},
                 {"seed", io::seed_to_json(t.seed)},
                 {"k", opt.k},
                 {"complexes", complexes},
                 {"ghosts", ghosts},
                 {"composite", io::to_json(t.verdict.composite)}};
  std::ofstream out(path);
  out << bundle.dump(2) << '\n';
  if (!out) throw std::runtime_error("cannot write " + path);
}

}  // namespace

Outcome complex_kelly(const KellyOptions& opt) {
  if (opt.k < 1) throw UsageError("--k must be >= 1");
  if (opt.trials == 0) throw UsageError("--trials must be >= 1");
  KellyParams params;
  params.k = opt.k;

  std::vector<TrialSummary> summaries(opt.trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < opt.trials; i = next++) {
      KellyTrial t = run_kelly_trial(opt.seed, i, params);
      TrialSummary& s = summaries[i];
      s.seed = t.seed;
      s.essential = t.essential_ghosts;
      s.null_homotopic = t.verdict.null_homotopic();
      if (!s.null_homotopic) s.failed = std::move(t);
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(opt.trials, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  Outcome o;
  o.doc.command = "complex kelly";
  o.doc.parameters = {{"seed", io::seed_to_json(opt.seed)}, {"trials", opt.trials}, {"k", opt.k}};
  json per_trial = json::array(), failures = json::array();
  std::size_t passed = 0, with_essential = 0, essential_total = 0;
  for (std::size_t i = 0; i < summaries.size(); ++i) {
    const auto& s = summaries[i];
    passed += s.null_homotopic;
    with_essential += s.essential > 0;
    essential_total += s.essential;
    per_trial.push_back({{"trial", i}, {"seed", io::seed_to_json(s.seed)},
                         {"essential_ghosts", s.essential}, {"null_homotopic", s.null_homotopic}});
    if (!s.null_homotopic) failures.push_back(i);
  }
  o.doc.results = {{"null_homotopic", passed},
                   {"trials", opt.trials},
                   {"trials_with_essential_ghosts", with_essential},
                   {"essential_ghosts", essential_total},
                   {"failures", failures},
                   {"per_trial", per_trial}};
  TextTable t{"", {}, false, false};
  t.rows.push_back({"null-homotopic composites", std::to_string(passed) + "/" + std::to_string(opt.trials)});
  t.rows.push_back({"trials with an essential ghost", std::to_string(with_essential)});
  t.rows.push_back({"essential ghosts", std::to_string(essential_total)});
  o.doc.tables.push_back(std::move(t));
  if (!failures.empty()) {
    const auto first = failures.front().get<std::size_t>();
    write_bundle(opt.bundle, opt, *summaries[first].failed);
    o.doc.results["bundle"] = opt.bundle;
    o.doc.notes.push_back("composite of ghosts is essential in trial " + std::to_string(first) +
                          "; counterexample written to " + opt.bundle);
    o.exit_code = kExitFalsified;
  }
  return o;
}

Outcome complex_pure_check(const std::string& file) {
  ShortExactSeq seq = load(file, [](const json& j) {
    ShortExactSeq s = io::sequence_from_json(j);
    validate(s);
    return s;
  });
  PurityResult pure = pure_exactness(seq);
  std::optional<IntMatrix> r = retraction(seq);
  json family = json::array();
  for (const auto& d : purity_test_family(seq)) family.push_back(io::to_json(d));
  Outcome o;
  o.doc.command = "complex pure-check";
  o.doc.parameters = {{"file", file}};
  o.doc.results = {{"A", seq.a.to_string()},
                   {"B", seq.b.to_string()},
                   {"C", seq.c.to_string()},
                   {"pure", pure.pure},
                   {"failing_modulus", pure.failing_modulus ? io::to_json(*pure.failing_modulus) : json(nullptr)},
                   {"split", r.has_value()},
                   {"retraction", r ? io::to_json(*r) : json(nullptr)},
                   {"test_family", family}};
  TextTable t{"", {}, false, false};
  t.rows.push_back({"sequence", "0 -> " + seq.a.to_string() + " -> " + seq.b.to_string() + " -> " +
                                    seq.c.to_string() + " -> 0"});
  t.rows.push_back({"pure", pure.pure ? "yes" : "no (fails after tensoring with Z/" +
                                                    pure.failing_modulus->get_str() + ")"});
  t.rows.push_back({"split", r ? "yes" : "no"});
  o.doc.tables.push_back(std::move(t));
  if (pure.pure != r.has_value()) {
    o.doc.notes.push_back("tensor criterion and split criterion disagree");
    o.exit_code = kExitFalsified;
  }
  return o;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ghost-length bounds for real projective spaces and chain complexes over Z",
               "ghostlength"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  std::int64_t budget = kDefaultCellBudget;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--budget", budget, "Maximum number of cells for RP^n computations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::function<Outcome()> action;

  auto* rpn = app.add_subcommand("rpn", "Steenrod length bounds for RP^n");
  rpn->require_subcommand(1);
  std::int64_t from = -1, to = 20, n = 0, max_n = 0, horizon = 0;
  auto* table = rpn->add_subcommand("table", "Stl(RP^n) for a range of n");
  table->add_option("--from", from)->capture_default_str();
  table->add_option("--to", to)->capture_default_str();
  table->callback([&] { action = [&] { return rpn_table(from, to, budget); }; });

  auto* bounds = rpn->add_subcommand("bounds", "All bounds for one n");
  bounds->add_option("N", n)->required();
  auto* horizon_opt = bounds->add_option("--horizon", horizon, "Monotone-bound horizon (default 2N + 64)");
  bounds->callback([&] {
    action = [&] {
      return rpn_bounds(n, horizon_opt->count() ? std::optional(horizon) : std::nullopt, budget);
    };
  });

  auto* vakil = rpn->add_subcommand("vakil", "Check the run lengths of Stl(RP^n)");
  vakil->add_option("--max-n", max_n)->required();
  vakil->callback([&] { action = [&] { return rpn_vakil(max_n, budget); }; });

  auto* fundamental = rpn->add_subcommand("fundamental", "The per-cell chain length sequence");
  fundamental->add_option("--max-n", max_n)->required();
  fundamental->callback([&] { action = [&] { return rpn_fundamental(max_n, budget); }; });

  auto* cx = app.add_subcommand("complex", "Bounded free chain complexes over Z");
  cx->require_subcommand(1);
  std::string file;
  int depth = 1;
  auto* hom = cx->add_subcommand("homology", "Homology of a complex file");
  hom->add_option("FILE", file)->required();
  hom->callback([&] { action = [&] { return complex_homology(file); }; });

  auto* ghost = cx->add_subcommand("ghost-check", "Induced homology maps and null-homotopy of a chain map");
  ghost->add_option("MAPFILE", file)->required();
  ghost->callback([&] { action = [&] { return complex_ghost_check(file); }; });

  auto* resolve = cx->add_subcommand("resolve", "Adams tower of ghost-projective covers");
  resolve->add_option("FILE", file)->required();
  resolve->add_option("--depth", depth)->capture_default_str();
  resolve->callback([&] { action = [&] { return complex_resolve(file, depth); }; });

  KellyOptions kopt;
  auto* kelly = cx->add_subcommand("kelly", "Random trials: composites of k ghosts are null-homotopic");
  kelly->add_option("--seed", kopt.seed)->required();
  kelly->add_option("--trials", kopt.trials)->capture_default_str();
  kelly->add_option("--k", kopt.k)->capture_default_str();
  kelly->add_option("--bundle", kopt.bundle, "Counterexample output path")->capture_default_str();
  kelly->callback([&] { action = [&] { return complex_kelly(kopt); }; });

  auto* pure = cx->add_subcommand("pure-check", "Pure exactness of a short exact sequence file");
  pure->add_option("SEQFILE", file)->required();
  pure->callback([&] { action = [&] { return complex_pure_check(file); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ghostlength: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = action();
    o.doc.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit_report(o.doc, format == "json" ? ReportFormat::json : ReportFormat::text, out);
    return o.exit_code;
  } catch (const CapacityError& e) {
    err << "ghostlength: " << e.what() << " (raise --budget to allow more cells)\n";
  } catch (const PreconditionError& e) {
    err << "ghostlength: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "ghostlength: " << e.what() << '\n';
  } catch (const InputError& e) {
    err << "ghostlength: " << e.what() << '\n';
  } catch (const InvariantError& e) {
    err << "ghostlength: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace ghostlength::cli
