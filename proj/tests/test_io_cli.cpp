#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ghostlength/cli.hpp"
#include "ghostlength/ghost_resolution.hpp"
#include "ghostlength/io.hpp"

using namespace ghostlength;
using io::json;

namespace {

std::string temp_file(const std::string& name, const std::string& contents) {
  std::string path = "ghostlength_test_" + name;
  std::ofstream(path) << contents;
  return path;
}

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<const char*> args) {
  args.insert(args.begin(), "ghostlength");
  std::ostringstream out, err;
  int code = cli::run_cli(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("complexes and maps round-trip through json") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    GradedComplex x = random_complex(rng), y = random_complex(rng);
    ChainMap f = sample_chain_map(ChainMapLattice(x, y), rng, 2);
    json j = json::parse(io::to_json(f).dump());
    ChainMap g = io::chain_map_from_json(j);
    CHECK(g.source() == x);
    CHECK(g.target() == y);
    for (int n = -3; n <= 6; ++n) CHECK(g.component(n) == f.component(n));
  }
  ShortExactSeq s = split_sequence(FgAbelianGroup{1, {2}}, FgAbelianGroup{0, {3}});
  ShortExactSeq t = io::sequence_from_json(json::parse(io::to_json(s).dump()));
  CHECK(t.b == s.b);
  CHECK(t.i == s.i);
  CHECK(t.p == s.p);
}

TEST_CASE("big integers are written as strings") {
  Integer big("123456789012345678901234567890");
  CHECK(io::to_json(big).is_string());
  CHECK(io::to_json(Integer(-5)) == json(-5));
  CHECK(io::integer_from_json(io::to_json(big), "/x") == big);
  CHECK_THROWS_AS(io::integer_from_json(json("12a"), "/x"), io::ParseError);
}

TEST_CASE("parse errors locate the problem") {
  try {
    io::parse_document("{\"min_degree\": 0, \"ranks\": [1,, 1]}");
    FAIL("expected a syntax error");
  } catch (const io::ParseError& e) {
    REQUIRE(e.offset());
    CHECK(*e.offset() == 30);
  }
  try {
    io::complex_from_json(json::parse(R"({"min_degree": 0, "ranks": [1, 1], "differentials": [[[1, 2]]]})"));
    FAIL("expected a schema error");
  } catch (const io::ParseError& e) {
    CHECK(e.path() == "/differentials/0/0");
    CHECK_FALSE(e.offset());
  }
  try {
    io::complex_from_json(json::parse(R"({"ranks": []})"));
    FAIL("expected a schema error");
  } catch (const io::ParseError& e) {
    CHECK(e.path() == "/min_degree");
  }
  try {
    io::complex_from_json(json::parse(R"({"min_degree": 0, "ranks": [1, 1, 1], "differentials": [[[1]], [[1]]]})"));
    FAIL("expected an invariant error");
  } catch (const InvariantError& e) {
    CHECK(e.degree() == 2);
  }
}

TEST_CASE("report documents") {
  ReportDocument empty;
  empty.command = "noop";
  std::ostringstream out;
  emit_report(empty, ReportFormat::json, out);
  json j = json::parse(out.str());
  CHECK(j["schema"] == "ghostlength/1");
  CHECK(j["results"].empty());

  cli::Outcome o = cli::rpn_table(-1, 20);
  json doc = report_to_json(o.doc);
  CHECK(json::parse(doc.dump()) == doc);
  CHECK(doc["results"]["stl"] == json({0, 1, 1, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 5, 5, 5, 5, 6, 6, 6, 6, 6}));

  std::ostringstream text;
  emit_report(o.doc, ReportFormat::text, text);
  const std::string t = text.str();
  CHECK(t.find("n   |  -1  0  1  2  3  4  5  6  7  8  9  10  11  12  13  14  15  16  17  18  19  20") != std::string::npos);
  CHECK(t.find("Stl |   0  1  1  2  2  3  3  3  3  4  4   4   4   5   5   5   5   6   6   6   6   6") != std::string::npos);

  TextTable wide{"", {{"a", "1", "2", "3"}, {"b", "4", "5", "6"}}, true};
  auto chunks = wrap_columns(wide, 2);
  REQUIRE(chunks.size() == 2);
  CHECK(chunks[1].rows[0] == std::vector<std::string>{"a", "3"});
}

TEST_CASE("rpn commands") {
  Run r = run({"rpn", "table", "--from", "-1", "--to", "20", "--format", "json"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["results"]["n"][0] == -1);
  CHECK(j["results"]["stl"].size() == 22);

  json b = json::parse(run({"--format", "json", "rpn", "bounds", "56"}).out)["results"];
  CHECK(b["steenrod"] == 10);
  CHECK(b["weighted"] == 11);
  CHECK(b["horizon"] == 176);

  json zero = json::parse(run({"--format", "json", "rpn", "bounds", "0"}).out)["results"];
  CHECK(zero["steenrod"] == 1);
  CHECK(zero["weighted"] == 1);
  CHECK(zero["monotone"].get<int>() >= 1);
  CHECK(zero["upper"] == 2);

  json h = json::parse(run({"--format", "json", "rpn", "bounds", "127", "--horizon", "318"}).out)["results"];
  CHECK(h["monotone"] == 18);

  Run v = run({"--format", "json", "rpn", "vakil", "--max-n", "4096"});
  CHECK(v.code == 0);
  CHECK(json::parse(v.out)["results"]["ok"] == true);

  json f = json::parse(run({"--format", "json", "rpn", "fundamental", "--max-n", "7"}).out)["results"];
  CHECK(f["values"] == json({1, 2, 1, 3, 2, 3, 1}));
}

TEST_CASE("usage and capacity errors exit with 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"rpn"}).code == 1);
  CHECK(run({"rpn", "table", "--from", "-5"}).code == 1);
  CHECK(run({"rpn", "bounds", "seven"}).code == 1);
  Run cap = run({"--budget", "100", "rpn", "bounds", "1000"});
  CHECK(cap.code == 1);
  CHECK(cap.err.find("100") != std::string::npos);
  CHECK(run({"complex", "homology", "does-not-exist.json"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("complex commands") {
  const std::string moore = temp_file("moore.json", R"({"min_degree": 0, "ranks": [1, 1], "differentials": [[[2]]]})");
  json h = json::parse(run({"--format", "json", "complex", "homology", moore.c_str()}).out)["results"]["homology"];
  CHECK(h[0]["group"] == "Z/2");
  CHECK(h[1]["group"] == "0");

  const std::string zero = temp_file("zero.json", R"({"min_degree": 0, "ranks": [], "differentials": []})");
  CHECK(json::parse(run({"--format", "json", "complex", "homology", zero.c_str()}).out)["results"]["homology"].empty());

  const std::string ghost = temp_file("ghost.json", io::to_json(moore_ghost()).dump());
  json g = json::parse(run({"--format", "json", "complex", "ghost-check", ghost.c_str()}).out)["results"];
  CHECK(g["ghost"] == true);
  CHECK(g["null_homotopic"] == false);

  json res = json::parse(run({"--format", "json", "complex", "resolve", moore.c_str(), "--depth", "2"}).out)["results"];
  CHECK(res["length_bound"] == 2);

  const std::string seq = temp_file("seq.json", R"({"A": {"rank": 1, "torsion": []}, "B": {"rank": 1, "torsion": []},
      "C": {"rank": 0, "torsion": [2]}, "i": [[2]], "p": [[1]]})");
  Run p = run({"--format", "json", "complex", "pure-check", seq.c_str()});
  CHECK(p.code == 0);
  json pr = json::parse(p.out)["results"];
  CHECK(pr["pure"] == false);
  CHECK(pr["split"] == false);
  CHECK(pr["failing_modulus"] == 2);

  const std::string bad = temp_file("bad.json", R"({"min_degree": 0, "ranks": [1, 1, 1], "differentials": [[[1]], [[1]]]})");
  Run e = run({"complex", "homology", bad.c_str()});
  CHECK(e.code == 1);
  CHECK(e.err.find("degree 2") != std::string::npos);

  const std::string broken = temp_file("broken.json", R"({"min_degree": 0,)");
  Run s = run({"complex", "homology", broken.c_str()});
  CHECK(s.code == 1);
  CHECK(s.err.find("byte 17") != std::string::npos);

  for (const auto& f : {moore, zero, ghost, seq, bad, broken}) std::remove(f.c_str());
}

TEST_CASE("kelly command is deterministic") {
  Run a = run({"--format", "json", "complex", "kelly", "--seed", "7", "--trials", "12", "--k", "2"});
  Run b = run({"--format", "json", "complex", "kelly", "--seed", "7", "--trials", "12", "--k", "2"});
  CHECK(a.code == 0);
  json ja = json::parse(a.out), jb = json::parse(b.out);
  CHECK(ja["results"].dump() == jb["results"].dump());
  CHECK(ja["results"]["null_homotopic"] == 12);
  CHECK(run({"complex", "kelly", "--seed", "1", "--k", "0"}).code == 1);
}
