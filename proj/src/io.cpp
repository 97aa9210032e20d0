#include "ghostlength/io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace ghostlength::io {

ParseError::ParseError(const std::string& what, std::optional<std::size_t> offset, std::string path)
    : std::runtime_error(what), offset_(offset), path_(std::move(path)) {}

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw ParseError((path.empty() ? std::string("/") : path) + ": " + what, std::nullopt,
                   path.empty() ? "/" : path);
}

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

const json& field(const json& j, const std::string& path, const std::string& key) {
  if (!j.is_object()) schema_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(child(path, key), "missing field");
  return *it;
}

const json& array_field(const json& j, const std::string& path, const std::string& key) {
  const json& a = field(j, path, key);
  if (!a.is_array()) schema_error(child(path, key), "expected an array");
  return a;
}

int int_from_json(const json& j, const std::string& path) {
  Integer v = integer_from_json(j, path);
  if (!v.fits_sint_p()) schema_error(path, "integer out of range");
  return static_cast<int>(v.get_si());
}

std::size_t size_from_json(const json& j, const std::string& path) {
  Integer v = integer_from_json(j, path);
  if (v < 0) schema_error(path, "expected a non-negative integer");
  if (v > 1'000'000) schema_error(path, "rank too large");
  return static_cast<std::size_t>(v.get_ui());
}

}  // namespace

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports the offset one past the offending byte
    std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError("syntax error at byte " + std::to_string(offset) + ": " + e.what(), offset,
                     "");
  }
}

json read_document(const std::string& filename) {
  std::ifstream in(filename, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + filename);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

json to_json(const Integer& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

json seed_to_json(std::uint64_t seed) { return json(std::to_string(seed)); }

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const FgAbelianGroup& g) {
  json t = json::array();
  for (const auto& x : g.torsion) t.push_back(to_json(x));
  return json{{"rank", g.rank}, {"torsion", std::move(t)}};
}

json to_json(const GradedComplex& x) {
  json d = json::array();
  for (const auto& m : x.differentials()) d.push_back(to_json(m));
  return json{{"min_degree", x.min_degree()}, {"ranks", x.ranks()}, {"differentials", std::move(d)}};
}

json to_json(const ChainMap& f) {
  json c = json::array();
  for (const auto& m : f.components()) c.push_back(to_json(m));
  return json{{"source", to_json(f.source())},
              {"target", to_json(f.target())},
              {"min_degree", f.min_degree()},
              {"components", std::move(c)}};
}

json to_json(const Homotopy& h) {
  json c = json::array();
  for (const auto& m : h.components) c.push_back(to_json(m));
  return json{{"min_degree", h.min_degree}, {"components", std::move(c)}};
}

json to_json(const ShortExactSeq& seq) {
  return json{{"A", to_json(seq.a)},
              {"B", to_json(seq.b)},
              {"C", to_json(seq.c)},
              {"i", to_json(seq.i)},
              {"p", to_json(seq.p)}};
}

Integer integer_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    bool digits = s.size() > start;
    for (std::size_t i = start; i < s.size(); ++i) digits = digits && std::isdigit(static_cast<unsigned char>(s[i]));
    if (digits) return Integer(s);
  }
  schema_error(path, "expected an integer");
}

IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols,
                           const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array of rows");
  IntMatrix m(rows, cols);
  if (rows == 0 && j.empty()) return m;
  if (j.size() != rows)
    schema_error(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    const std::string rp = child(path, r);
    if (!row.is_array()) schema_error(rp, "expected an array");
    if (row.size() != cols)
      schema_error(rp, "expected " + std::to_string(cols) + " entries, got " + std::to_string(row.size()));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = integer_from_json(row[c], child(rp, c));
  }
  return m;
}

FgAbelianGroup group_from_json(const json& j, const std::string& path) {
  FgAbelianGroup g;
  g.rank = size_from_json(field(j, path, "rank"), child(path, "rank"));
  const json& t = array_field(j, path, "torsion");
  for (std::size_t i = 0; i < t.size(); ++i) {
    Integer v = integer_from_json(t[i], child(child(path, "torsion"), i));
    if (v < 2) schema_error(child(child(path, "torsion"), i), "torsion coefficients must be >= 2");
    g.torsion.push_back(v);
  }
  for (std::size_t i = 1; i < g.torsion.size(); ++i)
    if (g.torsion[i] % g.torsion[i - 1] != 0)
      schema_error(child(path, "torsion"), "torsion coefficients must form a divisibility chain");
  return g;
}

GradedComplex complex_from_json(const json& j, const std::string& path) {
  const int min_degree = int_from_json(field(j, path, "min_degree"), child(path, "min_degree"));
  const json& rj = array_field(j, path, "ranks");
  std::vector<std::size_t> ranks;
  for (std::size_t i = 0; i < rj.size(); ++i)
    ranks.push_back(size_from_json(rj[i], child(child(path, "ranks"), i)));
  const json& dj = array_field(j, path, "differentials");
  const std::size_t expected = ranks.empty() ? 0 : ranks.size() - 1;
  if (dj.size() != expected)
    schema_error(child(path, "differentials"), "expected " + std::to_string(expected) +
                                                   " matrices, got " + std::to_string(dj.size()));
  std::vector<IntMatrix> diffs;
  for (std::size_t i = 0; i < dj.size(); ++i)
    diffs.push_back(matrix_from_json(dj[i], ranks[i], ranks[i + 1],
                                     child(child(path, "differentials"), i)));
  return GradedComplex(min_degree, std::move(ranks), std::move(diffs));
}

ChainMap chain_map_from_json(const json& j, const std::string& path) {
  GradedComplex source = complex_from_json(field(j, path, "source"), child(path, "source"));
  GradedComplex target = complex_from_json(field(j, path, "target"), child(path, "target"));
  const int min_degree = int_from_json(field(j, path, "min_degree"), child(path, "min_degree"));
  const json& cj = array_field(j, path, "components");
  std::vector<IntMatrix> comps;
  for (std::size_t i = 0; i < cj.size(); ++i) {
    const int n = min_degree + static_cast<int>(i);
    comps.push_back(matrix_from_json(cj[i], target.rank(n), source.rank(n),
                                     child(child(path, "components"), i)));
  }
  return ChainMap(std::move(source), std::move(target), min_degree, std::move(comps));
}

ShortExactSeq sequence_from_json(const json& j, const std::string& path) {
  ShortExactSeq s;
  s.a = group_from_json(field(j, path, "A"), child(path, "A"));
  s.b = group_from_json(field(j, path, "B"), child(path, "B"));
  s.c = group_from_json(field(j, path, "C"), child(path, "C"));
  s.i = matrix_from_json(field(j, path, "i"), s.b.generator_count(), s.a.generator_count(),
                         child(path, "i"));
  s.p = matrix_from_json(field(j, path, "p"), s.c.generator_count(), s.b.generator_count(),
                         child(path, "p"));
  return s;
}

}  // namespace ghostlength::io
