#pragma once

// JSON reading and writing for complexes, chain maps, homotopies and short
// exact sequences. Integers that do not fit in 64 bits are written as
// decimal strings; readers accept either form.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ghostlength/complex.hpp"
#include "ghostlength/purity.hpp"

namespace ghostlength::io {

using json = nlohmann::ordered_json;

// Syntax errors carry the byte offset reported by the parser; schema
// errors carry a JSON pointer to the offending field.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::optional<std::size_t> offset, std::string path);
  std::optional<std::size_t> offset() const { return offset_; }
  const std::string& path() const { return path_; }

 private:
  std::optional<std::size_t> offset_;
  std::string path_;
};

json parse_document(const std::string& text);
json read_document(const std::string& filename);

json to_json(const Integer& v);
json to_json(const IntMatrix& m);
json to_json(const FgAbelianGroup& g);
json to_json(const GradedComplex& x);
json to_json(const ChainMap& f);
json to_json(const Homotopy& h);
json to_json(const ShortExactSeq& seq);

Integer integer_from_json(const json& j, const std::string& path);
// Rows of the expected shape; `[]` is accepted for any matrix with no rows.
IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols,
                           const std::string& path);
FgAbelianGroup group_from_json(const json& j, const std::string& path = "");
GradedComplex complex_from_json(const json& j, const std::string& path = "");
ChainMap chain_map_from_json(const json& j, const std::string& path = "");
ShortExactSeq sequence_from_json(const json& j, const std::string& path = "");

// Unsigned 64-bit seeds are written as strings, which keeps them exact in
// JSON readers that use doubles.
json seed_to_json(std::uint64_t seed);

}  // namespace ghostlength::io
