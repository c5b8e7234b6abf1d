#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "liesol/algebra.hpp"
#include "liesol/linalg.hpp"

namespace liesol {

using Json = nlohmann::ordered_json;

/// Parsed algebra description. Structure constants are kept raw so callers
/// can run validation and report violations instead of failing construction.
struct ParsedInput {
  Ten3<Rational> c;
  std::optional<Mat<Rational>> metric;
  std::optional<Mat<Rational>> derivation;
  std::string source;  // "catalog:<name>" or "file:<path>"
  std::string digest;
};

/// Input document format:
///   dim        positive integer
///   brackets   list of {i, j, k, c} with 1-based indices and rational c
///              (integer or "p/q" string); omitted pairs are zero and the
///              antisymmetric completion is applied
///   metric     optional n x n rational entries; rows of length n-i are
///              accepted as a packed upper triangle
///   derivation optional n x n rationals
/// Floating-point numbers are rejected everywhere: exact paths stay exact.
ParsedInput parse_algebra_document(const Json& doc, const std::string& source);
ParsedInput load_algebra_file(const std::string& path);
ParsedInput input_from_catalog(const std::string& name);

/// Rational from a JSON value: integer or "p/q" string only.
Rational rational_from_json(const Json& value);
Mat<Rational> matrix_from_json(const Json& value, int dim, const std::string& what);

Json json_of(const Mat<Rational>& m);
Json json_of(const Vec<Rational>& v);
std::string fnv1a_digest(const std::string& text);

}  // namespace liesol
