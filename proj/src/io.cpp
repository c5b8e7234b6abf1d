#include "liesol/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace liesol {

Rational rational_from_json(const Json& value) {
  if (value.is_number_integer()) return *parse_rational(std::to_string(value.get<long long>()));
  if (value.is_string()) {
    if (auto q = parse_rational(value.get<std::string>())) return *q;
    throw std::invalid_argument("not a rational: \"" + value.get<std::string>() + "\"");
  }
  if (value.is_number_float())
    throw std::invalid_argument(
        "floating-point numbers are rejected in exact inputs; write \"p/q\" instead: " +
        value.dump());
  throw std::invalid_argument("expected integer or \"p/q\" string, got " + value.dump());
}

Mat<Rational> matrix_from_json(const Json& value, int dim, const std::string& what) {
  if (!value.is_array() || static_cast<int>(value.size()) != dim)
    throw std::invalid_argument(what + " must have " + std::to_string(dim) + " rows");
  Mat<Rational> m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const Json& row = value[i];
    if (!row.is_array()) throw std::invalid_argument(what + " row " + std::to_string(i + 1) +
                                                     " is not an array");
    if (static_cast<int>(row.size()) == dim) {
      for (int j = 0; j < dim; ++j) m(i, j) = rational_from_json(row[j]);
    } else if (static_cast<int>(row.size()) == dim - i) {
      // packed upper triangle: row i holds entries (i, i..n-1)
      for (int j = i; j < dim; ++j) {
        m(i, j) = rational_from_json(row[j - i]);
        m(j, i) = m(i, j);
      }
    } else {
      throw std::invalid_argument(what + " row " + std::to_string(i + 1) + " must have " +
                                  std::to_string(dim) + " (full) or " + std::to_string(dim - i) +
                                  " (upper triangle) entries");
    }
  }
  return m;
}

ParsedInput parse_algebra_document(const Json& doc, const std::string& source) {
  if (!doc.is_object()) throw std::invalid_argument("algebra document must be a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<int>() < 1)
    throw std::invalid_argument("algebra document needs a positive integer \"dim\"");
  const int n = doc["dim"].get<int>();

  ParsedInput input{Ten3<Rational>(n), std::nullopt, std::nullopt, source, ""};
  Ten3<int> seen(n);
  if (doc.contains("brackets")) {
    if (!doc["brackets"].is_array()) throw std::invalid_argument("\"brackets\" must be a list");
    for (const Json& entry : doc["brackets"]) {
      for (const char* key : {"i", "j", "k", "c"})
        if (!entry.contains(key))
          throw std::invalid_argument("bracket entry missing \"" + std::string(key) +
                                      "\": " + entry.dump());
      const int i = entry["i"].get<int>(), j = entry["j"].get<int>(), k = entry["k"].get<int>();
      for (int idx : {i, j, k})
        if (idx < 1 || idx > n)
          throw std::invalid_argument("bracket index out of range 1.." + std::to_string(n) + ": " +
                                      entry.dump());
      const Rational v = rational_from_json(entry["c"]);
      if (i == j && v != 0)
        throw std::invalid_argument("bracket [X_i, X_i] must vanish: " + entry.dump());
      auto assign = [&](int a, int b, const Rational& val) {
        if (seen(a, b, k - 1) != 0 && input.c(a, b, k - 1) != val)
          throw std::invalid_argument("conflicting bracket value for c^" + std::to_string(k) +
                                      "_{" + std::to_string(a + 1) + std::to_string(b + 1) + "}");
        seen(a, b, k - 1) = 1;
        input.c(a, b, k - 1) = val;
      };
      assign(i - 1, j - 1, v);
      assign(j - 1, i - 1, -v);
    }
  }
  if (doc.contains("metric")) input.metric = matrix_from_json(doc["metric"], n, "metric");
  if (doc.contains("derivation"))
    input.derivation = matrix_from_json(doc["derivation"], n, "derivation");

  // Canonical echo for the digest: regenerate the document from parsed data.
  Json echo;
  echo["dim"] = n;
  Json brackets = Json::array();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (input.c(i, j, k) != 0)
          brackets.push_back(
              {{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"c", to_string(input.c(i, j, k))}});
  echo["brackets"] = std::move(brackets);
  if (input.metric) echo["metric"] = json_of(*input.metric);
  if (input.derivation) echo["derivation"] = json_of(*input.derivation);
  input.digest = fnv1a_digest(echo.dump());
  return input;
}

ParsedInput load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& err) {
    throw std::invalid_argument("invalid JSON in " + path + ": " + err.what());
  }
  return parse_algebra_document(doc, "file:" + path);
}

ParsedInput input_from_catalog(const std::string& name) {
  const CatalogEntry entry = catalog(name);
  ParsedInput input{entry.algebra.c(), entry.metric, entry.derivation, "catalog:" + name,
                    fnv1a_digest("catalog:" + name)};
  return input;
}

Json json_of(const Mat<Rational>& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json json_of(const Vec<Rational>& v) {
  Json row = Json::array();
  for (const Rational& x : v) row.push_back(to_string(x));
  return row;
}

std::string fnv1a_digest(const std::string& text) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char ch : text) {
    hash ^= ch;
    hash *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a:%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace liesol
