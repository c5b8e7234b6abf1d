#include "liesol/algebra.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace liesol {

std::string BracketViolation::describe() const {
  std::ostringstream os;
  if (kind == Kind::Antisymmetry) {
    os << "antisymmetry violated at c^" << k << "_{" << i << j << "}: c^k_{ij} + c^k_{ji} = "
       << to_string(value);
  } else {
    os << "Jacobi violated at (i,j,k,l) = (" << i << "," << j << "," << k << "," << l
       << "): cyclic sum = " << to_string(value);
  }
  return os.str();
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  os << violations.size() << " violation(s):";
  for (const auto& v : violations) os << "\n  " << v.describe();
  return os.str();
}

ValidationReport validate_structure_constants(const Ten3<Rational>& c) {
  ValidationReport report;
  const int n = c.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Rational sum = c(i, j, k) + c(j, i, k);
        if (sum != 0)
          report.violations.push_back(
              {BracketViolation::Kind::Antisymmetry, i + 1, j + 1, k + 1, 0, sum});
      }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational sum(0);
          for (int m = 0; m < n; ++m)
            sum += c(i, j, m) * c(m, k, l) + c(j, k, m) * c(m, i, l) + c(k, i, m) * c(m, j, l);
          if (sum != 0)
            report.violations.push_back(
                {BracketViolation::Kind::Jacobi, i + 1, j + 1, k + 1, l + 1, sum});
        }
  return report;
}

LieAlgebra::LieAlgebra(Ten3<Rational> c) : c_(std::move(c)) {
  const ValidationReport report = validate_structure_constants(c_);
  if (!report.ok())
    throw std::invalid_argument("structure constants do not define a Lie algebra: " +
                                report.summary());
}

Mat<Rational> LieAlgebra::ad(const Vec<Rational>& v) const {
  const int n = dim();
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument("ad: vector length does not match algebra dimension");
  Mat<Rational> m(n, n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      Rational sum(0);
      for (int i = 0; i < n; ++i) sum += v[i] * c_(i, j, k);
      m(k, j) = sum;
    }
  return m;
}

Mat<Rational> LieAlgebra::ad_basis(int i) const {
  Vec<Rational> v(dim(), Rational(0));
  v[i] = 1;
  return ad(v);
}

bool LieAlgebra::is_unimodular() const {
  const int n = dim();
  for (int i = 0; i < n; ++i) {
    Rational sum(0);
    for (int j = 0; j < n; ++j) sum += c_(i, j, j);
    if (sum != 0) return false;
  }
  return true;
}

Ten3<Rational> derivation_residual(const LieAlgebra& alg, const Mat<Rational>& d) {
  const int n = alg.dim();
  if (d.rows() != n || d.cols() != n)
    throw std::invalid_argument("derivation_residual: endomorphism shape mismatch");
  const Ten3<Rational>& c = alg.c();
  Ten3<Rational> res(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Rational sum(0);
        for (int m = 0; m < n; ++m)
          sum += d(k, m) * c(i, j, m) - c(m, j, k) * d(m, i) - c(i, m, k) * d(m, j);
        res(i, j, k) = sum;
      }
  return res;
}

bool is_derivation(const LieAlgebra& alg, const Mat<Rational>& d) {
  return derivation_residual(alg, d).is_zero_tensor();
}

std::vector<Mat<Rational>> derivation_space(const LieAlgebra& alg) {
  const int n = alg.dim();
  const Ten3<Rational>& c = alg.c();
  // Unknowns D^k_m flattened as k*n + m; one equation per (i < j, k).
  const int unknowns = n * n;
  std::vector<std::array<int, 3>> rows;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) rows.push_back({i, j, k});
  Mat<Rational> sys(static_cast<int>(rows.size()), unknowns);
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    const auto [i, j, k] = rows[r];
    for (int m = 0; m < n; ++m) {
      sys(r, k * n + m) += c(i, j, m);   // D^k_m c^m_{ij}
      sys(r, m * n + i) -= c(m, j, k);   // -c^k_{mj} D^m_i
      sys(r, m * n + j) -= c(i, m, k);   // -c^k_{im} D^m_j
    }
  }
  std::vector<Mat<Rational>> basis;
  for (const auto& v : nullspace(std::move(sys))) {
    Mat<Rational> d(n, n);
    for (int k = 0; k < n; ++k)
      for (int m = 0; m < n; ++m) d(k, m) = v[k * n + m];
    basis.push_back(std::move(d));
  }
  return basis;
}

namespace {

Ten3<Rational> with_bracket(Ten3<Rational> c, int i, int j, int k, const Rational& v) {
  c(i, j, k) = v;
  c(j, i, k) = -v;
  return c;
}

CatalogEntry make_abelian(int n, const std::string& name) {
  Mat<Rational> id = Mat<Rational>::identity(n);
  return {name, "abelian R^" + std::to_string(n), LieAlgebra(Ten3<Rational>(n)), id, id};
}

std::optional<int> parse_arg(const std::string& name, const std::string& prefix) {
  if (name.size() <= prefix.size() + 2 || name.compare(0, prefix.size(), prefix) != 0 ||
      name[prefix.size()] != '(' || name.back() != ')')
    return std::nullopt;
  const std::string inner = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
  try {
    std::size_t pos = 0;
    const int v = std::stoi(inner, &pos);
    if (pos != inner.size() || v < 1) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"abelian(n)", "heis3", "sol3", "simple3", "hyperbolic_base(n)"};
}

CatalogEntry catalog(const std::string& name) {
  if (auto n = parse_arg(name, "abelian")) return make_abelian(*n, name);
  if (auto n = parse_arg(name, "hyperbolic_base")) {
    if (*n < 2) throw std::invalid_argument("hyperbolic_base(n) needs n >= 2");
    CatalogEntry entry = make_abelian(*n - 1, name);
    entry.description = "abelian R^" + std::to_string(*n - 1) +
                        " with identity derivation; extends to hyperbolic " + std::to_string(*n) +
                        "-space";
    return entry;
  }
  if (name == "heis3") {
    Ten3<Rational> c = with_bracket(Ten3<Rational>(3), 0, 1, 2, Rational(1));
    Mat<Rational> d(3, 3);
    d(0, 0) = 1;
    d(1, 1) = 1;
    d(2, 2) = 2;
    return {name, "3-dim Heisenberg algebra, [X1,X2] = X3", LieAlgebra(std::move(c)),
            Mat<Rational>::identity(3), d};
  }
  if (name == "sol3") {
    Ten3<Rational> c = with_bracket(Ten3<Rational>(3), 2, 0, 0, Rational(1));
    c = with_bracket(std::move(c), 2, 1, 1, Rational(-1));
    Mat<Rational> d(3, 3);
    d(0, 0) = 2;
    d(1, 1) = 2;
    return {name, "3-dim solvable algebra of Sol, [X3,X1] = X1, [X3,X2] = -X2",
            LieAlgebra(std::move(c)), Mat<Rational>::identity(3), d};
  }
  if (name == "simple3") {
    Ten3<Rational> c(3);
    for (int i = 0; i < 3; ++i) {
      c(i, (i + 1) % 3, (i + 2) % 3) = 1;
      c((i + 1) % 3, i, (i + 2) % 3) = -1;
    }
    LieAlgebra alg{std::move(c)};
    const Mat<Rational> d = alg.ad_basis(0);
    return {name, "3-dim simple algebra, cyclic [X_i,X_{i+1}] = X_{i+2}", std::move(alg),
            Mat<Rational>::identity(3), d};
  }
  std::string msg = "unknown catalog entry '" + name + "'; available:";
  for (const auto& entry : catalog_names()) msg += " " + entry;
  throw std::invalid_argument(msg);
}

}  // namespace liesol
