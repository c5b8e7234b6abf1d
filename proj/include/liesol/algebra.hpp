#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liesol/linalg.hpp"
#include "liesol/rational.hpp"

namespace liesol {

/// One failed identity of a structure-constant array. Indices are 1-based,
/// matching the printed convention c^k_{ij}.
struct BracketViolation {
  enum class Kind { Antisymmetry, Jacobi };
  Kind kind;
  int i = 0, j = 0, k = 0, l = 0;  // l only used for Jacobi
  Rational value;                  // the nonzero residual

  std::string describe() const;
};

struct ValidationReport {
  std::vector<BracketViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Checks antisymmetry c^k_{ij} = -c^k_{ji} and the Jacobi identity.
ValidationReport validate_structure_constants(const Ten3<Rational>& c);

/// Finite-dimensional Lie algebra given by structure constants in a fixed
/// basis: [X_i, X_j] = c^k_{ij} X_k, stored at c(i,j,k). Construction
/// validates both identities.
class LieAlgebra {
 public:
  explicit LieAlgebra(Ten3<Rational> c);

  int dim() const { return c_.dim(); }
  const Ten3<Rational>& c() const { return c_; }

  /// Matrix of ad_v, (ad_v)^k_j = v^i c^k_{ij}.
  Mat<Rational> ad(const Vec<Rational>& v) const;
  Mat<Rational> ad_basis(int i) const;

  /// tr(ad_X) = 0 for all X, i.e. c^j_{ij} = 0 for every i.
  bool is_unimodular() const;

 private:
  Ten3<Rational> c_;
};

/// Leibniz residual D[X_i,X_j] - [DX_i,X_j] - [X_i,DX_j]; zero iff D is a
/// derivation.
Ten3<Rational> derivation_residual(const LieAlgebra& alg, const Mat<Rational>& d);
bool is_derivation(const LieAlgebra& alg, const Mat<Rational>& d);

/// Rational basis of the derivation algebra Der(g).
std::vector<Mat<Rational>> derivation_space(const LieAlgebra& alg);

struct CatalogEntry {
  std::string name;
  std::string description;
  LieAlgebra algebra;
  std::optional<Mat<Rational>> metric;      // default left-invariant metric
  std::optional<Mat<Rational>> derivation;  // default derivation for extensions
};

/// Built-in algebras: abelian(n), heis3, sol3, simple3, hyperbolic_base(n).
/// Throws std::invalid_argument listing the available entries for unknown
/// names.
CatalogEntry catalog(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace liesol
