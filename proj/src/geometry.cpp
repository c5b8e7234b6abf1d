#include "liesol/geometry.hpp"

#include <stdexcept>

namespace liesol {

InvariantMetric::InvariantMetric(Mat<Rational> g) : g_(std::move(g)) {
  if (g_.rows() != g_.cols()) throw std::invalid_argument("metric must be square");
  if (!g_.is_symmetric()) throw std::invalid_argument("metric must be symmetric");
  for (const Rational& minor : leading_principal_minors(g_))
    if (sign(minor) <= 0)
      throw std::invalid_argument("metric is not positive definite (leading minor " +
                                  to_string(minor) + ")");
  auto inv = inverse(g_);
  if (!inv) throw std::invalid_argument("metric is singular");
  g_inv_ = std::move(*inv);
}

bool Connection::torsion_free(const LieAlgebra& alg) const {
  const int n = gamma.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (gamma(i, j, k) - gamma(j, i, k) != alg.c()(i, j, k)) return false;
  return true;
}

bool Connection::metric_compatible(const InvariantMetric& g) const {
  const int n = gamma.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Rational sum(0);
        for (int m = 0; m < n; ++m) sum += gamma(i, j, m) * g.g()(m, k) + gamma(i, k, m) * g.g()(j, m);
        if (sum != 0) return false;
      }
  return true;
}

Connection levi_civita(const LieAlgebra& alg, const InvariantMetric& g) {
  if (alg.dim() != g.dim())
    throw std::invalid_argument("levi_civita: algebra and metric dimensions differ");
  return Connection{koszul_connection(alg.c(), g.g(), g.g_inv())};
}

bool CurvatureData::first_bianchi_holds() const {
  const int n = riemann.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (riemann(i, j, k, l) + riemann(j, k, i, l) + riemann(k, i, j, l) != 0) return false;
  return true;
}

bool CurvatureData::weyl_trace_free(const Mat<Rational>& g_inv) const {
  if (!weyl) return true;
  const int n = g_inv.rows();
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Rational sum(0);
      for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) sum += g_inv(i, l) * (*weyl)(i, j, k, l);
      if (sum != 0) return false;
    }
  return true;
}

CurvatureData curvature(const LieAlgebra& alg, const InvariantMetric& g) {
  const int n = alg.dim();
  const Connection conn = levi_civita(alg, g);
  CurvatureData data;
  data.riemann = riemann_tensor(alg.c(), conn.gamma);
  data.riemann_lowered = lower_riemann(data.riemann, g.g());
  data.ricci = ricci_tensor(data.riemann);
  data.scalar = scalar_curvature(data.ricci, g.g_inv());
  if (n >= 3) {
    const Mat<Rational> p = schouten_tensor(g.g(), data.ricci, data.scalar);
    if (n >= 4) data.weyl = weyl_tensor(g.g(), data.riemann_lowered, p);
    if (n == 3) data.cotton = cotton_tensor(conn.gamma, p);
  }
  return data;
}

ConformalFlatness is_conformally_flat(const LieAlgebra& alg, const InvariantMetric& g) {
  const int n = alg.dim();
  if (n <= 2) return {true, "dimension <= 2: always locally conformally flat"};
  const CurvatureData data = curvature(alg, g);
  if (n == 3) {
    const bool flat = data.cotton->is_zero_tensor();
    return {flat, flat ? "Cotton tensor vanishes" : "Cotton tensor is nonzero"};
  }
  const bool flat = data.weyl->is_zero_tensor();
  return {flat, flat ? "Weyl tensor vanishes" : "Weyl tensor is nonzero"};
}

}  // namespace liesol
