#pragma once

#include <stdexcept>
#include <utility>

#include "liesol/algebra.hpp"
#include "liesol/geometry.hpp"
#include "liesol/quadratic.hpp"

namespace liesol {

template <typename T>
Mat<T> lift_matrix(const Mat<Rational>& m) {
  Mat<T> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = scalar_cast<T>(m(i, j));
  return out;
}

template <typename T>
Ten3<T> lift_tensor(const Ten3<Rational>& t) {
  Ten3<T> out(t.dim());
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j)
      for (int k = 0; k < t.dim(); ++k) out(i, j, k) = scalar_cast<T>(t(i, j, k));
  return out;
}

/// One-dimensional extension R xi x| h with [xi, X] = alpha D(X), carrying the
/// block metric g = dr^2 + h. The basis is (xi, X_1, ..., X_{n-1}) with xi at
/// index 0 and g(xi, xi) = 1. The gradient of the distance function r is xi,
/// so Hess r = -alpha h(S(.),.) on the base and 0 in the xi direction.
///
/// The scalar field T is Rational for rational alpha and Quad when alpha is a
/// solved square root; every derived tensor then stays exact.
template <typename T>
struct Extension {
  // Base data in exact rational form (used for base-level certificates).
  LieAlgebra base;
  InvariantMetric base_metric;
  Mat<Rational> base_derivation;

  T alpha;
  int n;  // total dimension

  // Lifted data in the working field.
  Ten3<T> c;          // total structure constants
  Mat<T> g, g_inv;    // block metric and inverse
  Mat<T> h, h_inv;    // base metric lifted
  Mat<T> d, s, a;     // derivation and its g-symmetric/skew parts on the base
  Ten3<T> gamma;      // Levi-Civita connection of (c, g)

  const Mat<Rational>& base_c_metric() const { return base_metric.g(); }
};

/// Builds the extension; throws std::invalid_argument carrying the Leibniz
/// residual location when D is not a derivation of the base.
template <typename T>
Extension<T> extend(const LieAlgebra& base, const InvariantMetric& h, const Mat<Rational>& d,
                    const T& alpha) {
  if (h.dim() != base.dim() || d.rows() != base.dim() || d.cols() != base.dim())
    throw std::invalid_argument("extend: dimension mismatch");
  const Ten3<Rational> residual = derivation_residual(base, d);
  if (!residual.is_zero_tensor()) {
    for (int i = 0; i < base.dim(); ++i)
      for (int j = 0; j < base.dim(); ++j)
        for (int k = 0; k < base.dim(); ++k)
          if (residual(i, j, k) != 0)
            throw std::invalid_argument(
                "extend: D is not a derivation; Leibniz residual at (i,j,k) = (" +
                std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) +
                ") equals " + to_string(residual(i, j, k)));
  }

  Extension<T> ext{base, h, d, alpha, base.dim() + 1, Ten3<T>(base.dim() + 1),
                   Mat<T>(),
                   Mat<T>(),
                   lift_matrix<T>(h.g()),
                   lift_matrix<T>(h.g_inv()),
                   lift_matrix<T>(d),
                   Mat<T>(),
                   Mat<T>(),
                   Ten3<T>()};
  const int nb = base.dim();
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j)
      for (int k = 0; k < nb; ++k) ext.c(i + 1, j + 1, k + 1) = scalar_cast<T>(base.c()(i, j, k));
  for (int j = 0; j < nb; ++j)
    for (int k = 0; k < nb; ++k) {
      ext.c(0, j + 1, k + 1) = alpha * ext.d(k, j);
      ext.c(j + 1, 0, k + 1) = -(alpha * ext.d(k, j));
    }

  ext.g = Mat<T>(ext.n, ext.n);
  ext.g_inv = Mat<T>(ext.n, ext.n);
  ext.g(0, 0) = T(1);
  ext.g_inv(0, 0) = T(1);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) {
      ext.g(i + 1, j + 1) = ext.h(i, j);
      ext.g_inv(i + 1, j + 1) = ext.h_inv(i, j);
    }

  auto [s, a] = metric_adjoint_split(ext.h, ext.h_inv, ext.d);
  ext.s = std::move(s);
  ext.a = std::move(a);
  ext.gamma = koszul_connection(ext.c, ext.g, ext.g_inv);
  return ext;
}

inline Extension<Rational> extend_rational(const LieAlgebra& base, const InvariantMetric& h,
                                           const Mat<Rational>& d, const Rational& alpha) {
  return extend<Rational>(base, h, d, alpha);
}

/// Ricci tensor of the total metric computed from curvature.
template <typename T>
Mat<T> extension_ricci_direct(const Extension<T>& ext) {
  return ricci_tensor(riemann_tensor(ext.c, ext.gamma));
}

/// Ricci tensor assembled from the closed blocks:
///   Ric(xi, xi) = -alpha^2 tr(S^2)
///   Ric(X, xi)  = -alpha (div S)(X)
///   Ric(X, Y)   = Ric_h(X, Y) - alpha^2 tr(S) h(S X, Y) - alpha^2 h([S,A] X, Y).
template <typename T>
Mat<T> extension_ricci_formula(const Extension<T>& ext) {
  const int nb = ext.n - 1;
  Mat<T> ric(ext.n, ext.n);
  const T alpha_sq = ext.alpha * ext.alpha;

  const T tr_s2 = (ext.s * ext.s).trace();
  ric(0, 0) = -(alpha_sq * tr_s2);

  const Vec<T> div_s = divergence_closed_form(lift_tensor<T>(ext.base.c()), ext.h, ext.h_inv, ext.d);
  for (int i = 0; i < nb; ++i) {
    ric(0, i + 1) = -(ext.alpha * div_s[i]);
    ric(i + 1, 0) = ric(0, i + 1);
  }

  const Mat<T> ric_base =
      lift_matrix<T>(curvature(ext.base, ext.base_metric).ricci);
  const T tr_s = ext.s.trace();
  const Mat<T> hs = bilinear_of_operator(ext.h, ext.s);
  const Mat<T> hsa = bilinear_of_operator(ext.h, ext.s * ext.a - ext.a * ext.s);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j)
      ric(i + 1, j + 1) = ric_base(i, j) - alpha_sq * tr_s * hs(i, j) - alpha_sq * hsa(i, j);
  return ric;
}

/// Hess r as a bilinear form on the total algebra: -alpha h(S(.),.) on the
/// base, zero on xi.
template <typename T>
Mat<T> hess_r(const Extension<T>& ext) {
  const int nb = ext.n - 1;
  const Mat<T> hs = bilinear_of_operator(ext.h, ext.s);
  Mat<T> out(ext.n, ext.n);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) out(i + 1, j + 1) = -(ext.alpha * hs(i, j));
  return out;
}

/// Hess r as a g-self-adjoint operator: -alpha S on the base, zero on xi.
template <typename T>
Mat<T> hess_r_operator(const Extension<T>& ext) {
  const int nb = ext.n - 1;
  Mat<T> out(ext.n, ext.n);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) out(i + 1, j + 1) = -(ext.alpha * ext.s(i, j));
  return out;
}

template <typename T>
T laplacian_r(const Extension<T>& ext) {
  return -(ext.alpha * ext.s.trace());
}

/// q = a^2 dr (x) dr + a Hess r, the tensor with Hess w = w q for w = e^{ar}.
template <typename T>
Mat<T> q_tensor(const Extension<T>& ext, const T& a) {
  Mat<T> q = hess_r(ext);
  for (int i = 0; i < ext.n; ++i)
    for (int j = 0; j < ext.n; ++j) q(i, j) = a * q(i, j);
  q(0, 0) += a * a;
  return q;
}

/// Structural invariants of a one-dimensional extension.
template <typename T>
struct ExtensionInvariants {
  T ric_xi_xi;
  T hess_r_norm_sq;
  bool bochner_scalar;    // Ric(xi,xi) = -|Hess r|^2
  bool nonpositive;       // Ric(xi,xi) <= 0
  bool zero_iff_skew;     // Ric(xi,xi) = 0 exactly when S = 0
  bool bochner_covector;  // div(Hess r) = Ric(xi, .) as 1-forms
  bool formula_matches_direct;

  bool all_hold() const {
    return bochner_scalar && nonpositive && zero_iff_skew && bochner_covector &&
           formula_matches_direct;
  }
};

template <typename T>
ExtensionInvariants<T> extension_invariants(const Extension<T>& ext) {
  const Mat<T> ric = extension_ricci_direct(ext);
  const Mat<T> ric_formula = extension_ricci_formula(ext);
  const Mat<T> hess = hess_r(ext);

  ExtensionInvariants<T> inv{};
  inv.ric_xi_xi = ric(0, 0);
  inv.hess_r_norm_sq = bilinear_norm_sq(ext.g_inv, hess);
  inv.bochner_scalar = inv.ric_xi_xi == -inv.hess_r_norm_sq;
  inv.nonpositive = !(T{} < inv.ric_xi_xi);
  inv.zero_iff_skew = (inv.ric_xi_xi == T{}) == ext.s.is_zero_matrix();
  const Vec<T> div_hess = covariant_divergence(ext.g_inv, ext.gamma, hess);
  inv.bochner_covector = true;
  for (int k = 0; k < ext.n; ++k)
    if (!(div_hess[k] == ric(0, k))) inv.bochner_covector = false;
  inv.formula_matches_direct = ric == ric_formula;
  return inv;
}

}  // namespace liesol
