#pragma once

#include <optional>
#include <string>

#include "liesol/extension.hpp"
#include "liesol/geometry.hpp"
#include "liesol/quadratic.hpp"

namespace liesol {

/// Result of testing Ric = lambda Id + D with D required to be a derivation.
/// The Leibniz residual of D(lambda) = Q - lambda Id is affine in lambda, so
/// lambda is found by an exact linear solve; no tolerances are involved.
struct SolitonDetection {
  enum class Status {
    Soliton,      // unique lambda
    NotSoliton,   // the affine system is inconsistent
    EveryLambda,  // abelian: every lambda works; canonical representative stored
  };
  Status status;
  Rational lambda;
  Mat<Rational> derivation;        // Q - lambda Id at the stored lambda
  Ten3<Rational> leibniz_residual; // of the stored derivation; zero on success
  Mat<Rational> ricci;
  Mat<Rational> ricci_operator;
  Rational scal;

  bool found() const { return status != Status::NotSoliton; }
};

SolitonDetection detect_algebraic_soliton(const LieAlgebra& alg, const InvariantMetric& g);

/// Constants (alpha, a) extending a soliton (lambda, D) to an m-quasi-Einstein
/// metric: alpha^2 = 1/(tr D - m lambda), a = alpha lambda, which exists iff
/// tr D > m lambda. alpha is exact in the quadratic field Q(sqrt(alpha^2)).
struct SolitonExtensionSolution {
  bool exists;
  bool boundary;  // tr D - m lambda == 0 exactly
  Rational gap;   // tr D - m lambda
  Rational alpha_sq;
  Quad alpha;
  Quad a;
};

SolitonExtensionSolution solve_soliton_extension(const SolitonDetection& cert, const Rational& m);
SolitonExtensionSolution solve_soliton_extension(const Rational& tr_d, const Rational& lambda,
                                                 const Rational& m);

/// Abelian-base branch: lambda = 0 and a = tr(S)/m, which works exactly when
/// tr(S^2) = -tr(S)^2/m.
struct AbelianExtensionSolution {
  bool ok;
  Rational defect;  // tr(S^2) + tr(S)^2/m, zero iff the condition holds
  Rational a;
  Rational lambda;  // always 0
  Rational tr_s;
  Rational tr_s2;
};

AbelianExtensionSolution solve_abelian_extension(const LieAlgebra& base, const InvariantMetric& h,
                                                 const Mat<Rational>& d, const Rational& m);

/// Exact residual of Ric - m q - lambda g on the total algebra, with lambda
/// read off the (xi,xi) component. w never enters: (1/w) Hess w = q.
template <typename T>
struct QECertificate {
  Rational m;
  T lambda;
  T a;
  T alpha;
  Mat<T> residual;
  bool exact;  // residual is identically zero
};

template <typename T>
QECertificate<T> verify_quasi_einstein(const Extension<T>& ext, const Rational& m, const T& a) {
  const Mat<T> ric = extension_ricci_direct(ext);
  const Mat<T> q = q_tensor(ext, a);
  const T m_t = scalar_cast<T>(m);
  Mat<T> t = ric - m_t * q;
  const T lambda = t(0, 0);  // g(xi,xi) = 1
  Mat<T> residual = t - lambda * ext.g;
  const bool exact = residual.is_zero_matrix();
  return {m, lambda, a, ext.alpha, std::move(residual), exact};
}

/// Necessary conditions for an m-quasi-Einstein extension, plus the normal-D
/// classification of the base (soliton or flat).
template <typename T>
struct NecessaryConditions {
  bool div_s_zero;          // (i)  div S = 0 on the base
  Vec<Rational> div_s;
  bool trace_identity;      // (ii) tr((alpha S)^2) + a tr(alpha S) = 0
  T trace_defect;
  bool d_normal;            // [D, D^*] = 0 on the base
  enum class BaseClass { Soliton, Flat, Violation, NotNormal } base_class;
  std::optional<Rational> base_lambda;

  bool conditions_hold() const { return div_s_zero && trace_identity; }
};

template <typename T>
NecessaryConditions<T> necessary_conditions(const Extension<T>& ext, const T& a) {
  NecessaryConditions<T> out{};
  out.div_s = divergence_closed_form(ext.base.c(), ext.base_metric.g(), ext.base_metric.g_inv(),
                                     ext.base_derivation);
  out.div_s_zero = true;
  for (const Rational& v : out.div_s)
    if (v != 0) out.div_s_zero = false;

  // The effective derivation of the bracket is alpha D, so the paper-level
  // statement tr(S^2) = -a tr(S) is evaluated for alpha S.
  const T tr_s = ext.s.trace();
  const T tr_s2 = (ext.s * ext.s).trace();
  const T alpha_sq = ext.alpha * ext.alpha;
  out.trace_defect = alpha_sq * tr_s2 + a * ext.alpha * tr_s;
  out.trace_identity = out.trace_defect == T{};

  const auto [s_r, a_r] = metric_adjoint_split(ext.base_metric.g(), ext.base_metric.g_inv(),
                                               ext.base_derivation);
  out.d_normal = (s_r * a_r - a_r * s_r).is_zero_matrix();
  if (!out.d_normal) {
    out.base_class = NecessaryConditions<T>::BaseClass::NotNormal;
    return out;
  }
  const SolitonDetection det = detect_algebraic_soliton(ext.base, ext.base_metric);
  const bool flat =
      riemann_tensor(ext.base.c(), levi_civita(ext.base, ext.base_metric).gamma).is_zero_tensor();
  if (flat) {
    out.base_class = NecessaryConditions<T>::BaseClass::Flat;
  } else if (det.found()) {
    out.base_class = NecessaryConditions<T>::BaseClass::Soliton;
    out.base_lambda = det.lambda;
  } else {
    out.base_class = NecessaryConditions<T>::BaseClass::Violation;
  }
  return out;
}

/// Trace identities of a divergence-free q = a^2 dr^2 + a Hess r, with the
/// orientation normalized to a >= 0 for the Laplacian window.
template <typename T>
struct TraceIdentities {
  bool div_q_zero;
  Vec<T> div_q;
  T tr_q;
  T tr_q_sq;
  bool q_trace_identity;      // tr(q^2) = a^2 tr(q)
  T hess_norm_sq;
  T laplacian;
  bool hess_identity;         // |Hess r|^2 = a (Delta r)
  bool flipped;               // r was replaced by -r to make a >= 0
  T a_oriented;
  T laplacian_oriented;
  bool window_lower;          // 0 <= Delta r
  bool window_upper;          // Delta r <= (n-1) a
  bool at_upper_endpoint;
  bool at_lower_endpoint;

  bool identities_hold() const {
    return q_trace_identity && hess_identity && window_lower && window_upper;
  }
};

template <typename T>
TraceIdentities<T> trace_identities(const Extension<T>& ext, const T& a) {
  TraceIdentities<T> out{};
  const Mat<T> q = q_tensor(ext, a);
  out.div_q = covariant_divergence(ext.g_inv, ext.gamma, q);
  out.div_q_zero = true;
  for (const T& v : out.div_q)
    if (!(v == T{})) out.div_q_zero = false;

  out.tr_q = bilinear_trace(ext.g_inv, q);
  out.tr_q_sq = bilinear_norm_sq(ext.g_inv, q);
  out.q_trace_identity = out.tr_q_sq == a * a * out.tr_q;

  out.hess_norm_sq = bilinear_norm_sq(ext.g_inv, hess_r(ext));
  out.laplacian = laplacian_r(ext);
  out.hess_identity = out.hess_norm_sq == a * out.laplacian;

  out.flipped = sign(a) < 0;
  out.a_oriented = out.flipped ? -a : a;
  out.laplacian_oriented = out.flipped ? -out.laplacian : out.laplacian;
  out.window_lower = !(out.laplacian_oriented < T{});
  const T upper = scalar_cast<T>(Rational(ext.n - 1)) * out.a_oriented;
  out.window_upper = !(upper < out.laplacian_oriented);
  out.at_upper_endpoint = out.laplacian_oriented == upper;
  out.at_lower_endpoint = out.laplacian_oriented == T{};
  return out;
}

/// Exponent making q = (1/w) Hess w divergence free: a = tr(S_r^2)/tr(S_r)
/// where S_r is the Hess r operator. Degenerate when the tangential part of
/// div Hess r is nonzero or when Delta r = 0 (product case).
template <typename T>
struct DivFreeExponent {
  enum class Status { Found, DegenerateTangential, DegenerateProduct };
  Status status;
  T a;  // meaningful only when Found

  bool found() const { return status == Status::Found; }
};

template <typename T>
DivFreeExponent<T> solve_div_free_exponent(const Extension<T>& ext) {
  const Vec<Rational> div_s = divergence_closed_form(
      ext.base.c(), ext.base_metric.g(), ext.base_metric.g_inv(), ext.base_derivation);
  for (const Rational& v : div_s)
    if (v != 0) return {DivFreeExponent<T>::Status::DegenerateTangential, T{}};
  const Mat<T> s_r = hess_r_operator(ext);
  const T tr = s_r.trace();
  if (tr == T{}) return {DivFreeExponent<T>::Status::DegenerateProduct, T{}};
  return {DivFreeExponent<T>::Status::Found, (s_r * s_r).trace() / tr};
}

}  // namespace liesol
