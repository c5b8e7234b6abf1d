#include "liesol/soliton.hpp"

#include <stdexcept>

namespace liesol {

SolitonDetection detect_algebraic_soliton(const LieAlgebra& alg, const InvariantMetric& g) {
  const int n = alg.dim();
  SolitonDetection out{SolitonDetection::Status::NotSoliton,
                       Rational(0),
                       Mat<Rational>(n, n),
                       Ten3<Rational>(n),
                       Mat<Rational>(n, n),
                       Mat<Rational>(n, n),
                       Rational(0)};
  const CurvatureData curv = curvature(alg, g);
  out.ricci = curv.ricci;
  out.scal = curv.scalar;
  out.ricci_operator = g.g_inv() * curv.ricci;

  // Leibniz residual of D(lambda) = Q - lambda Id is res(Q) + lambda c, one
  // affine equation per structure-constant slot.
  const Ten3<Rational> res_q = derivation_residual(alg, out.ricci_operator);
  const Ten3<Rational>& c = alg.c();

  std::optional<Rational> lambda;
  bool consistent = true;
  for (int i = 0; i < n && consistent; ++i)
    for (int j = 0; j < n && consistent; ++j)
      for (int k = 0; k < n && consistent; ++k) {
        if (c(i, j, k) != 0) {
          const Rational candidate = -res_q(i, j, k) / c(i, j, k);
          if (!lambda)
            lambda = candidate;
          else if (*lambda != candidate)
            consistent = false;
        } else if (res_q(i, j, k) != 0) {
          consistent = false;
        }
      }

  if (!consistent) {
    out.status = SolitonDetection::Status::NotSoliton;
    out.derivation = out.ricci_operator;  // lambda = 0 representative
    out.leibniz_residual = res_q;
    return out;
  }
  if (!lambda) {
    // No bracket constrains lambda: the algebra is abelian and anything
    // works. Canonical representative lambda = scal/n (= 0), D = Q.
    out.status = SolitonDetection::Status::EveryLambda;
    out.lambda = out.scal / n;
  } else {
    out.status = SolitonDetection::Status::Soliton;
    out.lambda = *lambda;
  }
  Mat<Rational> d = out.ricci_operator;
  for (int i = 0; i < n; ++i) d(i, i) -= out.lambda;
  out.derivation = std::move(d);
  out.leibniz_residual = derivation_residual(alg, out.derivation);
  return out;
}

SolitonExtensionSolution solve_soliton_extension(const Rational& tr_d, const Rational& lambda,
                                                 const Rational& m) {
  if (m == 0) throw std::invalid_argument("solve_soliton_extension: m must be nonzero");
  SolitonExtensionSolution sol{};
  sol.gap = tr_d - m * lambda;
  sol.boundary = sol.gap == 0;
  if (sign(sol.gap) <= 0) {
    sol.exists = false;
    return sol;
  }
  sol.exists = true;
  sol.alpha_sq = Rational(1) / sol.gap;
  sol.alpha = Quad::sqrt(sol.alpha_sq);
  sol.a = sol.alpha * Quad(lambda);
  return sol;
}

SolitonExtensionSolution solve_soliton_extension(const SolitonDetection& cert, const Rational& m) {
  if (!cert.found())
    throw std::invalid_argument("solve_soliton_extension: input is not a soliton certificate");
  return solve_soliton_extension(cert.derivation.trace(), cert.lambda, m);
}

AbelianExtensionSolution solve_abelian_extension(const LieAlgebra& base, const InvariantMetric& h,
                                                 const Mat<Rational>& d, const Rational& m) {
  if (m == 0) throw std::invalid_argument("solve_abelian_extension: m must be nonzero");
  if (!base.c().is_zero_tensor())
    throw std::invalid_argument("solve_abelian_extension: base algebra must be abelian");
  const auto [s, a_part] = metric_adjoint_split(h.g(), h.g_inv(), d);
  (void)a_part;
  AbelianExtensionSolution sol{};
  sol.tr_s = s.trace();
  sol.tr_s2 = (s * s).trace();
  sol.defect = sol.tr_s2 + sol.tr_s * sol.tr_s / m;
  sol.ok = sol.defect == 0;
  sol.a = sol.tr_s / m;
  sol.lambda = 0;
  return sol;
}

}  // namespace liesol
