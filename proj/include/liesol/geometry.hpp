#pragma once

#include <optional>
#include <string>
#include <utility>

#include "liesol/algebra.hpp"
#include "liesol/linalg.hpp"

namespace liesol {

// Templated tensor layer. All formulas are rational functions of the metric
// and structure constants, so the same code runs over Rational, Quad and
// double. Index conventions:
//   c(i,j,k)      = c^k_{ij}, coefficient of X_k in [X_i, X_j]
//   gamma(i,j,k)  = Gamma^k_{ij}, coefficient of X_k in nabla_{X_i} X_j
//   riem(i,j,k,l) = R^l_{ijk}, coefficient of X_l in R(X_i,X_j)X_k
//   low(i,j,k,l)  = g(R(X_i,X_j)X_k, X_l)

/// Levi-Civita connection of a left-invariant metric:
/// 2 g(nabla_{X_i} X_j, X_k) = g_{kl} c^l_{ij} - g_{jl} c^l_{ik} - g_{il} c^l_{jk}.
template <typename T>
Ten3<T> koszul_connection(const Ten3<T>& c, const Mat<T>& g, const Mat<T>& g_inv) {
  const int n = c.dim();
  const T half = T(1) / T(2);
  Ten3<T> gamma(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // lower(m) = 2 g(nabla_i X_j, X_m)
      Vec<T> lower(n, T{});
      for (int m = 0; m < n; ++m) {
        T sum{};
        for (int l = 0; l < n; ++l)
          sum += g(m, l) * c(i, j, l) - g(j, l) * c(i, m, l) - g(i, l) * c(j, m, l);
        lower[m] = sum;
      }
      for (int k = 0; k < n; ++k) {
        T sum{};
        for (int m = 0; m < n; ++m) sum += g_inv(k, m) * lower[m];
        gamma(i, j, k) = half * sum;
      }
    }
  return gamma;
}

/// R(X_i,X_j)X_k = nabla_i nabla_j X_k - nabla_j nabla_i X_k - nabla_{[X_i,X_j]} X_k.
template <typename T>
Ten4<T> riemann_tensor(const Ten3<T>& c, const Ten3<T>& gamma) {
  const int n = c.dim();
  Ten4<T> r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          T sum{};
          for (int m = 0; m < n; ++m)
            sum += gamma(j, k, m) * gamma(i, m, l) - gamma(i, k, m) * gamma(j, m, l) -
                   c(i, j, m) * gamma(m, k, l);
          r(i, j, k, l) = sum;
        }
  return r;
}

/// Ric_{jk} = R^i_{ijk}.
template <typename T>
Mat<T> ricci_tensor(const Ten4<T>& riem) {
  const int n = riem.dim();
  Mat<T> ric(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      T sum{};
      for (int i = 0; i < n; ++i) sum += riem(i, j, k, i);
      ric(j, k) = sum;
    }
  return ric;
}

template <typename T>
T scalar_curvature(const Mat<T>& ric, const Mat<T>& g_inv) {
  const int n = ric.rows();
  T sum{};
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) sum += g_inv(j, k) * ric(j, k);
  return sum;
}

/// low(i,j,k,l) = g(R(X_i,X_j)X_k, X_l).
template <typename T>
Ten4<T> lower_riemann(const Ten4<T>& riem, const Mat<T>& g) {
  const int n = riem.dim();
  Ten4<T> low(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          T sum{};
          for (int m = 0; m < n; ++m) sum += riem(i, j, k, m) * g(m, l);
          low(i, j, k, l) = sum;
        }
  return low;
}

/// Metric adjoint D^* = g^{-1} D^T g.
template <typename T>
Mat<T> metric_adjoint(const Mat<T>& g, const Mat<T>& g_inv, const Mat<T>& d) {
  return g_inv * d.transposed() * g;
}

/// Splits D into its g-symmetric part S and g-skew part A, D = S + A.
template <typename T>
std::pair<Mat<T>, Mat<T>> metric_adjoint_split(const Mat<T>& g, const Mat<T>& g_inv,
                                               const Mat<T>& d) {
  const Mat<T> adj = metric_adjoint(g, g_inv, d);
  const T half = T(1) / T(2);
  return {half * (d + adj), half * (d - adj)};
}

/// Inner product of endomorphisms, g(D, E) = g^{ij} g_{ab} D^a_i E^b_j.
template <typename T>
T endo_pairing(const Mat<T>& g, const Mat<T>& g_inv, const Mat<T>& d, const Mat<T>& e) {
  const int n = g.rows();
  T sum{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (is_zero(g_inv(i, j))) continue;
      T inner{};
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) inner += g(a, b) * d(a, i) * e(b, j);
      sum += g_inv(i, j) * inner;
    }
  return sum;
}

/// Lower-index bilinear form of an operator, (g E)(X_i, X_j) = g(E(X_i), X_j).
template <typename T>
Mat<T> bilinear_of_operator(const Mat<T>& g, const Mat<T>& e) {
  const int n = g.rows();
  Mat<T> b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      T sum{};
      for (int m = 0; m < n; ++m) sum += e(m, i) * g(m, j);
      b(i, j) = sum;
    }
  return b;
}

/// (div T)_k = g^{ij} (nabla_i T)_{jk} for a left-invariant symmetric T,
/// (nabla_i T)_{jk} = -Gamma^m_{ij} T_{mk} - Gamma^m_{ik} T_{jm}.
template <typename T>
Vec<T> covariant_divergence(const Mat<T>& g_inv, const Ten3<T>& gamma, const Mat<T>& t) {
  const int n = g_inv.rows();
  Vec<T> div(n, T{});
  for (int k = 0; k < n; ++k) {
    T sum{};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (is_zero(g_inv(i, j))) continue;
        T inner{};
        for (int m = 0; m < n; ++m) inner -= gamma(i, j, m) * t(m, k) + gamma(i, k, m) * t(j, m);
        sum += g_inv(i, j) * inner;
      }
    div[k] = sum;
  }
  return div;
}

/// Closed form for the divergence of S = (D + D^*)/2 as a 1-form:
/// 2 g(div S, X_k) = tr(D ad_{X_k}) + g(D, ad_{X_k}) - 2 tr(ad_{S(X_k)}).
/// Only linearity of D enters; D need not be a derivation.
template <typename T>
Vec<T> divergence_closed_form(const Ten3<T>& c, const Mat<T>& g, const Mat<T>& g_inv,
                              const Mat<T>& d) {
  const int n = c.dim();
  const auto [s, a] = metric_adjoint_split(g, g_inv, d);
  (void)a;
  // tr(ad_{X_m}) = c^j_{mj}
  Vec<T> ad_trace(n, T{});
  for (int m = 0; m < n; ++m) {
    T sum{};
    for (int j = 0; j < n; ++j) sum += c(m, j, j);
    ad_trace[m] = sum;
  }
  const T half = T(1) / T(2);
  Vec<T> div(n, T{});
  for (int k = 0; k < n; ++k) {
    Mat<T> ad_k(n, n);
    for (int a_ = 0; a_ < n; ++a_)
      for (int b = 0; b < n; ++b) ad_k(a_, b) = c(k, b, a_);
    const T tr_comp = (d * ad_k).trace();
    const T pairing = endo_pairing(g, g_inv, d, ad_k);
    T tr_ad_s{};
    for (int m = 0; m < n; ++m) tr_ad_s += s(m, k) * ad_trace[m];
    div[k] = half * (tr_comp + pairing - (T(2) * tr_ad_s));
  }
  return div;
}

/// Schouten tensor P = (Ric - scal/(2(n-1)) g) / (n-2), n >= 3.
template <typename T>
Mat<T> schouten_tensor(const Mat<T>& g, const Mat<T>& ric, const T& scal) {
  const int n = g.rows();
  const T coeff = scal / scalar_cast<T>(Rational(2 * (n - 1)));
  return scalar_cast<T>(Rational(1, n - 2)) * (ric - coeff * g);
}

/// Weyl tensor in fully lowered form:
/// W = low(R) - P (kn) g with the Kulkarni-Nomizu product
/// (A kn B)_{ijkl} = A_{il}B_{jk} + A_{jk}B_{il} - A_{ik}B_{jl} - A_{jl}B_{ik}.
template <typename T>
Ten4<T> weyl_tensor(const Mat<T>& g, const Ten4<T>& low, const Mat<T>& p) {
  const int n = g.rows();
  Ten4<T> w(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          w(i, j, k, l) = low(i, j, k, l) - (p(i, l) * g(j, k) + p(j, k) * g(i, l) -
                                             p(i, k) * g(j, l) - p(j, l) * g(i, k));
  return w;
}

/// Cotton tensor C_{ijk} = (nabla_i P)_{jk} - (nabla_j P)_{ik}; for invariant
/// tensors the covariant derivative acts through the connection only.
template <typename T>
Ten3<T> cotton_tensor(const Ten3<T>& gamma, const Mat<T>& p) {
  const int n = gamma.dim();
  auto cov = [&](int i, int j, int k) {
    T sum{};
    for (int m = 0; m < n; ++m) sum -= gamma(i, j, m) * p(m, k) + gamma(i, k, m) * p(j, m);
    return sum;
  };
  Ten3<T> c(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) c(i, j, k) = cov(i, j, k) - cov(j, i, k);
  return c;
}

/// |T|^2 = g^{ik} g^{jl} T_{ij} T_{kl}.
template <typename T>
T bilinear_norm_sq(const Mat<T>& g_inv, const Mat<T>& t) {
  const int n = g_inv.rows();
  T sum{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) sum += g_inv(i, k) * g_inv(j, l) * t(i, j) * t(k, l);
  return sum;
}

/// g-trace of a lower-index bilinear form.
template <typename T>
T bilinear_trace(const Mat<T>& g_inv, const Mat<T>& t) {
  const int n = g_inv.rows();
  T sum{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sum += g_inv(i, j) * t(i, j);
  return sum;
}

// Rational-facing layer.

/// Symmetric positive definite metric on a Lie algebra, with the inverse
/// cached at construction. Positivity is decided by exact leading principal
/// minor signs.
class InvariantMetric {
 public:
  explicit InvariantMetric(Mat<Rational> g);

  int dim() const { return g_.rows(); }
  const Mat<Rational>& g() const { return g_; }
  const Mat<Rational>& g_inv() const { return g_inv_; }

 private:
  Mat<Rational> g_;
  Mat<Rational> g_inv_;
};

struct Connection {
  Ten3<Rational> gamma;

  /// Gamma^k_{ij} - Gamma^k_{ji} = c^k_{ij}, exact.
  bool torsion_free(const LieAlgebra& alg) const;
  /// g(nabla_i X_j, X_k) + g(X_j, nabla_i X_k) = 0, exact.
  bool metric_compatible(const InvariantMetric& g) const;
};

Connection levi_civita(const LieAlgebra& alg, const InvariantMetric& g);

struct CurvatureData {
  Ten4<Rational> riemann;
  Ten4<Rational> riemann_lowered;
  Mat<Rational> ricci;
  Rational scalar;
  std::optional<Ten4<Rational>> weyl;    // n >= 4
  std::optional<Ten3<Rational>> cotton;  // n == 3

  bool first_bianchi_holds() const;
  bool weyl_trace_free(const Mat<Rational>& g_inv) const;
};

CurvatureData curvature(const LieAlgebra& alg, const InvariantMetric& g);

struct ConformalFlatness {
  bool flat;
  std::string note;  // which obstruction tensor decided, or the n <= 2 case
};

ConformalFlatness is_conformally_flat(const LieAlgebra& alg, const InvariantMetric& g);

}  // namespace liesol
