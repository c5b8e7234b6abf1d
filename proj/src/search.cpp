#include "liesol/search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "liesol/extension.hpp"

namespace liesol {

namespace {

/// Jacobi eigenvalue iteration for small symmetric matrices.
std::vector<double> symmetric_eigenvalues(Mat<double> a) {
  const int n = a.rows();
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (off < 1e-28) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) < 1e-30) continue;
        const double theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = a(i, i);
  return ev;
}

double halton(std::uint64_t index, int base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

constexpr int kHaltonBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};

std::vector<double> halton_point(std::uint64_t index, const MetricParametrization& par) {
  std::vector<double> p(par.free_entries.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    const auto [lo, hi] = par.bounds[k];
    p[k] = lo + (hi - lo) * halton(index, kHaltonBases[k % 10]);
  }
  return p;
}

/// Solves the damped normal equations (J^T J + mu I) delta = -J^T f.
std::vector<double> lm_step(const std::vector<std::vector<double>>& jac,
                            const std::vector<double>& f, double mu) {
  const int m = static_cast<int>(jac.size());
  const int p = m == 0 ? 0 : static_cast<int>(jac[0].size());
  Mat<double> jtj(p, p);
  std::vector<double> jtf(p, 0.0);
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      double s = 0;
      for (int r = 0; r < m; ++r) s += jac[r][a] * jac[r][b];
      jtj(a, b) = s;
    }
    double s = 0;
    for (int r = 0; r < m; ++r) s += jac[r][a] * f[r];
    jtf[a] = s;
  }
  for (int a = 0; a < p; ++a) jtj(a, a) += mu;
  const auto inv = inverse(jtj);
  std::vector<double> delta(p, 0.0);
  if (!inv) return delta;
  for (int a = 0; a < p; ++a) {
    double s = 0;
    for (int b = 0; b < p; ++b) s += (*inv)(a, b) * jtf[b];
    delta[a] = -s;
  }
  return delta;
}

double max_abs(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

MetricParametrization MetricParametrization::full(int dim, double diag_lo, double diag_hi,
                                                  double off_lo, double off_hi) {
  MetricParametrization par;
  par.dim = dim;
  par.fixed = Mat<Rational>(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      par.free_entries.emplace_back(i, j);
      par.bounds.emplace_back(i == j ? std::make_pair(diag_lo, diag_hi)
                                     : std::make_pair(off_lo, off_hi));
    }
  return par;
}

Mat<double> MetricParametrization::realize(const std::vector<double>& params) const {
  Mat<double> g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = fixed(i, j).get_d();
  for (std::size_t k = 0; k < free_entries.size(); ++k) {
    const auto [i, j] = free_entries[k];
    g(i, j) = params[k];
    g(j, i) = params[k];
  }
  return g;
}

Mat<Rational> MetricParametrization::realize_exact(const std::vector<Rational>& params) const {
  Mat<Rational> g = fixed;
  for (std::size_t k = 0; k < free_entries.size(); ++k) {
    const auto [i, j] = free_entries[k];
    g(i, j) = params[k];
    g(j, i) = params[k];
  }
  return g;
}

DivergenceSample divergence_residual(const LieAlgebra& alg, const Mat<Rational>& d,
                                     const MetricParametrization& par,
                                     const std::vector<double>& params, double pd_floor) {
  const Mat<double> g = par.realize(params);
  const auto ev = symmetric_eigenvalues(g);
  if (*std::min_element(ev.begin(), ev.end()) < pd_floor) return {{}, false};
  const auto g_inv = inverse(g);
  if (!g_inv) return {{}, false};
  const Ten3<double> c = lift_tensor<double>(alg.c());
  const Mat<double> dd = lift_matrix<double>(d);
  Vec<double> div = divergence_closed_form(c, g, *g_inv, dd);
  for (double& v : div) v *= 2;  // report 2 g(div S, X_k)
  return {std::move(div), true};
}

Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("simplest_rational_in: empty interval");
  if (sign(lo) <= 0 && sign(hi) >= 0) return Rational(0);
  if (sign(hi) < 0) return -simplest_rational_in(-hi, -lo);
  // Now 0 < lo <= hi: Stern-Brocot / continued-fraction walk.
  Rational a = lo, b = hi;
  std::vector<Integer> terms;
  Rational num(0), den(1);  // running value rebuilt at the end
  while (true) {
    Integer fa = a.get_num() / a.get_den();  // floor, a > 0
    Integer fb = b.get_num() / b.get_den();
    if (fa < fb || Rational(fa) == a) {
      // An integer sits inside [a, b]; the simplest choice is floor(a) unless
      // a is above it, in which case floor(a)+1 <= b is available.
      Integer pick = (Rational(fa) == a) ? fa : fa + 1;
      terms.push_back(pick);
      break;
    }
    terms.push_back(fa);
    const Rational ra = a - Rational(fa);
    const Rational rb = b - Rational(fb);
    // ra, rb in (0,1); recurse on reciprocals with the interval flipped.
    a = Rational(1) / rb;
    b = Rational(1) / ra;
  }
  Rational value(terms.back());
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it)
    value = Rational(*it) + Rational(1) / value;
  return value;
}

Rational rationalize_near(double x, double window) {
  Rational center;
  mpq_set_d(center.get_mpq_t(), x);
  Rational w;
  mpq_set_d(w.get_mpq_t(), window);
  return simplest_rational_in(center - w, center + w);
}

std::vector<Rational> rationalize_vector(const std::vector<double>& x, double window) {
  const int n = static_cast<int>(x.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return x[a] < x[b]; });

  Rational w;
  mpq_set_d(w.get_mpq_t(), window);
  std::vector<Rational> out(n, Rational(0));
  int i = 0;
  while (i < n) {
    int j = i;
    while (j + 1 < n && x[order[j + 1]] - x[order[j]] <= window) ++j;
    Rational lo, hi;
    mpq_set_d(lo.get_mpq_t(), x[order[j]]);  // max of the group
    mpq_set_d(hi.get_mpq_t(), x[order[i]]);  // min of the group
    lo -= w;
    hi += w;
    if (lo <= hi) {
      const Rational r = simplest_rational_in(lo, hi);
      for (int k = i; k <= j; ++k) out[order[k]] = r;
    } else {
      // The chain spread exceeds the window; round each entry on its own.
      for (int k = i; k <= j; ++k) out[order[k]] = rationalize_near(x[order[k]], window);
    }
    i = j + 1;
  }
  return out;
}

SearchResult find_div_free_family(const LieAlgebra& alg, const Mat<Rational>& d,
                                  const MetricParametrization& par, const SearchOptions& opt) {
  SearchResult result;
  const int p = static_cast<int>(par.free_entries.size());
  const Ten3<double> c = lift_tensor<double>(alg.c());
  const Mat<double> dd = lift_matrix<double>(d);

  auto evaluate = [&](const std::vector<double>& params,
                      std::vector<double>& out) -> bool {
    const Mat<double> g = par.realize(params);
    const auto g_inv = inverse(g);
    if (!g_inv) return false;
    out = divergence_closed_form(c, g, *g_inv, dd);
    for (double& v : out) v *= 2;
    for (double v : out)
      if (!std::isfinite(v)) return false;
    return true;
  };

  for (int s = 0; s < opt.seeds; ++s) {
    ++result.attempted;
    std::vector<double> x = halton_point(opt.seed_offset + static_cast<std::uint64_t>(s), par);
    std::vector<double> f;
    if (!evaluate(x, f)) continue;

    double mu = 1e-3;
    int iters = 0;
    for (; iters < opt.max_iterations; ++iters) {
      if (max_abs(f) < 1e-15) break;
      // Central-difference Jacobian.
      std::vector<std::vector<double>> jac(f.size(), std::vector<double>(p, 0.0));
      bool jac_ok = true;
      for (int k = 0; k < p && jac_ok; ++k) {
        const double h = 1e-6 * std::max(1.0, std::abs(x[k]));
        std::vector<double> xp = x, xm = x, fp, fm;
        xp[k] += h;
        xm[k] -= h;
        if (!evaluate(xp, fp) || !evaluate(xm, fm)) {
          jac_ok = false;
          break;
        }
        for (std::size_t r = 0; r < f.size(); ++r) jac[r][k] = (fp[r] - fm[r]) / (2 * h);
      }
      if (!jac_ok) break;
      const std::vector<double> delta = lm_step(jac, f, mu);
      std::vector<double> xn = x;
      for (int k = 0; k < p; ++k) xn[k] += delta[k];
      std::vector<double> fn;
      if (evaluate(xn, fn) && max_abs(fn) < max_abs(f)) {
        x = std::move(xn);
        f = std::move(fn);
        mu = std::max(mu * 0.3, 1e-12);
      } else {
        mu *= 4;
        if (mu > 1e8) break;
      }
    }

    if (max_abs(f) > opt.tol) continue;

    const Mat<double> g = par.realize(x);
    const auto ev = symmetric_eigenvalues(g);
    if (*std::min_element(ev.begin(), ev.end()) < opt.pd_floor) {
      ++result.rejected_indefinite;
      continue;
    }

    bool duplicate = false;
    for (const auto& sol : result.solutions) {
      double dist = 0;
      for (int k = 0; k < p; ++k) dist += (sol.params[k] - x[k]) * (sol.params[k] - x[k]);
      if (std::sqrt(dist) < opt.dedup_distance) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) {
      ++result.duplicates;
      continue;
    }

    SearchSolution sol;
    sol.params = x;
    sol.residual_norm = max_abs(f);
    sol.iterations = iters;
    sol.exact_verified = false;
    if (opt.rationalize) {
      std::vector<Rational> rp = rationalize_vector(x, opt.rational_window);
      const Mat<Rational> gr = par.realize_exact(rp);
      bool pd = true;
      for (const Rational& minor : leading_principal_minors(gr))
        if (sign(minor) <= 0) pd = false;
      if (pd) {
        const auto gr_inv = inverse(gr);
        if (gr_inv) {
          const Vec<Rational> exact = divergence_closed_form(alg.c(), gr, *gr_inv, d);
          bool zero = true;
          for (const Rational& v : exact)
            if (v != 0) zero = false;
          sol.exact_verified = zero;
          sol.rational_params = std::move(rp);
        }
      }
    }
    result.solutions.push_back(std::move(sol));
    ++result.converged;
  }

  std::sort(result.solutions.begin(), result.solutions.end(),
            [](const SearchSolution& a, const SearchSolution& b) { return a.params < b.params; });
  return result;
}

}  // namespace liesol
