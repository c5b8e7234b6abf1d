#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "liesol/algebra.hpp"
#include "liesol/geometry.hpp"

namespace liesol {

/// Symmetric-metric family with selected free entries; everything else is
/// pinned to exact rational values.
struct MetricParametrization {
  int dim = 0;
  std::vector<std::pair<int, int>> free_entries;       // (i <= j), 0-based
  Mat<Rational> fixed;                                 // values of pinned entries
  std::vector<std::pair<double, double>> bounds;       // per free entry

  /// All n(n+1)/2 entries free; diagonal and off-diagonal bounds differ so
  /// seeds stay inside the positive cone most of the time.
  static MetricParametrization full(int dim, double diag_lo = 0.5, double diag_hi = 2.5,
                                    double off_lo = -0.8, double off_hi = 0.8);

  Mat<double> realize(const std::vector<double>& params) const;
  Mat<Rational> realize_exact(const std::vector<Rational>& params) const;
};

struct DivergenceSample {
  std::vector<double> components;  // 2 g(div S, X_k)
  bool positive_definite;          // false => components not meaningful
};

/// Floating-point evaluation of the closed-form divergence on one sample.
DivergenceSample divergence_residual(const LieAlgebra& alg, const Mat<Rational>& d,
                                     const MetricParametrization& par,
                                     const std::vector<double>& params, double pd_floor = 1e-8);

struct SearchOptions {
  int seeds = 100;
  double tol = 1e-10;              // residual max-norm acceptance
  double dedup_distance = 1e-6;    // in parameter space
  double pd_floor = 1e-8;          // eigenvalue floor during the search
  int max_iterations = 200;
  std::uint64_t seed_offset = 1;   // start index into the Halton sequence
  bool rationalize = true;
  double rational_window = 1e-6;   // simplest rational within +/- window
};

struct SearchSolution {
  std::vector<double> params;
  double residual_norm;
  int iterations;
  std::vector<Rational> rational_params;  // empty when not rationalized
  bool exact_verified;                    // rationalized point has div S = 0 exactly
};

struct SearchResult {
  std::vector<SearchSolution> solutions;
  int attempted = 0;
  int converged = 0;
  int rejected_indefinite = 0;
  int duplicates = 0;
};

/// Deterministic damped-Newton search for divergence-free metrics; seeds come
/// from a Halton sequence, results are deduplicated and sorted, and every hit
/// is re-verified with exact rationals after rounding when requested.
SearchResult find_div_free_family(const LieAlgebra& alg, const Mat<Rational>& d,
                                  const MetricParametrization& par, const SearchOptions& opt);

/// Simplest rational (minimal denominator, then minimal |numerator|) in
/// [lo, hi]; used to round floating solutions before exact re-verification.
Rational simplest_rational_in(const Rational& lo, const Rational& hi);
Rational rationalize_near(double x, double window);

/// Rounds a whole parameter vector; coordinates that agree within the window
/// are snapped to one common rational so exact ties survive the rounding.
std::vector<Rational> rationalize_vector(const std::vector<double>& x, double window);

}  // namespace liesol
