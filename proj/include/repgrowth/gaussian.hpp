#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "repgrowth/lattice.hpp"
#include "repgrowth/tensor_growth.hpp"

namespace repgrowth {

/// Exact first and second moments of the single-step weight distribution
/// (a uniform draw of one of the dim V weights, with multiplicity),
/// together with the step lattice and the quadratic form of the local
/// Gaussian approximation.
struct MomentData {
  int r = 0;
  std::vector<Rational> mean;
  std::vector<std::vector<Rational>> covariance;
  std::vector<double> mean_d;

  Weight base_point;          // lex-least weight of V; anchors the coset
  LatticeBasis step_lattice;  // generated by the weight differences
  bool spanning = false;
  int64_t covolume = 0;

  Eigen::MatrixXd sigma;  // covariance in doubles
  Eigen::MatrixXd q;      // (pseudo)inverse of sigma on its span
  double det_sigma = 0.0;  // product of the nonzero eigenvalues
  double q_residual = 0.0;
  std::vector<double> null_direction;  // unit kernel vector when degenerate
};

MomentData weight_moments(const RepSpec& spec);

/// Throws DegenerateModelError naming the null direction when the step
/// lattice does not span.
void require_spanning(const MomentData& md);

/// Local limit estimate of the coefficient of chi in the normalized n-th
/// power character: covol * exp(-Q(chi - n mean)/(2n)) / sqrt(det(2 pi n
/// Sigma)).  Exactly zero off the reachable coset and under deep
/// exponential underflow.  Requires a spanning step lattice.
double local_clt_weight_estimate(const MomentData& md, int64_t n, const Weight& chi);

/// Gaussian estimate of the normalized multiplicity a_lambda / dim^n via
/// inclusion-exclusion over subsets of positive roots.  Supported for
/// u <= 10 positive roots.
double approx_a_lambda(const RepSpec& spec, const MomentData& md, int64_t n, const Weight& lambda);

/// Gaussian estimate of b_n / dim^n: approx_a_lambda summed over the
/// dominant coset points with Q(lambda - n mean) <= 2 n truncation.
double approx_b_n(const RepSpec& spec, const MomentData& md, int64_t n, double truncation = 40.0);

struct FitResult {
  int n_lo = 0;
  int n_hi = 0;
  double r_hat = 0.0;
  double c_hat = 0.0;
  double residual_rms = 0.0;
  double target = 0.0;  // -u/2
};

/// Least squares of log b_normalized against log n over the window.
/// Every n in [n_lo, n_hi] must be present with a positive value, and the
/// window must satisfy n_hi - n_lo >= 5.
FitResult fit_exponent(const std::vector<GrowthRow>& rows, int n_lo, int n_hi, double target);

struct CompareRow {
  std::string kind;  // "b" or "a"
  int n = 0;
  Weight lambda;            // kind "a" only
  double exact_value = 0.0;  // normalized by dim^n
  double approx_value = 0.0;
  bool has_ratio = false;
  double ratio = 0.0;
};

/// Exact-vs-Gaussian table: one "b" row per n, plus "a" rows at the
/// dominant coset points nearest 0 and floor(sqrt(n)) * delta.
std::vector<CompareRow> compare_report(const RepSpec& spec, const std::vector<int>& n_list,
                                       double truncation = 40.0);

}  // namespace repgrowth
