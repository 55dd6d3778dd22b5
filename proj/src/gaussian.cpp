#include "repgrowth/gaussian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <functional>

namespace repgrowth {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxSubsetRoots = 10;   // 2^u inclusion-exclusion cap
constexpr double kExpCutoff = 700.0;  // exp(-x) underflows to 0 past here

// Gaussian lattice density without the coset membership test; callers
// guarantee the point lies on the reachable coset.
double gauss_density(const MomentData& md, int64_t n, const Weight& chi) {
  const int r = md.r;
  Eigen::VectorXd x(r);
  for (int i = 0; i < r; ++i)
    x(i) = static_cast<double>(chi[i]) - static_cast<double>(n) * md.mean_d[static_cast<size_t>(i)];
  const double e = x.dot(md.q * x) / (2.0 * static_cast<double>(n));
  if (e >= kExpCutoff) return 0.0;
  const double norm = static_cast<double>(md.covolume) /
                      (std::pow(2.0 * kPi * static_cast<double>(n), 0.5 * r) * std::sqrt(md.det_sigma));
  return norm * std::exp(-e);
}

std::vector<int64_t> coset_offset(const MomentData& md, int64_t n, const Weight& w) {
  std::vector<int64_t> v(static_cast<size_t>(md.r));
  for (int i = 0; i < md.r; ++i)
    v[static_cast<size_t>(i)] = static_cast<int64_t>(w[i]) - n * md.base_point[i];
  return v;
}

// Signed offsets sum_{alpha in S} alpha over all subsets of the positive
// roots, in mask order.
struct SubsetTable {
  std::vector<Weight> offset;
  std::vector<int8_t> sign;
};

SubsetTable build_subsets(const RootDatum& rd) {
  if (rd.u() > kMaxSubsetRoots)
    throw UnsupportedError("inclusion-exclusion over 2^u subsets needs u <= " +
                           std::to_string(kMaxSubsetRoots) + ", got u = " + std::to_string(rd.u()));
  SubsetTable t;
  const size_t count = size_t{1} << rd.u();
  t.offset.resize(count, Weight::zero(rd.rank()));
  t.sign.resize(count, 1);
  for (size_t mask = 1; mask < count; ++mask) {
    const int low = std::countr_zero(mask);
    const size_t rest = mask & (mask - 1);
    t.offset[mask] = t.offset[rest] + rd.positive_roots()[static_cast<size_t>(low)].fund;
    t.sign[mask] = static_cast<int8_t>(-t.sign[rest]);
  }
  return t;
}

double subset_estimate(const MomentData& md, const SubsetTable& t, int64_t n, const Weight& lambda) {
  double sum = 0.0;
  for (size_t mask = 0; mask < t.offset.size(); ++mask)
    sum += t.sign[mask] * gauss_density(md, n, lambda + t.offset[mask]);
  return sum;
}

}  // namespace

void require_spanning(const MomentData& md) {
  if (md.spanning) return;
  std::string dir;
  for (size_t i = 0; i < md.null_direction.size(); ++i) {
    if (i) dir += " ";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", md.null_direction[i]);
    dir += buf;
  }
  throw DegenerateModelError(
      "weight distribution does not span the ambient lattice; covariance is singular along (" +
      dir + ")");
}

MomentData weight_moments(const RepSpec& spec) {
  const RootDatum& rd = *spec.datum;
  MomentData md;
  md.r = rd.rank();

  const Character chi = rep_character(spec);
  const auto terms = chi.sorted_terms();
  BigInt dim = 0;
  for (const auto& [w, m] : terms) dim += m;

  md.mean.assign(static_cast<size_t>(md.r), Rational(0));
  for (const auto& [w, m] : terms)
    for (int i = 0; i < md.r; ++i) md.mean[static_cast<size_t>(i)] += Rational(m) * w[i];
  for (auto& v : md.mean) v /= Rational(dim);

  md.covariance.assign(static_cast<size_t>(md.r), std::vector<Rational>(static_cast<size_t>(md.r), Rational(0)));
  for (const auto& [w, m] : terms)
    for (int i = 0; i < md.r; ++i)
      for (int j = 0; j < md.r; ++j)
        md.covariance[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
            Rational(m) * (Rational(w[i]) - md.mean[static_cast<size_t>(i)]) *
            (Rational(w[j]) - md.mean[static_cast<size_t>(j)]);
  for (auto& row : md.covariance)
    for (auto& v : row) v /= Rational(dim);

  md.mean_d.resize(static_cast<size_t>(md.r));
  for (int i = 0; i < md.r; ++i) md.mean_d[static_cast<size_t>(i)] = to_double(md.mean[static_cast<size_t>(i)]);

  md.base_point = terms.front().first;
  std::vector<std::vector<int64_t>> gens;
  gens.reserve(terms.size());
  for (const auto& [w, m] : terms) {
    std::vector<int64_t> g(static_cast<size_t>(md.r));
    for (int i = 0; i < md.r; ++i) g[static_cast<size_t>(i)] = w[i] - md.base_point[i];
    gens.push_back(std::move(g));
  }
  md.step_lattice = hermite_lattice(std::move(gens), md.r);
  md.spanning = md.step_lattice.spans();
  md.covolume = md.step_lattice.covolume();

  md.sigma.resize(md.r, md.r);
  for (int i = 0; i < md.r; ++i)
    for (int j = 0; j < md.r; ++j)
      md.sigma(i, j) = to_double(md.covariance[static_cast<size_t>(i)][static_cast<size_t>(j)]);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(md.sigma);
  const Eigen::VectorXd evals = es.eigenvalues();
  const Eigen::MatrixXd evecs = es.eigenvectors();
  const double tol = 1e-9 * std::max(1.0, std::abs(evals(md.r - 1)));
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(md.r);
  Eigen::MatrixXd proj = Eigen::MatrixXd::Zero(md.r, md.r);
  md.det_sigma = 1.0;
  int positive = 0;
  for (int k = 0; k < md.r; ++k) {
    if (evals(k) > tol) {
      inv(k) = 1.0 / evals(k);
      md.det_sigma *= evals(k);
      proj += evecs.col(k) * evecs.col(k).transpose();
      ++positive;
    } else if (md.null_direction.empty()) {
      md.null_direction.assign(evecs.col(k).data(), evecs.col(k).data() + md.r);
    }
  }
  md.q = evecs * inv.asDiagonal() * evecs.transpose();
  md.q_residual = (md.q * md.sigma - proj).cwiseAbs().maxCoeff();
  if (positive != md.step_lattice.rank())
    throw InvariantError("covariance rank " + std::to_string(positive) +
                         " disagrees with step lattice rank " +
                         std::to_string(md.step_lattice.rank()));
  return md;
}

double local_clt_weight_estimate(const MomentData& md, int64_t n, const Weight& chi) {
  if (n < 1) throw ConfigError("local limit estimate needs n >= 1");
  if (chi.size() != md.r) throw ConfigError("weight rank does not match the moment data");
  require_spanning(md);
  if (!md.step_lattice.contains(coset_offset(md, n, chi))) return 0.0;
  return gauss_density(md, n, chi);
}

double approx_a_lambda(const RepSpec& spec, const MomentData& md, int64_t n, const Weight& lambda) {
  if (n < 1) throw ConfigError("approx_a_lambda needs n >= 1");
  if (lambda.size() != md.r) throw ConfigError("weight rank does not match the moment data");
  require_spanning(md);
  const SubsetTable t = build_subsets(*spec.datum);
  // Positive roots lie in the step lattice whenever it spans, so every
  // shifted evaluation stays on the same coset as lambda.
  if (!md.step_lattice.contains(coset_offset(md, n, lambda))) return 0.0;
  return subset_estimate(md, t, n, lambda);
}

double approx_b_n(const RepSpec& spec, const MomentData& md, int64_t n, double truncation) {
  if (n < 1) throw ConfigError("approx_b_n needs n >= 1");
  if (truncation <= 0) throw ConfigError("truncation must be positive");
  require_spanning(md);
  const RootDatum& rd = *spec.datum;
  const SubsetTable t = build_subsets(rd);

  std::vector<int64_t> lo(static_cast<size_t>(md.r)), hi(static_cast<size_t>(md.r));
  double cells = 1.0;
  for (int i = 0; i < md.r; ++i) {
    const double center = static_cast<double>(n) * md.mean_d[static_cast<size_t>(i)];
    const double half = std::sqrt(2.0 * truncation * static_cast<double>(n) * md.sigma(i, i)) + 1.0;
    lo[static_cast<size_t>(i)] = static_cast<int64_t>(std::ceil(center - half));
    hi[static_cast<size_t>(i)] = static_cast<int64_t>(std::floor(center + half));
    if (i < rd.rank_ss()) lo[static_cast<size_t>(i)] = std::max<int64_t>(lo[static_cast<size_t>(i)], 0);
    if (hi[static_cast<size_t>(i)] < lo[static_cast<size_t>(i)]) return 0.0;
    cells *= static_cast<double>(hi[static_cast<size_t>(i)] - lo[static_cast<size_t>(i)] + 1);
  }
  if (cells > 2e8)
    throw UnsupportedError("dominant-cone enumeration would visit too many lattice points");

  double total = 0.0;
  int64_t visited = 0;
  Weight point(md.r);
  std::function<void(int)> walk = [&](int i) {
    if (i == md.r) {
      if (!md.step_lattice.contains(coset_offset(md, n, point))) return;
      Eigen::VectorXd x(md.r);
      for (int k = 0; k < md.r; ++k)
        x(k) = static_cast<double>(point[k]) -
               static_cast<double>(n) * md.mean_d[static_cast<size_t>(k)];
      if (x.dot(md.q * x) > 2.0 * truncation * static_cast<double>(n)) return;
      ++visited;
      total += subset_estimate(md, t, n, point);
      return;
    }
    for (int64_t v = lo[static_cast<size_t>(i)]; v <= hi[static_cast<size_t>(i)]; ++v) {
      point[i] = static_cast<int32_t>(v);
      walk(i + 1);
    }
  };
  walk(0);
  if (visited == 0)
    std::fprintf(stderr,
                 "approx_b_n: truncation radius excludes every dominant coset point at n=%lld\n",
                 static_cast<long long>(n));
  return total;
}

FitResult fit_exponent(const std::vector<GrowthRow>& rows, int n_lo, int n_hi, double target) {
  if (n_lo < 1 || n_hi <= n_lo) throw ConfigError("fit window must satisfy 1 <= n_lo < n_hi");
  if (n_hi - n_lo < 5)
    throw ConfigError("fit window [" + std::to_string(n_lo) + "," + std::to_string(n_hi) +
                      "] is shorter than 5");
  std::vector<double> xs, ys;
  for (const auto& row : rows) {
    if (row.n < n_lo || row.n > n_hi) continue;
    if (!(row.b_normalized > 0.0))
      throw ConfigError("b_normalized must be positive inside the fit window (n=" +
                        std::to_string(row.n) + ")");
    xs.push_back(std::log(static_cast<double>(row.n)));
    ys.push_back(std::log(row.b_normalized));
  }
  if (static_cast<int>(xs.size()) != n_hi - n_lo + 1)
    throw ConfigError("fit window [" + std::to_string(n_lo) + "," + std::to_string(n_hi) +
                      "] is not fully covered by the computed rows");

  const double m = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = m * sxx - sx * sx;
  if (denom <= 0) throw ConfigError("degenerate fit window");
  FitResult fit;
  fit.n_lo = n_lo;
  fit.n_hi = n_hi;
  fit.r_hat = (m * sxy - sx * sy) / denom;
  const double intercept = (sy - fit.r_hat * sx) / m;
  fit.c_hat = std::exp(intercept);  // multiplicative constant, not the log intercept
  double ss = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (intercept + fit.r_hat * xs[i]);
    ss += e * e;
  }
  fit.residual_rms = std::sqrt(ss / m);
  fit.target = target;
  return fit;
}

std::vector<CompareRow> compare_report(const RepSpec& spec, const std::vector<int>& n_list,
                                       double truncation) {
  std::vector<int> ns = n_list;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  std::vector<CompareRow> out;
  if (ns.empty()) return out;
  if (ns.front() < 1) throw ConfigError("compare needs n >= 1");

  const RootDatum& rd = *spec.datum;
  const MomentData md = weight_moments(spec);
  require_spanning(md);

  // Nearest dominant coset point to a target, by L-infinity distance with
  // lexicographic tie break.  The search box is wide enough to contain a
  // representative of every residue class.
  int64_t slack = 2;
  for (int i = 0; i < md.step_lattice.rank(); ++i)
    slack += md.step_lattice.rows[static_cast<size_t>(i)]
                              [static_cast<size_t>(md.step_lattice.pivot_cols[static_cast<size_t>(i)])];
  auto nearest_dominant = [&](int64_t n, const Weight& target) -> std::pair<bool, Weight> {
    bool found = false;
    Weight best;
    int64_t best_dist = 0;
    std::vector<int64_t> lo(static_cast<size_t>(md.r)), hi(static_cast<size_t>(md.r));
    for (int i = 0; i < md.r; ++i) {
      lo[static_cast<size_t>(i)] = target[i] - slack;
      hi[static_cast<size_t>(i)] = target[i] + slack;
      if (i < rd.rank_ss()) lo[static_cast<size_t>(i)] = std::max<int64_t>(lo[static_cast<size_t>(i)], 0);
    }
    Weight point(md.r);
    std::function<void(int)> walk = [&](int i) {
      if (i == md.r) {
        if (!md.step_lattice.contains(coset_offset(md, n, point))) return;
        int64_t dist = 0;
        for (int k = 0; k < md.r; ++k)
          dist = std::max<int64_t>(dist, std::llabs(static_cast<int64_t>(point[k]) - target[k]));
        if (!found || dist < best_dist || (dist == best_dist && point < best)) {
          found = true;
          best = point;
          best_dist = dist;
        }
        return;
      }
      for (int64_t v = lo[static_cast<size_t>(i)]; v <= hi[static_cast<size_t>(i)]; ++v) {
        point[i] = static_cast<int32_t>(v);
        walk(i + 1);
      }
    };
    walk(0);
    return {found, best};
  };

  const BigInt dim = rep_dimension(spec);
  const Character chi_v = rep_character(spec);
  Character chi = chi_v;
  BigInt dim_pow = dim;
  size_t next = 0;
  for (int n = 1; n <= ns.back() && next < ns.size(); ++n) {
    if (n > 1) {
      chi = char_mul(chi, chi_v);
      dim_pow *= dim;
    }
    if (ns[next] != n) continue;
    ++next;

    const Decomposition dec = extract_multiplicities(chi);
    CompareRow brow;
    brow.kind = "b";
    brow.n = n;
    brow.exact_value = big_ratio(dec.b, dim_pow);
    brow.approx_value = approx_b_n(spec, md, n, truncation);
    brow.has_ratio = brow.exact_value != 0.0;
    if (brow.has_ratio) brow.ratio = brow.approx_value / brow.exact_value;
    out.push_back(std::move(brow));

    const int32_t root_n = static_cast<int32_t>(std::floor(std::sqrt(static_cast<double>(n))));
    const std::vector<Weight> targets = {Weight::zero(md.r), root_n * rd.delta()};
    for (const Weight& target : targets) {
      auto [found, lam] = nearest_dominant(n, target);
      if (!found) continue;
      CompareRow arow;
      arow.kind = "a";
      arow.n = n;
      arow.lambda = lam;
      auto it = dec.mult.find(lam);
      arow.exact_value = it == dec.mult.end() ? 0.0 : big_ratio(it->second, dim_pow);
      arow.approx_value = approx_a_lambda(spec, md, n, lam);
      arow.has_ratio = arow.exact_value != 0.0;
      if (arow.has_ratio) arow.ratio = arow.approx_value / arow.exact_value;
      out.push_back(std::move(arow));
    }
  }
  return out;
}

}  // namespace repgrowth
