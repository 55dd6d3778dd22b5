#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "repgrowth/character.hpp"

namespace repgrowth {

/// One irreducible summand of the generating representation.
struct Summand {
  Weight highest_weight;
  int64_t multiplicity = 1;
};

/// The representation V whose tensor powers are decomposed: a root datum
/// plus a multiset of dominant highest weights.
struct RepSpec {
  RepSpec(std::shared_ptr<const RootDatum> datum, std::vector<Summand> summands);

  std::shared_ptr<const RootDatum> datum;
  std::vector<Summand> summands;
};

BigInt rep_dimension(const RepSpec& spec);
Character rep_character(const RepSpec& spec);

/// Multiplicities of the irreducibles in a completely reducible module,
/// keyed by highest weight; b is the total count with multiplicity.
struct Decomposition {
  std::map<Weight, BigInt, WeightLess> mult;
  BigInt b = 0;
};

struct RealDecomposition {
  std::map<Weight, double, WeightLess> mult;
  double b = 0.0;
};

/// Reads multiplicities off the alternating-difference transform: after
/// multiplying by prod(1 - e^{-alpha}) the coefficient at a dominant
/// weight is exactly the multiplicity of that highest weight.  Negative
/// dominant coefficients mean the input was not a genuine character.
Decomposition extract_multiplicities(const Character& chi);

/// Floating variant.  Dominant coefficients below -negative_tol abort;
/// magnitudes up to drop_tol are treated as rounding residue and dropped.
RealDecomposition extract_multiplicities(const RealCharacter& chi, double negative_tol = 1e-8,
                                         double drop_tol = 1e-14);

/// Independent decomposition route: repeatedly subtract the full
/// irreducible character of the maximal remaining weight.  Maximality is
/// judged by height then lex, which refines the root order, so the pivot
/// is always a highest weight.  Exponential in n; intended for small
/// cross-checks against extract_multiplicities.
Decomposition peel_oracle(const Character& chi);

enum class Mode { exact, normalized };

struct GrowthRow {
  int n = 0;
  BigInt b_exact;             // exact mode only
  double b_normalized = 0.0;  // b_n / dim(V)^n in both modes
  int64_t support_size = 0;
  double seconds = 0.0;
};

struct GrowthOptions {
  Mode mode = Mode::exact;
  int n_max = 1;
  uint64_t memory_budget_bytes = uint64_t{8} << 30;
};

struct GrowthSeries {
  Mode mode = Mode::exact;
  std::vector<GrowthRow> rows;
  bool truncated = false;       // stopped early on the memory budget
  double max_mass_drift = 0.0;  // normalized mode: max |mass - 1| seen
};

/// Rows n = 1..n_max of the growth table for V^{tensor n}.  Exact mode
/// also verifies dimension conservation at every step.
GrowthSeries growth_series(const RepSpec& spec, const GrowthOptions& options);

}  // namespace repgrowth
