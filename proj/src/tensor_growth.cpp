#include "repgrowth/tensor_growth.hpp"

#include <chrono>
#include <cmath>
#include <unordered_map>

namespace repgrowth {

RepSpec::RepSpec(std::shared_ptr<const RootDatum> datum_in, std::vector<Summand> summands_in)
    : datum(std::move(datum_in)), summands(std::move(summands_in)) {
  if (!datum) throw ConfigError("representation needs a root datum");
  if (summands.empty()) throw ConfigError("representation needs at least one summand");
  for (size_t k = 0; k < summands.size(); ++k) {
    const auto& s = summands[k];
    const std::string at = "rep[" + std::to_string(k) + "]";
    if (s.highest_weight.size() != datum->rank())
      throw ConfigError(at + ": highest weight has " + std::to_string(s.highest_weight.size()) +
                        " coordinates, expected " + std::to_string(datum->rank()) + " for " +
                        datum->type().str());
    if (!is_dominant(*datum, s.highest_weight))
      throw ConfigError(at + ": highest weight " + s.highest_weight.str() + " is not dominant");
    if (s.multiplicity < 1) throw ConfigError(at + ": multiplicity must be >= 1");
  }
}

BigInt rep_dimension(const RepSpec& spec) {
  BigInt d = 0;
  for (const auto& s : spec.summands)
    d += BigInt(s.multiplicity) * weyl_dimension(*spec.datum, s.highest_weight);
  return d;
}

Character rep_character(const RepSpec& spec) {
  Character chi(spec.datum.get());
  for (const auto& s : spec.summands) {
    Character irr = irreducible_character(*spec.datum, s.highest_weight);
    for (const auto& [w, c] : irr.terms()) chi.add(w, c * s.multiplicity);
  }
  return chi;
}

Decomposition extract_multiplicities(const Character& chi) {
  const RootDatum& rd = *chi.datum();
  Character diff = apply_root_difference(chi);
  Decomposition dec;
  for (const auto& [w, c] : diff.terms()) {
    if (!is_dominant(rd, w)) continue;
    if (c < 0)
      throw InvariantError("negative multiplicity " + c.str() + " at " + w.str() +
                           ": input is not a genuine character");
    dec.mult[w] = c;
    dec.b += c;
  }
  return dec;
}

RealDecomposition extract_multiplicities(const RealCharacter& chi, double negative_tol,
                                         double drop_tol) {
  const RootDatum& rd = *chi.datum();
  RealCharacter diff = apply_root_difference(chi);
  RealDecomposition dec;
  for (const auto& [w, c] : diff.terms()) {
    if (!is_dominant(rd, w)) continue;
    if (c < -negative_tol)
      throw InvariantError("negative multiplicity " + std::to_string(c) + " at " + w.str() +
                           ": beyond rounding tolerance");
    if (std::abs(c) <= drop_tol) continue;
    dec.mult[w] = c;
    dec.b += c;
  }
  return dec;
}

Decomposition peel_oracle(const Character& chi) {
  const RootDatum& rd = *chi.datum();
  Character work = chi;
  Decomposition dec;
  std::unordered_map<Weight, Character, WeightHash> cache;
  int64_t guard = 1000000;
  while (!work.empty()) {
    // maximal remaining weight under height-then-lex
    bool first = true;
    Weight top;
    Rational top_h;
    for (const auto& [w, c] : work.terms()) {
      Rational h = rd.height(w);
      if (first || h > top_h || (h == top_h && top < w)) {
        top = w;
        top_h = h;
        first = false;
      }
    }
    if (!is_dominant(rd, top))
      throw InvariantError("peel pivot " + top.str() + " is not dominant");
    BigInt a = work.coeff(top);
    if (a <= 0)
      throw InvariantError("peel pivot " + top.str() + " has nonpositive coefficient " + a.str());
    auto it = cache.find(top);
    if (it == cache.end()) it = cache.emplace(top, irreducible_character(rd, top)).first;
    for (const auto& [w, c] : it->second.terms()) work.add(w, -a * c);
    dec.mult[top] += a;
    dec.b += a;
    if (--guard == 0) throw InvariantError("peel did not terminate");
  }
  return dec;
}

namespace {

uint64_t estimate_bytes(const Character& chi) {
  uint64_t total = 0;
  const uint64_t per_node = sizeof(Weight) + sizeof(BigInt) + 32;  // bucket + hashing overhead
  for (const auto& [w, c] : chi.terms()) {
    total += per_node;
    const uint64_t limbs = c.backend().size();
    if (limbs > 2) total += 8 * limbs;
  }
  return total;
}

uint64_t estimate_bytes(const RealCharacter& chi) {
  return chi.support_size() * (sizeof(Weight) + 8 + 32);
}

double now_seconds() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

}  // namespace

GrowthSeries growth_series(const RepSpec& spec, const GrowthOptions& options) {
  if (options.n_max < 1) throw ConfigError("n_max must be >= 1");
  const RootDatum& rd = *spec.datum;
  GrowthSeries series;
  series.mode = options.mode;

  const BigInt dim = rep_dimension(spec);
  const Character chi_v = rep_character(spec);

  if (options.mode == Mode::exact) {
    Character chi = chi_v;
    BigInt dim_pow = dim;
    for (int n = 1; n <= options.n_max; ++n) {
      const double t0 = now_seconds();
      if (n > 1) {
        chi = char_mul(chi, chi_v);
        dim_pow *= dim;
      }
      Decomposition dec = extract_multiplicities(chi);
      BigInt conserved = 0;
      for (const auto& [w, m] : dec.mult) conserved += m * weyl_dimension(rd, w);
      if (conserved != dim_pow)
        throw InvariantError("dimension conservation failed at n=" + std::to_string(n) + ": " +
                             conserved.str() + " != " + dim_pow.str());
      GrowthRow row;
      row.n = n;
      row.b_exact = dec.b;
      row.b_normalized = big_ratio(dec.b, dim_pow);
      row.support_size = static_cast<int64_t>(chi.support_size());
      row.seconds = now_seconds() - t0;
      series.rows.push_back(std::move(row));
      if (estimate_bytes(chi) > options.memory_budget_bytes) {
        series.truncated = n < options.n_max;
        break;
      }
    }
  } else {
    const RealCharacter chi_v_norm = to_real(chi_v, 1.0 / big_ratio(dim, 1));
    RealCharacter chi = chi_v_norm;
    for (int n = 1; n <= options.n_max; ++n) {
      const double t0 = now_seconds();
      if (n > 1) chi = char_mul(chi, chi_v_norm);
      series.max_mass_drift = std::max(series.max_mass_drift, std::abs(chi.mass() - 1.0));
      RealDecomposition dec = extract_multiplicities(chi);
      GrowthRow row;
      row.n = n;
      row.b_normalized = dec.b;
      row.support_size = static_cast<int64_t>(chi.support_size());
      row.seconds = now_seconds() - t0;
      series.rows.push_back(std::move(row));
      if (estimate_bytes(chi) > options.memory_budget_bytes) {
        series.truncated = n < options.n_max;
        break;
      }
    }
  }
  return series;
}

}  // namespace repgrowth
