#include "repgrowth/checks.hpp"

#include <random>
#include <sstream>

namespace repgrowth {

namespace {

std::string diff_witness(const Character& a, const Character& b) {
  for (const auto& [w, c] : a.sorted_terms())
    if (b.coeff(w) != c)
      return w.str() + ": " + c.str() + " vs " + b.coeff(w).str();
  for (const auto& [w, c] : b.sorted_terms())
    if (a.coeff(w) != c)
      return w.str() + ": " + a.coeff(w).str() + " vs " + c.str();
  return "";
}

std::string decomposition_witness(const Decomposition& x, const Decomposition& y) {
  if (x.b != y.b) return "b: " + x.b.str() + " vs " + y.b.str();
  for (const auto& [w, m] : x.mult) {
    auto it = y.mult.find(w);
    if (it == y.mult.end() || it->second != m)
      return w.str() + ": " + m.str() + " vs " +
             (it == y.mult.end() ? std::string("0") : it->second.str());
  }
  for (const auto& [w, m] : y.mult)
    if (!x.mult.count(w)) return w.str() + ": 0 vs " + m.str();
  return "";
}

// Difference transform must be anti-invariant under the delta-shifted
// action; support on chamber walls must cancel entirely.
CheckItem anti_invariance_item(const std::string& name, const Character& chi) {
  CheckItem item{name, true, ""};
  const RootDatum& rd = *chi.datum();
  const Character diff = apply_root_difference(chi);
  for (const auto& [nu, c] : diff.sorted_terms()) {
    const DominantResult res = to_dominant_strict(rd, nu + rd.delta());
    if (res.sign == 0) {
      item.pass = false;
      item.witness = "wall term survives at " + nu.str() + " with coefficient " + c.str();
      return item;
    }
    const BigInt expect = res.sign * diff.coeff(res.weight - rd.delta());
    if (c != expect) {
      item.pass = false;
      item.witness = nu.str() + ": " + c.str() + " vs sign*partner " + expect.str();
      return item;
    }
  }
  return item;
}

Character random_character(const RootDatum* rd, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(-4, 4);
  std::uniform_int_distribution<int> coeff(1, 3);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<int> nterms(5, 10);
  Character f(rd);
  const int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Weight w(rd->rank());
    for (int i = 0; i < rd->rank(); ++i) w[i] = static_cast<int32_t>(coord(rng));
    f.add(w, BigInt((sign(rng) ? 1 : -1) * coeff(rng)));
  }
  if (f.empty()) f.add(Weight::zero(rd->rank()), 1);
  return f;
}

void append_ring_checks(CheckReport& report, const RootDatum* rd, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Character f = random_character(rd, rng);
  const Character g = random_character(rd, rng);
  const Character h = random_character(rd, rng);

  {
    CheckItem item{"ring_commutativity", true, ""};
    item.witness = diff_witness(char_mul(f, g), char_mul(g, f));
    item.pass = item.witness.empty();
    report.items.push_back(std::move(item));
  }
  {
    CheckItem item{"ring_associativity", true, ""};
    item.witness = diff_witness(char_mul(char_mul(f, g), h), char_mul(f, char_mul(g, h)));
    item.pass = item.witness.empty();
    report.items.push_back(std::move(item));
  }
  {
    CheckItem item{"mass_multiplicative", true, ""};
    const BigInt lhs = char_mul(f, g).mass();
    const BigInt rhs = f.mass() * g.mass();
    if (lhs != rhs) {
      item.pass = false;
      item.witness = lhs.str() + " vs " + rhs.str();
    }
    report.items.push_back(std::move(item));
  }
}

template <class Fn>
CheckItem guarded(const std::string& name, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return CheckItem{name, false, e.what()};
  }
}

}  // namespace

CheckReport run_power_checks(const RepSpec& spec, int n_max, uint64_t seed) {
  if (n_max < 1 || n_max > 6)
    throw ConfigError("check requires 1 <= n_max <= 6; the peel route is exponential in n");
  CheckReport report;
  const RootDatum& rd = *spec.datum;
  const Character chi_v = rep_character(spec);
  const BigInt dim = rep_dimension(spec);

  Character chi = chi_v;
  BigInt dim_pow = dim;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) {
      chi = char_mul(chi, chi_v);
      dim_pow *= dim;
    }
    const std::string tag = "[n=" + std::to_string(n) + "]";

    report.items.push_back(guarded("extract_equals_peel" + tag, [&] {
      CheckItem item{"extract_equals_peel" + tag, true, ""};
      item.witness = decomposition_witness(extract_multiplicities(chi), peel_oracle(chi));
      item.pass = item.witness.empty();
      return item;
    }));

    report.items.push_back(guarded("dimension_conservation" + tag, [&] {
      CheckItem item{"dimension_conservation" + tag, true, ""};
      BigInt total = 0;
      for (const auto& [w, m] : extract_multiplicities(chi).mult)
        total += m * weyl_dimension(rd, w);
      if (total != dim_pow) {
        item.pass = false;
        item.witness = total.str() + " vs " + dim_pow.str();
      }
      return item;
    }));

    report.items.push_back(guarded("weyl_invariant" + tag, [&] {
      const bool ok = is_weyl_invariant(chi);
      return CheckItem{"weyl_invariant" + tag, ok, ok ? "" : "orbit coefficients differ"};
    }));

    report.items.push_back(guarded("anti_invariance" + tag,
                                   [&] { return anti_invariance_item("anti_invariance" + tag, chi); }));
  }

  append_ring_checks(report, spec.datum.get(), seed);
  return report;
}

CheckReport run_character_checks(const Character& chi) {
  CheckReport report;

  report.items.push_back(guarded("weyl_invariant", [&] {
    const bool ok = is_weyl_invariant(chi);
    return CheckItem{"weyl_invariant", ok, ok ? "" : "orbit coefficients differ"};
  }));

  report.items.push_back(guarded("extract_nonnegative", [&] {
    extract_multiplicities(chi);
    return CheckItem{"extract_nonnegative", true, ""};
  }));

  report.items.push_back(guarded("extract_equals_peel", [&] {
    CheckItem item{"extract_equals_peel", true, ""};
    item.witness = decomposition_witness(extract_multiplicities(chi), peel_oracle(chi));
    item.pass = item.witness.empty();
    return item;
  }));

  report.items.push_back(
      guarded("anti_invariance", [&] { return anti_invariance_item("anti_invariance", chi); }));

  return report;
}

}  // namespace repgrowth
