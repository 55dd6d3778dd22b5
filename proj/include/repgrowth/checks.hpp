#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "repgrowth/tensor_growth.hpp"

namespace repgrowth {

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string witness;  // empty on pass
};

struct CheckReport {
  std::vector<CheckItem> items;

  bool all_pass() const {
    for (const auto& item : items)
      if (!item.pass) return false;
    return true;
  }
};

/// Structural invariants of the tensor power decomposition for
/// n = 1..n_max (n_max <= 6; the peel route is exponential):
///   - the dual-route decompositions agree (extract vs peel),
///   - sum of a_lambda * dim(lambda) returns dim(V)^n exactly,
///   - chi^n is Weyl invariant,
///   - the difference transform is delta-shifted anti-invariant, with
///     wall terms absent.
/// Plus seeded random character-ring checks (commutativity,
/// associativity, mass multiplicativity).
CheckReport run_power_checks(const RepSpec& spec, int n_max, uint64_t seed);

/// Invariants of a single serialized character (Weyl invariance, clean
/// nonnegative extraction, agreement of both decomposition routes,
/// anti-invariance of the difference transform).
CheckReport run_character_checks(const Character& chi);

}  // namespace repgrowth
