#pragma once

#include <cstdint>
#include <vector>

namespace repgrowth {

/// Integer lattice in Z^ambient, stored as a row-style Hermite normal
/// form basis (pivots positive, entries above each pivot reduced).
struct LatticeBasis {
  int ambient = 0;
  std::vector<std::vector<int64_t>> rows;  // rank x ambient, echelon
  std::vector<int> pivot_cols;             // one per row, increasing

  int rank() const { return static_cast<int>(rows.size()); }
  bool spans() const { return rank() == ambient; }

  /// Index of the lattice in Z^ambient when spanning, 0 otherwise.
  int64_t covolume() const;

  /// Membership test by back substitution.
  bool contains(std::vector<int64_t> v) const;
};

/// Hermite normal form of the lattice generated by the given rows.
LatticeBasis hermite_lattice(std::vector<std::vector<int64_t>> generators, int ambient);

}  // namespace repgrowth
