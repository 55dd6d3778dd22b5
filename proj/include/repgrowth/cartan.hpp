#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "repgrowth/numeric.hpp"
#include "repgrowth/weight.hpp"

namespace repgrowth {

/// One factor of a reductive group type: a simple family letter with a
/// rank, or T for a central torus factor.
struct CartanFactor {
  char family = 'A';  // one of A B C D E F G T
  int rank = 1;

  bool operator==(const CartanFactor&) const = default;
};

/// Product type parsed from strings like "A2xA1xT1".  Parsing is case
/// insensitive; B1 and C1 are normalized to A1.
class CartanType {
 public:
  CartanType() = default;
  explicit CartanType(std::vector<CartanFactor> factors);

  static CartanType parse(std::string_view text);

  const std::vector<CartanFactor>& factors() const { return factors_; }
  int rank_ss() const { return rank_ss_; }
  int rank_torus() const { return rank_torus_; }
  int rank() const { return rank_ss_ + rank_torus_; }

  std::string str() const;

  bool operator==(const CartanType&) const = default;

 private:
  std::vector<CartanFactor> factors_;
  int rank_ss_ = 0;
  int rank_torus_ = 0;
};

/// A positive root, carried in three coordinate systems at once.
struct PositiveRoot {
  Weight fund;                  // fundamental coordinates, torus block zero
  std::vector<int32_t> simple;  // coordinates in the simple roots
  std::vector<int32_t> coroot;  // coroot coordinates in the simple coroots
  int32_t d_alpha = 1;          // half squared length, short roots = 1
};

/// Root datum of a connected reductive group: Cartan matrix, positive
/// roots, symmetrizer and the derived bilinear data used everywhere else.
///
/// Convention: cartan(i, j) = <alpha_j, alpha_i^vee>, so the fundamental
/// coordinates of alpha_j are column j.  Weight vectors carry the
/// semisimple coordinates first (factor order) and torus coordinates last.
class RootDatum {
 public:
  explicit RootDatum(const CartanType& type);

  const CartanType& type() const { return type_; }
  int rank_ss() const { return type_.rank_ss(); }
  int rank_torus() const { return type_.rank_torus(); }
  int rank() const { return type_.rank(); }

  /// Number of positive roots.
  int u() const { return static_cast<int>(roots_.size()); }

  const std::vector<PositiveRoot>& positive_roots() const { return roots_; }

  int cartan(int i, int j) const { return cartan_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }

  /// Symmetrizer entry d_i = (alpha_i, alpha_i)/2, short roots = 1.
  int d(int i) const { return d_[static_cast<size_t>(i)]; }

  /// Simple root alpha_j as a weight (fundamental coordinates).
  const Weight& simple_root(int j) const { return simple_fund_[static_cast<size_t>(j)]; }

  /// Sum of fundamental weights; torus block zero.
  const Weight& delta() const { return delta_; }

  /// <w, beta^vee> for the positive root with the given index.
  int64_t pair_coroot(const Weight& w, int root_index) const;

  /// Symmetrized invariant form on the semisimple block, (w, alpha) for a
  /// positive root.  Always an integer.
  int64_t inner_with_root(const Weight& w, int root_index) const;

  /// Symmetrized invariant form (a, b); rational in general.
  Rational inner(const Weight& a, const Weight& b) const;

  /// Sum of the simple-root coordinates of the semisimple part of w.
  /// Strictly monotone along the root order, used to pick peel pivots.
  Rational height(const Weight& w) const;

  /// Entry (i, j) of the inverse Cartan matrix.
  const Rational& cartan_inverse(int i, int j) const {
    return cartan_inv_[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }

 private:
  CartanType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Rational>> cartan_inv_;
  std::vector<int> d_;
  std::vector<std::vector<Rational>> gram_;  // (omega_i, omega_j)
  std::vector<Weight> simple_fund_;
  std::vector<PositiveRoot> roots_;
  Weight delta_;
};

std::shared_ptr<const RootDatum> make_root_datum(const CartanType& type);

/// s_i(w) = w - w_i * alpha_i (0-based simple reflection index).
Weight simple_reflection(const RootDatum& rd, int i, const Weight& w);

bool is_dominant(const RootDatum& rd, const Weight& w);

struct DominantResult {
  Weight weight;
  int sign = 1;
};

/// Weyl conjugate of w into the dominant chamber; sign is the parity of
/// the reflection word used.  Weights on chamber walls return sign +1 or
/// -1 depending on the path taken; use to_dominant_strict when wall
/// detection matters.
DominantResult to_dominant(const RootDatum& rd, const Weight& w);

/// Same, but sign 0 whenever the dominant representative lies on a wall
/// (some semisimple coordinate is zero), i.e. the stabilizer is
/// nontrivial and alternating sums over the orbit cancel.
DominantResult to_dominant_strict(const RootDatum& rd, const Weight& w);

/// Reflection word recorded by the to_dominant walk, for testing.
std::vector<int> to_dominant_word(const RootDatum& rd, const Weight& w);

/// Full Weyl orbit of a dominant weight, sorted lexicographically.
std::vector<Weight> weyl_orbit(const RootDatum& rd, const Weight& dominant);

/// Weyl dimension formula; exact.
BigInt weyl_dimension(const RootDatum& rd, const Weight& highest);

}  // namespace repgrowth
