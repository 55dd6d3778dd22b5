#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "repgrowth/errors.hpp"

namespace repgrowth {

/// Hard cap on the total rank (semisimple + central torus).  Weights are
/// stored inline so the character maps stay allocation-free per key.
inline constexpr int kMaxRank = 12;

/// A weight in fundamental-weight coordinates, with torus coordinates
/// appended after the semisimple block.  Fixed-size storage, value type.
class Weight {
 public:
  Weight() = default;

  explicit Weight(int rank) : n_(check_rank(rank)) {}

  Weight(std::initializer_list<int32_t> coords) : n_(check_rank(static_cast<int>(coords.size()))) {
    int i = 0;
    for (int32_t v : coords) c_[i++] = v;
  }

  explicit Weight(const std::vector<int32_t>& coords)
      : n_(check_rank(static_cast<int>(coords.size()))) {
    for (int i = 0; i < n_; ++i) c_[i] = coords[static_cast<size_t>(i)];
  }

  static Weight zero(int rank) { return Weight(rank); }

  int size() const { return n_; }

  int32_t operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  int32_t& operator[](int i) { return c_[static_cast<size_t>(i)]; }

  friend Weight operator+(const Weight& a, const Weight& b) {
    Weight r(a.n_);
    for (int i = 0; i < a.n_; ++i) r.c_[static_cast<size_t>(i)] = a[i] + b[i];
    return r;
  }

  friend Weight operator-(const Weight& a, const Weight& b) {
    Weight r(a.n_);
    for (int i = 0; i < a.n_; ++i) r.c_[static_cast<size_t>(i)] = a[i] - b[i];
    return r;
  }

  friend Weight operator*(int32_t k, const Weight& a) {
    Weight r(a.n_);
    for (int i = 0; i < a.n_; ++i) r.c_[static_cast<size_t>(i)] = k * a[i];
    return r;
  }

  Weight operator-() const { return -1 * *this; }

  bool operator==(const Weight& o) const { return n_ == o.n_ && c_ == o.c_; }
  bool operator!=(const Weight& o) const { return !(*this == o); }

  /// Lexicographic order on coordinates (sizes compared first so mixed
  /// ranks still order totally; in practice sizes always match).
  bool operator<(const Weight& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (int i = 0; i < n_; ++i) {
      if (c_[static_cast<size_t>(i)] != o.c_[static_cast<size_t>(i)])
        return c_[static_cast<size_t>(i)] < o.c_[static_cast<size_t>(i)];
    }
    return false;
  }

  std::vector<int32_t> coords() const {
    return std::vector<int32_t>(c_.begin(), c_.begin() + n_);
  }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < n_; ++i) {
      if (i) s += ",";
      s += std::to_string(c_[static_cast<size_t>(i)]);
    }
    s += ")";
    return s;
  }

  size_t hash() const {
    // FNV-1a over the used coordinates.
    size_t h = 1469598103934665603ull;
    for (int i = 0; i < n_; ++i) {
      h ^= static_cast<size_t>(static_cast<uint32_t>(c_[static_cast<size_t>(i)]));
      h *= 1099511628211ull;
    }
    return h ^ static_cast<size_t>(n_);
  }

 private:
  static int check_rank(int rank) {
    if (rank < 0 || rank > kMaxRank)
      throw ConfigError("weight rank " + std::to_string(rank) + " outside supported range [0," +
                        std::to_string(kMaxRank) + "]");
    return rank;
  }

  std::array<int32_t, kMaxRank> c_{};
  int8_t n_ = 0;
};

struct WeightHash {
  size_t operator()(const Weight& w) const { return w.hash(); }
};

struct WeightLess {
  bool operator()(const Weight& a, const Weight& b) const { return a < b; }
};

}  // namespace repgrowth
