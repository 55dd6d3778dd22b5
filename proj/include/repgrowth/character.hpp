#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "repgrowth/cartan.hpp"
#include "repgrowth/numeric.hpp"
#include "repgrowth/weight.hpp"

namespace repgrowth {

/// Which convolution backend char_mul uses.  `automatic` picks dense when
/// the bounding box of the product support is small enough to pay off.
enum class MulBackend { automatic, sparse, dense };

/// Element of the group algebra of the weight lattice: finitely many
/// weights with coefficients.  Coeff is BigInt for exact work and double
/// for the normalized (probability) mode.
template <class Coeff>
class CharacterT {
 public:
  using Terms = std::unordered_map<Weight, Coeff, WeightHash>;

  explicit CharacterT(const RootDatum* datum) : datum_(datum) {}

  const RootDatum* datum() const { return datum_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  size_t support_size() const { return terms_.size(); }

  Coeff coeff(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  /// Accumulate; exact zeros are pruned so support stays minimal.
  void add(const Weight& w, const Coeff& c) {
    if (c == Coeff(0)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Coeff(0)) terms_.erase(it);
    }
  }

  void set(const Weight& w, Coeff c) {
    if (c == Coeff(0))
      terms_.erase(w);
    else
      terms_[w] = std::move(c);
  }

  /// Sum of all coefficients (the dimension for genuine characters).
  Coeff mass() const {
    Coeff s(0);
    for (const auto& [w, c] : terms_) s += c;
    return s;
  }

  /// Terms in lexicographic weight order, for deterministic output.
  std::vector<std::pair<Weight, Coeff>> sorted_terms() const {
    std::vector<std::pair<Weight, Coeff>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

 private:
  const RootDatum* datum_;
  Terms terms_;
};

using Character = CharacterT<BigInt>;
using RealCharacter = CharacterT<double>;

template <class Coeff>
CharacterT<Coeff> monomial(const RootDatum* rd, const Weight& w, Coeff c = Coeff(1)) {
  CharacterT<Coeff> f(rd);
  f.add(w, c);
  return f;
}

namespace detail {

template <class Coeff>
void require_same_datum(const CharacterT<Coeff>& a, const CharacterT<Coeff>& b) {
  if (a.datum() != b.datum())
    throw ConfigError("character operands belong to different root data");
}

// Dense convolution over the bounding box of the product support.  Same
// arithmetic as the sparse path, array accumulation instead of hashing.
template <class Coeff>
CharacterT<Coeff> mul_dense(const CharacterT<Coeff>& a, const CharacterT<Coeff>& b) {
  const int r = a.datum()->rank();
  std::vector<int64_t> lo(static_cast<size_t>(r)), hi(static_cast<size_t>(r));
  auto box = [&](const CharacterT<Coeff>& f, std::vector<int64_t>& fl, std::vector<int64_t>& fh) {
    bool first = true;
    for (const auto& [w, c] : f.terms()) {
      for (int i = 0; i < r; ++i) {
        if (first || w[i] < fl[static_cast<size_t>(i)]) fl[static_cast<size_t>(i)] = w[i];
        if (first || w[i] > fh[static_cast<size_t>(i)]) fh[static_cast<size_t>(i)] = w[i];
      }
      first = false;
    }
  };
  std::vector<int64_t> al(static_cast<size_t>(r)), ah(static_cast<size_t>(r)),
      bl(static_cast<size_t>(r)), bh(static_cast<size_t>(r));
  box(a, al, ah);
  box(b, bl, bh);
  size_t cells = 1;
  std::vector<size_t> stride(static_cast<size_t>(r));
  for (int i = r - 1; i >= 0; --i) {
    lo[static_cast<size_t>(i)] = al[static_cast<size_t>(i)] + bl[static_cast<size_t>(i)];
    hi[static_cast<size_t>(i)] = ah[static_cast<size_t>(i)] + bh[static_cast<size_t>(i)];
    stride[static_cast<size_t>(i)] = cells;
    cells *= static_cast<size_t>(hi[static_cast<size_t>(i)] - lo[static_cast<size_t>(i)] + 1);
  }
  std::vector<Coeff> grid(cells, Coeff(0));
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      size_t idx = 0;
      for (int i = 0; i < r; ++i)
        idx += stride[static_cast<size_t>(i)] *
               static_cast<size_t>(wa[i] + wb[i] - lo[static_cast<size_t>(i)]);
      grid[idx] += ca * cb;
    }
  }
  CharacterT<Coeff> out(a.datum());
  for (size_t idx = 0; idx < cells; ++idx) {
    if (grid[idx] == Coeff(0)) continue;
    Weight w(r);
    size_t rest = idx;
    for (int i = 0; i < r; ++i) {
      size_t q = rest / stride[static_cast<size_t>(i)];
      rest %= stride[static_cast<size_t>(i)];
      w[i] = static_cast<int32_t>(lo[static_cast<size_t>(i)] + static_cast<int64_t>(q));
    }
    out.set(w, std::move(grid[idx]));
  }
  return out;
}

template <class Coeff>
bool dense_pays_off(const CharacterT<Coeff>& a, const CharacterT<Coeff>& b) {
  const int r = a.datum()->rank();
  if (r > 3 || a.empty() || b.empty()) return false;
  const size_t limit = sizeof(Coeff) <= 8 ? (size_t{1} << 22) : (size_t{1} << 19);
  size_t cells = 1;
  for (int i = 0; i < r; ++i) {
    int64_t lo = INT64_MAX, hi = INT64_MIN;
    for (const auto* f : {&a, &b}) {
      int64_t flo = INT64_MAX, fhi = INT64_MIN;
      for (const auto& [w, c] : f->terms()) {
        flo = std::min<int64_t>(flo, w[i]);
        fhi = std::max<int64_t>(fhi, w[i]);
      }
      lo = (lo == INT64_MAX) ? flo : lo + flo;
      hi = (hi == INT64_MIN) ? fhi : hi + fhi;
    }
    cells *= static_cast<size_t>(hi - lo + 1);
    if (cells > limit) return false;
  }
  return 4 * a.support_size() * b.support_size() >= cells;
}

}  // namespace detail

template <class Coeff>
CharacterT<Coeff> char_add(const CharacterT<Coeff>& a, const CharacterT<Coeff>& b) {
  detail::require_same_datum(a, b);
  CharacterT<Coeff> out = a;
  for (const auto& [w, c] : b.terms()) out.add(w, c);
  return out;
}

template <class Coeff>
CharacterT<Coeff> char_scale(const CharacterT<Coeff>& a, const Coeff& k) {
  CharacterT<Coeff> out(a.datum());
  if (k == Coeff(0)) return out;
  for (const auto& [w, c] : a.terms()) out.set(w, c * k);
  return out;
}

template <class Coeff>
CharacterT<Coeff> char_mul(const CharacterT<Coeff>& a, const CharacterT<Coeff>& b,
                           MulBackend backend = MulBackend::automatic) {
  detail::require_same_datum(a, b);
  if (backend == MulBackend::dense ||
      (backend == MulBackend::automatic && detail::dense_pays_off(a, b)))
    return detail::mul_dense(a, b);
  CharacterT<Coeff> out(a.datum());
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) out.add(wa + wb, ca * cb);
  return out;
}

/// Multiplies by prod over positive roots of (1 - e^{-alpha}), one sparse
/// pass per root: g(w) = f(w) - f(w + alpha).
template <class Coeff>
CharacterT<Coeff> apply_root_difference(const CharacterT<Coeff>& f) {
  const RootDatum* rd = f.datum();
  CharacterT<Coeff> cur = f;
  for (const auto& root : rd->positive_roots()) {
    CharacterT<Coeff> next(rd);
    for (const auto& [w, c] : cur.terms()) {
      next.add(w, c);
      next.add(w - root.fund, -c);
    }
    cur = std::move(next);
  }
  return cur;
}

namespace detail {

inline bool coeff_close(const BigInt& a, const BigInt& b, double) { return a == b; }
inline bool coeff_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace detail

/// True when every Weyl orbit is present with constant coefficient.
/// `tol` matters only for real coefficients.
template <class Coeff>
bool is_weyl_invariant(const CharacterT<Coeff>& f, double tol = 1e-9) {
  const RootDatum& rd = *f.datum();
  std::map<Weight, size_t, WeightLess> orbit_terms;
  for (const auto& [w, c] : f.terms()) {
    Weight dom = to_dominant(rd, w).weight;
    if (!detail::coeff_close(c, f.coeff(dom), tol)) return false;
    ++orbit_terms[dom];
  }
  for (const auto& [dom, count] : orbit_terms)
    if (count != weyl_orbit(rd, dom).size()) return false;
  return true;
}

/// Exact character scaled into doubles (coefficient c becomes c * scale).
RealCharacter to_real(const Character& f, double scale = 1.0);

/// Multiplicities of the dominant weights of the irreducible with the
/// given highest weight, by the Freudenthal recursion.  Exact.
std::map<Weight, BigInt, WeightLess> dominant_weight_multiplicities(const RootDatum& rd,
                                                                    const Weight& highest);

/// Full character of the irreducible with the given highest weight.
Character irreducible_character(const RootDatum& rd, const Weight& highest);

/// Text form, one term per line: "coeff : k1 k2 ... kr", weights in
/// lexicographic order.  Blank lines and '#' comments are permitted.
void write_character(std::ostream& os, const Character& f);
Character read_character(std::istream& is, const RootDatum* rd);

}  // namespace repgrowth
