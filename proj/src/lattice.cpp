#include "repgrowth/lattice.hpp"

#include <algorithm>
#include <cstdlib>

#include "repgrowth/errors.hpp"

namespace repgrowth {

namespace {

// floor division, exact for negative numerators
int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void axpy(std::vector<int64_t>& x, int64_t k, const std::vector<int64_t>& y) {
  for (size_t i = 0; i < x.size(); ++i) x[i] += k * y[i];
}

}  // namespace

int64_t LatticeBasis::covolume() const {
  if (!spans()) return 0;
  int64_t det = 1;
  for (int i = 0; i < rank(); ++i)
    det *= rows[static_cast<size_t>(i)][static_cast<size_t>(pivot_cols[static_cast<size_t>(i)])];
  return det;
}

bool LatticeBasis::contains(std::vector<int64_t> v) const {
  if (static_cast<int>(v.size()) != ambient)
    throw Error("lattice membership: wrong vector length");
  for (int i = 0; i < rank(); ++i) {
    const auto& row = rows[static_cast<size_t>(i)];
    const int col = pivot_cols[static_cast<size_t>(i)];
    const int64_t p = row[static_cast<size_t>(col)];
    if (v[static_cast<size_t>(col)] % p != 0) return false;
    axpy(v, -v[static_cast<size_t>(col)] / p, row);
  }
  return std::all_of(v.begin(), v.end(), [](int64_t x) { return x == 0; });
}

LatticeBasis hermite_lattice(std::vector<std::vector<int64_t>> gen, int ambient) {
  for (const auto& g : gen)
    if (static_cast<int>(g.size()) != ambient) throw Error("lattice generator: wrong length");
  LatticeBasis basis;
  basis.ambient = ambient;

  size_t done = 0;  // rows of `gen` already promoted to the basis
  for (int col = 0; col < ambient && done < gen.size(); ++col) {
    // Euclid on the tail rows until at most one has a nonzero in col.
    for (;;) {
      size_t best = gen.size();
      for (size_t i = done; i < gen.size(); ++i) {
        if (gen[i][static_cast<size_t>(col)] == 0) continue;
        if (best == gen.size() ||
            std::llabs(gen[i][static_cast<size_t>(col)]) <
                std::llabs(gen[best][static_cast<size_t>(col)]))
          best = i;
      }
      if (best == gen.size()) break;  // column is clear
      bool reduced_any = false;
      for (size_t i = done; i < gen.size(); ++i) {
        if (i == best || gen[i][static_cast<size_t>(col)] == 0) continue;
        int64_t q = floor_div(gen[i][static_cast<size_t>(col)], gen[best][static_cast<size_t>(col)]);
        axpy(gen[i], -q, gen[best]);
        reduced_any = true;
      }
      if (!reduced_any) {
        // single nonzero left: promote it
        std::swap(gen[done], gen[best]);
        if (gen[done][static_cast<size_t>(col)] < 0)
          for (auto& x : gen[done]) x = -x;
        // reduce the rows already in the basis against the new pivot
        for (size_t i = 0; i < done; ++i) {
          int64_t q = floor_div(gen[i][static_cast<size_t>(col)], gen[done][static_cast<size_t>(col)]);
          if (q != 0) axpy(gen[i], -q, gen[done]);
        }
        basis.pivot_cols.push_back(col);
        ++done;
        break;
      }
    }
  }
  gen.resize(done);
  basis.rows = std::move(gen);
  return basis;
}

}  // namespace repgrowth
