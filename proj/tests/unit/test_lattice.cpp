#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "repgrowth/lattice.hpp"

using namespace repgrowth;

TEST_CASE("hermite form of simple lattices") {
  {
    const LatticeBasis basis = hermite_lattice({{2}}, 1);
    CHECK(basis.rank() == 1);
    CHECK(basis.spans());
    CHECK(basis.covolume() == 2);
    CHECK(basis.rows == std::vector<std::vector<int64_t>>{{2}});
    CHECK(basis.contains({4}));
    CHECK(basis.contains({-6}));
    CHECK_FALSE(basis.contains({3}));
  }
  {
    // differences of the A1 x A1 four-weight product rep
    const LatticeBasis basis = hermite_lattice({{2, 0}, {1, -1}, {1, 1}}, 2);
    CHECK(basis.rank() == 2);
    CHECK(basis.covolume() == 2);
    CHECK(basis.rows == std::vector<std::vector<int64_t>>{{1, 1}, {0, 2}});
    CHECK(basis.contains({1, 1}));
    CHECK(basis.contains({0, 2}));
    CHECK(basis.contains({-1, 1}));
    CHECK_FALSE(basis.contains({1, 0}));
    CHECK_FALSE(basis.contains({0, 1}));
  }
  {
    // differences of the standard-plus-trivial rep with a torus charge
    const LatticeBasis basis = hermite_lattice({{1, 0, 1}, {-1, 1, 1}, {0, -1, 1}}, 3);
    CHECK(basis.rank() == 3);
    CHECK(basis.covolume() == 3);
    CHECK(basis.contains({0, 0, 3}));
    CHECK_FALSE(basis.contains({0, 0, 1}));
    CHECK(basis.contains({1, 0, 1}));
  }
}

TEST_CASE("degenerate and empty generating sets") {
  {
    const LatticeBasis basis = hermite_lattice({}, 2);
    CHECK(basis.rank() == 0);
    CHECK_FALSE(basis.spans());
    CHECK(basis.covolume() == 0);
    CHECK(basis.contains({0, 0}));
    CHECK_FALSE(basis.contains({1, 0}));
  }
  {
    const LatticeBasis basis = hermite_lattice({{1, 1}, {-1, -1}, {2, 2}}, 2);
    CHECK(basis.rank() == 1);
    CHECK_FALSE(basis.spans());
    CHECK(basis.covolume() == 0);
    CHECK(basis.contains({3, 3}));
    CHECK_FALSE(basis.contains({1, 0}));
    CHECK_FALSE(basis.contains({1, -1}));
  }
}

TEST_CASE("hermite form is canonical and closed under combinations") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> entry(-5, 5);
  std::uniform_int_distribution<int> count(1, 5);
  std::uniform_int_distribution<int> combo(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const int ambient = 1 + trial % 4;
    std::vector<std::vector<int64_t>> gens(static_cast<size_t>(count(rng)));
    for (auto& g : gens) {
      g.resize(static_cast<size_t>(ambient));
      for (auto& x : g) x = entry(rng);
    }
    const LatticeBasis basis = hermite_lattice(gens, ambient);

    // every generator and every small combination is a member
    for (const auto& g : gens) CHECK(basis.contains(g));
    std::vector<int64_t> mix(static_cast<size_t>(ambient), 0);
    for (const auto& g : gens) {
      const int k = combo(rng);
      for (int i = 0; i < ambient; ++i) mix[static_cast<size_t>(i)] += k * g[static_cast<size_t>(i)];
    }
    CHECK(basis.contains(mix));

    // generator order does not change the basis
    std::shuffle(gens.begin(), gens.end(), rng);
    const LatticeBasis again = hermite_lattice(gens, ambient);
    CHECK(basis.rows == again.rows);
    CHECK(basis.pivot_cols == again.pivot_cols);

    // echelon shape: positive pivots, increasing pivot columns, reduced above
    for (size_t row = 0; row < basis.rows.size(); ++row) {
      const int col = basis.pivot_cols[row];
      const int64_t pivot = basis.rows[row][static_cast<size_t>(col)];
      CHECK(pivot > 0);
      if (row > 0) CHECK(basis.pivot_cols[row - 1] < col);
      for (size_t above = 0; above < row; ++above) {
        const int64_t v = basis.rows[above][static_cast<size_t>(col)];
        CHECK(v >= 0);
        CHECK(v < pivot);
      }
      for (int j = 0; j < col; ++j) CHECK(basis.rows[row][static_cast<size_t>(j)] == 0);
    }
  }
}
