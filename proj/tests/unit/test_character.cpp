#include <random>
#include <sstream>

#include "doctest.h"
#include "oracle.hpp"
#include "repgrowth/character.hpp"

using namespace repgrowth;

namespace {

// Multiply by prod over positive roots of (1 - e^{+alpha}), the mirrored
// form of apply_root_difference, used to test the printed identity
// prod(1 - e^{alpha}) = (-1)^u e^{2 delta} prod(1 - e^{-alpha}).
Character apply_positive_root_difference(const Character& f) {
  const RootDatum* rd = f.datum();
  Character cur = f;
  for (const auto& root : rd->positive_roots()) {
    Character next(rd);
    for (const auto& [w, c] : cur.terms()) {
      next.add(w, c);
      next.add(w + root.fund, -c);
    }
    cur = std::move(next);
  }
  return cur;
}

bool same_terms(const Character& a, const Character& b) {
  return a.sorted_terms() == b.sorted_terms();
}

}  // namespace

TEST_CASE("character term bookkeeping") {
  const auto a1 = make_root_datum(CartanType::parse("A1"));
  Character f(a1.get());
  CHECK(f.empty());
  CHECK(f.mass() == 0);

  f.add(Weight{0}, 1);
  f.add(Weight{0}, 1);
  CHECK(f.coeff(Weight{0}) == 2);
  CHECK(f.support_size() == 1);

  f.add(Weight{0}, -2);  // exact cancellation prunes the term
  CHECK(f.empty());

  f.set(Weight{2}, BigInt(5));
  f.set(Weight{2}, BigInt(0));
  CHECK(f.empty());
}

TEST_CASE("character addition") {
  const auto a1 = make_root_datum(CartanType::parse("A1"));
  const Character one = monomial<BigInt>(a1.get(), Weight{0}, BigInt(1));
  const Character two = char_add(one, one);
  CHECK(two.coeff(Weight{0}) == 2);

  std::mt19937_64 rng(11);
  const Character f = oracle::random_character(a1.get(), rng);
  CHECK(char_add(f, char_scale(f, BigInt(-1))).empty());

  const auto a2 = make_root_datum(CartanType::parse("A2"));
  const Character both =
      char_add(irreducible_character(*a2, Weight{1, 0}), irreducible_character(*a2, Weight{0, 1}));
  CHECK(both.support_size() == 6);
  for (const auto& [w, c] : both.terms()) CHECK(c == 1);
}

TEST_CASE("character multiplication") {
  const auto a1 = make_root_datum(CartanType::parse("A1"));
  CHECK(same_terms(char_mul(monomial<BigInt>(a1.get(), Weight{3}), monomial<BigInt>(a1.get(), Weight{-1})),
                   monomial<BigInt>(a1.get(), Weight{2})));

  Character std2(a1.get());
  std2.add(Weight{1}, 1);
  std2.add(Weight{-1}, 1);
  const Character sq = char_mul(std2, std2);
  CHECK(sq.coeff(Weight{-2}) == 1);
  CHECK(sq.coeff(Weight{0}) == 2);
  CHECK(sq.coeff(Weight{2}) == 1);
  CHECK(sq.support_size() == 3);

  const auto a2 = make_root_datum(CartanType::parse("A2"));
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const Character f = oracle::random_character(a2.get(), rng);
    const Character g = oracle::random_character(a2.get(), rng);
    CHECK(char_mul(f, g).mass() == f.mass() * g.mass());
    CHECK(same_terms(char_mul(f, g), char_mul(g, f)));
  }
  for (int trial = 0; trial < 10; ++trial) {
    const Character f = oracle::random_character(a2.get(), rng);
    const Character g = oracle::random_character(a2.get(), rng);
    const Character h = oracle::random_character(a2.get(), rng);
    CHECK(same_terms(char_mul(char_mul(f, g), h), char_mul(f, char_mul(g, h))));
  }
}

TEST_CASE("dense and sparse convolution agree") {
  std::mt19937_64 rng(13);
  for (const char* name : {"A1", "A2", "A1xT1"}) {
    CAPTURE(name);
    const auto rd = make_root_datum(CartanType::parse(name));
    for (int trial = 0; trial < 10; ++trial) {
      const Character f = oracle::random_character(rd.get(), rng, 8, 5);
      const Character g = oracle::random_character(rd.get(), rng, 8, 5);
      const Character dense = char_mul(f, g, MulBackend::dense);
      const Character sparse = char_mul(f, g, MulBackend::sparse);
      const Character picked = char_mul(f, g, MulBackend::automatic);
      CHECK(same_terms(dense, sparse));
      CHECK(same_terms(dense, picked));
    }
  }
}

TEST_CASE("alternating difference transform") {
  const auto a1 = make_root_datum(CartanType::parse("A1"));

  {
    const Character out = apply_root_difference(monomial<BigInt>(a1.get(), Weight{0}));
    CHECK(out.coeff(Weight{0}) == 1);
    CHECK(out.coeff(Weight{-2}) == -1);
    CHECK(out.support_size() == 2);
  }
  {
    Character f(a1.get());
    f.add(Weight{-2}, 1);
    f.add(Weight{0}, 2);
    f.add(Weight{2}, 1);
    const Character out = apply_root_difference(f);
    CHECK(out.coeff(Weight{2}) == 1);
    CHECK(out.coeff(Weight{0}) == 1);
    CHECK(out.coeff(Weight{-2}) == -1);
    CHECK(out.coeff(Weight{-4}) == -1);
    CHECK(out.support_size() == 4);
  }

  // empty root system: the transform is the identity
  const auto t1 = make_root_datum(CartanType::parse("T1"));
  std::mt19937_64 rng(14);
  const Character f = oracle::random_character(t1.get(), rng);
  CHECK(same_terms(apply_root_difference(f), f));
}

TEST_CASE("mirrored product identity") {
  // prod(1 - e^{alpha}) f = (-1)^u e^{2 delta} prod(1 - e^{-alpha}) f
  std::mt19937_64 rng(15);
  for (const char* name : {"A2", "B2"}) {
    CAPTURE(name);
    const auto rd = make_root_datum(CartanType::parse(name));
    for (int trial = 0; trial < 5; ++trial) {
      const Character f = oracle::random_character(rd.get(), rng);
      const Character lhs = apply_positive_root_difference(f);
      Character rhs = char_mul(monomial<BigInt>(rd.get(), rd->delta() + rd->delta()),
                               apply_root_difference(f));
      if (rd->u() % 2 == 1) rhs = char_scale(rhs, BigInt(-1));
      CHECK(same_terms(lhs, rhs));
    }
  }
}

TEST_CASE("irreducible characters match hand-listed weight systems") {
  const auto a1 = make_root_datum(CartanType::parse("A1"));
  const Character v3 = irreducible_character(*a1, Weight{3});
  CHECK(v3.support_size() == 4);
  for (int m : {-3, -1, 1, 3}) CHECK(v3.coeff(Weight{m}) == 1);

  const auto a2 = make_root_datum(CartanType::parse("A2"));
  CHECK(same_terms(irreducible_character(*a2, Weight{1, 0}),
                   oracle::a2_standard_character(a2.get())));
  CHECK(same_terms(irreducible_character(*a2, Weight{1, 1}),
                   oracle::a2_adjoint_character(a2.get())));

  const auto b2 = make_root_datum(CartanType::parse("B2"));
  CHECK(same_terms(irreducible_character(*b2, Weight{1, 0}),
                   oracle::b2_vector_character(b2.get())));

  const auto g2 = make_root_datum(CartanType::parse("G2"));
  CHECK(same_terms(irreducible_character(*g2, Weight{0, 1}),
                   oracle::g2_seven_character(g2.get())));

  // torus factors translate the whole weight system
  const auto mix = make_root_datum(CartanType::parse("A2xT1"));
  const Character shifted = irreducible_character(*mix, Weight{1, 0, 5});
  CHECK(shifted.support_size() == 3);
  for (const Weight& w : oracle::a2_standard_weights())
    CHECK(shifted.coeff(Weight{w[0], w[1], 5}) == 1);

  CHECK_THROWS_AS(irreducible_character(*a2, Weight{0, -1}), ConfigError);
}

TEST_CASE("highest weights lead their weight systems") {
  // coefficient exactly 1 at lambda, every weight below lambda in the root
  // order, and the difference transform keeps coefficient +1 at lambda
  const std::vector<std::pair<const char*, Weight>> cases = {
      {"A2", Weight{2, 1}}, {"B2", Weight{1, 1}}, {"G2", Weight{1, 0}},
      {"C3", Weight{0, 1, 0}}, {"A2xT1", Weight{1, 1, -2}}};
  for (const auto& [name, lambda] : cases) {
    CAPTURE(name);
    const auto rd = make_root_datum(CartanType::parse(name));
    const Character chi = irreducible_character(*rd, lambda);
    CHECK(chi.coeff(lambda) == 1);
    for (const auto& [w, c] : chi.sorted_terms()) {
      CHECK(c > 0);
      const Weight drop = lambda - w;
      for (int i = rd->rank_ss(); i < rd->rank(); ++i) CHECK(drop[i] == 0);
      for (int j = 0; j < rd->rank_ss(); ++j) {
        Rational coord = 0;
        for (int i = 0; i < rd->rank_ss(); ++i)
          coord += rd->cartan_inverse(j, i) * Rational(drop[i]);
        CHECK(coord >= 0);
        CHECK(denominator(coord) == 1);
      }
    }
    CHECK(apply_root_difference(chi).coeff(lambda) == 1);
  }
}

TEST_CASE("freudenthal multiplicities") {
  const auto a2 = make_root_datum(CartanType::parse("A2"));
  {
    const auto mult = dominant_weight_multiplicities(*a2, Weight{1, 1});
    REQUIRE(mult.size() == 2);
    CHECK(mult.at(Weight{1, 1}) == 1);
    CHECK(mult.at(Weight{0, 0}) == 2);
  }
  {
    const auto mult = dominant_weight_multiplicities(*a2, Weight{2, 1});
    REQUIRE(mult.size() == 3);
    CHECK(mult.at(Weight{2, 1}) == 1);
    CHECK(mult.at(Weight{0, 2}) == 1);
    CHECK(mult.at(Weight{1, 0}) == 2);
  }

  // E8 adjoint: highest root with multiplicity 1, zero with multiplicity 8
  const auto e8 = make_root_datum(CartanType::parse("E8"));
  const Weight theta{0, 0, 0, 0, 0, 0, 0, 1};
  const auto mult = dominant_weight_multiplicities(*e8, theta);
  REQUIRE(mult.size() == 2);
  CHECK(mult.at(theta) == 1);
  CHECK(mult.at(Weight::zero(8)) == 8);
  CHECK(irreducible_character(*e8, theta).mass() == 248);
}

TEST_CASE("character mass") {
  const auto a2 = make_root_datum(CartanType::parse("A2"));
  CHECK(Character(a2.get()).mass() == 0);
  CHECK(oracle::a2_standard_character(a2.get()).mass() == 3);
  CHECK(irreducible_character(*a2, Weight{2, 1}).mass() == 15);

  std::mt19937_64 rng(16);
  const Character v = oracle::random_rep_character(a2.get(), rng);
  Character power = v;
  for (int n = 2; n <= 4; ++n) {
    power = char_mul(power, v);
    CHECK(power.mass() == oracle::ipow(v.mass(), n));
  }
}

TEST_CASE("weyl invariance detection") {
  const auto a2 = make_root_datum(CartanType::parse("A2"));
  CHECK(is_weyl_invariant(monomial<BigInt>(a2.get(), Weight::zero(2))));
  CHECK(is_weyl_invariant(irreducible_character(*a2, Weight{1, 1})));

  const auto g2 = make_root_datum(CartanType::parse("G2"));
  CHECK(is_weyl_invariant(oracle::g2_seven_character(g2.get())));

  const auto a1 = make_root_datum(CartanType::parse("A1"));
  CHECK_FALSE(is_weyl_invariant(monomial<BigInt>(a1.get(), Weight{1})));

  Character corrupt = oracle::a2_adjoint_character(a2.get());
  corrupt.set(Weight{1, 1}, BigInt(3));
  CHECK_FALSE(is_weyl_invariant(corrupt));

  Character missing = oracle::a2_adjoint_character(a2.get());
  missing.set(Weight{-1, -1}, BigInt(0));  // drop one orbit member entirely
  CHECK_FALSE(is_weyl_invariant(missing));
}

TEST_CASE("character serialization") {
  const auto b2 = make_root_datum(CartanType::parse("B2"));
  std::ostringstream os;
  write_character(os, oracle::b2_vector_character(b2.get()));
  CHECK(os.str() ==
        "1 : -1 0\n"
        "1 : -1 2\n"
        "1 : 0 0\n"
        "1 : 1 -2\n"
        "1 : 1 0\n");

  std::istringstream is(os.str());
  CHECK(same_terms(read_character(is, b2.get()), oracle::b2_vector_character(b2.get())));

  // round trip of an arbitrary character with comments and negatives
  const auto mix = make_root_datum(CartanType::parse("A2xT1"));
  std::mt19937_64 rng(17);
  const Character f = oracle::random_character(mix.get(), rng);
  std::ostringstream raw;
  raw << "# header comment\n\n";
  write_character(raw, f);
  std::istringstream round(raw.str());
  CHECK(same_terms(read_character(round, mix.get()), f));
}

TEST_CASE("character reader rejects malformed input") {
  const auto a2 = make_root_datum(CartanType::parse("A2"));
  auto parse = [&](const char* text) {
    std::istringstream is(text);
    return read_character(is, a2.get());
  };
  CHECK_THROWS_AS(parse("1 : 1"), ConfigError);          // wrong arity
  CHECK_THROWS_AS(parse("1 : 1 0 0"), ConfigError);      // wrong arity
  CHECK_THROWS_AS(parse("1 1 0"), ConfigError);          // missing colon
  CHECK_THROWS_AS(parse("x : 1 0"), ConfigError);        // junk coefficient
  CHECK_THROWS_AS(parse("1 2 : 1 0"), ConfigError);      // two coefficient tokens
  CHECK_THROWS_AS(parse("1 : 1 y"), ConfigError);        // junk coordinate
  CHECK_THROWS_AS(parse("1 : 1 0\n2 : 1 0"), ConfigError);  // duplicate weight
  CHECK_THROWS_AS(parse("0 : 1 0"), ConfigError);        // explicit zero term
  CHECK_NOTHROW(parse("-2 : 1 0"));                      // virtual characters load fine
}

TEST_CASE("real characters") {
  const auto a1 = make_root_datum(CartanType::parse("A1"));
  Character f(a1.get());
  f.add(Weight{1}, 3);
  f.add(Weight{-1}, 1);
  const RealCharacter half = to_real(f, 0.5);
  CHECK(half.coeff(Weight{1}) == doctest::Approx(1.5));
  CHECK(half.coeff(Weight{-1}) == doctest::Approx(0.5));
  CHECK(half.mass() == doctest::Approx(2.0));

  // dense and sparse real convolution agree to rounding
  std::mt19937_64 rng(18);
  const auto a2 = make_root_datum(CartanType::parse("A2"));
  const Character g = oracle::random_character(a2.get(), rng, 8, 4);
  const Character h = oracle::random_character(a2.get(), rng, 8, 4);
  const RealCharacter dense = char_mul(to_real(g), to_real(h), MulBackend::dense);
  const RealCharacter sparse = char_mul(to_real(g), to_real(h), MulBackend::sparse);
  for (const auto& [w, c] : dense.terms()) CHECK(sparse.coeff(w) == doctest::Approx(c));
  CHECK(dense.support_size() == sparse.support_size());
}
