#include <doctest.h>

#include <random>

#include "galcert/polynomial.hpp"
#include "oracle.hpp"

using namespace galcert;

namespace {

const Field& f7() {
  static const Field f = make_field(7, 1);
  return f;
}

Polynomial poly(std::initializer_list<std::int64_t> c) { return Polynomial::from_ints(f7(), c); }

Polynomial from_oracle(const oracle::Poly& f) { return Polynomial::from_ints(f7(), std::span<const std::int64_t>(f)); }

std::vector<std::uint64_t> residues(const std::vector<FFElement>& xs) {
  std::vector<std::uint64_t> out;
  for (const auto& x : xs) out.push_back(x.to_prime());
  return out;
}

// Residual Frobenius polynomials, constant term first.
const oracle::Poly kPol2{2, 5, 2, 3, 1};
const oracle::Poly kPol3{4, 6, 3, 4, 1};
const oracle::Poly kPol5{2, 4, 4, 6, 1};
const oracle::Poly kDefiningMod7{2, 5, 6, 1};

}  // namespace

TEST_CASE("arithmetic, gcd and derivative") {
  const Polynomial f = from_oracle(kPol2);
  SUBCASE("remainder theorem") {
    const DivMod dm = divmod(f, poly({3, 1}));
    CHECK(dm.remainder == poly({5}));
    CHECK(f(f7().element(4)) == f7().element(5));
    CHECK(dm.quotient * poly({3, 1}) + dm.remainder == f);
  }
  CHECK(gcd(f * poly({3}), Polynomial(f7())) == f);
  CHECK(gcd(poly({3, 1}) * poly({4, 1}), poly({3, 1}) * poly({5, 1})) == poly({3, 1}));
  CHECK(derivative(poly({5, 1, -1, 1})) == poly({1, -2, 3}));
  CHECK_THROWS_AS(divmod(f, Polynomial(f7())), std::domain_error);
  CHECK_THROWS_AS(f + Polynomial::x(make_field(7, 2)), std::invalid_argument);
  CHECK(f.to_string() == "x^4 + 3x^3 + 2x^2 + 5x + 2");
}

TEST_CASE("is_squarefree") {
  CHECK(is_squarefree(from_oracle(kPol2)));
  CHECK_FALSE(is_squarefree(poly({3, 1}) * poly({3, 1})));
  // x^7 - x
  CHECK(is_squarefree(poly({0, -1, 0, 0, 0, 0, 0, 1})));
  CHECK_THROWS_AS(is_squarefree(Polynomial(f7())), std::invalid_argument);
}

TEST_CASE("roots_in") {
  CHECK(roots_in(from_oracle(kPol2), 1).empty());
  CHECK(roots_in(from_oracle(kPol5), 1).empty());
  CHECK(residues(roots_in(from_oracle(kPol3), 1)) == std::vector<std::uint64_t>{3, 4});
  CHECK(residues(roots_in(from_oracle(kDefiningMod7), 1)) == std::vector<std::uint64_t>{1, 3, 4});
  CHECK(residues(roots_in(poly({2, 1}) * poly({2, 1}), 1)) == std::vector<std::uint64_t>{5, 5});
  CHECK_THROWS_AS(roots_in(Polynomial(f7()), 1), std::invalid_argument);
  CHECK(roots_in(poly({1, 0, 1}), 2).size() == 2);
}

TEST_CASE("factor") {
  SUBCASE("defining polynomial mod 7") {
    const Factorization fac = factor(from_oracle(kDefiningMod7));
    REQUIRE(fac.factors.size() == 3);
    CHECK(fac.factors[0] == std::pair{poly({3, 1}), 1});
    CHECK(fac.factors[1] == std::pair{poly({4, 1}), 1});
    CHECK(fac.factors[2] == std::pair{poly({6, 1}), 1});
    CHECK(fac.to_string() == "(x + 3)(x + 4)(x + 6)");
  }
  SUBCASE("Frobenius polynomials") {
    const Factorization f5 = factor(from_oracle(kPol5));
    REQUIRE(f5.factors.size() == 2);
    CHECK(f5.factors[0].first == poly({3, 1, 1}));
    CHECK(f5.factors[1].first == poly({3, 5, 1}));
    const Factorization f3 = factor(from_oracle(kPol3));
    CHECK(f3.to_string() == "(x + 3)(x + 4)(x^2 + 4x + 5)");
    const Factorization f2 = factor(from_oracle(kPol2));
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].first.degree() == 4);
  }
  SUBCASE("repeated and inseparable factors") {
    const Factorization sq = factor(poly({0, 0, 1}));
    REQUIRE(sq.factors.size() == 1);
    CHECK(sq.factors[0] == std::pair{poly({0, 1}), 2});
    // x^7 - 1 = (x - 1)^7
    const Factorization frob = factor(poly({-1, 0, 0, 0, 0, 0, 0, 1}));
    REQUIRE(frob.factors.size() == 1);
    CHECK(frob.factors[0] == std::pair{poly({-1, 1}), 7});
    // x^14 + ... with a p-th power part times a squarefree part
    const Polynomial g = poly({1, 0, 1});
    Polynomial g7 = g;
    for (int i = 0; i < 6; ++i) g7 = g7 * g;
    const Factorization mixed = factor(g7 * poly({3, 1}) * poly({3, 1}) * poly({2}));
    CHECK(mixed.unit == f7().element(2));
    REQUIRE(mixed.factors.size() == 2);
    CHECK(mixed.factors[0] == std::pair{poly({3, 1}), 2});
    CHECK(mixed.factors[1] == std::pair{g, 7});
  }
  CHECK_THROWS_AS(factor(Polynomial(f7())), std::invalid_argument);
}

TEST_CASE("factor round trip on random polynomials") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> deg(0, 6);
  for (int trial = 0; trial < 500; ++trial) {
    const Polynomial f = from_oracle(oracle::random_poly(rng, deg(rng), 7, false));
    const Factorization fac = factor(f);
    CHECK(fac.expand() == f);
    int total = 0;
    int linear = 0;
    for (std::size_t i = 0; i < fac.factors.size(); ++i) {
      const auto& [g, m] = fac.factors[i];
      CHECK(g.is_monic());
      CHECK(is_irreducible(g));
      if (i > 0) CHECK(fac.factors[i - 1].first < g);
      total += m * g.degree();
      if (g.degree() == 1) linear += m;
    }
    CHECK(total == f.degree());
    if (f.degree() > 0) CHECK(static_cast<int>(roots_in(f, 1).size()) == linear);
  }
}

TEST_CASE("is_irreducible") {
  CHECK(is_irreducible(poly({1, 0, 1})));
  CHECK(is_irreducible(poly({5, 4, 1})));
  CHECK_FALSE(is_irreducible(poly({3, 1}) * poly({4, 1})));
  CHECK_THROWS_AS(is_irreducible(poly({3})), std::invalid_argument);
  CHECK_THROWS_AS(is_irreducible(Polynomial(f7())), std::invalid_argument);

  SUBCASE("exhaustive agreement with trial division up to degree 4") {
    for (int n = 1; n <= 4; ++n) {
      for (std::uint64_t idx = 0; idx < oracle::ipow(7, n); ++idx) {
        const oracle::Poly f = oracle::monic_from_index(idx, n, 7);
        CHECK(is_irreducible(from_oracle(f)) == oracle::irreducible_trial(f, 7));
      }
    }
  }
}

TEST_CASE("conjugate_poly over F_49") {
  const Field f49 = make_field(7, 2);
  const FFElement t = f49.generator();
  const Polynomial x = Polynomial::x(f49);
  CHECK(conjugate_poly(x - Polynomial::constant(t)) == x + Polynomial::constant(t));
  const Polynomial rational = embed(from_oracle(kPol3), f49);
  CHECK(conjugate_poly(rational) == rational);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint64_t> pick(0, 48);
  for (int i = 0; i < 50; ++i) {
    const Polynomial g(f49, {f49.from_index(pick(rng)), f49.from_index(pick(rng)), f49.one()});
    CHECK(conjugate_poly(conjugate_poly(g)) == g);
  }
  CHECK(conjugate_poly(from_oracle(kPol2)) == from_oracle(kPol2));
}

TEST_CASE("quartics split over their splitting field") {
  // Every monic quartic over F_7: 4 roots in F_{7^e}, e = splitting degree;
  // F_{7^4} suffices exactly when there is no irreducible cubic factor.
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const Polynomial f = from_oracle(oracle::random_poly(rng, 4, 7, true));
    const int e = splitting_degree(f);
    CHECK(roots_in(f, e).size() == 4);
    bool cubic = false;
    for (const auto& [g, m] : factor(f).factors) cubic |= g.degree() == 3;
    CHECK((roots_in(f, 4).size() == 4) == !cubic);
  }
}
