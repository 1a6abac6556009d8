#include <doctest.h>

#include <random>

#include "galcert/eigen_data.hpp"
#include "galcert/symplectic.hpp"
#include "oracle.hpp"

using namespace galcert;

namespace {

const Field& f7() {
  static const Field f = make_field(7, 1);
  return f;
}

Polynomial from_oracle(const oracle::Poly& f) { return Polynomial::from_ints(f7(), std::span<const std::int64_t>(f)); }

const oracle::Poly kPol2{2, 5, 2, 3, 1};
const oracle::Poly kPol3{4, 6, 3, 4, 1};
const oracle::Poly kPol5{2, 4, 4, 6, 1};

Matrix4 diag(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return Matrix4::from_rows(f7(), {{{a, 0, 0, 0}, {0, b, 0, 0}, {0, 0, c, 0}, {0, 0, 0, d}}});
}

// [[A, 0], [0, nu A^{-T}]] and [[I, S], [0, I]] with S symmetric both lie in
// GSp for J = [[0, I], [-I, 0]]; so does J itself.
Matrix4 random_gsp(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> r(0, 6);
  std::uniform_int_distribution<std::int64_t> nz(1, 6);
  Matrix4 m = Matrix4::identity(f7());
  const Matrix4 j = symplectic_form(f7());
  for (int step = 0; step < 4; ++step) {
    std::int64_t a, b, c, d;
    do {
      a = r(rng), b = r(rng), c = r(rng), d = r(rng);
    } while (oracle::mod(a * d - b * c, 7) == 0);
    const std::int64_t nu = nz(rng);
    // nu * (A^{-1})^T = nu / det * [[d, -c], [-b, a]]
    const std::int64_t det_inv = [&] {
      for (std::int64_t x = 1; x < 7; ++x)
        if (oracle::mod((a * d - b * c) * x, 7) == 1) return x;
      return std::int64_t{0};
    }();
    const std::int64_t s = nu * det_inv;
    const Matrix4 levi = Matrix4::from_rows(
        f7(), {{{a, b, 0, 0}, {c, d, 0, 0}, {0, 0, s * d, -s * c}, {0, 0, -s * b, s * a}}});
    const std::int64_t x = r(rng), y = r(rng), z = r(rng);
    const Matrix4 unip = Matrix4::from_rows(f7(), {{{1, 0, x, y}, {0, 1, y, z}, {0, 0, 1, 0}, {0, 0, 0, 1}}});
    m = m * levi * unip;
    if (r(rng) % 2 == 0) m = m * j;
  }
  return m;
}

}  // namespace

TEST_CASE("symplectic form") {
  const Matrix4 j = symplectic_form(f7());
  CHECK(j.transpose() == Matrix4::scalar(f7().element(-1)) * j);
  CHECK(j * j == Matrix4::scalar(f7().element(-1)));
}

TEST_CASE("similitude") {
  CHECK(similitude(Matrix4::identity(f7())) == f7().one());
  CHECK(similitude(Matrix4::scalar(f7().element(3))) == f7().element(2));
  CHECK(similitude(symplectic_form(f7())) == f7().one());
  CHECK_FALSE(similitude(diag(1, 2, 3, 4)).has_value());
  CHECK_THROWS_AS(Matrix4(make_field(7, 2)), std::invalid_argument);

  SUBCASE("multiplicative on generated GSp elements") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
      const Matrix4 m = random_gsp(rng);
      const Matrix4 n = random_gsp(rng);
      const auto sm = similitude(m);
      const auto sn = similitude(n);
      REQUIRE(sm.has_value());
      REQUIRE(sn.has_value());
      CHECK(similitude(m * n) == *sm * *sn);
    }
  }

  SUBCASE("charpoly of a GSp element has the similitude shape") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
      const Matrix4 m = random_gsp(rng);
      const FFElement nu = *similitude(m);
      const Polynomial f = charpoly(m);
      CHECK(f.coeff(1) == f.coeff(3) * nu);
      CHECK(f.coeff(0) == nu * nu);
    }
  }
}

TEST_CASE("companion and charpoly") {
  const Polynomial x4 = Polynomial::from_ints(f7(), {0, 0, 0, 0, 1});
  const Matrix4 shift = companion(x4);
  CHECK((shift * shift * shift * shift) == Matrix4(f7()));
  CHECK(charpoly(companion(from_oracle(kPol2))) == from_oracle(kPol2));
  CHECK(charpoly(Matrix4::identity(f7())) == Polynomial::from_ints(f7(), {1, -4, 6, -4, 1}));
  CHECK(charpoly(diag(1, 2, 3, 4)) == Polynomial::from_ints(f7(), {24, -50, 35, -10, 1}));
  CHECK_THROWS_AS(companion(Polynomial::from_ints(f7(), {1, 0, 0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(companion(Polynomial::from_ints(f7(), {1, 0, 0, 0, 2})), std::invalid_argument);

  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const Polynomial f = from_oracle(oracle::random_poly(rng, 4, 7, true));
    CHECK(charpoly(companion(f)) == f);
  }
}

TEST_CASE("matrix and projective orders") {
  CHECK(matrix_order(Matrix4::identity(f7())) == 1);
  CHECK(matrix_order(Matrix4::scalar(f7().element(3))) == 6);
  CHECK(projective_order(Matrix4::scalar(f7().element(3))) == 1);
  const Matrix4 unipotent = companion(Polynomial::from_ints(f7(), {1, -4, 6, -4, 1}));
  CHECK(matrix_order(unipotent) == 7);
  CHECK(exponent_cap(7) == 957600);
  CHECK_THROWS_AS(matrix_order(diag(1, 0, 1, 1)), std::domain_error);
  CHECK_THROWS_AS(projective_order(diag(1, 0, 1, 1)), std::domain_error);

  // Frozen from the brute-force companion oracle.
  CHECK(projective_order(companion(from_oracle(kPol2))) == 25);
  CHECK(projective_order(companion(from_oracle(kPol3))) == 16);
  CHECK(projective_order(companion(from_oracle(kPol5))) == 8);
  CHECK(matrix_order(companion(from_oracle(kPol2))) == 150);
  for (const auto& f : {kPol2, kPol3, kPol5}) {
    CHECK(projective_order(companion(from_oracle(f))) ==
          oracle::brute_projective_order(oracle::companion_of(f, 7), 7));
  }
}

TEST_CASE("eigen_projective_order") {
  CHECK(eigen_projective_order(from_oracle(kPol2)) == 25);
  CHECK(eigen_projective_order(from_oracle(kPol3)) == 16);
  const Polynomial split = Polynomial::from_ints(f7(), {24, -50, 35, -10, 1});
  CHECK(eigen_projective_order(split) == 6);
  CHECK_THROWS_AS(eigen_projective_order(Polynomial::from_ints(f7(), {1, -4, 6, -4, 1})), std::invalid_argument);

  SUBCASE("agrees with the companion route on random squarefree quartics") {
    std::mt19937_64 rng(41);
    int done = 0;
    while (done < 200) {
      const Polynomial f = from_oracle(oracle::random_poly(rng, 4, 7, true));
      if (f.coeff(0).is_zero() || !is_squarefree(f)) continue;
      ++done;
      const Matrix4 c = companion(f);
      const std::uint64_t po = projective_order(c);
      CHECK(eigen_projective_order(f) == po);
      const std::uint64_t mo = matrix_order(c);
      CHECK(mo % po == 0);
      CHECK(6 % (mo / po) == 0);
    }
  }
}
