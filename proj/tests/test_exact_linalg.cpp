#include <doctest.h>

#include "parcomod/json_io.hpp"
#include "parcomod/linalg.hpp"

#include <random>

using namespace parcomod;

namespace {

FieldElem from_q(std::initializer_list<Rational> cs) {
  return FieldElem::from_coeffs(std::vector<Rational>(cs), 24);
}

// Random element with small rational coefficients in a few power-basis slots.
FieldElem random_elem(std::mt19937& rng, int order, int density) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3), slot(0, 7), coin(0, 9);
  std::vector<Rational> c(CyclotomicField::get(order).degree());
  for (int k = 0; k < density; ++k) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    c[slot(rng) % c.size()] += q;
  }
  if (coin(rng) == 0) return FieldElem::zero(order);
  return FieldElem::from_coeffs(c, order);
}

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int rank_cap) {
  // Product of r x k and k x c factors bounds the rank by k.
  std::uniform_int_distribution<int> small(-2, 2);
  const std::size_t k = std::size_t(rank_cap);
  Matrix a(r, k), b(k, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < k; ++j) a(i, j) = FieldElem(long(small(rng)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < c; ++j) b(i, j) = FieldElem(long(small(rng)));
  return a * b;
}

}  // namespace

TEST_SUITE("exact_linalg") {
  TEST_CASE("cyclotomic polynomial of order 24") {
    auto phi = cyclotomic_polynomial(24);
    std::vector<mpz_class> expect = {1, 0, 0, 0, -1, 0, 0, 0, 1};
    CHECK(phi == expect);
    CHECK(cyclotomic_polynomial(1) == std::vector<mpz_class>{-1, 1});
    CHECK(cyclotomic_polynomial(8) == std::vector<mpz_class>{1, 0, 0, 0, 1});
  }

  TEST_CASE("inverses agree with an independent computer algebra result") {
    // Values computed independently modulo x^8 - x^4 + 1.
    FieldElem a = from_q({1, 1});
    CHECK(a.inverse() == from_q({0, 0, 0, 0, 1, -1, 1, -1}));
    FieldElem b = from_q({2, 0, 0, 1, 0, -1});
    CHECK(b.inverse() == from_q({Rational(8, 15), Rational(1, 5), Rational(2, 15), Rational(-1, 3),
                                 Rational(-4, 15), 0, Rational(2, 15), Rational(4, 15)}));
    FieldElem c = from_q({1, -1, 1, 0, 1});
    CHECK(c.inverse() == from_q({Rational(49, 97), Rational(44, 97), Rational(-8, 97), Rational(-25, 97),
                                 Rational(-18, 97), Rational(-32, 97), Rational(-3, 97), Rational(27, 97)}));
  }

  TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
      FieldElem x = random_elem(rng, 24, 3), y = random_elem(rng, 24, 3), z = random_elem(rng, 24, 2);
      CHECK((x + y) * z == x * z + y * z);
      CHECK(x * y == y * x);
      if (!x.is_zero()) CHECK(x * x.inverse() == FieldElem::one(24));
    }
  }

  TEST_CASE("division by zero is reported") {
    CHECK_THROWS_AS(FieldElem::zero(24).inverse(), DivisionByZero);
  }

  TEST_CASE("roots of unity") {
    FieldElem z = FieldElem::zeta_power(1, 24);
    CHECK(z.pow(24) == FieldElem(1L));
    CHECK(z.pow(12) == FieldElem(-1L));
    FieldElem w = FieldElem::root_of_unity(3, 1, 24);
    CHECK(w * w + w + FieldElem(1L) == FieldElem());
    CHECK(z.galois(5).pow(5) == z.pow(25));
    CHECK(z.conj() * z == FieldElem(1L));
  }

  TEST_CASE("textual form parses back") {
    std::mt19937 rng(11);
    for (int t = 0; t < 100; ++t) {
      FieldElem x = random_elem(rng, 24, 4);
      CHECK(FieldElem::parse(x.str(), 24) == x);
    }
    CHECK(FieldElem::parse("1/2 + 1/2*z^2", 24) == from_q({Rational(1, 2), 0, Rational(1, 2)}));
    CHECK(FieldElem::parse("zeta8^2", 24) == FieldElem::zeta_power(6, 24));
    CHECK_THROWS(FieldElem::parse("zeta5", 24));
  }

  TEST_CASE("mixing fields is rejected") {
    // Rational elements embed in every field; irrational ones do not mix.
    CHECK_NOTHROW(FieldElem::one(24) + FieldElem::one(8));
    CHECK_THROWS_AS(FieldElem::zeta_power(1, 24) + FieldElem::zeta_power(1, 8), FieldMismatch);
  }

  TEST_CASE("fraction-exact reduced row echelon form") {
    Matrix m = Matrix::from_rows({{FieldElem(2L), FieldElem(4L), FieldElem(1L)},
                                  {FieldElem(1L), FieldElem(2L), FieldElem(Rational(1, 3))},
                                  {FieldElem(3L), FieldElem(6L), FieldElem(2L)}},
                                 3);
    auto r = rref(m);
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<std::size_t>{0, 2});
    CHECK(r.form(0, 0) == FieldElem(1L));
    CHECK(r.form(0, 1) == FieldElem(2L));
    CHECK(r.form(0, 2) == FieldElem());
    CHECK(r.form(1, 2) == FieldElem(1L));
    auto ker = kernel(m);
    REQUIRE(ker.size() == 1);
    CHECK(m.apply(ker[0]) == zero_vec(3));
  }

  TEST_CASE("sparse echelon matches dense elimination") {
    std::mt19937 rng(3);
    for (int t = 0; t < 50; ++t) {
      Matrix m = random_matrix(rng, 6, 7, 1 + t % 5);
      SparseEchelon e(7);
      for (const auto& row : m.row_list()) e.insert(row);
      auto r = rref(m);
      CHECK(e.rank() == r.rank);
      auto basis = e.basis();
      for (std::size_t i = 0; i < r.rank; ++i) CHECK(basis[i] == r.form.row(i));
    }
  }

  TEST_CASE("determinant, inverse and solve") {
    Matrix m = Matrix::from_rows({{FieldElem(1L), FieldElem(2L)}, {FieldElem(3L), FieldElem(4L)}}, 2);
    CHECK(determinant(m) == FieldElem(-2L));
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(*inv * m == Matrix::identity(2));
    auto x = solve(m, {FieldElem(5L), FieldElem(11L)});
    REQUIRE(x);
    CHECK(*x == Vec{FieldElem(1L), FieldElem(2L)});
    Matrix s = Matrix::from_rows({{FieldElem(1L), FieldElem(2L)}, {FieldElem(2L), FieldElem(4L)}}, 2);
    CHECK_FALSE(inverse(s));
    CHECK_FALSE(solve(s, {FieldElem(1L), FieldElem(0L)}));
  }

  TEST_CASE("subspace dimension formula on 1000 random pairs") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> dimd(1, 7), kd(0, 5);
    for (int t = 0; t < 1000; ++t) {
      const std::size_t n = std::size_t(dimd(rng));
      auto make = [&] {
        const int k = kd(rng);
        std::vector<Vec> vs;
        for (int i = 0; i < k; ++i) vs.push_back(random_matrix(rng, 1, n, 1 + i % 2).row(0));
        return Subspace::span(vs, n);
      };
      Subspace u = make(), v = make();
      Subspace s = u.sum(v), i = u.intersect(v);
      CHECK(s.dim() + i.dim() == u.dim() + v.dim());
      CHECK(i.is_subspace_of(u));
      CHECK(i.is_subspace_of(v));
      CHECK(u.is_subspace_of(s));
    }
  }

  TEST_CASE("subspace coordinates, residual and quotient map") {
    Subspace s = Subspace::span({{FieldElem(1L), FieldElem(1L), FieldElem(0L)}}, 3);
    auto c = s.coordinates({FieldElem(3L), FieldElem(3L), FieldElem(0L)});
    REQUIRE(c);
    CHECK((*c)[0] == FieldElem(3L));
    CHECK_FALSE(s.coordinates({FieldElem(1L), FieldElem(0L), FieldElem(0L)}));
    Matrix q = s.quotient_map();
    CHECK(q.rows() == 2);
    CHECK(q.apply(s.basis_vector(0)) == zero_vec(2));
    CHECK(s.non_pivots() == std::vector<std::size_t>{1, 2});
  }

  TEST_CASE("preimage and image") {
    Matrix m = Matrix::from_rows({{FieldElem(1L), FieldElem(0L)}, {FieldElem(0L), FieldElem(0L)}}, 2);
    Subspace zero(2);
    CHECK(zero.preimage(m).dim() == 1);
    CHECK(Subspace::whole(2).image(m).dim() == 1);
  }

  TEST_CASE("json round trip of vectors and matrices") {
    std::mt19937 rng(5);
    Vec v;
    for (int i = 0; i < 6; ++i) v.push_back(random_elem(rng, 24, 3));
    CHECK(vec_from_json(to_json(v), 24) == v);
    Matrix m = random_matrix(rng, 3, 4, 2);
    CHECK(matrix_from_json(to_json(m), 24) == m);
  }
}
