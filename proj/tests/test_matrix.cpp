#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "ck/matrix.hpp"
#include "ck/random.hpp"
#include "oracles.hpp"

using namespace ck;
using test::cofactor_det;
using test::random_matrix;

namespace {

const RingPtr& Z() {
  static const RingPtr z = integers();
  return z;
}

}  // namespace

TEST_SUITE_BEGIN("matrix");

TEST_CASE("permutation sign stays in sync through next_lex") {
  for (int n = 0; n <= 6; ++n) {
    Permutation sigma = Permutation::identity(n);
    int count = 0;
    do {
      CHECK(sigma.sign() == test::sign_by_inversion_count(sigma.images()));
      ++count;
    } while (sigma.next_lex());
    int factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= k;
    CHECK(count == factorial);
  }
}

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation::from_images({1, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_images({0, 1}), std::invalid_argument);
  CHECK(Permutation::from_images({2, 1, 3}).sign() == -1);
  CHECK(Permutation::from_images({3, 1, 2}).sign() == +1);
  CHECK(Permutation::identity(4).is_identity());
}

TEST_CASE("multiply") {
  const Matrix a = Matrix::from_ints(Z(), {{1, 2}, {3, 4}});
  const Matrix swap_cols = Matrix::from_ints(Z(), {{0, 1}, {1, 0}});
  CHECK(multiply(a, swap_cols) == Matrix::from_ints(Z(), {{2, 1}, {4, 3}}));

  const Matrix b = Matrix::from_ints(Z(), {{5, -1, 0}, {2, 2, 7}, {0, 1, 1}});
  CHECK(multiply(Matrix::identity(Z(), 3), b) == b);

  CHECK_THROWS_AS(multiply(a, b), std::invalid_argument);
}

TEST_CASE("symbolic product entry matches the bilinear expansion") {
  const auto ring = polynomials({"a1_3", "a2_3", "a3_3", "b1_1", "b1_2",
                                 "b1_3"});
  const auto a13 = ring->indeterminate(0);
  const auto a23 = ring->indeterminate(1);
  const auto a33 = ring->indeterminate(2);
  const auto b11 = ring->indeterminate(3);
  const auto b12 = ring->indeterminate(4);
  const auto b13 = ring->indeterminate(5);
  // Only column 3 of A matters for entry (1,3) of B*A.
  const Matrix a = Matrix::build(ring, 3, 3, [&](int i, int j) {
    if (j != 3) return ring->zero();
    return i == 1 ? a13 : (i == 2 ? a23 : a33);
  });
  const Matrix b = Matrix::build(ring, 3, 3, [&](int i, int j) {
    if (i != 1) return ring->zero();
    return j == 1 ? b11 : (j == 2 ? b12 : b13);
  });
  const Matrix c = multiply(b, a);
  CHECK(c.at(1, 3) == b11 * a13 + b12 * a23 + b13 * a33);
}

TEST_CASE("leibniz_det on pinned cases") {
  CHECK(leibniz_det(Matrix(Z(), 0, 0)) == Z()->one());
  CHECK(leibniz_det(Matrix::from_ints(Z(), {{-4}})) == Z()->from_int(-4));

  const auto ring = polynomials({"a", "b", "c", "d"});
  const Matrix generic2 = Matrix::build(ring, 2, 2, [&](int i, int j) {
    return ring->indeterminate(static_cast<std::size_t>(i - 1) * 2 + (j - 1));
  });
  const auto ad = ring->indeterminate(0) * ring->indeterminate(3);
  const auto bc = ring->indeterminate(1) * ring->indeterminate(2);
  CHECK(leibniz_det(generic2) == ad - bc);

  const Matrix m = Matrix::from_ints(Z(), {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
  CHECK(cofactor_det(m) == Z()->from_int(-3));
  CHECK(leibniz_det(m) == Z()->from_int(-3));

  CHECK_THROWS_AS(leibniz_det(Matrix(Z(), 2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(leibniz_det(Matrix(Z(), 9, 9)), std::invalid_argument);
}

TEST_CASE("leibniz_det agrees with cofactor expansion on random matrices") {
  RandomSource rng(100);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.int_in(0, 5));
    const Matrix a = random_matrix(rng, Z(), n, n, -9, 9);
    CHECK(leibniz_det(a) == cofactor_det(a));
  }
}

TEST_CASE("leibniz_det vanishes when two rows are equal") {
  RandomSource rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = static_cast<int>(rng.int_in(2, 5));
    const int r1 = static_cast<int>(rng.int_in(1, n));
    int r2 = static_cast<int>(rng.int_in(1, n - 1));
    if (r2 >= r1) ++r2;
    const Matrix base = random_matrix(rng, Z(), n, n, -9, 9);
    const Matrix a = Matrix::build(Z(), n, n, [&](int i, int j) {
      return base.at(i == r2 ? r1 : i, j);
    });
    CHECK(leibniz_det(a).is_zero());
  }
}

TEST_CASE("scale_rows") {
  const Matrix eye = Matrix::identity(Z(), 2);
  const std::vector<RingValue> ones = {Z()->one(), Z()->one()};
  CHECK(scale_rows(eye, ones) == eye);

  const std::vector<RingValue> two_three = {Z()->from_int(2),
                                            Z()->from_int(3)};
  CHECK(leibniz_det(scale_rows(eye, two_three)) == Z()->from_int(6));

  RandomSource rng(102);
  const std::vector<RingValue> factors = {Z()->from_int(-1), Z()->from_int(2),
                                          Z()->from_int(5)};
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix a = random_matrix(rng, Z(), 3, 3, -9, 9);
    CHECK(leibniz_det(scale_rows(a, factors)) ==
          Z()->from_int(-10) * leibniz_det(a));
  }

  CHECK_THROWS_AS(scale_rows(eye, {Z()->one()}), std::invalid_argument);
}

TEST_CASE("scale_rows determinant law on random factor vectors") {
  RandomSource rng(103);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = static_cast<int>(rng.int_in(1, 4));
    const Matrix a = random_matrix(rng, Z(), n, n, -9, 9);
    std::vector<RingValue> factors;
    RingValue product = Z()->one();
    for (int i = 0; i < n; ++i) {
      factors.push_back(Z()->from_int(rng.int_in(-4, 4)));
      product = product * factors.back();
    }
    CHECK(leibniz_det(scale_rows(a, factors)) == product * leibniz_det(a));
  }
}

TEST_CASE("last_column_reduction") {
  CHECK(last_column_reduction(Matrix::identity(Z(), 3)) == Z()->one());
  CHECK(last_column_reduction(
            Matrix::from_ints(Z(), {{1, 2, 0}, {3, 4, 0}, {5, 6, 7}})) ==
        Z()->from_int(-14));
  CHECK(last_column_reduction(Matrix::from_ints(Z(), {{5}})) ==
        Z()->from_int(5));
  CHECK_THROWS_AS(
      last_column_reduction(Matrix::from_ints(Z(), {{1, 1}, {1, 1}})),
      std::invalid_argument);

  RandomSource rng(104);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = static_cast<int>(rng.int_in(1, 5));
    const Matrix a = Matrix::build(Z(), n, n, [&](int i, int j) {
      if (j == n && i < n) return Z()->zero();
      return Z()->from_int(rng.int_in(-9, 9));
    });
    CHECK(last_column_reduction(a) == leibniz_det(a));
  }
}

TEST_CASE("kernel_scaling_check") {
  CHECK(kernel_scaling_check(Matrix(Z(), 3, 3),
                             Matrix::from_ints(Z(), {{4}, {-1}, {7}})));
  CHECK(kernel_scaling_check(Matrix::from_ints(Z(), {{1, 1}, {1, 1}}),
                             Matrix::from_ints(Z(), {{1}, {-1}})));
  CHECK_THROWS_AS(kernel_scaling_check(Matrix::identity(Z(), 2),
                                       Matrix::from_ints(Z(), {{1}, {0}})),
                  std::invalid_argument);
}

TEST_CASE("chio_condense on pinned cases") {
  const auto [c_eye, f_eye] = chio_condense(Matrix::identity(Z(), 3));
  CHECK(c_eye == Matrix::identity(Z(), 2));
  CHECK(f_eye == Z()->one());

  const Matrix m = Matrix::from_ints(Z(), {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
  const auto [condensed, factor] = chio_condense(m);
  CHECK(condensed == Matrix::from_ints(Z(), {{-11, -4}, {-2, 2}}));
  CHECK(factor == Z()->from_int(10));
  CHECK(leibniz_det(condensed) == Z()->from_int(-30));
  CHECK(leibniz_det(condensed) == factor * leibniz_det(m));

  // n=2: the condensed 1x1 matrix is the determinant itself, factor 1
  const auto ring = polynomials({"a", "b", "c", "d"});
  const Matrix generic2 = Matrix::build(ring, 2, 2, [&](int i, int j) {
    return ring->indeterminate(static_cast<std::size_t>(i - 1) * 2 + (j - 1));
  });
  const auto [c2, f2] = chio_condense(generic2);
  CHECK(c2.at(1, 1) == leibniz_det(generic2));
  CHECK(f2 == ring->one());

  CHECK_THROWS_AS(chio_condense(Matrix::from_ints(Z(), {{3}})),
                  std::invalid_argument);
}

TEST_CASE("condensation identity holds on random matrices, zero pivots too") {
  RandomSource rng(105);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.int_in(2, 5));
    const bool kill_pivot = trial % 3 == 0;
    const Matrix a = Matrix::build(Z(), n, n, [&](int i, int j) {
      if (kill_pivot && i == n && j == n) return Z()->zero();
      return Z()->from_int(rng.int_in(-9, 9));
    });
    const auto [condensed, factor] = chio_condense(a);
    CHECK(leibniz_det(condensed) == factor * leibniz_det(a));
  }
}

TEST_CASE("condensation identity holds over random polynomial matrices") {
  RandomSource rng(109);
  const auto ring = polynomials({"s", "t"});
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const bool kill_pivot = trial == 0;
      const Matrix a = Matrix::build(ring, n, n, [&](int i, int j) {
        if (kill_pivot && i == n && j == n) return ring->zero();
        RingValue v = ring->from_int(rng.int_in(-2, 2));
        v = v + ring->from_int(rng.int_in(-1, 1)) * ring->indeterminate(0);
        v = v + ring->from_int(rng.int_in(-1, 1)) * ring->indeterminate(1);
        return v;
      });
      const auto [condensed, factor] = chio_condense(a);
      CHECK(leibniz_det(condensed) == factor * leibniz_det(a));
    }
  }
}

TEST_CASE("condensation identity holds symbolically") {
  for (int n = 2; n <= 3; ++n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        names.push_back("x" + std::to_string(i) + "_" + std::to_string(j));
      }
    }
    const auto ring = polynomials(names);
    const Matrix a = Matrix::build(ring, n, n, [&](int i, int j) {
      return ring->indeterminate(static_cast<std::size_t>(i - 1) * n +
                                 (j - 1));
    });
    const auto [condensed, factor] = chio_condense(a);
    CHECK(leibniz_det(condensed) == factor * leibniz_det(a));
  }
}

TEST_CASE("chio_det on pinned cases") {
  CHECK(chio_det(Matrix::identity(Z(), 5)) == Z()->one());
  CHECK(chio_det(Matrix::from_ints(Z(), {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) ==
        Z()->from_int(-3));
  CHECK(chio_det(Matrix::from_ints(Z(), {{0, 1}, {1, 0}})) ==
        Z()->from_int(-1));
  CHECK(chio_det(Matrix(Z(), 4, 4)).is_zero());
  CHECK(chio_det(Matrix(Z(), 0, 0)) == Z()->one());
  CHECK_THROWS_AS(chio_det(Matrix(Z(), 2, 3)), std::invalid_argument);
}

TEST_CASE("chio_det refuses non integral domains") {
  const auto z6 = integers_mod(6);
  CHECK_THROWS_AS(chio_det(Matrix::identity(z6, 2)), std::domain_error);
}

TEST_CASE("chio_det equals leibniz_det across rings") {
  RandomSource rng(106);
  const auto z7 = integers_mod(7);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = static_cast<int>(rng.int_in(0, 5));
    const Matrix a = random_matrix(rng, Z(), n, n, -9, 9);
    CHECK(chio_det(a) == leibniz_det(a));
    const Matrix b = random_matrix(rng, z7, n, n, 0, 6);
    CHECK(chio_det(b) == leibniz_det(b));
  }

  const auto ring = polynomials({"s", "t"});
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(rng.int_in(0, 3));
    const Matrix a = Matrix::build(ring, n, n, [&](int, int) {
      RingValue v = ring->from_int(rng.int_in(-2, 2));
      v = v + ring->from_int(rng.int_in(-1, 1)) * ring->indeterminate(0);
      v = v + ring->from_int(rng.int_in(-1, 1)) * ring->indeterminate(1);
      return v;
    });
    CHECK(chio_det(a) == leibniz_det(a));
  }
}

TEST_CASE("chio_det handles zero rows and zero pivots") {
  RandomSource rng(107);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.int_in(1, 5));
    const int dead_row = static_cast<int>(rng.int_in(1, n));
    const bool kill_pivot = trial % 2 == 0;
    const Matrix a = Matrix::build(Z(), n, n, [&](int i, int j) {
      if (i == dead_row) return Z()->zero();
      if (kill_pivot && i == n && j == n) return Z()->zero();
      return Z()->from_int(rng.int_in(-9, 9));
    });
    CHECK(chio_det(a).is_zero());
    CHECK(leibniz_det(a).is_zero());
  }
}

TEST_CASE("determinant is multiplicative") {
  RandomSource rng(108);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = static_cast<int>(rng.int_in(0, 4));
    const Matrix a = random_matrix(rng, Z(), n, n, -9, 9);
    const Matrix b = random_matrix(rng, Z(), n, n, -9, 9);
    CHECK(leibniz_det(multiply(b, a)) == leibniz_det(b) * leibniz_det(a));
  }
}

TEST_CASE("matrix file parsing") {
  std::istringstream good(
      "# determinant example\n"
      "3 3\n"
      "1 2 3\n"
      "# middle comment\n"
      "4 5 6\n"
      "7 8 10\n");
  const Matrix m = read_matrix(good, Z());
  CHECK(m == Matrix::from_ints(Z(), {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}));

  std::istringstream empty("0 0\n");
  CHECK(read_matrix(empty, Z()).rows() == 0);

  std::istringstream bad_header("3\n1 2 3\n");
  CHECK_THROWS_AS(read_matrix(bad_header, Z()), std::invalid_argument);
  std::istringstream junk_header("2x 2\n1 2\n3 4\n");
  CHECK_THROWS_AS(read_matrix(junk_header, Z()), std::invalid_argument);
  std::istringstream negative_header("-1 2\n");
  CHECK_THROWS_AS(read_matrix(negative_header, Z()), std::invalid_argument);
  std::istringstream short_row("2 2\n1 2\n3\n");
  CHECK_THROWS_AS(read_matrix(short_row, Z()), std::invalid_argument);
  std::istringstream bad_entry("1 1\nx\n");
  CHECK_THROWS_AS(read_matrix(bad_entry, Z()), std::invalid_argument);
  std::istringstream missing_row("2 2\n1 2\n");
  CHECK_THROWS_AS(read_matrix(missing_row, Z()), std::invalid_argument);

  // arbitrary-precision entries survive the round trip
  std::istringstream big("1 1\n123456789012345678901234567890\n");
  CHECK(read_matrix(big, Z()).at(1, 1).str() ==
        "123456789012345678901234567890");
}

TEST_CASE("matrix indexing and equality") {
  const Matrix a = Matrix::from_ints(Z(), {{1, 2}, {3, 4}});
  CHECK(a.at(2, 1) == Z()->from_int(3));
  CHECK_THROWS_AS(a.at(0, 1), std::out_of_range);
  CHECK_THROWS_AS(a.at(1, 3), std::out_of_range);
  CHECK(a != Matrix::from_ints(Z(), {{1, 2}, {3, 5}}));
  CHECK_THROWS_AS(Matrix::from_ints(Z(), {{1, 2}, {3}}),
                  std::invalid_argument);
}

TEST_SUITE_END();
