#include <doctest.h>

#include "helpers.hpp"

using namespace polar;
using namespace testing_helpers;

TEST_CASE("matrix arithmetic examples") {
  auto f = Field::create(3);
  Mat a = Mat::from_ints(f, 2, 2, {1, 2, 0, 1});
  Mat b = Mat::from_ints(f, 2, 2, {1, 0, 1, 1});
  CHECK(a * b == Mat::from_ints(f, 2, 2, {0, 2, 1, 1}));
  CHECK(Mat::identity(f, 2) * a == a);
  CHECK(transpose(transpose(a)) == a);
  CHECK(inverse(Mat::from_ints(f, 2, 2, {1, 1, 0, 1})) == Mat::from_ints(f, 2, 2, {1, 2, 0, 1}));
  CHECK_THROWS_AS(inverse(Mat::from_ints(f, 2, 2, {1, 1, 1, 1})), std::domain_error);
  CHECK(rank(Mat(f, 3, 4)) == 0);
  CHECK(rank(std_alternate(f, 1)) == 2);
  CHECK(scale(Elem{2}, a) == Mat::from_ints(f, 2, 2, {2, 1, 0, 2}));
  CHECK(a + b - b == a);
  CHECK_THROWS(a * Mat(f, 3, 3));
}

TEST_CASE("block builders") {
  auto f = Field::create(3);
  Mat a2 = std_alternate(f, 1);
  Mat bd = block_diag({a2, Mat(f, 1, 1)});
  CHECK(bd == Mat::from_ints(f, 3, 3, {0, 1, 0, -1, 0, 0, 0, 0, 0}));
  int nu = 3;
  Mat h = hconcat({Mat(f, nu, nu), Mat::identity(f, nu), Mat(f, nu, 2)});
  CHECK(h.rows() == nu);
  CHECK(h.cols() == 2 * nu + 2);
  CHECK(basis_vector(f, 2, 1) == Mat::from_ints(f, 2, 1, {1, 0}));
  CHECK(std_alternate(f, 0).rows() == 0);
  CHECK(rank(mat_K(f)) == 4);
  CHECK(rank(mat_Y(f)) == 2);
  CHECK(is_alternate(mat_K(f)));
  CHECK(is_alternate(mat_Y(f)));
  CHECK(vconcat({a2, a2}).rows() == 4);
  CHECK(h.block(0, nu, nu, nu) == Mat::identity(f, nu));
}

TEST_CASE("rank, determinant and inverse on random matrices") {
  std::mt19937_64 rng(7);
  for (int q : {3, 5, 9}) {
    auto f = Field::create(q);
    for (int trial = 0; trial < 100; ++trial) {
      int n = 1 + trial % 5;
      Mat a = random_mat(f, n, n, rng), b = random_mat(f, n, n, rng);
      CHECK(det(a * b) == f->mul(det(a), det(b)));
      CHECK((rank(a) == n) == !det(a).is_zero());
      if (rank(a) == n) CHECK(a * inverse(a) == Mat::identity(f, n));
      CHECK(rank(a) == rank(transpose(a)));
      int r = 0;
      Mat e = rref(a, &r);
      CHECK(r == rank(a));
      CHECK(row_space_equal(e, a));
      Mat g = random_invertible(f, n, rng);
      CHECK(row_space_equal(g * a, a));
    }
  }
}

TEST_CASE("alternate normalization") {
  auto f3 = Field::create(3);
  {
    auto n = alt_normalize(Mat(f3, 3, 3));
    CHECK(n.r == 0);
    CHECK(n.T == Mat::identity(f3, 3));
  }
  {
    auto n = alt_normalize(std_alternate(f3, 1));
    CHECK(n.r == 1);
    CHECK(n.T == Mat::identity(f3, 2));
  }
  {
    Mat x = Mat::from_ints(f3, 2, 2, {0, 2, 1, 0});
    auto n = alt_normalize(x);
    CHECK(n.r == 1);
    CHECK(transpose(n.T) * x * n.T == std_alternate(f3, 1));
  }
  CHECK_THROWS(alt_normalize(Mat::from_ints(f3, 2, 2, {1, 0, 0, 0})));
  std::mt19937_64 rng(11);
  for (int q : {3, 5, 7, 25}) {
    auto f = Field::create(q);
    for (int trial = 0; trial < 60; ++trial) {
      int n = 1 + trial % 6;
      Mat x = random_alternate(f, n, rng);
      if (trial % 3 == 0) {
        Mat low = random_mat(f, n, 2, rng);
        Mat a = std_alternate(f, 1);
        x = n >= 2 ? low * a * transpose(low) : x;  // rank <= 2
      }
      CHECK(is_alternate(x));
      auto nf = alt_normalize(x);
      CHECK(rank(nf.T) == n);
      CHECK(2 * nf.r == rank(x));
      CHECK(transpose(nf.T) * x * nf.T == block_diag({std_alternate(f, nf.r), Mat(f, n - 2 * nf.r, n - 2 * nf.r)}));
    }
  }
}
