#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "polar/scheme.hpp"

using namespace polar;
using namespace testing_helpers;

TEST_CASE("space construction") {
  auto f3 = Field::create(3);
  OrthoSpace sp(f3, 2);
  CHECK(sp.Delta() == Mat::identity(f3, 2));
  CHECK(sp.gram().rows() == 6);
  CHECK(sp.gram() == transpose(sp.gram()));
  CHECK(rank(sp.gram()) == 6);
  OrthoSpace s0(f3, 2, 0);
  CHECK(s0.gram().rows() == 4);
  CHECK(s0.gram() == Mat::from_ints(f3, 4, 4, {0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0}));
  OrthoSpace s1(f3, 2, 1, DeltaOneVariant::Z);
  CHECK(s1.Delta()(0, 0) == f3->z());
  CHECK_THROWS_AS(OrthoSpace(f3, 0), std::invalid_argument);
  CHECK_THROWS_AS(OrthoSpace(f3, 2, 3), std::invalid_argument);
  auto f5 = Field::create(5);
  OrthoSpace s5(f5, 2);
  CHECK(s5.Delta() == Mat::diag(f5, {f5->one(), f5->neg(f5->z())}));
  // x Delta x^t != 0 for every nonzero x in F_3^2
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (a == 0 && b == 0) continue;
      Mat x = Mat::from_ints(f3, 1, 2, {a, b});
      CHECK_FALSE((x * sp.Delta() * transpose(x)).is_zero());
    }
}

TEST_CASE("isometries and isotropic subspaces") {
  auto f3 = Field::create(3);
  OrthoSpace sp(f3, 2);
  CHECK(is_isometry(sp, Mat::identity(f3, 6)));
  CHECK(is_isometry(sp, scale(Elem{2}, Mat::identity(f3, 6))));
  Mat shear = Mat::identity(f3, 6);
  shear(0, 1) = f3->one();
  CHECK_FALSE(is_isometry(sp, shear));
  CHECK(is_totally_isotropic(sp, base_subspace_p0(sp)));
  CHECK(is_totally_isotropic(sp, realize(sp, base_vertex(sp))));
  Mat last(f3, 1, 6);
  last(0, 5) = f3->one();
  CHECK_FALSE(is_totally_isotropic(sp, last));
}

TEST_CASE("group orders") {
  CHECK(order_gl(2, 3) == 48);
  CHECK(order_sp(2, 3) == 24);
  CHECK(order_o(2, 3) == 8);
  CHECK(order_gl(0, 3) == 1);
  CHECK(order_sp(0, 3) == 1);
  CHECK(order_sp(-2, 3) == 1);
  CHECK(order_gl(3, 5) == BigInt(1488000));
}

TEST_CASE("O_2 of the definite block is a group of order 2(q+1)") {
  for (int q : {3, 5, 7, 9, 11}) {
    CAPTURE(q);
    OrthoSpace sp(Field::create(q), 1);
    const auto& o2 = sp.o2();
    CHECK(o2.size() == static_cast<std::size_t>(2 * (q + 1)));
    CHECK(BigInt(o2.size()) == order_o(2, q));
    auto key = [](const Mat& m) { return m.entries(); };
    std::set<std::vector<Elem>> set;
    for (const auto& s : o2) set.insert(key(s));
    CHECK(set.size() == o2.size());
    CHECK(set.count(key(Mat::identity(sp.field(), 2))));
    CHECK(set.count(key(-Mat::identity(sp.field(), 2))));
    for (const auto& s : o2) {
      CHECK(preserves_delta(sp, s));
      CHECK(set.count(key(inverse(s))));
      for (const auto& t : o2) CHECK(set.count(key(s * t)));
    }
    // brute force over all 2x2 matrices
    if (q <= 7) {
      std::size_t found = 0;
      for (int i = 0; i < q * q * q * q; ++i) {
        Mat s(sp.field(), 2, 2);
        int r = i;
        for (int k = 0; k < 4; ++k, r /= q) s(k / 2, k % 2) = sp.F().at(r % q);
        if (preserves_delta(sp, s)) ++found;
      }
      CHECK(found == o2.size());
    }
  }
}

TEST_CASE("line normalization") {
  auto f3 = Field::create(3);
  OrthoSpace sp(f3, 1);
  auto n = normalize_line(sp, Elem{1}, Elem{0});
  CHECK(n.label == 0);
  CHECK(n.S == Mat::identity(f3, 2));
  CHECK(normalize_line(sp, Elem{1}, Elem{1}).label == 1);
  CHECK(normalize_line(sp, Elem{0}, Elem{1}).label == 0);
  CHECK_THROWS(normalize_line(sp, Elem{0}, Elem{0}));
  for (int q : {3, 5, 7, 9}) {
    OrthoSpace s(Field::create(q), 1);
    const Field& F = s.F();
    for (Elem a : F.elements())
      for (Elem b : F.elements()) {
        if (a.is_zero() && b.is_zero()) continue;
        auto r = normalize_line(s, a, b);
        CHECK(r.label == (F.is_square(F.sub(F.mul(a, a), F.mul(F.z(), F.mul(b, b)))) ? 0 : 1));
        Mat v = Mat::from_ints(s.field(), 1, 2, {0, 0});
        v(0, 0) = a;
        v(0, 1) = b;
        Mat w = v * r.S;
        Mat target(s.field(), 1, 2);
        target(0, 0) = F.one();
        target(0, 1) = r.label == 0 ? F.zero() : F.one();
        CHECK(row_space_equal(w, target));
      }
  }
}

TEST_CASE("G01 elements and their action") {
  std::mt19937_64 rng(3);
  for (int q : {3, 5}) {
    for (int nu : {1, 2, 3}) {
      OrthoSpace sp(Field::create(q), nu);
      Vertex p1 = base_vertex(sp);
      for (int k = 0; k < 40; ++k) {
        G01Element g = random_g01(sp, rng), h = random_g01(sp, rng);
        Vertex v = random_vertex(sp, rng);
        CHECK(is_isometry(sp, g.full()));
        CHECK(g01_act(g, p1) == p1);
        CHECK(g01_act(g01_identity(sp), v) == v);
        CHECK(g01_act(compose(g, h), v) == g01_act(h, g01_act(g, v)));
        CHECK(g01_act(inverse(g), g01_act(g, v)) == v);
        // agrees with the matrix action on realized subspaces
        CHECK(g0_act(sp, g0_from_g01(sp, g), v) == g01_act(g, v));
        CHECK(g0_full(sp, g0_from_g01(sp, g)) == g.full());
      }
    }
  }
  auto f3 = Field::create(3);
  OrthoSpace sp(f3, 2);
  CHECK_THROWS_AS(g01_element(sp, Mat(f3, 2, 2), Mat::identity(f3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(g01_element(sp, Mat::identity(f3, 2), Mat::from_ints(f3, 2, 2, {1, 1, 0, 1})),
                  std::invalid_argument);
}

TEST_CASE("G0 elements preserve the form and fix P0") {
  std::mt19937_64 rng(5);
  for (int q : {3, 5, 9}) {
    for (int nu : {1, 2, 3}) {
      OrthoSpace sp(Field::create(q), nu);
      for (int k = 0; k < 34; ++k) {
        G0Element g = random_g0(sp, rng);
        Mat full = g0_full(sp, g);
        CHECK(is_isometry(sp, full));
        CHECK(row_space_equal(base_subspace_p0(sp) * full, base_subspace_p0(sp)));
        Vertex v = random_vertex(sp, rng);
        Vertex w = g0_act(sp, g, v);
        CHECK(is_totally_isotropic(sp, realize(sp, w)));
      }
    }
  }
  auto f3 = Field::create(3);
  OrthoSpace sp(f3, 2);
  Mat i2 = Mat::identity(f3, 2);
  G0Element id = g0_element(sp, i2, Mat(f3, 2, 2), Mat(f3, 2, 2), i2);
  CHECK(g0_full(sp, id) == Mat::identity(f3, 6));
  CHECK_THROWS_AS(g0_element(sp, i2, i2, Mat(f3, 2, 2), i2), std::invalid_argument);
  std::mt19937_64 r2(9);
  for (int k = 0; k < 100; ++k) {
    Vertex v = random_vertex(sp, r2);
    G0Element t = transporter_to_basepoint(sp, v);
    CHECK_NOTHROW(g0_element(sp, t.T11, t.T21, t.T23, t.S));
    CHECK(g0_act(sp, t, v) == base_vertex(sp));
  }
}
