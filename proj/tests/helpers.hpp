#pragma once

#include <random>

#include "polar/geometry.hpp"
#include "polar/lambda_graph.hpp"

namespace testing_helpers {

using namespace polar;

inline Elem random_elem(const Field& F, std::mt19937_64& rng) {
  return F.at(std::uniform_int_distribution<int>(0, F.order() - 1)(rng));
}

inline Mat random_mat(const FieldPtr& f, int r, int c, std::mt19937_64& rng) {
  Mat m(f, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = random_elem(*f, rng);
  return m;
}

inline Mat random_invertible(const FieldPtr& f, int n, std::mt19937_64& rng) {
  for (;;) {
    Mat m = random_mat(f, n, n, rng);
    if (rank(m) == n) return m;
  }
}

inline Mat random_alternate(const FieldPtr& f, int n, std::mt19937_64& rng) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = random_elem(*f, rng);
      m(j, i) = f->neg(m(i, j));
    }
  return m;
}

inline G01Element random_g01(const OrthoSpace& sp, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> d(0, sp.o2().size() - 1);
  return g01_element(sp, random_invertible(sp.field(), sp.nu(), rng), sp.o2()[d(rng)]);
}

// T21 = (-1/2 T23 Delta T23^t + W) T11 with W alternate satisfies the
// block constraint for any T11, T23.
inline G0Element random_g0(const OrthoSpace& sp, std::mt19937_64& rng) {
  const FieldPtr& f = sp.field();
  int nu = sp.nu();
  Mat t11 = random_invertible(f, nu, rng);
  Mat t23 = random_mat(f, nu, 2, rng);
  Mat m = random_alternate(f, nu, rng) - scale(sp.F().half(), t23 * sp.Delta() * transpose(t23));
  std::uniform_int_distribution<std::size_t> d(0, sp.o2().size() - 1);
  return g0_element(sp, t11, m * t11, t23, sp.o2()[d(rng)]);
}

inline Vertex random_vertex(const OrthoSpace& sp, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(0, vertex_count(sp.F().order(), sp.nu()) - 1);
  return vertex_at(sp, d(rng));
}

}  // namespace testing_helpers
