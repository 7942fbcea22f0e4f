#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "polar/gf.hpp"
#include "polar/matrix.hpp"

namespace polar {

using BigInt = boost::multiprecision::cpp_int;

// A vertex of Lambda: the subspace (X - 1/2 Z Delta Z^t | I | Z).
struct Vertex {
  Mat X;  // nu x nu alternate
  Mat Z;  // nu x 2

  friend bool operator==(const Vertex& a, const Vertex& b) { return a.X == b.X && a.Z == b.Z; }
};

// For delta = 1 the definite block is (1) or (z).
enum class DeltaOneVariant { One, Z };

// F_q^{2nu+delta} with Gram matrix [[0, I, 0], [I, 0, 0], [0, 0, Delta]].
class OrthoSpace {
 public:
  OrthoSpace(FieldPtr f, int nu, int delta = 2, DeltaOneVariant variant = DeltaOneVariant::One);

  const FieldPtr& field() const { return field_; }
  const Field& F() const { return *field_; }
  int nu() const { return nu_; }
  int delta() const { return delta_; }
  int dim() const { return 2 * nu_ + delta_; }
  DeltaOneVariant variant() const { return variant_; }
  const Mat& gram() const { return gram_; }
  const Mat& Delta() const { return Delta_; }
  // The 2(q+1) elements of O_{2x0+2,Delta}; empty unless delta = 2.
  const std::vector<Mat>& o2() const { return o2_; }

  void require_delta2() const;

 private:
  FieldPtr field_;
  int nu_, delta_;
  DeltaOneVariant variant_;
  Mat gram_, Delta_;
  std::vector<Mat> o2_;
};

bool is_isometry(const OrthoSpace& sp, const Mat& m);
bool is_totally_isotropic(const OrthoSpace& sp, const Mat& p);
// S Delta S^t = Delta for a 2x2 S.
bool preserves_delta(const OrthoSpace& sp, const Mat& s);

// Group orders. |GL_n| = 1 for n <= 0 and |Sp_{2m}| = 1 for m <= 0.
BigInt order_gl(int n, long long q);
BigInt order_sp(int two_m, long long q);
BigInt order_o(int two_nu_plus_2, long long q);

// Elements [[x, y], [yz, x]] then [[x, y], [-yz, -x]] with x^2 - y^2 z = 1,
// each family in increasing (x, y) index order.
std::vector<Mat> enumerate_o2(const OrthoSpace& sp);

struct LineNormalForm {
  Mat S;
  int label = 0;  // 0: (a, b)S spans (1, 0); 1: spans (1, 1)
};

// First S in enumerate_o2 order carrying the row space of (a, b) to the
// normal form selected by the square class of a^2 - z b^2.
LineNormalForm normalize_line(const OrthoSpace& sp, Elem a, Elem b);

// [T, (T^t)^{-1}, S] in the stabilizer of P0 and P1.
struct G01Element {
  Mat T;
  Mat S;

  Mat full() const;
};

G01Element g01_element(const OrthoSpace& sp, const Mat& T, const Mat& S);
G01Element g01_identity(const OrthoSpace& sp);
// Matrix product: acting by compose(g, h) is acting by g, then by h.
G01Element compose(const G01Element& g, const G01Element& h);
G01Element inverse(const G01Element& g);
// (X, Z) -> (T^t X T, T^t Z S).
Vertex g01_act(const G01Element& g, const Vertex& v);

// Element of the stabilizer of P0:
//   [[T11, 0, 0], [T21, (T11^t)^{-1}, T23], [-S Delta T23^t T11, 0, S]].
struct G0Element {
  Mat T11, T21, T23, S;
};

// Throws std::invalid_argument unless
// (T11^t)^{-1} T21^t + T21 T11^{-1} + T23 Delta T23^t = 0 and S preserves Delta.
G0Element g0_element(const OrthoSpace& sp, const Mat& T11, const Mat& T21, const Mat& T23, const Mat& S);
Mat g0_full(const OrthoSpace& sp, const G0Element& g);
G0Element g0_from_g01(const OrthoSpace& sp, const G01Element& g);
Vertex g0_act(const OrthoSpace& sp, const G0Element& g, const Vertex& v);

}  // namespace polar
