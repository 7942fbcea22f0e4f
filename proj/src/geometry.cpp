#include "polar/geometry.hpp"

#include <stdexcept>

#include "polar/lambda_graph.hpp"

namespace polar {

OrthoSpace::OrthoSpace(FieldPtr f, int nu, int delta, DeltaOneVariant variant)
    : field_(std::move(f)), nu_(nu), delta_(delta), variant_(variant) {
  if (!field_) throw std::invalid_argument("space without a field");
  if (nu < 1) throw std::invalid_argument("nu must be >= 1, got " + std::to_string(nu));
  if (delta < 0 || delta > 2) throw std::invalid_argument("delta must be 0, 1 or 2, got " + std::to_string(delta));
  const Field& F = *field_;

  Delta_ = Mat(field_, delta, delta);
  if (delta == 1) Delta_(0, 0) = variant == DeltaOneVariant::One ? F.one() : F.z();
  if (delta == 2) {
    Delta_(0, 0) = F.one();
    Delta_(1, 1) = F.neg(F.z());
  }

  gram_ = Mat(field_, dim(), dim());
  gram_.set_block(0, nu, Mat::identity(field_, nu));
  gram_.set_block(nu, 0, Mat::identity(field_, nu));
  gram_.set_block(2 * nu, 2 * nu, Delta_);

  // Definiteness of Delta: x Delta x^t != 0 for x != 0.
  if (delta > 0) {
    int total = 1;
    for (int i = 0; i < delta; ++i) total *= F.order();
    for (int idx = 1; idx < total; ++idx) {
      Mat x(field_, 1, delta);
      int rest = idx;
      for (int i = 0; i < delta; ++i) {
        x(0, i) = F.at(rest % F.order());
        rest /= F.order();
      }
      if ((x * Delta_ * transpose(x)).is_zero()) throw std::logic_error("Delta is not definite");
    }
  }
  if (delta == 2) o2_ = enumerate_o2(*this);
}

void OrthoSpace::require_delta2() const {
  if (delta_ != 2) throw std::invalid_argument("operation requires delta = 2");
}

bool is_isometry(const OrthoSpace& sp, const Mat& m) {
  if (m.rows() != sp.dim() || m.cols() != sp.dim())
    throw std::invalid_argument("is_isometry: expected a " + std::to_string(sp.dim()) + "x" +
                                std::to_string(sp.dim()) + " matrix");
  return m * sp.gram() * transpose(m) == sp.gram();
}

bool is_totally_isotropic(const OrthoSpace& sp, const Mat& p) {
  if (p.cols() != sp.dim()) return false;
  return (p * sp.gram() * transpose(p)).is_zero() && rank(p) == p.rows();
}

bool preserves_delta(const OrthoSpace& sp, const Mat& s) {
  if (s.rows() != sp.delta() || s.cols() != sp.delta()) return false;
  return s * sp.Delta() * transpose(s) == sp.Delta();
}

BigInt order_gl(int n, long long q) {
  if (n <= 0) return 1;
  BigInt qq = q;
  BigInt r = boost::multiprecision::pow(qq, static_cast<unsigned>(n * (n - 1) / 2));
  for (int i = 1; i <= n; ++i) r *= boost::multiprecision::pow(qq, static_cast<unsigned>(i)) - 1;
  return r;
}

BigInt order_sp(int two_m, long long q) {
  if (two_m % 2 != 0) throw std::invalid_argument("order_sp: odd dimension");
  int m = two_m / 2;
  if (m <= 0) return 1;
  BigInt qq = q;
  BigInt r = boost::multiprecision::pow(qq, static_cast<unsigned>(m * m));
  for (int i = 1; i <= m; ++i) r *= boost::multiprecision::pow(qq, static_cast<unsigned>(2 * i)) - 1;
  return r;
}

BigInt order_o(int two_nu_plus_2, long long q) {
  if (two_nu_plus_2 < 2 || two_nu_plus_2 % 2 != 0)
    throw std::invalid_argument("order_o: dimension must be even and >= 2");
  int nu = (two_nu_plus_2 - 2) / 2;
  BigInt qq = q;
  BigInt r = boost::multiprecision::pow(qq, static_cast<unsigned>(nu * (nu + 1)));
  for (int i = 1; i <= nu; ++i) r *= boost::multiprecision::pow(qq, static_cast<unsigned>(i)) - 1;
  for (int i = 0; i <= nu + 1; ++i) r *= boost::multiprecision::pow(qq, static_cast<unsigned>(i)) + 1;
  return r;
}

std::vector<Mat> enumerate_o2(const OrthoSpace& sp) {
  sp.require_delta2();
  const FieldPtr& f = sp.field();
  const Field& F = *f;
  Elem z = F.z();
  std::vector<Mat> out;
  for (int sign = 0; sign < 2; ++sign)
    for (Elem x : F.elements())
      for (Elem y : F.elements()) {
        if (F.sub(F.mul(x, x), F.mul(F.mul(y, y), z)) != F.one()) continue;
        Mat s(f, 2, 2);
        s(0, 0) = x;
        s(0, 1) = y;
        s(1, 0) = F.mul(y, z);
        s(1, 1) = x;
        if (sign == 1) {
          s(1, 0) = F.neg(s(1, 0));
          s(1, 1) = F.neg(x);
        }
        out.push_back(s);
      }
  if (out.size() != static_cast<std::size_t>(2 * (F.order() + 1)))
    throw std::logic_error("O_2 enumeration found " + std::to_string(out.size()) + " elements");
  return out;
}

LineNormalForm normalize_line(const OrthoSpace& sp, Elem a, Elem b) {
  sp.require_delta2();
  const Field& F = sp.F();
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("normalize_line: zero vector");
  int label = F.is_square(F.sub(F.mul(a, a), F.mul(F.z(), F.mul(b, b)))) ? 0 : 1;
  Mat v(sp.field(), 1, 2);
  v(0, 0) = a;
  v(0, 1) = b;
  for (const Mat& s : sp.o2()) {
    Mat w = v * s;
    if (w(0, 0).is_zero()) continue;
    Elem want = label == 0 ? F.zero() : w(0, 0);
    if (w(0, 1) == want) return {s, label};
  }
  throw std::logic_error("normalize_line: no witness in O_2");
}

Mat G01Element::full() const {
  return block_diag({T, inverse(transpose(T)), S});
}

G01Element g01_element(const OrthoSpace& sp, const Mat& T, const Mat& S) {
  sp.require_delta2();
  if (T.rows() != sp.nu() || T.cols() != sp.nu())
    throw std::invalid_argument("g01_element: T must be nu x nu");
  if (rank(T) != sp.nu()) throw std::invalid_argument("g01_element: T is singular");
  if (!preserves_delta(sp, S)) throw std::invalid_argument("g01_element: S does not preserve Delta");
  return {T, S};
}

G01Element g01_identity(const OrthoSpace& sp) {
  return {Mat::identity(sp.field(), sp.nu()), Mat::identity(sp.field(), 2)};
}

G01Element compose(const G01Element& g, const G01Element& h) { return {g.T * h.T, g.S * h.S}; }

G01Element inverse(const G01Element& g) { return {inverse(g.T), inverse(g.S)}; }

Vertex g01_act(const G01Element& g, const Vertex& v) {
  Mat tt = transpose(g.T);
  return {tt * v.X * g.T, tt * v.Z * g.S};
}

G0Element g0_element(const OrthoSpace& sp, const Mat& T11, const Mat& T21, const Mat& T23, const Mat& S) {
  sp.require_delta2();
  int nu = sp.nu();
  if (T11.rows() != nu || T11.cols() != nu || T21.rows() != nu || T21.cols() != nu || T23.rows() != nu ||
      T23.cols() != 2)
    throw std::invalid_argument("g0_element: block shapes do not match nu = " + std::to_string(nu));
  if (rank(T11) != nu) throw std::invalid_argument("g0_element: T11 is singular");
  if (!preserves_delta(sp, S)) throw std::invalid_argument("g0_element: S does not preserve Delta");
  Mat t11inv = inverse(T11);
  Mat c = transpose(t11inv) * transpose(T21) + T21 * t11inv + T23 * sp.Delta() * transpose(T23);
  if (!c.is_zero()) throw std::invalid_argument("g0_element: block constraint violated");
  return {T11, T21, T23, S};
}

Mat g0_full(const OrthoSpace& sp, const G0Element& g) {
  int nu = sp.nu();
  Mat m(sp.field(), sp.dim(), sp.dim());
  m.set_block(0, 0, g.T11);
  m.set_block(nu, 0, g.T21);
  m.set_block(nu, nu, inverse(transpose(g.T11)));
  m.set_block(nu, 2 * nu, g.T23);
  m.set_block(2 * nu, 0, -(g.S * sp.Delta() * transpose(g.T23) * g.T11));
  m.set_block(2 * nu, 2 * nu, g.S);
  return m;
}

G0Element g0_from_g01(const OrthoSpace& sp, const G01Element& g) {
  return {g.T, Mat(sp.field(), sp.nu(), sp.nu()), Mat(sp.field(), sp.nu(), 2), g.S};
}

Vertex g0_act(const OrthoSpace& sp, const G0Element& g, const Vertex& v) {
  return vertex_from_matrix(sp, realize(sp, v) * g0_full(sp, g));
}

}  // namespace polar
