#include <stdexcept>

#include "polar/lambda_graph.hpp"
#include "polar/suborbits.hpp"

namespace polar {

namespace {

Mat zeros(const FieldPtr& f, int n) { return Mat(f, n, n); }

Mat diag_prefix(const FieldPtr& f, int nu, const std::vector<Elem>& head) {
  Mat t = Mat::identity(f, nu);
  for (int i = 0; i < static_cast<int>(head.size()); ++i) t(i, i) = head[i];
  return t;
}

// nu x nu matrix [lead | I-block] with leading block in the top-left corner.
Mat embed_leading(const FieldPtr& f, int nu, const Mat& lead) {
  Mat t = Mat::identity(f, nu);
  t.set_block(0, 0, lead);
  return t;
}

// Invertible N whose first columns are `cols` (independent), completed by
// standard basis vectors in increasing order.
Mat complete_basis(const FieldPtr& f, int nu, const std::vector<Mat>& cols) {
  std::vector<Mat> out = cols;
  for (int i = 1; i <= nu && static_cast<int>(out.size()) < nu; ++i) {
    auto trial = out;
    trial.push_back(basis_vector(f, nu, i));
    if (rank(hconcat(trial)) == static_cast<int>(trial.size())) out = std::move(trial);
  }
  return hconcat(out);
}

// The minus-half-Delta correction [-1/2 Delta, 0] or its 1x1 analogue.
Mat lead_correction(const FieldPtr& f, int nu, const Mat& block) {
  Mat m(f, nu, nu);
  m.set_block(0, 0, block);
  return m;
}

class Reducer {
 public:
  Reducer(const OrthoSpace& sp, const Vertex& v) : sp_(sp), cur_(v), g_(g01_identity(sp)) {}

  void apply(const Mat& T, const Mat& S) {
    G01Element h{T, S};
    cur_ = g01_act(h, cur_);
    g_ = compose(g_, h);
  }
  void apply_t(const Mat& T) { apply(T, Mat::identity(sp_.field(), 2)); }

  const Vertex& cur() const { return cur_; }
  const G01Element& g() const { return g_; }

 private:
  const OrthoSpace& sp_;
  Vertex cur_;
  G01Element g_;
};

}  // namespace

Vertex representative(const OrthoSpace& sp, const SuborbitLabel& l) {
  sp.require_delta2();
  const FieldPtr& f = sp.field();
  const Field& F = *f;
  int nu = sp.nu();
  require_label(F, nu, l);
  int r = l.r;

  Mat a(f, nu, nu);
  Mat z(f, nu, 2);
  auto pad = [&](std::vector<Mat> blocks) {
    int used = 0;
    for (const auto& b : blocks) used += b.rows();
    blocks.push_back(zeros(f, nu - used));
    return block_diag(blocks);
  };
  Mat half_delta = scale(F.neg(F.half()), sp.Delta());
  Elem ae = F.from_int(l.a);
  // -1/2 (1 - z a^2)
  Mat c1(f, 1, 1);
  c1(0, 0) = F.neg(F.mul(F.half(), F.sub(F.one(), F.mul(F.z(), F.mul(ae, ae)))));
  Mat e1 = basis_vector(f, nu, 1);

  switch (l.family) {
    case Family::Phi0: break;
    case Family::Phi1: a = pad({std_alternate(f, r)}); break;
    case Family::Phi2:
      a = pad({c1, std_alternate(f, r)});
      z = hconcat({e1, scale(ae, e1)});
      break;
    case Family::Phi3:
      a = pad({std_alternate(f, r)}) + lead_correction(f, nu, c1);
      z = hconcat({e1, scale(ae, e1)});
      break;
    case Family::Phi4:
      a = pad({zeros(f, 1), std_alternate(f, r)}) + lead_correction(f, nu, half_delta);
      z = hconcat({e1, basis_vector(f, nu, 2)});
      break;
    case Family::Phi5:
      a = pad({mat_Y(f), std_alternate(f, r - 1)}) + lead_correction(f, nu, half_delta);
      z = hconcat({e1, basis_vector(f, nu, 2)});
      break;
    case Family::Phi6:
      a = pad({half_delta, std_alternate(f, r)});
      z = hconcat({e1, basis_vector(f, nu, 2)});
      break;
    case Family::Phi7:
      a = pad({scale(l.b, std_alternate(f, 1)) + half_delta, std_alternate(f, r - 1)});
      z = hconcat({e1, basis_vector(f, nu, 2)});
      break;
    case Family::Phi8:
      a = pad({mat_K(f), std_alternate(f, r - 2)}) + lead_correction(f, nu, half_delta);
      z = hconcat({e1, basis_vector(f, nu, 2)});
      break;
  }
  return vertex_from_matrix(sp, hconcat({a, Mat::identity(f, nu), z}));
}

Classification classify(const OrthoSpace& sp, const Vertex& v) {
  sp.require_delta2();
  require_vertex(sp, v);
  const FieldPtr& f = sp.field();
  const Field& F = *f;
  int nu = sp.nu();
  Reducer red(sp, v);
  SuborbitLabel label;

  int rz = rank(v.Z);
  if (rz == 0) {
    if (v.X.is_zero()) {
      label = {Family::Phi0, 0, 0, Elem{}};
    } else {
      AltNormal an = alt_normalize(v.X);
      red.apply_t(an.T);
      label = {Family::Phi1, an.r, 0, Elem{}};
    }
  } else if (rz == 1) {
    int c = v.Z.block(0, 0, nu, 1).is_zero() ? 1 : 0;
    Mat w = v.Z.block(0, c, nu, 1);
    // S0^t w = E1, so Z becomes E1 (x y).
    red.apply_t(transpose(inverse(complete_basis(f, nu, {w}))));

    CanonicalResult cr = o1_canonicalize(red.cur().X);
    red.apply_t(cr.T);

    LineNormalForm line = normalize_line(sp, red.cur().Z(0, 0), red.cur().Z(0, 1));
    red.apply(Mat::identity(f, nu), line.S);

    Elem b = red.cur().Z(0, 0);
    red.apply_t(diag_prefix(f, nu, {F.inv(b)}));

    switch (cr.form.kind) {
      case AltFormKind::Zero: label = {Family::Phi2, 0, line.label, Elem{}}; break;
      case AltFormKind::LeadingZero: label = {Family::Phi2, cr.form.r, line.label, Elem{}}; break;
      case AltFormKind::Standard: {
        Elem x01 = red.cur().X(0, 1);
        red.apply_t(diag_prefix(f, nu, {F.one(), F.inv(x01)}));
        label = {Family::Phi3, cr.form.r, line.label, Elem{}};
        break;
      }
      default: throw std::logic_error("unexpected O_1 form " + to_string(cr.form));
    }
  } else {
    // S0^t Z = (E1 E2).
    red.apply_t(transpose(inverse(complete_basis(f, nu, {v.Z.block(0, 0, nu, 1), v.Z.block(0, 1, nu, 1)}))));

    CanonicalResult cr = o2_canonicalize(red.cur().X);
    red.apply_t(cr.T);
    red.apply_t(embed_leading(f, nu, inverse(cr.T.block(0, 0, 2, 2))));

    int r = cr.form.r;
    switch (cr.form.kind) {
      case AltFormKind::Zero: label = {Family::Phi4, 0, 0, Elem{}}; break;
      case AltFormKind::LeadingZero: {
        Elem u = red.cur().X(0, 2), w = red.cur().X(1, 2);
        if (u.is_zero()) {
          red.apply_t(diag_prefix(f, nu, {F.one(), F.one(), F.inv(w)}));
          label = {Family::Phi4, r, 0, Elem{}};
          break;
        }
        red.apply_t(diag_prefix(f, nu, {F.one(), F.one(), F.inv(u)}));
        Elem c = red.cur().X(1, 2);
        Elem d = F.sub(F.mul(c, c), F.z());
        Mat t = Mat::identity(f, nu);
        Mat m11(f, 2, 2);
        if (F.is_square(d)) {
          Elem s = F.sqrt(d);
          Elem si = F.inv(s);
          m11(0, 0) = F.mul(si, c);
          m11(0, 1) = F.mul(si, F.neg(F.z()));
          m11(1, 0) = F.neg(si);
          m11(1, 1) = F.mul(si, c);
          t(2, 2) = si;
          label = {Family::Phi4, r, 0, Elem{}};
        } else {
          Elem s = F.sqrt(F.div(F.sub(F.one(), F.z()), d));
          Elem k = F.inv(F.mul(s, d));
          Elem cz = F.sub(c, F.z()), c1 = F.sub(c, F.one());
          m11(0, 0) = F.mul(k, cz);
          m11(0, 1) = F.mul(k, F.mul(F.z(), c1));
          m11(1, 0) = F.mul(k, c1);
          m11(1, 1) = F.mul(k, cz);
          t(2, 2) = s;
          label = {Family::Phi5, r, 0, Elem{}};
        }
        t.set_block(0, 0, m11);
        red.apply(t, inverse(transpose(m11)));
        break;
      }
      case AltFormKind::DoubleLeadingZero: label = {Family::Phi6, r, 0, Elem{}}; break;
      case AltFormKind::Standard: {
        Elem b = red.cur().X(0, 1);
        if (!F.in_omega(b)) {
          Elem m1 = F.neg(F.one());
          red.apply(diag_prefix(f, nu, {m1}), Mat::diag(f, {m1, F.one()}));
        }
        label = {Family::Phi7, r, 0, F.omega_rep(b)};
        break;
      }
      case AltFormKind::KBlock: {
        Mat t = Mat::identity(f, nu);
        t.set_block(2, 2, inverse(red.cur().X.block(0, 2, 2, 2)));
        red.apply_t(t);
        label = {Family::Phi8, r, 0, Elem{}};
        break;
      }
    }
  }

  Vertex rep = representative(sp, label);
  if (red.cur() != rep)
    throw std::logic_error("classifier did not reach the representative of " + to_string(label) + ": X=" +
                           to_string(red.cur().X) + " Z=" + to_string(red.cur().Z));
  G01Element witness = inverse(red.g());
  if (g01_act(witness, rep) != v) throw std::logic_error("classifier witness does not reproduce the vertex");
  return {label, witness};
}

}  // namespace polar
