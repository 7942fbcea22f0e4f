#include <algorithm>
#include <stdexcept>

#include "polar/suborbits.hpp"

namespace polar {

namespace {

Mat zeros(const FieldPtr& f, int n) { return Mat(f, n, n); }

Elem bilinear(const Mat& x, const Mat& u, const Mat& v) { return (transpose(u) * x * v)(0, 0); }

// Column combination sum_k cols[k] * coeff(k, c).
Mat combine(const std::vector<Mat>& cols, const Mat& coeff, int c) {
  Mat out = scale(coeff(0, c), cols[0]);
  for (int k = 1; k < static_cast<int>(cols.size()); ++k) out = out + scale(coeff(k, c), cols[k]);
  return out;
}

// Invertible m x m T with Y T = [I_k | 0] for a k x m matrix Y of rank k.
Mat right_normalizer(const Mat& y) {
  const FieldPtr& f = y.field();
  const Field& F = *f;
  int k = y.rows(), m = y.cols();
  int rk = 0;
  Mat e = rref(y, &rk);
  if (rk != k) throw std::logic_error("right_normalizer: rows are dependent");
  std::vector<int> piv;
  for (int i = 0, c = 0; i < k; ++i) {
    while (e(i, c).is_zero()) ++c;
    piv.push_back(c);
  }
  Mat n(f, k, k);
  for (int i = 0; i < k; ++i)
    for (int t = 0; t < k; ++t) n(i, t) = y(i, piv[t]);
  Mat ninv = inverse(n);

  Mat t(f, m, m);
  for (int c = 0; c < k; ++c)
    for (int l = 0; l < k; ++l) t(piv[l], c) = ninv(l, c);
  int col = k;
  for (int j = 0; j < m; ++j) {
    if (std::find(piv.begin(), piv.end(), j) != piv.end()) continue;
    t(j, col) = F.one();
    for (int c = 0; c < k; ++c) {
      Elem yc = y(c, j);
      if (yc.is_zero()) continue;
      for (int r = 0; r < m; ++r) t(r, col) = F.sub(t(r, col), F.mul(yc, t(r, c)));
    }
    ++col;
  }
  return t;
}

}  // namespace

std::string to_string(const AltCanonicalForm& f) {
  switch (f.kind) {
    case AltFormKind::Zero: return "0";
    case AltFormKind::LeadingZero: return "[0,A" + std::to_string(2 * f.r) + ",0]";
    case AltFormKind::Standard: return "[A" + std::to_string(2 * f.r) + ",0]";
    case AltFormKind::DoubleLeadingZero: return "[0^2,A" + std::to_string(2 * f.r) + ",0]";
    case AltFormKind::KBlock: return "[K,A" + std::to_string(2 * f.r - 4) + ",0]";
  }
  return "?";
}

Mat realize_form(FieldPtr f, int nu, const AltCanonicalForm& form) {
  int r = form.r;
  auto pad = [&](std::vector<Mat> blocks, int used) {
    if (used > nu) throw std::invalid_argument("form " + to_string(form) + " does not fit nu = " + std::to_string(nu));
    blocks.push_back(zeros(f, nu - used));
    return block_diag(blocks);
  };
  switch (form.kind) {
    case AltFormKind::Zero: return zeros(f, nu);
    case AltFormKind::LeadingZero: return pad({zeros(f, 1), std_alternate(f, r)}, 1 + 2 * r);
    case AltFormKind::Standard: return pad({std_alternate(f, r)}, 2 * r);
    case AltFormKind::DoubleLeadingZero: return pad({zeros(f, 2), std_alternate(f, r)}, 2 + 2 * r);
    case AltFormKind::KBlock: return pad({mat_K(f), std_alternate(f, r - 2)}, 2 * r);
  }
  throw std::logic_error("unknown form kind");
}

std::vector<AltCanonicalForm> all_alt_forms(int nu, int i) {
  if (i != 1 && i != 2) throw std::invalid_argument("i must be 1 or 2");
  std::vector<AltCanonicalForm> out{{AltFormKind::Zero, 0}};
  for (int r = 1; r <= (nu - 1) / 2; ++r) out.push_back({AltFormKind::LeadingZero, r});
  for (int r = 1; r <= nu / 2; ++r) out.push_back({AltFormKind::Standard, r});
  if (i == 2) {
    for (int r = 1; r <= (nu - 2) / 2; ++r) out.push_back({AltFormKind::DoubleLeadingZero, r});
    for (int r = 2; r <= nu / 2; ++r) out.push_back({AltFormKind::KBlock, r});
  }
  return out;
}

bool in_block_triangular(const Mat& T, int i) {
  int n = T.rows();
  if (!T.is_square() || n < i) return false;
  if (!T.block(0, i, i, n - i).is_zero()) return false;
  return rank(T.block(0, 0, i, i)) == i && rank(T.block(i, i, n - i, n - i)) == n - i;
}

CanonicalResult o1_canonicalize(const Mat& x) { return oi_canonicalize(x, 1); }
CanonicalResult o2_canonicalize(const Mat& x) { return oi_canonicalize(x, 2); }

CanonicalResult oi_canonicalize(const Mat& x, int i) {
  require_alternate(x);
  if (i != 1 && i != 2) throw std::invalid_argument("i must be 1 or 2");
  const FieldPtr& f = x.field();
  const Field& F = *f;
  int n = x.rows();
  if (n < i) throw std::invalid_argument("canonicalization under O_" + std::to_string(i) + " needs nu >= " + std::to_string(i));
  auto B = [&](const Mat& u, const Mat& v) { return bilinear(x, u, v); };

  std::vector<Mat> lead;
  for (int k = 1; k <= i; ++k) lead.push_back(basis_vector(f, n, k));

  // Canonical basis of the trailing block, embedded in F^n.
  AltNormal tail = alt_normalize(x.block(i, i, n - i, n - i));
  int s = tail.r;
  std::vector<Mat> sym, rad;
  for (int c = 0; c < n - i; ++c) {
    Mat v(f, n, 1);
    v.set_block(i, 0, tail.T.block(0, c, n - i, 1));
    (c < 2 * s ? sym : rad).push_back(v);
  }

  // Make the leading vectors orthogonal to the hyperbolic part of the tail.
  for (auto& u : lead)
    for (int k = 0; k < s; ++k) {
      const Mat& p = sym[2 * k];
      const Mat& g = sym[2 * k + 1];
      u = u + scale(B(u, p), g) - scale(B(u, g), p);
    }

  int m = static_cast<int>(rad.size());
  Mat y(f, i, m);
  for (int a = 0; a < i; ++a)
    for (int c = 0; c < m; ++c) y(a, c) = B(lead[a], rad[c]);
  int ry = m == 0 ? 0 : rank(y);

  auto retarget = [&](const Mat& t) {
    std::vector<Mat> out;
    for (int c = 0; c < m; ++c) out.push_back(combine(rad, t, c));
    rad = std::move(out);
  };

  std::vector<Mat> basis;
  AltCanonicalForm form;
  auto push_all = [&](std::initializer_list<const std::vector<Mat>*> parts) {
    for (auto* p : parts) basis.insert(basis.end(), p->begin(), p->end());
  };

  if (i == 1) {
    if (ry == 0) {
      form = s == 0 ? AltCanonicalForm{AltFormKind::Zero, 0} : AltCanonicalForm{AltFormKind::LeadingZero, s};
      push_all({&lead, &sym, &rad});
    } else {
      retarget(right_normalizer(y));
      std::vector<Mat> head{lead[0], rad[0]};
      std::vector<Mat> rest(rad.begin() + 1, rad.end());
      push_all({&head, &sym, &rest});
      form = {AltFormKind::Standard, s + 1};
    }
  } else {
    Elem x1 = B(lead[0], lead[1]);
    if (ry == 0) {
      if (x1.is_zero()) {
        form = s == 0 ? AltCanonicalForm{AltFormKind::Zero, 0} : AltCanonicalForm{AltFormKind::DoubleLeadingZero, s};
      } else {
        lead[0] = scale(F.inv(x1), lead[0]);
        form = {AltFormKind::Standard, s + 1};
      }
      push_all({&lead, &sym, &rad});
    } else if (ry == 1) {
      int wrow = y.block(0, 0, 1, m).is_zero() ? 1 : 0;
      retarget(right_normalizer(y.block(wrow, 0, 1, m)));
      // Now B(lead[a], rad[0]) = (alpha, beta) and lead is orthogonal to rad[1..].
      Elem alpha = B(lead[0], rad[0]), beta = B(lead[1], rad[0]);
      Mat mix(f, 2, 2);
      if (!alpha.is_zero()) {
        mix(0, 0) = F.neg(beta);
        mix(1, 0) = alpha;
        mix(0, 1) = F.inv(alpha);
      } else {
        mix(0, 0) = F.one();
        mix(1, 1) = F.inv(beta);
      }
      std::vector<Mat> nl{combine(lead, mix, 0), combine(lead, mix, 1)};
      Elem x2 = B(nl[0], nl[1]);
      nl[0] = nl[0] + scale(x2, rad[0]);
      std::vector<Mat> head{nl[0], nl[1], rad[0]};
      std::vector<Mat> rest(rad.begin() + 1, rad.end());
      push_all({&head, &sym, &rest});
      form = {AltFormKind::LeadingZero, s + 1};
    } else {
      retarget(right_normalizer(y));
      lead[1] = lead[1] - scale(x1, rad[0]);
      std::vector<Mat> head{lead[0], lead[1], rad[0], rad[1]};
      std::vector<Mat> rest(rad.begin() + 2, rad.end());
      push_all({&head, &sym, &rest});
      form = {AltFormKind::KBlock, s + 2};
    }
  }

  Mat T = hconcat(basis);
  if (!in_block_triangular(T, i) || transpose(T) * x * T != realize_form(f, n, form))
    throw std::logic_error("canonicalization failed for " + to_string(x));
  return {T, form};
}

}  // namespace polar
