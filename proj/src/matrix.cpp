#include "polar/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace polar {

namespace {

void require_same_shape(const Mat& a, const Mat& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
}

const FieldPtr& common_field(const std::vector<Mat>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("block list is empty");
  for (const auto& b : blocks)
    if (!b.field()) throw std::invalid_argument("block without a field");
  return blocks.front().field();
}

}  // namespace

Mat::Mat(FieldPtr f, int rows, int cols) : field_(std::move(f)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  e_.assign(static_cast<std::size_t>(rows) * cols, Elem{});
}

Mat::Mat(FieldPtr f, int rows, int cols, std::vector<Elem> entries)
    : field_(std::move(f)), rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  if (e_.size() != static_cast<std::size_t>(rows) * cols)
    throw std::invalid_argument("entry count does not match " + std::to_string(rows) + "x" +
                                std::to_string(cols));
  for (Elem x : e_)
    if (x.v >= field_->order()) throw std::invalid_argument("entry outside the field");
}

Mat Mat::identity(FieldPtr f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = f->one();
  return m;
}

Mat Mat::diag(FieldPtr f, const std::vector<Elem>& d) {
  int n = static_cast<int>(d.size());
  Mat m(std::move(f), n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d[i];
  return m;
}

Mat Mat::from_ints(FieldPtr f, int rows, int cols, std::initializer_list<long long> vals) {
  if (vals.size() != static_cast<std::size_t>(rows) * cols)
    throw std::invalid_argument("from_ints: wrong number of values");
  std::vector<Elem> e;
  e.reserve(vals.size());
  for (long long v : vals) e.push_back(f->from_int(v));
  return Mat(std::move(f), rows, cols, std::move(e));
}

Mat Mat::block(int r0, int c0, int nr, int nc) const {
  if (r0 < 0 || c0 < 0 || nr < 0 || nc < 0 || r0 + nr > rows_ || c0 + nc > cols_)
    throw std::out_of_range("block outside matrix");
  Mat b(field_, nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Mat::set_block(int r0, int c0, const Mat& b) {
  if (r0 < 0 || c0 < 0 || r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
    throw std::out_of_range("set_block outside matrix");
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool Mat::is_zero() const {
  for (Elem x : e_)
    if (!x.is_zero()) return false;
  return true;
}

Mat operator+(const Mat& a, const Mat& b) {
  require_same_shape(a, b, "add");
  Mat c = a;
  const Field& F = a.F();
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = F.add(a(i, j), b(i, j));
  return c;
}

Mat operator-(const Mat& a, const Mat& b) {
  require_same_shape(a, b, "sub");
  Mat c = a;
  const Field& F = a.F();
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = F.sub(a(i, j), b(i, j));
  return c;
}

Mat operator-(const Mat& a) {
  Mat c = a;
  const Field& F = a.F();
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = F.neg(a(i, j));
  return c;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("mul: inner dimensions " + std::to_string(a.cols()) + " and " +
                                std::to_string(b.rows()) + " differ");
  const FieldPtr& f = a.field() ? a.field() : b.field();
  Mat c(f, a.rows(), b.cols());
  const Field& F = *f;
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      Elem x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) = F.add(c(i, j), F.mul(x, b(k, j)));
    }
  return c;
}

Mat scale(Elem c, const Mat& a) {
  Mat r = a;
  const Field& F = a.F();
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = F.mul(c, a(i, j));
  return r;
}

Mat transpose(const Mat& a) {
  Mat t(a.field(), a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Mat rref(const Mat& a, int* rank_out) {
  Mat m = a;
  const Field& F = a.F();
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    Elem s = F.inv(m(r, c));
    for (int j = 0; j < m.cols(); ++j) m(r, j) = F.mul(s, m(r, j));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Elem t = m(i, c);
      for (int j = 0; j < m.cols(); ++j) m(i, j) = F.sub(m(i, j), F.mul(t, m(r, j)));
    }
    ++r;
  }
  if (rank_out) *rank_out = r;
  return m;
}

int rank(const Mat& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  int r = 0;
  rref(a, &r);
  return r;
}

Elem det(const Mat& a) {
  if (!a.is_square()) throw std::invalid_argument("det of non-square matrix");
  const Field& F = a.F();
  Mat m = a;
  Elem d = F.one();
  int n = m.rows();
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!m(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return F.zero();
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      d = F.neg(d);
    }
    d = F.mul(d, m(c, c));
    Elem s = F.inv(m(c, c));
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Elem t = F.mul(m(i, c), s);
      for (int j = c; j < n; ++j) m(i, j) = F.sub(m(i, j), F.mul(t, m(c, j)));
    }
  }
  return d;
}

Mat inverse(const Mat& a) {
  if (!a.is_square()) throw std::domain_error("inverse of non-square matrix");
  int n = a.rows();
  int r = 0;
  Mat red = rref(hconcat({a, Mat::identity(a.field(), n)}), &r);
  if (red.block(0, 0, n, n) != Mat::identity(a.field(), n)) throw std::domain_error("inverse of singular matrix");
  return red.block(0, n, n, n);
}

bool row_space_equal(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("row_space_equal: column counts differ");
  int ra = 0, rb = 0;
  Mat ea = rref(a, &ra), eb = rref(b, &rb);
  if (ra != rb) return false;
  return ea.block(0, 0, ra, a.cols()) == eb.block(0, 0, rb, b.cols());
}

Mat block_diag(const std::vector<Mat>& blocks) {
  const FieldPtr& f = common_field(blocks);
  int r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Mat m(f, r, c);
  int i = 0, j = 0;
  for (const auto& b : blocks) {
    m.set_block(i, j, b);
    i += b.rows();
    j += b.cols();
  }
  return m;
}

Mat hconcat(const std::vector<Mat>& blocks) {
  const FieldPtr& f = common_field(blocks);
  int r = blocks.front().rows(), c = 0;
  for (const auto& b : blocks) {
    if (b.rows() != r) throw std::invalid_argument("hconcat: row counts differ");
    c += b.cols();
  }
  Mat m(f, r, c);
  int j = 0;
  for (const auto& b : blocks) {
    m.set_block(0, j, b);
    j += b.cols();
  }
  return m;
}

Mat vconcat(const std::vector<Mat>& blocks) {
  const FieldPtr& f = common_field(blocks);
  int c = blocks.front().cols(), r = 0;
  for (const auto& b : blocks) {
    if (b.cols() != c) throw std::invalid_argument("vconcat: column counts differ");
    r += b.rows();
  }
  Mat m(f, r, c);
  int i = 0;
  for (const auto& b : blocks) {
    m.set_block(i, 0, b);
    i += b.rows();
  }
  return m;
}

Mat basis_vector(FieldPtr f, int nu, int i) {
  if (i < 1 || i > nu) throw std::out_of_range("basis_vector index out of range");
  Mat e(f, nu, 1);
  e(i - 1, 0) = f->one();
  return e;
}

Mat std_alternate(FieldPtr f, int r) {
  if (r < 0) throw std::invalid_argument("std_alternate: negative r");
  Mat m(f, 2 * r, 2 * r);
  for (int k = 0; k < r; ++k) {
    m(2 * k, 2 * k + 1) = f->one();
    m(2 * k + 1, 2 * k) = f->neg(f->one());
  }
  return m;
}

Mat mat_K(FieldPtr f) {
  Mat m(f, 4, 4);
  m.set_block(0, 2, Mat::identity(f, 2));
  m.set_block(2, 0, -Mat::identity(f, 2));
  return m;
}

Mat mat_Y(FieldPtr f) { return Mat::from_ints(f, 3, 3, {0, 0, 1, 0, 0, 1, -1, -1, 0}); }

bool is_alternate(const Mat& x) {
  if (!x.is_square()) return false;
  const Field& F = x.F();
  for (int i = 0; i < x.rows(); ++i) {
    if (!x(i, i).is_zero()) return false;
    for (int j = i + 1; j < x.cols(); ++j)
      if (F.add(x(i, j), x(j, i)) != F.zero()) return false;
  }
  return true;
}

void require_alternate(const Mat& x) {
  if (!is_alternate(x)) throw std::invalid_argument("matrix is not alternate: " + to_string(x));
}

AltNormal alt_normalize(const Mat& x) {
  require_alternate(x);
  const FieldPtr& f = x.field();
  const Field& F = *f;
  int n = x.rows();

  std::vector<Mat> rest;
  for (int i = 1; i <= n; ++i) rest.push_back(basis_vector(f, n, i));
  auto B = [&](const Mat& u, const Mat& v) { return (transpose(u) * x * v)(0, 0); };

  std::vector<Mat> cols;
  int r = 0;
  for (;;) {
    int pj = -1, pi = -1;
    for (int j = 0; j < static_cast<int>(rest.size()) && pj < 0; ++j)
      for (int i = 0; i < static_cast<int>(rest.size()); ++i)
        if (!B(rest[i], rest[j]).is_zero()) {
          pj = j;
          pi = i;
          break;
        }
    if (pj < 0) break;
    Mat fv = rest[pj];
    Mat gv = scale(F.inv(B(rest[pj], rest[pi])), rest[pi]);
    std::vector<Mat> next;
    for (int k = 0; k < static_cast<int>(rest.size()); ++k) {
      if (k == pi || k == pj) continue;
      const Mat& v = rest[k];
      next.push_back(v + scale(B(v, fv), gv) - scale(B(v, gv), fv));
    }
    cols.push_back(fv);
    cols.push_back(gv);
    rest = std::move(next);
    ++r;
  }
  for (auto& v : rest) cols.push_back(v);
  Mat T = n == 0 ? Mat(f, 0, 0) : hconcat(cols);
  return {T, r};
}

std::string to_string(const Mat& a) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < a.rows(); ++i) {
    if (i) os << "; ";
    for (int j = 0; j < a.cols(); ++j) os << (j ? " " : "") << a(i, j).v;
  }
  os << "]";
  return os.str();
}

}  // namespace polar
