#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "polar/gf.hpp"

namespace polar {

// Dense row-major matrix over F_q. 0x0 (and 0xn) matrices are legal values.
class Mat {
 public:
  Mat() = default;
  Mat(FieldPtr f, int rows, int cols);
  Mat(FieldPtr f, int rows, int cols, std::vector<Elem> entries);

  static Mat identity(FieldPtr f, int n);
  static Mat diag(FieldPtr f, const std::vector<Elem>& d);
  // Entries are integers reduced into the prime subfield, row-major.
  static Mat from_ints(FieldPtr f, int rows, int cols, std::initializer_list<long long> vals);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }
  const Field& F() const { return *field_; }
  const std::vector<Elem>& entries() const { return e_; }

  Elem operator()(int i, int j) const { return e_[i * cols_ + j]; }
  Elem& operator()(int i, int j) { return e_[i * cols_ + j]; }

  Mat block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const Mat& b);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  FieldPtr field_;
  int rows_ = 0, cols_ = 0;
  std::vector<Elem> e_;
};

Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator-(const Mat& a);
Mat operator*(const Mat& a, const Mat& b);
Mat scale(Elem c, const Mat& a);
Mat transpose(const Mat& a);

// Reduced row-echelon form; rank is written to *rank when non-null.
Mat rref(const Mat& a, int* rank = nullptr);
int rank(const Mat& a);
Elem det(const Mat& a);
// Throws std::domain_error when a is singular or not square.
Mat inverse(const Mat& a);
bool row_space_equal(const Mat& a, const Mat& b);

// Needs at least one block to fix the field.
Mat block_diag(const std::vector<Mat>& blocks);
Mat hconcat(const std::vector<Mat>& blocks);
Mat vconcat(const std::vector<Mat>& blocks);
// nu x 1 column E_i, 1-based.
Mat basis_vector(FieldPtr f, int nu, int i);

Mat std_alternate(FieldPtr f, int r);
Mat mat_K(FieldPtr f);
Mat mat_Y(FieldPtr f);

bool is_alternate(const Mat& x);
void require_alternate(const Mat& x);

struct AltNormal {
  Mat T;
  int r = 0;
};

// T invertible with T^t X T = [A_{2r}, 0]. Pivoting: scan columns of the
// remaining basis left to right, take the smallest row index with a nonzero
// entry, and split that hyperbolic pair off the rest.
AltNormal alt_normalize(const Mat& x);

std::string to_string(const Mat& a);

}  // namespace polar
