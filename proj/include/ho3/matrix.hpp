#pragma once
#include <optional>
#include <vector>

#include "ho3/field.hpp"

namespace ho3 {

using Vec = std::vector<mpq_class>;

Vec vec_add(const FieldSpec& fs, const Vec& a, const Vec& b);
Vec vec_sub(const FieldSpec& fs, const Vec& a, const Vec& b);
Vec vec_scale(const FieldSpec& fs, const mpq_class& c, const Vec& a);
Vec vec_zero(int n);
Vec unit_vec(int n, int i);
bool vec_is_zero(const Vec& a);
bool vec_eq(const Vec& a, const Vec& b);

// dense row-major matrix, entries always f_norm-normalized
struct Mat {
  FieldSpec fs;
  int rows = 0, cols = 0;
  std::vector<mpq_class> a;

  Mat() = default;
  Mat(FieldSpec f, int r, int c) : fs(f), rows(r), cols(c), a(size_t(r) * c, mpq_class(0)) {}

  static Mat identity(const FieldSpec& fs, int n);
  static Mat from_rows(const FieldSpec& fs, int cols, const std::vector<Vec>& rows);
  static Mat from_cols(const FieldSpec& fs, int rows, const std::vector<Vec>& cols);

  mpq_class& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const mpq_class& at(int i, int j) const { return a[size_t(i) * cols + j]; }

  Vec row(int i) const;
  Vec col(int j) const;
  Mat transpose() const;
  Mat stacked(const Mat& below) const;
  Vec apply(const Vec& x) const;  // M x, column convention
  bool is_zero() const;
  bool operator==(const Mat& o) const;
};

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);

// reduced row echelon form; returns rank, records pivot columns.
// zero rows are dropped when drop_zero_rows is set.
Mat rref(const Mat& m, std::vector<int>* pivots = nullptr, bool drop_zero_rows = true);

// rows span the null space {x : M x = 0}, in rref
Mat kernel(const Mat& m);

// one solution of M x = b, if any
std::optional<Vec> solve(const Mat& m, const Vec& b);

}  // namespace ho3
