#include "ho3/matrix.hpp"

namespace ho3 {

Vec vec_add(const FieldSpec& fs, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw FaultError("vec_add: length mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f_add(fs, a[i], b[i]);
  return r;
}

Vec vec_sub(const FieldSpec& fs, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw FaultError("vec_sub: length mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f_sub(fs, a[i], b[i]);
  return r;
}

Vec vec_scale(const FieldSpec& fs, const mpq_class& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f_mul(fs, c, a[i]);
  return r;
}

Vec vec_zero(int n) { return Vec(size_t(n), mpq_class(0)); }

Vec unit_vec(int n, int i) {
  Vec v = vec_zero(n);
  v[i] = 1;
  return v;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!f_is_zero(x)) return false;
  return true;
}

bool vec_eq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

Mat Mat::identity(const FieldSpec& fs, int n) {
  Mat m(fs, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const FieldSpec& fs, int cols, const std::vector<Vec>& rows) {
  Mat m(fs, int(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (int(rows[i].size()) != cols) throw FaultError("from_rows: ragged rows");
    for (int j = 0; j < cols; ++j) m.at(int(i), j) = f_norm(fs, rows[i][j]);
  }
  return m;
}

Mat Mat::from_cols(const FieldSpec& fs, int rows, const std::vector<Vec>& cols) {
  Mat m(fs, rows, int(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (int(cols[j].size()) != rows) throw FaultError("from_cols: ragged columns");
    for (int i = 0; i < rows; ++i) m.at(i, int(j)) = f_norm(fs, cols[j][i]);
  }
  return m;
}

Vec Mat::row(int i) const {
  Vec r(cols);
  for (int j = 0; j < cols; ++j) r[j] = at(i, j);
  return r;
}

Vec Mat::col(int j) const {
  Vec c(rows);
  for (int i = 0; i < rows; ++i) c[i] = at(i, j);
  return c;
}

Mat Mat::transpose() const {
  Mat t(fs, cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::stacked(const Mat& below) const {
  if (cols != below.cols || !(fs == below.fs)) throw FaultError("stacked: shape mismatch");
  Mat m(fs, rows + below.rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = at(i, j);
  for (int i = 0; i < below.rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(rows + i, j) = below.at(i, j);
  return m;
}

Vec Mat::apply(const Vec& x) const {
  if (int(x.size()) != cols) throw FaultError("apply: length mismatch");
  Vec y(rows, mpq_class(0));
  for (int i = 0; i < rows; ++i) {
    mpq_class acc(0);
    for (int j = 0; j < cols; ++j) acc += at(i, j) * x[j];
    y[i] = f_norm(fs, acc);
  }
  return y;
}

bool Mat::is_zero() const {
  for (const auto& x : a)
    if (!f_is_zero(x)) return false;
  return true;
}

bool Mat::operator==(const Mat& o) const {
  return rows == o.rows && cols == o.cols && fs == o.fs && a == o.a;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.cols != b.rows || !(a.fs == b.fs)) throw FaultError("mat_mul: shape mismatch");
  Mat c(a.fs, a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (f_is_zero(a.at(i, k))) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  for (auto& x : c.a) x = f_norm(a.fs, x);
  return c;
}

Mat mat_add(const Mat& a, const Mat& b) {
  if (a.rows != b.rows || a.cols != b.cols || !(a.fs == b.fs))
    throw FaultError("mat_add: shape mismatch");
  Mat c(a.fs, a.rows, a.cols);
  for (size_t i = 0; i < a.a.size(); ++i) c.a[i] = f_add(a.fs, a.a[i], b.a[i]);
  return c;
}

Mat mat_sub(const Mat& a, const Mat& b) {
  if (a.rows != b.rows || a.cols != b.cols || !(a.fs == b.fs))
    throw FaultError("mat_sub: shape mismatch");
  Mat c(a.fs, a.rows, a.cols);
  for (size_t i = 0; i < a.a.size(); ++i) c.a[i] = f_sub(a.fs, a.a[i], b.a[i]);
  return c;
}

Mat rref(const Mat& m, std::vector<int>* pivots, bool drop_zero_rows) {
  Mat r = m;
  std::vector<int> piv;
  int lead = 0;
  for (int col = 0; col < r.cols && lead < r.rows; ++col) {
    int sel = -1;
    for (int i = lead; i < r.rows; ++i)
      if (!f_is_zero(r.at(i, col))) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != lead)
      for (int j = 0; j < r.cols; ++j) std::swap(r.at(sel, j), r.at(lead, j));
    const mpq_class inv = f_inv(r.fs, r.at(lead, col));
    for (int j = 0; j < r.cols; ++j) r.at(lead, j) = f_mul(r.fs, inv, r.at(lead, j));
    for (int i = 0; i < r.rows; ++i) {
      if (i == lead) continue;
      const mpq_class c = r.at(i, col);
      if (f_is_zero(c)) continue;
      for (int j = 0; j < r.cols; ++j)
        r.at(i, j) = f_sub(r.fs, r.at(i, j), f_mul(r.fs, c, r.at(lead, j)));
    }
    piv.push_back(col);
    ++lead;
  }
  if (drop_zero_rows) {
    Mat out(r.fs, int(piv.size()), r.cols);
    for (int i = 0; i < int(piv.size()); ++i)
      for (int j = 0; j < r.cols; ++j) out.at(i, j) = r.at(i, j);
    r = out;
  }
  if (pivots) *pivots = piv;
  return r;
}

Mat kernel(const Mat& m) {
  std::vector<int> piv;
  Mat r = rref(m, &piv);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<Vec> rows;
  for (int free = 0; free < m.cols; ++free) {
    if (is_piv[free]) continue;
    Vec v = vec_zero(m.cols);
    v[free] = 1;
    for (int i = 0; i < int(piv.size()); ++i) v[piv[i]] = f_neg(m.fs, r.at(i, free));
    rows.push_back(v);
  }
  // canonicalize so equal kernels compare equal entrywise
  return rref(Mat::from_rows(m.fs, m.cols, rows));
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (int(b.size()) != m.rows) throw FaultError("solve: length mismatch");
  Mat aug(m.fs, m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = f_norm(m.fs, b[i]);
  }
  std::vector<int> piv;
  Mat r = rref(aug, &piv);
  Vec x = vec_zero(m.cols);
  for (int i = 0; i < int(piv.size()); ++i) {
    if (piv[i] == m.cols) return std::nullopt;  // pivot in the rhs column
    x[piv[i]] = r.at(i, m.cols);
  }
  return x;
}

}  // namespace ho3
