#include "ho3/subspace.hpp"

namespace ho3 {

Subspace Subspace::zero_space(const FieldSpec& fs, int ambient) {
  Subspace s;
  s.fs = fs;
  s.ambient = ambient;
  s.basis = Mat(fs, 0, ambient);
  return s;
}

Subspace Subspace::full(const FieldSpec& fs, int ambient) {
  return row_space(Mat::identity(fs, ambient));
}

Subspace Subspace::span(const FieldSpec& fs, int ambient, const std::vector<Vec>& gens) {
  return row_space(Mat::from_rows(fs, ambient, gens));
}

Subspace Subspace::row_space(const Mat& m) {
  Subspace s;
  s.fs = m.fs;
  s.ambient = m.cols;
  s.basis = rref(m, &s.pivots);
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  if (int(v.size()) != ambient) throw FaultError("reduce: length mismatch");
  Vec r = v;
  for (int i = 0; i < dim(); ++i) {
    const mpq_class c = r[pivots[i]];
    if (f_is_zero(c)) continue;
    for (int j = 0; j < ambient; ++j) r[j] = f_sub(fs, r[j], f_mul(fs, c, basis.at(i, j)));
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient != ambient) throw FaultError("contains: ambient mismatch");
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis.row(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient == o.ambient && fs == o.fs && basis == o.basis;
}

Vec Subspace::coords(const Vec& v) const {
  if (!contains(v)) throw FaultError("coords: vector outside subspace");
  Vec c(dim());
  for (int i = 0; i < dim(); ++i) c[i] = v[pivots[i]];
  return c;
}

Vec Subspace::from_coords(const Vec& c) const {
  if (int(c.size()) != dim()) throw FaultError("from_coords: length mismatch");
  Vec v = vec_zero(ambient);
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < ambient; ++j) v[j] = f_add(fs, v[j], f_mul(fs, c[i], basis.at(i, j)));
  return v;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient != ambient) throw FaultError("sum: ambient mismatch");
  return row_space(basis.stacked(other.basis));
}

Subspace Subspace::annihilator() const { return row_space(kernel(basis)); }

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient != ambient) throw FaultError("intersect: ambient mismatch");
  return annihilator().sum(other.annihilator()).annihilator();
}

Subspace image(const Mat& f) {
  return Subspace::row_space(f.transpose());
}

Subspace image_of(const Mat& f, const Subspace& u) {
  std::vector<Vec> gens;
  for (int i = 0; i < u.dim(); ++i) gens.push_back(f.apply(u.basis.row(i)));
  return Subspace::span(f.fs, f.rows, gens);
}

Subspace kernel_space(const Mat& f) { return Subspace::row_space(kernel(f)); }

Subspace preimage(const Mat& f, const Subspace& w) {
  if (w.ambient != f.rows) throw FaultError("preimage: ambient mismatch");
  const Subspace ann = w.annihilator();
  return kernel_space(mat_mul(ann.basis, f));
}

Vec QuotientMap::project(const Vec& x) const {
  if (!v.contains(x)) throw FaultError("quotient: vector outside the total space");
  Vec r = w.reduce(x);
  Vec q(dim());
  for (int i = 0; i < dim(); ++i) q[i] = r[cpivots[i]];
  return q;
}

Vec QuotientMap::section(const Vec& q) const {
  if (int(q.size()) != dim()) throw FaultError("section: length mismatch");
  Vec x = vec_zero(v.ambient);
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < v.ambient; ++j) x[j] = f_add(v.fs, x[j], f_mul(v.fs, q[i], comp.at(i, j)));
  return x;
}

Mat QuotientMap::project_on_v() const {
  Mat m(v.fs, dim(), v.dim());
  for (int j = 0; j < v.dim(); ++j) {
    Vec q = project(v.basis.row(j));
    for (int i = 0; i < dim(); ++i) m.at(i, j) = q[i];
  }
  return m;
}

QuotientMap make_quotient(const Subspace& v, const Subspace& w) {
  if (!v.contains(w)) throw FaultError("quotient: denominator not inside numerator");
  QuotientMap qm;
  qm.v = v;
  qm.w = w;
  std::vector<Vec> reduced;
  for (int i = 0; i < v.dim(); ++i) {
    Vec r = w.reduce(v.basis.row(i));
    if (!vec_is_zero(r)) reduced.push_back(r);
  }
  // rows already vanish at w-pivot columns and that survives further rref
  qm.comp = rref(Mat::from_rows(v.fs, v.ambient, reduced), &qm.cpivots);
  if (qm.comp.rows != v.dim() - w.dim()) throw FaultError("quotient: complement dimension drift");
  return qm;
}

}  // namespace ho3
