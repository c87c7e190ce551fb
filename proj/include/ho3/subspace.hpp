#pragma once
#include "ho3/matrix.hpp"

namespace ho3 {

// linear subspace of k^ambient; basis rows kept in rref, so equality of
// subspaces is entrywise equality of bases
struct Subspace {
  FieldSpec fs;
  int ambient = 0;
  Mat basis;           // dim() x ambient, rref
  std::vector<int> pivots;

  static Subspace zero_space(const FieldSpec& fs, int ambient);
  static Subspace full(const FieldSpec& fs, int ambient);
  static Subspace span(const FieldSpec& fs, int ambient, const std::vector<Vec>& gens);
  static Subspace row_space(const Mat& m);

  int dim() const { return basis.rows; }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const;

  // v minus its projection onto the pivot coordinates; zero iff v is a member
  Vec reduce(const Vec& v) const;
  // coordinates in the rref basis; faults if v is not a member
  Vec coords(const Vec& v) const;
  Vec from_coords(const Vec& c) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  // {x : <b, x> = 0 for all basis rows b}; ann(ann(U)) == U
  Subspace annihilator() const;
};

Subspace image(const Mat& f);
Subspace image_of(const Mat& f, const Subspace& u);
Subspace kernel_space(const Mat& f);
// {x : f(x) in w}
Subspace preimage(const Mat& f, const Subspace& w);

// quotient v / w with the echelon-complement section: complement basis rows
// have zeros at all w-pivot columns, so v = w (+) span(comp)
struct QuotientMap {
  Subspace v, w;
  Mat comp;                 // quotient basis, rref, rows live in v
  std::vector<int> cpivots;

  int dim() const { return comp.rows; }
  Vec project(const Vec& x) const;   // x must lie in v
  Vec section(const Vec& q) const;   // right inverse of project
  // matrix of project on v-coordinates: dim() x v.dim()
  Mat project_on_v() const;
};

QuotientMap make_quotient(const Subspace& v, const Subspace& w);

}  // namespace ho3
