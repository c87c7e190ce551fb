#pragma once
#include "ho3/algebra_ops.hpp"

namespace ho3 {

// levels 0..trunc with faces d(n,i): E_n -> E_{n-1} for n >= 1 and
// degeneracies s(n,i): E_n -> E_{n+1} for n < trunc, 0 <= i <= n
struct TruncSimplicialAlgebra {
  int trunc = 0;
  std::vector<AlgebraPtr> level;
  std::vector<std::vector<AlgMorphism>> face;   // face[n] has n+1 entries, face[0] empty
  std::vector<std::vector<AlgMorphism>> degen;  // degen[n] has n+1 entries

  const FieldSpec& fs() const { return level.at(0)->fs; }
  const AlgMorphism& d(int n, int i) const { return face.at(n).at(i); }
  const AlgMorphism& s(int n, int i) const { return degen.at(n).at(i); }
};

// shape faults throw; identity and multiplicativity failures accumulate
ValidationReport validate_simplicial(const TruncSimplicialAlgebra& sa);

// intersection of the kernels of the listed faces at one level
Subspace kernel_K(const TruncSimplicialAlgebra& sa, int n, const std::vector<int>& faces);

// subalgebra generated by all degenerate elements at level n
Subspace degenerate_subalgebra(const TruncSimplicialAlgebra& sa, int n);

// ne[n] = intersection of ker d(n,i) for i < n, with the top face as the
// boundary; each piece also carried as an abstract algebra
struct MooreComplex {
  std::vector<Subspace> ne;
  std::vector<Mat> bnd_full;     // bnd_full[n] = full matrix of d(n,n), entry 0 unused
  std::vector<SubAlgebra> piece;
  std::vector<Mat> bnd;          // piece[n] -> piece[n-1] coordinates, entry 0 unused
};

MooreComplex moore(const TruncSimplicialAlgebra& sa);

// homology of the length-trunc complex; the top degree is not determined
// at this truncation and is omitted
struct SimplicialHomotopy {
  int trunc = 0;
  std::vector<int> dims;  // degrees 0..trunc-1
};

SimplicialHomotopy homotopy_simplicial(const TruncSimplicialAlgebra& sa, const MooreComplex& mc);

}  // namespace ho3
