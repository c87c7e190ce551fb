#pragma once
#include "ho3/simplicial.hpp"

namespace ho3 {

// strictly decreasing index (i_r, ..., i_1); the associated composite
// degeneracy applies the smallest index first
struct SurjIndex {
  std::vector<int> idx;

  int size() const { return int(idx.size()); }
  bool operator==(const SurjIndex&) const = default;
  std::string str() const;
};

// every strictly decreasing sequence in {0..n-1}, the empty one included,
// listed in the canonical order below
std::vector<SurjIndex> gen_S(int n);

// compare from the small end; at the first difference the larger index
// gives the smaller element, and a proper prefix is smaller
bool lt_S(const SurjIndex& a, const SurjIndex& b);

// unordered pair of disjoint nonempty indices, stored with beta < alpha
struct PPair {
  SurjIndex alpha, beta;

  bool operator==(const PPair&) const = default;
  std::string str() const;
};

// the pairing index set at level n, sorted by (alpha, beta)
std::vector<PPair> gen_P(int n);

// composite degeneracy starting at from_level, one matrix
Mat degeneracy_composite(const TruncSimplicialAlgebra& sa, int from_level, const SurjIndex& s);

// (1 - s_{n-1} d_{n-1}) ... (1 - s_0 d_0) at level n, index 0 applied first
Mat moore_projector(const TruncSimplicialAlgebra& sa, int n);

// the pairing for (alpha, beta) at level n: arguments in the coordinates of
// the Moore pieces at n-|alpha| and n-|beta|, the first argument under
// s_alpha, values in ambient level-n coordinates (they land in ne[n])
BilinearMap c_pairing(const TruncSimplicialAlgebra& sa, const MooreComplex& mc, int n,
                      const PPair& pr);

// ideal of E_n generated by all pairing values; sits inside ne[n]
Subspace pairing_ideal(const TruncSimplicialAlgebra& sa, const MooreComplex& mc, int n);

// sum of the products K_I K_J at level n-1 over nonempty I, J covering
// {0..n-1}
Subspace decomposition_sum(const TruncSimplicialAlgebra& sa, int n);

struct DecompositionReport {
  int n = 0;
  bool degenerate_equals_level = false;  // D_n spans E_n
  int dim_boundary_ne = 0;
  int dim_boundary_ideal = 0;
  int dim_product_sum = 0;
  bool sum_inside_boundary = false;
  bool boundary_ideal_eq = false;
  bool boundary_eq_product_sum = false;
};

DecompositionReport boundary_decomposition(const TruncSimplicialAlgebra& sa,
                                           const MooreComplex& mc, int n);

// does every boundary of every pairing value at level n land in the
// product-span sum at level n-1
struct PairingBoundaryMembership {
  PPair pair;
  bool inside = false;
};

std::vector<PairingBoundaryMembership> pairing_boundary_memberships(
    const TruncSimplicialAlgebra& sa, const MooreComplex& mc, int n);

}  // namespace ho3
