#pragma once
#include "ho3/algebra.hpp"

namespace ho3 {

// span of the pairwise products of the two bases; not multiplicatively closed
Subspace product_span(const AlgebraPtr& a, const Subspace& u, const Subspace& v);

// smallest subspace containing s that absorbs multiplication by a.
// commutativity makes one-sided absorption enough.
Subspace ideal_closure(const AlgebraPtr& a, Subspace s);
Subspace subalgebra_closure(const AlgebraPtr& a, Subspace s);
// absorbs both multiplication by a and an outer action on a's carrier
Subspace ideal_closure_with_action(const AlgebraPtr& a, const Action& outer, Subspace s);

// a multiplicatively closed subspace of an ambient algebra, repackaged with
// its own structure constants over the rref basis
struct SubAlgebra {
  AlgebraPtr alg;
  AlgebraPtr parent;
  Subspace space;

  Vec to_sub(const Vec& ambient) const { return space.coords(ambient); }
  Vec to_ambient(const Vec& sub) const { return space.from_coords(sub); }
  // parent->dim x alg->dim, column j = j-th basis row of space
  Mat incl_matrix() const { return space.basis.transpose(); }
};

SubAlgebra restrict_algebra(const AlgebraPtr& ambient, const Subspace& s);

// quotient of a by an ideal w; faults if w fails to absorb multiplication
struct QuotientAlgebra {
  AlgebraPtr alg;
  AlgebraPtr parent;
  QuotientMap qm;

  Vec project(const Vec& x) const { return qm.project(x); }
  Vec section(const Vec& q) const { return qm.section(q); }
  Mat projector() const;       // alg->dim x parent->dim
  Mat section_matrix() const;  // parent->dim x alg->dim
};

QuotientAlgebra quotient_algebra(const AlgebraPtr& a, const Subspace& w);

// quotient-to-quotient induced matrix; faults unless f maps dom.w into cod.w
Mat induced_on_quotients(const Mat& f, const QuotientAlgebra& dom, const QuotientAlgebra& cod);

// same actor acting on the quotient carrier; faults unless w is stable
Action induced_action_on_quotient(const Action& act, const QuotientAlgebra& q);

// m (+) r with product (m,r)(m',r') = (m m' + r*m' + r'*m, r r')
struct Semidirect {
  AlgebraPtr alg;
  AlgebraPtr left, right;  // left = acted carrier, right = actor

  Vec embed(const Vec& m_part, const Vec& r_part) const;
  Vec left_part(const Vec& x) const;
  Vec right_part(const Vec& x) const;
};

Semidirect semidirect(const Action& act);

// r acting on a direct sum slotwise
Action componentwise_action(const Action& on_left, const Action& on_right,
                            const AlgebraPtr& sum_carrier);

// pull the actor back along an algebra map into the old actor
Action action_via_morphism(const AlgMorphism& f, const Action& act);

// restrict the carrier to a stable subalgebra; faults on instability
Action action_on_subalgebra(const Action& act, const SubAlgebra& sub);

}  // namespace ho3
