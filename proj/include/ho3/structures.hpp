#pragma once
#include "ho3/algebra_ops.hpp"

namespace ho3 {

// homotopy of a structure, degrees 0..3; degree 0 always vanishes here
struct StructureHomotopy {
  std::vector<int> dims;
};

// d: c1 -> c0 multiplicative with c0 acting on c1 and d(r*x) = r d(x)
struct PreCrossedModule {
  AlgebraPtr c1, c0;
  Mat d;
  Action act;  // actor c0, carrier c1
};

// <x, y> = x y - x * d(y)
Vec peiffer(const PreCrossedModule& pre, const Vec& x, const Vec& y);
Subspace peiffer_span(const PreCrossedModule& pre);
// ideal closure of the pairwise Peiffer elements
Subspace p2_ideal(const PreCrossedModule& pre);
// ideal closure of both triple bracketings <<x,y>,z> and <x,<y,z>>
Subspace p3_ideal(const PreCrossedModule& pre);

ValidationReport validate_precrossed(const PreCrossedModule& pre);
// adds the Peiffer identity d(x)*y = x y
ValidationReport validate_crossed(const PreCrossedModule& pre);

struct AssociatedCrossed {
  PreCrossedModule cm;
  QuotientAlgebra quot;  // c1 / p2
};
AssociatedCrossed associated_crossed(const PreCrossedModule& pre);

// c2 -> c1 -> c0 with lifting {-,-}: c1 x c1 -> c2
struct TwoCrossedModule {
  AlgebraPtr c2, c1, c0;
  Mat d2, d1;
  Action act01, act02;  // c0 on c1, c0 on c2
  BilinearMap lifting;
};

// x * y = x * d1(y) + {d2 x (x) y}; this is what makes d2 a crossed module
Action induced_action_12(const TwoCrossedModule& t);
ValidationReport validate_two_crossed(const TwoCrossedModule& t);
StructureHomotopy homotopy_two_crossed(const TwoCrossedModule& t);

struct CrossedSquare {
  AlgebraPtr l, m, n, r;
  Mat lam, lamp;  // l -> m, l -> n
  Mat mu, nu;     // m -> r, n -> r
  Action act_rm, act_rn, act_rl;
  BilinearMap h;  // m x n -> l
};

ValidationReport validate_square(const CrossedSquare& sq);
StructureHomotopy homotopy_square(const CrossedSquare& sq);

// l -> m -> n over a nil(2) pre-crossed base, with the pairing omega on the
// singular quotient c of m
struct QuadraticModule {
  AlgebraPtr l, m, n;
  Mat delta;    // l -> m
  Mat partial;  // m -> n
  Action act_nm, act_nl;
  AlgebraPtr c;       // singular carrier
  Mat q;              // m -> c, surjective
  BilinearMap omega;  // c x c -> l
};

PreCrossedModule quadratic_base(const QuadraticModule& qm);
ValidationReport validate_quadratic(const QuadraticModule& qm);
StructureHomotopy homotopy_quadratic(const QuadraticModule& qm);

// m / (p2 + m m) with its projection and the descended Peiffer pairing
struct SingularQuotient {
  QuotientAlgebra quot;
  BilinearMap w;  // c x c -> m
};
SingularQuotient singular_quotient(const PreCrossedModule& pre);

}  // namespace ho3
