#pragma once
#include <map>
#include <optional>

#include "ho3/pairings.hpp"
#include "ho3/structures.hpp"

namespace ho3 {

// k[x]/(x^deg), basis 1, x, ..., x^{deg-1}
AlgebraPtr truncated_poly(const FieldSpec& fs, int deg);
// the ideal (x) of k[x]/(x^deg) as its own algebra, basis x, ..., x^{deg-1}
AlgebraPtr truncated_poly_ideal(const FieldSpec& fs, int deg);
// multiplication action of k[x]/(x^deg) on (x)
Action truncated_poly_action(const FieldSpec& fs, int deg);

// every level the same algebra, all faces and degeneracies the identity
TruncSimplicialAlgebra constant_simplicial(const AlgebraPtr& a, int trunc);

// levels (x)^n (+) k[x]/(x^deg): the nerve of the ideal inclusion, with
// slot algebra u_j u_k = u_max
TruncSimplicialAlgebra nerve_inclusion(const FieldSpec& fs, int deg, int trunc);

// levels k[(Z/m)^n] with convolution products; faces drop or add adjacent
// coordinates, degeneracies insert zero
TruncSimplicialAlgebra group_algebra_nerve(const FieldSpec& fs, int m, int trunc);

// the square of ideal inclusions (x) into k[x]/(x^deg) with h(a,b) = ab
CrossedSquare ideal_square(const FieldSpec& fs, int deg);

// inclusion (x) -> k[x]/(x^deg) as a crossed module
PreCrossedModule truncpoly_crossed(const FieldSpec& fs, int deg);

// (x) -=- (x) -> k[x]/(x^deg) with identity upper boundary, zero lower
// boundary, multiplication lifting
TwoCrossedModule truncpoly_two_crossed(const FieldSpec& fs, int deg);

// 0 -> (x) -> k[x]/(x^deg) with the zero lifting
TwoCrossedModule inclusion_two_crossed(const FieldSpec& fs, int deg);

struct FixtureInfo {
  std::string name;
  std::string kind;  // simplicial | two_crossed | square | crossed
  std::string params;
};

std::vector<FixtureInfo> fixture_catalog();

struct FixtureRequest {
  std::string name;
  FieldSpec fs = FieldSpec::rationals();
  std::map<std::string, int> params;
  int trunc = -1;  // -1 takes the fixture default
};

struct Fixture {
  std::string kind;
  std::optional<TruncSimplicialAlgebra> simp;
  std::optional<TwoCrossedModule> two;
  std::optional<CrossedSquare> square;
  std::optional<PreCrossedModule> crossed;
};

Fixture build_fixture(const FixtureRequest& req);

}  // namespace ho3
