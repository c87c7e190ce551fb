#pragma once
#include "ho3/pairings.hpp"
#include "ho3/structures.hpp"

namespace ho3 {

struct CheckItem {
  std::string name;
  bool ok = false;
  std::string detail;
};

// construction-time evidence: identity checks, homotopy tables on both
// sides, and the degree-three comparison matrices where they exist
struct FunctorCertificate {
  std::string functor;
  std::vector<CheckItem> checks;
  std::vector<std::string> notes;
  std::vector<int> pi_in, pi_out;       // degrees 0..3
  std::optional<Mat> wit_fwd, wit_bwd;  // top-degree comparison, both ways

  bool ok() const;
  void check(const std::string& name, bool is_ok, const std::string& detail = "");
  void note(const std::string& text) { notes.push_back(text); }
};

struct QuadraticResult {
  QuadraticModule qm;
  FunctorCertificate cert;
};

struct TwoCrossedResult {
  TwoCrossedModule tcm;
  FunctorCertificate cert;
};

struct SquareResult {
  CrossedSquare sq;
  FunctorCertificate cert;
};

// collapses the triple Peiffer ideal in degree one and its lifted ideal in
// degree two; certificate carries the degree-three comparison
QuadraticResult quadratic_from_two_crossed(const TwoCrossedModule& t);

// same collapse run on the Moore complex of a simplicial algebra, with the
// degree-two lifting given by the degeneracy formula
QuadraticResult quadratic_from_simplicial(const TruncSimplicialAlgebra& sa);

// direct construction on a crossed square; cross-checked against going
// through the mapping cone
QuadraticResult quadratic_from_square(const CrossedSquare& sq);

// kernels of the two bottom faces over level one, with level two collapsed
// along top boundaries
SquareResult square_from_simplicial(const TruncSimplicialAlgebra& sa);

// mapping cone of a crossed square: the semidirect carrier in degree one,
// the corner in degree two; the lifting is selected by validation among the
// sign candidates and faults unless exactly one distinct table passes
TwoCrossedResult two_crossed_from_square(const CrossedSquare& sq);

// Moore complex in low degrees with level two collapsed along boundaries of
// degenerate top cycles
TwoCrossedResult two_crossed_from_simplicial(const TruncSimplicialAlgebra& sa);

}  // namespace ho3
