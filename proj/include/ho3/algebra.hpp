#pragma once
#include <memory>
#include <string>

#include "ho3/report.hpp"
#include "ho3/subspace.hpp"

namespace ho3 {

// finite-dimensional commutative algebra over fs, not assumed unital.
// table[(i*dim + j)*dim + k] = coefficient of e_k in e_i e_j
struct FinAlgebra {
  FieldSpec fs;
  int dim = 0;
  std::vector<mpq_class> table;
  std::vector<std::string> basis_names;  // optional, reporting only

  FinAlgebra() = default;
  FinAlgebra(FieldSpec f, int d)
      : fs(f), dim(d), table(size_t(d) * d * d, mpq_class(0)) {}

  mpq_class& c(int i, int j, int k) { return table[(size_t(i) * dim + j) * dim + k]; }
  const mpq_class& c(int i, int j, int k) const {
    return table[(size_t(i) * dim + j) * dim + k];
  }

  Vec mul_basis(int i, int j) const;
  Vec mul(const Vec& x, const Vec& y) const;
  std::string name_of(int i) const;
};

using AlgebraPtr = std::shared_ptr<const FinAlgebra>;

AlgebraPtr make_algebra(FinAlgebra a);
AlgebraPtr zero_algebra(const FieldSpec& fs);
// same carrier, all products zero
AlgebraPtr singularise(const AlgebraPtr& a);

ValidationReport validate_algebra(const AlgebraPtr& a);
// solves u e_j = e_j for all j
std::optional<Vec> unit_of(const AlgebraPtr& a);

// linear map between algebra carriers, column j = image of e_j
struct AlgMorphism {
  AlgebraPtr dom, cod;
  Mat m;

  Vec apply(const Vec& x) const { return m.apply(x); }
};

AlgMorphism make_morphism(AlgebraPtr dom, AlgebraPtr cod, Mat m);
AlgMorphism identity_morphism(const AlgebraPtr& a);
AlgMorphism compose(const AlgMorphism& g, const AlgMorphism& f);  // g after f
// f(xy) = f(x) f(y) on basis pairs
void check_multiplicative(const AlgMorphism& f, const std::string& tag, ValidationReport& rep);

// bilinear map A x B -> C by table on basis pairs
struct BilinearMap {
  FieldSpec fs;
  int dim_a = 0, dim_b = 0, dim_out = 0;
  std::vector<mpq_class> table;  // ((i*dim_b)+j)*dim_out + k

  BilinearMap() = default;
  BilinearMap(FieldSpec f, int da, int db, int dout)
      : fs(f), dim_a(da), dim_b(db), dim_out(dout),
        table(size_t(da) * db * dout, mpq_class(0)) {}

  mpq_class& at(int i, int j, int k) { return table[(size_t(i) * dim_b + j) * dim_out + k]; }
  const mpq_class& at(int i, int j, int k) const {
    return table[(size_t(i) * dim_b + j) * dim_out + k];
  }

  Vec value(int i, int j) const;
  void set_value(int i, int j, const Vec& v);
  Vec apply(const Vec& x, const Vec& y) const;
  bool operator==(const BilinearMap& o) const;
};

BilinearMap mul_map(const AlgebraPtr& a);

// actor acting on carrier; act(r, x) is bilinear by representation
struct Action {
  AlgebraPtr actor, carrier;
  BilinearMap bl;

  Vec act(const Vec& r, const Vec& x) const { return bl.apply(r, x); }
  Vec act_basis(int i, int j) const { return bl.value(i, j); }
};

Action make_action(AlgebraPtr actor, AlgebraPtr carrier, BilinearMap bl);
// action of an algebra on itself by multiplication
Action self_action(const AlgebraPtr& a);

// module law (r s)*x = r*(s*x) and compatibility r*(x y) = (r*x) y = x (r*y)
ValidationReport validate_action(const Action& a);

}  // namespace ho3
