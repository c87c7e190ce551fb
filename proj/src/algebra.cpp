#include "ho3/algebra.hpp"

namespace ho3 {

Vec FinAlgebra::mul_basis(int i, int j) const {
  Vec v(dim);
  for (int k = 0; k < dim; ++k) v[k] = c(i, j, k);
  return v;
}

Vec FinAlgebra::mul(const Vec& x, const Vec& y) const {
  if (int(x.size()) != dim || int(y.size()) != dim) throw FaultError("mul: length mismatch");
  Vec out = vec_zero(dim);
  for (int i = 0; i < dim; ++i) {
    if (f_is_zero(x[i])) continue;
    for (int j = 0; j < dim; ++j) {
      if (f_is_zero(y[j])) continue;
      const mpq_class xy = x[i] * y[j];
      for (int k = 0; k < dim; ++k) out[k] += xy * c(i, j, k);
    }
  }
  for (auto& v : out) v = f_norm(fs, v);
  return out;
}

std::string FinAlgebra::name_of(int i) const {
  if (i < int(basis_names.size())) return basis_names[i];
  return "e" + std::to_string(i);
}

AlgebraPtr make_algebra(FinAlgebra a) {
  for (auto& v : a.table) v = f_norm(a.fs, v);
  return std::make_shared<const FinAlgebra>(std::move(a));
}

AlgebraPtr zero_algebra(const FieldSpec& fs) { return make_algebra(FinAlgebra(fs, 0)); }

AlgebraPtr singularise(const AlgebraPtr& a) {
  FinAlgebra s(a->fs, a->dim);
  s.basis_names = a->basis_names;
  return make_algebra(std::move(s));
}

ValidationReport validate_algebra(const AlgebraPtr& a) {
  ValidationReport rep;
  const int n = a->dim;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      rep.check_vec_eq("algebra.commutative", {i, j}, a->mul_basis(i, j), a->mul_basis(j, i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec ij = a->mul_basis(i, j);
      for (int k = 0; k < n; ++k) {
        const Vec lhs = a->mul(ij, unit_vec(n, k));
        const Vec rhs = a->mul(unit_vec(n, i), a->mul_basis(j, k));
        rep.check_vec_eq("algebra.associative", {i, j, k}, lhs, rhs);
      }
    }
  return rep;
}

std::optional<Vec> unit_of(const AlgebraPtr& a) {
  const int n = a->dim;
  if (n == 0) return std::nullopt;
  // rows: for each target pair (j, k), sum_i u_i c(i,j,k) = delta_{jk}
  Mat sys(a->fs, n * n, n);
  Vec rhs = vec_zero(n * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) sys.at(j * n + k, i) = a->c(i, j, k);
      rhs[j * n + k] = (j == k) ? 1 : 0;
    }
  return solve(sys, rhs);
}

AlgMorphism make_morphism(AlgebraPtr dom, AlgebraPtr cod, Mat m) {
  if (m.cols != dom->dim || m.rows != cod->dim) throw FaultError("morphism: shape mismatch");
  return AlgMorphism{std::move(dom), std::move(cod), std::move(m)};
}

AlgMorphism identity_morphism(const AlgebraPtr& a) {
  return AlgMorphism{a, a, Mat::identity(a->fs, a->dim)};
}

AlgMorphism compose(const AlgMorphism& g, const AlgMorphism& f) {
  if (f.cod->dim != g.dom->dim || !(f.cod->fs == g.dom->fs))
    throw FaultError("compose: middle algebra mismatch");
  return AlgMorphism{f.dom, g.cod, mat_mul(g.m, f.m)};
}

void check_multiplicative(const AlgMorphism& f, const std::string& tag, ValidationReport& rep) {
  for (int i = 0; i < f.dom->dim; ++i)
    for (int j = i; j < f.dom->dim; ++j) {
      const Vec lhs = f.apply(f.dom->mul_basis(i, j));
      const Vec rhs = f.cod->mul(f.m.col(i), f.m.col(j));
      rep.check_vec_eq(tag, {i, j}, lhs, rhs);
    }
}

Vec BilinearMap::value(int i, int j) const {
  Vec v(dim_out);
  for (int k = 0; k < dim_out; ++k) v[k] = at(i, j, k);
  return v;
}

void BilinearMap::set_value(int i, int j, const Vec& v) {
  if (int(v.size()) != dim_out) throw FaultError("set_value: length mismatch");
  for (int k = 0; k < dim_out; ++k) at(i, j, k) = f_norm(fs, v[k]);
}

Vec BilinearMap::apply(const Vec& x, const Vec& y) const {
  if (int(x.size()) != dim_a || int(y.size()) != dim_b)
    throw FaultError("bilinear apply: length mismatch");
  Vec out = vec_zero(dim_out);
  for (int i = 0; i < dim_a; ++i) {
    if (f_is_zero(x[i])) continue;
    for (int j = 0; j < dim_b; ++j) {
      if (f_is_zero(y[j])) continue;
      const mpq_class xy = x[i] * y[j];
      for (int k = 0; k < dim_out; ++k) out[k] += xy * at(i, j, k);
    }
  }
  for (auto& v : out) v = f_norm(fs, v);
  return out;
}

bool BilinearMap::operator==(const BilinearMap& o) const {
  return dim_a == o.dim_a && dim_b == o.dim_b && dim_out == o.dim_out && fs == o.fs &&
         table == o.table;
}

BilinearMap mul_map(const AlgebraPtr& a) {
  BilinearMap bl(a->fs, a->dim, a->dim, a->dim);
  bl.table = a->table;
  return bl;
}

Action make_action(AlgebraPtr actor, AlgebraPtr carrier, BilinearMap bl) {
  if (bl.dim_a != actor->dim || bl.dim_b != carrier->dim || bl.dim_out != carrier->dim)
    throw FaultError("action: shape mismatch");
  return Action{std::move(actor), std::move(carrier), std::move(bl)};
}

Action self_action(const AlgebraPtr& a) { return make_action(a, a, mul_map(a)); }

ValidationReport validate_action(const Action& a) {
  ValidationReport rep;
  const int nr = a.actor->dim, nc = a.carrier->dim;
  for (int r = 0; r < nr; ++r)
    for (int s = 0; s < nr; ++s)
      for (int x = 0; x < nc; ++x) {
        const Vec lhs = a.act(a.actor->mul_basis(r, s), unit_vec(nc, x));
        const Vec rhs = a.act(unit_vec(nr, r), a.act_basis(s, x));
        rep.check_vec_eq("action.module_law", {r, s, x}, lhs, rhs);
      }
  for (int r = 0; r < nr; ++r)
    for (int x = 0; x < nc; ++x)
      for (int y = 0; y < nc; ++y) {
        const Vec lhs = a.act(unit_vec(nr, r), a.carrier->mul_basis(x, y));
        const Vec rhs1 = a.carrier->mul(a.act_basis(r, x), unit_vec(nc, y));
        const Vec rhs2 = a.carrier->mul(unit_vec(nc, x), a.act_basis(r, y));
        rep.check_vec_eq("action.mult_compat", {r, x, y}, lhs, rhs1);
        rep.check_vec_eq("action.mult_compat", {r, x, y}, lhs, rhs2);
      }
  return rep;
}

}  // namespace ho3
