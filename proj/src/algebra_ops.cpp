#include "ho3/algebra_ops.hpp"

namespace ho3 {

Subspace product_span(const AlgebraPtr& a, const Subspace& u, const Subspace& v) {
  if (u.ambient != a->dim || v.ambient != a->dim)
    throw FaultError("product_span: ambient mismatch");
  std::vector<Vec> gens;
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < v.dim(); ++j) gens.push_back(a->mul(u.basis.row(i), v.basis.row(j)));
  return Subspace::span(a->fs, a->dim, gens);
}

Subspace ideal_closure(const AlgebraPtr& a, Subspace s) {
  if (s.ambient != a->dim) throw FaultError("ideal_closure: ambient mismatch");
  for (;;) {
    std::vector<Vec> gens;
    for (int i = 0; i < a->dim; ++i)
      for (int j = 0; j < s.dim(); ++j) gens.push_back(a->mul(unit_vec(a->dim, i), s.basis.row(j)));
    Subspace next = s.sum(Subspace::span(a->fs, a->dim, gens));
    if (next.dim() == s.dim()) return s;
    s = next;
  }
}

Subspace subalgebra_closure(const AlgebraPtr& a, Subspace s) {
  if (s.ambient != a->dim) throw FaultError("subalgebra_closure: ambient mismatch");
  for (;;) {
    Subspace next = s.sum(product_span(a, s, s));
    if (next.dim() == s.dim()) return s;
    s = next;
  }
}

Subspace ideal_closure_with_action(const AlgebraPtr& a, const Action& outer, Subspace s) {
  if (outer.carrier->dim != a->dim) throw FaultError("ideal_closure_with_action: carrier mismatch");
  for (;;) {
    std::vector<Vec> gens;
    for (int j = 0; j < s.dim(); ++j) {
      const Vec row = s.basis.row(j);
      for (int i = 0; i < a->dim; ++i) gens.push_back(a->mul(unit_vec(a->dim, i), row));
      for (int i = 0; i < outer.actor->dim; ++i)
        gens.push_back(outer.act(unit_vec(outer.actor->dim, i), row));
    }
    Subspace next = s.sum(Subspace::span(a->fs, a->dim, gens));
    if (next.dim() == s.dim()) return s;
    s = next;
  }
}

SubAlgebra restrict_algebra(const AlgebraPtr& ambient, const Subspace& s) {
  if (s.ambient != ambient->dim) throw FaultError("restrict_algebra: ambient mismatch");
  SubAlgebra out;
  out.parent = ambient;
  out.space = s;
  FinAlgebra alg(ambient->fs, s.dim());
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.dim(); ++j) {
      const Vec prod = ambient->mul(s.basis.row(i), s.basis.row(j));
      if (!s.contains(prod))
        throw FaultError("restrict_algebra: subspace not multiplicatively closed");
      const Vec c = s.coords(prod);
      for (int k = 0; k < s.dim(); ++k) alg.c(i, j, k) = c[k];
    }
  out.alg = make_algebra(std::move(alg));
  return out;
}

Mat QuotientAlgebra::projector() const {
  Mat m(parent->fs, alg->dim, parent->dim);
  for (int j = 0; j < parent->dim; ++j) {
    const Vec q = qm.project(unit_vec(parent->dim, j));
    for (int i = 0; i < alg->dim; ++i) m.at(i, j) = q[i];
  }
  return m;
}

Mat QuotientAlgebra::section_matrix() const { return qm.comp.transpose(); }

QuotientAlgebra quotient_algebra(const AlgebraPtr& a, const Subspace& w) {
  if (w.ambient != a->dim) throw FaultError("quotient_algebra: ambient mismatch");
  for (int i = 0; i < a->dim; ++i)
    for (int j = 0; j < w.dim(); ++j)
      if (!w.contains(a->mul(unit_vec(a->dim, i), w.basis.row(j))))
        throw FaultError("quotient_algebra: denominator is not an ideal");
  QuotientAlgebra out;
  out.parent = a;
  out.qm = make_quotient(Subspace::full(a->fs, a->dim), w);
  const int d = out.qm.dim();
  FinAlgebra alg(a->fs, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Vec prod = a->mul(out.qm.comp.row(i), out.qm.comp.row(j));
      const Vec c = out.qm.project(prod);
      for (int k = 0; k < d; ++k) alg.c(i, j, k) = c[k];
    }
  out.alg = make_algebra(std::move(alg));
  return out;
}

Mat induced_on_quotients(const Mat& f, const QuotientAlgebra& dom, const QuotientAlgebra& cod) {
  if (!cod.qm.w.contains(image_of(f, dom.qm.w)))
    throw FaultError("induced_on_quotients: map does not respect the ideals");
  return mat_mul(cod.projector(), mat_mul(f, dom.section_matrix()));
}

Action induced_action_on_quotient(const Action& act, const QuotientAlgebra& q) {
  if (act.carrier->dim != q.parent->dim)
    throw FaultError("induced_action_on_quotient: carrier mismatch");
  for (int i = 0; i < act.actor->dim; ++i)
    for (int j = 0; j < q.qm.w.dim(); ++j)
      if (!q.qm.w.contains(act.act(unit_vec(act.actor->dim, i), q.qm.w.basis.row(j))))
        throw FaultError("induced_action_on_quotient: ideal not stable under the action");
  BilinearMap bl(act.bl.fs, act.actor->dim, q.alg->dim, q.alg->dim);
  for (int i = 0; i < act.actor->dim; ++i)
    for (int j = 0; j < q.alg->dim; ++j)
      bl.set_value(i, j, q.project(act.act(unit_vec(act.actor->dim, i), q.section(unit_vec(q.alg->dim, j)))));
  return make_action(act.actor, q.alg, std::move(bl));
}

Vec Semidirect::embed(const Vec& m_part, const Vec& r_part) const {
  if (int(m_part.size()) != left->dim || int(r_part.size()) != right->dim)
    throw FaultError("semidirect embed: length mismatch");
  Vec x(left->dim + right->dim);
  for (int i = 0; i < left->dim; ++i) x[i] = m_part[i];
  for (int i = 0; i < right->dim; ++i) x[left->dim + i] = r_part[i];
  return x;
}

Vec Semidirect::left_part(const Vec& x) const {
  return Vec(x.begin(), x.begin() + left->dim);
}

Vec Semidirect::right_part(const Vec& x) const {
  return Vec(x.begin() + left->dim, x.end());
}

Semidirect semidirect(const Action& act) {
  const AlgebraPtr m = act.carrier, r = act.actor;
  const int dm = m->dim, dr = r->dim, d = dm + dr;
  FinAlgebra alg(m->fs, d);
  auto put = [&](int i, int j, const Vec& mv, const Vec& rv) {
    for (int k = 0; k < dm; ++k) alg.c(i, j, k) = f_norm(m->fs, mv[k]);
    for (int k = 0; k < dr; ++k) alg.c(i, j, dm + k) = f_norm(m->fs, rv[k]);
  };
  for (int i = 0; i < dm; ++i)
    for (int j = 0; j < dm; ++j) put(i, j, m->mul_basis(i, j), vec_zero(dr));
  for (int i = 0; i < dm; ++i)
    for (int j = 0; j < dr; ++j) {
      const Vec mv = act.act_basis(j, i);
      put(i, dm + j, mv, vec_zero(dr));
      put(dm + j, i, mv, vec_zero(dr));
    }
  for (int i = 0; i < dr; ++i)
    for (int j = 0; j < dr; ++j) put(dm + i, dm + j, vec_zero(dm), r->mul_basis(i, j));
  for (int i = 0; i < dm; ++i) alg.basis_names.push_back("l." + m->name_of(i));
  for (int i = 0; i < dr; ++i) alg.basis_names.push_back("r." + r->name_of(i));
  Semidirect out;
  out.left = m;
  out.right = r;
  out.alg = make_algebra(std::move(alg));
  return out;
}

Action componentwise_action(const Action& on_left, const Action& on_right,
                            const AlgebraPtr& sum_carrier) {
  if (!(on_left.actor->dim == on_right.actor->dim) ||
      sum_carrier->dim != on_left.carrier->dim + on_right.carrier->dim)
    throw FaultError("componentwise_action: shape mismatch");
  const int dr = on_left.actor->dim, dl = on_left.carrier->dim, dn = on_right.carrier->dim;
  BilinearMap bl(sum_carrier->fs, dr, dl + dn, dl + dn);
  for (int i = 0; i < dr; ++i) {
    for (int j = 0; j < dl; ++j) {
      const Vec v = on_left.act_basis(i, j);
      Vec out = vec_zero(dl + dn);
      for (int k = 0; k < dl; ++k) out[k] = v[k];
      bl.set_value(i, j, out);
    }
    for (int j = 0; j < dn; ++j) {
      const Vec v = on_right.act_basis(i, j);
      Vec out = vec_zero(dl + dn);
      for (int k = 0; k < dn; ++k) out[dl + k] = v[k];
      bl.set_value(i, dl + j, out);
    }
  }
  return make_action(on_left.actor, sum_carrier, std::move(bl));
}

Action action_via_morphism(const AlgMorphism& f, const Action& act) {
  if (f.cod->dim != act.actor->dim) throw FaultError("action_via_morphism: actor mismatch");
  BilinearMap bl(act.bl.fs, f.dom->dim, act.carrier->dim, act.carrier->dim);
  for (int i = 0; i < f.dom->dim; ++i)
    for (int j = 0; j < act.carrier->dim; ++j)
      bl.set_value(i, j, act.act(f.m.col(i), unit_vec(act.carrier->dim, j)));
  return make_action(f.dom, act.carrier, std::move(bl));
}

Action action_on_subalgebra(const Action& act, const SubAlgebra& sub) {
  if (act.carrier->dim != sub.parent->dim) throw FaultError("action_on_subalgebra: carrier mismatch");
  BilinearMap bl(act.bl.fs, act.actor->dim, sub.alg->dim, sub.alg->dim);
  for (int i = 0; i < act.actor->dim; ++i)
    for (int j = 0; j < sub.alg->dim; ++j) {
      const Vec y = act.act(unit_vec(act.actor->dim, i), sub.to_ambient(unit_vec(sub.alg->dim, j)));
      if (!sub.space.contains(y))
        throw FaultError("action_on_subalgebra: subspace not stable under the action");
      bl.set_value(i, j, sub.to_sub(y));
    }
  return make_action(act.actor, sub.alg, std::move(bl));
}

}  // namespace ho3
