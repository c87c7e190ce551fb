#include "ho3/pairings.hpp"

#include <algorithm>

namespace ho3 {

std::string SurjIndex::str() const {
  std::string s = "(";
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx[i]);
  }
  return s + ")";
}

std::string PPair::str() const { return alpha.str() + beta.str(); }

bool lt_S(const SurjIndex& a, const SurjIndex& b) {
  const int na = a.size(), nb = b.size();
  for (int k = 0; k < std::min(na, nb); ++k) {
    const int x = a.idx[na - 1 - k], y = b.idx[nb - 1 - k];
    if (x != y) return x > y;
  }
  return na < nb;
}

std::vector<SurjIndex> gen_S(int n) {
  std::vector<SurjIndex> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    SurjIndex s;
    for (int i = n - 1; i >= 0; --i)
      if (mask & (1u << i)) s.idx.push_back(i);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), lt_S);
  return out;
}

std::vector<PPair> gen_P(int n) {
  const std::vector<SurjIndex> all = gen_S(n);
  std::vector<PPair> out;
  for (size_t a = 0; a < all.size(); ++a) {
    if (all[a].idx.empty()) continue;
    for (size_t b = 0; b < a; ++b) {
      if (all[b].idx.empty()) continue;
      bool disjoint = true;
      for (int x : all[a].idx)
        for (int y : all[b].idx)
          if (x == y) disjoint = false;
      if (!disjoint) continue;
      // all[b] < all[a] by construction of the sorted list
      out.push_back(PPair{all[a], all[b]});
    }
  }
  std::sort(out.begin(), out.end(), [](const PPair& p, const PPair& q) {
    if (!(p.alpha == q.alpha)) return lt_S(p.alpha, q.alpha);
    return lt_S(p.beta, q.beta);
  });
  return out;
}

Mat degeneracy_composite(const TruncSimplicialAlgebra& sa, int from_level, const SurjIndex& s) {
  Mat m = Mat::identity(sa.fs(), sa.level.at(from_level)->dim);
  int lvl = from_level;
  for (int k = s.size() - 1; k >= 0; --k) {
    m = mat_mul(sa.s(lvl, s.idx[k]).m, m);
    ++lvl;
  }
  return m;
}

Mat moore_projector(const TruncSimplicialAlgebra& sa, int n) {
  const int dim = sa.level.at(n)->dim;
  Mat p = Mat::identity(sa.fs(), dim);
  for (int j = 0; j < n; ++j) {
    const Mat sd = mat_mul(sa.s(n - 1, j).m, sa.d(n, j).m);
    p = mat_mul(mat_sub(Mat::identity(sa.fs(), dim), sd), p);
  }
  return p;
}

BilinearMap c_pairing(const TruncSimplicialAlgebra& sa, const MooreComplex& mc, int n,
                      const PPair& pr) {
  const int la = n - pr.alpha.size(), lb = n - pr.beta.size();
  if (la < 0 || lb < 0 || n > sa.trunc) throw FaultError("c_pairing: level out of range");
  const SubAlgebra& pa = mc.piece.at(la);
  const SubAlgebra& pb = mc.piece.at(lb);
  const Mat salpha = degeneracy_composite(sa, la, pr.alpha);
  const Mat sbeta = degeneracy_composite(sa, lb, pr.beta);
  const Mat proj = moore_projector(sa, n);
  const AlgebraPtr& top = sa.level[n];
  BilinearMap out(sa.fs(), pa.alg->dim, pb.alg->dim, top->dim);
  for (int i = 0; i < pa.alg->dim; ++i) {
    const Vec xa = salpha.apply(pa.to_ambient(unit_vec(pa.alg->dim, i)));
    for (int j = 0; j < pb.alg->dim; ++j) {
      const Vec xb = sbeta.apply(pb.to_ambient(unit_vec(pb.alg->dim, j)));
      const Vec val = proj.apply(top->mul(xa, xb));
      if (!mc.ne.at(n).contains(val))
        throw FaultError("c_pairing: value escapes the Moore piece at level " + std::to_string(n));
      out.set_value(i, j, val);
    }
  }
  return out;
}

Subspace pairing_ideal(const TruncSimplicialAlgebra& sa, const MooreComplex& mc, int n) {
  std::vector<Vec> gens;
  for (const PPair& pr : gen_P(n)) {
    const BilinearMap bl = c_pairing(sa, mc, n, pr);
    for (int i = 0; i < bl.dim_a; ++i)
      for (int j = 0; j < bl.dim_b; ++j) gens.push_back(bl.value(i, j));
  }
  return ideal_closure(sa.level[n], Subspace::span(sa.fs(), sa.level[n]->dim, gens));
}

Subspace decomposition_sum(const TruncSimplicialAlgebra& sa, int n) {
  const int dim = sa.level.at(n - 1)->dim;
  Subspace total = Subspace::zero_space(sa.fs(), dim);
  const unsigned full = (1u << n) - 1;
  for (unsigned mi = 1; mi <= full; ++mi)
    for (unsigned mj = mi; mj <= full; ++mj) {
      if ((mi | mj) != full) continue;
      auto faces = [&](unsigned mask) {
        std::vector<int> f;
        for (int i = 0; i < n; ++i)
          if (mask & (1u << i)) f.push_back(i);
        return f;
      };
      const Subspace ki = kernel_K(sa, n - 1, faces(mi));
      const Subspace kj = kernel_K(sa, n - 1, faces(mj));
      total = total.sum(product_span(sa.level[n - 1], ki, kj));
    }
  return total;
}

DecompositionReport boundary_decomposition(const TruncSimplicialAlgebra& sa,
                                           const MooreComplex& mc, int n) {
  DecompositionReport rep;
  rep.n = n;
  rep.degenerate_equals_level =
      degenerate_subalgebra(sa, n).dim() == sa.level.at(n)->dim;
  const Subspace b_ne = image_of(mc.bnd_full.at(n), mc.ne.at(n));
  const Subspace b_ideal = image_of(mc.bnd_full.at(n), pairing_ideal(sa, mc, n));
  const Subspace prod = decomposition_sum(sa, n);
  rep.dim_boundary_ne = b_ne.dim();
  rep.dim_boundary_ideal = b_ideal.dim();
  rep.dim_product_sum = prod.dim();
  rep.sum_inside_boundary = b_ne.contains(prod);
  rep.boundary_ideal_eq = (b_ne == b_ideal);
  rep.boundary_eq_product_sum = (b_ne == prod);
  return rep;
}

std::vector<PairingBoundaryMembership> pairing_boundary_memberships(
    const TruncSimplicialAlgebra& sa, const MooreComplex& mc, int n) {
  const Subspace prod = decomposition_sum(sa, n);
  const Mat& bnd = mc.bnd_full.at(n);
  std::vector<PairingBoundaryMembership> out;
  for (const PPair& pr : gen_P(n)) {
    const BilinearMap bl = c_pairing(sa, mc, n, pr);
    bool inside = true;
    for (int i = 0; i < bl.dim_a && inside; ++i)
      for (int j = 0; j < bl.dim_b && inside; ++j)
        inside = prod.contains(bnd.apply(bl.value(i, j)));
    out.push_back({pr, inside});
  }
  return out;
}

}  // namespace ho3
