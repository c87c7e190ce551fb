#include "ho3/simplicial.hpp"

namespace ho3 {

namespace {

void check_shapes(const TruncSimplicialAlgebra& sa) {
  const int N = sa.trunc;
  if (int(sa.level.size()) != N + 1) throw FaultError("simplicial: level count mismatch");
  if (int(sa.face.size()) != N + 1) throw FaultError("simplicial: face table size mismatch");
  if (int(sa.degen.size()) != (N > 0 ? N : 0)) throw FaultError("simplicial: degeneracy table size mismatch");
  if (!sa.face[0].empty()) throw FaultError("simplicial: level 0 has no faces");
  for (int n = 1; n <= N; ++n) {
    if (int(sa.face[n].size()) != n + 1) throw FaultError("simplicial: face count at level " + std::to_string(n));
    for (int i = 0; i <= n; ++i) {
      const AlgMorphism& f = sa.d(n, i);
      if (f.m.cols != sa.level[n]->dim || f.m.rows != sa.level[n - 1]->dim)
        throw FaultError("simplicial: face shape at level " + std::to_string(n));
    }
  }
  for (int n = 0; n < N; ++n) {
    if (int(sa.degen[n].size()) != n + 1)
      throw FaultError("simplicial: degeneracy count at level " + std::to_string(n));
    for (int i = 0; i <= n; ++i) {
      const AlgMorphism& f = sa.s(n, i);
      if (f.m.cols != sa.level[n]->dim || f.m.rows != sa.level[n + 1]->dim)
        throw FaultError("simplicial: degeneracy shape at level " + std::to_string(n));
    }
  }
}

}  // namespace

ValidationReport validate_simplicial(const TruncSimplicialAlgebra& sa) {
  check_shapes(sa);
  ValidationReport rep;
  const int N = sa.trunc;
  for (int n = 0; n <= N; ++n) rep.merge(validate_algebra(sa.level[n]));
  for (int n = 1; n <= N; ++n)
    for (int i = 0; i <= n; ++i)
      check_multiplicative(sa.d(n, i), "simplicial.face_multiplicative", rep);
  for (int n = 0; n < N; ++n)
    for (int i = 0; i <= n; ++i)
      check_multiplicative(sa.s(n, i), "simplicial.degeneracy_multiplicative", rep);

  auto eq = [&](const std::string& tag, int n, int i, int j, const Mat& lhs, const Mat& rhs) {
    if (!(lhs == rhs))
      rep.fail(tag, {n, i, j}, "composite matrices differ");
  };
  // d_i d_j = d_{j-1} d_i for i < j, starting at level n
  for (int n = 2; n <= N; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        eq("simplicial.face_face", n, i, j, mat_mul(sa.d(n - 1, i).m, sa.d(n, j).m),
           mat_mul(sa.d(n - 1, j - 1).m, sa.d(n, i).m));
  // s_i s_j = s_{j+1} s_i for i <= j, starting at level n
  for (int n = 0; n + 2 <= N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        eq("simplicial.degen_degen", n, i, j, mat_mul(sa.s(n + 1, i).m, sa.s(n, j).m),
           mat_mul(sa.s(n + 1, j + 1).m, sa.s(n, i).m));
  // d_i s_j at level n
  for (int n = 0; n + 1 <= N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        const Mat comp = mat_mul(sa.d(n + 1, i).m, sa.s(n, j).m);
        if (i == j || i == j + 1) {
          eq("simplicial.face_degen_id", n, i, j, comp, Mat::identity(sa.fs(), sa.level[n]->dim));
        } else if (i < j) {
          eq("simplicial.face_degen", n, i, j, comp, mat_mul(sa.s(n - 1, j - 1).m, sa.d(n, i).m));
        } else {
          eq("simplicial.face_degen", n, i, j, comp, mat_mul(sa.s(n - 1, j).m, sa.d(n, i - 1).m));
        }
      }
  return rep;
}

Subspace kernel_K(const TruncSimplicialAlgebra& sa, int n, const std::vector<int>& faces) {
  Subspace k = Subspace::full(sa.fs(), sa.level.at(n)->dim);
  for (int i : faces) k = k.intersect(kernel_space(sa.d(n, i).m));
  return k;
}

Subspace degenerate_subalgebra(const TruncSimplicialAlgebra& sa, int n) {
  if (n < 1 || n > sa.trunc) throw FaultError("degenerate_subalgebra: level out of range");
  std::vector<Vec> gens;
  for (int i = 0; i <= n - 1; ++i) {
    const Mat& m = sa.s(n - 1, i).m;
    for (int j = 0; j < m.cols; ++j) gens.push_back(m.col(j));
  }
  return subalgebra_closure(sa.level[n], Subspace::span(sa.fs(), sa.level[n]->dim, gens));
}

MooreComplex moore(const TruncSimplicialAlgebra& sa) {
  const int N = sa.trunc;
  MooreComplex mc;
  mc.ne.resize(N + 1);
  mc.bnd_full.resize(N + 1);
  mc.piece.resize(N + 1);
  mc.bnd.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    std::vector<int> lower(n);
    for (int i = 0; i < n; ++i) lower[i] = i;
    mc.ne[n] = kernel_K(sa, n, lower);
    mc.piece[n] = restrict_algebra(sa.level[n], mc.ne[n]);
    if (n >= 1) mc.bnd_full[n] = sa.d(n, n).m;
  }
  for (int n = 1; n <= N; ++n) {
    const SubAlgebra& dom = mc.piece[n];
    const SubAlgebra& cod = mc.piece[n - 1];
    Mat b(sa.fs(), cod.alg->dim, dom.alg->dim);
    for (int j = 0; j < dom.alg->dim; ++j) {
      const Vec img = mc.bnd_full[n].apply(dom.to_ambient(unit_vec(dom.alg->dim, j)));
      if (!cod.space.contains(img))
        throw FaultError("moore: boundary leaves the complex at level " + std::to_string(n));
      const Vec c = cod.to_sub(img);
      for (int i = 0; i < cod.alg->dim; ++i) b.at(i, j) = c[i];
    }
    mc.bnd[n] = b;
  }
  for (int n = 2; n <= N; ++n)
    if (!mat_mul(mc.bnd[n - 1], mc.bnd[n]).is_zero())
      throw FaultError("moore: boundary square nonzero at level " + std::to_string(n));
  return mc;
}

SimplicialHomotopy homotopy_simplicial(const TruncSimplicialAlgebra& sa, const MooreComplex& mc) {
  const int N = sa.trunc;
  SimplicialHomotopy h;
  h.trunc = N;
  for (int n = 0; n < N; ++n) {
    const int dim_n = mc.piece[n].alg->dim;
    const Subspace cycles = (n == 0) ? Subspace::full(sa.fs(), dim_n)
                                     : kernel_space(mc.bnd[n]);
    const Subspace boundaries = image_of(mc.bnd[n + 1], Subspace::full(sa.fs(), mc.piece[n + 1].alg->dim));
    if (!cycles.contains(boundaries))
      throw FaultError("homotopy: boundaries escape cycles at degree " + std::to_string(n));
    h.dims.push_back(cycles.dim() - boundaries.dim());
  }
  return h;
}

}  // namespace ho3
