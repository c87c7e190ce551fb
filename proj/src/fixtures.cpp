#include "ho3/fixtures.hpp"

namespace ho3 {

namespace {

std::string pow_name(int k) {
  if (k == 0) return "1";
  if (k == 1) return "x";
  return "x" + std::to_string(k);
}

int param_or(const FixtureRequest& req, const std::string& key, int dflt) {
  auto it = req.params.find(key);
  return it == req.params.end() ? dflt : it->second;
}

}  // namespace

AlgebraPtr truncated_poly(const FieldSpec& fs, int deg) {
  if (deg < 2) throw FaultError("truncated_poly: degree below 2");
  FinAlgebra a(fs, deg);
  for (int i = 0; i < deg; ++i)
    for (int j = 0; j < deg; ++j)
      if (i + j < deg) a.c(i, j, i + j) = 1;
  for (int i = 0; i < deg; ++i) a.basis_names.push_back(pow_name(i));
  return make_algebra(std::move(a));
}

AlgebraPtr truncated_poly_ideal(const FieldSpec& fs, int deg) {
  if (deg < 2) throw FaultError("truncated_poly_ideal: degree below 2");
  const int dc = deg - 1;  // basis x^{b+1}
  FinAlgebra a(fs, dc);
  for (int i = 0; i < dc; ++i)
    for (int j = 0; j < dc; ++j)
      if (i + j + 1 < dc) a.c(i, j, i + j + 1) = 1;
  for (int i = 0; i < dc; ++i) a.basis_names.push_back(pow_name(i + 1));
  return make_algebra(std::move(a));
}

Action truncated_poly_action(const FieldSpec& fs, int deg) {
  const AlgebraPtr r = truncated_poly(fs, deg);
  const AlgebraPtr c = truncated_poly_ideal(fs, deg);
  const int dc = deg - 1;
  BilinearMap bl(fs, deg, dc, dc);
  for (int i = 0; i < deg; ++i)
    for (int b = 0; b < dc; ++b)
      if (i + b < dc) bl.at(i, b, i + b) = 1;
  return make_action(r, c, std::move(bl));
}

TruncSimplicialAlgebra constant_simplicial(const AlgebraPtr& a, int trunc) {
  TruncSimplicialAlgebra sa;
  sa.trunc = trunc;
  sa.level.assign(trunc + 1, a);
  sa.face.resize(trunc + 1);
  sa.degen.resize(trunc);
  for (int n = 1; n <= trunc; ++n)
    for (int i = 0; i <= n; ++i) sa.face[n].push_back(identity_morphism(a));
  for (int n = 0; n < trunc; ++n)
    for (int i = 0; i <= n; ++i) sa.degen[n].push_back(identity_morphism(a));
  return sa;
}

TruncSimplicialAlgebra nerve_inclusion(const FieldSpec& fs, int deg, int trunc) {
  const int dr = deg, dc = deg - 1;
  // level n carrier: r followed by n slots of c; slot products u_j u_k = u_max
  auto level_dim = [&](int n) { return dr + n * dc; };
  auto slot_index = [&](int j, int b) { return dr + (j - 1) * dc + b; };
  auto mul_r = [&](int i, int j) { return i + j < dr ? i + j : -1; };
  auto mul_c = [&](int a, int b) { return a + b + 1 < dc ? a + b + 1 : -1; };
  auto mul_rc = [&](int i, int b) { return i + b < dc ? i + b : -1; };

  std::vector<AlgebraPtr> levels;
  for (int n = 0; n <= trunc; ++n) {
    const int d = level_dim(n);
    FinAlgebra a(fs, d);
    for (int i = 0; i < dr; ++i)
      for (int j = 0; j < dr; ++j)
        if (int k = mul_r(i, j); k >= 0) a.c(i, j, k) = 1;
    for (int i = 0; i < dr; ++i)
      for (int j = 1; j <= n; ++j)
        for (int b = 0; b < dc; ++b)
          if (int k = mul_rc(i, b); k >= 0) {
            a.c(i, slot_index(j, b), slot_index(j, k)) = 1;
            a.c(slot_index(j, b), i, slot_index(j, k)) = 1;
          }
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int b = 0; b < dc; ++b)
          for (int b2 = 0; b2 < dc; ++b2)
            if (int p = mul_c(b, b2); p >= 0)
              a.c(slot_index(j, b), slot_index(k, b2), slot_index(std::max(j, k), p)) = 1;
    for (int i = 0; i < dr; ++i) a.basis_names.push_back(pow_name(i));
    for (int j = 1; j <= n; ++j)
      for (int b = 0; b < dc; ++b)
        a.basis_names.push_back(pow_name(b + 1) + "u" + std::to_string(j));
    levels.push_back(make_algebra(std::move(a)));
  }

  TruncSimplicialAlgebra sa;
  sa.trunc = trunc;
  sa.level = levels;
  sa.face.resize(trunc + 1);
  sa.degen.resize(trunc);
  for (int n = 1; n <= trunc; ++n)
    for (int i = 0; i <= n; ++i) {
      Mat m(fs, level_dim(n - 1), level_dim(n));
      for (int t = 0; t < dr; ++t) m.at(t, t) = 1;
      if (i == n) {
        // fold the bottom slot into r and shift the rest down
        for (int b = 0; b < dc; ++b) m.at(b + 1, slot_index(1, b)) = 1;
        for (int j = 2; j <= n; ++j)
          for (int b = 0; b < dc; ++b) m.at(slot_index(j - 1, b), slot_index(j, b)) = 1;
      } else if (i == 0) {
        for (int j = 1; j <= n - 1; ++j)
          for (int b = 0; b < dc; ++b) m.at(slot_index(j, b), slot_index(j, b)) = 1;
      } else {
        // merge slots n-i and n-i+1
        for (int j = 1; j <= n; ++j) {
          const int target = j <= n - i ? j : j - 1;
          for (int b = 0; b < dc; ++b) m.at(slot_index(target, b), slot_index(j, b)) = 1;
        }
      }
      sa.face[n].push_back(make_morphism(levels[n], levels[n - 1], std::move(m)));
    }
  for (int n = 0; n < trunc; ++n)
    for (int i = 0; i <= n; ++i) {
      Mat m(fs, level_dim(n + 1), level_dim(n));
      for (int t = 0; t < dr; ++t) m.at(t, t) = 1;
      // empty slot appears at position n-i+1
      for (int j = 1; j <= n; ++j) {
        const int target = j <= n - i ? j : j + 1;
        for (int b = 0; b < dc; ++b) m.at(slot_index(target, b), slot_index(j, b)) = 1;
      }
      sa.degen[n].push_back(make_morphism(levels[n], levels[n + 1], std::move(m)));
    }
  return sa;
}

TruncSimplicialAlgebra group_algebra_nerve(const FieldSpec& fs, int m, int trunc) {
  if (m < 2) throw FaultError("group_algebra_nerve: modulus below 2");
  auto dim_at = [&](int n) {
    long d = 1;
    for (int t = 0; t < n; ++t) {
      d *= m;
      if (d > 4096) throw FaultError("group_algebra_nerve: level dimension too large");
    }
    return int(d);
  };
  auto decode = [&](int idx, int n) {
    std::vector<int> a(n);
    for (int t = 0; t < n; ++t) {
      a[t] = idx % m;
      idx /= m;
    }
    return a;
  };
  auto encode = [&](const std::vector<int>& a) {
    int idx = 0;
    for (int t = int(a.size()) - 1; t >= 0; --t) idx = idx * m + a[t];
    return idx;
  };

  std::vector<AlgebraPtr> levels;
  for (int n = 0; n <= trunc; ++n) {
    const int d = dim_at(n);
    FinAlgebra a(fs, d);
    for (int g = 0; g < d; ++g)
      for (int h = 0; h < d; ++h) {
        const auto tg = decode(g, n), th = decode(h, n);
        std::vector<int> sum(n);
        for (int t = 0; t < n; ++t) sum[t] = (tg[t] + th[t]) % m;
        a.c(g, h, encode(sum)) = 1;
      }
    for (int g = 0; g < d; ++g) {
      const auto t = decode(g, n);
      std::string nm = "g(";
      for (int k = 0; k < n; ++k) nm += (k ? "," : "") + std::to_string(t[k]);
      a.basis_names.push_back(nm + ")");
    }
    levels.push_back(make_algebra(std::move(a)));
  }

  TruncSimplicialAlgebra sa;
  sa.trunc = trunc;
  sa.level = levels;
  sa.face.resize(trunc + 1);
  sa.degen.resize(trunc);
  for (int n = 1; n <= trunc; ++n)
    for (int i = 0; i <= n; ++i) {
      Mat mat(fs, dim_at(n - 1), dim_at(n));
      for (int g = 0; g < dim_at(n); ++g) {
        const auto t = decode(g, n);
        std::vector<int> out;
        if (i == 0) {
          out.assign(t.begin() + 1, t.end());
        } else if (i == n) {
          out.assign(t.begin(), t.end() - 1);
        } else {
          out = t;
          out[i - 1] = (t[i - 1] + t[i]) % m;
          out.erase(out.begin() + i);
        }
        mat.at(encode(out), g) = 1;
      }
      sa.face[n].push_back(make_morphism(levels[n], levels[n - 1], std::move(mat)));
    }
  for (int n = 0; n < trunc; ++n)
    for (int i = 0; i <= n; ++i) {
      Mat mat(fs, dim_at(n + 1), dim_at(n));
      for (int g = 0; g < dim_at(n); ++g) {
        auto t = decode(g, n);
        t.insert(t.begin() + i, 0);
        mat.at(encode(t), g) = 1;
      }
      sa.degen[n].push_back(make_morphism(levels[n], levels[n + 1], std::move(mat)));
    }
  return sa;
}

CrossedSquare ideal_square(const FieldSpec& fs, int deg) {
  const AlgebraPtr ideal = truncated_poly_ideal(fs, deg);
  const AlgebraPtr poly = truncated_poly(fs, deg);
  const int dc = deg - 1;
  Mat incl(fs, deg, dc);
  for (int b = 0; b < dc; ++b) incl.at(b + 1, b) = 1;
  CrossedSquare sq;
  sq.l = sq.m = sq.n = ideal;
  sq.r = poly;
  sq.lam = Mat::identity(fs, dc);
  sq.lamp = Mat::identity(fs, dc);
  sq.mu = incl;
  sq.nu = incl;
  sq.act_rm = truncated_poly_action(fs, deg);
  sq.act_rn = sq.act_rm;
  sq.act_rl = sq.act_rm;
  sq.h = mul_map(ideal);
  return sq;
}

PreCrossedModule truncpoly_crossed(const FieldSpec& fs, int deg) {
  const AlgebraPtr ideal = truncated_poly_ideal(fs, deg);
  const AlgebraPtr poly = truncated_poly(fs, deg);
  Mat incl(fs, deg, deg - 1);
  for (int b = 0; b < deg - 1; ++b) incl.at(b + 1, b) = 1;
  return PreCrossedModule{ideal, poly, std::move(incl), truncated_poly_action(fs, deg)};
}

TwoCrossedModule truncpoly_two_crossed(const FieldSpec& fs, int deg) {
  const AlgebraPtr ideal = truncated_poly_ideal(fs, deg);
  const AlgebraPtr poly = truncated_poly(fs, deg);
  TwoCrossedModule t;
  t.c2 = ideal;
  t.c1 = ideal;
  t.c0 = poly;
  t.d2 = Mat::identity(fs, deg - 1);
  t.d1 = Mat(fs, deg, deg - 1);  // zero boundary
  t.act01 = truncated_poly_action(fs, deg);
  t.act02 = t.act01;
  t.lifting = mul_map(ideal);
  return t;
}

TwoCrossedModule inclusion_two_crossed(const FieldSpec& fs, int deg) {
  const AlgebraPtr ideal = truncated_poly_ideal(fs, deg);
  const AlgebraPtr poly = truncated_poly(fs, deg);
  const AlgebraPtr zero = zero_algebra(fs);
  const int dc = deg - 1;
  Mat incl(fs, deg, dc);
  for (int b = 0; b < dc; ++b) incl.at(b + 1, b) = 1;
  TwoCrossedModule t;
  t.c2 = zero;
  t.c1 = ideal;
  t.c0 = poly;
  t.d2 = Mat(fs, dc, 0);
  t.d1 = std::move(incl);
  t.act01 = truncated_poly_action(fs, deg);
  t.act02 = make_action(poly, zero, BilinearMap(fs, deg, 0, 0));
  t.lifting = BilinearMap(fs, dc, dc, 0);
  return t;
}

std::vector<FixtureInfo> fixture_catalog() {
  return {
      {"const", "simplicial", "deg=2 trunc=4; constant levels k[x]/(x^deg)"},
      {"nerve", "simplicial", "deg=3 trunc=4; nerve of (x) into k[x]/(x^deg)"},
      {"dk", "simplicial", "m=2 trunc=4 (m=3 defaults to trunc=3); levels k[(Z/m)^n]"},
      {"idealsq", "square", "deg=3; ideal inclusions of (x) into k[x]/(x^deg)"},
      {"truncpoly-xmod", "crossed", "deg=3; (x) into k[x]/(x^deg)"},
      {"truncpoly-2cm", "two_crossed", "deg=4; (x) = (x) over k[x]/(x^deg)"},
      {"incl-2cm", "two_crossed", "deg=3; 0 -> (x) -> k[x]/(x^deg)"},
  };
}

Fixture build_fixture(const FixtureRequest& req) {
  for (const auto& [key, value] : req.params) {
    if (key != "deg" && key != "m") throw FaultError("unknown fixture parameter: " + key);
    if (value < 2 || value > 16) throw FaultError("fixture parameter out of range: " + key);
  }
  auto trunc_or = [&](int dflt) {
    const int t = req.trunc < 0 ? dflt : req.trunc;
    if (t < 1 || t > 5) throw FaultError("truncation must lie in 1..5");
    return t;
  };
  auto no_trunc = [&] {
    if (req.trunc >= 0) throw FaultError("fixture " + req.name + " takes no truncation");
  };
  Fixture f;
  if (req.name == "const") {
    f.kind = "simplicial";
    f.simp = constant_simplicial(truncated_poly(req.fs, param_or(req, "deg", 2)), trunc_or(4));
  } else if (req.name == "nerve") {
    f.kind = "simplicial";
    f.simp = nerve_inclusion(req.fs, param_or(req, "deg", 3), trunc_or(4));
  } else if (req.name == "dk") {
    f.kind = "simplicial";
    const int m = param_or(req, "m", 2);
    f.simp = group_algebra_nerve(req.fs, m, trunc_or(m == 2 ? 4 : 3));
  } else if (req.name == "idealsq") {
    f.kind = "square";
    no_trunc();
    f.square = ideal_square(req.fs, param_or(req, "deg", 3));
  } else if (req.name == "truncpoly-xmod") {
    f.kind = "crossed";
    no_trunc();
    f.crossed = truncpoly_crossed(req.fs, param_or(req, "deg", 3));
  } else if (req.name == "truncpoly-2cm") {
    f.kind = "two_crossed";
    no_trunc();
    f.two = truncpoly_two_crossed(req.fs, param_or(req, "deg", 4));
  } else if (req.name == "incl-2cm") {
    f.kind = "two_crossed";
    no_trunc();
    f.two = inclusion_two_crossed(req.fs, param_or(req, "deg", 3));
  } else {
    throw FaultError("unknown fixture: " + req.name);
  }
  return f;
}

}  // namespace ho3
