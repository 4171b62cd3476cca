#include "cohomology.hpp"

#include "sl2.hpp"

namespace chevlie {

LieStructure<Fp> sl2_structure(const Fp& F) {
  LieStructure<Fp> g;
  g.table.assign(3, std::vector<Vec<Fp>>(3, vec_zero(F, 3)));
  auto set = [&](std::size_t i, std::size_t j, long ce, long ch, long cf) {
    Vec<Fp> v{F.from_int(ce), F.from_int(ch), F.from_int(cf)};
    Vec<Fp> w{F.neg(v[0]), F.neg(v[1]), F.neg(v[2])};
    g.table[i][j] = v;
    g.table[j][i] = w;
  };
  // basis (e, h, f)
  set(0, 1, -2, 0, 0);
  set(0, 2, 0, 1, 0);
  set(1, 2, 0, 0, -2);
  return g;
}

template <class K>
void require_action(const LieStructure<K>& g, const std::vector<Matrix<K>>& ops) {
  if (ops.size() != g.dim()) fail(Errc::invalid_argument, "one action matrix per basis vector");
  std::size_t d = g.dim();
  if (d == 0) return;
  const K& F = ops[0].field();
  std::size_t n = ops[0].rows();
  for (const auto& M : ops)
    if (M.rows() != n || M.cols() != n) fail(Errc::invalid_argument, "action matrices must be square of equal size");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      auto lhs = ops[i] * ops[j] - ops[j] * ops[i];
      Matrix<K> rhs(F, n, n);
      for (std::size_t k = 0; k < d; ++k)
        if (!F.is_zero(g.table[i][j][k])) rhs = rhs + ops[k].scaled(g.table[i][j][k]);
      if (!(lhs == rhs)) fail(Errc::invalid_argument, "action does not respect the brackets");
    }
}

template <class K>
bool is_cocycle(const LieStructure<K>& g, const std::vector<Matrix<K>>& ops,
                const Matrix<K>& phi) {
  std::size_t d = g.dim();
  if (d == 0) return true;
  const K& F = ops[0].field();
  std::size_t n = ops[0].rows();
  if (phi.rows() != n || phi.cols() != d) return false;
  auto col = [&](std::size_t j) {
    Vec<K> v(n, F.zero());
    for (std::size_t i = 0; i < n; ++i) v[i] = phi.at(i, j);
    return v;
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      auto rhs = vec_sub(F, ops[i].mul_vec(col(j)), ops[j].mul_vec(col(i)));
      Vec<K> lhs(n, F.zero());
      for (std::size_t k = 0; k < d; ++k)
        if (!F.is_zero(g.table[i][j][k]))
          lhs = vec_add(F, lhs, vec_scale(F, g.table[i][j][k], col(k)));
      if (lhs != rhs) return false;
    }
  return true;
}

template <class K>
CocycleSpace<K> h1(const LieStructure<K>& g, const std::vector<Matrix<K>>& ops) {
  require_action(g, ops);
  std::size_t d = g.dim();
  CocycleSpace<K> cs;
  cs.d = d;
  if (d == 0) return cs;
  const K& F = ops[0].field();
  std::size_t n = ops[0].rows();
  cs.n = n;

  // unknowns u[j*n + r] = phi(x_j)[r]; one block of n equations per pair
  std::size_t pairs = d * (d - 1) / 2;
  Matrix<K> sys(F, pairs * n, n * d);
  std::size_t block = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) {
          sys.at(block + r, j * n + s) = F.add(sys.at(block + r, j * n + s), ops[i].at(r, s));
          sys.at(block + r, i * n + s) = F.sub(sys.at(block + r, i * n + s), ops[j].at(r, s));
        }
        for (std::size_t k = 0; k < d; ++k)
          sys.at(block + r, k * n + r) = F.sub(sys.at(block + r, k * n + r), g.table[i][j][k]);
      }
      block += n;
    }

  auto ker = sys.kernel();
  for (std::size_t w = 0; w < ker.rows(); ++w) {
    Matrix<K> phi(F, n, d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t r = 0; r < n; ++r) phi.at(r, j) = ker.at(w, j * n + r);
    cs.z1_basis.push_back(std::move(phi));
  }

  Matrix<K> stacked(F, 0, n);
  for (const auto& M : ops) stacked = Matrix<K>::vstack(stacked, M);
  std::size_t inv = stacked.kernel().rows();
  cs.b1_dim = n - inv;
  if (cs.b1_dim > cs.z1_basis.size()) fail(Errc::internal, "coboundaries exceed cocycles");
  cs.h1_dim = cs.z1_basis.size() - cs.b1_dim;
  return cs;
}

Matrix<Fp> gamma_cocycle(std::uint32_t p, long a, long b) {
  Fp F(p);
  Matrix<Fp> phi(F, p - 1, 3);
  phi.at(p - 2, 0) = F.from_int(a);
  phi.at(0, 2) = F.from_int(b);
  return phi;
}

template <class K>
Vec<K> Semidirect<K>::bracket(const Vec<K>& u, const Vec<K>& w) const {
  Vec<K> out(d + n, F.zero());
  for (std::size_t i = 0; i < d; ++i) {
    if (F.is_zero(u[i])) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (F.is_zero(w[j])) continue;
      auto c = F.mul(u[i], w[j]);
      for (std::size_t k = 0; k < d; ++k)
        out[k] = F.add(out[k], F.mul(c, g.table[i][j][k]));
    }
  }
  Vec<K> uv(u.begin() + long(d), u.end());
  Vec<K> wv(w.begin() + long(d), w.end());
  for (std::size_t i = 0; i < d; ++i) {
    if (!F.is_zero(u[i])) {
      auto t = ops[i].mul_vec(wv);
      for (std::size_t r = 0; r < n; ++r) out[d + r] = F.add(out[d + r], F.mul(u[i], t[r]));
    }
    if (!F.is_zero(w[i])) {
      auto t = ops[i].mul_vec(uv);
      for (std::size_t r = 0; r < n; ++r) out[d + r] = F.sub(out[d + r], F.mul(w[i], t[r]));
    }
  }
  return out;
}

template <class K>
Semidirect<K> semidirect(const K& F, const LieStructure<K>& g,
                         const std::vector<Matrix<K>>& ops) {
  require_action(g, ops);
  Semidirect<K> sd{F, g, ops, g.dim(), ops.empty() ? 0 : ops[0].rows()};
  return sd;
}

template <class K>
Subspace<K> complement_from_cocycle(const Semidirect<K>& sd, const Matrix<K>& phi) {
  const K& F = sd.F;
  if (!is_cocycle(sd.g, sd.ops, phi))
    fail(Errc::invalid_argument, "the map does not satisfy the cocycle constraints");
  Matrix<K> rows(F, sd.d, sd.dim());
  for (std::size_t i = 0; i < sd.d; ++i) {
    rows.at(i, i) = F.one();
    for (std::size_t r = 0; r < sd.n; ++r) rows.at(i, sd.d + r) = phi.at(r, i);
  }
  auto S = Subspace<K>::from_rows(rows);
  for (std::size_t i = 0; i < sd.d; ++i)
    for (std::size_t j = 0; j < sd.d; ++j)
      if (!S.contains(sd.bracket(rows.row(i), rows.row(j))))
        fail(Errc::internal, "cocycle graph is not bracket-closed");
  Matrix<K> vrows(F, sd.n, sd.dim());
  for (std::size_t r = 0; r < sd.n; ++r) vrows.at(r, sd.d + r) = F.one();
  if (Subspace<K>::intersection(S, Subspace<K>::from_rows(vrows)).dim() != 0)
    fail(Errc::internal, "cocycle graph meets the module");
  return S;
}

template <class K>
Subspace<K> conjugate_by_module_elt(const Semidirect<K>& sd, const Vec<K>& v,
                                    const Subspace<K>& S) {
  const K& F = sd.F;
  Vec<K> vhat(sd.dim(), F.zero());
  for (std::size_t r = 0; r < sd.n; ++r) vhat[sd.d + r] = v[r];
  Matrix<K> rows(F, S.dim(), sd.dim());
  for (std::size_t i = 0; i < S.dim(); ++i)
    rows.set_row(i, vec_add(F, S.basis().row(i), sd.bracket(vhat, S.basis().row(i))));
  return Subspace<K>::from_rows(rows);
}

template <class K>
DescentResult<K> filtered_descent(const LieAlgebra<K>& L, const ParabolicDatum<K>& pd,
                                  const Subspace<K>& hbar, const Subspace<K>& hprime) {
  const K& F = L.field();
  if (hbar.dim() != hprime.dim())
    fail(Errc::invalid_argument, "subalgebra and its Levi image must have equal dimension");
  for (std::size_t i = 0; i < hbar.dim(); ++i)
    if (!pd.levi.contains(hbar.basis().row(i)))
      fail(Errc::invalid_argument, "target subalgebra is not inside the Levi");
  auto pspan = parabolic_span(pd);
  for (std::size_t i = 0; i < hprime.dim(); ++i)
    if (!pspan.contains(hprime.basis().row(i)))
      fail(Errc::invalid_argument, "subalgebra is not inside the parabolic");
  auto gbar = subalgebra_structure(L, hbar);
  subalgebra_structure(L, hprime);

  std::size_t d = hbar.dim();
  std::vector<char> is_nil(std::size_t(L.dim()), 0);
  for (const auto& ly : pd.layers)
    for (int r : ly.roots) is_nil[std::size_t(L.e_index(r))] = 1;
  auto levi_part = [&](Vec<K> v) {
    for (int i = 0; i < L.dim(); ++i)
      if (is_nil[std::size_t(i)]) v[i] = F.zero();
    return v;
  };

  // lifts of the hbar basis: combinations of hprime whose Levi part is
  // exactly the corresponding hbar basis vector
  Matrix<K> P(F, hprime.dim(), L.dim());
  for (std::size_t r = 0; r < hprime.dim(); ++r) P.set_row(r, levi_part(hprime.basis().row(r)));
  auto Pt = P.transpose();
  std::vector<Vec<K>> lifts;
  for (std::size_t k = 0; k < d; ++k) {
    auto c = Pt.solve(hbar.basis().row(k));
    if (!c) fail(Errc::invalid_argument, "subalgebra does not project onto the Levi copy");
    Vec<K> lift = L.zero();
    for (std::size_t r = 0; r < d; ++r)
      lift = vec_add(F, lift, vec_scale(F, (*c)[r], hprime.basis().row(r)));
    lifts.push_back(lift);
  }

  DescentResult<K> res;
  auto span_of_lifts = [&] {
    Matrix<K> rows(F, d, L.dim());
    for (std::size_t k = 0; k < d; ++k) rows.set_row(k, lifts[k]);
    return Subspace<K>::from_rows(rows);
  };

  for (const auto& ly : pd.layers) {
    std::size_t nl = ly.roots.size();
    Matrix<K> phi(F, nl, d);
    bool zero = true;
    for (std::size_t k = 0; k < d; ++k) {
      auto t = vec_sub(F, lifts[k], hbar.basis().row(k));
      for (std::size_t r = 0; r < nl; ++r) {
        phi.at(r, k) = t[std::size_t(L.e_index(ly.roots[r]))];
        if (!F.is_zero(phi.at(r, k))) zero = false;
      }
    }
    if (zero) continue;
    auto ops = layer_action(L, pd, hbar, ly.level);
    if (!is_cocycle(gbar, ops, phi)) fail(Errc::internal, "layer tails are not a cocycle");
    Matrix<K> sys(F, 0, nl);
    Vec<K> rhs;
    for (std::size_t k = 0; k < d; ++k) {
      sys = Matrix<K>::vstack(sys, ops[k]);
      for (std::size_t r = 0; r < nl; ++r) rhs.push_back(phi.at(r, k));
    }
    auto v = sys.solve(rhs);
    if (!v) {
      res.landed = false;
      res.obstruction_level = ly.level;
      res.obstruction_cocycle = phi;
      res.subspace = span_of_lifts();
      return res;
    }
    Vec<K> vamb = L.zero();
    for (std::size_t j = 0; j < nl; ++j)
      vamb = vec_add(F, vamb,
                     vec_scale(F, (*v)[j], L.basis_vec(L.e_index(ly.roots[j]))));
    for (std::size_t k = 0; k < d; ++k) {
      lifts[k] = truncated_exp_conjugate(L, vamb, lifts[k]);
      if (levi_part(lifts[k]) != hbar.basis().row(k))
        fail(Errc::internal, "conjugation disturbed the Levi part");
    }
    res.conjugators.push_back(vamb);
  }

  for (std::size_t k = 0; k < d; ++k)
    if (lifts[k] != hbar.basis().row(k)) fail(Errc::internal, "descent left unprocessed tails");
  res.landed = true;
  res.obstruction_level = -1;
  res.subspace = span_of_lifts();
  for (std::size_t i = 0; i < res.subspace.dim(); ++i)
    if (!pd.levi.contains(res.subspace.basis().row(i)))
      fail(Errc::internal, "descent finished outside the Levi");
  return res;
}

template void require_action(const LieStructure<Fp>&, const std::vector<Matrix<Fp>>&);
template void require_action(const LieStructure<Rat>&, const std::vector<Matrix<Rat>>&);
template bool is_cocycle(const LieStructure<Fp>&, const std::vector<Matrix<Fp>>&,
                         const Matrix<Fp>&);
template bool is_cocycle(const LieStructure<Rat>&, const std::vector<Matrix<Rat>>&,
                         const Matrix<Rat>&);
template CocycleSpace<Fp> h1(const LieStructure<Fp>&, const std::vector<Matrix<Fp>>&);
template CocycleSpace<Rat> h1(const LieStructure<Rat>&, const std::vector<Matrix<Rat>>&);
template Vec<Fp> Semidirect<Fp>::bracket(const Vec<Fp>&, const Vec<Fp>&) const;
template Semidirect<Fp> semidirect(const Fp&, const LieStructure<Fp>&,
                                   const std::vector<Matrix<Fp>>&);
template Subspace<Fp> complement_from_cocycle(const Semidirect<Fp>&, const Matrix<Fp>&);
template Subspace<Fp> conjugate_by_module_elt(const Semidirect<Fp>&, const Vec<Fp>&,
                                              const Subspace<Fp>&);
template DescentResult<Fp> filtered_descent(const LieAlgebra<Fp>&, const ParabolicDatum<Fp>&,
                                            const Subspace<Fp>&, const Subspace<Fp>&);

}  // namespace chevlie
