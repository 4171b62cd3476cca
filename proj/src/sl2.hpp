#pragma once

#include <vector>

#include "chevalley.hpp"
#include "matrix.hpp"

namespace chevlie {

template <class K>
struct Sl2Triple {
  Vec<K> e, h, f;
};

template <class K>
bool verify_triple(const LieAlgebra<K>& L, const Sl2Triple<K>& t) {
  const K& F = L.field();
  auto two = F.from_int(2);
  if (L.bracket(t.h, t.e) != vec_scale(F, two, t.e)) return false;
  if (L.bracket(t.h, t.f) != vec_scale(F, F.from_int(-2), t.f)) return false;
  if (L.bracket(t.e, t.f) != t.h) return false;
  return true;
}

// completion of a nilpotent e to a triple in characteristic zero:
// solve (ad e)^2 x = -2e, put h = [e, x], then solve for f
Sl2Triple<Rat> jm_extend_char0(const LieAlgebra<Rat>& L, const Vec<Rat>& e);

struct ExtendOptions {
  std::size_t max_candidates = 20000;
  std::size_t prefilter_samples = 4;
};

// characteristic p completion with a toral h: the candidates are the
// affine set { [e,u] : (ad e)^2 u = -2e }, searched exhaustively
Sl2Triple<Fp> extend_mod_p(const LieAlgebra<Fp>& L, const Vec<Fp>& e,
                           const ExtendOptions& opt = {});

// delta_x = 1 + ad x + (ad x)^2 / 2
template <class K>
Matrix<K> delta_op(const LieAlgebra<K>& L, const Vec<K>& x) {
  const K& F = L.field();
  auto A = L.ad(x);
  auto half = F.div(F.one(), F.from_int(2));
  return Matrix<K>::identity(F, L.dim()) + A + (A * A).scaled(half);
}

// exp(ad v) applied to x, as the truncated series; ad v must be
// nilpotent of depth m with 2(m-1) < p so the truncation is exact
template <class K>
Vec<K> truncated_exp_conjugate(const LieAlgebra<K>& L, const Vec<K>& v, const Vec<K>& x) {
  const K& F = L.field();
  auto A = L.ad(v);
  std::size_t m = 0;
  {
    Matrix<K> P = Matrix<K>::identity(F, L.dim());
    while (!P.is_zero()) {
      if (m > std::size_t(L.dim())) fail(Errc::not_nilpotent, "ad is not nilpotent");
      P = P * A;
      ++m;
    }
    // now m is the nilpotency depth: A^m = 0, A^{m-1} != 0
  }
  if constexpr (std::is_same_v<K, Fp>) {
    if (m >= 1 && 2 * (m - 1) >= F.p())
      fail(Errc::nilpotency_too_deep, "exp truncation is not exact at this depth");
  }
  Vec<K> term = x, out = x;
  typename K::elem fact = F.one();
  for (std::size_t k = 1; k < m; ++k) {
    term = A.mul_vec(term);
    fact = F.mul(fact, F.from_int(long(k)));
    out = vec_add(F, out, vec_scale(F, F.div(F.one(), fact), term));
  }
  return out;
}

// columns are the coordinates in dst of the level component of
// delta_x(fbar) - fbar, one column per x
template <class K>
Matrix<K> delta_map(const LieAlgebra<K>& L, const std::vector<int>& cochar, int level,
                    const std::vector<Vec<K>>& xs, const Vec<K>& fbar,
                    const Subspace<K>& dst) {
  const K& F = L.field();
  auto w = L.weights(cochar);
  Matrix<K> out(F, dst.dim(), xs.size());
  for (std::size_t c = 0; c < xs.size(); ++c) {
    auto v = vec_sub(F, delta_op(L, xs[c]).mul_vec(fbar), fbar);
    for (int i = 0; i < L.dim(); ++i)
      if (w[i] != level) v[i] = F.zero();
    auto coords = dst.coords_of(v);
    if (!coords) fail(Errc::no_solution, "delta image falls outside the target space");
    for (std::size_t i = 0; i < dst.dim(); ++i) out.at(i, c) = (*coords)[i];
  }
  return out;
}

}  // namespace chevlie
