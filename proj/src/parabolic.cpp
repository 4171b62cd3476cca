#include "parabolic.hpp"

#include <algorithm>
#include <map>

namespace chevlie {

template <class K>
ParabolicDatum<K> standard_parabolic(const LieAlgebra<K>& L, const std::vector<int>& J,
                                     bool opposite) {
  const K& F = L.field();
  const RootSystem& R = L.rootsys();
  std::vector<int> js = J;
  std::sort(js.begin(), js.end());
  js.erase(std::unique(js.begin(), js.end()), js.end());
  for (int j : js)
    if (j < 1 || j > R.rank()) fail(Errc::invalid_argument, "simple root index out of range");

  ParabolicDatum<K> pd;
  pd.J = js;
  pd.opposite = opposite;

  Matrix<K> levi_rows(F, 0, L.dim());
  Matrix<K> nil_rows(F, 0, L.dim());
  std::map<int, std::vector<int>> by_level;
  for (int r = 0; r < R.num_roots(); ++r) {
    int lev = R.level(r, js);
    if (lev == 0) {
      levi_rows = Matrix<K>::vstack(levi_rows, row_vec(F, L.basis_vec(L.e_index(r))));
    } else if (!opposite && lev >= 1) {
      by_level[lev].push_back(r);
    } else if (opposite && lev <= -1) {
      by_level[-lev].push_back(r);
    }
  }
  for (int i = 0; i < R.rank(); ++i)
    levi_rows = Matrix<K>::vstack(levi_rows, row_vec(F, L.basis_vec(L.h_index(i))));
  for (auto& [lev, roots] : by_level) {
    for (int r : roots) nil_rows = Matrix<K>::vstack(nil_rows, row_vec(F, L.basis_vec(L.e_index(r))));
    pd.layers.push_back(Layer{lev, roots});
  }
  pd.levi = Subspace<K>::from_rows(levi_rows);
  pd.nilrad = Subspace<K>::from_rows(nil_rows);
  return pd;
}

template <class K>
std::vector<Matrix<K>> layer_action(const LieAlgebra<K>& L, const ParabolicDatum<K>& pd,
                                    const Subspace<K>& sub, int level) {
  const K& F = L.field();
  for (std::size_t i = 0; i < sub.dim(); ++i)
    if (!pd.levi.contains(sub.basis().row(i)))
      fail(Errc::invalid_argument, "acting subspace is not inside the Levi");
  for (std::size_t i = 0; i < sub.dim(); ++i)
    for (std::size_t j = 0; j < sub.dim(); ++j)
      if (!sub.contains(L.bracket(sub.basis().row(i), sub.basis().row(j))))
        fail(Errc::not_closed, "acting subspace is not a subalgebra");

  const Layer* ly = find_layer(pd, level);
  std::size_t n = ly ? ly->roots.size() : 0;
  std::vector<Matrix<K>> ops;
  for (std::size_t i = 0; i < sub.dim(); ++i) {
    Matrix<K> M(F, n, n);
    for (std::size_t c = 0; c < n; ++c) {
      auto v = L.bracket(sub.basis().row(i), L.basis_vec(L.e_index(ly->roots[c])));
      for (std::size_t r = 0; r < n; ++r) {
        auto idx = L.e_index(ly->roots[r]);
        M.at(r, c) = v[idx];
        v[idx] = F.zero();
      }
      if (!vec_is_zero(F, v))
        fail(Errc::internal, "layer bracket left the layer");
    }
    ops.push_back(std::move(M));
  }
  return ops;
}

template struct ParabolicDatum<Fp>;
template struct ParabolicDatum<Rat>;
template ParabolicDatum<Fp> standard_parabolic(const LieAlgebra<Fp>&, const std::vector<int>&,
                                               bool);
template ParabolicDatum<Rat> standard_parabolic(const LieAlgebra<Rat>&, const std::vector<int>&,
                                                bool);
template std::vector<Matrix<Fp>> layer_action(const LieAlgebra<Fp>&, const ParabolicDatum<Fp>&,
                                              const Subspace<Fp>&, int);
template std::vector<Matrix<Rat>> layer_action(const LieAlgebra<Rat>&, const ParabolicDatum<Rat>&,
                                               const Subspace<Rat>&, int);

}  // namespace chevlie
