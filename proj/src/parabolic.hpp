#pragma once

#include <vector>

#include "chevalley.hpp"
#include "matrix.hpp"

namespace chevlie {

struct Layer {
  int level = 0;           // distance from the Levi, always >= 1
  std::vector<int> roots;  // root indices carrying the layer basis
};

// standard parabolic p = l + q attached to a subset J of simple roots,
// with q filtered by the level of roots outside the span of J; the
// opposite flag picks the nilradical on the negative side instead
template <class K>
struct ParabolicDatum {
  std::vector<int> J;  // 1-based simple root indices, sorted
  bool opposite = false;
  Subspace<K> levi;
  Subspace<K> nilrad;
  std::vector<Layer> layers;  // ascending level, empty levels omitted
};

template <class K>
ParabolicDatum<K> standard_parabolic(const LieAlgebra<K>& L, const std::vector<int>& J,
                                     bool opposite = false);

template <class K>
Subspace<K> parabolic_span(const ParabolicDatum<K>& pd) {
  return Subspace<K>::sum(pd.levi, pd.nilrad);
}

template <class K>
const Layer* find_layer(const ParabolicDatum<K>& pd, int level) {
  for (const auto& ly : pd.layers)
    if (ly.level == level) return &ly;
  return nullptr;
}

template <class K>
Subspace<K> layer_span(const LieAlgebra<K>& L, const ParabolicDatum<K>& pd, int level) {
  const K& F = L.field();
  Matrix<K> rows(F, 0, L.dim());
  if (const Layer* ly = find_layer(pd, level))
    for (int r : ly->roots) rows = Matrix<K>::vstack(rows, row_vec(F, L.basis_vec(L.e_index(r))));
  return Subspace<K>::from_rows(rows);
}

// matrices of ad(x) on the level layer, in its root-vector basis, one
// matrix per basis vector of sub; sub must be a subalgebra of the Levi
template <class K>
std::vector<Matrix<K>> layer_action(const LieAlgebra<K>& L, const ParabolicDatum<K>& pd,
                                    const Subspace<K>& sub, int level);

extern template struct ParabolicDatum<Fp>;
extern template struct ParabolicDatum<Rat>;
extern template ParabolicDatum<Fp> standard_parabolic(const LieAlgebra<Fp>&,
                                                      const std::vector<int>&, bool);
extern template ParabolicDatum<Rat> standard_parabolic(const LieAlgebra<Rat>&,
                                                       const std::vector<int>&, bool);
extern template std::vector<Matrix<Fp>> layer_action(const LieAlgebra<Fp>&,
                                                     const ParabolicDatum<Fp>&,
                                                     const Subspace<Fp>&, int);
extern template std::vector<Matrix<Rat>> layer_action(const LieAlgebra<Rat>&,
                                                      const ParabolicDatum<Rat>&,
                                                      const Subspace<Rat>&, int);

}  // namespace chevlie
