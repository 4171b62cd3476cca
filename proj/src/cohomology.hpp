#pragma once

#include <optional>
#include <vector>

#include "chevalley.hpp"
#include "matrix.hpp"
#include "parabolic.hpp"

namespace chevlie {

// bracket table of a Lie algebra on a chosen basis x_0..x_{d-1}:
// table[i][j] holds the coordinates of [x_i, x_j]
template <class K>
struct LieStructure {
  std::vector<std::vector<Vec<K>>> table;
  std::size_t dim() const { return table.size(); }
};

// basis order (e, h, f)
LieStructure<Fp> sl2_structure(const Fp& F);

// structure constants of a bracket-closed subspace in its own basis
template <class K>
LieStructure<K> subalgebra_structure(const LieAlgebra<K>& L, const Subspace<K>& S) {
  LieStructure<K> g;
  std::size_t d = S.dim();
  g.table.assign(d, std::vector<Vec<K>>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto c = S.coords_of(L.bracket(S.basis().row(i), S.basis().row(j)));
      if (!c) fail(Errc::not_closed, "subspace is not closed under the bracket");
      g.table[i][j] = *c;
    }
  return g;
}

// ops[i] is the action matrix of x_i; throws unless the commutators
// reproduce the bracket table
template <class K>
void require_action(const LieStructure<K>& g, const std::vector<Matrix<K>>& ops);

// cocycles phi: g -> V as n x d matrices, column j = phi(x_j)
template <class K>
struct CocycleSpace {
  std::size_t d = 0, n = 0;
  std::vector<Matrix<K>> z1_basis;
  std::size_t b1_dim = 0, h1_dim = 0;
};

template <class K>
CocycleSpace<K> h1(const LieStructure<K>& g, const std::vector<Matrix<K>>& ops);

// the coboundary of v: column j is x_j . v
template <class K>
Matrix<K> coboundary(const std::vector<Matrix<K>>& ops, const Vec<K>& v) {
  Matrix<K> out(ops.empty() ? K{} : ops[0].field(), v.size(), ops.size());
  for (std::size_t j = 0; j < ops.size(); ++j) {
    auto c = ops[j].mul_vec(v);
    for (std::size_t i = 0; i < v.size(); ++i) out.at(i, j) = c[i];
  }
  return out;
}

template <class K>
bool is_cocycle(const LieStructure<K>& g, const std::vector<Matrix<K>>& ops,
                const Matrix<K>& phi);

// the cocycle on L(p-2) with gamma(h) = 0, gamma(e) = a * (lowest weight
// vector), gamma(f) = b * (highest weight vector); columns (e, h, f)
Matrix<Fp> gamma_cocycle(std::uint32_t p, long a, long b);

// h acting on V made into the Lie algebra h x V with V abelian
template <class K>
struct Semidirect {
  K F;
  LieStructure<K> g;
  std::vector<Matrix<K>> ops;
  std::size_t d = 0, n = 0;
  std::size_t dim() const { return d + n; }
  Vec<K> bracket(const Vec<K>& u, const Vec<K>& w) const;
};

template <class K>
Semidirect<K> semidirect(const K& F, const LieStructure<K>& g, const std::vector<Matrix<K>>& ops);

// the graph { x + phi(x) : x in g } of a cocycle, as a complement to V
template <class K>
Subspace<K> complement_from_cocycle(const Semidirect<K>& sd, const Matrix<K>& phi);

// conjugation by the unipotent element 1 + v, v in V: u -> u + [v, u]
template <class K>
Subspace<K> conjugate_by_module_elt(const Semidirect<K>& sd, const Vec<K>& v,
                                    const Subspace<K>& S);

// level-by-level conjugation of hprime towards the Levi copy hbar; stops
// at the first layer whose cocycle is not a coboundary
template <class K>
struct DescentResult {
  bool landed = false;
  int obstruction_level = -1;
  Matrix<K> obstruction_cocycle;  // layer-dim x d when obstructed
  Subspace<K> subspace;           // where hprime ended up
  std::vector<Vec<K>> conjugators;
};

template <class K>
DescentResult<K> filtered_descent(const LieAlgebra<K>& L, const ParabolicDatum<K>& pd,
                                  const Subspace<K>& hbar, const Subspace<K>& hprime);

extern template void require_action(const LieStructure<Fp>&, const std::vector<Matrix<Fp>>&);
extern template void require_action(const LieStructure<Rat>&, const std::vector<Matrix<Rat>>&);
extern template CocycleSpace<Fp> h1(const LieStructure<Fp>&, const std::vector<Matrix<Fp>>&);
extern template CocycleSpace<Rat> h1(const LieStructure<Rat>&, const std::vector<Matrix<Rat>>&);
extern template bool is_cocycle(const LieStructure<Fp>&, const std::vector<Matrix<Fp>>&,
                                const Matrix<Fp>&);
extern template Semidirect<Fp> semidirect(const Fp&, const LieStructure<Fp>&,
                                          const std::vector<Matrix<Fp>>&);
extern template Subspace<Fp> complement_from_cocycle(const Semidirect<Fp>&, const Matrix<Fp>&);
extern template Subspace<Fp> conjugate_by_module_elt(const Semidirect<Fp>&, const Vec<Fp>&,
                                                     const Subspace<Fp>&);
extern template DescentResult<Fp> filtered_descent(const LieAlgebra<Fp>&,
                                                   const ParabolicDatum<Fp>&,
                                                   const Subspace<Fp>&, const Subspace<Fp>&);

}  // namespace chevlie
