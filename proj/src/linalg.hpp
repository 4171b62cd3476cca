#pragma once

#include <string>
#include <vector>

#include "error.hpp"
#include "fp.hpp"
#include "matrix.hpp"
#include "rat.hpp"

namespace chevlie {

// Jordan type of a nilpotent matrix, as a weakly decreasing partition.
// The number of blocks of size >= k is rank(M^{k-1}) - rank(M^k).
template <class K>
std::vector<int> jordan_partition(const Matrix<K>& M) {
  std::size_t n = M.rows();
  std::vector<std::size_t> ranks{n};
  Matrix<K> P = M;
  while (true) {
    std::size_t r = P.rank();
    ranks.push_back(r);
    if (r == 0) break;
    if (ranks.size() > n + 1) fail(Errc::not_nilpotent, "matrix is not nilpotent");
    P = P * M;
  }
  std::vector<int> parts;
  int maxlen = int(ranks.size()) - 1;
  for (int size = maxlen; size >= 1; --size) {
    long ge_k = long(ranks[size - 1]) - long(ranks[size]);
    long ge_k1 = size < maxlen ? long(ranks[size]) - long(ranks[size + 1]) : 0;
    for (long c = 0; c < ge_k - ge_k1; ++c) parts.push_back(size);
  }
  return parts;
}

// "11+10^2+9^3+7+6^6+5^3+4^2+3+1^6": decreasing sizes, ^count for repeats
std::string partition_string(const std::vector<int>& parts);

// monic characteristic polynomial, coefficients from constant term up
std::vector<Fp::elem> charpoly(const Matrix<Fp>& M);

template <class K>
Vec<K> flatten(const Matrix<K>& M) {
  Vec<K> v;
  v.reserve(M.rows() * M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) v.push_back(M.at(i, j));
  return v;
}

// closure of a subspace under a list of operators
template <class K>
Subspace<K> op_spin(const std::vector<Matrix<K>>& ops, const Subspace<K>& start) {
  auto S = start;
  std::vector<Vec<K>> frontier;
  for (std::size_t i = 0; i < S.dim(); ++i) frontier.push_back(S.basis().row(i));
  while (!frontier.empty()) {
    std::vector<Vec<K>> next;
    for (const auto& v : frontier)
      for (const auto& M : ops) {
        auto w = M.mul_vec(v);
        if (S.grow(w)) next.push_back(w);
      }
    frontier = std::move(next);
  }
  return S;
}

// matrix of an operator on an invariant subspace, in the subspace basis
template <class K>
Matrix<K> restrict_to_invariant(const Matrix<K>& op, const Subspace<K>& S) {
  const K& F = op.field();
  Matrix<K> out(F, S.dim(), S.dim());
  for (std::size_t j = 0; j < S.dim(); ++j) {
    auto img = op.mul_vec(S.basis().row(j));
    auto c = S.coords_of(img);
    if (!c) fail(Errc::invalid_argument, "subspace is not invariant under the operator");
    for (std::size_t i = 0; i < S.dim(); ++i) out.at(i, j) = (*c)[i];
  }
  return out;
}

// unital matrix algebra generated by ops, as an echelonized word basis
template <class K>
struct Envelope {
  std::vector<Matrix<K>> words;
  Subspace<K> span;
};

template <class K>
Envelope<K> envelope(const std::vector<Matrix<K>>& gens, std::size_t limit) {
  if (gens.empty()) fail(Errc::invalid_argument, "envelope needs at least one operator");
  const K& F = gens[0].field();
  std::size_t n = gens[0].rows();
  Envelope<K> E;
  E.span = Subspace<K>::zero(F, n * n);
  auto add = [&](const Matrix<K>& M) {
    if (!E.span.grow(flatten(M))) return false;
    E.words.push_back(M);
    if (E.words.size() > limit) fail(Errc::envelope_too_large, "envelope exceeds the size limit");
    return true;
  };
  add(Matrix<K>::identity(F, n));
  std::vector<Matrix<K>> frontier{Matrix<K>::identity(F, n)};
  while (!frontier.empty()) {
    std::vector<Matrix<K>> next;
    for (const auto& w : frontier)
      for (const auto& g : gens) {
        Matrix<K> prod = w * g;
        if (add(prod)) next.push_back(prod);
      }
    frontier = std::move(next);
  }
  return E;
}

// Jacobson radical of a matrix algebra over F_p, through the iterated
// characteristic-coefficient forms of degree p^k
std::vector<Matrix<Fp>> envelope_radical(const Envelope<Fp>& A);

// socle of the module on which ops act, as annihilator of the radical
// of the generated algebra
Subspace<Fp> socle(const std::vector<Matrix<Fp>>& ops, std::size_t envelope_limit);
bool is_completely_reducible(const std::vector<Matrix<Fp>>& ops, std::size_t envelope_limit);

// socle for small modules: sum of the inclusion-minimal spins of the
// eigenlines of a designated split semisimple operator
Subspace<Fp> socle_brute(const std::vector<Matrix<Fp>>& ops, std::size_t diag_index);

// maps T -> V commuting with paired operator lists; the lists must
// generate the acting algebras
template <class K>
std::vector<Matrix<K>> intertwiners(const std::vector<Matrix<K>>& ops_T,
                                    const std::vector<Matrix<K>>& ops_V) {
  if (ops_T.size() != ops_V.size() || ops_T.empty())
    fail(Errc::invalid_argument, "intertwiners: operator lists must pair up");
  const K& F = ops_V[0].field();
  std::size_t dT = ops_T[0].rows(), dV = ops_V[0].rows();
  Matrix<K> sys(F, ops_T.size() * dV * dT, dV * dT);
  std::size_t row = 0;
  for (std::size_t g = 0; g < ops_T.size(); ++g) {
    const auto& TV = ops_V[g];
    const auto& TT = ops_T[g];
    for (std::size_t i = 0; i < dV; ++i)
      for (std::size_t j = 0; j < dT; ++j, ++row) {
        for (std::size_t k = 0; k < dV; ++k)
          sys.at(row, k * dT + j) = F.add(sys.at(row, k * dT + j), TV.at(i, k));
        for (std::size_t l = 0; l < dT; ++l)
          sys.at(row, i * dT + l) = F.sub(sys.at(row, i * dT + l), TT.at(l, j));
      }
  }
  Matrix<K> ker = sys.kernel();
  std::vector<Matrix<K>> out;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Matrix<K> phi(F, dV, dT);
    for (std::size_t i = 0; i < dV; ++i)
      for (std::size_t j = 0; j < dT; ++j) phi.at(i, j) = ker.at(r, i * dT + j);
    out.push_back(phi);
  }
  return out;
}

// sum of the images of all maps from the listed simple modules; correct
// when every simple submodule is isomorphic to a listed one
Subspace<Fp> socle_from_simples(const std::vector<Matrix<Fp>>& ops_V,
                                const std::vector<std::vector<Matrix<Fp>>>& simples);

}  // namespace chevlie
