#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "fp.hpp"
#include "matrix.hpp"
#include "rat.hpp"
#include "rootsys.hpp"

namespace chevlie {

// Integer structure constants of the Chevalley basis {e_alpha} u {h_i}.
// Signs come from the extraspecial pair construction: for each positive
// gamma the minimal decomposition gamma = delta + eps gets
// N_{delta,eps} = +(p+1), and every other constant follows from the
// Jacobi identity and the standard (anti)symmetries.
class ChevTable {
public:
  explicit ChevTable(const RootSystem& R);

  int npos() const { return npos_; }
  int rank() const { return rank_; }
  int dim() const { return 2 * npos_ + rank_; }

  // N_{alpha_a, alpha_b}; zero when the sum is not a root
  int n(int a, int b) const { return nmat_[std::size_t(a) * 2 * npos_ + b]; }
  int pairing(int a, int j) const { return pair_[std::size_t(a) * rank_ + j]; }
  int coroot(int a, int i) const { return cor_[std::size_t(a) * rank_ + i]; }

  // bracket of two basis elements over the integers; basis order is
  // e_0 .. e_{2N-1}, h_1 .. h_rank; appends (index, coefficient) pairs
  void bracket(int i, int j, std::vector<std::pair<int, int>>& out) const;

private:
  int npos_ = 0, rank_ = 0;
  std::vector<int> nmat_;
  std::vector<int> pair_;
  std::vector<int> cor_;
  std::vector<int> sumidx_;  // root index of root_a + root_b, or -1
};

// Chevalley Lie algebra over a field, with the basis
// e_{alpha} for alpha positive, e_{alpha} for alpha negative, h_1..h_n.
template <class K>
class LieAlgebra {
public:
  LieAlgebra(RootSystem R, K F) : R_(std::move(R)), T_(R_), F_(std::move(F)) {
    if constexpr (std::is_same_v<K, Fp>) {
      if (F_.p() < 3) fail(Errc::invalid_argument, "characteristic must be odd");
    }
  }

  const RootSystem& rootsys() const { return R_; }
  const ChevTable& table() const { return T_; }
  const K& field() const { return F_; }
  int dim() const { return T_.dim(); }
  int npos() const { return T_.npos(); }
  int e_index(int root) const { return root; }
  int h_index(int i) const { return 2 * T_.npos() + i; }  // 0-based i

  Vec<K> zero() const { return vec_zero(F_, dim()); }
  Vec<K> basis_vec(int i) const {
    Vec<K> v = zero();
    v[i] = F_.one();
    return v;
  }

  Vec<K> bracket(const Vec<K>& x, const Vec<K>& y) const {
    Vec<K> out = zero();
    std::vector<std::pair<int, int>> terms;
    for (int i = 0; i < dim(); ++i) {
      if (F_.is_zero(x[i])) continue;
      for (int j = 0; j < dim(); ++j) {
        if (F_.is_zero(y[j])) continue;
        terms.clear();
        T_.bracket(i, j, terms);
        for (auto& [k, c] : terms)
          out[k] = F_.add(out[k], F_.mul(F_.mul(x[i], y[j]), F_.from_int(c)));
      }
    }
    return out;
  }

  // matrix of ad(x): column j holds [x, basis_j]
  Matrix<K> ad(const Vec<K>& x) const {
    Matrix<K> M(F_, dim(), dim());
    std::vector<std::pair<int, int>> terms;
    for (int i = 0; i < dim(); ++i) {
      if (F_.is_zero(x[i])) continue;
      for (int j = 0; j < dim(); ++j) {
        terms.clear();
        T_.bracket(i, j, terms);
        for (auto& [k, c] : terms)
          M.at(k, j) = F_.add(M.at(k, j), F_.mul(x[i], F_.from_int(c)));
      }
    }
    return M;
  }

  // restricted p-th power x^{[p]}, recovered from ad(x)^p
  Vec<K> p_power(const Vec<K>& x) const;

  // ad-eigenvalue of each basis element under h_a = sum a_i h_i, as integers
  std::vector<int> weights(const std::vector<int>& a) const {
    std::vector<int> w(dim(), 0);
    for (int r = 0; r < 2 * T_.npos(); ++r)
      for (int j = 0; j < T_.rank(); ++j) w[r] += a[j] * T_.pairing(r, j);
    return w;
  }

  Subspace<K> weight_component(const std::vector<int>& a, int m) const {
    auto w = weights(a);
    Matrix<K> rows(F_, 0, dim());
    for (int i = 0; i < dim(); ++i)
      if (w[i] == m) rows = Matrix<K>::vstack(rows, row_of(basis_vec(i)));
    return Subspace<K>::from_rows(rows);
  }

  Subspace<K> graded_piece(const Subspace<K>& S, const std::vector<int>& a, int m) const {
    return Subspace<K>::intersection(S, weight_component(a, m));
  }

  // a subspace is grading stable iff it is the sum of its graded pieces
  void require_graded(const Subspace<K>& S, const std::vector<int>& a) const {
    auto w = weights(a);
    int lo = 0, hi = 0;
    for (int x : w) lo = std::min(lo, x), hi = std::max(hi, x);
    std::size_t total = 0;
    for (int m = lo; m <= hi; ++m) total += graded_piece(S, a, m).dim();
    if (total != S.dim()) fail(Errc::not_grading_stable, "subspace is not grading stable");
  }

  Subspace<K> centralizer(const Vec<K>& x) const {
    return Subspace<K>::from_rows(ad(x).kernel());
  }

  int orbit_dim(const Vec<K>& x) const { return dim() - int(centralizer(x).dim()); }

  Subspace<K> derived_of(const Subspace<K>& S) const {
    Matrix<K> rows(F_, 0, dim());
    for (std::size_t i = 0; i < S.dim(); ++i)
      for (std::size_t j = i + 1; j < S.dim(); ++j)
        rows = Matrix<K>::vstack(rows, row_of(bracket(S.basis().row(i), S.basis().row(j))));
    return Subspace<K>::from_rows(rows);
  }

  // x lies in the derived algebra of its own centralizer
  bool reachable(const Vec<K>& x) const { return derived_of(centralizer(x)).contains(x); }

  Subspace<K> subalgebra_closure(const std::vector<Vec<K>>& gens) const {
    Matrix<K> rows(F_, 0, dim());
    for (const auto& g : gens) rows = Matrix<K>::vstack(rows, row_of(g));
    auto S = Subspace<K>::from_rows(rows);
    for (;;) {
      auto D = S;
      for (std::size_t i = 0; i < S.dim(); ++i)
        for (std::size_t j = i + 1; j < S.dim(); ++j)
          D.grow(bracket(S.basis().row(i), S.basis().row(j)));
      if (D.dim() == S.dim()) return S;
      S = D;
    }
  }

  // closure of a starting subspace under bracketing with fixed elements
  Subspace<K> submodule_spin(const std::vector<Vec<K>>& acting, const Subspace<K>& start) const {
    auto S = start;
    std::vector<Vec<K>> frontier;
    for (std::size_t i = 0; i < S.dim(); ++i) frontier.push_back(S.basis().row(i));
    while (!frontier.empty()) {
      std::vector<Vec<K>> next;
      for (const auto& v : frontier)
        for (const auto& g : acting) {
          auto w = bracket(g, v);
          if (S.grow(w)) next.push_back(w);
        }
      frontier = std::move(next);
    }
    return S;
  }

  Vec<K> parse(const std::string& s) const;
  std::string print(const Vec<K>& x) const;

private:
  Matrix<K> row_of(const Vec<K>& v) const {
    Matrix<K> m(F_, 1, dim());
    m.set_row(0, v);
    return m;
  }

  RootSystem R_;
  ChevTable T_;
  K F_;
};

extern template class LieAlgebra<Fp>;
extern template class LieAlgebra<Rat>;

}  // namespace chevlie
