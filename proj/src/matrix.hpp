#pragma once

#include <cstddef>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "error.hpp"
#include "fp.hpp"

namespace chevlie {

template <class K>
using Vec = std::vector<typename K::elem>;

// Dense matrix over a field K (Fp or Rat).  Row-major storage; the field
// object travels with the matrix so arithmetic needs no extra context.
template <class K>
class Matrix {
public:
  using elem = typename K::elem;

  Matrix() : rows_(0), cols_(0) {}
  Matrix(const K& F, std::size_t rows, std::size_t cols)
      : F_(F), rows_(rows), cols_(cols), a_(rows * cols, F.zero()) {}

  static Matrix identity(const K& F, std::size_t n) {
    Matrix m(F, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = F.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const K& field() const { return F_; }

  elem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const elem& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  elem* row_ptr(std::size_t i) { return a_.data() + i * cols_; }
  const elem* row_ptr(std::size_t i) const { return a_.data() + i * cols_; }

  Vec<K> row(std::size_t i) const {
    return Vec<K>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }
  void set_row(std::size_t i, const Vec<K>& v) {
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
  }
  Vec<K> col(std::size_t j) const {
    Vec<K> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const elem& x : a_)
      if (!F_.is_zero(x)) return false;
    return true;
  }

  Matrix operator+(const Matrix& o) const {
    Matrix m(F_, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = F_.add(a_[k], o.a_[k]);
    return m;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix m(F_, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = F_.sub(a_[k], o.a_[k]);
    return m;
  }
  Matrix scaled(const elem& c) const {
    Matrix m(F_, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = F_.mul(a_[k], c);
    return m;
  }

  Matrix operator*(const Matrix& o) const {
    Matrix out(F_, rows_, o.cols_);
    if constexpr (std::is_same_v<K, Fp>) {
      // accumulate in uint64; with p < 2^16 a full row fits without overflow,
      // otherwise reduce as we go
      const std::uint64_t p = F_.p();
      if (p < (1u << 16) && cols_ < (std::uint64_t(1) << 31)) {
        for (std::size_t i = 0; i < rows_; ++i) {
          const elem* ai = row_ptr(i);
          for (std::size_t j = 0; j < o.cols_; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < cols_; ++k)
              acc += std::uint64_t(ai[k]) * o.at(k, j);
            out.at(i, j) = elem(acc % p);
          }
        }
        return out;
      }
    }
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const elem& aik = at(i, k);
        if (F_.is_zero(aik)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          out.at(i, j) = F_.add(out.at(i, j), F_.mul(aik, o.at(k, j)));
      }
    return out;
  }

  Vec<K> mul_vec(const Vec<K>& v) const {
    Vec<K> out(rows_, F_.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
      elem acc = F_.zero();
      const elem* ai = row_ptr(i);
      for (std::size_t k = 0; k < cols_; ++k)
        if (!F_.is_zero(ai[k])) acc = F_.add(acc, F_.mul(ai[k], v[k]));
      out[i] = acc;
    }
    return out;
  }

  Matrix pow(std::uint64_t e) const {
    Matrix base = *this, out = identity(F_, rows_);
    while (e) {
      if (e & 1) out = out * base;
      base = base * base;
      e >>= 1;
    }
    return out;
  }

  Matrix transpose() const {
    Matrix m(F_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  // Reduced row echelon form; pivot column list is appended to *pivots if given.
  Matrix rref(std::vector<std::size_t>* pivots = nullptr) const {
    Matrix m = *this;
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t sel = rows_;
      for (std::size_t i = r; i < rows_; ++i)
        if (!F_.is_zero(m.at(i, c))) {
          sel = i;
          break;
        }
      if (sel == rows_) continue;
      if (sel != r)
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(r, j));
      elem pinv = F_.inv(m.at(r, c));
      for (std::size_t j = c; j < cols_; ++j) m.at(r, j) = F_.mul(m.at(r, j), pinv);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || F_.is_zero(m.at(i, c))) continue;
        elem f = m.at(i, c);
        for (std::size_t j = c; j < cols_; ++j)
          m.at(i, j) = F_.sub(m.at(i, j), F_.mul(f, m.at(r, j)));
      }
      piv.push_back(c);
      ++r;
    }
    if (pivots) *pivots = piv;
    return m;
  }

  std::size_t rank() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
  }

  // Basis of the right null space {x : Ax = 0}, one vector per row.
  Matrix kernel() const {
    std::vector<std::size_t> piv;
    Matrix R = rref(&piv);
    std::vector<bool> is_piv(cols_, false);
    for (std::size_t c : piv) is_piv[c] = true;
    Matrix out(F_, cols_ - piv.size(), cols_);
    std::size_t k = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (is_piv[c]) continue;
      out.at(k, c) = F_.one();
      for (std::size_t r = 0; r < piv.size(); ++r)
        out.at(k, piv[r]) = F_.neg(R.at(r, c));
      ++k;
    }
    return out;
  }

  // One solution of Ax = b, or nullopt if inconsistent.
  std::optional<Vec<K>> solve(const Vec<K>& b) const {
    Matrix aug(F_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_) = b[i];
    }
    std::vector<std::size_t> piv;
    Matrix R = aug.rref(&piv);
    if (!piv.empty() && piv.back() == cols_) return std::nullopt;
    Vec<K> x(cols_, F_.zero());
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = R.at(r, cols_);
    return x;
  }

  // Stack rows of two matrices with equal column count.
  static Matrix vstack(const Matrix& a, const Matrix& b) {
    Matrix m(a.F_, a.rows_ + b.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) m.at(a.rows_ + i, j) = b.at(i, j);
    return m;
  }

private:
  K F_{};
  std::size_t rows_, cols_;
  std::vector<elem> a_;

  template <class K2>
  friend class Subspace;
};

// Vector helpers.
template <class K>
Vec<K> vec_add(const K& F, const Vec<K>& a, const Vec<K>& b) {
  Vec<K> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.add(a[i], b[i]);
  return out;
}
template <class K>
Vec<K> vec_sub(const K& F, const Vec<K>& a, const Vec<K>& b) {
  Vec<K> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.sub(a[i], b[i]);
  return out;
}
template <class K>
Vec<K> vec_scale(const K& F, const typename K::elem& c, const Vec<K>& a) {
  Vec<K> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.mul(c, a[i]);
  return out;
}
template <class K>
bool vec_is_zero(const K& F, const Vec<K>& a) {
  for (const auto& x : a)
    if (!F.is_zero(x)) return false;
  return true;
}
template <class K>
Vec<K> vec_zero(const K& F, std::size_t n) {
  return Vec<K>(n, F.zero());
}
template <class K>
Matrix<K> row_vec(const K& F, const Vec<K>& v) {
  Matrix<K> m(F, 1, v.size());
  m.set_row(0, v);
  return m;
}
template <class K>
Matrix<K> kron(const Matrix<K>& A, const Matrix<K>& B) {
  const K& F = A.field();
  Matrix<K> out(F, A.rows() * B.rows(), A.cols() * B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t k = 0; k < A.cols(); ++k) {
      const auto& a = A.at(i, k);
      if (F.is_zero(a)) continue;
      for (std::size_t j = 0; j < B.rows(); ++j)
        for (std::size_t l = 0; l < B.cols(); ++l)
          out.at(i * B.rows() + j, k * B.cols() + l) = F.mul(a, B.at(j, l));
    }
  return out;
}

// Subspace of K^n in canonical form: basis rows are the RREF of any spanning
// set, so equal subspaces compare equal as matrices.
template <class K>
class Subspace {
public:
  using elem = typename K::elem;

  Subspace() = default;

  static Subspace from_rows(const Matrix<K>& rows) {
    Subspace s;
    std::vector<std::size_t> piv;
    Matrix<K> R = rows.rref(&piv);
    s.basis_ = Matrix<K>(rows.field(), piv.size(), rows.cols());
    for (std::size_t i = 0; i < piv.size(); ++i)
      for (std::size_t j = 0; j < rows.cols(); ++j) s.basis_.at(i, j) = R.at(i, j);
    s.pivots_ = piv;
    return s;
  }

  static Subspace zero(const K& F, std::size_t ambient) {
    return from_rows(Matrix<K>(F, 0, ambient));
  }
  static Subspace full(const K& F, std::size_t ambient) {
    return from_rows(Matrix<K>::identity(F, ambient));
  }

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient() const { return basis_.cols(); }
  const Matrix<K>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const K& field() const { return basis_.field(); }

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  // Coordinates of v in the canonical basis, or nullopt if v is outside.
  std::optional<Vec<K>> coords_of(const Vec<K>& v) const {
    const K& F = basis_.field();
    Vec<K> r = v;
    Vec<K> c(dim(), F.zero());
    for (std::size_t i = 0; i < dim(); ++i) {
      const elem x = r[pivots_[i]];
      if (F.is_zero(x)) continue;
      c[i] = x;
      for (std::size_t j = 0; j < ambient(); ++j)
        r[j] = F.sub(r[j], F.mul(x, basis_.at(i, j)));
    }
    if (!vec_is_zero(F, r)) return std::nullopt;
    return c;
  }

  bool contains(const Vec<K>& v) const { return coords_of(v).has_value(); }
  bool contains(const Subspace& o) const {
    for (std::size_t i = 0; i < o.dim(); ++i)
      if (!contains(o.basis_.row(i))) return false;
    return true;
  }

  static Subspace sum(const Subspace& a, const Subspace& b) {
    return from_rows(Matrix<K>::vstack(a.basis_, b.basis_));
  }

  static Subspace intersection(const Subspace& a, const Subspace& b) {
    // x^T A = y^T B  <=>  (x, y) in kernel of [A^T | -B^T]^T ... done via
    // stacking A over B and reading combinations that cancel.
    const K& F = a.field();
    std::size_t da = a.dim(), db = b.dim(), n = a.ambient();
    Matrix<K> M(F, n, da + db);
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t i = 0; i < n; ++i) M.at(i, j) = a.basis_.at(j, i);
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t i = 0; i < n; ++i) M.at(i, da + j) = F.neg(b.basis_.at(j, i));
    Matrix<K> ker = M.kernel();
    Matrix<K> rows(F, ker.rows(), n);
    for (std::size_t r = 0; r < ker.rows(); ++r)
      for (std::size_t i = 0; i < n; ++i) {
        elem acc = F.zero();
        for (std::size_t j = 0; j < da; ++j)
          acc = F.add(acc, F.mul(ker.at(r, j), a.basis_.at(j, i)));
        rows.at(r, i) = acc;
      }
    return from_rows(rows);
  }

  // Grow by one vector; returns false if v was already inside.
  bool grow(const Vec<K>& v) {
    if (contains(v)) return false;
    Matrix<K> m = Matrix<K>::vstack(basis_, Matrix<K>(basis_.field(), 1, ambient()));
    m.set_row(basis_.rows(), v);
    *this = from_rows(m);
    return true;
  }

private:
  Matrix<K> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace chevlie
