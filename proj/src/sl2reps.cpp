#include "sl2reps.hpp"

#include "cohomology.hpp"

namespace chevlie {

namespace {

Sl2Module checked(Sl2Module M) {
  if (!sl2_relations_hold(M)) fail(Errc::internal, "constructed module breaks the sl2 relations");
  return M;
}

}  // namespace

bool sl2_relations_hold(const Sl2Module& M) {
  const Fp& F = M.F;
  auto two = F.from_int(2);
  if (!(M.h * M.e - M.e * M.h == M.e.scaled(two))) return false;
  if (!(M.h * M.f - M.f * M.h == M.f.scaled(F.neg(two)))) return false;
  if (!(M.e * M.f - M.f * M.e == M.h)) return false;
  return true;
}

bool is_restricted(const Sl2Module& M) {
  auto p = M.F.p();
  return M.e.pow(p).is_zero() && M.f.pow(p).is_zero() && M.h.pow(p) == M.h;
}

Sl2Module simple_L(std::uint32_t p, int m) {
  Fp F(p);
  if (m < 0 || std::uint32_t(m) > p - 1) fail(Errc::invalid_argument, "highest weight must lie in 0..p-1");
  std::size_t n = std::size_t(m) + 1;
  Matrix<Fp> e(F, n, n), h(F, n, n), f(F, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    h.at(j, j) = F.from_int(m - 2 * long(j));
    if (j + 1 < n) f.at(j + 1, j) = F.one();
    if (j > 0) e.at(j - 1, j) = F.from_int(long(j) * (m + 1 - long(j)));
  }
  return checked({F, e, h, f});
}

Sl2Module dual(const Sl2Module& M) {
  auto neg_t = [&](const Matrix<Fp>& A) { return A.transpose().scaled(M.F.from_int(-1)); };
  return checked({M.F, neg_t(M.e), neg_t(M.h), neg_t(M.f)});
}

Sl2Module tensor(const Sl2Module& A, const Sl2Module& B) {
  if (A.F.p() != B.F.p()) fail(Errc::invalid_argument, "modules live over different primes");
  const Fp& F = A.F;
  auto IA = Matrix<Fp>::identity(F, A.dim());
  auto IB = Matrix<Fp>::identity(F, B.dim());
  auto mix = [&](const Matrix<Fp>& X, const Matrix<Fp>& Y) {
    return kron(X, IB) + kron(IA, Y);
  };
  return checked({F, mix(A.e, B.e), mix(A.h, B.h), mix(A.f, B.f)});
}

Sl2Module direct_sum(const Sl2Module& A, const Sl2Module& B) {
  if (A.F.p() != B.F.p()) fail(Errc::invalid_argument, "modules live over different primes");
  const Fp& F = A.F;
  auto blocks = [&](const Matrix<Fp>& X, const Matrix<Fp>& Y) {
    Matrix<Fp> M(F, X.rows() + Y.rows(), X.rows() + Y.rows());
    for (std::size_t i = 0; i < X.rows(); ++i)
      for (std::size_t j = 0; j < X.rows(); ++j) M.at(i, j) = X.at(i, j);
    for (std::size_t i = 0; i < Y.rows(); ++i)
      for (std::size_t j = 0; j < Y.rows(); ++j) M.at(X.rows() + i, X.rows() + j) = Y.at(i, j);
    return M;
  };
  return checked({F, blocks(A.e, B.e), blocks(A.h, B.h), blocks(A.f, B.f)});
}

int ext1(std::uint32_t p, int a, int b) {
  auto hom = tensor(dual(simple_L(p, a)), simple_L(p, b));
  auto cs = h1(sl2_structure(hom.F), action_ops(hom));
  return int(cs.h1_dim);
}

Sl2Module uniserial_W(std::uint32_t p, int i) {
  Fp F(p);
  if (i < 0 || std::uint32_t(i) > p - 2) fail(Errc::invalid_argument, "parameter must lie in 0..p-2");
  // basis u_0..u_{p+i}: e steps up the chain, u_s has weight -i+2s,
  // f u_s = s(i+1-s) u_{s-1}
  std::size_t n = p + std::size_t(i) + 1;
  Matrix<Fp> e(F, n, n), h(F, n, n), f(F, n, n);
  for (std::size_t s = 0; s < n; ++s) {
    h.at(s, s) = F.from_int(-i + 2 * long(s));
    if (s + 1 < n) e.at(s + 1, s) = F.one();
    if (s > 0) f.at(s - 1, s) = F.from_int(long(s) * (i + 1 - long(s)));
  }
  return checked({F, e, h, f});
}

Sl2Module indecomposable_kL(std::uint32_t p) {
  Fp F(p);
  // basis e_1..e_p: e(e_j) = e_{j-1}, f(e_j) = -j(j+1) e_{j+1},
  // h = [e,f] = diag(-2j)
  std::size_t n = p;
  Matrix<Fp> e(F, n, n), h(F, n, n), f(F, n, n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    long j = long(idx) + 1;
    h.at(idx, idx) = F.from_int(-2 * j);
    if (idx > 0) e.at(idx - 1, idx) = F.one();
    if (idx + 1 < n) f.at(idx + 1, idx) = F.from_int(-j * (j + 1));
  }
  return checked({F, e, h, f});
}

bool a_family_bracket_check(std::uint32_t p, long lambda) {
  Fp F(p);
  std::size_t n = p;
  Matrix<Fp> e(F, n, n), f(F, n, n), f0(F, n, n), h(F, n, n);
  for (std::size_t idx = 0; idx + 1 < n; ++idx) {
    long i = long(idx) + 1;
    e.at(idx, idx + 1) = F.one();
    f.at(idx + 1, idx) = F.from_int(-i * i);
    f0.at(idx + 1, idx) = F.from_int(i);
  }
  for (std::size_t idx = 0; idx < n; ++idx) h.at(idx, idx) = F.from_int(long(p) - 1 - 2 * long(idx));
  auto lam = F.from_int(lambda);
  auto fl = f + f0.scaled(lam);
  auto lhs = e * fl - fl * e;
  auto rhs = h + Matrix<Fp>::identity(F, n).scaled(lam);
  return lhs == rhs;
}

}  // namespace chevlie
