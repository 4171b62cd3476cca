#include "linalg.hpp"

#include <algorithm>
#include <sstream>

namespace chevlie {

std::string partition_string(const std::vector<int>& parts) {
  auto p = parts;
  std::sort(p.rbegin(), p.rend());
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < p.size()) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (!first) os << '+';
    first = false;
    os << p[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

// Hessenberg reduction by similarity, then the leading-minor recurrence
std::vector<Fp::elem> charpoly(const Matrix<Fp>& M) {
  const Fp& F = M.field();
  std::size_t n = M.rows();
  Matrix<Fp> H = M;
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && F.is_zero(H.at(piv, j))) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t k = 0; k < n; ++k) std::swap(H.at(piv, k), H.at(j + 1, k));
      for (std::size_t k = 0; k < n; ++k) std::swap(H.at(k, piv), H.at(k, j + 1));
    }
    Fp::elem inv = F.inv(H.at(j + 1, j));
    for (std::size_t i = j + 2; i < n; ++i) {
      if (F.is_zero(H.at(i, j))) continue;
      Fp::elem f = F.mul(H.at(i, j), inv);
      for (std::size_t k = 0; k < n; ++k) H.at(i, k) = F.sub(H.at(i, k), F.mul(f, H.at(j + 1, k)));
      for (std::size_t k = 0; k < n; ++k) H.at(k, j + 1) = F.add(H.at(k, j + 1), F.mul(f, H.at(k, i)));
    }
  }
  // p_k(t) = (t - H[k-1][k-1]) p_{k-1}
  //          - sum_j H[j-1][k-1] (prod_{i=j}^{k-1} H[i][i-1]) p_{j-1}
  std::vector<std::vector<Fp::elem>> p(n + 1);
  p[0] = {F.one()};
  for (std::size_t k = 1; k <= n; ++k) {
    auto& cur = p[k];
    cur.assign(k + 1, F.zero());
    const auto& prev = p[k - 1];
    for (std::size_t t = 0; t < prev.size(); ++t) {
      cur[t + 1] = F.add(cur[t + 1], prev[t]);
      cur[t] = F.sub(cur[t], F.mul(H.at(k - 1, k - 1), prev[t]));
    }
    Fp::elem sub = F.one();
    for (std::size_t j = k - 1; j >= 1; --j) {
      sub = F.mul(sub, H.at(j, j - 1));
      if (F.is_zero(sub)) break;
      Fp::elem c = F.mul(H.at(j - 1, k - 1), sub);
      if (F.is_zero(c)) continue;
      const auto& pj = p[j - 1];
      for (std::size_t t = 0; t < pj.size(); ++t) cur[t] = F.sub(cur[t], F.mul(c, pj[t]));
    }
  }
  return p[n];
}

namespace {

// coefficient form x -> coeff of t^{n - r} in det(tI - x), up to sign
Fp::elem coeff_form(const Matrix<Fp>& x, std::size_t r) {
  auto c = charpoly(x);
  return c[x.rows() - r];
}

}  // namespace

std::vector<Matrix<Fp>> envelope_radical(const Envelope<Fp>& A) {
  if (A.words.empty()) fail(Errc::invalid_argument, "radical of an empty algebra");
  const Fp& F = A.words[0].field();
  std::size_t n = A.words[0].rows();
  std::vector<Matrix<Fp>> cur = A.words;
  for (std::size_t pk = 1; pk <= n; pk *= F.p()) {
    if (cur.empty()) break;
    std::size_t m = cur.size();
    Matrix<Fp> C(F, m, m);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < m; ++i) C.at(j, i) = coeff_form(cur[i] * cur[j], pk);
    Matrix<Fp> ker = C.kernel();
    std::vector<Matrix<Fp>> next;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
      Matrix<Fp> sum(F, n, n);
      for (std::size_t i = 0; i < m; ++i)
        if (!F.is_zero(ker.at(r, i))) sum = sum + cur[i].scaled(ker.at(r, i));
      next.push_back(sum);
    }
    cur = std::move(next);
  }
  // the result must be nilpotent as an ideal; J^n V = 0 forces J^n = 0
  if (!cur.empty()) {
    std::vector<Matrix<Fp>> power = cur;
    for (std::size_t step = 0; step + 1 < n && !power.empty(); ++step) {
      Subspace<Fp> span = Subspace<Fp>::zero(F, n * n);
      std::vector<Matrix<Fp>> next;
      for (const auto& a : power)
        for (const auto& b : cur) {
          Matrix<Fp> prod = a * b;
          if (span.grow(flatten(prod))) next.push_back(prod);
        }
      power = std::move(next);
    }
    if (!power.empty()) {
      bool allzero = true;
      for (const auto& mpow : power) allzero = allzero && mpow.is_zero();
      if (!allzero) fail(Errc::internal, "computed radical is not nilpotent");
    }
  }
  return cur;
}

Subspace<Fp> socle(const std::vector<Matrix<Fp>>& ops, std::size_t envelope_limit) {
  if (ops.empty()) fail(Errc::invalid_argument, "socle needs at least one operator");
  const Fp& F = ops[0].field();
  std::size_t n = ops[0].rows();
  auto rad = envelope_radical(envelope(ops, envelope_limit));
  if (rad.empty()) return Subspace<Fp>::full(F, n);
  Matrix<Fp> stack(F, 0, n);
  for (const auto& r : rad) stack = Matrix<Fp>::vstack(stack, r);
  return Subspace<Fp>::from_rows(stack.kernel());
}

bool is_completely_reducible(const std::vector<Matrix<Fp>>& ops, std::size_t envelope_limit) {
  return socle(ops, envelope_limit).dim() == ops[0].rows();
}

namespace {

void enumerate_lines(const Fp& F, const Matrix<Fp>& basis, std::vector<Vec<Fp>>& out) {
  std::size_t d = basis.rows(), n = basis.cols();
  if (d == 0) return;
  if (d > 4) fail(Errc::invalid_argument, "eigenspace too large for brute socle");
  // representatives with first nonzero coordinate equal to one
  std::vector<Fp::elem> coeff(d, 0);
  for (std::size_t lead = 0; lead < d; ++lead) {
    std::fill(coeff.begin(), coeff.end(), F.zero());
    coeff[lead] = F.one();
    std::size_t tail = d - lead - 1;
    std::size_t total = 1;
    for (std::size_t t = 0; t < tail; ++t) total *= F.p();
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t t = 0; t < tail; ++t) {
        coeff[lead + 1 + t] = Fp::elem(c % F.p());
        c /= F.p();
      }
      Vec<Fp> v = vec_zero(F, n);
      for (std::size_t i = lead; i < d; ++i)
        if (!F.is_zero(coeff[i])) v = vec_add(F, v, vec_scale(F, coeff[i], basis.row(i)));
      out.push_back(v);
    }
  }
}

}  // namespace

Subspace<Fp> socle_brute(const std::vector<Matrix<Fp>>& ops, std::size_t diag_index) {
  const Fp& F = ops[0].field();
  std::size_t n = ops[0].rows();
  const Matrix<Fp>& h = ops[diag_index];
  if (h.pow(F.p()) != h)
    fail(Errc::invalid_argument, "designated operator is not split semisimple");
  std::vector<Subspace<Fp>> spins;
  for (Fp::elem lam = 0; lam < F.p(); ++lam) {
    Matrix<Fp> shifted = h - Matrix<Fp>::identity(F, n).scaled(lam);
    Matrix<Fp> eig = shifted.kernel();
    std::vector<Vec<Fp>> lines;
    enumerate_lines(F, eig, lines);
    for (const auto& v : lines) {
      Matrix<Fp> seed(F, 1, n);
      seed.set_row(0, v);
      spins.push_back(op_spin(ops, Subspace<Fp>::from_rows(seed)));
    }
  }
  Subspace<Fp> out = Subspace<Fp>::zero(F, n);
  for (std::size_t i = 0; i < spins.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < spins.size() && minimal; ++j)
      if (spins[j].dim() < spins[i].dim() && spins[i].contains(spins[j])) minimal = false;
    if (minimal) out = Subspace<Fp>::sum(out, spins[i]);
  }
  return out;
}

Subspace<Fp> socle_from_simples(const std::vector<Matrix<Fp>>& ops_V,
                                const std::vector<std::vector<Matrix<Fp>>>& simples) {
  if (ops_V.empty()) fail(Errc::invalid_argument, "socle needs at least one operator");
  const Fp& F = ops_V[0].field();
  std::size_t n = ops_V[0].rows();
  Subspace<Fp> out = Subspace<Fp>::zero(F, n);
  for (const auto& T : simples) {
    for (const auto& phi : intertwiners(T, ops_V)) {
      for (std::size_t j = 0; j < phi.cols(); ++j) out.grow(phi.col(j));
    }
  }
  return out;
}

}  // namespace chevlie
