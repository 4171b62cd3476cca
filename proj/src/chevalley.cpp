#include "chevalley.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace chevlie {

namespace {
constexpr int kUnset = std::numeric_limits<int>::min();

int exact_div(long num, long den, const char* what) {
  if (den == 0 || num % den != 0) fail(Errc::internal, std::string("sign table: ") + what);
  return int(num / den);
}
}  // namespace

ChevTable::ChevTable(const RootSystem& R) {
  npos_ = R.num_pos();
  rank_ = R.rank();
  int tn = 2 * npos_;

  sumidx_.assign(std::size_t(tn) * tn, -1);
  for (int a = 0; a < tn; ++a)
    for (int b = 0; b < tn; ++b) sumidx_[std::size_t(a) * tn + b] = R.sum(a, b);

  pair_.assign(std::size_t(tn) * rank_, 0);
  cor_.assign(std::size_t(tn) * rank_, 0);
  for (int a = 0; a < tn; ++a) {
    auto cv = R.coroot(a);
    for (int j = 0; j < rank_; ++j) {
      pair_[std::size_t(a) * rank_ + j] = R.pairing(a, j);
      cor_[std::size_t(a) * rank_ + j] = cv[j];
    }
  }

  // constants for pairs of positive roots, by increasing height of the sum
  std::vector<int> npp(std::size_t(npos_) * npos_, kUnset);
  auto pp = [&](int x, int y) -> int& { return npp[std::size_t(x) * npos_ + y]; };

  // general constant, reduced to the positive table through
  // N_{-x,-y} = -N_{x,y} and, for x + y + z = 0,
  // N_{x,y}/d_z = N_{y,z}/d_x = N_{z,x}/d_y
  auto nfull = [&](auto&& self, int x, int y) -> int {
    int g = sumidx_[std::size_t(x) * tn + y];
    if (g < 0) fail(Errc::internal, "sign table: sum is not a root");
    if (R.is_positive(x) && R.is_positive(y)) {
      int v = pp(x, y);
      if (v == kUnset) fail(Errc::internal, "sign table: value not ready");
      return v;
    }
    if (!R.is_positive(x) && !R.is_positive(y)) return -self(self, R.neg(x), R.neg(y));
    int z = R.neg(g);
    if (R.is_positive(y) && R.is_positive(z))
      return exact_div(long(self(self, y, z)) * R.d_root(z), R.d_root(x), "length ratio");
    if (R.is_positive(z) && R.is_positive(x))
      return exact_div(long(self(self, z, x)) * R.d_root(z), R.d_root(y), "length ratio");
    return -self(self, R.neg(x), R.neg(y));
  };

  for (int g = 0; g < npos_; ++g) {
    if (R.height(g) < 2) continue;
    std::vector<std::pair<int, int>> pairs;  // (xi, eta), xi < eta
    for (int xi = 0; xi < npos_; ++xi) {
      int eta = -1;
      std::vector<int> diff(rank_);
      for (int i = 0; i < rank_; ++i) diff[i] = R.root(g)[i] - R.root(xi)[i];
      eta = R.index_of(diff);
      if (eta > xi && eta < npos_) pairs.emplace_back(xi, eta);
    }
    if (pairs.empty()) fail(Errc::internal, "sign table: no decomposition");
    auto [dlt, eps] = pairs.front();
    int p0 = R.string_down(dlt, eps);
    pp(dlt, eps) = p0 + 1;
    pp(eps, dlt) = -(p0 + 1);
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      auto [xi, eta] = pairs[k];
      // Jacobi identity on (e_{-delta}, e_xi, e_eta), coefficient of
      // e_{gamma - delta}
      long t = 0;
      int xd = sumidx_[std::size_t(xi) * tn + R.neg(dlt)];
      if (xd >= 0) t += long(nfull(nfull, R.neg(dlt), xi)) * nfull(nfull, xd, eta);
      int ed = sumidx_[std::size_t(eta) * tn + R.neg(dlt)];
      if (ed >= 0) t += long(nfull(nfull, eta, R.neg(dlt))) * nfull(nfull, ed, xi);
      int den = nfull(nfull, g, R.neg(dlt));
      int v = exact_div(-t, den, "Jacobi quotient");
      pp(xi, eta) = v;
      pp(eta, xi) = -v;
    }
  }

  nmat_.assign(std::size_t(tn) * tn, 0);
  for (int a = 0; a < tn; ++a)
    for (int b = 0; b < tn; ++b)
      if (sumidx_[std::size_t(a) * tn + b] >= 0)
        nmat_[std::size_t(a) * tn + b] = nfull(nfull, a, b);
}

void ChevTable::bracket(int i, int j, std::vector<std::pair<int, int>>& out) const {
  int tn = 2 * npos_;
  if (i >= tn && j >= tn) return;  // torus is abelian
  if (i >= tn) {
    // [h_i, e_b] = <beta, alpha_i^vee> e_b
    int c = pairing(j, i - tn);
    if (c != 0) out.emplace_back(j, c);
    return;
  }
  if (j >= tn) {
    int c = pairing(i, j - tn);
    if (c != 0) out.emplace_back(i, -c);
    return;
  }
  int s = sumidx_[std::size_t(i) * tn + j];
  if (s >= 0) {
    int c = nmat_[std::size_t(i) * tn + j];
    if (c != 0) out.emplace_back(s, c);
    return;
  }
  if (j == (i < npos_ ? i + npos_ : i - npos_)) {
    // [e_alpha, e_{-alpha}] = h_{alpha^vee}
    for (int k = 0; k < rank_; ++k) {
      int c = coroot(i, k);
      if (c != 0) out.emplace_back(tn + k, c);
    }
  }
}

// ---------------------------------------------------------------------------
// p-th power recovery: ad(x)^p is ad of a unique element once the center is
// trivial; read root coordinates from the h-columns and h-coordinates from
// the diagonal on the simple-root columns.

template <class K>
Vec<K> LieAlgebra<K>::p_power(const Vec<K>& x) const {
  if constexpr (!std::is_same_v<K, Fp>) {
    fail(Errc::invalid_argument, "p_power needs positive characteristic");
  } else {
    const Fp& F = F_;
    std::uint32_t pc = F.p();
    int tn = 2 * T_.npos(), n = T_.rank();

    // trivial center: the Cartan matrix must be invertible mod p, and every
    // root must pair with some simple coroot away from zero
    Matrix<Fp> A(F, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A.at(i, j) = F.from_int(R_.cartan(i, j));
    if (A.rank() != std::size_t(n))
      fail(Errc::nontrivial_center, "center is nontrivial at this characteristic");
    std::vector<int> unit_col(tn, -1);
    for (int a = 0; a < tn; ++a) {
      for (int j = 0; j < n; ++j)
        if (!F.is_zero(F.from_int(T_.pairing(a, j)))) {
          unit_col[a] = j;
          break;
        }
      if (unit_col[a] < 0)
        fail(Errc::nontrivial_center, "a root vector is central at this characteristic");
    }

    Matrix<Fp> M = ad(x).pow(pc);
    Vec<Fp> y = zero();
    // [y, h_j] = -sum_a y_a <alpha_a, alpha_j^vee> e_a
    for (int a = 0; a < tn; ++a) {
      int j = unit_col[a];
      y[a] = F.neg(F.div(M.at(a, h_index(j)), F.from_int(T_.pairing(a, j))));
    }
    // the diagonal entry on column e_{alpha_j} sees only the torus part of y
    Vec<Fp> rhs(n);
    for (int j = 0; j < n; ++j) {
      int s = R_.simple_root(j + 1);
      rhs[j] = M.at(s, s);
    }
    auto hx = A.solve(rhs);
    if (!hx) fail(Errc::no_solution, "p-th power: torus part has no solution");
    for (int i = 0; i < n; ++i) y[h_index(i)] = (*hx)[i];

    if (ad(y) != M) fail(Errc::no_solution, "p-th power: ad(x)^p is not an inner derivation");
    return y;
  }
}

// ---------------------------------------------------------------------------
// element strings:  element = term ('+' term)* | "0"
//                   term    = [int '*']? atom  with an optional sign
//                   atom    = 'e[' int (',' int)* ']' | 'h[' int ']'

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;
  void ws() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool done() {
    ws();
    return i >= s.size();
  }
  [[noreturn]] void err(const std::string& msg) const {
    fail(Errc::parse_error, "element parse error at position " + std::to_string(i) + ": " + msg);
  }
  long integer() {
    ws();
    std::size_t start = i;
    bool negv = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) negv = (s[i++] == '-');
    std::size_t digits = i;
    long v = 0;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) {
      v = v * 10 + (s[i] - '0');
      if (v > 1000000000L) err("integer too large");
      ++i;
    }
    if (i == digits) {
      i = start;
      err("expected an integer");
    }
    return negv ? -v : v;
  }
  void expect(char c) {
    ws();
    if (i >= s.size() || s[i] != c) err(std::string("expected '") + c + "'");
    ++i;
  }
  bool peek(char c) {
    ws();
    return i < s.size() && s[i] == c;
  }
};

}  // namespace

template <class K>
Vec<K> LieAlgebra<K>::parse(const std::string& s) const {
  Vec<K> out = zero();
  Cursor c{s};
  if (c.done()) c.err("empty element");
  c.ws();
  if (s.compare(c.i, 1, "0") == 0) {
    std::size_t j = c.i + 1;
    while (j < s.size() && std::isspace((unsigned char)s[j])) ++j;
    if (j >= s.size()) return out;
  }
  bool first = true;
  while (true) {
    if (!first) {
      if (c.done()) break;
      if (c.peek('+'))
        c.expect('+');
      else if (!c.peek('-'))
        c.err("expected '+'");
    }
    first = false;
    c.ws();
    long coeff = 1;
    bool have_coeff = false;
    if (c.peek('-') || c.peek('+') || (c.i < s.size() && std::isdigit((unsigned char)s[c.i]))) {
      coeff = c.integer();
      have_coeff = true;
      if (c.peek('*'))
        c.expect('*');
      else if (have_coeff && (c.peek('e') || c.peek('h')))
        c.err("expected '*' between coefficient and basis vector");
    }
    c.ws();
    int idx = -1;
    if (c.peek('e')) {
      ++c.i;
      c.expect('[');
      std::vector<int> coeffs;
      coeffs.push_back(int(c.integer()));
      while (c.peek(',')) {
        c.expect(',');
        coeffs.push_back(int(c.integer()));
      }
      c.expect(']');
      if (int(coeffs.size()) != R_.rank()) c.err("wrong number of root coefficients");
      idx = R_.index_of(coeffs);
      if (idx < 0) c.err("not a root");
    } else if (c.peek('h')) {
      ++c.i;
      c.expect('[');
      long i = c.integer();
      c.expect(']');
      if (i < 1 || i > R_.rank()) c.err("Cartan index out of range");
      idx = h_index(int(i) - 1);
    } else {
      c.err("expected 'e[' or 'h['");
    }
    out[idx] = F_.add(out[idx], F_.from_int(coeff));
    if (c.done()) break;
    if (!c.peek('+') && !c.peek('-')) c.err("expected '+' or end of element");
  }
  return out;
}

namespace {
std::string coeff_repr(const Fp& F, Fp::elem v) { return std::to_string(v); }
std::string coeff_repr(const Rat&, const Rat::elem& v) {
  if (!Rat::is_integer(v))
    fail(Errc::bad_denominator, "element printing needs integer coordinates");
  return Rat::str(v);
}
bool coeff_is_one(const Fp&, Fp::elem v) { return v == 1; }
bool coeff_is_one(const Rat& F, const Rat::elem& v) { return v == F.one(); }
}  // namespace

template <class K>
std::string LieAlgebra<K>::print(const Vec<K>& x) const {
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < dim(); ++i) {
    if (F_.is_zero(x[i])) continue;
    if (any) os << " + ";
    any = true;
    if (!coeff_is_one(F_, x[i])) os << coeff_repr(F_, x[i]) << '*';
    if (i < 2 * T_.npos()) {
      os << "e[";
      const auto& r = R_.root(i);
      for (int j = 0; j < R_.rank(); ++j) {
        if (j) os << ',';
        os << r[j];
      }
      os << ']';
    } else {
      os << "h[" << (i - 2 * T_.npos() + 1) << ']';
    }
  }
  if (!any) return "0";
  return os.str();
}

template class LieAlgebra<Fp>;
template class LieAlgebra<Rat>;

}  // namespace chevlie
