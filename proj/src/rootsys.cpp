#include "rootsys.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace chevlie {

namespace {

bool is_prime_int(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int largest_prime_le(int n) {
  for (int k = n; k >= 2; --k)
    if (is_prime_int(k)) return k;
  fail(Errc::internal, "largest_prime_le: no prime below " + std::to_string(n));
}

void check_rank(SimpleType t, int rank) {
  bool ok = false;
  switch (t) {
    case SimpleType::A: ok = rank >= 1; break;
    case SimpleType::B: ok = rank >= 2; break;
    case SimpleType::C: ok = rank >= 2; break;
    case SimpleType::D: ok = rank >= 3; break;
    case SimpleType::E: ok = rank >= 6 && rank <= 8; break;
    case SimpleType::F: ok = rank == 4; break;
    case SimpleType::G: ok = rank == 2; break;
  }
  if (!ok || rank > 24)
    fail(Errc::invalid_argument,
         "unsupported rank " + std::to_string(rank) + " for type " + type_letter(t));
}

}  // namespace

std::string type_letter(SimpleType t) {
  switch (t) {
    case SimpleType::A: return "A";
    case SimpleType::B: return "B";
    case SimpleType::C: return "C";
    case SimpleType::D: return "D";
    case SimpleType::E: return "E";
    case SimpleType::F: return "F";
    case SimpleType::G: return "G";
  }
  return "?";
}

RootSystem RootSystem::create(SimpleType t, int n) {
  check_rank(t, n);
  RootSystem R;
  R.type_ = t;
  R.rank_ = n;

  // Cartan matrix and symmetrizer
  auto& A = R.cartan_;
  A.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) A[i][i] = 2;
  auto link = [&](int i, int j) { A[i][j] = A[j][i] = -1; };
  R.d_.assign(n, 1);
  switch (t) {
    case SimpleType::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case SimpleType::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      A[n - 2][n - 1] = -2;
      for (int i = 0; i + 1 < n; ++i) R.d_[i] = 2;
      break;
    case SimpleType::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      A[n - 1][n - 2] = -2;
      R.d_[n - 1] = 2;
      break;
    case SimpleType::D:
      for (int i = 0; i + 1 < n - 2; ++i) link(i, i + 1);
      link(n - 3, n - 2);
      link(n - 3, n - 1);
      break;
    case SimpleType::E:
      link(0, 2);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      link(1, 3);
      break;
    case SimpleType::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      A[1][2] = -2;
      R.d_[0] = R.d_[1] = 2;
      break;
    case SimpleType::G:
      A[0][1] = -1;
      A[1][0] = -3;
      R.d_[1] = 3;
      break;
  }

  // positive roots, height by height: alpha + alpha_s is a root iff the
  // upward string length q = p - <alpha, alpha_s^vee> is at least 1,
  // where p counts how far the string continues downward
  std::map<std::vector<int>, char> seen;
  std::vector<std::vector<int>> layer, pos;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen[e] = 1;
    layer.push_back(e);
    pos.push_back(e);
  }
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& alpha : layer) {
      for (int s = 0; s < n; ++s) {
        int p = 0;
        std::vector<int> down = alpha;
        for (;;) {
          down[s] -= 1;
          if (!seen.count(down)) break;
          ++p;
        }
        int pair = 0;
        for (int i = 0; i < n; ++i) pair += alpha[i] * A[i][s];
        if (p - pair < 1) continue;
        std::vector<int> up = alpha;
        up[s] += 1;
        if (seen.emplace(up, 1).second) next.push_back(up);
      }
    }
    for (const auto& r : next) pos.push_back(r);
    layer = std::move(next);
  }

  auto ht = [](const std::vector<int>& c) {
    int h = 0;
    for (int x : c) h += x;
    return h;
  };
  std::sort(pos.begin(), pos.end(), [&](const auto& a, const auto& b) {
    int ha = ht(a), hb = ht(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });

  int N = int(pos.size());
  R.npos_ = N;
  R.roots_.resize(2 * N);
  R.height_.resize(2 * N);
  for (int i = 0; i < N; ++i) {
    R.roots_[i] = pos[i];
    R.height_[i] = ht(pos[i]);
    std::vector<int> m(n);
    for (int j = 0; j < n; ++j) m[j] = -pos[i][j];
    R.roots_[N + i] = m;
    R.height_[N + i] = -R.height_[i];
  }
  for (int i = 0; i < 2 * N; ++i) R.index_.emplace_back(R.roots_[i], i);
  std::sort(R.index_.begin(), R.index_.end());

  // half squared lengths, from (alpha_i, alpha_j) = A(i,j) d_j
  R.dalpha_.resize(2 * N);
  for (int a = 0; a < 2 * N; ++a) {
    const auto& c = R.roots_[a];
    long s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += long(c[i]) * c[j] * A[i][j] * R.d_[j];
    if (s <= 0 || s % 2 != 0) fail(Errc::internal, "root length computation failed");
    R.dalpha_[a] = int(s / 2);
    if (R.dalpha_[a] < 1 || R.dalpha_[a] > 3) fail(Errc::internal, "unexpected root length");
  }

  R.simple_.resize(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    R.simple_[i] = R.index_of(e);
    if (R.simple_[i] < 0) fail(Errc::internal, "simple root lookup failed");
  }
  return R;
}

RootSystem RootSystem::parse(const std::string& name) {
  if (name.size() < 2) fail(Errc::invalid_argument, "bad type name '" + name + "'");
  char c = name[0];
  if (c < 'A' || c > 'G') fail(Errc::invalid_argument, "bad type letter in '" + name + "'");
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!isdigit((unsigned char)name[i]))
      fail(Errc::invalid_argument, "bad rank in '" + name + "'");
  int rank = std::stoi(name.substr(1));
  return create(SimpleType(c - 'A'), rank);
}

std::string RootSystem::name() const { return type_letter(type_) + std::to_string(rank_); }

int RootSystem::index_of(const std::vector<int>& coeffs) const {
  auto it = std::lower_bound(index_.begin(), index_.end(),
                             std::make_pair(coeffs, -1));
  if (it == index_.end() || it->first != coeffs) return -1;
  return it->second;
}

int RootSystem::sum(int a, int b) const {
  std::vector<int> s(rank_);
  for (int i = 0; i < rank_; ++i) s[i] = roots_[a][i] + roots_[b][i];
  return index_of(s);
}

int RootSystem::pairing(int a, int j) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i) s += roots_[a][i] * cartan_[i][j];
  return s;
}

int RootSystem::pairing_root(int a, int b) const {
  long s = 0;
  for (int i = 0; i < rank_; ++i) s += long(roots_[b][i]) * d_[i] * pairing(a, i);
  if (s % dalpha_[b] != 0) fail(Errc::internal, "pairing_root not integral");
  return int(s / dalpha_[b]);
}

std::vector<int> RootSystem::coroot(int a) const {
  std::vector<int> cv(rank_);
  for (int i = 0; i < rank_; ++i) {
    long x = long(roots_[a][i]) * d_[i];
    if (x % dalpha_[a] != 0) fail(Errc::internal, "coroot not integral");
    cv[i] = int(x / dalpha_[a]);
  }
  return cv;
}

int RootSystem::string_down(int a, int b) const {
  std::vector<int> c = roots_[b];
  int p = 0;
  for (;;) {
    for (int i = 0; i < rank_; ++i) c[i] -= roots_[a][i];
    if (index_of(c) < 0) break;
    ++p;
  }
  return p;
}

int RootSystem::b_value() const {
  switch (type_) {
    case SimpleType::A: return largest_prime_le(rank_ + 1);
    case SimpleType::B:
    case SimpleType::C:
    case SimpleType::D: return largest_prime_le(rank_);
    case SimpleType::G: return 3;
    case SimpleType::F: return 3;
    case SimpleType::E: return rank_ == 6 ? 5 : 7;
  }
  fail(Errc::internal, "b_value: bad type");
}

int RootSystem::level(int a, const std::vector<int>& J) const {
  std::vector<bool> in(rank_ + 1, false);
  for (int j : J) {
    if (j < 1 || j > rank_) fail(Errc::invalid_argument, "level: simple index out of range");
    in[j] = true;
  }
  int s = 0;
  for (int i = 0; i < rank_; ++i)
    if (!in[i + 1]) s += roots_[a][i];
  return s;
}

std::string RootSystem::coeff_string(int a) const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < rank_; ++i) {
    if (i) os << ',';
    os << roots_[a][i];
  }
  os << ')';
  return os.str();
}

std::string RootSystem::display(int a) const {
  const auto& c = roots_[a];
  std::ostringstream os;
  if (type_ == SimpleType::E) {
    os << c[0];
    for (int i = 2; i < rank_; ++i) os << c[i];
    os << ';' << c[1];
  } else {
    for (int i = 0; i < rank_; ++i) os << c[i];
  }
  return os.str();
}

}  // namespace chevlie
