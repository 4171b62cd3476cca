#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fp.hpp"
#include "matrix.hpp"
#include "rat.hpp"

using namespace chevlie;

namespace {

template <class K>
Matrix<K> from_ints(const K& F, std::vector<std::vector<int>> rows) {
  Matrix<K> m(F, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = F.from_int(rows[i][j]);
  return m;
}

// random matrix of known rank r: product of a random n x r and r x m over F_p
Matrix<Fp> planted_rank(const Fp& F, std::size_t n, std::size_t m, std::size_t r,
                        std::mt19937_64& rng) {
  Matrix<Fp> a(F, n, r), b(F, r, m);
  std::uniform_int_distribution<std::uint32_t> d(0, F.p() - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < r; ++j) a.at(i, j) = d(rng);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m; ++j) b.at(i, j) = d(rng);
  return a * b;
}

}  // namespace

TEST_CASE("Fp arithmetic") {
  Fp F(7);
  CHECK(F.add(3, 5) == 1);
  CHECK(F.sub(2, 5) == 4);
  CHECK(F.neg(0) == 0);
  CHECK(F.mul(3, 5) == 1);
  CHECK(F.from_int(-1) == 6);
  CHECK(F.from_int(700) == 0);
  for (Fp::elem a = 1; a < 7; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
  CHECK(F.pow(3, 6) == 1);
  CHECK_THROWS_AS(F.inv(0), Error);
  CHECK_THROWS_AS(Fp(6), Error);
  CHECK_THROWS_AS(Fp(1), Error);
  Fp big(65537);
  CHECK(big.mul(65536, 65536) == 1);
}

TEST_CASE("Rat arithmetic") {
  Rat Q;
  auto half = Q.div(Q.one(), Q.from_int(2));
  CHECK(Q.add(half, half) == Q.one());
  CHECK(Q.is_zero(Q.sub(half, half)));
  CHECK(Rat::str(Q.from_int(-3)) == "-3");
  CHECK(Rat::str(Q.div(Q.from_int(2), Q.from_int(-4))) == "-1/2");
  CHECK(Rat::is_integer(Q.from_int(5)));
  CHECK(!Rat::is_integer(half));
  CHECK_THROWS_AS(Q.inv(Q.zero()), Error);
  // from_int must be exact for values beyond 32 bits
  std::int64_t big = 123456789012345LL;
  CHECK(Rat::str(Q.from_int(big)) == "123456789012345");
  CHECK(Rat::str(Q.from_int(-big)) == "-123456789012345");
}

TEST_CASE("matrix multiply and power") {
  Fp F(101);
  auto a = from_ints(F, {{1, 2}, {3, 4}});
  auto b = from_ints(F, {{0, 1}, {1, 0}});
  CHECK(a * b == from_ints(F, {{2, 1}, {4, 3}}));
  CHECK(a * Matrix<Fp>::identity(F, 2) == a);
  auto n = from_ints(F, {{0, 1}, {0, 0}});
  CHECK(n.pow(2).is_zero());
  CHECK(a.pow(0) == Matrix<Fp>::identity(F, 2));
  CHECK(a.pow(3) == a * a * a);

  Rat Q;
  auto q = from_ints(Q, {{1, 1}, {0, 1}});
  CHECK(q.pow(10).at(0, 1) == Q.from_int(10));
}

TEST_CASE("rref, rank, kernel over F_p") {
  Fp F(5);
  // det = -4 = 1 mod 5, so full rank
  auto m = from_ints(F, {{1, 0, 2}, {0, 1, 3}, {1, 1, 1}});
  CHECK(m.rank() == 3);
  CHECK(m.kernel().rows() == 0);

  // third row = first + second mod 5
  auto s = from_ints(F, {{1, 0, 2}, {0, 1, 3}, {1, 1, 0}});
  CHECK(s.rank() == 2);
  auto ker = s.kernel();
  REQUIRE(ker.rows() == 1);
  CHECK(s.mul_vec(ker.row(0)) == vec_zero(F, 3));

  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 1 + trial % 9, mm = 1 + (trial * 7) % 9;
    std::size_t r = trial % (std::min(n, mm) + 1);
    auto x = planted_rank(F, n, mm, r, rng);
    CHECK(x.rank() <= r);
    auto k = x.kernel();
    CHECK(k.rows() == mm - x.rank());
    for (std::size_t i = 0; i < k.rows(); ++i)
      CHECK(vec_is_zero(F, x.mul_vec(k.row(i))));
  }
}

TEST_CASE("rref over rationals is exact") {
  Rat Q;
  auto m = from_ints(Q, {{2, 4}, {1, 3}});
  auto r = m.rref();
  CHECK(r == Matrix<Rat>::identity(Q, 2));
  auto hilbertish = from_ints(Q, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  CHECK(hilbertish.rank() == 2);
  auto ker = hilbertish.kernel();
  REQUIRE(ker.rows() == 1);
  CHECK(vec_is_zero(Q, hilbertish.mul_vec(ker.row(0))));
}

TEST_CASE("solve") {
  Fp F(7);
  auto a = from_ints(F, {{1, 2}, {3, 4}});
  Vec<Fp> b{F.from_int(5), F.from_int(6)};
  auto x = a.solve(b);
  REQUIRE(x.has_value());
  CHECK(a.mul_vec(*x) == b);

  // inconsistent system
  auto s = from_ints(F, {{1, 1}, {2, 2}});
  Vec<Fp> c{F.from_int(1), F.from_int(3)};
  CHECK(!s.solve(c).has_value());

  // underdetermined but consistent
  auto u = from_ints(F, {{1, 1, 1}});
  Vec<Fp> d{F.from_int(4)};
  auto y = u.solve(d);
  REQUIRE(y.has_value());
  CHECK(u.mul_vec(*y) == d);

  Rat Q;
  auto qa = from_ints(Q, {{2, 0}, {0, 3}});
  Vec<Rat> qb{Q.from_int(1), Q.from_int(1)};
  auto qx = qa.solve(qb);
  REQUIRE(qx.has_value());
  CHECK(Rat::str((*qx)[0]) == "1/2");
  CHECK(Rat::str((*qx)[1]) == "1/3");
}

TEST_CASE("subspace operations") {
  Fp F(5);
  auto s1 = Subspace<Fp>::from_rows(from_ints(F, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  auto s2 = Subspace<Fp>::from_rows(from_ints(F, {{0, 1, 0, 0}, {0, 0, 1, 0}}));
  CHECK(s1.dim() == 2);
  CHECK(Subspace<Fp>::sum(s1, s2).dim() == 3);
  auto cap = Subspace<Fp>::intersection(s1, s2);
  CHECK(cap.dim() == 1);
  Vec<Fp> e1{0, 1, 0, 0};
  CHECK(cap.contains(e1));

  // canonical form: same space from different spanning sets compares equal
  auto t1 = Subspace<Fp>::from_rows(from_ints(F, {{1, 1, 0, 0}, {1, 4, 0, 0}}));
  CHECK(t1 == s1);

  auto co = s1.coords_of(Vec<Fp>{2, 3, 0, 0});
  REQUIRE(co.has_value());
  CHECK((*co)[0] == 2);
  CHECK((*co)[1] == 3);
  CHECK(!s1.coords_of(Vec<Fp>{0, 0, 1, 0}).has_value());

  auto grown = s1;
  CHECK(!grown.grow(Vec<Fp>{1, 2, 0, 0}));
  CHECK(grown.grow(Vec<Fp>{0, 0, 0, 1}));
  CHECK(grown.dim() == 3);

  CHECK(Subspace<Fp>::zero(F, 4).dim() == 0);
  CHECK(Subspace<Fp>::full(F, 4).dim() == 4);
  CHECK(Subspace<Fp>::full(F, 4).contains(s1));

  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 15; ++trial) {
    auto a = Subspace<Fp>::from_rows(planted_rank(F, 4, 6, 1 + trial % 4, rng));
    auto b = Subspace<Fp>::from_rows(planted_rank(F, 4, 6, 1 + (trial + 1) % 4, rng));
    auto su = Subspace<Fp>::sum(a, b);
    auto in = Subspace<Fp>::intersection(a, b);
    CHECK(su.dim() + in.dim() == a.dim() + b.dim());
    CHECK(su.contains(a));
    CHECK(a.contains(in));
    CHECK(b.contains(in));
  }
}

TEST_CASE("vstack and transpose") {
  Fp F(3);
  auto a = from_ints(F, {{1, 2}});
  auto b = from_ints(F, {{0, 1}, {2, 2}});
  auto v = Matrix<Fp>::vstack(a, b);
  CHECK(v.rows() == 3);
  CHECK(v.row(2) == b.row(1));
  CHECK(v.transpose().cols() == 3);
  CHECK(v.transpose().at(1, 2) == F.from_int(2));
}
