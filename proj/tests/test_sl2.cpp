#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "linalg.hpp"
#include "sl2.hpp"

using namespace chevlie;

namespace {

Errc thrown_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::ok;
}

// regular nilpotent: the sum of all simple root vectors
template <class K>
Vec<K> regular_e(const LieAlgebra<K>& L) {
  auto v = L.zero();
  for (int i = 1; i <= L.rootsys().rank(); ++i)
    v = vec_add(L.field(), v, L.basis_vec(L.e_index(L.rootsys().simple_root(i))));
  return v;
}

template <class K>
Vec<K> weighted_f(const LieAlgebra<K>& L, const std::vector<long>& c) {
  const K& F = L.field();
  auto v = L.zero();
  for (int i = 1; i <= L.rootsys().rank(); ++i) {
    auto neg = L.rootsys().neg(L.rootsys().simple_root(i));
    v = vec_add(F, v, vec_scale(F, F.from_int(c[i - 1]), L.basis_vec(L.e_index(neg))));
  }
  return v;
}

template <class K>
Vec<K> weighted_h(const LieAlgebra<K>& L, const std::vector<long>& c) {
  const K& F = L.field();
  auto v = L.zero();
  for (int i = 1; i <= L.rootsys().rank(); ++i)
    v = vec_add(F, v, vec_scale(F, F.from_int(c[i - 1]), L.basis_vec(L.h_index(i - 1))));
  return v;
}

}  // namespace

TEST_CASE("verify_triple accepts the standard basis of sl2 and rejects tampering") {
  LieAlgebra<Rat> L(RootSystem::parse("A1"), Rat{});
  auto e = L.parse("e[1]");
  auto h = L.parse("h[1]");
  auto f = L.parse("e[-1]");
  CHECK(verify_triple(L, Sl2Triple<Rat>{e, h, f}));
  CHECK_FALSE(verify_triple(L, Sl2Triple<Rat>{e, h, vec_scale(L.field(), L.field().from_int(2), f)}));
  CHECK_FALSE(verify_triple(L, Sl2Triple<Rat>{e, f, h}));
}

TEST_CASE("characteristic zero completion on sl2 recovers a triple") {
  LieAlgebra<Rat> L(RootSystem::parse("A1"), Rat{});
  auto t = jm_extend_char0(L, L.parse("e[1]"));
  CHECK(verify_triple(L, t));
  CHECK(t.e == L.parse("e[1]"));
}

TEST_CASE("characteristic zero completion for regular elements of small types") {
  for (const char* nm : {"A2", "B2", "G2", "A3"}) {
    CAPTURE(nm);
    LieAlgebra<Rat> L(RootSystem::parse(nm), Rat{});
    auto t = jm_extend_char0(L, regular_e(L));
    CHECK(verify_triple(L, t));
  }
}

TEST_CASE("completion of zero is the zero triple") {
  LieAlgebra<Rat> L(RootSystem::parse("A2"), Rat{});
  auto t = jm_extend_char0(L, L.zero());
  CHECK(vec_is_zero(L.field(), t.h));
  LieAlgebra<Fp> Lp(RootSystem::parse("A2"), Fp(5));
  auto tp = extend_mod_p(Lp, Lp.zero());
  CHECK(vec_is_zero(Lp.field(), tp.f));
}

TEST_CASE("non-nilpotent elements are rejected") {
  LieAlgebra<Rat> L(RootSystem::parse("A1"), Rat{});
  CHECK(thrown_code([&] { jm_extend_char0(L, L.parse("h[1]")); }) == Errc::not_nilpotent);
  LieAlgebra<Fp> Lp(RootSystem::parse("A1"), Fp(5));
  CHECK(thrown_code([&] { extend_mod_p(Lp, Lp.parse("h[1]")); }) == Errc::not_nilpotent);
}

TEST_CASE("explicit principal triples in the exceptional types") {
  // G2: f = 6 f_1 + 10 f_2, h = [e, f] = 6 h_1 + 10 h_2
  {
    LieAlgebra<Rat> L(RootSystem::parse("G2"), Rat{});
    auto e = regular_e(L);
    auto f = weighted_f(L, {6, 10});
    auto h = L.bracket(e, f);
    CHECK(h == weighted_h(L, {6, 10}));
    CHECK(verify_triple(L, Sl2Triple<Rat>{e, h, f}));
    auto part = jordan_partition(L.ad(e));
    CHECK(partition_string(part) == "11+3");
  }
  // F4: f = 22 f_1 + 42 f_2 + 30 f_3 + 16 f_4
  {
    LieAlgebra<Rat> L(RootSystem::parse("F4"), Rat{});
    auto e = regular_e(L);
    auto f = weighted_f(L, {22, 42, 30, 16});
    auto h = L.bracket(e, f);
    CHECK(h == weighted_h(L, {22, 42, 30, 16}));
    CHECK(verify_triple(L, Sl2Triple<Rat>{e, h, f}));
  }
  // E7: f = 34 f_1 + 49 f_2 + 66 f_3 + 96 f_4 + 75 f_5 + 52 f_6 + 27 f_7
  {
    LieAlgebra<Rat> L(RootSystem::parse("E7"), Rat{});
    auto e = regular_e(L);
    auto f = weighted_f(L, {34, 49, 66, 96, 75, 52, 27});
    CHECK(verify_triple(L, Sl2Triple<Rat>{e, L.bracket(e, f), f}));
  }
  // E8: f = 92 f_1 + 136 f_2 + 182 f_3 + 270 f_4 + 220 f_5 + 168 f_6 + 114 f_7 + 58 f_8
  {
    LieAlgebra<Rat> L(RootSystem::parse("E8"), Rat{});
    auto e = regular_e(L);
    auto f = weighted_f(L, {92, 136, 182, 270, 220, 168, 114, 58});
    CHECK(verify_triple(L, Sl2Triple<Rat>{e, L.bracket(e, f), f}));
  }
}

TEST_CASE("mod p completion finds toral triples") {
  {
    LieAlgebra<Fp> L(RootSystem::parse("A1"), Fp(5));
    auto t = extend_mod_p(L, L.parse("e[1]"));
    CHECK(verify_triple(L, t));
    auto A = L.ad(t.h);
    CHECK(A.pow(5) == A);
  }
  {
    LieAlgebra<Fp> L(RootSystem::parse("A2"), Fp(5));
    auto t = extend_mod_p(L, regular_e(L));
    CHECK(verify_triple(L, t));
    auto A = L.ad(t.h);
    CHECK(A.pow(5) == A);
  }
  {
    // the reduction of the rational principal triple stays a triple
    LieAlgebra<Fp> L(RootSystem::parse("G2"), Fp(7));
    auto e = regular_e(L);
    auto f = weighted_f(L, {6, 10});
    auto h = L.bracket(e, f);
    CHECK(verify_triple(L, Sl2Triple<Fp>{e, h, f}));
    auto t = extend_mod_p(L, e);
    CHECK(verify_triple(L, t));
  }
}

TEST_CASE("subregular element of G2 in characteristic 3 has no toral completion") {
  LieAlgebra<Fp> L(RootSystem::parse("G2"), Fp(3));
  auto e = L.parse("e[2,1] + e[3,2]");
  CHECK(thrown_code([&] { extend_mod_p(L, e); }) == Errc::no_triple);
}

TEST_CASE("truncated exponential of ad e on sl2") {
  // exp(ad e) f = f + h - e
  {
    LieAlgebra<Rat> L(RootSystem::parse("A1"), Rat{});
    auto got = truncated_exp_conjugate(L, L.parse("e[1]"), L.parse("e[-1]"));
    CHECK(got == L.parse("e[-1] + h[1] + -1*e[1]"));
  }
  {
    LieAlgebra<Fp> L(RootSystem::parse("A1"), Fp(5));
    auto got = truncated_exp_conjugate(L, L.parse("e[1]"), L.parse("e[-1]"));
    CHECK(got == L.parse("e[-1] + h[1] + 4*e[1]"));
  }
  {
    // depth 3 needs terms up to degree 2, which 1/k! cannot reach at p = 3
    LieAlgebra<Fp> L(RootSystem::parse("A1"), Fp(3));
    CHECK(thrown_code([&] {
            truncated_exp_conjugate(L, L.parse("e[1]"), L.parse("e[-1]"));
          }) == Errc::nilpotency_too_deep);
  }
  {
    LieAlgebra<Fp> L(RootSystem::parse("A1"), Fp(5));
    CHECK(thrown_code([&] {
            truncated_exp_conjugate(L, L.parse("h[1]"), L.parse("e[1]"));
          }) == Errc::not_nilpotent);
  }
}

TEST_CASE("quadratic delta operator agrees with the series on sl2") {
  LieAlgebra<Fp> L(RootSystem::parse("A1"), Fp(5));
  auto e = L.parse("e[1]");
  auto f = L.parse("e[-1]");
  auto got = delta_op(L, e).mul_vec(f);
  CHECK(got == L.parse("e[-1] + h[1] + 4*e[1]"));
}

TEST_CASE("level component of the delta differences in coordinates") {
  LieAlgebra<Fp> L(RootSystem::parse("A2"), Fp(5));
  const Fp& F = L.field();
  std::vector<int> cochar{1, 1};
  auto fbar = L.parse("e[-1,0] + e[0,-1]");
  auto dst = L.weight_component(cochar, 1);
  REQUIRE(dst.dim() == 2);

  // x = e_theta: delta_x(fbar) - fbar = [e_theta, fbar], already of weight 1
  // x = e_1: the weight-0 part [e_1, fbar] = h_1 is masked away, leaving
  //          (1/2)[e_1, [e_1, fbar]] = -e_1
  std::vector<Vec<Fp>> xs{L.parse("e[1,1]"), L.parse("e[1,0]")};
  auto M = delta_map(L, cochar, 1, xs, fbar, dst);
  REQUIRE(M.rows() == 2);
  REQUIRE(M.cols() == 2);

  auto theta_col = dst.coords_of(L.bracket(L.parse("e[1,1]"), fbar));
  REQUIRE(theta_col.has_value());
  CHECK(M.at(0, 0) == (*theta_col)[0]);
  CHECK(M.at(1, 0) == (*theta_col)[1]);
  bool theta_nonzero = !F.is_zero(M.at(0, 0)) || !F.is_zero(M.at(1, 0));
  CHECK(theta_nonzero);

  auto e1_col = dst.coords_of(vec_scale(F, F.from_int(-1), L.parse("e[1,0]")));
  REQUIRE(e1_col.has_value());
  CHECK(M.at(0, 1) == (*e1_col)[0]);
  CHECK(M.at(1, 1) == (*e1_col)[1]);

  // a target space missing the image direction is reported, not silently fixed
  auto tight = Subspace<Fp>::from_rows(row_vec(F, L.parse("e[1,0]")));
  CHECK(thrown_code([&] { delta_map(L, cochar, 1, xs, fbar, tight); }) == Errc::no_solution);
}
