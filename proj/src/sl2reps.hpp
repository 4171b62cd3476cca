#pragma once

#include <cstdint>
#include <vector>

#include "fp.hpp"
#include "matrix.hpp"

namespace chevlie {

// a module over sl2 in characteristic p, given by the three action
// matrices; every constructor verifies the sl2 relations
struct Sl2Module {
  Fp F;
  Matrix<Fp> e, h, f;
  std::size_t dim() const { return e.rows(); }
};

bool sl2_relations_hold(const Sl2Module& M);

// action matrices in the basis order (e, h, f)
inline std::vector<Matrix<Fp>> action_ops(const Sl2Module& M) { return {M.e, M.h, M.f}; }

// e^p, f^p act as zero and h^p as h, matching the p-structure on sl2
bool is_restricted(const Sl2Module& M);

// the simple restricted module of highest weight m, dimension m+1
Sl2Module simple_L(std::uint32_t p, int m);

Sl2Module dual(const Sl2Module& M);
Sl2Module tensor(const Sl2Module& A, const Sl2Module& B);
Sl2Module direct_sum(const Sl2Module& A, const Sl2Module& B);

// dim Ext^1(L(a), L(b)) computed as dim H^1(sl2, dual(L(a)) (x) L(b))
int ext1(std::uint32_t p, int a, int b);

// the self-dual uniserial module L(i) | L(p-2-i) | L(i) of dimension
// p+i+1: e acts as a single Jordan block and f with blocks
// (p-1-i, i+1, i+1)
Sl2Module uniserial_W(std::uint32_t p, int i);

// the dimension-p indecomposable k | L(p-2): e a single Jordan block,
// f lowering with coefficients -i(i+1), a regular nilpotent of a
// proper Levi (blocks (p-1, 1))
Sl2Module indecomposable_kL(std::uint32_t p);

// in gl_p: e the regular raising element, f = sum -i^2 E_{i+1,i},
// f0 = sum i E_{i+1,i}; checks [e, f + lambda f0] = [e,f] + lambda I
bool a_family_bracket_check(std::uint32_t p, long lambda);

}  // namespace chevlie
