#include "sl2.hpp"

#include <random>

namespace chevlie {

namespace {

template <class K>
bool ad_nilpotent(const LieAlgebra<K>& L, const Vec<K>& e) {
  return L.ad(e).pow(std::size_t(L.dim())).is_zero();
}

// particular solution u of (ad e)^2 u = -2e together with the kernel
template <class K>
std::optional<std::pair<Vec<K>, Matrix<K>>> square_solve(const LieAlgebra<K>& L,
                                                         const Vec<K>& e) {
  const K& F = L.field();
  auto A2 = L.ad(e);
  A2 = A2 * A2;
  auto rhs = vec_scale(F, F.from_int(-2), e);
  auto u = A2.solve(rhs);
  if (!u) return std::nullopt;
  return std::make_pair(*u, A2.kernel());
}

// solve [e, f] = h, [h, f] = -2f for f
template <class K>
std::optional<Vec<K>> complete_f(const LieAlgebra<K>& L, const Vec<K>& e, const Vec<K>& h) {
  const K& F = L.field();
  auto top = L.ad(e);
  auto bot = L.ad(h) + Matrix<K>::identity(F, L.dim()).scaled(F.from_int(2));
  auto sys = Matrix<K>::vstack(top, bot);
  Vec<K> rhs = h;
  rhs.resize(2 * L.dim(), F.zero());
  return sys.solve(rhs);
}

}  // namespace

Sl2Triple<Rat> jm_extend_char0(const LieAlgebra<Rat>& L, const Vec<Rat>& e) {
  const Rat& F = L.field();
  if (vec_is_zero(F, e)) return {L.zero(), L.zero(), L.zero()};
  if (!ad_nilpotent(L, e)) fail(Errc::not_nilpotent, "element is not nilpotent");
  auto sq = square_solve(L, e);
  if (!sq) fail(Errc::no_triple, "no completion: -2e is not in the image of (ad e)^2");
  auto h = L.bracket(e, sq->first);
  auto f = complete_f(L, e, h);
  if (!f) fail(Errc::no_triple, "no completion: f equation is inconsistent");
  Sl2Triple<Rat> t{e, h, *f};
  if (!verify_triple(L, t)) fail(Errc::internal, "completion failed verification");
  return t;
}

Sl2Triple<Fp> extend_mod_p(const LieAlgebra<Fp>& L, const Vec<Fp>& e,
                           const ExtendOptions& opt) {
  const Fp& F = L.field();
  if (vec_is_zero(F, e)) return {L.zero(), L.zero(), L.zero()};
  if (!ad_nilpotent(L, e)) fail(Errc::not_nilpotent, "element is not nilpotent");
  auto sq = square_solve(L, e);
  if (!sq) fail(Errc::no_triple, "no completion: -2e is not in the image of (ad e)^2");
  const auto& [u0, ker] = *sq;

  Vec<Fp> h0 = L.bracket(e, u0);
  // distinct h candidates differ by [e, ker basis]; drop directions that
  // collapse to zero and deduplicate the rest
  Matrix<Fp> dirs(F, 0, L.dim());
  {
    Subspace<Fp> seen = Subspace<Fp>::zero(F, L.dim());
    for (std::size_t r = 0; r < ker.rows(); ++r) {
      auto w = L.bracket(e, ker.row(r));
      if (seen.grow(w)) dirs = Matrix<Fp>::vstack(dirs, row_vec(F, w));
    }
  }
  std::size_t d = dirs.rows();
  double count = 1;
  for (std::size_t i = 0; i < d; ++i) count *= F.p();
  if (count > double(opt.max_candidates))
    fail(Errc::search_space_too_large,
         "candidate torus search needs " + std::to_string(count) + " elements");

  std::mt19937_64 rng(0xC0FFEE);
  std::uniform_int_distribution<std::uint32_t> dist(0, F.p() - 1);
  std::vector<Vec<Fp>> samples;
  for (std::size_t s = 0; s < opt.prefilter_samples; ++s) {
    Vec<Fp> v(L.dim());
    for (auto& x : v) x = dist(rng);
    samples.push_back(v);
  }

  std::vector<Fp::elem> coeff(d, 0);
  std::size_t total = std::size_t(count);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < d; ++i) {
      coeff[i] = Fp::elem(c % F.p());
      c /= F.p();
    }
    Vec<Fp> h = h0;
    for (std::size_t i = 0; i < d; ++i)
      if (!F.is_zero(coeff[i])) h = vec_add(F, h, vec_scale(F, coeff[i], dirs.row(i)));

    auto A = L.ad(h);
    bool maybe_toral = true;
    for (const auto& s : samples) {
      Vec<Fp> v = s;
      for (std::uint32_t k = 0; k < F.p(); ++k) v = A.mul_vec(v);
      if (v != A.mul_vec(s)) {
        maybe_toral = false;
        break;
      }
    }
    if (!maybe_toral) continue;
    if (A.pow(F.p()) != A) continue;

    auto f = complete_f(L, e, h);
    if (!f) continue;
    Sl2Triple<Fp> t{e, h, *f};
    if (verify_triple(L, t)) return t;
  }
  fail(Errc::no_triple, "no toral completion exists");
}

}  // namespace chevlie
