#pragma once

#include <cstdint>

#include "error.hpp"

namespace chevlie {

// Prime field F_p for odd p < 2^31.  Elements are stored reduced to 0..p-1;
// products go through uint64_t so nothing overflows.
class Fp {
public:
  using elem = std::uint32_t;

  Fp() : p_(2) {}
  explicit Fp(std::uint32_t p) : p_(p) {
    if (p < 2 || !is_prime(p)) fail(Errc::invalid_argument, "Fp: modulus must be prime");
  }

  std::uint32_t p() const { return p_; }

  elem zero() const { return 0; }
  elem one() const { return p_ == 1 ? 0 : 1; }
  bool is_zero(elem a) const { return a == 0; }

  elem add(elem a, elem b) const {
    elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  elem sub(elem a, elem b) const { return a >= b ? a - b : a + (p_ - b); }
  elem neg(elem a) const { return a == 0 ? 0 : p_ - a; }
  elem mul(elem a, elem b) const { return elem(std::uint64_t(a) * b % p_); }

  elem inv(elem a) const {
    if (a == 0) fail(Errc::invalid_argument, "Fp: division by zero");
    // extended Euclid on (a, p)
    std::int64_t t = 0, newt = 1, r = p_, newr = a;
    while (newr != 0) {
      std::int64_t q = r / newr;
      std::int64_t tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    if (t < 0) t += p_;
    return elem(t);
  }
  elem div(elem a, elem b) const { return mul(a, inv(b)); }

  elem from_int(std::int64_t n) const {
    std::int64_t r = n % std::int64_t(p_);
    if (r < 0) r += p_;
    return elem(r);
  }
  // canonical lift to 0..p-1
  std::int64_t to_int(elem a) const { return std::int64_t(a); }

  elem pow(elem a, std::uint64_t e) const {
    elem out = one(), base = a;
    while (e) {
      if (e & 1) out = mul(out, base);
      base = mul(base, base);
      e >>= 1;
    }
    return out;
  }

  bool operator==(const Fp& other) const { return p_ == other.p_; }

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

private:
  std::uint32_t p_;
};

}  // namespace chevlie
