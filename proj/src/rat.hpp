#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "error.hpp"

namespace chevlie {

// Exact rational numbers on top of GMP.  Mirrors the Fp interface so the
// linear algebra templates instantiate over either field.
class Rat {
public:
  using elem = mpq_class;

  elem zero() const { return mpq_class(0); }
  elem one() const { return mpq_class(1); }
  bool is_zero(const elem& a) const { return sgn(a) == 0; }

  elem add(const elem& a, const elem& b) const { return elem(a + b); }
  elem sub(const elem& a, const elem& b) const { return elem(a - b); }
  elem neg(const elem& a) const { return elem(-a); }
  elem mul(const elem& a, const elem& b) const { return elem(a * b); }
  elem inv(const elem& a) const {
    if (sgn(a) == 0) fail(Errc::invalid_argument, "Rat: division by zero");
    return elem(1 / a);
  }
  elem div(const elem& a, const elem& b) const { return mul(a, inv(b)); }

  elem from_int(std::int64_t n) const {
    mpz_class z;
    // mpz from int64 without assuming long width
    bool negv = n < 0;
    std::uint64_t mag = negv ? ~std::uint64_t(n) + 1 : std::uint64_t(n);
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
    if (negv) z = -z;
    return mpq_class(z);
  }

  bool operator==(const Rat&) const { return true; }

  static std::string str(const elem& a) { return a.get_str(); }
  static bool is_integer(const elem& a) { return a.get_den() == 1; }
};

}  // namespace chevlie
