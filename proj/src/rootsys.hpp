#pragma once

#include <string>
#include <vector>

#include "error.hpp"

namespace chevlie {

enum class SimpleType { A, B, C, D, E, F, G };

// Root system of a simple type, Bourbaki numbering.  Roots are integer
// coefficient vectors on the simple roots.  Positive roots come first,
// ordered by height and then by decreasing lexicographic order (so the
// simple roots appear as alpha_1..alpha_n); root N+i is minus root i.
class RootSystem {
public:
  static RootSystem create(SimpleType t, int rank);
  static RootSystem parse(const std::string& name);  // "A3", "E8", ...

  SimpleType type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const;

  int num_pos() const { return npos_; }
  int num_roots() const { return 2 * npos_; }

  // Cartan matrix <alpha_i, alpha_j^vee>, 0-based
  int cartan(int i, int j) const { return cartan_[i][j]; }
  // half squared length of alpha_i; short roots sit at 1
  int d_simple(int i) const { return d_[i]; }

  const std::vector<int>& root(int a) const { return roots_[a]; }
  int height(int a) const { return height_[a]; }
  bool is_positive(int a) const { return a < npos_; }
  int neg(int a) const { return a < npos_ ? a + npos_ : a - npos_; }
  int highest_root() const { return npos_ - 1; }
  int simple_root(int i) const { return simple_[i - 1]; }  // 1-based label

  // index of a coefficient vector, or -1 if it is not a root
  int index_of(const std::vector<int>& coeffs) const;
  // index of root(a) + root(b), or -1
  int sum(int a, int b) const;

  // <alpha_a, alpha_j^vee> for the j-th simple root, 0-based j
  int pairing(int a, int j) const;
  // <alpha_a, alpha_b^vee> for any root b
  int pairing_root(int a, int b) const;
  // half squared length of root a
  int d_root(int a) const { return dalpha_[a]; }
  // coefficients of alpha_a^vee on the simple coroots
  std::vector<int> coroot(int a) const;

  // largest k >= 0 such that root(b) - k*root(a) is still a root
  int string_down(int a, int b) const;

  int coxeter_number() const { return 1 + height_[npos_ - 1]; }
  int b_value() const;

  // sum of the coefficients outside J; J holds 1-based simple indices
  int level(int a, const std::vector<int>& J) const;

  std::string coeff_string(int a) const;  // "(2,3,4,6,5,4,3,2)"
  // digit string; for type E the alpha_2 coefficient moves behind a
  // semicolon, matching the usual two-row diagram layout
  std::string display(int a) const;

private:
  RootSystem() = default;

  SimpleType type_ = SimpleType::A;
  int rank_ = 0;
  int npos_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> d_;
  std::vector<std::vector<int>> roots_;
  std::vector<int> height_;
  std::vector<int> dalpha_;
  std::vector<int> simple_;
  std::vector<std::pair<std::vector<int>, int>> index_;  // sorted coeffs -> root
};

std::string type_letter(SimpleType t);

}  // namespace chevlie
