#pragma once

#include <stdexcept>
#include <string>

namespace chevlie {

// Error codes shared between the C++ core and the C API.
enum class Errc {
  ok = 0,
  invalid_argument = 1,
  parse_error = 2,
  not_nilpotent = 3,
  nontrivial_center = 4,
  not_grading_stable = 5,
  no_solution = 6,
  no_triple = 7,
  search_space_too_large = 8,
  envelope_too_large = 9,
  nilpotency_too_deep = 10,
  data_file_error = 11,
  bad_denominator = 12,
  not_closed = 13,
  internal = 14,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace chevlie
