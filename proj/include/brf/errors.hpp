#pragma once

#include <stdexcept>
#include <string>

namespace brf {

enum class Errc {
  invalid_instance,
  parse_error,
  missing_point,
  empty_range,
  no_witness,
  empty_chain_intersection,
  illegal_flip,
  not_permutation,
  duplicate_corner,
  too_large,
  restricted_region_unsupported,
  internal,
};

/// All library failures are reported as Error; code() tells callers apart.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace brf
