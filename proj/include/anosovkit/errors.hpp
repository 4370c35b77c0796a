#pragma once

#include <stdexcept>
#include <string>

namespace anosov {

enum class errc {
  bad_argument,
  non_invertible,
  not_normalizing,
  degenerate,
  not_periodic,
  not_closed,
  zero_slope,
  bad_index,
  not_hyperbolic,
  degenerate_segment,
  premise_violated,
  check_failed,
  stale_hash,
};

const char* errc_name(errc code);

/// Single exception type for the toolkit; the code survives the C boundary.
class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace anosov
