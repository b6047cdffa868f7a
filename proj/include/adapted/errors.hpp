#pragma once

#include <stdexcept>
#include <string>

namespace adapted {

// Failure classes map onto CLI exit codes: validation_error means the caller
// handed us bad data (exit 1), internal_error means a broken invariant in our
// own computation (exit 2).
enum class errc {
  not_prime,
  rotation_sum_nonzero,
  genus_too_small,
  invalid_t,
  out_of_range,
  bad_exponent,
  not_in_kernel,
  malformed_input,
  bad_t,
  not_evenly_worded,
  context_mismatch,
  odd_q,
  not_skew,
  not_unimodular,
  odd_dimension,
  dimension_mismatch,
  parse_error,
};

const char* errc_name(errc code) noexcept;

class validation_error : public std::runtime_error {
 public:
  validation_error(errc code, const std::string& message);
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& message);
};

void require(bool condition, errc code, const std::string& message);
void ensure(bool condition, const std::string& message);

}  // namespace adapted
