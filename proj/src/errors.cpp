#include "adapted/errors.hpp"

namespace adapted {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::not_prime: return "NotPrime";
    case errc::rotation_sum_nonzero: return "RotationSumNonzero";
    case errc::genus_too_small: return "GenusTooSmall";
    case errc::invalid_t: return "InvalidT";
    case errc::out_of_range: return "OutOfRange";
    case errc::bad_exponent: return "BadExponent";
    case errc::not_in_kernel: return "NotInKernel";
    case errc::malformed_input: return "MalformedInput";
    case errc::bad_t: return "BadT";
    case errc::not_evenly_worded: return "NotEvenlyWorded";
    case errc::context_mismatch: return "ContextMismatch";
    case errc::odd_q: return "OddQ";
    case errc::not_skew: return "NotSkew";
    case errc::not_unimodular: return "NotUnimodular";
    case errc::odd_dimension: return "OddDimension";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

validation_error::validation_error(errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

internal_error::internal_error(const std::string& message)
    : std::logic_error("internal invariant violated: " + message) {}

void require(bool condition, errc code, const std::string& message) {
  if (!condition) throw validation_error(code, message);
}

void ensure(bool condition, const std::string& message) {
  if (!condition) throw internal_error(message);
}

}  // namespace adapted
