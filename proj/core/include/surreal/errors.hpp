#pragma once

#include <stdexcept>
#include <string>

namespace surreal {

enum class errc {
  depth_exceeded,
  division_by_zero,
  undefined,
  resource_limit,
  zero_inverse,
  empty_set,
  zero_input,
  equal_inputs,
  not_representable,
  unsupported_rep,
  transfinite_unsupported,
  not_a_chain,
  not_a_number,
  empty_interval_violation,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::depth_exceeded: return "DepthExceeded";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::undefined: return "Undefined";
    case errc::resource_limit: return "ResourceLimit";
    case errc::zero_inverse: return "ZeroInverse";
    case errc::empty_set: return "EmptySet";
    case errc::zero_input: return "ZeroInput";
    case errc::equal_inputs: return "EqualInputs";
    case errc::not_representable: return "NotRepresentable";
    case errc::unsupported_rep: return "UnsupportedRep";
    case errc::transfinite_unsupported: return "TransfiniteUnsupported";
    case errc::not_a_chain: return "NotAChain";
    case errc::not_a_number: return "NotANumber";
    case errc::empty_interval_violation: return "EmptyIntervalViolation";
  }
  return "Unknown";
}

class domain_error : public std::runtime_error {
 public:
  domain_error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
  throw domain_error(code, std::string(errc_name(code)) + ": " + what);
}

// Thrown by the literal parsers; pos is a byte offset into the parsed text.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t pos, const std::string& what)
      : std::runtime_error(what), pos_(pos) {}
  std::size_t pos() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace surreal
