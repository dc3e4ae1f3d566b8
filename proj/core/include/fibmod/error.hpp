#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fibmod {

enum class Errc {
  DescriptorMismatch,   // operands live in different rings
  InvalidArgument,      // out-of-range index, bad length, malformed descriptor
  NotInvertible,        // a required unit is not a unit
  NotInvertibleCoefficient,
  TwoNotInvertible,
  HypothesisViolated,
  SpecMismatch,
  AmbiguousAtBound,
  Schema,               // malformed JSON / spec file
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace fibmod
