#pragma once

#include <stdexcept>
#include <string>

namespace signpat {

enum class Errc {
  EmptyInput,
  IllegalCharacter,
  LeadingMinus,
  DegreeZero,
  InvalidRootSet,
  ZeroCoefficient,
  RatioCapExceeded,
  IncompatibleCounts,
  BadNormalization,
  DegreeTooLarge,
  InvalidRatio,
};

const char* errc_name(Errc code) noexcept;

// All library failures are reported through this type. `index()` carries the
// offending position for IllegalCharacter and the exponent for ZeroCoefficient,
// and is -1 otherwise.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, int index = -1)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        index_(index) {}

  Errc code() const noexcept { return code_; }
  int index() const noexcept { return index_; }

 private:
  Errc code_;
  int index_;
};

}  // namespace signpat
