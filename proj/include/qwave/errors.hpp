#ifndef QWAVE_ERRORS_HPP
#define QWAVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qwave {

enum class ErrorCode {
  InvalidArgument = 1,
  NotOnLocus,
  NoUndercompressive,
  DegenerateAxis,
  NoConnection,
  NotAShock,
  NotASaddle,
  NotEquilibrium,
  DegenerateEquilibrium,
  NotFound,
  NoSolution,
  BlowUp,
  Io,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qwave

#endif  // QWAVE_ERRORS_HPP
