#ifndef QC2_ERRORS_HPP
#define QC2_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qc2 {

enum class ErrorKind {
  NotPrime,
  NotIrreducible,
  CapExceeded,
  SpecMismatch,
  DivisionByZero,
  NotCoprime,
  BadCharacteristic,
  BasisMismatch,
  OverlapViolation,
  NotUnit,
  EquivalenceViolation,
  Parse,
  Io,
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind),
        detail_(std::move(detail)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, std::string detail) {
  throw Error(kind, std::move(detail));
}

}  // namespace qc2

#endif
