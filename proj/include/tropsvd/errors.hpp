#ifndef TROPSVD_ERRORS_HPP
#define TROPSVD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropsvd {

// Two broad families, matching the CLI exit-code contract:
// InputError -> exit 1 (bad data or preconditions violated by the caller),
// NumericError -> exit 2 (the computation itself could not be completed).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& msg) : Error(msg) {}
};

class NumericError : public Error {
 public:
  explicit NumericError(const std::string& msg) : Error(msg) {}
};

class OrdOfZero : public InputError {
 public:
  OrdOfZero() : InputError("ord of the zero series is undefined") {}
  explicit OrdOfZero(int component)
      : InputError("ord of the zero series is undefined (component " +
                    std::to_string(component) + ")"),
        component_(component) {}
  int component() const { return component_; }

 private:
  int component_ = -1;
};

class DivisionByZeroSeries : public InputError {
 public:
  DivisionByZeroSeries() : InputError("division by the zero series") {}
};

// All retained coefficients cancelled; the result can be certified neither
// nonzero nor zero, so its valuation is unknown.
class PrecisionExhausted : public NumericError {
 public:
  PrecisionExhausted()
      : NumericError(
            "cancellation consumed the entire known coefficient window") {}
};

class SingularInput : public InputError {
 public:
  explicit SingularInput(const std::string& msg = "matrix is singular")
      : InputError(msg) {}
};

class NotHermitian : public InputError {
 public:
  NotHermitian() : InputError("matrix is not Hermitian") {}
};

class NoConvergence : public NumericError {
 public:
  explicit NoConvergence(int sweeps)
      : NumericError("Jacobi iteration did not converge within " +
                     std::to_string(sweeps) + " sweeps") {}
};

class ZeroVector : public InputError {
 public:
  ZeroVector() : InputError("vector must be nonzero") {}
};

class ZeroSingularValue : public NumericError {
 public:
  explicit ZeroSingularValue(int index)
      : NumericError("singular value " + std::to_string(index + 1) +
                     " is exactly zero; its log is undefined"),
        index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

class NotUnit : public InputError {
 public:
  NotUnit()
      : InputError("matrix is not a unit over the power-series ring "
                    "(ord of its determinant is nonzero)") {}
};

class ZeroCoordinate : public InputError {
 public:
  explicit ZeroCoordinate(int component)
      : InputError("coordinate " + std::to_string(component + 1) +
                    " is zero; the log map is undefined"),
        component_(component) {}
  int component() const { return component_; }

 private:
  int component_;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& msg, std::size_t offset)
      : InputError(msg + " (byte " + std::to_string(offset) + ")"),
        raw_(msg),
        offset_(offset) {}
  const std::string& rawMessage() const { return raw_; }
  std::size_t offset() const { return offset_; }

 private:
  std::string raw_;
  std::size_t offset_;
};

class RamificationMismatch : public InputError {
 public:
  RamificationMismatch(long denominator, int ramification)
      : InputError("exponent denominator " + std::to_string(denominator) +
                    " does not divide the ramification index " +
                    std::to_string(ramification)) {}
};

class EmptyInput : public InputError {
 public:
  EmptyInput() : InputError("empty series expression") {}
};

class ShapeMismatch : public InputError {
 public:
  explicit ShapeMismatch(const std::string& msg) : InputError(msg) {}
};

}  // namespace tropsvd

#endif  // TROPSVD_ERRORS_HPP
