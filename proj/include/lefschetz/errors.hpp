#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lefschetz {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A complex failed one of its construction-time invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DuplicateCellId : public ValidationError {
 public:
  explicit DuplicateCellId(const std::string& id)
      : ValidationError("duplicate cell id: " + id), id_(id) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class UnknownCellReference : public ValidationError {
 public:
  explicit UnknownCellReference(const std::string& id)
      : ValidationError("unknown cell: " + id), id_(id) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

/// kappa(x, y) is nonzero although dim x != dim y + 1.
class GradingViolation : public ValidationError {
 public:
  GradingViolation(const std::string& x, const std::string& y)
      : ValidationError("grading violated by kappa(" + x + ", " + y +
                        "): dimensions must differ by exactly one"),
        x_(x),
        y_(y) {}
  const std::string& x() const noexcept { return x_; }
  const std::string& y() const noexcept { return y_; }

 private:
  std::string x_, y_;
};

/// sum_y kappa(x, y) kappa(y, z) != 0 for the reported pair.
class KappaConditionViolation : public ValidationError {
 public:
  KappaConditionViolation(const std::string& x, const std::string& z,
                          const std::string& sum)
      : ValidationError("kappa condition violated at (" + x + ", " + z +
                        "): sum_y kappa(x,y) kappa(y,z) = " + sum),
        x_(x),
        z_(z) {}
  const std::string& x() const noexcept { return x_; }
  const std::string& z() const noexcept { return z_; }

 private:
  std::string x_, z_;
};

class NotLocallyClosed : public Error {
 public:
  NotLocallyClosed() : Error("cell set is not locally closed") {}
};

class NotClosed : public Error {
 public:
  NotClosed() : Error("cell set is not closed") {}
};

/// Operation needs field coefficients (Q or Z/p).
class NonFieldRing : public Error {
 public:
  explicit NonFieldRing(const std::string& op)
      : Error(op + " requires a field coefficient ring (Q or Zp)") {}
};

class TooManyClosedSets : public Error {
 public:
  explicit TooManyClosedSets(std::size_t cap)
      : Error("more than " + std::to_string(cap) + " closed sets"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class TooManySimplices : public Error {
 public:
  explicit TooManySimplices(std::size_t cap)
      : Error("order complex exceeds " + std::to_string(cap) + " simplices"),
        cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// Malformed input text; carries the 1-based line number.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UnsupportedRing : public Error {
 public:
  explicit UnsupportedRing(const std::string& what)
      : Error("unsupported ring: " + what) {}
};

class EmptyInput : public Error {
 public:
  EmptyInput() : Error("empty input") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class MalformedInterval : public Error {
 public:
  using Error::Error;
};

}  // namespace lefschetz
