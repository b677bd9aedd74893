#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spinnet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidSpin : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IncompatibleRadicands : public Error {
 public:
  using Error::Error;
};

class InvalidTriads : public Error {
 public:
  using Error::Error;
};

/// (-1)^n requested with a half-integer n.
class PhaseParityError : public Error {
 public:
  using Error::Error;
};

class NegativeSpinAfterTransform : public Error {
 public:
  using Error::Error;
};

class UnrealizableQuadrangle : public Error {
 public:
  using Error::Error;
};

class InvalidInstance : public Error {
 public:
  using Error::Error;
};

class MalformedStructure : public Error {
 public:
  using Error::Error;
};

class MalformedLabels : public Error {
 public:
  using Error::Error;
};

class LabelTransferMismatch : public Error {
 public:
  using Error::Error;
};

class CeilingExceeded : public Error {
 public:
  using Error::Error;
};

/// One or more point triads of a spin labeling fail the triangle rule.
/// `violations()` lists a human-readable entry per failing point.
class TriadViolation : public Error {
 public:
  explicit TriadViolation(std::vector<std::string> violations)
      : Error(join(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string msg = "triad violation at ";
    for (std::size_t i = 0; i < v.size(); ++i) msg += (i ? "; " : "") + v[i];
    return msg;
  }

  std::vector<std::string> violations_;
};

}  // namespace spinnet
