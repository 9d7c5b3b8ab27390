#pragma once

#include <stdexcept>
#include <string>

namespace hypdef {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class JetOrderError : public Error {
 public:
  using Error::Error;
};

class BasepointMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class SingularFlow : public Error {
 public:
  using Error::Error;
};

class DegenerateJet : public Error {
 public:
  using Error::Error;
};

class BranchError : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  PreconditionFailed(const std::string& msg, double violation)
      : Error(msg + " (max violation " + std::to_string(violation) + ")"),
        violation_(violation) {}
  double violation() const { return violation_; }

 private:
  double violation_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypdef
