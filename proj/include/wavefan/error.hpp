#pragma once

#include <stdexcept>
#include <string>

namespace wavefan {

// Base for every error raised by the library. The CLI maps these to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class UnsupportedFlux : public Error {
 public:
  using Error::Error;
};

class LinearSolverError : public Error {
 public:
  using Error::Error;
};

class IntegrationError : public Error {
 public:
  using Error::Error;
};

class CoverageError : public Error {
 public:
  using Error::Error;
};

class DegenerateProfile : public Error {
 public:
  using Error::Error;
};

class InconclusiveProbe : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace wavefan
