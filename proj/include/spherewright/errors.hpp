#pragma once

#include <stdexcept>
#include <string>

namespace spherewright {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MixedDimensionsError : Error {
  using Error::Error;
};

struct FaceNotInComplexError : Error {
  using Error::Error;
};

struct WrongDimensionError : Error {
  using Error::Error;
};

struct GroundSetTooSmallError : Error {
  using Error::Error;
};

struct InvalidNError : Error {
  using Error::Error;
};

struct OutOfRangeError : Error {
  using Error::Error;
};

struct ApexCollisionError : Error {
  using Error::Error;
};

struct InvalidSiteError : Error {
  using Error::Error;
};

struct SiteRejectedError : Error {
  int a;
  int u;
  SiteRejectedError(int a_, int u_, const std::string& why)
      : Error("site (" + std::to_string(a_) + "," + std::to_string(u_) + ") rejected: " + why),
        a(a_),
        u(u_) {}
};

struct MaskLengthMismatchError : Error {
  using Error::Error;
};

struct TooLargeError : Error {
  using Error::Error;
};

struct LimitExceededError : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  int column;
  ParseError(const std::string& what, int line_ = 0, int column_ = 0)
      : Error("parse error at line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ": " + what),
        line(line_),
        column(column_) {}
};

}  // namespace spherewright
