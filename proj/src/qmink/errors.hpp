#pragma once

#include <stdexcept>
#include <string>

namespace qmink {

// Every error raised by the engine derives from Error so the C boundary can
// translate it with a single catch.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

class ConstraintError : public Error {
public:
  using Error::Error;
};

class UnknownInstance : public Error {
public:
  using Error::Error;
};

class DegreeError : public Error {
public:
  using Error::Error;
};

class ShapeError : public Error {
public:
  using Error::Error;
};

class CalculusObstruction : public Error {
public:
  using Error::Error;
};

class NotCotriangular : public Error {
public:
  using Error::Error;
};

} // namespace qmink
