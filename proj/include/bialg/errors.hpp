#pragma once

#include <stdexcept>
#include <string>

namespace bialg {

/// Base class of all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class AntisymmetryViolation : public Error {
 public:
  AntisymmetryViolation(int i, int j, int k)
      : Error("structure constants break antisymmetry at (i=" + std::to_string(i) +
              ", j=" + std::to_string(j) + ", k=" + std::to_string(k) + ")"),
        i(i), j(j), k(k) {}
  int i, j, k;
};

class JacobiViolation : public Error {
 public:
  JacobiViolation(int i, int j, int l, const std::string& residual)
      : Error("Jacobi identity fails on basis triple (" + std::to_string(i) + "," +
              std::to_string(j) + "," + std::to_string(l) + "); residual " + residual),
        i(i), j(j), l(l) {}
  int i, j, l;
};

class GradingViolation : public Error {
 public:
  using Error::Error;
};

class NotARepresentation : public Error {
 public:
  NotARepresentation(int x, int y, const std::string& detail)
      : Error("action is not a Lie algebra homomorphism on generator pair (" +
              std::to_string(x) + "," + std::to_string(y) + "): " + detail),
        x(x), y(y) {}
  int x, y;
};

class UnsupportedDegree : public Error {
 public:
  using Error::Error;
};

class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

class DegreeUnderflow : public Error {
 public:
  using Error::Error;
};

class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

class NotGraded : public Error {
 public:
  using Error::Error;
};

class UnsupportedModule : public Error {
 public:
  using Error::Error;
};

class NotTriangular : public Error {
 public:
  using Error::Error;
};

class BadSignature : public Error {
 public:
  using Error::Error;
};

class NotTranslation : public Error {
 public:
  using Error::Error;
};

class WrongDimension : public Error {
 public:
  using Error::Error;
};

class InvalidMove : public Error {
 public:
  using Error::Error;
};

class WrongC : public Error {
 public:
  using Error::Error;
};

class UnknownEntry : public Error {
 public:
  using Error::Error;
};

class MissingParameter : public Error {
 public:
  using Error::Error;
};

class NotMixedBlock : public Error {
 public:
  using Error::Error;
};

}  // namespace bialg
