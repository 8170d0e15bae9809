#pragma once

#include <stdexcept>
#include <string>

namespace gdm {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed mesh file; carries the offending line number in the message.
struct ParseError : Error {
  ParseError(const std::string& msg, int line)
      : Error("parse error at line " + std::to_string(line) + ": " + msg),
        line_number(line) {}
  int line_number;
};

/// Mesh data that parses but violates a geometric invariant.
struct GeometryError : Error {
  using Error::Error;
};

/// Operation requires a simplicial mesh.
struct NonSimplicialMesh : Error {
  using Error::Error;
};

struct InvalidGamma : Error {
  using Error::Error;
};

/// A DofVector was used with a gradient discretisation it does not belong to.
struct GdMismatch : Error {
  using Error::Error;
};

struct NewtonDivergence : Error {
  NewtonDivergence(const std::string& msg, double residual)
      : Error(msg), final_residual(residual) {}
  double final_residual;
};

struct LinearSolveFailure : Error {
  using Error::Error;
};

struct PointOutsideDomain : Error {
  using Error::Error;
};

struct BoundaryFluxNonzero : Error {
  using Error::Error;
};

struct TrajectoryLeftDomain : Error {
  using Error::Error;
};

}  // namespace gdm
