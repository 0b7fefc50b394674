#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trilin {

enum class Errc {
  NonPositiveSide,
  TriangleInequalityViolated,
  CollinearVertices,
  PointAtInfinity,
  ZeroCoordinate,
  UnknownCenter,
  VertexUndefined,
  InvalidWeights,
  SumNotZero,
  ZeroScale,
  SingularSystem,
  NoBound,
  IoFailure,
  InvalidArgument,
  VerificationFailed,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace trilin
