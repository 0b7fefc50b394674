#include "trilin/error.hpp"

namespace trilin {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NonPositiveSide: return "NonPositiveSide";
    case Errc::TriangleInequalityViolated: return "TriangleInequalityViolated";
    case Errc::CollinearVertices: return "CollinearVertices";
    case Errc::PointAtInfinity: return "PointAtInfinity";
    case Errc::ZeroCoordinate: return "ZeroCoordinate";
    case Errc::UnknownCenter: return "UnknownCenter";
    case Errc::VertexUndefined: return "VertexUndefined";
    case Errc::InvalidWeights: return "InvalidWeights";
    case Errc::SumNotZero: return "SumNotZero";
    case Errc::ZeroScale: return "ZeroScale";
    case Errc::SingularSystem: return "SingularSystem";
    case Errc::NoBound: return "NoBound";
    case Errc::IoFailure: return "IoFailure";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

}  // namespace trilin
