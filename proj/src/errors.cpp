#include "gcorr/errors.hpp"

namespace gcorr {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Input: return "InputError";
    case ErrorKind::NotAnEndomorphism: return "NotAnEndomorphism";
    case ErrorKind::InconsistentMultiplicity: return "InconsistentMultiplicity";
    case ErrorKind::ReconstructionFailure: return "ReconstructionFailure";
    case ErrorKind::VertexMismatch: return "VertexMismatch";
    case ErrorKind::AdMismatch: return "AdMismatch";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::NotConjugate: return "NotConjugate";
    case ErrorKind::BoundsInfeasible: return "BoundsInfeasible";
  }
  return "Unknown";
}

}  // namespace gcorr
