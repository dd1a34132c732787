#include "pqs/error.hpp"

namespace pqs {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedCycle: return "malformed-cycle";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::GroupTooLarge: return "group-too-large";
    case ErrorKind::UnknownPreset: return "catalog";
    case ErrorKind::NonCoprime: return "non-coprime";
    case ErrorKind::InfeasibleSignature: return "infeasible-signature";
    case ErrorKind::InvalidSystem: return "invalid-system";
    case ErrorKind::InvalidDatum: return "invalid-datum";
    case ErrorKind::OrbitExplosion: return "orbit-explosion";
    case ErrorKind::AutomorphismSearchTooLarge: return "automorphism-search-too-large";
    case ErrorKind::AlgorithmInvariant: return "algorithm-invariant";
    case ErrorKind::InternalInconsistency: return "internal-inconsistency";
    case ErrorKind::NumericalFailure: return "numerical-failure";
    case ErrorKind::Usage: return "usage";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

}  // namespace pqs
