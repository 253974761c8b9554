#include "equichar/error.hpp"

namespace equichar {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Validation: return "Validation";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorKind::NotAnOrbitSum: return "NotAnOrbitSum";
    case ErrorKind::InconsistentTData: return "InconsistentTData";
    case ErrorKind::InvalidJump: return "InvalidJump";
    case ErrorKind::InvalidCover: return "InvalidCover";
    case ErrorKind::EtaleUnsupported: return "EtaleUnsupported";
    case ErrorKind::RelationCheckFailed: return "RelationCheckFailed";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace equichar
