#include "mfring/error.hpp"

namespace mfring {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ConductorMismatch: return "ConductorMismatch";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotInSpan: return "NotInSpan";
    case Errc::BadLeadingShape: return "BadLeadingShape";
    case Errc::InvalidOrder: return "InvalidOrder";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::ImprimitiveCharacter: return "ImprimitiveCharacter";
    case Errc::ParityViolation: return "ParityViolation";
    case Errc::BadWeight: return "BadWeight";
    case Errc::NotPositiveDefinite: return "NotPositiveDefinite";
    case Errc::UnknownForm: return "UnknownForm";
    case Errc::UnknownIdentity: return "UnknownIdentity";
    case Errc::UnknownCase: return "UnknownCase";
    case Errc::UnknownGroup: return "UnknownGroup";
    case Errc::OutOfTable: return "OutOfTable";
    case Errc::PrecisionTooLow: return "PrecisionTooLow";
    case Errc::RelationsUnknown: return "RelationsUnknown";
    case Errc::QuasiModular: return "QuasiModular";
    case Errc::Parse: return "Parse";
    case Errc::Catalog: return "Catalog";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace mfring
