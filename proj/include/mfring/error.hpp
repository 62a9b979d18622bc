#pragma once

#include <stdexcept>
#include <string>

namespace mfring {

enum class Errc {
  ConductorMismatch,
  ContextMismatch,
  DivisionByZero,
  NotInSpan,
  BadLeadingShape,
  InvalidOrder,
  GroupMismatch,
  ImprimitiveCharacter,
  ParityViolation,
  BadWeight,
  NotPositiveDefinite,
  UnknownForm,
  UnknownIdentity,
  UnknownCase,
  UnknownGroup,
  OutOfTable,
  PrecisionTooLow,
  RelationsUnknown,
  QuasiModular,
  Parse,
  Catalog,
  InvalidArgument,
};

const char* errc_name(Errc code) noexcept;

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mfring
