#pragma once

#include <stdexcept>
#include <string>

namespace kmdk {

enum class Errc {
  MalformedFile,
  NotAGCM,
  IndexOutOfRange,
  ResourceExceeded,
  NotMinimalLeft,
  NotMinimal,
  NotDominant,
  NotAffine,
  NotProper,
  NotFiniteType,
  NotDominantForLevi,
  DivisionRemainder,
  NotNonFinite,
  NotCompactOrExtendedType,
  NotExtendedType,
  WrongType,
  HypothesisViolated,
  FunctorialityViolation,
  ConeReductionFailed,
  Overflow,
  UsageError,
};

constexpr const char *errc_name(Errc e) {
  switch (e) {
  case Errc::MalformedFile: return "MalformedFile";
  case Errc::NotAGCM: return "NotAGCM";
  case Errc::IndexOutOfRange: return "IndexOutOfRange";
  case Errc::ResourceExceeded: return "ResourceExceeded";
  case Errc::NotMinimalLeft: return "NotMinimalLeft";
  case Errc::NotMinimal: return "NotMinimal";
  case Errc::NotDominant: return "NotDominant";
  case Errc::NotAffine: return "NotAffine";
  case Errc::NotProper: return "NotProper";
  case Errc::NotFiniteType: return "NotFiniteType";
  case Errc::NotDominantForLevi: return "NotDominantForLevi";
  case Errc::DivisionRemainder: return "DivisionRemainder";
  case Errc::NotNonFinite: return "NotNonFinite";
  case Errc::NotCompactOrExtendedType: return "NotCompactOrExtendedType";
  case Errc::NotExtendedType: return "NotExtendedType";
  case Errc::WrongType: return "WrongType";
  case Errc::HypothesisViolated: return "HypothesisViolated";
  case Errc::FunctorialityViolation: return "FunctorialityViolation";
  case Errc::ConeReductionFailed: return "ConeReductionFailed";
  case Errc::Overflow: return "Overflow";
  case Errc::UsageError: return "UsageError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &msg)
      : std::runtime_error(msg), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string &msg) {
  throw Error(code, msg);
}

} // namespace kmdk
