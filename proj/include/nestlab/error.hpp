#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nestlab {

enum class Errc {
  EmptyComposition,
  NonPositiveRank,
  PositionOutOfRange,
  InvalidPisom,
  NotInAlgebra,
  AmbientMismatch,
  NotMonotone,
  CapacityExceeded,
  EmptySummandList,
  RelationViolation,
  NotInCodomainAlgebra,
  IrregularImage,
  NotInDomain,
  DomainMismatch,
  NotT2Degenerate,
  InconsistentColumns,
  NoLocRealization,
  MarginMismatch,
  NotStaircase,
  NotStrictlyMonotone,
  CornerMissing,
  DegenerateInput,
  NotTriangularDomain,
  NotOrderPreserving,
  ChainMismatch,
  StageOutOfRange,
  SyntaxError,
  UnknownReference,
  DuplicateName,
  InvariantViolation,
  UnknownCommand,
  MissingArgument,
};

constexpr std::string_view errc_name(Errc e) noexcept {
  switch (e) {
    case Errc::EmptyComposition: return "EmptyComposition";
    case Errc::NonPositiveRank: return "NonPositiveRank";
    case Errc::PositionOutOfRange: return "PositionOutOfRange";
    case Errc::InvalidPisom: return "InvalidPisom";
    case Errc::NotInAlgebra: return "NotInAlgebra";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::NotMonotone: return "NotMonotone";
    case Errc::CapacityExceeded: return "CapacityExceeded";
    case Errc::EmptySummandList: return "EmptySummandList";
    case Errc::RelationViolation: return "RelationViolation";
    case Errc::NotInCodomainAlgebra: return "NotInCodomainAlgebra";
    case Errc::IrregularImage: return "IrregularImage";
    case Errc::NotInDomain: return "NotInDomain";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::NotT2Degenerate: return "NotT2Degenerate";
    case Errc::InconsistentColumns: return "InconsistentColumns";
    case Errc::NoLocRealization: return "NoLocRealization";
    case Errc::MarginMismatch: return "MarginMismatch";
    case Errc::NotStaircase: return "NotStaircase";
    case Errc::NotStrictlyMonotone: return "NotStrictlyMonotone";
    case Errc::CornerMissing: return "CornerMissing";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::NotTriangularDomain: return "NotTriangularDomain";
    case Errc::NotOrderPreserving: return "NotOrderPreserving";
    case Errc::ChainMismatch: return "ChainMismatch";
    case Errc::StageOutOfRange: return "StageOutOfRange";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownReference: return "UnknownReference";
    case Errc::DuplicateName: return "DuplicateName";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::UnknownCommand: return "UnknownCommand";
    case Errc::MissingArgument: return "MissingArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace nestlab
