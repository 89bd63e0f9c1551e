#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thinposet {

enum class ErrorKind {
  InvalidInput,
  EmptyPoset,
  UnknownElement,
  CycleError,
  NotGraded,
  NotReduced,
  NotComparable,
  TooLarge,
  RankMismatch,
  MissingBounds,
  RankTooSmall,
  NotThin,
  IntervalTooLarge,
  NotTransitiveNoCleanWitness,
  NotDiamondTransitive,
  NoBottom,
  NotCentral,
  NotBalanced,
  NotEmbedding,
  DomainMismatch,
  ShapeMismatch,
  NotDegreePreserving,
  NotFunctorial,
  DSquaredNonzero,
  NaturalityViolated,
  ColoringIncompatible,
  NotUpperIdeal,
  MalformedPD,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::EmptyPoset: return "EmptyPoset";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::CycleError: return "CycleError";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::MissingBounds: return "MissingBounds";
    case ErrorKind::RankTooSmall: return "RankTooSmall";
    case ErrorKind::NotThin: return "NotThin";
    case ErrorKind::IntervalTooLarge: return "IntervalTooLarge";
    case ErrorKind::NotTransitiveNoCleanWitness: return "NotTransitiveNoCleanWitness";
    case ErrorKind::NotDiamondTransitive: return "NotDiamondTransitive";
    case ErrorKind::NoBottom: return "NoBottom";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::NotBalanced: return "NotBalanced";
    case ErrorKind::NotEmbedding: return "NotEmbedding";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotDegreePreserving: return "NotDegreePreserving";
    case ErrorKind::NotFunctorial: return "NotFunctorial";
    case ErrorKind::DSquaredNonzero: return "DSquaredNonzero";
    case ErrorKind::NaturalityViolated: return "NaturalityViolated";
    case ErrorKind::ColoringIncompatible: return "ColoringIncompatible";
    case ErrorKind::NotUpperIdeal: return "NotUpperIdeal";
    case ErrorKind::MalformedPD: return "MalformedPD";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace thinposet
