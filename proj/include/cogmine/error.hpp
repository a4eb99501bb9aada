#pragma once

#include <stdexcept>
#include <string>

namespace cogmine {

// Failure categories surfaced by the library. The CLI maps these onto its
// exit-code classes (config / input / empty-data).
enum class Errc {
  UnknownRelation,
  ParseError,
  ValidationError,
  NotFound,
  Ambiguous,
  UnknownUnit,
  SameUnit,
  EmptySubmap,
  OutOfRange,
  TooManyComponents,
  InvalidCodeword,
  NonMonotonePattern,
  EmptyDatabase,
  InvalidMinsup,
  InstanceTooLarge,
  EmptySubmapFixture,
  FormatError,
  ConfigError,
  IoError,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::UnknownRelation: return "UnknownRelation";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::NotFound: return "NotFound";
    case Errc::Ambiguous: return "Ambiguous";
    case Errc::UnknownUnit: return "UnknownUnit";
    case Errc::SameUnit: return "SameUnit";
    case Errc::EmptySubmap: return "EmptySubmap";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::TooManyComponents: return "TooManyComponents";
    case Errc::InvalidCodeword: return "InvalidCodeword";
    case Errc::NonMonotonePattern: return "NonMonotonePattern";
    case Errc::EmptyDatabase: return "EmptyDatabase";
    case Errc::InvalidMinsup: return "InvalidMinsup";
    case Errc::InstanceTooLarge: return "InstanceTooLarge";
    case Errc::EmptySubmapFixture: return "EmptySubmapFixture";
    case Errc::FormatError: return "FormatError";
    case Errc::ConfigError: return "ConfigError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cogmine
