#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pqs {

enum class ErrorKind {
  MalformedCycle,
  OutOfRange,
  Parse,
  GroupTooLarge,
  UnknownPreset,
  NonCoprime,
  InfeasibleSignature,
  InvalidSystem,
  InvalidDatum,
  OrbitExplosion,
  AutomorphismSearchTooLarge,
  AlgorithmInvariant,
  InternalInconsistency,
  NumericalFailure,
  Usage,
  Io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure carrying the 1-based character position of the offending
/// input character.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t position, const std::string& what)
      : Error(kind, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pqs
