#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lightcone {

enum class Errc {
  RemovedLine,        // the deleted lightlike line of the half-space chart
  PoleEncountered,    // division by (numerically) zero
  BranchPoint,        // log/sqrt at zero
  CriticalPoint,      // vanishing derivative of holomorphic data
  DomainBoundary,     // evaluation outside a declared domain
  NonPositiveTau,     // graph function not positive at the sample
  NotConformal,       // immersion fails the conformality pre-check
  NotZmc,             // mean curvature not (numerically) zero
  PathDependence,     // nonzero loop integral on a non-simply-connected field
  InvalidH,           // mean curvature with the wrong sign for the requested family
  UnitModulus,        // |g| = 1 obstruction for positive mean curvature
  NotUmbilic,         // nonvanishing Schwarzian where a Moebius map is required
  EmptySection,       // hyperplane section meets no point of the chart
  SyntaxError,        // malformed expression source
  UnknownIdentifier,  // identifier outside the expression grammar
  InvalidDeterminant, // matrix action with det != 1
  NotRealValued,      // real-mode expression produced a complex value
  InvalidArgument,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message, std::size_t offset = npos)
      : std::runtime_error(std::move(message)), code_(code), offset_(offset) {}

  Errc code() const { return code_; }

  // Byte offset into the expression source, when the error came from parsing
  // or evaluation of an expression; npos otherwise.
  std::size_t offset() const { return offset_; }
  bool has_offset() const { return offset_ != npos; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  Errc code_;
  std::size_t offset_;
};

[[noreturn]] inline void raise(Errc code, std::string message,
                               std::size_t offset = Error::npos) {
  throw Error(code, std::move(message), offset);
}

}  // namespace lightcone
