#pragma once

#include <stdexcept>
#include <string>

namespace gustsurf {

// Error taxonomy shared by every module.  `kind` drives the CLI exit code
// (validation/io -> 2, numerical -> 3); `error_class` is the stable
// machine-readable name printed on stderr.
enum class ErrorKind { validation, numerical, io };

class Error : public std::runtime_error {
public:
  Error(std::string error_class, ErrorKind kind, const std::string& message)
      : std::runtime_error(message), class_(std::move(error_class)), kind_(kind) {}

  const std::string& error_class() const noexcept { return class_; }
  ErrorKind kind() const noexcept { return kind_; }

private:
  std::string class_;
  ErrorKind kind_;
};

#define GUSTSURF_ERROR_TYPE(Name, Kind)                                        \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string& message)                                  \
        : Error(#Name, ErrorKind::Kind, message) {}                            \
  }

GUSTSURF_ERROR_TYPE(InvalidArgument, validation);
GUSTSURF_ERROR_TYPE(DomainError, validation);
GUSTSURF_ERROR_TYPE(DimensionMismatch, validation);
GUSTSURF_ERROR_TYPE(RankDeficient, numerical);
GUSTSURF_ERROR_TYPE(TooFewSamples, validation);
GUSTSURF_ERROR_TYPE(NegativeTime, validation);
GUSTSURF_ERROR_TYPE(StepTooLarge, validation);
GUSTSURF_ERROR_TYPE(UnstableModel, numerical);
GUSTSURF_ERROR_TYPE(EmptyHistory, validation);
GUSTSURF_ERROR_TYPE(InvalidRange, validation);
GUSTSURF_ERROR_TYPE(DegenerateColumn, validation);
GUSTSURF_ERROR_TYPE(TooFewPoints, validation);
GUSTSURF_ERROR_TYPE(DegreesOfFreedomExhausted, validation);
GUSTSURF_ERROR_TYPE(StationMismatch, validation);
GUSTSURF_ERROR_TYPE(ZeroReference, validation);
GUSTSURF_ERROR_TYPE(IoError, io);
GUSTSURF_ERROR_TYPE(ParseError, io);

#undef GUSTSURF_ERROR_TYPE

}  // namespace gustsurf
