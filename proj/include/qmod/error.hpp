#pragma once

#include <stdexcept>
#include <string>

namespace qmod {

enum class ErrorCode {
  Malformed,
  UnknownVertex,
  UnknownArrow,
  NonComposable,
  DuplicateId,
  CyclicQuiver,
  NotGentle,
  NotString,
  NoExactColoring,
  SearchExhausted,
  UnsupportedClass,
  InconsistentRanks,
  FieldTooSmall,
  FieldMismatch,
  SplitFailure,
  OracleScaleExceeded,
  NotSemistable,
  NotStable,
  NotSubmodule,
  NotCanonicalForm,
  Inconsistent,
  UnknownCatalogEntry,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qmod
