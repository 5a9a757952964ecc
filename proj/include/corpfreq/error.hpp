#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace corpfreq {

enum class ErrorKind {
  MissingHeaderKey,
  MalformedHeader,
  UnknownCityCode,
  UnknownFieldCode,
  YearOutOfWindow,
  EmptyBody,
  SampleSizeRejected,
  DuplicateSampleId,
  UnbalancedParenthesis,
  DanglingSicMarker,
  NotCanonical,
  InvalidTable,
  InvalidRule,
  EmptyCorpus,
  ArityMismatch,
  UnknownCategory,
  ConflictingDuplicate,
  EmptyReference,
  InvalidArgument,
  MalformedInput,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (and tests) can branch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace corpfreq
