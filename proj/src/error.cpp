#include "corpfreq/error.hpp"

namespace corpfreq {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MissingHeaderKey: return "MissingHeaderKey";
    case ErrorKind::MalformedHeader: return "MalformedHeader";
    case ErrorKind::UnknownCityCode: return "UnknownCityCode";
    case ErrorKind::UnknownFieldCode: return "UnknownFieldCode";
    case ErrorKind::YearOutOfWindow: return "YearOutOfWindow";
    case ErrorKind::EmptyBody: return "EmptyBody";
    case ErrorKind::SampleSizeRejected: return "SampleSizeRejected";
    case ErrorKind::DuplicateSampleId: return "DuplicateSampleId";
    case ErrorKind::UnbalancedParenthesis: return "UnbalancedParenthesis";
    case ErrorKind::DanglingSicMarker: return "DanglingSicMarker";
    case ErrorKind::NotCanonical: return "NotCanonical";
    case ErrorKind::InvalidTable: return "InvalidTable";
    case ErrorKind::InvalidRule: return "InvalidRule";
    case ErrorKind::EmptyCorpus: return "EmptyCorpus";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::UnknownCategory: return "UnknownCategory";
    case ErrorKind::ConflictingDuplicate: return "ConflictingDuplicate";
    case ErrorKind::EmptyReference: return "EmptyReference";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind) {}

}  // namespace corpfreq
