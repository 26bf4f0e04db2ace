#include "qmod/error.hpp"

namespace qmod {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownArrow: return "UnknownArrow";
    case ErrorCode::NonComposable: return "NonComposable";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::CyclicQuiver: return "CyclicQuiver";
    case ErrorCode::NotGentle: return "NotGentle";
    case ErrorCode::NotString: return "NotString";
    case ErrorCode::NoExactColoring: return "NoExactColoring";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::UnsupportedClass: return "UnsupportedClass";
    case ErrorCode::InconsistentRanks: return "InconsistentRanks";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::SplitFailure: return "SplitFailure";
    case ErrorCode::OracleScaleExceeded: return "OracleScaleExceeded";
    case ErrorCode::NotSemistable: return "NotSemistable";
    case ErrorCode::NotStable: return "NotStable";
    case ErrorCode::NotSubmodule: return "NotSubmodule";
    case ErrorCode::NotCanonicalForm: return "NotCanonicalForm";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::UnknownCatalogEntry: return "UnknownCatalogEntry";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace qmod
