#include "tileforge/error.hpp"

namespace tileforge {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyDomain: return "empty-domain";
    case ErrorCode::DuplicateCell: return "duplicate-cell";
    case ErrorCode::Disconnected: return "disconnected";
    case ErrorCode::NotSimplyConnected: return "not-simply-connected";
    case ErrorCode::InvalidSize: return "invalid-size";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::InconsistentBoundary: return "inconsistent-boundary";
    case ErrorCode::InvalidTiling: return "invalid-tiling";
    case ErrorCode::InvalidHeight: return "invalid-height";
    case ErrorCode::Untileable: return "untileable";
    case ErrorCode::Infeasible: return "infeasible";
    case ErrorCode::DomainMismatch: return "domain-mismatch";
    case ErrorCode::NotFlippable: return "not-flippable";
    case ErrorCode::NonIntegral: return "non-integral";
    case ErrorCode::InvalidWord: return "invalid-word";
    case ErrorCode::IndexMismatch: return "index-mismatch";
    case ErrorCode::InvalidNumbering: return "invalid-numbering";
    case ErrorCode::NotComparable: return "not-comparable";
    case ErrorCode::UnknownWord: return "unknown-word";
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::UnsupportedFormat: return "unsupported-format";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace tileforge
