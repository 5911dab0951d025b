#include "schubert/error.hpp"

namespace schubert {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::DiagonalNotTwo: return "DiagonalNotTwo";
    case ErrorKind::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case ErrorKind::ZeroAsymmetry: return "ZeroAsymmetry";
    case ErrorKind::EmptyIndexSet: return "EmptyIndexSet";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::MixedContexts: return "MixedContexts";
    case ErrorKind::LengthCapExceeded: return "LengthCapExceeded";
    case ErrorKind::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorKind::NotInSupport: return "NotInSupport";
    case ErrorKind::NotACover: return "NotACover";
    case ErrorKind::NotFullySupported: return "NotFullySupported";
    case ErrorKind::NotInInterval: return "NotInInterval";
    case ErrorKind::InvalidWitness: return "InvalidWitness";
    case ErrorKind::MalformedOracle: return "MalformedOracle";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorKind kind, const std::vector<std::string>& labels, const std::string& detail) {
  std::string msg(to_string(kind));
  if (!labels.empty()) {
    msg += '(';
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i) msg += ',';
      msg += labels[i];
    }
    msg += ')';
  }
  if (!detail.empty()) {
    msg += ": ";
    msg += detail;
  }
  return msg;
}

}  // namespace

Error::Error(ErrorKind kind, std::vector<std::string> labels, const std::string& detail)
    : std::runtime_error(format_message(kind, labels, detail)), kind_(kind), labels_(std::move(labels)) {}

}  // namespace schubert
