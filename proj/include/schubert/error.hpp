#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

/// Every failure raised by the library carries one of these kinds, plus the
/// labels of the generators (or ids) it concerns.
enum class ErrorKind {
  NonSquare,
  DiagonalNotTwo,
  PositiveOffDiagonal,
  ZeroAsymmetry,
  EmptyIndexSet,
  DuplicateLabel,
  UnknownLabel,
  TooLarge,
  MixedContexts,
  LengthCapExceeded,
  EnumerationCapExceeded,
  NotInSupport,
  NotACover,
  NotFullySupported,
  NotInInterval,
  InvalidWitness,
  MalformedOracle,
  Overflow,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::vector<std::string> labels, const std::string& detail = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> labels_;
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, {}, "integer addition overflow");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, {}, "integer subtraction overflow");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, {}, "integer multiplication overflow");
  return r;
}

// a - b * c
inline std::int64_t sub_mul(std::int64_t a, std::int64_t b, std::int64_t c) { return sub(a, mul(b, c)); }

}  // namespace checked

}  // namespace schubert
