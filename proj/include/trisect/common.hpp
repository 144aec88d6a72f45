#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trisect {

/// Arbitrary-precision integer used for every homological quantity.
using Integer = mpz_class;

enum class ErrorKind {
  InvalidInput,
  ViolatedD,
  ViolatedLagrangian,
  NotPrimitive,
  MissingAnnotation,
  MissingGeometry,
  NotGood,
  NoNegativeSubarc,
  BadEdge,
  BadJunction,
  BadSegment,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Loop-validation failure naming the first violation found.
class LoopError : public Error {
 public:
  // `where` is the edge step for BadEdge, otherwise a junction or subgraph name.
  LoopError(ErrorKind kind, std::string where, const std::string& what)
      : Error(kind, what), where_(std::move(where)) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

Integer parse_integer(std::string_view text);

}  // namespace trisect
