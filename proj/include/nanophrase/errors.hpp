// Copyright (c) 2026 The nanophrase Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace nanophrase {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parsing and construction.
struct SyntaxError : Error {
  explicit SyntaxError(const std::string& what, std::size_t pos = std::string::npos)
      : Error(pos == std::string::npos ? what : what + " (at offset " + std::to_string(pos) + ")"),
        pos(pos) {}
  std::size_t pos;
};
struct NonGaussError : Error {
  using Error::Error;
};
struct UnknownSymbolError : Error {
  using Error::Error;
};

// Domain preconditions, named after the operation contracts.
struct IndexOutOfRangeError : Error {
  using Error::Error;
};
struct FactorOutOfRangeError : Error {
  using Error::Error;
};
struct EmptyAlphaError : Error {
  using Error::Error;
};
struct SNotEmptyError : Error {
  using Error::Error;
};
struct SNotDiagonalError : Error {
  using Error::Error;
};
struct StaleSiteError : Error {
  using Error::Error;
};
struct UnitFactorizationError : Error {
  using Error::Error;
};
struct PrimeTripleError : Error {
  using Error::Error;
};
struct SideConditionError : Error {
  using Error::Error;
};
struct ComponentNotEmptyError : Error {
  using Error::Error;
};
struct MixedTripleError : Error {
  using Error::Error;
};
struct MalformedSupportError : Error {
  using Error::Error;
};
struct BudgetRefusedError : Error {
  using Error::Error;
};

}  // namespace nanophrase
