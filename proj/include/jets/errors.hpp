#pragma once

#include <stdexcept>

namespace jets {

/// A (N, k, d, side) combination outside what an operation covers.
class UnsupportedCase : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Two computations that must agree did not; signals a bug, not bad input.
class InternalInconsistency : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace jets
