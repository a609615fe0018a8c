#pragma once

#include "nestlab/error.hpp"

namespace nestlab::testkit {

/// Error code thrown by `fn`, or InvariantViolation if it returns normally.
inline Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvariantViolation;
}

}  // namespace nestlab::testkit
