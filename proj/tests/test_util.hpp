#pragma once

#include "gtest/gtest.h"
#include "sqc/error.hpp"

// Code of the sqc::Error thrown by f; records a failure when nothing is thrown.
template <typename F>
sqc::ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const sqc::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return sqc::ErrorCode::IoError;
}
