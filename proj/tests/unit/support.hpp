#pragma once

#include <doctest.h>

#include <functional>

#include "cherednik/error.hpp"

inline cherednik::ErrorCode error_code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const cherednik::Error& e) {
    return e.code();
  }
  FAIL("expected a cherednik::Error");
  return cherednik::ErrorCode::ParseError;
}

#define CHECK_ERROR(expr, code) CHECK(error_code_of([&] { (void)(expr); }) == cherednik::ErrorCode::code)
